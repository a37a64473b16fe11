"""Brute-force avoider enumeration, the ground truth for every other module.

Permutations are generated by prefix extension in lexicographic order.  A
prefix that already contains an occurrence is dropped together with all its
extensions: an occurrence inside a prefix survives any extension, so the cut
never changes the output.
"""

from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from typing import Iterable, Iterator, Optional, Sequence

from pogp import kernels
from pogp.pattern import Pogp, canonicalize
from pogp.perm import Permutation

__all__ = [
    "CountSeq", "MAX_N", "EnumerationLimitError", "max_n",
    "avoiders", "count_avoiders", "count_sequence", "witness_difference",
    "avoider_sets",
]

CountSeq = tuple[int, ...]
"""Exact counts a_0..a_N; a_n is n! times the x^n coefficient of an EGF."""

MAX_N = 10


class EnumerationLimitError(ValueError):
    pass


def max_n() -> int:
    """Exhaustive ceiling; ``POGP_MAX_N`` can lower it but never raise it."""
    env = os.environ.get("POGP_MAX_N")
    if env:
        try:
            return min(MAX_N, int(env))
        except ValueError:
            pass
    return MAX_N


def _check(n: int) -> None:
    if n < 0:
        raise ValueError("length must be nonnegative")
    limit = max_n()
    if n > limit:
        raise EnumerationLimitError(
            f"exhaustive enumeration is capped at n = {limit} (asked for {n})"
        )


def _prepare(pats: Iterable[Pogp]) -> list[tuple[tuple[int, ...], tuple[bool, ...]]]:
    # dedupe after canonicalization; order fixed so runs are reproducible
    unique = sorted({canonicalize(p) for p in pats}, key=lambda p: (p.letters, p.dashes))
    return [p._kernel() for p in unique]


def avoiders(pats: Iterable[Pogp], n: int) -> Iterator[Permutation]:
    """Yield Av(pats) in S_n in lexicographic order."""
    _check(n)
    prepared = _prepare(pats)
    vals = [0] * n
    used = [False] * (n + 1)

    def rec(d: int) -> Iterator[Permutation]:
        if d == n:
            yield Permutation(vals)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            vals[d] = v
            if any(kernels.occurs_ending_at(vals, d, l, a) for l, a in prepared):
                continue
            used[v] = True
            yield from rec(d + 1)
            used[v] = False

    yield from rec(0)


def _count_first(args) -> int:
    n, prepared, first = args
    return kernels.count_avoiders(n, prepared, first)


def count_avoiders(pats: Iterable[Pogp], n: int, workers: int = 1) -> int:
    """|Av(pats) in S_n|.  With ``workers > 1`` the search is split by first entry."""
    _check(n)
    prepared = _prepare(pats)
    if workers <= 1 or n < 2:
        return kernels.count_avoiders(n, prepared)
    jobs = [(n, prepared, first) for first in range(1, n + 1)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return sum(pool.map(_count_first, jobs))


def count_sequence(pats: Iterable[Pogp], max_length: int, workers: int = 1) -> CountSeq:
    pats = list(pats)
    _check(max_length)
    return tuple(count_avoiders(pats, n, workers) for n in range(max_length + 1))


def witness_difference(p1: Pogp, p2: Pogp, max_length: int) -> Optional[Permutation]:
    """Smallest, then lexicographically first, permutation in exactly one of Av(p1), Av(p2)."""
    _check(max_length)
    a, b = p1._kernel(), p2._kernel()
    for n in range(max_length + 1):
        found = kernels.first_difference(n, a, b)
        if found is not None:
            return Permutation(found)
    return None


def avoider_sets(pat: Pogp, max_length: int) -> tuple[frozenset[tuple[int, ...]], ...]:
    """Av(pat) in S_0..S_max_length as frozensets, for bulk comparisons."""
    _check(max_length)
    k = [pat._kernel()]
    return tuple(frozenset(kernels.list_avoiders(n, k)) for n in range(max_length + 1))


def first_in_difference(
    sets_a: Sequence[frozenset], sets_b: Sequence[frozenset]
) -> Optional[Permutation]:
    """Same contract as :func:`witness_difference`, from precomputed avoider sets."""
    for sa, sb in zip(sets_a, sets_b):
        diff = sa ^ sb
        if diff:
            return Permutation(min(diff))
    return None


def avoids_one(perm: Sequence[int], p1: Pogp, p2: Pogp) -> bool:
    """True when ``perm`` lies in exactly one of Av(p1), Av(p2)."""
    from pogp.pattern import avoids

    return avoids(perm, p1) != avoids(perm, p2)

"""Permutations of ``[n]`` and the structural operations used by the bijections.

Positions and values are 1-based throughout.  The empty permutation is a
regular value.

>>> p = Permutation.parse("637529184")
>>> sorted(lmax(p)), sorted(rmax(p))
([6, 7, 9], [4, 8, 9])
>>> str(psi(p))
'184952736'
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

__all__ = [
    "Permutation", "MaxDecomposition", "PermutationError",
    "lmax", "rmax", "split_at_max", "ins", "psi",
    "lmax_decomposition", "rmax_decomposition", "complement", "reverse",
    "format_values",
]


class PermutationError(ValueError):
    """Raised for malformed permutation text or invalid arguments."""


def format_values(values: Sequence[int]) -> str:
    """Compact digit form when every value is a single digit, else space separated."""
    if all(1 <= v <= 9 for v in values) and len(values) <= 9:
        return "".join(map(str, values))
    return " ".join(map(str, values))


class Permutation(tuple):
    """An immutable permutation of ``1..n`` in one-line notation."""

    __slots__ = ()

    def __new__(cls, elements: Iterable[int] = ()):
        self = super().__new__(cls, (int(v) for v in elements))
        if sorted(self) != list(range(1, len(self) + 1)):
            raise PermutationError(f"not a permutation of [1..{len(self)}]: {tuple(self)}")
        return self

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse ``"637529184"`` or ``"6 1 9 4 2 12 3 11 8 5 10 7"`` (commas allowed)."""
        text = text.strip()
        if not text:
            return cls()
        tokens = [t for t in re.split(r"[\s,]+", text) if t]
        if not all(t.isdigit() for t in tokens):
            raise PermutationError(f"illegal permutation text: {text!r}")
        if len(tokens) == 1 and len(tokens[0]) > 1:
            tokens = list(tokens[0])
        try:
            return cls(int(t) for t in tokens)
        except PermutationError as exc:
            raise PermutationError(f"{text!r}: {exc}") from None

    def __str__(self) -> str:
        return format_values(self)

    def __repr__(self) -> str:
        return f"Permutation({str(self)!r})"


@dataclass(frozen=True)
class MaxDecomposition:
    """Maxima paired with their blocks.

    For ``side == "left-to-right"`` the source reads ``M1 b1 M2 b2 ...``;
    for ``side == "right-to-left"`` it reads ``b1 M1 b2 M2 ...``.
    """

    items: tuple[tuple[int, tuple[int, ...]], ...]
    side: str

    def maxima(self) -> tuple[int, ...]:
        return tuple(m for m, _ in self.items)

    def blocks(self) -> tuple[tuple[int, ...], ...]:
        return tuple(b for _, b in self.items)

    def flatten(self) -> tuple[int, ...]:
        out: list[int] = []
        for m, block in self.items:
            if self.side == "left-to-right":
                out.append(m)
                out.extend(block)
            else:
                out.extend(block)
                out.append(m)
        return tuple(out)


def lmax(p: Sequence[int]) -> set[int]:
    out, best = set(), 0
    for v in p:
        if v > best:
            best = v
            out.add(v)
    return out


def rmax(p: Sequence[int]) -> set[int]:
    return lmax(p[::-1])


def split_at_max(p: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return ``(left, right)`` with ``p == left + (max,) + right``."""
    if not p:
        raise PermutationError("cannot split empty permutation")
    i = list(p).index(max(p))
    return tuple(p[:i]), tuple(p[i + 1:])


def ins(p: Sequence[int], i: int, j: int) -> Permutation:
    """Insert value ``i`` so that it lands at position ``j``; values >= i shift up.

    ``j == len(p) + 1`` appends.
    """
    n = len(p)
    if not 1 <= i <= n + 1:
        raise PermutationError(f"value {i} out of range 1..{n + 1}")
    if not 1 <= j <= n + 1:
        raise PermutationError(f"position {j} out of range 1..{n + 1}")
    bumped = [v + 1 if v >= i else v for v in p]
    return Permutation(bumped[:j - 1] + [i] + bumped[j - 1:])


def _psi(values: tuple[int, ...]) -> tuple[int, ...]:
    # iterative unwinding of psi(L n R) = R n psi(L)
    out: list[int] = []
    while values:
        i = values.index(max(values))
        out.extend(values[i + 1:])
        out.append(values[i])
        values = values[:i]
    return tuple(out)


def psi(p: Sequence[int]) -> Permutation:
    """The bijection ``L n R -> R n psi(L)``; works on any sequence of distinct values."""
    return Permutation(_psi(tuple(p)))


def psi_values(values: Sequence[int]) -> tuple[int, ...]:
    """psi on a word of distinct (not necessarily dense) values."""
    return _psi(tuple(values))


def lmax_decomposition(p: Sequence[int]) -> MaxDecomposition:
    items: list[tuple[int, list[int]]] = []
    for v in p:
        if not items or v > items[-1][0]:
            items.append((v, []))
        else:
            items[-1][1].append(v)
    return MaxDecomposition(tuple((m, tuple(b)) for m, b in items), "left-to-right")


def rmax_decomposition(p: Sequence[int]) -> MaxDecomposition:
    mirrored = lmax_decomposition(tuple(p)[::-1])
    items = tuple((m, b[::-1]) for m, b in reversed(mirrored.items))
    return MaxDecomposition(items, "right-to-left")


def complement(p: Sequence[int]) -> Permutation:
    n = len(p)
    return Permutation(n + 1 - v for v in p)


def reverse(p: Sequence[int]) -> Permutation:
    return Permutation(tuple(p)[::-1])

"""Pure-Python occurrence and enumeration kernels.

Reference implementation; ``_ckernels.pyx`` mirrors it function for function.

A pattern is passed as ``(letters, adj)`` where ``adj[t]`` is true when the
letters at ``t`` and ``t + 1`` must match adjacent entries (no dash between
them).  Permutation values are arbitrary distinct integers; indices are 0-based.
"""

from __future__ import annotations

from typing import Optional, Sequence

Pattern = tuple[Sequence[int], Sequence[bool]]


def _relations(letters: Sequence[int]) -> list[list[tuple[int, int]]]:
    # rel[t] lists (u, sign) for u > t: sign -1 means value_t < value_u, +1 means >
    m = len(letters)
    rel = []
    for t in range(m):
        row = []
        for u in range(t + 1, m):
            if letters[t] < letters[u]:
                row.append((u, -1))
            elif letters[t] > letters[u]:
                row.append((u, 1))
        rel.append(row)
    return rel


class _Compiled:
    __slots__ = ("m", "adj", "rel")

    def __init__(self, letters: Sequence[int], adj: Sequence[bool]):
        self.m = len(letters)
        self.adj = tuple(bool(a) for a in adj)
        self.rel = _relations(letters)


def _fits(vals, idx, c, row) -> bool:
    v = vals[c]
    for u, s in row:
        w = vals[idx[u]]
        if s < 0:
            if v >= w:
                return False
        elif v <= w:
            return False
    return True


def _exists(vals, pat: _Compiled, idx, t) -> bool:
    if t < 0:
        return True
    hi = idx[t + 1] - 1
    if hi < t:
        return False
    row = pat.rel[t]
    lo = hi if pat.adj[t] else t
    for c in range(hi, lo - 1, -1):
        if _fits(vals, idx, c, row):
            idx[t] = c
            if _exists(vals, pat, idx, t - 1):
                return True
    return False


def _count(vals, pat: _Compiled, idx, t) -> int:
    if t < 0:
        return 1
    hi = idx[t + 1] - 1
    if hi < t:
        return 0
    row = pat.rel[t]
    lo = hi if pat.adj[t] else t
    total = 0
    for c in range(hi, lo - 1, -1):
        if _fits(vals, idx, c, row):
            idx[t] = c
            total += _count(vals, pat, idx, t - 1)
    return total


def _ends_at(vals, end: int, pat: _Compiled) -> bool:
    m = pat.m
    if end + 1 < m:
        return False
    idx = [0] * m
    idx[m - 1] = end
    return _exists(vals, pat, idx, m - 2)


def occurs_ending_at(vals: Sequence[int], end: int, letters, adj) -> bool:
    """True if some occurrence uses ``vals[end]`` as its last letter (entries after ``end`` ignored)."""
    return _ends_at(vals, end, _Compiled(letters, adj))


def count_occurrences(vals: Sequence[int], letters, adj) -> int:
    pat = _Compiled(letters, adj)
    m = pat.m
    total = 0
    for end in range(m - 1, len(vals)):
        idx = [0] * m
        idx[m - 1] = end
        total += _count(vals, pat, idx, m - 2)
    return total


def contains(vals: Sequence[int], letters, adj) -> bool:
    pat = _Compiled(letters, adj)
    return any(_ends_at(vals, end, pat) for end in range(pat.m - 1, len(vals)))


def _walk(n: int, pats: list[_Compiled], first: int, sink) -> None:
    # prefix extension in lexicographic order; a prefix holding an occurrence is cut
    vals = [0] * n
    used = [False] * (n + 1)

    def rec(d: int) -> None:
        if d == n:
            sink(tuple(vals))
            return
        choices = [first] if (d == 0 and first) else range(1, n + 1)
        for v in choices:
            if used[v]:
                continue
            vals[d] = v
            if any(_ends_at(vals, d, p) for p in pats):
                continue
            used[v] = True
            rec(d + 1)
            used[v] = False

    rec(0)


def count_avoiders(n: int, patterns: Sequence[Pattern], first: int = 0) -> int:
    """Number of permutations of [n] avoiding every pattern; ``first`` pins the first entry."""
    pats = [_Compiled(l, a) for l, a in patterns]
    box = [0]

    def sink(_):
        box[0] += 1

    _walk(n, pats, first, sink)
    return box[0]


def list_avoiders(n: int, patterns: Sequence[Pattern]) -> list[tuple[int, ...]]:
    pats = [_Compiled(l, a) for l, a in patterns]
    out: list[tuple[int, ...]] = []
    _walk(n, pats, 0, out.append)
    return out


def first_difference(n: int, pat_a: Pattern, pat_b: Pattern) -> Optional[tuple[int, ...]]:
    """Lexicographically first permutation of [n] containing exactly one of the two patterns."""
    pa, pb = _Compiled(*pat_a), _Compiled(*pat_b)
    vals = [0] * n
    used = [False] * (n + 1)

    def rec(d: int, has_a: bool, has_b: bool):
        if d == n:
            return tuple(vals) if has_a != has_b else None
        for v in range(1, n + 1):
            if used[v]:
                continue
            vals[d] = v
            a = has_a or _ends_at(vals, d, pa)
            b = has_b or _ends_at(vals, d, pb)
            if a and b:
                continue
            used[v] = True
            found = rec(d + 1, a, b)
            used[v] = False
            if found is not None:
                return found
        return None

    return rec(0, False, False)

"""Partially ordered generalized patterns (POGPs).

A pattern is a word of positive integer letters, repeats allowed, with a dash
allowed between any two neighbouring letters.  Letters joined without a dash
must be matched by adjacent entries; equal letters impose no order between
their matches.

>>> p = Pogp.parse("3-121-3")
>>> p.letters, p.segments
((3, 1, 2, 1, 3), ((3,), (1, 2, 1), (3,)))
>>> sorted(str(q) for q in linearize(p))
['4-132-5', '4-231-5', '5-132-4', '5-231-4']
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from pogp import kernels

__all__ = [
    "Pogp", "PatternParseError", "PatternRenderError",
    "parse", "render", "canonicalize", "is_occurrence", "count_occurrences", "first_occurrence",
    "avoids", "avoids_all", "forms", "linearize", "strip_dashes",
]


class PatternParseError(ValueError):
    def __init__(self, text: str, position: int, reason: str):
        self.text, self.position = text, position
        super().__init__(f"bad pattern {text!r} at position {position + 1}: {reason}")


class PatternRenderError(ValueError):
    pass


@dataclass(frozen=True)
class Pogp:
    letters: tuple[int, ...]
    dashes: tuple[bool, ...]  # dashes[t]: dash between letters t and t+1 (0-based)

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(int(a) for a in self.letters))
        object.__setattr__(self, "dashes", tuple(bool(d) for d in self.dashes))
        if not self.letters:
            raise ValueError("pattern needs at least one letter")
        if any(a < 1 for a in self.letters):
            raise ValueError("pattern letters must be positive")
        if len(self.dashes) != len(self.letters) - 1:
            raise ValueError("need exactly one dash flag per gap")

    @classmethod
    def parse(cls, text: str) -> "Pogp":
        return parse(text)

    @classmethod
    def from_segments(cls, segments: Iterable[Sequence[int]]) -> "Pogp":
        letters: list[int] = []
        dashes: list[bool] = []
        for seg in segments:
            if not seg:
                raise ValueError("empty segment")
            if letters:
                dashes.append(True)
            letters.extend(seg)
            dashes.extend([False] * (len(seg) - 1))
        return cls(tuple(letters), tuple(dashes))

    def __len__(self) -> int:
        return len(self.letters)

    def __str__(self) -> str:
        return render(self)

    @property
    def adjacency(self) -> tuple[bool, ...]:
        """Per gap: True when the two letters must be matched by adjacent entries."""
        return tuple(not d for d in self.dashes)

    @property
    def segments(self) -> tuple[tuple[int, ...], ...]:
        out, cur = [], [self.letters[0]]
        for d, a in zip(self.dashes, self.letters[1:]):
            if d:
                out.append(tuple(cur))
                cur = []
            cur.append(a)
        out.append(tuple(cur))
        return tuple(out)

    @property
    def is_canonical(self) -> bool:
        return set(self.letters) == set(range(1, max(self.letters) + 1))

    def with_dash(self, gap: int, value: bool) -> "Pogp":
        d = list(self.dashes)
        d[gap] = value
        return Pogp(self.letters, tuple(d))

    def toggled(self, gap: int) -> "Pogp":
        return self.with_dash(gap, not self.dashes[gap])

    def complement(self) -> "Pogp":
        top = max(self.letters) + 1
        return Pogp(tuple(top - a for a in self.letters), self.dashes)

    def reverse(self) -> "Pogp":
        return Pogp(self.letters[::-1], self.dashes[::-1])

    def _kernel(self):
        return self.letters, self.adjacency


def parse(text: str) -> Pogp:
    if not text:
        raise PatternParseError(text, 0, "empty pattern")
    letters: list[int] = []
    dashes: list[bool] = []
    pending_dash = False
    for i, ch in enumerate(text):
        if ch == "-":
            if not letters or pending_dash:
                raise PatternParseError(text, i, "empty segment")
            pending_dash = True
        elif ch in "123456789":
            if letters:
                dashes.append(pending_dash)
            letters.append(int(ch))
            pending_dash = False
        elif ch == "0":
            raise PatternParseError(text, i, "letter 0 is not allowed")
        else:
            raise PatternParseError(text, i, f"illegal character {ch!r}")
    if pending_dash:
        raise PatternParseError(text, len(text) - 1, "empty segment")
    return Pogp(tuple(letters), tuple(dashes))


def render(p: Pogp) -> str:
    if any(a > 9 for a in p.letters):
        raise PatternRenderError(f"letter above 9 cannot be rendered: {p.letters}")
    out = [str(p.letters[0])]
    for d, a in zip(p.dashes, p.letters[1:]):
        if d:
            out.append("-")
        out.append(str(a))
    return "".join(out)


def canonicalize(p: Pogp) -> Pogp:
    rank = {a: r for r, a in enumerate(sorted(set(p.letters)), start=1)}
    return Pogp(tuple(rank[a] for a in p.letters), p.dashes)


def is_occurrence(perm: Sequence[int], indices: Sequence[int], pat: Pogp) -> bool:
    """Check one candidate occurrence; ``indices`` are 1-based positions into ``perm``."""
    m = len(pat.letters)
    if len(indices) != m:
        raise ValueError(f"expected {m} indices, got {len(indices)}")
    if any(b <= a for a, b in zip(indices, indices[1:])):
        raise ValueError("indices must be strictly increasing")
    if indices[0] < 1 or indices[-1] > len(perm):
        raise ValueError("index out of range")
    for t, adjacent in enumerate(pat.adjacency):
        if adjacent and indices[t + 1] != indices[t] + 1:
            return False
    vals = [perm[i - 1] for i in indices]
    for s, t in itertools.combinations(range(m), 2):
        a, b = pat.letters[s], pat.letters[t]
        if a < b and not vals[s] < vals[t]:
            return False
        if a > b and not vals[s] > vals[t]:
            return False
    return True


def count_occurrences(perm: Sequence[int], pat: Pogp) -> int:
    return kernels.count_occurrences(tuple(perm), pat.letters, pat.adjacency)


def first_occurrence(perm: Sequence[int], pat: Pogp) -> tuple[int, ...] | None:
    """1-based positions of the lexicographically first occurrence, if any."""
    for idx in itertools.combinations(range(1, len(perm) + 1), len(pat)):
        if is_occurrence(perm, idx, pat):
            return idx
    return None


def avoids(perm: Sequence[int], pat: Pogp) -> bool:
    return not kernels.contains(tuple(perm), pat.letters, pat.adjacency)


def avoids_all(perm: Sequence[int], pats: Iterable[Pogp]) -> bool:
    return all(avoids(perm, p) for p in pats)


def forms(perm: Sequence[int], pat: Pogp) -> bool:
    """Whole-permutation version: same length and an occurrence exists."""
    return len(perm) == len(pat) and not avoids(perm, pat)


def _linear_extensions(letters: tuple[int, ...]) -> Iterable[tuple[int, ...]]:
    # letters form a total preorder: each tie group owns a consecutive rank block,
    # permuted freely inside the group
    groups: list[list[int]] = []
    base: list[int] = []
    start = 1
    for value in sorted(set(letters)):
        positions = [i for i, a in enumerate(letters) if a == value]
        groups.append(positions)
        base.append(start)
        start += len(positions)
    for choice in itertools.product(
        *(itertools.permutations(range(b, b + len(g))) for g, b in zip(groups, base))
    ):
        ranks = [0] * len(letters)
        for positions, block in zip(groups, choice):
            for i, r in zip(positions, block):
                ranks[i] = r
        yield tuple(ranks)


def linearize(pat: Pogp) -> set[Pogp]:
    """All generalized patterns (distinct letters) obtained by breaking ties in every way."""
    return {Pogp(r, pat.dashes) for r in _linear_extensions(pat.letters)}


def strip_dashes(pat: Pogp) -> tuple[int, ...]:
    return pat.letters

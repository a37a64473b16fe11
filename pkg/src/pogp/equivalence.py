"""Deciding when two patterns have the same avoiders.

Two patterns can only share their avoiders if their underlying words agree.
For a shared word, equal avoider sets are reachable through single dash
toggles that each keep the avoider set fixed, and each such toggle falls into
one of six letter-shape cases checked by :func:`classify_single_dash`.

Gap numbers in this module are 1-based: gap ``g`` sits between letters ``g``
and ``g + 1``.
"""

from __future__ import annotations

import itertools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from pogp.enumeration import MAX_N, max_n, witness_difference
from pogp.pattern import Pogp, avoids, canonicalize, forms
from pogp.perm import Permutation

__all__ = [
    "EquivalenceVerdict", "is_trivial", "classify_single_dash", "equivalent",
    "brute_equivalent", "insertion_criterion", "insertion_counterexample",
    "default_bound", "dashings",
]

TRIVIAL = "trivial"
NONE = "none"


@dataclass(frozen=True)
class EquivalenceVerdict:
    first: Pogp
    second: Pogp
    equivalent: bool
    method: str  # "classification" or "oracle"
    witness: Optional[Permutation] = None
    case_trace: tuple[tuple[str, str, object], ...] = field(default=())
    max_n: Optional[int] = None  # oracle search bound, when the oracle ran

    def __post_init__(self):
        if self.witness is not None:
            if self.equivalent:
                raise ValueError("an equivalent verdict cannot carry a witness")
            if avoids(self.witness, self.first) == avoids(self.witness, self.second):
                raise ValueError(f"{self.witness} does not separate {self.first} and {self.second}")

    def to_json(self) -> dict:
        return {
            "first": str(self.first),
            "second": str(self.second),
            "equivalent": self.equivalent,
            "method": self.method,
            "witness": None if self.witness is None else str(self.witness),
            "case_trace": [{"from": a, "to": b, "case": c} for a, b, c in self.case_trace],
            "max_n": self.max_n,
        }


def is_trivial(pat: Pogp) -> bool:
    return len(set(pat.letters)) == 1


def _check_gap(pat: Pogp, gap: int) -> int:
    if not 1 <= gap <= len(pat) - 1:
        raise ValueError(f"gap {gap} out of range 1..{len(pat) - 1}")
    return gap - 1


def _runs(pat: Pogp, g0: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # maximal dash-free runs ending at letter g0 and starting at letter g0+1,
    # ignoring the state of the gap itself
    s = g0
    while s > 0 and not pat.dashes[s - 1]:
        s -= 1
    e = g0 + 1
    while e < len(pat) - 1 and not pat.dashes[e]:
        e += 1
    return pat.letters[s:g0 + 1], pat.letters[g0 + 1:e + 1]


def _word(letters) -> str:
    return "".join(map(str, letters))


def _case(pat: Pogp, g0: int):
    s2, s3 = map(_word, _runs(pat, g0))
    alphabet = set(pat.letters)
    ones, twos = pat.letters.count(1), pat.letters.count(2)
    over12 = alphabet <= {1, 2}
    over123 = alphabet <= {1, 2, 3}
    tests = (
        (1, re.fullmatch("1+", s2) and s3 == "2" and over12),
        (2, s2 == "1" and re.fullmatch("2+", s3) and over12),
        (3, re.fullmatch("2*1", s2) and re.fullmatch("2+", s3) and over12 and ones == 1),
        (4, re.fullmatch("1+", s2) and re.fullmatch("21*", s3) and over12 and twos == 1),
        (5, re.fullmatch("1+", s2) and s3 == "3" and over123 and twos == 1),
        (6, s2 == "1" and re.fullmatch("3+", s3) and over123 and twos == 1),
    )
    for number, ok in tests:
        if ok:
            return number
    return NONE


def classify_single_dash(pat: Pogp, gap: int):
    """Case number 1-6, ``"trivial"`` or ``"none"`` for toggling the dash at ``gap``.

    Anything but ``"none"`` means toggling that dash leaves the avoider set
    unchanged.  When the letter left of the gap exceeds the one right of it,
    the complement pattern is classified instead.
    """
    g0 = _check_gap(pat, gap)
    pat = canonicalize(pat)
    if is_trivial(pat):
        return TRIVIAL
    s2, s3 = _runs(pat, g0)
    if s2[-1] > s3[0]:
        pat = pat.complement()
    return _case(pat, g0)


def dashings(letters) -> list[Pogp]:
    return [Pogp(tuple(letters), d) for d in itertools.product((False, True), repeat=len(letters) - 1)]


def default_bound(p1: Pogp, p2: Pogp) -> int:
    return min(max(len(p1), len(p2)) + 2, max_n())


def equivalent(p1: Pogp, p2: Pogp) -> EquivalenceVerdict:
    """Decide Av(p1) = Av(p2) by searching the single-dash toggle graph."""
    a, b = canonicalize(p1), canonicalize(p2)
    if a.letters == b.letters:
        # BFS over dashings of the shared word; edges are accepted toggles
        prev: dict[Pogp, tuple[Pogp, object] | None] = {a: None}
        queue = deque([a])
        while queue:
            cur = queue.popleft()
            if cur == b:
                break
            for gap in range(1, len(cur)):
                verdict = classify_single_dash(cur, gap)
                if verdict == NONE:
                    continue
                nxt = cur.toggled(gap - 1)
                if nxt not in prev:
                    prev[nxt] = (cur, verdict)
                    queue.append(nxt)
        if b in prev:
            trace = []
            node = b
            while prev[node] is not None:
                parent, verdict = prev[node]
                trace.append((str(parent), str(node), verdict))
                node = parent
            return EquivalenceVerdict(p1, p2, True, "classification",
                                      case_trace=tuple(reversed(trace)))
    bound = default_bound(p1, p2)
    return EquivalenceVerdict(p1, p2, False, "classification",
                              witness=witness_difference(p1, p2, bound), max_n=bound)


def brute_equivalent(p1: Pogp, p2: Pogp, max_length: Optional[int] = None) -> EquivalenceVerdict:
    """Oracle: equal up to ``max_length`` unless a separating permutation turns up."""
    bound = default_bound(p1, p2) if max_length is None else max_length
    w = witness_difference(p1, p2, bound)
    return EquivalenceVerdict(p1, p2, w is None, "oracle", witness=w, max_n=bound)


def insertion_counterexample(pat: Pogp, gap: int, max_insert: int = 2) -> Optional[Permutation]:
    """First ``A X B`` (|X| <= max_insert) where ``A B`` forms the joined pattern but ``A X B`` avoids it."""
    g0 = _check_gap(pat, gap)
    if not pat.dashes[g0]:
        raise ValueError(f"gap {gap} of {pat} carries no dash")
    joined = pat.with_dash(g0, False)
    m = len(joined)
    for x in range(1, max_insert + 1):
        if m + x > MAX_N:
            raise ValueError("insertion search beyond enumeration ceiling")
        for tau in itertools.permutations(range(1, m + x + 1)):
            ab = tau[:g0 + 1] + tau[g0 + 1 + x:]
            if forms(ab, joined) and avoids(tau, joined):
                return Permutation(tau)
    return None


def insertion_criterion(pat: Pogp, gap: int, max_insert: int = 2) -> bool:
    """True when every insertion between the two sides of a forming permutation still contains the joined pattern.

    One inserted entry is not always enough: 11-22 at gap 2 survives every
    single insertion yet is not equivalent to 1122, so the default tries up
    to two.
    """
    return insertion_counterexample(pat, gap, max_insert) is None

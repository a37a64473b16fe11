"""Bijections between avoider classes and (colored / labeled) set partitions.

* set partitions of [n]            <-> Av(3-12)  and Av(12-3) in S_n
* bicolored set partitions of [n]  <-> Av(3-12-3) in S_(n+1)
* standard-labeled Z2-sets          <-> 121-avoiding words
* partial Z2-partitions of [n]      <-> Av(3-121-3) in S_(n+1)

Blocks are literal value sets; splitting a permutation at its maximum never
renames values, so the two halves of a permutation of [n+1] together cover [n].

>>> sp = SetPartition.parse("{6,3,1}{8,7}{9,5,4,2}")
>>> str(partition_to_av312(sp))
'631879542'
>>> str(av3123_to_bicolored(Permutation.parse("6 1 9 4 2 12 3 11 8 5 10 7")))
'L{6,1}L{9,4,2}R{11,3}R{10,8,5}R{7}'
"""

from __future__ import annotations

import itertools
import re
import warnings
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from pogp.pattern import Pogp, avoids, first_occurrence
from pogp.perm import Permutation, lmax_decomposition, rmax_decomposition, split_at_max

__all__ = [
    "SetPartition", "BicoloredSetPartition", "LabeledBlock", "PartialGPartition",
    "NotAnAvoiderError", "StandardFormError", "PartitionParseError",
    "partition_to_av312", "av312_to_partition",
    "partition_to_av123r", "av123r_to_partition",
    "av3123_to_bicolored", "bicolored_to_av3123",
    "labeled_set_to_av121", "av121_to_labeled_set",
    "av31213_to_gpartition", "gpartition_to_av31213",
    "set_partitions", "bicolored_partitions", "gpartitions",
]

P_3_12 = Pogp.parse("3-12")
P_12_3 = Pogp.parse("12-3")
P_3_12_3 = Pogp.parse("3-12-3")
P_121 = Pogp.parse("121")
P_3_121_3 = Pogp.parse("3-121-3")


class NotAnAvoiderError(ValueError):
    def __init__(self, values: Sequence[int], pattern: Pogp):
        occ = first_occurrence(values, pattern)
        where = "" if occ is None else f" at positions {','.join(map(str, occ))}"
        super().__init__(f"{' '.join(map(str, values))} contains {pattern}{where}")
        self.occurrence = occ


class StandardFormError(ValueError):
    pass


class PartitionParseError(ValueError):
    pass


def _require_avoider(values: Sequence[int], pattern: Pogp) -> None:
    if not avoids(values, pattern):
        raise NotAnAvoiderError(values, pattern)


Block = frozenset


def _blocks(raw: Iterable[Iterable[int]]) -> frozenset:
    out = frozenset(Block(b) for b in raw)
    if any(not b for b in out):
        raise ValueError("blocks must be nonempty")
    return out


def _covered(blocks: Iterable[frozenset]) -> list[int]:
    seen: list[int] = []
    for b in blocks:
        seen.extend(b)
    return seen


def _check_cover(n: int, blocks: Iterable[frozenset]) -> None:
    seen = _covered(blocks)
    if len(seen) != len(set(seen)):
        raise ValueError("blocks must be disjoint")
    if sorted(seen) != list(range(1, n + 1)):
        raise ValueError(f"blocks must cover exactly 1..{n}")


def _fmt_block(b: Iterable[int]) -> str:
    return "{" + ",".join(map(str, sorted(b, reverse=True))) + "}"


_BLOCK = re.compile(r"([LR]?)\{([^{}]*)\}")


def _scan_blocks(text: str, colored: bool) -> list[tuple[str, list[int]]]:
    text = "".join(text.split())
    if text in ("", "{}"):
        return []
    pos, out = 0, []
    for m in _BLOCK.finditer(text):
        if m.start() != pos:
            raise PartitionParseError(f"unexpected text at position {pos + 1}: {text!r}")
        color, body = m.groups()
        if colored != bool(color):
            raise PartitionParseError(f"block {m.group(0)!r}: color marker {'required' if colored else 'not allowed'}")
        try:
            elems = [int(x) for x in body.split(",")] if body else []
        except ValueError:
            raise PartitionParseError(f"bad block {m.group(0)!r}") from None
        if not elems:
            raise PartitionParseError("empty block")
        if len(set(elems)) != len(elems):
            raise PartitionParseError(f"repeated element in block {m.group(0)!r}")
        out.append((color, elems))
        pos = m.end()
    if pos != len(text):
        raise PartitionParseError(f"unexpected text at position {pos + 1}: {text!r}")
    return out


@dataclass(frozen=True)
class SetPartition:
    n: int
    blocks: frozenset

    def __post_init__(self):
        object.__setattr__(self, "blocks", _blocks(self.blocks))
        _check_cover(self.n, self.blocks)

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "SetPartition":
        blocks = _blocks(blocks)
        return cls(len(_covered(blocks)), blocks)

    @classmethod
    def parse(cls, text: str) -> "SetPartition":
        return cls.of(elems for _, elems in _scan_blocks(text, colored=False))

    def ordered_blocks(self) -> list[frozenset]:
        return sorted(self.blocks, key=max)

    def __str__(self) -> str:
        return "".join(_fmt_block(b) for b in self.ordered_blocks()) or "{}"


@dataclass(frozen=True)
class BicoloredSetPartition:
    """Blocks of [n] each colored L or R."""

    n: int
    left: frozenset
    right: frozenset

    def __post_init__(self):
        object.__setattr__(self, "left", _blocks(self.left))
        object.__setattr__(self, "right", _blocks(self.right))
        _check_cover(self.n, list(self.left) + list(self.right))

    @classmethod
    def of(cls, left, right) -> "BicoloredSetPartition":
        left, right = _blocks(left), _blocks(right)
        return cls(len(_covered(list(left) + list(right))), left, right)

    @classmethod
    def parse(cls, text: str) -> "BicoloredSetPartition":
        items = _scan_blocks(text, colored=True)
        return cls.of([e for c, e in items if c == "L"], [e for c, e in items if c == "R"])

    @property
    def partition(self) -> SetPartition:
        return SetPartition(self.n, self.left | self.right)

    def color(self, block: Iterable[int]) -> str:
        b = frozenset(block)
        if b in self.left:
            return "L"
        if b in self.right:
            return "R"
        raise KeyError(block)

    def __str__(self) -> str:
        parts = ["L" + _fmt_block(b) for b in sorted(self.left, key=max)]
        parts += ["R" + _fmt_block(b) for b in sorted(self.right, key=max, reverse=True)]
        return "".join(parts) or "{}"


@dataclass(frozen=True)
class LabeledBlock:
    """A Z2-labeled set, stored as sorted ``(element, label)`` pairs."""

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        pairs = tuple(sorted((int(e), int(l)) for e, l in self.pairs))
        if not pairs:
            raise ValueError("labeled block must be nonempty")
        if len({e for e, _ in pairs}) != len(pairs):
            raise ValueError("repeated element in labeled block")
        if any(l not in (0, 1) for _, l in pairs):
            raise ValueError("labels must be 0 or 1")
        object.__setattr__(self, "pairs", pairs)

    @classmethod
    def of(cls, labels: dict[int, int]) -> "LabeledBlock":
        return cls(tuple(labels.items()))

    @property
    def elements(self) -> frozenset:
        return frozenset(e for e, _ in self.pairs)

    def label(self, element: int) -> int:
        return dict(self.pairs)[element]

    @property
    def is_standard(self) -> bool:
        return self.pairs[0][1] == 0

    def flipped(self) -> "LabeledBlock":
        return LabeledBlock(tuple((e, 1 - l) for e, l in self.pairs))

    def standard(self) -> "LabeledBlock":
        return self if self.is_standard else self.flipped()

    @property
    def max_label(self) -> int:
        return self.pairs[-1][1]

    def __str__(self) -> str:
        word = labeled_set_to_av121(self.standard())
        return "[" + ",".join(f"{e}:{self.label(e)}" for e in word) + "]"


@dataclass(frozen=True)
class PartialGPartition:
    """Disjoint standard-labeled blocks inside [n]; uncovered elements form ``phi``."""

    n: int
    blocks: frozenset

    def __post_init__(self):
        fixed = []
        for b in self.blocks:
            if not b.is_standard:
                warnings.warn(f"block {sorted(b.elements)} not in standard form; flipping labels")
                b = b.flipped()
            fixed.append(b)
        blocks = frozenset(fixed)
        seen = _covered(b.elements for b in blocks)
        if len(seen) != len(set(seen)):
            raise ValueError("blocks must be disjoint")
        if any(not 1 <= e <= self.n for e in seen):
            raise ValueError(f"elements must lie in 1..{self.n}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def phi(self) -> frozenset:
        covered = set(_covered(b.elements for b in self.blocks))
        return frozenset(e for e in range(1, self.n + 1) if e not in covered)

    @classmethod
    def parse(cls, text: str) -> "PartialGPartition":
        m = re.search(r"\bn\s*=\s*(\d+)", text)
        if not m:
            raise PartitionParseError("G-partition text needs n=<size>")
        n = int(m.group(1))
        body = re.sub(r"\bphi\s*=\s*\{[^}]*\}", "", text[:m.start()] + text[m.end():])
        body = "".join(body.split())
        blocks, pos = [], 0
        for bm in re.finditer(r"\[([^\[\]]*)\]", body):
            if bm.start() != pos:
                raise PartitionParseError(f"unexpected text in {text!r}")
            pairs = []
            for item in bm.group(1).split(","):
                e, sep, l = item.partition(":")
                if not sep or not e.isdigit() or l not in ("0", "1"):
                    raise PartitionParseError(f"bad labeled element {item!r}")
                pairs.append((int(e), int(l)))
            blocks.append(LabeledBlock(tuple(pairs)))
            pos = bm.end()
        if pos != len(body):
            raise PartitionParseError(f"unexpected text in {text!r}")
        return cls(n, frozenset(blocks))

    def ordered_blocks(self) -> list[LabeledBlock]:
        left = sorted((b for b in self.blocks if b.max_label == 0), key=lambda b: max(b.elements))
        right = sorted(
            (b for b in self.blocks if b.max_label == 1),
            key=lambda b: max(b.elements), reverse=True,
        )
        return left + right

    def __str__(self) -> str:
        blocks = "".join(str(b) for b in self.ordered_blocks())
        phi = ",".join(map(str, sorted(self.phi)))
        return f"{blocks} phi={{{phi}}} n={self.n}".strip()


# ---- set partitions <-> Av(3-12), Av(12-3)

def _blocks_to_312(blocks: Iterable[Iterable[int]]) -> list[int]:
    out: list[int] = []
    for b in sorted(blocks, key=max):
        out.extend(sorted(b, reverse=True))
    return out


def _312_to_blocks(values: Sequence[int]) -> list[frozenset]:
    return [frozenset((m,) + blk) for m, blk in lmax_decomposition(values).items]


def _blocks_to_123r(blocks: Iterable[Iterable[int]]) -> list[int]:
    out: list[int] = []
    for b in sorted(blocks, key=max, reverse=True):
        rest = sorted(b, reverse=True)
        out.extend(rest[1:])
        out.append(rest[0])
    return out


def _123r_to_blocks(values: Sequence[int]) -> list[frozenset]:
    return [frozenset(blk + (m,)) for m, blk in rmax_decomposition(values).items]


def partition_to_av312(sp: SetPartition) -> Permutation:
    return Permutation(_blocks_to_312(sp.blocks))


def av312_to_partition(p: Sequence[int]) -> SetPartition:
    p = Permutation(p)
    _require_avoider(p, P_3_12)
    return SetPartition.of(_312_to_blocks(p))


def partition_to_av123r(sp: SetPartition) -> Permutation:
    return Permutation(_blocks_to_123r(sp.blocks))


def av123r_to_partition(p: Sequence[int]) -> SetPartition:
    p = Permutation(p)
    _require_avoider(p, P_12_3)
    return SetPartition.of(_123r_to_blocks(p))


# ---- bicolored set partitions <-> Av(3-12-3)

def av3123_to_bicolored(p: Sequence[int]) -> BicoloredSetPartition:
    p = Permutation(p)
    if not p:
        raise ValueError("need a nonempty permutation")
    _require_avoider(p, P_3_12_3)
    left, right = split_at_max(p)
    return BicoloredSetPartition(len(p) - 1, frozenset(_312_to_blocks(left)),
                                 frozenset(_123r_to_blocks(right)))


def bicolored_to_av3123(b: BicoloredSetPartition) -> Permutation:
    return Permutation(_blocks_to_312(b.left) + [b.n + 1] + _blocks_to_123r(b.right))


# ---- labeled sets <-> 121-avoiders

def labeled_set_to_av121(block: LabeledBlock) -> tuple[int, ...]:
    """Label-0 elements decreasing, then label-1 elements increasing."""
    if not block.is_standard:
        raise StandardFormError(f"minimum {block.pairs[0][0]} carries label 1")
    zeros = sorted((e for e, l in block.pairs if l == 0), reverse=True)
    ones = sorted(e for e, l in block.pairs if l == 1)
    return tuple(zeros + ones)


def av121_to_labeled_set(word: Sequence[int]) -> LabeledBlock:
    if not word:
        raise ValueError("need a nonempty word")
    _require_avoider(word, P_121)
    cut = list(word).index(min(word)) + 1
    return LabeledBlock(tuple((e, 0) for e in word[:cut]) + tuple((e, 1) for e in word[cut:]))


# ---- partial Z2-partitions <-> Av(3-121-3)

def av31213_to_gpartition(p: Sequence[int]) -> PartialGPartition:
    p = Permutation(p)
    if not p:
        raise ValueError("need a nonempty permutation")
    _require_avoider(p, P_3_121_3)
    left, right = split_at_max(p)
    blocks = [av121_to_labeled_set((m,) + blk) for m, blk in lmax_decomposition(left).items]
    blocks += [av121_to_labeled_set(blk + (m,))
               for m, blk in rmax_decomposition(right).items if blk]
    return PartialGPartition(len(p) - 1, frozenset(blocks))


def gpartition_to_av31213(g: PartialGPartition) -> Permutation:
    left: list[int] = []
    for b in sorted((b for b in g.blocks if b.max_label == 0), key=lambda b: max(b.elements)):
        left.extend(labeled_set_to_av121(b))
    # right side: labeled blocks (max labeled 1) and bare phi elements, by decreasing maximum
    pieces: list[tuple[int, tuple[int, ...]]] = [
        (max(b.elements), labeled_set_to_av121(b)) for b in g.blocks if b.max_label == 1
    ]
    pieces += [(e, (e,)) for e in g.phi]
    right: list[int] = []
    for _, word in sorted(pieces, reverse=True):
        right.extend(word)
    return Permutation(left + [g.n + 1] + right)


# ---- enumerators of the partition-side classes

def _set_partitions(elems: Sequence[int]) -> Iterator[list[list[int]]]:
    # restricted growth strings: element i joins an existing block or opens a new one
    if not elems:
        yield []
        return
    first, rest = elems[0], elems[1:]
    for part in _set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1:]


def set_partitions(n: int) -> Iterator[SetPartition]:
    for part in _set_partitions(list(range(1, n + 1))):
        yield SetPartition(n, frozenset(frozenset(b) for b in part))


def bicolored_partitions(n: int) -> Iterator[BicoloredSetPartition]:
    for part in _set_partitions(list(range(1, n + 1))):
        for colors in itertools.product("LR", repeat=len(part)):
            yield BicoloredSetPartition(
                n,
                frozenset(frozenset(b) for b, c in zip(part, colors) if c == "L"),
                frozenset(frozenset(b) for b, c in zip(part, colors) if c == "R"),
            )


def gpartitions(n: int) -> Iterator[PartialGPartition]:
    """All partial Z2-partitions of [n] in standard labeling.

    Partitions of {0} + [n] where the block holding 0 marks the uncovered set.
    """
    for part in _set_partitions(list(range(0, n + 1))):
        covered = [sorted(b) for b in part if 0 not in b]
        choices = [itertools.product((0, 1), repeat=len(b) - 1) for b in covered]
        for labels in itertools.product(*choices):
            yield PartialGPartition(n, frozenset(
                LabeledBlock(((b[0], 0),) + tuple(zip(b[1:], ls)))
                for b, ls in zip(covered, labels)
            ))

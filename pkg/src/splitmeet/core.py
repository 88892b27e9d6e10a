"""Implicational bases over a finite ground set.

Element sets are Python ints used as bit vectors.  Every base carries an
``elements`` tuple (its universe) that maps bit positions to tokens; sub-bases
produced by :func:`restrict` and friends share the universe of their parent and
only narrow ``ground``, so masks stay comparable across a whole decomposition.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    BadBipartition,
    ElementOutOfGround,
    EmptyPremiseError,
    NotASplit,
    ParseError,
)

_DIGITS = re.compile(r"(\d+)")


def natural_key(token: str):
    """Sort key ordering numeric runs by value, so that "2" < "10"."""
    return [int(p) if i % 2 else p for i, p in enumerate(_DIGITS.split(token))]


def bits(mask: int) -> Iterator[int]:
    """Indices of the set bits of ``mask``, ascending."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


class Implication(NamedTuple):
    premise: int
    conclusion: int


@dataclass(frozen=True)
class ImplicationBase:
    elements: tuple[str, ...]
    ground: int
    implications: tuple[Implication, ...]

    @classmethod
    def build(cls, ground: Iterable[str] = (), implications=()) -> "ImplicationBase":
        """Build a base from token collections.

        ``implications`` is an iterable of ``(premise, conclusion)`` pairs of
        token iterables.  Tokens mentioned only in implications join the ground
        set.  Empty premises are rejected.
        """
        pairs = [(tuple(a), tuple(b)) for a, b in implications]
        tokens = set(ground)
        for a, b in pairs:
            tokens.update(a)
            tokens.update(b)
        elements = tuple(sorted(tokens, key=natural_key))
        index = {t: i for i, t in enumerate(elements)}
        imps = []
        for a, b in pairs:
            if not a:
                raise EmptyPremiseError(f"empty premise in implication -> {' '.join(b)}")
            imps.append(Implication(sum(1 << index[t] for t in set(a)),
                                    sum(1 << index[t] for t in set(b))))
        return cls(elements, (1 << len(elements)) - 1, tuple(imps))

    @cached_property
    def index(self) -> dict[str, int]:
        return {t: i for i, t in enumerate(self.elements)}

    def __len__(self) -> int:
        return len(self.implications)

    @property
    def n(self) -> int:
        return self.ground.bit_count()

    def mask(self, tokens) -> int:
        """Bit mask of a token collection (an int passes through unchanged)."""
        if isinstance(tokens, int):
            mask = tokens
        else:
            if isinstance(tokens, str):
                tokens = tokens.split()
            try:
                mask = sum(1 << self.index[t] for t in set(tokens))
            except KeyError as exc:
                raise ElementOutOfGround(f"unknown element {exc.args[0]!r}") from None
        if mask < 0 or mask & ~self.ground:
            extra = mask & ~self.ground & ((1 << len(self.elements)) - 1)
            shown = self.format_set(extra) if extra else "element outside universe"
            raise ElementOutOfGround(f"{shown} not in ground set")
        return mask

    def tokens(self, mask: int) -> tuple[str, ...]:
        return tuple(self.elements[i] for i in bits(mask))

    def format_set(self, mask: int) -> str:
        return " ".join(self.tokens(mask)) if mask else "{}"

    def format_implication(self, imp: Implication) -> str:
        return f"{self.format_set(imp.premise)} -> {self.format_set(imp.conclusion)}"

    def derive(self, implications, ground: int | None = None) -> "ImplicationBase":
        """A base over the same universe with other implications (and ground)."""
        return ImplicationBase(self.elements, self.ground if ground is None else ground,
                               tuple(implications))

    def canonical(self):
        """Universe-independent comparison key: ground tokens + sorted implications."""
        imps = sorted(
            (sorted(self.tokens(a), key=natural_key), sorted(self.tokens(b), key=natural_key))
            for a, b in self.implications)
        return frozenset(self.tokens(self.ground)), tuple(
            (tuple(a), tuple(b)) for a, b in imps)

    def __str__(self) -> str:
        return "{" + ", ".join(self.format_implication(i) for i in self.implications) + "}"


def compact(text: str, ground: str = "") -> ImplicationBase:
    """Shorthand for single-character elements: ``compact("12>3 23>4", "1234")``."""
    pairs = []
    for item in text.replace(",", " ").split():
        left, _, right = item.partition(">")
        pairs.append((left.rstrip("-"), right))
    return ImplicationBase.build(ground, pairs)


# -- text format -----------------------------------------------------------


def parse_base(text: str) -> ImplicationBase:
    ground: list[str] = []
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("ground:"):
            ground.extend(line[len("ground:"):].split())
            continue
        if line.count("->") != 1:
            raise ParseError("expected exactly one '->'", lineno)
        left, right = line.split("->")
        premise, conclusion = left.split(), right.split()
        if not premise:
            raise EmptyPremiseError("empty premise", lineno)
        if not conclusion:
            raise ParseError("empty conclusion", lineno)
        pairs.append((premise, conclusion))
    return ImplicationBase.build(ground, pairs)


def read_base(path) -> ImplicationBase:
    with open(path, encoding="utf-8") as fh:
        return parse_base(fh.read())


def serialize(base: ImplicationBase) -> str:
    """Canonical text: sorted ground directive, then sorted normalized implications."""
    norm = normalize(base)
    ground = sorted(base.tokens(base.ground), key=natural_key)
    lines = ["ground: " + " ".join(ground)]
    for premise, conclusion in norm.canonical()[1]:
        lines.append(f"{' '.join(premise)} -> {' '.join(conclusion)}")
    return "\n".join(lines) + "\n"


# -- base transformations --------------------------------------------------


def normalize(base: ImplicationBase) -> ImplicationBase:
    """Drop premise elements from conclusions and discard emptied implications."""
    imps = [Implication(a, b & ~a) for a, b in base.implications if b & ~a]
    return base.derive(imps)


def unit_expand(base: ImplicationBase) -> ImplicationBase:
    imps = []
    for a, b in base.implications:
        for i in bits(b & ~a):
            imps.append(Implication(a, 1 << i))
    return base.derive(imps)


def is_unit(base: ImplicationBase) -> bool:
    return all(b.bit_count() == 1 and not a & b for a, b in base.implications)


def _unit(base: ImplicationBase) -> ImplicationBase:
    return base if is_unit(base) else unit_expand(base)


def restrict(base: ImplicationBase, subset) -> ImplicationBase:
    """Sub-base of unit implications lying entirely inside ``subset``."""
    sub = base.mask(subset)
    imps = [imp for imp in _unit(base).implications if is_subset(imp.premise | imp.conclusion, sub)]
    return base.derive(imps, ground=sub)


def check_bipartition(base: ImplicationBase, u1: int, u2: int) -> None:
    if u1 & u2:
        raise BadBipartition("sides overlap")
    if not u1 or not u2:
        raise BadBipartition("empty side")
    if u1 | u2 != base.ground:
        raise BadBipartition("sides do not cover the ground set")


def straddling(base: ImplicationBase, u1: int) -> list[Implication]:
    """Unit implications whose premise meets ``u1`` and its complement."""
    u2 = base.ground & ~u1
    return [imp for imp in _unit(base).implications if imp.premise & u1 and imp.premise & u2]


def bipartite_part(base: ImplicationBase, u1, u2) -> ImplicationBase:
    """Cross implications of the split ``(u1, u2)``; raises NotASplit otherwise."""
    u1, u2 = base.mask(u1), base.mask(u2)
    check_bipartition(base, u1, u2)
    imps = []
    for imp in _unit(base).implications:
        a, b = imp
        if a & u1 and a & u2:
            raise NotASplit(imp, f"not a split: {base.format_implication(imp)}")
        if (is_subset(a, u1) and b & u2) or (is_subset(a, u2) and b & u1):
            imps.append(imp)
    return base.derive(imps)


# -- set families ------------------------------------------------------------


def trace(family: Iterable[int], subset: int) -> frozenset[int]:
    return frozenset(s & subset for s in family)


def minimal(family: Iterable[int]) -> frozenset[int]:
    """Inclusion-minimal members."""
    members = sorted(set(family), key=int.bit_count)
    kept: list[int] = []
    for s in members:
        if not any(is_subset(k, s) for k in kept):
            kept.append(s)
    return frozenset(kept)


def maximal(family: Iterable[int]) -> frozenset[int]:
    """Inclusion-maximal members."""
    members = sorted(set(family), key=int.bit_count, reverse=True)
    kept: list[int] = []
    for s in members:
        if not any(is_subset(s, k) for k in kept):
            kept.append(s)
    return frozenset(kept)


def is_antichain(family: Iterable[int]) -> bool:
    members = list(set(family))
    return all(not is_subset(a, b) for a in members for b in members if a != b)


def sorted_family(family: Iterable[int]) -> list[int]:
    """Deterministic output order: by size, then by element indices."""
    return sorted(set(family), key=lambda s: (s.bit_count(), list(bits(s))))


def family_tokens(base: ImplicationBase, family: Iterable[int]) -> set[frozenset[str]]:
    return {frozenset(base.tokens(s)) for s in family}

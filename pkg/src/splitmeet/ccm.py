"""Meet-irreducible closed sets from an implicational base.

The base is decomposed by acyclic splits ``(U1, U2)``.  With ``M1`` and ``M2``
the meet-irreducibles of the two sides, the meet-irreducibles of the whole are

* ``M1 | U2`` for every ``M1`` (type 1), and
* the maximal closed sets whose trace on ``U2`` is ``M2``, for every ``M2``
  (type 2).

The maximal extensions of ``M2`` are found by dualizing, inside the closure
system of the ``U1`` side, the minimal closed sets that force a head outside
``M2``.  Sub-bases with no acyclic split are handed to the brute-force oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from .core import ImplicationBase, bits, normalize, restrict, sorted_family, unit_expand
from .dualization import ldual, negative_border
from .oracle import DEFAULT_BUDGET, meet_irreducibles_oracle
from .splits import SplitKind, SplitReport, component_condensation, is_split
from .trees import ElementLeaf, EmptyTree, FactorLeaf, Node, build_acyclic_tree


class Origin(enum.Enum):
    TYPE1 = "Type1"
    TYPE2 = "Type2"
    LEAF = "LeafOracle"


@dataclass(frozen=True)
class MeetSet:
    origin: dict                  # closed set mask -> Origin

    @property
    def sets(self) -> frozenset[int]:
        return frozenset(self.origin)

    def __len__(self) -> int:
        return len(self.origin)

    def __iter__(self):
        return iter(sorted_family(self.origin))


@dataclass
class CCMTrace:
    """Optional record of the intermediate steps, for verification."""

    combines: list = field(default_factory=list)   # (u1, u2, |M1|, |M2|, |M|)
    duals: list = field(default_factory=list)      # (i1, bminus, bplus)
    strategy: str = ""


@dataclass(frozen=True)
class LayeredPartition:
    blocks: tuple[int, ...]


def max_ext(split: SplitReport, m1: Iterable[int], c2: int,
            trace: Optional[CCMTrace] = None) -> frozenset[int]:
    """Maximal closed sets whose trace on ``split.u2`` equals ``c2``."""
    if split.kind is not SplitKind.ACYCLIC:
        raise ValueError("maximal extensions need an acyclic split")
    bminus = negative_border(split.i1, split.ibip, c2)
    bplus = ldual(split.i1, m1, bminus)
    if trace is not None:
        trace.duals.append((split.i1, bminus, bplus))
    return frozenset(p | c2 for p in bplus)


def combine_meets(split: SplitReport, m1: Iterable[int], m2: Iterable[int],
                  trace: Optional[CCMTrace] = None) -> MeetSet:
    m1, m2 = frozenset(m1), frozenset(m2)
    origin = {m | split.u2: Origin.TYPE1 for m in m1}
    for c2 in m2:
        for c in max_ext(split, m1, c2, trace):
            # type 1 sets contain all of U2, type 2 sets miss part of it
            assert c not in origin
            origin[c] = Origin.TYPE2
    assert len(origin) >= len(m1) + len(m2)
    if trace is not None:
        trace.combines.append((split.u1, split.u2, len(m1), len(m2), len(origin)))
    return MeetSet(origin)


def _leaf_meets(base: ImplicationBase, budget: int) -> MeetSet:
    if base.n == 1:
        return MeetSet({0: Origin.LEAF})
    return MeetSet(dict.fromkeys(meet_irreducibles_oracle(base, budget), Origin.LEAF))


def ccm_tree(base: ImplicationBase, budget: int = DEFAULT_BUDGET,
             trace: Optional[CCMTrace] = None) -> MeetSet:
    """Recursion over the acyclic-split tree, evaluated bottom-up."""
    base = unit_expand(normalize(base))
    tree = build_acyclic_tree(base)
    if isinstance(tree, EmptyTree):
        return MeetSet({})
    pending = [(tree, base, False)]
    done: list[MeetSet] = []
    while pending:
        t, b, expanded = pending.pop()
        if isinstance(t, (ElementLeaf, FactorLeaf)):
            done.append(_leaf_meets(b, budget))
            continue
        assert isinstance(t, Node)
        split = is_split(b, t.u1, t.u2)
        if expanded:
            m1, m2 = done.pop(), done.pop()
            done.append(combine_meets(split, m1.sets, m2.sets, trace))
            continue
        pending.append((t, b, True))
        pending.append((t.left, split.i1, False))
        pending.append((t.right, split.i2, False))
    return done[0]


def detect_layering(base: ImplicationBase) -> Optional[LayeredPartition]:
    """Premise-connected blocks in topological order, if every implication
    points from its premise block to a later block."""
    cond = component_condensation(base)
    if cond.internal:
        return None
    graph = cond.graph()
    if not nx.is_directed_acyclic_graph(graph):
        return None
    order = nx.lexicographical_topological_sort(graph)
    return LayeredPartition(tuple(cond.partition.blocks[k] for k in order))


def _boolean_meets(ground: int) -> frozenset[int]:
    return frozenset(ground & ~(1 << i) for i in bits(ground))


def ccm_layered(base: ImplicationBase, layering: LayeredPartition,
                trace: Optional[CCMTrace] = None) -> MeetSet:
    """Peel blocks front to back; every left side is Boolean."""
    base = unit_expand(normalize(base))
    blocks = layering.blocks
    if not blocks:
        return MeetSet({})
    rest = blocks[-1]
    meets = MeetSet(dict.fromkeys(_boolean_meets(rest), Origin.LEAF))
    for block in reversed(blocks[:-1]):
        sub = restrict(base, block | rest)
        split = is_split(sub, block, rest)
        if split.kind is not SplitKind.ACYCLIC or split.u1 != block:
            raise ValueError("partition is not a layering of the base")
        meets = combine_meets(split, _boolean_meets(block), meets.sets, trace)
        rest |= block
    return meets


def ccm(base: ImplicationBase, strategy: str = "auto", budget: int = DEFAULT_BUDGET,
        trace: Optional[CCMTrace] = None) -> MeetSet:
    """Meet-irreducible closed sets of ``base``.

    ``strategy`` is ``auto`` (layered when possible, else the split tree),
    ``layered``, ``tree`` or ``oracle``.
    """
    if strategy == "oracle":
        chosen = "oracle"
        result = MeetSet(dict.fromkeys(meet_irreducibles_oracle(base, budget), Origin.LEAF))
    elif strategy in ("auto", "layered"):
        layering = detect_layering(base)
        if layering is None and strategy == "layered":
            raise ValueError("base is not layered")
        if layering is None:
            chosen, result = "tree", ccm_tree(base, budget, trace)
        else:
            chosen, result = "layered", ccm_layered(base, layering, trace)
    elif strategy == "tree":
        chosen, result = "tree", ccm_tree(base, budget, trace)
    else:
        raise ValueError(f"unknown strategy {strategy!r}")
    if trace is not None:
        trace.strategy = chosen
    return result

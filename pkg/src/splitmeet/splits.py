"""Premise connectivity, splits and acyclic splits."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

import networkx as nx

from .core import (
    Implication,
    ImplicationBase,
    bits,
    check_bipartition,
    is_subset,
    lowest,
    restrict,
    unit_expand,
)


class UnionFind:
    """Disjoint sets with path compression and union by rank."""

    def __init__(self, items):
        self.parent = {x: x for x in items}
        self.rank = dict.fromkeys(self.parent, 0)

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if self.rank[rx] < self.rank[ry]:
            rx, ry = ry, rx
        self.parent[ry] = rx
        if self.rank[rx] == self.rank[ry]:
            self.rank[rx] += 1
        return True


@dataclass(frozen=True)
class ComponentPartition:
    blocks: tuple[int, ...]       # ordered by smallest element
    block_of: dict               # element index -> position in ``blocks``

    def __len__(self) -> int:
        return len(self.blocks)


def premise_components(base: ImplicationBase) -> ComponentPartition:
    uf = UnionFind(bits(base.ground))
    for a, _ in base.implications:
        members = list(bits(a))
        for x, y in zip(members, members[1:]):
            uf.union(x, y)
    groups: dict[int, int] = {}
    for i in bits(base.ground):
        r = uf.find(i)
        groups[r] = groups.get(r, 0) | (1 << i)
    blocks = tuple(sorted(groups.values(), key=lowest))
    block_of = {i: k for k, blk in enumerate(blocks) for i in bits(blk)}
    return ComponentPartition(blocks, block_of)


def has_split(base: ImplicationBase) -> bool:
    return len(premise_components(base)) >= 2


def find_split(base: ImplicationBase) -> Optional[tuple[int, int]]:
    """Split off the premise-connected component holding the smallest element."""
    parts = premise_components(base)
    if len(parts) < 2:
        return None
    c = parts.blocks[0]
    return c, base.ground & ~c


class SplitKind(enum.Enum):
    NOT_A_SPLIT = "not-a-split"
    SPLIT = "split"
    ACYCLIC = "acyclic-split"


@dataclass(frozen=True)
class SplitReport:
    u1: int
    u2: int
    kind: SplitKind
    i1: Optional[ImplicationBase] = None
    i2: Optional[ImplicationBase] = None
    ibip: Optional[ImplicationBase] = None
    violation: Optional[Implication] = None

    @property
    def is_split(self) -> bool:
        return self.kind is not SplitKind.NOT_A_SPLIT

    @property
    def is_acyclic(self) -> bool:
        return self.kind is SplitKind.ACYCLIC


def is_split(base: ImplicationBase, u1, u2) -> SplitReport:
    """Classify a bipartition.  Acyclic splits come back oriented ``u1 -> u2``."""
    u1, u2 = base.mask(u1), base.mask(u2)
    check_bipartition(base, u1, u2)
    unit = unit_expand(base)
    cross = []
    for imp in unit.implications:
        a = imp.premise
        if a & u1 and a & u2:
            return SplitReport(u1, u2, SplitKind.NOT_A_SPLIT, violation=imp)
        if bool(a & u1) != bool(imp.conclusion & u1):
            cross.append(imp)
    forward = all(is_subset(a, u1) for a, _ in cross)
    backward = all(is_subset(a, u2) for a, _ in cross)
    if not forward and backward:
        u1, u2 = u2, u1
    kind = SplitKind.ACYCLIC if forward or backward else SplitKind.SPLIT
    ibip = unit.derive(cross)
    return SplitReport(u1, u2, kind, restrict(unit, u1), restrict(unit, u2), ibip)


@dataclass(frozen=True)
class Condensation:
    partition: ComponentPartition
    arcs: frozenset              # (block, block) pairs, no self-loops
    internal: frozenset          # blocks holding the head of one of their own implications

    def graph(self) -> nx.DiGraph:
        g = nx.DiGraph()
        g.add_nodes_from(range(len(self.partition)))
        g.add_edges_from(self.arcs)
        return g


def component_condensation(base: ImplicationBase) -> Condensation:
    parts = premise_components(base)
    arcs, internal = set(), set()
    for a, b in base.implications:
        src = parts.block_of[lowest(a)]
        for i in bits(b & ~a):
            dst = parts.block_of[i]
            if dst == src:
                internal.add(src)
            else:
                arcs.add((src, dst))
    return Condensation(parts, frozenset(arcs), frozenset(internal))


def find_acyclic_split(base: ImplicationBase) -> Optional[tuple[int, int]]:
    """An acyclic split ``(u1, u2)`` with every cross implication going u1 -> u2.

    ``u1`` is the source strongly connected component (of the block digraph)
    containing the smallest element; ``u2`` is everything else.
    """
    cond = component_condensation(base)
    graph = cond.graph()
    sccs = list(nx.strongly_connected_components(graph))
    if len(sccs) < 2:
        return None
    dag = nx.condensation(graph, sccs)
    blocks = cond.partition.blocks
    sources = []
    for node in dag.nodes:
        if dag.in_degree(node) == 0:
            mask = 0
            for k in dag.nodes[node]["members"]:
                mask |= blocks[k]
            sources.append(mask)
    u1 = min(sources, key=lowest)
    return u1, base.ground & ~u1

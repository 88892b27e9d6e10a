"""Hypergraph dualization and dualization inside a closure system.

Borders are antichains of closed sets.  The negative border lists the minimal
closed sets that must be avoided; the positive border lists the maximal closed
sets that avoid all of them.
"""

from __future__ import annotations

from typing import Iterable

from .closure import closure
from .core import ImplicationBase, bits, is_subset, maximal, minimal, natural_key
from .errors import InconsistentInput
from .oracle import DEFAULT_BUDGET, enumerate_closed_sets


def min_transversals(edges: Iterable[int]) -> frozenset[int]:
    """Minimal sets hitting every edge (Berge multiplication).

    No edges gives ``{0}``; an empty edge gives no transversal at all.
    """
    edges = minimal(edges)
    if 0 in edges:
        return frozenset()
    transversals = {0}
    for e in sorted(edges, key=lambda m: (m.bit_count(), m)):
        grown = set()
        for t in transversals:
            if t & e:
                grown.add(t)
            else:
                grown.update(t | (1 << i) for i in bits(e))
        transversals = minimal(grown)
    return frozenset(transversals)


def min_transversals_brute(edges: Iterable[int], vertices: int) -> frozenset[int]:
    """Exhaustive search over subsets of ``vertices``; test oracle only."""
    edges = list(edges)
    hits = []
    sub = vertices
    while True:
        if all(sub & e for e in edges):
            hits.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & vertices
    return minimal(hits)


def negative_border(i1: ImplicationBase, ibip: ImplicationBase, c2: int) -> frozenset[int]:
    """Minimal closures (under ``i1``) of cross premises whose head lies outside ``c2``."""
    return minimal(closure(i1, a) for a, b in ibip.implications if b & ~c2)


def ldual(i1: ImplicationBase, m1: Iterable[int], bminus: Iterable[int]) -> frozenset[int]:
    """Maximal closed sets of ``i1`` containing no member of ``bminus``.

    ``m1`` must be the meet-irreducible closed sets of ``i1``.  Any closed set
    avoiding the border misses a minimal transversal ``T`` of it, and for each
    ``t`` in ``T`` lies below a meet-irreducible set missing ``t``; so the answer
    is the maximal intersections of such choices.
    """
    bminus = frozenset(bminus)
    for b in bminus:
        if not is_subset(b, i1.ground) or closure(i1, b) != b:
            raise InconsistentInput(f"border member {i1.format_set(b & i1.ground)} is not closed")
    if not bminus:
        return frozenset([i1.ground])
    transversals = min_transversals(bminus)
    if not i1.implications:
        return frozenset(i1.ground & ~t for t in transversals)
    meets = list(m1)
    avoiding: dict[int, frozenset[int]] = {}
    for i in bits(i1.ground):
        avoiding[i] = maximal(m for m in meets if not m >> i & 1)
    candidates: set[int] = set()
    for t in transversals:
        partial = frozenset([i1.ground])
        for i in bits(t):
            # dominated partial intersections can only give dominated results
            partial = maximal(p & m for p in partial for m in avoiding[i])
            if not partial:
                break
        candidates |= partial
    return maximal(candidates)


def verify_dual(i1: ImplicationBase, bminus: Iterable[int], bplus: Iterable[int],
                budget: int = DEFAULT_BUDGET) -> bool:
    """Exhaustively check that the two borders split the closure system of ``i1``."""
    bminus, bplus = list(bminus), list(bplus)
    for c in enumerate_closed_sets(i1, budget):
        below = any(is_subset(c, p) for p in bplus)
        above = any(is_subset(b, c) for b in bminus)
        if below == above:
            return False
    return True


def parse_hypergraph(text: str) -> tuple[tuple[str, ...], list[int]]:
    """One edge per line, whitespace-separated tokens; ``#`` comments."""
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append([] if line == "{}" else line.split())
    vertices = tuple(sorted({t for r in rows for t in r}, key=natural_key))
    index = {t: i for i, t in enumerate(vertices)}
    return vertices, [sum(1 << index[t] for t in set(r)) for r in rows]

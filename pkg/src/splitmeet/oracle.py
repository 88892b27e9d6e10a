"""Brute-force lattice of closed sets.

Exponential by design.  Used as ground truth in tests and as the fallback
for sub-bases that admit no acyclic split.
"""

from __future__ import annotations

from dataclasses import dataclass

from .closure import closure, is_model
from .core import ImplicationBase, bits, is_subset, minimal, sorted_family
from .errors import BudgetExceeded, GroundOverlap, NotClosed

DEFAULT_BUDGET = 1 << 25


@dataclass(frozen=True)
class ClosureSystem:
    ground: int
    closed_sets: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.closed_sets)

    def __iter__(self):
        return iter(self.closed_sets)

    def __contains__(self, c) -> bool:
        return c in self.members

    @property
    def members(self) -> frozenset[int]:
        m = self.__dict__.get("_members")
        if m is None:
            m = self.__dict__["_members"] = frozenset(self.closed_sets)
        return m


def enumerate_closed_sets(base: ImplicationBase, budget: int = DEFAULT_BUDGET) -> ClosureSystem:
    """All closed sets in lectic order (NextClosure).

    ``budget`` caps the number of closure computations.
    """
    order = list(bits(base.ground))
    calls = 1
    current = closure(base, 0)
    found = [current]
    prefix = [0] * len(order)
    below = 0
    for pos, i in enumerate(order):
        prefix[pos] = below
        below |= 1 << i
    while current != base.ground:
        for pos in range(len(order) - 1, -1, -1):
            i = order[pos]
            bit = 1 << i
            if current & bit:
                continue
            calls += 1
            if calls > budget:
                raise BudgetExceeded(f"closed-set enumeration exceeded {budget} closures")
            candidate = closure(base, (current & prefix[pos]) | bit)
            if not (candidate & ~current) & prefix[pos]:
                current = candidate
                found.append(current)
                break
    return ClosureSystem(base.ground, tuple(found))


def closed_sets_by_filter(base: ImplicationBase, max_n: int = 20) -> ClosureSystem:
    """Second oracle: test every subset of the ground set with ``is_model``."""
    if base.n > max_n:
        raise BudgetExceeded(f"subset filter limited to {max_n} elements")
    g = base.ground
    out = []
    sub = g
    while True:
        if is_model(base, sub):
            out.append(sub)
        if sub == 0:
            break
        sub = (sub - 1) & g
    return ClosureSystem(g, tuple(sorted_family(out)))


def covers_of(cs: ClosureSystem, c: int) -> frozenset[int]:
    """Upper covers of ``c`` in ``cs``."""
    if c not in cs:
        raise NotClosed("set is not a member of the closure system")
    return minimal(d for d in cs if d != c and is_subset(c, d))


def _covers_by_closure(base: ImplicationBase, c: int) -> frozenset[int]:
    return minimal(closure(base, c | (1 << i)) for i in bits(base.ground & ~c))


def meet_irreducibles_oracle(base: ImplicationBase, budget: int = DEFAULT_BUDGET,
                             cs: ClosureSystem | None = None) -> frozenset[int]:
    """Closed sets with exactly one upper cover."""
    if cs is None:
        cs = enumerate_closed_sets(base, budget)
    return frozenset(c for c in cs if len(_covers_by_closure(base, c)) == 1)


def meet_irreducibles_of_family(cs: ClosureSystem) -> frozenset[int]:
    """Same as above but using only the family (no base needed)."""
    out = set()
    for c in cs:
        if c != cs.ground and len(covers_of(cs, c)) == 1:
            out.add(c)
    return frozenset(out)


def extensions_oracle(base: ImplicationBase, c2, u2, cs: ClosureSystem | None = None,
                      budget: int = DEFAULT_BUDGET) -> frozenset[int]:
    """Closed sets whose trace on ``u2`` is exactly ``c2``."""
    c2, u2 = base.mask(c2), base.mask(u2)
    if closure(base, u2) != u2:
        raise NotClosed("u2 is not closed")
    if not is_subset(c2, u2) or closure(base, c2) != c2:
        raise NotClosed("c2 is not a closed subset of u2")
    if cs is None:
        cs = enumerate_closed_sets(base, budget)
    return frozenset(c for c in cs if c & u2 == c2)


def ideal_of(cs: ClosureSystem, c: int) -> frozenset[int]:
    if c not in cs:
        raise NotClosed("set is not a member of the closure system")
    return frozenset(d for d in cs if is_subset(d, c))


def filter_of(cs: ClosureSystem, c: int) -> frozenset[int]:
    if c not in cs:
        raise NotClosed("set is not a member of the closure system")
    return frozenset(d for d in cs if is_subset(c, d))


def direct_product(cs1: ClosureSystem, cs2: ClosureSystem) -> ClosureSystem:
    if cs1.ground & cs2.ground:
        raise GroundOverlap("ground sets are not disjoint")
    sets = [a | b for a in cs1 for b in cs2]
    return ClosureSystem(cs1.ground | cs2.ground, tuple(sorted_family(sets)))


def recompose(meets, ground: int) -> frozenset[int]:
    """All intersections of subfamilies of ``meets`` (the empty one gives ``ground``)."""
    closed = {ground}
    for m in meets:
        closed |= {c & m for c in closed}
    return frozenset(closed)


def extensions_grow(cs: ClosureSystem, u2: int, restricted: bool = False) -> bool:
    """Do the ``U1`` traces of extensions grow with the ``U2`` side?

    For a closed ``u2`` this holds exactly when ``(U \\ u2, u2)`` is an acyclic
    split of ``cs``.  With ``restricted`` each ``C2`` is only compared with the
    meet-irreducibles of the ideal of ``u2`` above it, and with ``u2`` itself.
    """
    if u2 not in cs:
        raise NotClosed("u2 is not closed")
    u1 = cs.ground & ~u2
    lower = ClosureSystem(u2, tuple(c for c in cs if is_subset(c, u2)))
    ext: dict[int, set[int]] = {c2: set() for c2 in lower}
    for c in cs:
        ext[c & u2].add(c & u1)
    meets = meet_irreducibles_of_family(lower)
    for c2 in lower:
        if restricted:
            above = [m for m in meets if is_subset(c2, m)] + [u2]
        else:
            above = [d for d in lower if is_subset(c2, d)]
        if any(not ext[c2] <= ext[d] for d in above):
            return False
    return True

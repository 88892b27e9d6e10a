"""Closure operator of an implicational base (forward chaining)."""

from __future__ import annotations

from .core import Implication, ImplicationBase, bits, is_subset
from .errors import GroundMismatch


class _Index:
    """Premise counters and element watch lists for linear-time chaining."""

    __slots__ = ("counts", "watch", "conclusions", "empty_fire")

    def __init__(self, base: ImplicationBase):
        self.counts = [a.bit_count() for a, _ in base.implications]
        self.conclusions = [b for _, b in base.implications]
        self.watch: dict[int, list[int]] = {}
        for k, (a, _) in enumerate(base.implications):
            for i in bits(a):
                self.watch.setdefault(i, []).append(k)
        self.empty_fire = 0
        for k, c in enumerate(self.counts):
            if c == 0:
                self.empty_fire |= self.conclusions[k]


def _index(base: ImplicationBase) -> _Index:
    # bases are immutable; the index is memoized on the instance
    idx = base.__dict__.get("_chain_index")
    if idx is None:
        idx = base.__dict__["_chain_index"] = _Index(base)
    return idx


def closure(base: ImplicationBase, seed) -> int:
    """Least superset of ``seed`` that models ``base``.

    Each implication keeps a counter of premise elements still missing; when it
    drops to zero the conclusion is added.  Total work is linear in the size
    of the base.
    """
    x = base.mask(seed)
    idx = _index(base)
    counts = idx.counts.copy()
    watch = idx.watch
    conclusions = idx.conclusions
    x |= idx.empty_fire
    queue = list(bits(x))
    while queue:
        i = queue.pop()
        for k in watch.get(i, ()):
            counts[k] -= 1
            if counts[k] == 0:
                new = conclusions[k] & ~x
                if new:
                    x |= new
                    queue.extend(bits(new))
    return x


def closure_rounds(base: ImplicationBase, seed) -> int:
    """Round-based fixed point iteration; quadratic, kept as an independent check."""
    x = base.mask(seed)
    while True:
        step = x
        for a, b in base.implications:
            if is_subset(a, x):
                step |= b
        if step == x:
            return x
        x = step


def is_model(base: ImplicationBase, x) -> bool:
    x = base.mask(x)
    return all(not is_subset(a, x) or is_subset(b, x) for a, b in base.implications)


def entails(base: ImplicationBase, premise: int, conclusion: int) -> bool:
    return is_subset(conclusion, closure(base, premise))


def equivalent(b1: ImplicationBase, b2: ImplicationBase) -> bool:
    """Whether two bases over the same ground set have the same models."""
    if frozenset(b1.tokens(b1.ground)) != frozenset(b2.tokens(b2.ground)):
        raise GroundMismatch("bases have different ground sets")
    if b1.elements != b2.elements:
        b2 = _reindex(b2, b1)
    return (all(entails(b2, a, b) for a, b in b1.implications)
            and all(entails(b1, a, b) for a, b in b2.implications))


def _reindex(base: ImplicationBase, like: ImplicationBase) -> ImplicationBase:
    def conv(m):
        return like.mask(base.tokens(m))
    return like.derive([Implication(conv(a), conv(b)) for a, b in base.implications], ground=like.ground)

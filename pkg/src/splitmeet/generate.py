"""Seeded random implicational bases."""

from __future__ import annotations

import random
from dataclasses import dataclass, replace
from typing import Iterator

from .core import ImplicationBase
from .errors import GeneratorError

MODES = ("random", "acyclic", "layered", "ranked", "chain")


@dataclass(frozen=True)
class GeneratorSpec:
    n: int
    m: int = 0
    p: int = 2                 # maximum premise size
    mode: str = "random"
    k: int = 2                 # number of blocks for layered / ranked
    seed: int = 0


def layer_blocks(n: int, k: int) -> list[list[int]]:
    """Split ``0..n-1`` into ``k`` contiguous blocks of near-equal size."""
    size, extra = divmod(n, k)
    blocks, start = [], 0
    for i in range(k):
        end = start + size + (1 if i < extra else 0)
        blocks.append(list(range(start, end)))
        start = end
    return blocks


def _reaches(adj: dict[int, set[int]], src: int, targets: set[int]) -> bool:
    seen, stack = {src}, [src]
    while stack:
        v = stack.pop()
        if v in targets:
            return True
        for w in adj.get(v, ()):
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return False


def generate(spec: GeneratorSpec) -> ImplicationBase:
    if spec.mode not in MODES:
        raise GeneratorError(f"unknown mode {spec.mode!r}")
    if spec.n < 1:
        raise GeneratorError("n must be at least 1")
    names = [str(i + 1) for i in range(spec.n)]
    if spec.mode == "chain":
        return ImplicationBase.build(names, [([names[i]], [names[i + 1]]) for i in range(spec.n - 1)])
    if spec.mode in ("layered", "ranked"):
        if spec.k < 2:
            raise GeneratorError(f"{spec.mode} mode needs k >= 2")
        if spec.k > spec.n:
            raise GeneratorError("more blocks than elements")
    if spec.m and spec.n < 2:
        raise GeneratorError("implications need at least two elements")
    if spec.m and spec.p < 1:
        raise GeneratorError("premise size must be at least 1")

    rng = random.Random(spec.seed)
    blocks = layer_blocks(spec.n, spec.k) if spec.mode in ("layered", "ranked") else None
    drawn: set[tuple[frozenset[int], int]] = set()
    order: list[tuple[frozenset[int], int]] = []
    adj: dict[int, set[int]] = {}
    attempts = 0
    limit = 200 * spec.m + 1000
    while len(order) < spec.m:
        attempts += 1
        if attempts > limit:
            raise GeneratorError(f"could not draw {spec.m} distinct implications for {spec}")
        if blocks is None:
            size = rng.randint(1, min(spec.p, spec.n - 1))
            premise = rng.sample(range(spec.n), size)
            head = rng.choice([v for v in range(spec.n) if v not in premise])
        else:
            i = rng.randrange(spec.k - 1)
            j = i + 1 if spec.mode == "ranked" else rng.randrange(i + 1, spec.k)
            size = rng.randint(1, min(spec.p, len(blocks[i])))
            premise = rng.sample(blocks[i], size)
            head = rng.choice(blocks[j])
        key = (frozenset(premise), head)
        if key in drawn:
            continue
        if spec.mode == "acyclic" and _reaches(adj, head, set(premise)):
            continue
        drawn.add(key)
        order.append(key)
        for v in premise:
            adj.setdefault(v, set()).add(head)
    pairs = [([names[v] for v in sorted(a)], [names[b]]) for a, b in order]
    return ImplicationBase.build(names, pairs)


def random_corpus(count: int, seed: int = 0, max_n: int = 8, max_m: int = 12,
                  p: int = 3) -> Iterator[tuple[GeneratorSpec, ImplicationBase]]:
    """Mixed random bases: ground size 1..max_n, up to max_m implications."""
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(1, max_n)
        m = 0 if n == 1 else rng.randint(0, max_m)
        mode = rng.choice(("random", "random", "acyclic"))
        spec = GeneratorSpec(n=n, m=m, p=p, mode=mode, seed=rng.randrange(2**31))
        try:
            yield spec, generate(spec)
        except GeneratorError:
            spec = replace(spec, m=min(m, n - 1), mode="random")
            yield spec, generate(spec)


def layered_corpus(count: int, seed: int = 0, max_n: int = 8, max_m: int = 12,
                   p: int = 3) -> Iterator[tuple[GeneratorSpec, ImplicationBase]]:
    """Layered and ranked bases small enough for the oracle."""
    rng = random.Random(seed)
    produced = 0
    while produced < count:
        n = rng.randint(2, max_n)
        k = rng.randint(2, min(4, n))
        mode = rng.choice(("layered", "ranked"))
        spec = GeneratorSpec(n=n, m=rng.randint(0, max_m), p=p, mode=mode, k=k,
                             seed=rng.randrange(2**31))
        try:
            base = generate(spec)
        except GeneratorError:
            continue
        produced += 1
        yield spec, base


def exponential_example(k: int) -> ImplicationBase:
    """Pairs of u's force x and y; x and y together force every u."""
    us = [f"u{i}" for i in range(1, k + 1)]
    pairs = []
    for i in range(k):
        for j in range(k):
            if i != j:
                pairs.append(([us[i], us[j]], ["x"]))
                pairs.append(([us[i], us[j]], ["y"]))
    pairs.extend((["x", "y"], [u]) for u in us)
    return ImplicationBase.build(us + ["x", "y"], pairs)

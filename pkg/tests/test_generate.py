import pytest

from splitmeet.ccm import detect_layering
from splitmeet.core import serialize
from splitmeet.errors import GeneratorError
from splitmeet.generate import (
    GeneratorSpec,
    exponential_example,
    generate,
    layer_blocks,
    layered_corpus,
    random_corpus,
)
from splitmeet.splits import component_condensation

import networkx as nx


def test_empty_base():
    base = generate(GeneratorSpec(n=4, m=0, mode="layered", k=2))
    assert base.n == 4 and len(base) == 0


def test_chain():
    base = generate(GeneratorSpec(n=5, mode="chain"))
    assert serialize(base) == "ground: 1 2 3 4 5\n1 -> 2\n2 -> 3\n3 -> 4\n4 -> 5\n"


def test_determinism():
    spec = GeneratorSpec(n=6, m=5, mode="layered", k=3, seed=11)
    assert serialize(generate(spec)) == serialize(generate(spec))
    other = GeneratorSpec(n=6, m=5, mode="layered", k=3, seed=12)
    assert len(generate(other)) == 5


def test_layer_blocks():
    assert layer_blocks(7, 3) == [[0, 1, 2], [3, 4], [5, 6]]


def test_modes_respect_their_shape():
    blocks = layer_blocks(9, 3)
    where = {v: i for i, blk in enumerate(blocks) for v in blk}
    for seed in range(10):
        ranked = generate(GeneratorSpec(n=9, m=8, p=2, mode="ranked", k=3, seed=seed))
        for a, b in ranked.implications:
            src = {where[i] for i in range(9) if a >> i & 1}
            dst = {where[i] for i in range(9) if b >> i & 1}
            assert len(src) == 1 and dst == {src.pop() + 1}
        layered = generate(GeneratorSpec(n=9, m=8, p=2, mode="layered", k=3, seed=seed))
        assert detect_layering(layered) is not None
        acyclic = generate(GeneratorSpec(n=7, m=8, p=2, mode="acyclic", seed=seed))
        g = nx.DiGraph()
        for a, b in acyclic.implications:
            g.add_edges_from((i, j) for i in range(7) if a >> i & 1 for j in range(7) if b >> j & 1)
        assert nx.is_directed_acyclic_graph(g)
        random_ = generate(GeneratorSpec(n=6, m=10, p=3, seed=seed))
        for a, b in random_.implications:
            assert a and not a & b and 1 <= a.bit_count() <= 3
    assert component_condensation(generate(GeneratorSpec(n=4, mode="chain"))).arcs


@pytest.mark.parametrize("spec", [
    GeneratorSpec(n=0),
    GeneratorSpec(n=3, m=1, mode="layered", k=1),
    GeneratorSpec(n=3, m=1, mode="ranked", k=4),
    GeneratorSpec(n=2, m=5, p=1, mode="random"),
    GeneratorSpec(n=3, m=1, mode="nope"),
    GeneratorSpec(n=1, m=1),
])
def test_infeasible_specs(spec):
    with pytest.raises(GeneratorError):
        generate(spec)


def test_corpora():
    a = [serialize(b) for _, b in random_corpus(30, seed=5)]
    assert a == [serialize(b) for _, b in random_corpus(30, seed=5)]
    lay = list(layered_corpus(30, seed=5))
    assert len(lay) == 30
    assert all(spec.mode in ("layered", "ranked") for spec, _ in lay)


def test_exponential_example_shape():
    base = exponential_example(3)
    assert base.n == 5
    assert len(base) == 3 * 2 * 2 + 3

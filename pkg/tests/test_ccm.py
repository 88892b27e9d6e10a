import pytest
from hypothesis import given, settings

from splitmeet.ccm import (
    CCMTrace,
    LayeredPartition,
    Origin,
    ccm,
    ccm_layered,
    ccm_tree,
    combine_meets,
    detect_layering,
    max_ext,
)
from splitmeet.core import compact, restrict
from splitmeet.dualization import verify_dual
from splitmeet.generate import GeneratorSpec, exponential_example, generate
from splitmeet.oracle import (
    enumerate_closed_sets,
    extensions_oracle,
    meet_irreducibles_oracle,
    recompose,
)
from splitmeet.splits import find_acyclic_split, find_split, is_split

from conftest import DG_BASE, EX_INTRO, RUNNING, bases, one, sets


def _running_split():
    return is_split(RUNNING, one(RUNNING, "123"), one(RUNNING, "456"))


def test_max_ext_examples():
    r = _running_split()
    m1 = meet_irreducibles_oracle(r.i1)
    assert max_ext(r, m1, one(RUNNING, "46")) == sets(RUNNING, "346 246")
    assert max_ext(r, m1, one(RUNNING, "56")) == sets(RUNNING, "356 156")
    assert max_ext(r, m1, 0) == sets(RUNNING, "3")
    with pytest.raises(ValueError):
        max_ext(is_split(EX_INTRO, one(EX_INTRO, "123"), one(EX_INTRO, "4")), m1, 0)


def test_running_example_meets():
    r = _running_split()
    m1 = meet_irreducibles_oracle(r.i1)
    m2 = meet_irreducibles_oracle(r.i2)
    assert m2 == sets(RUNNING, "{} 46 56")
    result = combine_meets(r, m1, m2)
    assert result.sets == meet_irreducibles_oracle(RUNNING)
    assert result.origin[one(RUNNING, "23456")] is Origin.TYPE1
    assert result.origin[one(RUNNING, "356")] is Origin.TYPE2
    assert len(result) == 9
    assert ccm(RUNNING).sets == result.sets


def test_direct_product_combine():
    b = compact("12>3 45>6")
    r = is_split(b, one(b, "123"), one(b, "456"))
    m1, m2 = meet_irreducibles_oracle(r.i1), meet_irreducibles_oracle(r.i2)
    result = combine_meets(r, m1, m2)
    assert len(result) == len(m1) + len(m2)
    assert result.sets == meet_irreducibles_oracle(b)


def test_strategies_agree_on_examples():
    for base in (EX_INTRO, RUNNING, DG_BASE, exponential_example(3)):
        ref = meet_irreducibles_oracle(base)
        for strategy in ("auto", "tree", "oracle"):
            assert ccm(base, strategy).sets == ref
    with pytest.raises(ValueError):
        ccm(RUNNING, "nope")
    with pytest.raises(ValueError):
        ccm(DG_BASE, "layered")


def test_intro_meets():
    # the lattice of 12 -> 3, 23 -> 4, 4 -> 1 has five meet-irreducibles
    assert ccm(EX_INTRO).sets == sets(EX_INTRO, "2 3 13 14 134")


def test_empty_and_single():
    assert len(ccm(compact("", ""))) == 0
    single = compact("", "1")
    assert ccm(single).sets == {0}


def test_detect_layering():
    b = compact("12>3 12>4 3>5 4>5")
    lay = detect_layering(b)
    assert lay is not None
    assert lay.blocks[0] == one(b, "12")
    assert lay.blocks[-1] == one(b, "5")
    assert detect_layering(RUNNING) is None       # 12 -> 3 stays inside its block
    assert detect_layering(compact("1>2 2>1")) is None
    trace = CCMTrace()
    assert ccm(b, trace=trace).sets == meet_irreducibles_oracle(b)
    assert trace.strategy == "layered"


def test_layered_rejects_bad_partition():
    b = compact("1>2")
    with pytest.raises(ValueError):
        ccm_layered(b, LayeredPartition((one(b, "2"), one(b, "1"))))


def test_exponential_example():
    for k in range(2, 7):
        base = exponential_example(k)
        assert len(enumerate_closed_sets(base)) == 3 * k + 4
        assert ccm(base).sets == meet_irreducibles_oracle(base)


@settings(max_examples=300, deadline=None)
@given(bases())
def test_ccm_matches_oracle(base):
    trace = CCMTrace()
    result = ccm(base, "tree", trace=trace)
    assert result.sets == meet_irreducibles_oracle(base)
    assert recompose(result.sets, base.ground) == frozenset(enumerate_closed_sets(base))
    for _, _, n1, n2, n in trace.combines:
        assert n >= n1 + n2
    for i1, bminus, bplus in trace.duals:
        assert verify_dual(i1, bminus, bplus)


@settings(max_examples=150, deadline=None)
@given(bases())
def test_meet_origins(base):
    split = find_acyclic_split(base)
    if split is None:
        return
    r = is_split(base, *split)
    result = combine_meets(r, meet_irreducibles_oracle(r.i1), meet_irreducibles_oracle(r.i2))
    for m, origin in result.origin.items():
        if origin is Origin.TYPE1:
            assert m & r.u2 == r.u2
        else:
            assert m & r.u2 != r.u2
            assert m & r.u2 in meet_irreducibles_oracle(r.i2)


@settings(max_examples=150, deadline=None)
@given(bases())
def test_type2_sets_are_maximal_extensions(base):
    split = find_acyclic_split(base)
    if split is None:
        return
    r = is_split(base, *split)
    cs = enumerate_closed_sets(base)
    m1 = meet_irreducibles_oracle(r.i1)
    for c2 in meet_irreducibles_oracle(r.i2):
        ext = extensions_oracle(base, c2, r.u2, cs=cs)
        top = {c for c in ext if not any(c != d and c & ~d == 0 for d in ext)}
        assert max_ext(r, m1, c2) == top


@settings(max_examples=100, deadline=None)
@given(bases())
def test_layered_generator_bases(base):
    layering = detect_layering(base)
    if layering is None:
        return
    assert ccm_layered(base, layering).sets == meet_irreducibles_oracle(base)


def test_generated_layered_instances():
    for seed in range(20):
        base = generate(GeneratorSpec(n=8, m=8, p=2, mode="layered", k=3, seed=seed))
        assert detect_layering(base) is not None
        trace = CCMTrace()
        assert ccm(base, trace=trace).sets == meet_irreducibles_oracle(base)
        assert trace.strategy == "layered"


def test_split_restricts_cleanly():
    # components of a plain split are restrictions of the whole
    found = find_split(RUNNING)
    assert found is None or restrict(RUNNING, found[0]).ground == found[0]
    assert ccm_tree(RUNNING).sets == meet_irreducibles_oracle(RUNNING)

import pytest
from hypothesis import given, settings
import hypothesis.strategies as st

from splitmeet.closure import closure
from splitmeet.core import is_subset, maximal, minimal
from splitmeet.dualization import (
    ldual,
    min_transversals,
    min_transversals_brute,
    negative_border,
    parse_hypergraph,
    verify_dual,
)
from splitmeet.errors import InconsistentInput
from splitmeet.oracle import enumerate_closed_sets, meet_irreducibles_oracle
from splitmeet.splits import find_acyclic_split, is_split

from conftest import RUNNING, bases, one, sets


def test_min_transversals_examples():
    assert min_transversals([0b011, 0b110]) == {0b010, 0b101}
    assert min_transversals([]) == {0}
    assert min_transversals([0]) == frozenset()
    assert min_transversals([0b001, 0b011]) == {0b001}
    # a triangle needs two of its three corners
    assert min_transversals([0b011, 0b110, 0b101]) == {0b011, 0b110, 0b101}


def test_parse_hypergraph():
    vertices, edges = parse_hypergraph("a b\n# comment\nb c\n{}\n")
    assert vertices == ("a", "b", "c")
    assert edges == [0b011, 0b110, 0]


hypergraphs = st.lists(st.integers(1, 255), max_size=7)


@settings(max_examples=200, deadline=None)
@given(hypergraphs)
def test_transversals_match_brute_force(edges):
    assert min_transversals(edges) == min_transversals_brute(edges, 255)


@settings(max_examples=200, deadline=None)
@given(hypergraphs)
def test_transversal_involution(edges):
    assert min_transversals(min_transversals(edges)) == minimal(edges)


def _side(base=RUNNING):
    u1, u2 = find_acyclic_split(base)
    return is_split(base, u1, u2)


def test_negative_border_running_example():
    r = _side()
    # cross heads outside 46: 5 from 23 and from 1
    assert negative_border(r.i1, r.ibip, one(RUNNING, "46")) == sets(RUNNING, "1 23")
    assert negative_border(r.i1, r.ibip, r.u2) == frozenset()
    assert negative_border(r.i1, r.ibip, 0) == sets(RUNNING, "1 2")


def test_ldual_running_example():
    r = _side()
    m1 = meet_irreducibles_oracle(r.i1)
    assert m1 == sets(RUNNING, "1 13 2 23")
    # 46 extends to 346 and 246
    assert ldual(r.i1, m1, sets(RUNNING, "1 23")) == sets(RUNNING, "3 2")
    assert ldual(r.i1, m1, frozenset()) == {r.u1}
    assert ldual(r.i1, m1, sets(RUNNING, "1 2")) == sets(RUNNING, "3")


def test_ldual_rejects_open_border():
    r = _side()
    with pytest.raises(InconsistentInput):
        ldual(r.i1, meet_irreducibles_oracle(r.i1), sets(RUNNING, "12"))


def test_verify_dual_examples():
    r = _side()
    assert verify_dual(r.i1, sets(RUNNING, "1 23"), sets(RUNNING, "3 2"))
    assert not verify_dual(r.i1, sets(RUNNING, "1 23"), sets(RUNNING, "3"))


def _reference_dual(i1, bminus):
    free = [c for c in enumerate_closed_sets(i1) if not any(is_subset(b, c) for b in bminus)]
    return maximal(free)


@settings(max_examples=200, deadline=None)
@given(bases(max_n=6), st.data())
def test_ldual_matches_reference(base, data):
    closed = list(enumerate_closed_sets(base))
    picks = data.draw(st.lists(st.sampled_from(closed), max_size=4))
    bminus = minimal(picks)
    m1 = meet_irreducibles_oracle(base)
    got = ldual(base, m1, bminus)
    assert got == _reference_dual(base, bminus)
    assert verify_dual(base, bminus, got)
    for p in got:
        assert closure(base, p) == p


@settings(max_examples=100, deadline=None)
@given(bases(max_n=7))
def test_border_on_split_sides(base):
    split = find_acyclic_split(base)
    if split is None:
        return
    r = is_split(base, *split)
    i2_closed = enumerate_closed_sets(r.i2)
    m1 = meet_irreducibles_oracle(r.i1)
    for c2 in i2_closed:
        bminus = negative_border(r.i1, r.ibip, c2)
        left = [c for c in enumerate_closed_sets(r.i1)
                if closure(base, c | c2) & r.u2 == c2 and closure(base, c | c2) & r.u1 == c]
        # negative border is the minimal left sets whose union with c2 is not closed
        bad = [c for c in enumerate_closed_sets(r.i1) if c not in left]
        assert bminus == minimal(bad)
        assert ldual(r.i1, m1, bminus) == maximal(left)

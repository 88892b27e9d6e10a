from functools import lru_cache

import hypothesis.strategies as st
import pytest

from splitmeet.core import ImplicationBase, compact, restrict, unit_expand
from splitmeet.splits import is_split, premise_components
from splitmeet.trees import leaf_signature

# Bases from the worked examples, single-character elements.
EX_INTRO = compact("12>3 23>4 4>1")
EX_SPLIT = compact("12>3 3>1 56>2 23>7 45>6 5>7")
EX_NO_SPLIT = compact("12>3 13>2")
EX_HIDDEN = compact("12>3 13>2 23>4")
EX_MULTI = compact("12>3 23>4 34>5 56>7 67>8")
EX_FACTORS = compact("45>1 12>3 23>1 13>2 3>6 1>4")
RUNNING = compact("12>3 13>4 23>5 2>4 1>5 5>6 4>6")
DG_BASE = compact("1>4 124>3 3>4")
DG_EQUIV = compact("1>4 12>3 3>4")


def sets(base: ImplicationBase, spec: str) -> frozenset:
    """``sets(b, "2 14 {} 134")`` -> family of masks; ``{}`` is the empty set."""
    return frozenset(0 if w == "{}" else base.mask(list(w)) for w in spec.split())


def one(base: ImplicationBase, word: str) -> int:
    return 0 if word == "{}" else base.mask(list(word))


@st.composite
def bases(draw, max_n=7, max_m=10, max_premise=3):
    """Random bases over elements "1".."n"; premises non-empty, heads outside."""
    n = draw(st.integers(1, max_n))
    names = [str(i + 1) for i in range(n)]
    pairs = []
    if n >= 2:
        for _ in range(draw(st.integers(0, max_m))):
            premise = draw(st.lists(st.sampled_from(names), min_size=1,
                                    max_size=min(max_premise, n - 1), unique=True))
            rest = [x for x in names if x not in premise]
            head = draw(st.lists(st.sampled_from(rest), min_size=1, max_size=2, unique=True))
            pairs.append((premise, head))
    return ImplicationBase.build(names, pairs)


@st.composite
def subsets(draw, base):
    return draw(st.integers(0, base.ground)) & base.ground


# -- exhaustive reference searches --------------------------------------------


def _anonymous(ground, imps):
    return ImplicationBase(tuple(str(i) for i in range(max(ground.bit_length(), 1))), ground, imps)


@lru_cache(maxsize=None)
def _decomposable(ground, imps):
    if ground.bit_count() <= 1:
        return True
    base = _anonymous(ground, imps)
    idx = [i for i in range(ground.bit_length()) if ground >> i & 1]
    # u1 always holds the first element; masks stop short of the full set
    for mask in range(1, (1 << len(idx)) - 1, 2):
        u1 = sum(1 << idx[k] for k in range(len(idx)) if mask >> k & 1)
        rep = is_split(base, u1, ground & ~u1)
        if rep.is_split and _decomposable(rep.u1, rep.i1.implications) \
                and _decomposable(rep.u2, rep.i2.implications):
            return True
    return False


def decomposable_exhaustive(base: ImplicationBase) -> bool:
    """Try every bipartition at every level: can the base split down to elements?"""
    unit = unit_expand(base)
    return _decomposable(unit.ground, unit.implications)


@lru_cache(maxsize=None)
def _signatures(elements, ground, imps):
    base = ImplicationBase(elements, ground, imps)
    if ground.bit_count() <= 1:
        return frozenset([tuple(("element", i) for i in range(ground.bit_length()) if ground >> i & 1)])
    parts = premise_components(base)
    if len(parts) == 1:
        return frozenset([(("factor", base.canonical()),)])
    out = set()
    for c in parts.blocks:
        left, right = restrict(base, c), restrict(base, ground & ~c)
        for s1 in _signatures(elements, left.ground, left.implications):
            for s2 in _signatures(elements, right.ground, right.implications):
                out.add(tuple(sorted(s1 + s2, key=repr)))
    return frozenset(out)


def all_leaf_signatures(base: ImplicationBase) -> frozenset:
    """Leaf multisets over every possible sequence of component choices."""
    unit = unit_expand(base)
    return _signatures(unit.elements, unit.ground, unit.implications)


def signature_of(tree) -> tuple:
    return tuple(leaf_signature(tree))


# -- acceptance summary -------------------------------------------------------

# criterion -> (title, [(part, ok, detail)])
ACCEPTANCE: dict = {}


@pytest.fixture
def record_criterion():
    def record(criterion, title, part, ok, detail=""):
        ACCEPTANCE.setdefault(criterion, (title, []))[1].append((part, bool(ok), detail))
    return record


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(ACCEPTANCE):
        title, parts = ACCEPTANCE[key]
        failed = [f"{p} ({d})" if d else p for p, ok, d in parts if not ok]
        status = "FAIL" if failed else "PASS"
        line = f"[{status}] criterion {key}: {title} - {len(parts) - len(failed)}/{len(parts)} checks"
        if failed:
            line += "; failing: " + "; ".join(failed)
        terminalreporter.write_line(line)

"""Decomposition trees (IS-trees) built from splits.

A tree is made of :class:`Node` (a split, labelled by its cross implications),
:class:`ElementLeaf` and :class:`FactorLeaf` (a sub-base with no usable split).
Children are stored ``(side u1, side u2)`` but compared as unordered.
"""

from __future__ import annotations

import bisect
import json
import sys
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Union

from .core import (
    Implication,
    ImplicationBase,
    bits,
    is_subset,
    lowest,
    natural_key,
    restrict,
    unit_expand,
)
from .splits import UnionFind, find_acyclic_split


@dataclass(frozen=True)
class ElementLeaf:
    element: int                      # bit index

    @property
    def ground(self) -> int:
        return 1 << self.element


@dataclass(frozen=True)
class FactorLeaf:
    base: ImplicationBase

    @property
    def ground(self) -> int:
        return self.base.ground


@dataclass(frozen=True)
class Node:
    u1: int
    u2: int
    label: frozenset                  # of Implication
    left: "Tree"
    right: "Tree"
    acyclic: bool = False

    @property
    def ground(self) -> int:
        return self.u1 | self.u2


class EmptyTree:
    """Tree of the empty ground set."""

    ground = 0

    def __repr__(self) -> str:
        return "EMPTY"


EMPTY = EmptyTree()

Tree = Union[Node, ElementLeaf, FactorLeaf, EmptyTree]
# picks one block from the premise-connected blocks, ordered by smallest element
Chooser = Callable[[Sequence[int]], int]


def smallest_block(blocks: Sequence[int]) -> int:
    return blocks[0]


def _grow(base: ImplicationBase, step) -> Optional[Tree]:
    """Post-order construction with an explicit stack (chains can be deep).

    ``step(base)`` returns a finished subtree, ``None`` for failure, or a tuple
    ``(u1, u2, acyclic)`` describing the split to apply.
    """
    pending = [(base, None)]
    done: list = []
    while pending:
        b, split = pending.pop()
        if split is not None:
            right, left = done.pop(), done.pop()
            u1, u2, acyclic = split
            label = frozenset(b.implications) - set(left[1].implications) - set(right[1].implications)
            done.append((Node(u1, u2, label, left[0], right[0], acyclic), b))
            continue
        if b.ground == 0:
            done.append((EMPTY, b))
            continue
        if b.n == 1:
            done.append((ElementLeaf(b.ground.bit_length() - 1), b))
            continue
        outcome = step(b)
        if outcome is None:
            return None
        if not isinstance(outcome, tuple):
            done.append((outcome, b))
            continue
        u1, u2, _ = outcome
        pending.append((b, outcome))
        pending.append((restrict(b, u2), None))
        pending.append((restrict(b, u1), None))
    return done[0][0]


class _Blocks:
    """Premise-connected blocks of every pending sub-base, kept up to date.

    Sub-bases waiting on the stack have disjoint ground sets, so one table of
    block contents and one element-to-block map serve all of them.
    """

    def __init__(self, unit: ImplicationBase):
        self.unit = unit
        self.position = {imp: k for k, imp in enumerate(unit.implications)}
        self.by_head: dict[int, list[Implication]] = {}
        for imp in unit.implications:
            self.by_head.setdefault(imp.conclusion, []).append(imp)
        self.owner: dict[int, int] = {}            # element bit -> block mask
        self.imps: dict[int, list[Implication]] = {}  # block mask -> its implications

    def partition(self, ground: int, imps: list) -> list[int]:
        """Blocks of ``imps`` over ``ground``, ordered by smallest element."""
        uf = UnionFind(bits(ground))
        for a, _ in imps:
            first = lowest(a)
            for i in bits(a & (a - 1)):
                uf.union(first, i)
        groups: dict[int, int] = {}
        for i in bits(ground):
            r = uf.find(i)
            groups[r] = groups.get(r, 0) | (1 << i)
        blocks = sorted(groups.values(), key=lowest)
        for blk in blocks:
            self.imps[blk] = []
            for i in bits(blk):
                self.owner[1 << i] = blk
        for imp in imps:
            self.imps[self.owner[imp.premise & -imp.premise]].append(imp)
        return blocks

    def factor(self, ground: int) -> ImplicationBase:
        imps = sorted(self.imps[ground], key=self.position.__getitem__)
        return self.unit.derive(imps, ground=ground)

    def split_off(self, c: int, rest: int, blocks: list[int]):
        """Remove block ``c`` from ``blocks`` (which becomes the ``rest`` side).

        Returns the node label and the blocks of the ``c`` side.
        """
        own = self.imps.pop(c)
        label = [imp for imp in own if not imp.conclusion & c]
        inner = [imp for imp in own if imp.conclusion & c]
        lost: dict[int, set] = {}
        for i in bits(c):
            for imp in self.by_head.get(1 << i, ()):
                if imp.premise & ~rest == 0:
                    label.append(imp)
                    lost.setdefault(self.owner[imp.premise & -imp.premise], set()).add(imp)
        blocks.remove(c)
        for k, gone in lost.items():
            kept = [imp for imp in self.imps.pop(k) if imp not in gone]
            blocks.remove(k)
            for piece in self.partition(k, kept):
                bisect.insort(blocks, piece, key=lowest)
        return frozenset(label), self.partition(c, inner)


def _component_grow(base: ImplicationBase, choose: Chooser, strict: bool) -> Optional[Tree]:
    """Split off one premise-connected block per node, bottom-up with a stack.

    Only blocks that lose an implication to the split are re-partitioned, so
    long chains stay close to linear.
    """
    unit = unit_expand(base)
    if unit.ground == 0:
        return EMPTY
    table = _Blocks(unit)
    pending: list = [(unit.ground, table.partition(unit.ground, list(unit.implications)), None)]
    done: list = []
    while pending:
        ground, blocks, node = pending.pop()
        if node is not None:
            right, left = done.pop(), done.pop()
            c, rest, label = node
            done.append(Node(c, rest, label, left, right))
            continue
        if ground & (ground - 1) == 0:
            table.imps.pop(ground, None)
            done.append(ElementLeaf(ground.bit_length() - 1))
            continue
        if len(blocks) == 1:
            if strict:
                return None
            done.append(FactorLeaf(table.factor(ground)))
            continue
        c = choose(blocks)
        rest = ground & ~c
        label, inner = table.split_off(c, rest, blocks)
        pending.append((ground, None, (c, rest, label)))
        pending.append((rest, blocks, None))
        pending.append((c, inner, None))
    return done[0]


def build_tree(base: ImplicationBase, choose: Chooser = smallest_block) -> Optional[Tree]:
    """A tree with element leaves only, or ``None`` when the base is H-indecomposable."""
    return _component_grow(base, choose, strict=True)


def h_build_tree(base: ImplicationBase, choose: Chooser = smallest_block) -> Tree:
    """Like :func:`build_tree` but premise-connected sub-bases become factor leaves."""
    return _component_grow(base, choose, strict=False)


def _acyclic_step(b):
    split = find_acyclic_split(b)
    if split is None:
        return FactorLeaf(b)
    return split[0], split[1], True


def build_acyclic_tree(base: ImplicationBase) -> Tree:
    """Recursive decomposition by acyclic splits (oriented u1 -> u2)."""
    return _grow(unit_expand(base), _acyclic_step)


# -- inspection ---------------------------------------------------------------


def leaves(tree: Tree) -> list:
    out, stack = [], [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Node):
            stack.append(t.right)
            stack.append(t.left)
        elif not isinstance(t, EmptyTree):
            out.append(t)
    return out


def nodes(tree: Tree) -> list[Node]:
    """Interior nodes in pre-order."""
    out, stack = [], [tree]
    while stack:
        t = stack.pop()
        if isinstance(t, Node):
            out.append(t)
            stack.append(t.right)
            stack.append(t.left)
    return out


def h_factors(tree: Tree) -> list[ImplicationBase]:
    return [leaf.base for leaf in leaves(tree) if isinstance(leaf, FactorLeaf)]


def leaf_signature(base_or_tree) -> list:
    """Universe-independent multiset of leaf labels, for comparing trees."""
    out = []
    for leaf in leaves(base_or_tree):
        if isinstance(leaf, ElementLeaf):
            out.append(("element", leaf.element))
        else:
            out.append(("factor", leaf.base.canonical()))
    return sorted(out, key=repr)


def validate_tree(base: ImplicationBase, tree: Tree) -> tuple[bool, str]:
    """Check the IS-tree conditions; returns ``(ok, first violation or "")``."""
    unit = unit_expand(base)
    wanted = set(unit.implications)
    if isinstance(tree, EmptyTree):
        if base.ground or wanted:
            return False, "condition 4: empty tree for a non-empty base"
        return True, ""
    seen_elements = 0
    placed: list[Implication] = []

    def check(t) -> Optional[str]:
        nonlocal seen_elements
        if isinstance(t, ElementLeaf):
            bit = 1 << t.element
            if not bit & base.ground:
                return f"condition 1: leaf element {t.element} outside the ground set"
            if seen_elements & bit:
                return f"condition 4: element {base.format_set(bit)} on two leaves"
            seen_elements |= bit
            return None
        if isinstance(t, FactorLeaf):
            if t.ground & seen_elements:
                return "condition 4: factor leaf repeats an element"
            seen_elements |= t.ground
            placed.extend(set(t.base.implications))
            return None
        if isinstance(t, EmptyTree):
            return "full binary tree: empty subtree below a node"
        for sub, side in ((t.left, t.u1), (t.right, t.u2)):
            if sub.ground != side:
                return "node sides do not match the children's elements"
        for imp in t.label:
            if imp not in wanted:
                return f"condition 2: {base.format_implication(imp)} is not in the base"
            a, b = imp
            if is_subset(a, t.u1) and b & t.u2:
                continue
            if is_subset(a, t.u2) and b & t.u1:
                if t.acyclic:
                    return f"acyclic orientation: {base.format_implication(imp)} goes u2 -> u1"
                continue
            return f"condition 3: {base.format_implication(imp)} is not separated by the node"
        placed.extend(t.label)
        return None

    stack = [tree]
    while stack:
        t = stack.pop()
        problem = check(t)
        if problem:
            return False, problem
        if isinstance(t, Node):
            stack.append(t.right)
            stack.append(t.left)
    if seen_elements != base.ground:
        return False, f"condition 4: elements {base.format_set(base.ground & ~seen_elements)} have no leaf"
    if len(placed) != len(set(placed)):
        return False, "condition 4: an implication labels two nodes"
    if set(placed) != wanted:
        missing = wanted - set(placed)
        return False, "condition 4: unplaced implications " + ", ".join(
            base.format_implication(i) for i in sorted(missing))
    return True, ""


# -- JSON -----------------------------------------------------------------------


def _sorted_tokens(base, mask):
    return sorted(base.tokens(mask), key=natural_key)


def _imp_json(base, imp):
    return {"premise": _sorted_tokens(base, imp.premise),
            "conclusion": _sorted_tokens(base, imp.conclusion)}


def tree_to_json(base: ImplicationBase, tree: Tree):
    if isinstance(tree, EmptyTree):
        return None
    if isinstance(tree, ElementLeaf):
        return {"element": base.elements[tree.element]}
    if isinstance(tree, FactorLeaf):
        f = tree.base
        return {"factor": {"ground": _sorted_tokens(base, f.ground),
                           "implications": [_imp_json(base, i) for i in sorted(set(f.implications))]}}
    return {
        "split": {"u1": _sorted_tokens(base, tree.u1), "u2": _sorted_tokens(base, tree.u2)},
        "implications": [_imp_json(base, i) for i in sorted(tree.label)],
        "children": [tree_to_json(base, tree.left), tree_to_json(base, tree.right)],
        "acyclic": tree.acyclic,
    }


def tree_from_json(base: ImplicationBase, data) -> Tree:
    if data is None:
        return EMPTY
    if "element" in data:
        return ElementLeaf(base.index[data["element"]])
    if "factor" in data:
        f = data["factor"]
        imps = [Implication(base.mask(i["premise"]), base.mask(i["conclusion"]))
                for i in f["implications"]]
        return FactorLeaf(base.derive(imps, ground=base.mask(f["ground"])))
    label = frozenset(Implication(base.mask(i["premise"]), base.mask(i["conclusion"]))
                      for i in data["implications"])
    left, right = (tree_from_json(base, c) for c in data["children"])
    return Node(base.mask(data["split"]["u1"]), base.mask(data["split"]["u2"]), label,
                left, right, bool(data.get("acyclic", False)))


def dumps(base: ImplicationBase, tree: Tree) -> str:
    # deep chain trees nest one level per element
    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, 4 * base.n + 1000))
    try:
        return json.dumps(tree_to_json(base, tree), indent=2)
    finally:
        sys.setrecursionlimit(limit)


def describe(base: ImplicationBase, tree: Tree, indent: str = "") -> str:
    """Indented text rendering."""
    if isinstance(tree, EmptyTree):
        return indent + "(empty)"
    if isinstance(tree, ElementLeaf):
        return indent + base.elements[tree.element]
    if isinstance(tree, FactorLeaf):
        return indent + "factor " + str(tree.base)
    label = ", ".join(base.format_implication(i) for i in sorted(tree.label))
    head = f"{indent}[{base.format_set(tree.u1)} | {base.format_set(tree.u2)}] {{{label}}}"
    return "\n".join([head, describe(base, tree.left, indent + "  "),
                      describe(base, tree.right, indent + "  ")])

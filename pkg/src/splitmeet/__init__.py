"""Split decompositions of implicational bases and meet-irreducible enumeration."""

from .ccm import CCMTrace, MeetSet, Origin, ccm, combine_meets, detect_layering, max_ext
from .closure import closure, equivalent, is_model
from .core import (
    Implication,
    ImplicationBase,
    bipartite_part,
    compact,
    normalize,
    parse_base,
    read_base,
    restrict,
    serialize,
    trace,
    unit_expand,
)
from .dualization import ldual, min_transversals, negative_border, verify_dual
from .oracle import (
    ClosureSystem,
    enumerate_closed_sets,
    extensions_oracle,
    meet_irreducibles_oracle,
)
from .splits import (
    SplitKind,
    SplitReport,
    find_acyclic_split,
    find_split,
    has_split,
    is_split,
    premise_components,
)
from .trees import build_acyclic_tree, build_tree, h_build_tree, h_factors, validate_tree

__all__ = [
    "CCMTrace",
    "MeetSet",
    "Origin",
    "ccm",
    "combine_meets",
    "detect_layering",
    "max_ext",
    "closure",
    "equivalent",
    "is_model",
    "Implication",
    "ImplicationBase",
    "bipartite_part",
    "compact",
    "normalize",
    "parse_base",
    "read_base",
    "restrict",
    "serialize",
    "trace",
    "unit_expand",
    "ldual",
    "min_transversals",
    "negative_border",
    "verify_dual",
    "ClosureSystem",
    "enumerate_closed_sets",
    "extensions_oracle",
    "meet_irreducibles_oracle",
    "SplitKind",
    "SplitReport",
    "find_acyclic_split",
    "find_split",
    "has_split",
    "is_split",
    "premise_components",
    "build_acyclic_tree",
    "build_tree",
    "h_build_tree",
    "h_factors",
    "validate_tree",
]

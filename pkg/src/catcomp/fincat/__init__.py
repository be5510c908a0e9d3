"""Finite categories, functors, natural transformations and arrow categories."""

from catcomp.fincat.arrows import ArrowBundle, arrow_category, enumerate_factorizations
from catcomp.fincat.category import (
    CategoryPresentation,
    ComputedComposition,
    Morphism,
    build_category,
    identity_label,
)
from catcomp.fincat.functor import (
    FunctorData,
    NatTransData,
    compose_all_functors,
    compose_functors,
    constant_functor,
    enumerate_nat_trans,
    find_inverse,
    functor_from_labels,
    identity_functor,
    identity_nat_trans,
    invert_nat_trans,
    is_fully_faithful,
    is_identity_nat_trans,
    nat_trans,
    opposite_functor,
    opposite_nat_trans,
    parallel,
    vertical_compose,
    vertical_compose_all,
    whisker,
)
from catcomp.fincat.generate import generate_category
from catcomp.fincat.laws import (
    LawReport,
    Violation,
    ViolationLog,
    require_passed,
    validate_category,
    validate_functor,
    validate_nat_trans,
)
from catcomp.fincat.limits import initial_objects, is_pullback, pullback_counterexample, terminal_objects

__all__ = [
    "ArrowBundle",
    "CategoryPresentation",
    "ComputedComposition",
    "FunctorData",
    "LawReport",
    "Morphism",
    "NatTransData",
    "Violation",
    "ViolationLog",
    "arrow_category",
    "build_category",
    "compose_all_functors",
    "compose_functors",
    "constant_functor",
    "enumerate_factorizations",
    "enumerate_nat_trans",
    "find_inverse",
    "functor_from_labels",
    "generate_category",
    "identity_functor",
    "identity_label",
    "identity_nat_trans",
    "initial_objects",
    "invert_nat_trans",
    "is_fully_faithful",
    "is_identity_nat_trans",
    "is_pullback",
    "nat_trans",
    "opposite_functor",
    "opposite_nat_trans",
    "parallel",
    "pullback_counterexample",
    "require_passed",
    "terminal_objects",
    "validate_category",
    "validate_functor",
    "validate_nat_trans",
    "vertical_compose",
    "vertical_compose_all",
    "whisker",
]

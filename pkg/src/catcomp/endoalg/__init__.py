"""Endo(Cat), algebra categories and the transport of initial algebras along a lifted comprehension."""

from catcomp.endoalg.algebras import (
    AlgebraBundle,
    Direction,
    Extreme,
    algebra_category,
    beck_lift,
    extreme_object,
    extreme_objects,
    lift_to_algebras,
)
from catcomp.endoalg.endo import (
    EndoMorphism,
    EndoObject,
    EndoPathObject,
    check_endo_adjunction,
    check_endo_morphism,
    check_endo_two_cell,
    compose_endo,
    endo_arrow_path_object,
    endo_morphism,
    identity_endo,
)
from catcomp.endoalg.transport import (
    DistributivityPair,
    LiftedComprehension,
    TransportVerdict,
    check_lifting_criterion,
    check_transport,
    coalgebra_as_algebra,
    compatible_comprehension_cells,
    derive_sigma_tilde,
    lift_comprehension_to_algebras,
)

__all__ = [
    "AlgebraBundle",
    "Direction",
    "DistributivityPair",
    "EndoMorphism",
    "EndoObject",
    "EndoPathObject",
    "Extreme",
    "LiftedComprehension",
    "TransportVerdict",
    "algebra_category",
    "beck_lift",
    "check_endo_adjunction",
    "check_endo_morphism",
    "check_endo_two_cell",
    "check_lifting_criterion",
    "check_transport",
    "coalgebra_as_algebra",
    "compatible_comprehension_cells",
    "compose_endo",
    "derive_sigma_tilde",
    "endo_arrow_path_object",
    "endo_morphism",
    "extreme_object",
    "extreme_objects",
    "identity_endo",
    "lift_comprehension_to_algebras",
    "lift_to_algebras",
]

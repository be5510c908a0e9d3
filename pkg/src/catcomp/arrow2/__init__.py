"""The 2-category Cat//Cat at instance level and adjunction lifting."""

from catcomp.arrow2.lax import (
    ArrowObject,
    ArrowTwoCell,
    LaxMorphism,
    check_lax_morphism,
    check_two_cell,
    compose_lax,
    identity_lax,
    identity_two_cell,
    lax_morphism,
)
from catcomp.arrow2.lifting import (
    ArrowAdjunction,
    LiftDiagnosis,
    LiftResult,
    assemble_arrow_adjunction,
    check_arrow_adjunction,
    check_formal_adjunction,
    lift_adjunction,
    project_base,
    project_total,
)

__all__ = [
    "ArrowAdjunction",
    "ArrowObject",
    "ArrowTwoCell",
    "LaxMorphism",
    "LiftDiagnosis",
    "LiftResult",
    "assemble_arrow_adjunction",
    "check_arrow_adjunction",
    "check_formal_adjunction",
    "check_lax_morphism",
    "check_two_cell",
    "compose_lax",
    "identity_lax",
    "identity_two_cell",
    "lax_morphism",
    "lift_adjunction",
    "project_base",
    "project_total",
]

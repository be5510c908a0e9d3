"""(Op)cartesian morphisms, fibrations, fibers and image structures."""

from catcomp.fibration.cartesian import (
    CartesianStatus,
    FibrationClass,
    ProjectionIndex,
    cartesian_failure,
    cartesian_lift,
    cartesian_status,
    classify_functor,
    fiber,
    is_cartesian,
    is_opcartesian,
    opcartesian_failure,
    opcartesian_lift,
    vertical,
)
from catcomp.fibration.image import (
    ImageStructure,
    build_image_structure,
    check_image_coherence,
    derive_actions,
    image_functor,
)

__all__ = [
    "CartesianStatus",
    "FibrationClass",
    "ImageStructure",
    "ProjectionIndex",
    "build_image_structure",
    "cartesian_failure",
    "cartesian_lift",
    "cartesian_status",
    "check_image_coherence",
    "classify_functor",
    "derive_actions",
    "fiber",
    "image_functor",
    "is_cartesian",
    "is_opcartesian",
    "opcartesian_failure",
    "opcartesian_lift",
    "vertical",
]

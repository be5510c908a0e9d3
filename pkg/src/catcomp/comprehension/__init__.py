"""Comprehension and quotient structures, comprehension with image, notion classification."""

from catcomp.comprehension.classify import (
    Flag,
    NotionClassification,
    NotionVerdict,
    classify_notion,
    hierarchy_violations,
)
from catcomp.comprehension.image import (
    ComprehensionWithImage,
    check_image_hom_bijection,
    comprehension_with_image,
    image_counit_at,
    transpose,
)
from catcomp.comprehension.structures import (
    ComprehensionStructure,
    QuotientStructure,
    SectionData,
    SectionKind,
    build_comprehension,
    check_comprehension,
    check_quotient,
    check_section_data,
    comprehension_lax,
    derive_comprehension_from_section,
    derive_quotient_from_section,
    lift_section_adjunction,
    opposite_section_data,
    section_iota,
)

__all__ = [
    "ComprehensionStructure",
    "ComprehensionWithImage",
    "Flag",
    "NotionClassification",
    "NotionVerdict",
    "QuotientStructure",
    "SectionData",
    "SectionKind",
    "build_comprehension",
    "check_comprehension",
    "check_image_hom_bijection",
    "check_quotient",
    "check_section_data",
    "classify_notion",
    "comprehension_lax",
    "comprehension_with_image",
    "derive_comprehension_from_section",
    "derive_quotient_from_section",
    "hierarchy_violations",
    "image_counit_at",
    "lift_section_adjunction",
    "opposite_section_data",
    "section_iota",
    "transpose",
]

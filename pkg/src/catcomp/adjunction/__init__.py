"""Adjunctions, adjoint search, mates, and the arrow-category adjunctions."""

from catcomp.adjunction.core import (
    Adjunction,
    check_adjunction,
    check_hom_bijection,
    check_typing,
    identity_adjunction,
    opposite_adjunction,
)
from catcomp.adjunction.mates import MateSquare, comate, mate
from catcomp.adjunction.paths import cod_id_adjunction, id_dom_adjunction, verify_cod_id_dom
from catcomp.adjunction.search import find_left_adjoint, find_right_adjoint

__all__ = [
    "Adjunction",
    "MateSquare",
    "check_adjunction",
    "check_hom_bijection",
    "check_typing",
    "cod_id_adjunction",
    "comate",
    "find_left_adjoint",
    "find_right_adjoint",
    "id_dom_adjunction",
    "identity_adjunction",
    "mate",
    "opposite_adjunction",
    "verify_cod_id_dom",
]

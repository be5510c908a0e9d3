"""Small named categories behind the shipped fixtures and the tests."""

from __future__ import annotations

from catcomp.fincat import CategoryPresentation, build_category


def terminal_category() -> CategoryPresentation:
    return build_category("TERM", ["*"], [])


def walking_arrow() -> CategoryPresentation:
    return build_category("WALK", ["0", "1"], [("u", "0", "1")])


def cyclic_group_two() -> CategoryPresentation:
    """Z/2 as a one-object category: ``s∘s = id``."""
    return build_category("Z2", ["*"], [("s", "*", "*")], {("s", "s"): "id_*"})


def idempotent_monoid() -> CategoryPresentation:
    """``{id, e}`` with ``e∘e = e``."""
    return build_category("IDEM", ["*"], [("e", "*", "*")], {("e", "e"): "e"})


def empty_category() -> CategoryPresentation:
    return build_category("EMPTY", [], [])

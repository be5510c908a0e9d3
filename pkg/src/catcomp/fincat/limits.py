"""Exhaustive universal-property checks: pullback squares and initial/terminal objects."""

from __future__ import annotations

from collections import Counter, defaultdict

from catcomp.errors import StructuralError
from catcomp.fincat.category import CategoryPresentation


def pullback_counterexample(
    c: CategoryPresentation,
    top: int,
    left: int,
    right: int,
    bottom: int,
) -> tuple[int, int, int] | None:
    """Return a cone ``(z, a, y)`` without a unique mediating morphism, or None.

    The square is::

        X --top--> Y
        |          |
       left      right
        v          v
        A -bottom-> B

    and must commute. A cone is ``a: Z -> A`` and ``y: Z -> Y`` with
    ``bottom ∘ a == right ∘ y``.
    """
    x, y_obj = c.dom(top), c.cod(top)
    a_obj, b_obj = c.cod(left), c.cod(bottom)
    if not (c.dom(left) == x and c.dom(right) == y_obj and c.dom(bottom) == a_obj and c.cod(right) == b_obj):
        raise StructuralError(f"square in {c.name} is mistyped")
    if c.compose(right, top) != c.compose(bottom, left):
        raise StructuralError(f"square in {c.name} does not commute")
    for z in range(c.object_count):
        mediated = Counter((c.compose(left, m), c.compose(top, m)) for m in c.hom(z, x))
        by_image: dict[int, list[int]] = defaultdict(list)
        for y in c.hom(z, y_obj):
            by_image[c.compose(right, y)].append(y)
        for a in c.hom(z, a_obj):
            for y in by_image.get(c.compose(bottom, a), ()):
                if mediated.get((a, y), 0) != 1:
                    return z, a, y
    return None


def is_pullback(c: CategoryPresentation, top: int, left: int, right: int, bottom: int) -> bool:
    return pullback_counterexample(c, top, left, right, bottom) is None


def initial_objects(c: CategoryPresentation) -> list[int]:
    n = c.object_count
    return [x for x in range(n) if all(len(c.hom(x, y)) == 1 for y in range(n))]


def terminal_objects(c: CategoryPresentation) -> list[int]:
    n = c.object_count
    return [x for x in range(n) if all(len(c.hom(y, x)) == 1 for y in range(n))]

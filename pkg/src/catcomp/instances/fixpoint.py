"""Kleene iteration on finite powerset lattices."""

from __future__ import annotations

from collections.abc import Callable, Iterable

Step = Callable[[frozenset[int]], frozenset[int]]


def powerset_step(base_set: Iterable[int], edges: Iterable[tuple[int, int]]) -> Step:
    """``S ↦ base ∪ {b | (a, b) ∈ edges, a ∈ S}``."""
    base = frozenset(base_set)
    edge_list = tuple(edges)

    def step(s: frozenset[int]) -> frozenset[int]:
        return base | frozenset(b for a, b in edge_list if a in s)

    return step


def _iterate(step: Step, start: frozenset[int]) -> frozenset[int]:
    current = start
    while True:
        following = step(current)
        if following == current:
            return current
        current = following


def kleene_lfp(step: Step, bottom: Iterable[int] = ()) -> frozenset[int]:
    """Least fixed point of a monotone ``step``, iterated up from ``bottom``."""
    return _iterate(step, frozenset(bottom))


def kleene_gfp(step: Step, top: Iterable[int]) -> frozenset[int]:
    """Greatest fixed point of a monotone ``step``, iterated down from ``top``."""
    return _iterate(step, frozenset(top))

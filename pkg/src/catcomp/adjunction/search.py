"""Brute-force adjoint search through terminal objects of comma categories."""

from __future__ import annotations

from catcomp.adjunction.core import Adjunction, check_adjunction, opposite_adjunction
from catcomp.config import Settings, default_settings
from catcomp.errors import ResourceError
from catcomp.fincat import (
    FunctorData,
    NatTransData,
    compose_functors,
    identity_functor,
    opposite_functor,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


def _unique_mediator(l: FunctorData, target_arrow: int, through: int, a_from: int, a_to: int) -> list[int]:
    """All ``h: a_from -> a_to`` with ``through ∘ l(h) == target_arrow``."""
    A, B = l.source, l.target
    return [h for h in A.hom(a_from, a_to) if B.compose(through, l.mor_map[h]) == target_arrow]


def _terminal_in_comma(l: FunctorData, b: int) -> tuple[int, int] | None:
    """Lowest-index terminal ``(a, g: La -> b)`` of the comma category ``(l ↓ b)``."""
    A, B = l.source, l.target
    objects = [(a, g) for a in range(A.object_count) for g in B.hom(l.obj_map[a], b)]
    for a_star, g_star in objects:
        if all(len(_unique_mediator(l, g, g_star, a, a_star)) == 1 for a, g in objects):
            return a_star, g_star
    return None


def find_right_adjoint(l: FunctorData, *, settings: Settings | None = None) -> Adjunction | None:
    """Assemble ``l ⊣ R`` from comma-category terminal objects, or None if one is missing."""
    settings = settings or default_settings()
    A, B = l.source, l.target
    if B.morphism_count > settings.adjoint_budget:
        raise ResourceError(
            f"right adjoint search for {l.name} over {B.morphism_count} morphisms exceeds budget {settings.adjoint_budget}"
        )
    log.debug("searching right adjoint", extra={"functor": l.name, "target_morphisms": B.morphism_count})

    universal: list[tuple[int, int]] = []
    for b in range(B.object_count):
        found = _terminal_in_comma(l, b)
        if found is None:
            log.debug("no terminal object in comma category", extra={"functor": l.name, "object": B.objects[b]})
            return None
        universal.append(found)

    r_obj = tuple(a for a, _ in universal)
    eps = tuple(g for _, g in universal)
    r_mor = []
    for k, m in enumerate(B.morphisms):
        (h,) = _unique_mediator(l, B.compose(k, eps[m.dom]), eps[m.cod], r_obj[m.dom], r_obj[m.cod])
        r_mor.append(h)
    right = FunctorData(f"{l.name}^R", B, A, r_obj, tuple(r_mor))

    unit = []
    for a in range(A.object_count):
        la = l.obj_map[a]
        (h,) = _unique_mediator(l, B.identity(la), eps[la], a, r_obj[la])
        unit.append(h)

    adj = Adjunction(
        f"{l.name}⊣{right.name}",
        l,
        right,
        NatTransData("η", identity_functor(A), compose_functors(right, l), tuple(unit)),
        NatTransData("ε", compose_functors(l, right), identity_functor(B), eps),
    )
    report = check_adjunction(adj, settings=settings)
    if not report.passed:
        raise AssertionError(f"assembled adjunction fails its own laws: {report.violations[0]}")
    return adj


def find_left_adjoint(r: FunctorData, *, settings: Settings | None = None) -> Adjunction | None:
    """``L ⊣ r`` exactly when ``r^op ⊣ L^op``; search the opposite side."""
    found = find_right_adjoint(opposite_functor(r), settings=settings)
    if found is None:
        return None
    adj = opposite_adjunction(found)
    return Adjunction(f"{adj.left.name}⊣{r.name}", adj.left.renamed(f"{r.name}^L"), r, adj.unit, adj.counit)

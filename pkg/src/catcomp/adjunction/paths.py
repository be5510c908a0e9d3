"""The adjunctions cod ⊣ id ⊣ dom carried by every arrow category."""

from __future__ import annotations

from catcomp.adjunction.core import Adjunction, check_adjunction
from catcomp.config import Settings, default_settings
from catcomp.fincat import (
    ArrowBundle,
    CategoryPresentation,
    LawReport,
    NatTransData,
    Violation,
    arrow_category,
    compose_functors,
    identity_functor,
    identity_nat_trans,
)


def cod_id_adjunction(arrows: ArrowBundle) -> Adjunction:
    """Unit at ``f: x -> y`` is the square ``(f, id_y): f -> id_y``; counit is the identity."""
    b = arrows.base
    unit = tuple(
        arrows.square(f, f, b.identity(m.cod), b.identity(m.cod)) for f, m in enumerate(b.morphisms)
    )
    return Adjunction(
        "cod⊣id",
        arrows.cod_f,
        arrows.id_f,
        NatTransData("η", identity_functor(arrows.arrow_cat), compose_functors(arrows.id_f, arrows.cod_f), unit),
        identity_nat_trans(compose_functors(arrows.cod_f, arrows.id_f)).renamed("ε"),
    )


def id_dom_adjunction(arrows: ArrowBundle) -> Adjunction:
    """Unit is the identity; counit at ``f: x -> y`` is the square ``(id_x, f): id_x -> f``."""
    b = arrows.base
    counit = tuple(
        arrows.square(b.identity(m.dom), b.identity(m.dom), f, f) for f, m in enumerate(b.morphisms)
    )
    return Adjunction(
        "id⊣dom",
        arrows.id_f,
        arrows.dom_f,
        identity_nat_trans(compose_functors(arrows.dom_f, arrows.id_f)).renamed("η"),
        NatTransData("ε", compose_functors(arrows.id_f, arrows.dom_f), identity_functor(arrows.arrow_cat), counit),
    )


def verify_cod_id_dom(b: CategoryPresentation, *, settings: Settings | None = None) -> LawReport:
    settings = settings or default_settings()
    arrows = arrow_category(b)
    report = LawReport(f"cod ⊣ id ⊣ dom on {b.name}").merge(
        check_adjunction(cod_id_adjunction(arrows), settings=settings).prefixed("cod_id"),
        check_adjunction(id_dom_adjunction(arrows), settings=settings).prefixed("id_dom"),
    )
    extra: list[Violation] = []
    ident = identity_functor(b)
    if compose_functors(arrows.dom_f, arrows.id_f) != ident:
        extra.append(Violation("path.dom_id", (b.name,)))
    if compose_functors(arrows.cod_f, arrows.id_f) != ident:
        extra.append(Violation("path.cod_id", (b.name,)))
    return LawReport(report.subject, report.violations + tuple(extra))

"""Objects, lax morphisms and 2-cells of Cat//Cat."""

from __future__ import annotations

from dataclasses import dataclass

from catcomp.config import Settings, default_settings
from catcomp.errors import StructuralError
from catcomp.fincat import (
    CategoryPresentation,
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    compose_functors,
    identity_functor,
    identity_nat_trans,
    is_identity_nat_trans,
    validate_nat_trans,
)


@dataclass(frozen=True)
class ArrowObject:
    """A functor ``proj: total -> base`` viewed as an object of Cat//Cat."""

    name: str
    proj: FunctorData

    @property
    def total(self) -> CategoryPresentation:
        return self.proj.source

    @property
    def base(self) -> CategoryPresentation:
        return self.proj.target


@dataclass(frozen=True)
class LaxMorphism:
    """``(f_E, f_B, φ)`` from ``source`` to ``target`` with ``φ: p2∘f_E ⇒ f_B∘p1``."""

    name: str
    source: ArrowObject
    target: ArrowObject
    on_total: FunctorData
    on_base: FunctorData
    phi: NatTransData
    strict: bool


@dataclass(frozen=True)
class ArrowTwoCell:
    theta_base: NatTransData
    theta_total: NatTransData


def lax_morphism(
    name: str,
    source: ArrowObject,
    target: ArrowObject,
    on_total: FunctorData,
    on_base: FunctorData,
    phi: NatTransData | None = None,
) -> LaxMorphism:
    """Build a lax morphism; ``phi=None`` means the strict case with identity φ."""
    if phi is None:
        along = compose_functors(target.proj, on_total)
        phi = NatTransData(
            "id", along, compose_functors(on_base, source.proj), identity_nat_trans(along).components
        )
    return LaxMorphism(name, source, target, on_total, on_base, phi, is_identity_nat_trans(phi))


def identity_lax(obj: ArrowObject) -> LaxMorphism:
    return LaxMorphism(
        f"id_{obj.name}",
        obj,
        obj,
        identity_functor(obj.total),
        identity_functor(obj.base),
        identity_nat_trans(obj.proj).renamed(f"id_{obj.proj.name}"),
        True,
    )


def _check_endpoints(m: LaxMorphism) -> None:
    if m.on_total.source is not m.source.total or m.on_total.target is not m.target.total:
        raise StructuralError(f"lax morphism {m.name}: total functor {m.on_total.name} has wrong endpoints")
    if m.on_base.source is not m.source.base or m.on_base.target is not m.target.base:
        raise StructuralError(f"lax morphism {m.name}: base functor {m.on_base.name} has wrong endpoints")
    if m.phi.source != compose_functors(m.target.proj, m.on_total) or m.phi.target != compose_functors(
        m.on_base, m.source.proj
    ):
        raise StructuralError(f"lax morphism {m.name}: {m.phi.name} is not p2∘f_E ⇒ f_B∘p1")


def check_lax_morphism(m: LaxMorphism, *, settings: Settings | None = None) -> LawReport:
    settings = settings or default_settings()
    _check_endpoints(m)
    out = ViolationLog(f"lax morphism {m.name}", settings.max_witnesses)
    out.extend(validate_nat_trans(m.phi, settings=settings).prefixed("lax.phi"))
    if m.strict != is_identity_nat_trans(m.phi):
        out.add("lax.strict_flag", (m.name,))
    return out.report()


def compose_lax(outer: LaxMorphism, inner: LaxMorphism) -> LaxMorphism:
    """φ of the composite at ``e`` is ``f2_B(φ1_e) ∘ φ2_{f1_E e}``."""
    if inner.target != outer.source:
        raise StructuralError(f"lax morphisms not composable: {outer.name} after {inner.name}")
    on_total = compose_functors(outer.on_total, inner.on_total)
    on_base = compose_functors(outer.on_base, inner.on_base)
    base = outer.target.base
    components = tuple(
        base.compose(outer.on_base.mor_map[inner.phi.components[e]], outer.phi.components[inner.on_total.obj_map[e]])
        for e in range(inner.source.total.object_count)
    )
    phi = NatTransData(
        f"{outer.phi.name}*{inner.phi.name}",
        compose_functors(outer.target.proj, on_total),
        compose_functors(on_base, inner.source.proj),
        components,
    )
    return LaxMorphism(
        f"{outer.name}∘{inner.name}",
        inner.source,
        outer.target,
        on_total,
        on_base,
        phi,
        is_identity_nat_trans(phi),
    )


def identity_two_cell(m: LaxMorphism) -> ArrowTwoCell:
    return ArrowTwoCell(identity_nat_trans(m.on_base), identity_nat_trans(m.on_total))


def check_two_cell(t: ArrowTwoCell, m1: LaxMorphism, m2: LaxMorphism, *, settings: Settings | None = None) -> LawReport:
    """Naturality of both components, then ``θ_B_{p1 e} ∘ φ1_e == φ2_e ∘ p2(θ_E_e)`` at every e."""
    settings = settings or default_settings()
    if m1.source != m2.source or m1.target != m2.target:
        raise StructuralError(f"2-cell between non-parallel lax morphisms {m1.name}, {m2.name}")
    if t.theta_base.source != m1.on_base or t.theta_base.target != m2.on_base:
        raise StructuralError(f"base component {t.theta_base.name} is not {m1.on_base.name} ⇒ {m2.on_base.name}")
    if t.theta_total.source != m1.on_total or t.theta_total.target != m2.on_total:
        raise StructuralError(f"total component {t.theta_total.name} is not {m1.on_total.name} ⇒ {m2.on_total.name}")

    out = ViolationLog(f"2-cell {m1.name} ⇒ {m2.name}", settings.max_witnesses)
    out.extend(validate_nat_trans(t.theta_base, settings=settings).prefixed("two_cell.base"))
    out.extend(validate_nat_trans(t.theta_total, settings=settings).prefixed("two_cell.total"))
    if out.report().violations:
        return out.report()

    p1, p2 = m1.source.proj, m1.target.proj
    base = m1.target.base
    for e in range(m1.source.total.object_count):
        lhs = base.compose(t.theta_base.components[p1.obj_map[e]], m1.phi.components[e])
        rhs = base.compose(m2.phi.components[e], p2.mor_map[t.theta_total.components[e]])
        if lhs != rhs:
            out.add("two_cell.pasting", (m1.source.total.objects[e],))
    return out.report()

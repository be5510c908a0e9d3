"""Endo(Cat): categories with an endofunctor, morphisms carrying a distributivity cell, and 2-cells.

A morphism ``(P, p̄): (X, x) -> (Y, y)`` carries ``p̄: y∘P ⇒ P∘x``; a 2-cell
``α: (P, p̄) ⇒ (Q, q̄)`` is a transformation ``P ⇒ Q`` with
``α_{x c} ∘ p̄_c = q̄_c ∘ y(α_c)`` for every object ``c``.
"""

from __future__ import annotations

from dataclasses import dataclass

from catcomp.adjunction import Adjunction, check_adjunction
from catcomp.config import Settings, default_settings
from catcomp.errors import PreconditionError, StructuralError
from catcomp.fincat import (
    ArrowBundle,
    CategoryPresentation,
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    arrow_category,
    compose_functors,
    identity_functor,
    identity_nat_trans,
    validate_functor,
    validate_nat_trans,
    vertical_compose,
    whisker,
)


@dataclass(frozen=True)
class EndoObject:
    carrier: CategoryPresentation
    endo: FunctorData

    def __post_init__(self) -> None:
        if self.endo.source is not self.carrier or self.endo.target is not self.carrier:
            raise StructuralError(f"{self.endo.name} is not an endofunctor of {self.carrier.name}")


@dataclass(frozen=True)
class EndoMorphism:
    name: str
    source: EndoObject
    target: EndoObject
    on_carrier: FunctorData
    dist: NatTransData


def _same_object(a: EndoObject, b: EndoObject) -> bool:
    return a.carrier is b.carrier and a.endo == b.endo


def _check_endo_typing(m: EndoMorphism) -> None:
    P, x, y = m.on_carrier, m.source.endo, m.target.endo
    if P.source is not m.source.carrier or P.target is not m.target.carrier:
        raise StructuralError(f"{m.name}: {P.name} does not run {m.source.carrier.name} -> {m.target.carrier.name}")
    if m.dist.source != compose_functors(y, P) or m.dist.target != compose_functors(P, x):
        raise StructuralError(f"{m.name}: {m.dist.name} is not a cell {y.name}∘{P.name} ⇒ {P.name}∘{x.name}")


def endo_morphism(name: str, source: EndoObject, target: EndoObject, on_carrier: FunctorData, dist: NatTransData) -> EndoMorphism:
    """Retype ``dist`` onto the composites ``y∘P`` and ``P∘x``; tables must already agree."""
    retyped = NatTransData(
        dist.name,
        compose_functors(target.endo, on_carrier),
        compose_functors(on_carrier, source.endo),
        dist.components,
    )
    if dist.source != retyped.source or dist.target != retyped.target:
        raise StructuralError(f"{name}: {dist.name} has the wrong endpoints")
    m = EndoMorphism(name, source, target, on_carrier, retyped)
    _check_endo_typing(m)
    return m


def identity_endo(obj: EndoObject) -> EndoMorphism:
    ident = identity_functor(obj.carrier)
    cell = identity_nat_trans(obj.endo)
    return endo_morphism(f"Id_{obj.carrier.name}", obj, obj, ident, cell)


def compose_endo(outer: EndoMorphism, inner: EndoMorphism) -> EndoMorphism:
    """``(Q, q̄)∘(P, p̄) = (Q∘P, (Q·p̄)∘(q̄·P))``."""
    if not _same_object(inner.target, outer.source):
        raise StructuralError(f"endo morphisms not composable: {outer.name} after {inner.name}")
    P, Q = inner.on_carrier, outer.on_carrier
    dist = vertical_compose(whisker(inner.dist, left=Q), whisker(outer.dist, right=P))
    return endo_morphism(f"{outer.name}∘{inner.name}", inner.source, outer.target, compose_functors(Q, P), dist)


def check_endo_morphism(m: EndoMorphism, *, settings: Settings | None = None) -> LawReport:
    settings = settings or default_settings()
    _check_endo_typing(m)
    out = ViolationLog(f"endo morphism {m.name}", settings.max_witnesses)
    out.extend(validate_functor(m.on_carrier, settings=settings).prefixed("endo"))
    out.extend(validate_nat_trans(m.dist, settings=settings).prefixed("endo.dist"))
    return out.report()


def check_endo_two_cell(
    alpha: NatTransData,
    m1: EndoMorphism,
    m2: EndoMorphism,
    *,
    settings: Settings | None = None,
) -> LawReport:
    """Naturality of ``alpha`` and the exchange equation ``α_{x c} ∘ p̄_c = q̄_c ∘ y(α_c)``."""
    settings = settings or default_settings()
    if not (_same_object(m1.source, m2.source) and _same_object(m1.target, m2.target)):
        raise StructuralError(f"endo morphisms {m1.name} and {m2.name} are not parallel")
    if alpha.source != m1.on_carrier or alpha.target != m2.on_carrier:
        raise StructuralError(f"{alpha.name} is not a transformation {m1.on_carrier.name} ⇒ {m2.on_carrier.name}")
    out = ViolationLog(f"endo two-cell {alpha.name}", settings.max_witnesses)
    out.extend(validate_nat_trans(alpha, settings=settings).prefixed("endo_two_cell"))
    if out.report().structural:
        return out.report()
    X, Y = m1.source.carrier, m1.target.carrier
    x, y = m1.source.endo, m1.target.endo
    a, p, q = alpha.components, m1.dist.components, m2.dist.components
    for c in range(X.object_count):
        if Y.compose(a[x.obj_map[c]], p[c]) != Y.compose(q[c], y.mor_map[a[c]]):
            out.add("endo_two_cell.exchange", (X.objects[c],))
    return out.report()


def check_endo_adjunction(
    left: EndoMorphism,
    right: EndoMorphism,
    unit: NatTransData,
    counit: NatTransData,
    *,
    settings: Settings | None = None,
) -> LawReport:
    """The underlying adjunction plus unit and counit as 2-cells of Endo(Cat)."""
    settings = settings or default_settings()
    adj = Adjunction(f"{left.name}⊣{right.name}", left.on_carrier, right.on_carrier, unit, counit)
    out = ViolationLog(f"endo adjunction {adj.name}", settings.max_witnesses)
    out.extend(check_adjunction(adj, settings=settings))
    if not out.report().passed:
        return out.report()
    out.extend(check_endo_two_cell(unit, identity_endo(left.source), compose_endo(right, left), settings=settings).prefixed("unit"))
    out.extend(check_endo_two_cell(counit, compose_endo(left, right), identity_endo(left.target), settings=settings).prefixed("counit"))
    return out.report()


@dataclass(frozen=True)
class EndoPathObject:
    """``(B^→, b^→)`` with ``(dom, id)``, ``(cod, id)`` and the universal ``hom`` cell."""

    base: EndoObject
    arrows: ArrowBundle
    obj: EndoObject
    dom: EndoMorphism
    cod: EndoMorphism
    hom: NatTransData

    def factorize(
        self,
        alpha: NatTransData,
        m1: EndoMorphism,
        m2: EndoMorphism,
        *,
        settings: Settings | None = None,
    ) -> EndoMorphism:
        """The unique ``(a, ā)`` with ``hom·a = alpha``, ``(dom,id)∘(a,ā) = m1``, ``(cod,id)∘(a,ā) = m2``."""
        if not _same_object(m1.target, self.base):
            raise StructuralError(f"{m1.name} does not land in {self.base.carrier.name}")
        report = check_endo_two_cell(alpha, m1, m2, settings=settings)
        if not report.passed:
            first = report.violations[0]
            raise PreconditionError(f"{alpha.name} is not a 2-cell of Endo(Cat): {first.law} at {first.witness}")
        a = self.arrows.factorize(alpha)
        b = self.base.endo
        x = m1.source.endo
        components = []
        for c in range(m1.source.carrier.object_count):
            sq = self.arrows.square(b.mor_map[alpha.components[c]], m1.dist.components[c], m2.dist.components[c], alpha.components[x.obj_map[c]])
            if sq is None:
                raise PreconditionError(f"distributivity square of {alpha.name} at {m1.source.carrier.objects[c]} does not commute")
            components.append(sq)
        dist = NatTransData(f"⟨{m1.dist.name},{m2.dist.name}⟩", compose_functors(self.obj.endo, a), compose_functors(a, x), tuple(components))
        return endo_morphism(f"⟨{alpha.name}⟩", m1.source, self.obj, a, dist)


def endo_arrow_path_object(e: EndoObject) -> EndoPathObject:
    B, b = e.carrier, e.endo
    arrows = arrow_category(B)
    mor_map = []
    for k, (w, v) in enumerate(arrows.squares):
        f, f2 = arrows.arrow_cat.dom(k), arrows.arrow_cat.cod(k)
        sq = arrows.square(b.mor_map[f], b.mor_map[w], b.mor_map[v], b.mor_map[f2])
        if sq is None:
            raise StructuralError(f"{b.name} does not preserve the square {arrows.arrow_cat.label(k)}")
        mor_map.append(sq)
    b_arrow = FunctorData(f"{b.name}^→", arrows.arrow_cat, arrows.arrow_cat, tuple(b.mor_map), tuple(mor_map))
    obj = EndoObject(arrows.arrow_cat, b_arrow)

    def projection(name: str, f: FunctorData) -> EndoMorphism:
        cell = NatTransData("id", compose_functors(b, f), compose_functors(f, b_arrow), identity_nat_trans(compose_functors(b, f)).components)
        return endo_morphism(f"({name},id)", obj, e, f, cell)

    dom_m, cod_m = projection("dom", arrows.dom_f), projection("cod", arrows.cod_f)
    return EndoPathObject(e, arrows, obj, dom_m, cod_m, arrows.hom)

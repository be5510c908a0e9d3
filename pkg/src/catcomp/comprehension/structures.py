"""Comprehension and quotient structures over a functor p, with and without a section."""

from __future__ import annotations

import enum
from dataclasses import dataclass

from catcomp.adjunction import Adjunction, check_adjunction, identity_adjunction, opposite_adjunction
from catcomp.arrow2 import ArrowObject, LaxMorphism, LiftResult, lift_adjunction
from catcomp.config import Settings, default_settings
from catcomp.errors import PreconditionError, StructuralError
from catcomp.fincat import (
    ArrowBundle,
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    compose_functors,
    identity_functor,
    is_identity_nat_trans,
    opposite_functor,
    require_passed,
    validate_nat_trans,
    whisker,
)


@dataclass(frozen=True)
class ComprehensionStructure:
    """``([-], ι: [-] ⇒ p)`` with ``P: E -> B^→`` and the equivalent lax morphism into (B, B, Id)."""

    proj: FunctorData
    comp: FunctorData
    iota: NatTransData
    P: FunctorData
    lax: LaxMorphism


@dataclass(frozen=True)
class QuotientStructure:
    proj: FunctorData
    quot: FunctorData
    pi: NatTransData
    Q: FunctorData


class SectionKind(str, enum.Enum):
    COMPREHENSION = "comprehension"
    QUOTIENT = "quotient"


@dataclass(frozen=True)
class SectionData:
    """A strict section ⋆ of ``proj`` with ``⋆ ⊣ [-]`` or, for quotients, ``⦃-⦄ ⊣ ⋆``."""

    proj: FunctorData
    section: FunctorData
    adj: Adjunction
    kind: SectionKind = SectionKind.COMPREHENSION

    @property
    def partner(self) -> FunctorData:
        """``[-]`` for a comprehension section, ``⦃-⦄`` for a quotient section."""
        return self.adj.right if self.kind is SectionKind.COMPREHENSION else self.adj.left


def _require_strict_section(proj: FunctorData, section: FunctorData) -> None:
    if section.source is not proj.target or section.target is not proj.source:
        raise StructuralError(f"{section.name} does not run from {proj.target.name} to {proj.source.name}")
    if compose_functors(proj, section) != identity_functor(proj.target):
        raise StructuralError(f"{proj.name}∘{section.name} is not the identity")


def check_section_data(sd: SectionData, *, settings: Settings | None = None) -> LawReport:
    settings = settings or default_settings()
    _require_strict_section(sd.proj, sd.section)
    attached = sd.adj.left if sd.kind is SectionKind.COMPREHENSION else sd.adj.right
    if attached != sd.section:
        raise StructuralError(f"adjunction {sd.adj.name} is not attached to the section {sd.section.name}")
    return check_adjunction(sd.adj, settings=settings).prefixed("section")


def opposite_section_data(sd: SectionData) -> SectionData:
    """``⦃-⦄ ⊣ ⋆`` over ``p`` becomes ``⋆^op ⊣ ⦃-⦄^op``, a comprehension section of ``p^op``."""
    if sd.kind is not SectionKind.QUOTIENT:
        raise StructuralError("only quotient sections dualize to comprehension sections")
    adj = opposite_adjunction(sd.adj)
    return SectionData(opposite_functor(sd.proj), adj.left, adj, SectionKind.COMPREHENSION)


def comprehension_lax(proj: FunctorData, comp: FunctorData, iota: NatTransData) -> LaxMorphism:
    base = proj.target
    ident = identity_functor(base)
    source = ArrowObject(proj.name, proj)
    target = ArrowObject(ident.name, ident)
    phi = NatTransData(iota.name, compose_functors(ident, comp), compose_functors(ident, proj), iota.components)
    return LaxMorphism(f"({comp.name},Id)", source, target, comp, ident, phi, is_identity_nat_trans(phi))


def build_comprehension(
    p: FunctorData,
    comp: FunctorData,
    iota: NatTransData,
    arrows: ArrowBundle,
    *,
    settings: Settings | None = None,
) -> ComprehensionStructure:
    """Factor ι through B^→ to get P and check ``cod∘P = p``, ``dom∘P = [-]``, ``hom·P = ι``."""
    settings = settings or default_settings()
    if arrows.base is not p.target:
        raise StructuralError(f"arrow bundle is not built on {p.target.name}")
    if iota.source != comp or iota.target != p:
        raise StructuralError(f"{iota.name} is not a transformation {comp.name} ⇒ {p.name}")
    require_passed(validate_nat_trans(iota, settings=settings))
    P = arrows.factorize(iota).renamed("P")
    cs = ComprehensionStructure(p, comp, iota, P, comprehension_lax(p, comp, iota))
    require_passed(check_comprehension(cs, arrows))
    return cs


def check_comprehension(cs: ComprehensionStructure, arrows: ArrowBundle) -> LawReport:
    out = ViolationLog(f"comprehension over {cs.proj.name}")
    if compose_functors(arrows.cod_f, cs.P) != cs.proj:
        out.add("comprehension.cod", (cs.P.name,))
    if compose_functors(arrows.dom_f, cs.P) != cs.comp:
        out.add("comprehension.dom", (cs.P.name,))
    if whisker(arrows.hom, right=cs.P).components != cs.iota.components:
        out.add("comprehension.hom", (cs.P.name,))
    return out.report()


def section_iota(sd: SectionData) -> NatTransData:
    """``ι = p·ε``, typed ``[-] ⇒ p`` using ``p∘⋆ = Id``."""
    if sd.kind is not SectionKind.COMPREHENSION:
        raise StructuralError("ι is derived from a comprehension section")
    _require_strict_section(sd.proj, sd.section)
    whiskered = whisker(sd.adj.counit, left=sd.proj)
    return NatTransData("ι", sd.adj.right, sd.proj, whiskered.components)


def derive_comprehension_from_section(
    sd: SectionData,
    arrows: ArrowBundle,
    *,
    iota: NatTransData | None = None,
    settings: Settings | None = None,
) -> ComprehensionStructure:
    """Comprehension with ``ι = p·ε``; a supplied ``iota`` must agree with it."""
    derived = section_iota(sd)
    if iota is not None and iota.components != derived.components:
        raise PreconditionError(f"supplied {iota.name} disagrees with the section-derived ι")
    return build_comprehension(sd.proj, sd.adj.right, derived, arrows, settings=settings)


def lift_section_adjunction(sd: SectionData, iota: NatTransData, *, settings: Settings | None = None) -> LiftResult:
    """Try to lift ``⋆ ⊣ [-]`` to (⋆, Id, id) ⊣ ([-], Id, ι) between (B, B, Id) and (E, B, p)."""
    base = sd.proj.target
    ident = identity_functor(base)
    phi = NatTransData(
        "id",
        compose_functors(sd.proj, sd.section),
        compose_functors(ident, ident),
        tuple(base.identities),
    )
    psi = NatTransData(iota.name, compose_functors(ident, sd.adj.right), compose_functors(ident, sd.proj), iota.components)
    return lift_adjunction(identity_adjunction(base), sd.adj, phi, psi, p1=ident, p2=sd.proj, settings=settings)


def derive_quotient_from_section(
    sd: SectionData,
    arrows: ArrowBundle,
    *,
    settings: Settings | None = None,
) -> QuotientStructure:
    """Quotient with ``π = p·η``; ``Q`` factors π through B^→ with ``dom∘Q = p``, ``cod∘Q = ⦃-⦄``."""
    settings = settings or default_settings()
    if sd.kind is not SectionKind.QUOTIENT:
        raise StructuralError("quotient structures come from a quotient section")
    _require_strict_section(sd.proj, sd.section)
    if arrows.base is not sd.proj.target:
        raise StructuralError(f"arrow bundle is not built on {sd.proj.target.name}")
    quot = sd.adj.left
    whiskered = whisker(sd.adj.unit, left=sd.proj)
    pi = NatTransData("π", sd.proj, quot, whiskered.components)
    require_passed(validate_nat_trans(pi, settings=settings))
    Q = arrows.factorize(pi).renamed("Q")
    qs = QuotientStructure(sd.proj, quot, pi, Q)
    require_passed(check_quotient(qs, arrows))
    return qs


def check_quotient(qs: QuotientStructure, arrows: ArrowBundle) -> LawReport:
    out = ViolationLog(f"quotient over {qs.proj.name}")
    if compose_functors(arrows.dom_f, qs.Q) != qs.proj:
        out.add("quotient.dom", (qs.Q.name,))
    if compose_functors(arrows.cod_f, qs.Q) != qs.quot:
        out.add("quotient.cod", (qs.Q.name,))
    if whisker(arrows.hom, right=qs.Q).components != qs.pi.components:
        out.add("quotient.hom", (qs.Q.name,))
    return out.report()

"""Lifting a comprehension with section to algebras, and transport of initial algebras.

Data: ``p: E -> B`` with section ⋆ ⊣ [-], endofunctors F on B and G on E,
``δ: F∘p ⇒ p∘G`` and ``σ: G∘⋆ ⇒ ⋆∘F``. The lift exists when
``p(σ_A) ∘ δ_{⋆A} = id_{F A}`` for every A and σ is invertible; the
comprehension then carries ``σ̃: F∘[-] ⇒ [-]∘G``, the comate of σ⁻¹.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass, field

from catcomp.adjunction import Adjunction, comate
from catcomp.comprehension import Flag, SectionData, SectionKind, check_section_data, opposite_section_data
from catcomp.config import Settings, default_settings
from catcomp.endoalg.algebras import (
    AlgebraBundle,
    Direction,
    Extreme,
    algebra_category,
    beck_lift,
    extreme_object,
    lift_to_algebras,
)
from catcomp.endoalg.endo import (
    EndoMorphism,
    EndoObject,
    check_endo_adjunction,
    check_endo_morphism,
    check_endo_two_cell,
    compose_endo,
    endo_morphism,
    identity_endo,
)
from catcomp.errors import PreconditionError, StructuralError
from catcomp.fincat import (
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    compose_functors,
    enumerate_nat_trans,
    find_inverse,
    identity_functor,
    invert_nat_trans,
    opposite_functor,
    opposite_nat_trans,
    validate_nat_trans,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class DistributivityPair:
    """F on the base, G on the total category, with ``δ: F∘p ⇒ p∘G`` and ``σ: G∘⋆ ⇒ ⋆∘F``."""

    base_endo: FunctorData
    total_endo: FunctorData
    delta: NatTransData
    sigma: NatTransData
    sigma_tilde: NatTransData | None = field(default=None, compare=False)


@dataclass(frozen=True)
class LiftedComprehension:
    base: AlgebraBundle
    total: AlgebraBundle
    section_data: SectionData
    proj: EndoMorphism
    section: EndoMorphism
    comp: EndoMorphism
    pair: DistributivityPair
    report: LawReport


@dataclass(frozen=True)
class TransportVerdict:
    """``mu_base`` indexes Alg_F(B) and ``mu_carrier`` its carrier in B; ``mu_total`` and ``section_of_mu`` index Alg_G(E).

    For the coalgebra direction the categories are the opposite algebra
    categories, whose objects carry the same carrier and structure indices.
    """

    direction: Direction
    verdict: Flag
    mu_base: int | None = None
    mu_carrier: int | None = None
    mu_total: int | None = None
    section_of_mu: int | None = None
    mu_label: str | None = None
    section_label: str | None = None
    certificate: tuple[int, ...] = ()

    def as_record(self) -> dict[str, object]:
        return {
            "direction": self.direction.value,
            "verdict": self.verdict.value,
            "mu": self.mu_label,
            "section_of_mu": self.section_label,
            "certificate": list(self.certificate),
        }


def _endo_objects(sd: SectionData, dp: DistributivityPair) -> tuple[EndoObject, EndoObject]:
    return EndoObject(sd.proj.target, dp.base_endo), EndoObject(sd.proj.source, dp.total_endo)


def _check_pair_typing(p: FunctorData, sd: SectionData, dp: DistributivityPair) -> None:
    if sd.kind is not SectionKind.COMPREHENSION:
        raise StructuralError("lifting to algebras needs comprehension data with a section")
    if sd.proj != p:
        raise StructuralError(f"section data is not over {p.name}")
    F, G, star = dp.base_endo, dp.total_endo, sd.section
    _endo_objects(sd, dp)  # raises unless F and G are endofunctors
    if dp.delta.source != compose_functors(F, p) or dp.delta.target != compose_functors(p, G):
        raise StructuralError(f"{dp.delta.name} is not a cell {F.name}∘{p.name} ⇒ {p.name}∘{G.name}")
    if dp.sigma.source != compose_functors(G, star) or dp.sigma.target != compose_functors(star, F):
        raise StructuralError(f"{dp.sigma.name} is not a cell {G.name}∘{star.name} ⇒ {star.name}∘{F.name}")


def derive_sigma_tilde(sd: SectionData, dp: DistributivityPair, *, verify: bool = True) -> NatTransData:
    """``σ̃: F∘[-] ⇒ [-]∘G`` as the comate of σ⁻¹ across ⋆ ⊣ [-] on both sides."""
    inverse = invert_nat_trans(dp.sigma)
    if inverse is None:
        raise PreconditionError(f"{dp.sigma.name} is not invertible")
    cell = comate(inverse, p1=dp.base_endo, p2=dp.total_endo, adj_base=sd.adj, adj_total=sd.adj, verify=verify)
    return cell.renamed("σ̃")


def check_lifting_criterion(
    p: FunctorData,
    sd: SectionData,
    dp: DistributivityPair,
    *,
    settings: Settings | None = None,
) -> LawReport:
    """``p(σ_A) ∘ δ_{⋆A}`` is the identity on F A, σ is invertible and ``([-], σ̃)`` is an Endo(Cat) morphism."""
    settings = settings or default_settings()
    _check_pair_typing(p, sd, dp)
    B = p.target
    out = ViolationLog("lifting criterion", settings.max_witnesses)
    out.extend(validate_nat_trans(dp.delta, settings=settings).prefixed("delta"))
    out.extend(validate_nat_trans(dp.sigma, settings=settings).prefixed("sigma"))
    if not out.report().passed:
        return out.report()

    star, F = sd.section, dp.base_endo
    for a in range(B.object_count):
        composite = B.compose(p.mor_map[dp.sigma.components[a]], dp.delta.components[star.obj_map[a]])
        if composite != B.identity(F.obj_map[a]):
            out.add("lifting.composite_identity", (B.objects[a],))
    E = p.source
    for a, component in enumerate(dp.sigma.components):
        if find_inverse(E, component) is None:
            out.add("lifting.sigma_invertible", (B.objects[a],))
    if not out.report().passed:
        return out.report()

    base_obj, total_obj = _endo_objects(sd, dp)
    comp = endo_morphism(sd.adj.right.name, total_obj, base_obj, sd.adj.right, derive_sigma_tilde(sd, dp, verify=False))
    out.extend(check_endo_morphism(comp, settings=settings).prefixed("lifting"))
    return out.report()


def compatible_comprehension_cells(sd: SectionData, dp: DistributivityPair, *, settings: Settings | None = None) -> Iterator[NatTransData]:
    """Every ``χ: F∘[-] ⇒ [-]∘G`` making unit and counit 2-cells for ``(⋆,σ) ⊣ ([-],χ)``."""
    settings = settings or default_settings()
    base_obj, total_obj = _endo_objects(sd, dp)
    comp_f = sd.adj.right
    section = endo_morphism(sd.section.name, base_obj, total_obj, sd.section, dp.sigma)
    for chi in enumerate_nat_trans(compose_functors(dp.base_endo, comp_f), compose_functors(comp_f, dp.total_endo)):
        comp = endo_morphism(comp_f.name, total_obj, base_obj, comp_f, chi)
        unit = check_endo_two_cell(sd.adj.unit, identity_endo(base_obj), compose_endo(comp, section), settings=settings)
        if not unit.passed:
            continue
        counit = check_endo_two_cell(sd.adj.counit, compose_endo(section, comp), identity_endo(total_obj), settings=settings)
        if counit.passed:
            yield chi


def lift_comprehension_to_algebras(
    p: FunctorData,
    sd: SectionData,
    dp: DistributivityPair,
    *,
    settings: Settings | None = None,
) -> LiftedComprehension:
    """Build Alg_F(B), Alg_G(E), the lifted projection, section ``(A, a) ↦ (⋆A, ⋆(a)∘σ_A)`` and comprehension."""
    settings = settings or default_settings()
    criterion = check_lifting_criterion(p, sd, dp, settings=settings)
    if not criterion.passed:
        raise PreconditionError(f"lifting criterion fails: {', '.join(criterion.laws_failed())}")
    sigma_tilde = derive_sigma_tilde(sd, dp, verify=False)
    pair = DistributivityPair(dp.base_endo, dp.total_endo, dp.delta, dp.sigma, sigma_tilde)

    base_obj, total_obj = _endo_objects(sd, dp)
    base = algebra_category(base_obj.carrier, dp.base_endo, Direction.ALGEBRA, settings=settings)
    total = algebra_category(total_obj.carrier, dp.total_endo, Direction.ALGEBRA, settings=settings)

    proj_m = endo_morphism(p.name, total_obj, base_obj, p, dp.delta)
    section_m = endo_morphism(sd.section.name, base_obj, total_obj, sd.section, dp.sigma)
    comp_m = endo_morphism(sd.adj.right.name, total_obj, base_obj, sd.adj.right, sigma_tilde)
    proj_l = beck_lift(p, dp.delta, (total, base))
    section_l = lift_to_algebras(section_m, base, total)
    comp_l = lift_to_algebras(comp_m, total, base)

    eta, eps = sd.adj.unit.components, sd.adj.counit.components
    unit: list[int] = []
    for i, (a, _) in enumerate(base.structures):
        k = base.morphism_of(eta[a], i, comp_l.obj_map[section_l.obj_map[i]])
        if k is None:
            raise StructuralError(f"unit at {base.alg_cat.objects[i]} is not an algebra morphism")
        unit.append(k)
    counit: list[int] = []
    for j, (e, _) in enumerate(total.structures):
        k = total.morphism_of(eps[e], section_l.obj_map[comp_l.obj_map[j]], j)
        if k is None:
            raise StructuralError(f"counit at {total.alg_cat.objects[j]} is not an algebra morphism")
        counit.append(k)

    adj = Adjunction(
        f"({sd.adj.name})'",
        section_l,
        comp_l,
        NatTransData("η'", identity_functor(base.alg_cat), compose_functors(comp_l, section_l), tuple(unit)),
        NatTransData("ε'", compose_functors(section_l, comp_l), identity_functor(total.alg_cat), tuple(counit)),
    )
    lifted = SectionData(proj_l, section_l, adj, SectionKind.COMPREHENSION)
    out = ViolationLog("lifted comprehension", settings.max_witnesses)
    out.extend(check_section_data(lifted, settings=settings))
    out.extend(check_endo_adjunction(section_m, comp_m, sd.adj.unit, sd.adj.counit, settings=settings).prefixed("endo"))
    log.info(
        "comprehension lifted to algebras",
        extra={"base_algebras": base.alg_cat.object_count, "total_algebras": total.alg_cat.object_count},
    )
    return LiftedComprehension(base, total, lifted, proj_m, section_m, comp_m, pair, out.report())


def coalgebra_as_algebra(p: FunctorData, sd: SectionData, dp: DistributivityPair) -> tuple[FunctorData, SectionData, DistributivityPair]:
    """Coalgebra data over ``p`` (quotient section, ``δ': p∘G ⇒ F∘p``, ``σ': ⋆∘F ⇒ G∘⋆``) as algebra data over ``p^op``."""
    if sd.kind is not SectionKind.QUOTIENT:
        raise StructuralError("the coalgebra direction needs a quotient section")
    op = DistributivityPair(
        opposite_functor(dp.base_endo),
        opposite_functor(dp.total_endo),
        opposite_nat_trans(dp.delta),
        opposite_nat_trans(dp.sigma),
    )
    return opposite_functor(p), opposite_section_data(sd), op


def check_transport(
    p: FunctorData,
    sd: SectionData,
    dp: DistributivityPair,
    *,
    direction: Direction | str = Direction.ALGEBRA,
    settings: Settings | None = None,
) -> TransportVerdict:
    """Lift, find μF in Alg_F(B) and verify that ``⋆'(μF)`` is initial in Alg_G(E) by morphism counts.

    The coalgebra direction runs on opposites: the terminal F-coalgebra is the
    initial algebra of ``F^op``.
    """
    settings = settings or default_settings()
    direction = Direction(direction)
    if direction is Direction.COALGEBRA:
        p, sd, dp = coalgebra_as_algebra(p, sd, dp)
    lifted = lift_comprehension_to_algebras(p, sd, dp, settings=settings)
    base_cat, total_cat = lifted.base.alg_cat, lifted.total.alg_cat

    mu = extreme_object(base_cat, Extreme.INITIAL)
    mu_total = extreme_object(total_cat, Extreme.INITIAL)
    if mu is None:
        log.info("no initial algebra in the base", extra={"direction": direction.value})
        return TransportVerdict(direction, Flag.UNDETERMINED, mu_total=mu_total)
    image = lifted.section_data.section.obj_map[mu]
    certificate = tuple(len(total_cat.hom(image, j)) for j in range(total_cat.object_count))
    verdict = Flag.TRUE if all(n == 1 for n in certificate) else Flag.FALSE
    log.info("transport checked", extra={"direction": direction.value, "verdict": verdict.value})
    return TransportVerdict(
        direction,
        verdict,
        mu_base=mu,
        mu_carrier=lifted.base.structures[mu][0],
        mu_total=mu_total,
        section_of_mu=image,
        mu_label=base_cat.objects[mu],
        section_label=total_cat.objects[image],
        certificate=certificate,
    )

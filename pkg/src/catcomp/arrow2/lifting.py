"""Formal adjunctions in Cat//Cat and the lifting criterion for component adjunctions.

Left ``L = (L_E, L_B, φ)`` with ``φ: p2∘L_E ⇒ L_B∘p1`` and right
``R = (R_E, R_B, ψ)`` with ``ψ: p1∘R_E ⇒ R_B∘p2``. The pair lifts exactly when
φ is invertible and ψ is the comate of φ⁻¹.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from catcomp.adjunction import Adjunction, check_adjunction, comate, mate, MateSquare
from catcomp.arrow2.lax import (
    ArrowObject,
    ArrowTwoCell,
    LaxMorphism,
    check_lax_morphism,
    check_two_cell,
    compose_lax,
    identity_lax,
)
from catcomp.config import Settings, default_settings
from catcomp.errors import StructuralError
from catcomp.fincat import (
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    invert_nat_trans,
    is_identity_nat_trans,
    require_passed,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class ArrowAdjunction:
    left: LaxMorphism
    right: LaxMorphism
    unit: ArrowTwoCell
    counit: ArrowTwoCell


class LiftDiagnosis(str, enum.Enum):
    LIFTED = "lifted"
    PHI_NOT_INVERTIBLE = "phi_not_invertible"
    PSI_NOT_MATE = "psi_not_mate"


@dataclass(frozen=True)
class LiftResult:
    diagnosis: LiftDiagnosis
    adjunction: ArrowAdjunction | None = None
    expected_psi: NatTransData | None = None

    @property
    def lifted(self) -> bool:
        return self.diagnosis is LiftDiagnosis.LIFTED


def assemble_arrow_adjunction(
    adj_base: Adjunction,
    adj_total: Adjunction,
    phi: NatTransData,
    psi: NatTransData,
    *,
    p1: FunctorData,
    p2: FunctorData,
) -> ArrowAdjunction:
    """Package the data without judging it; unit/counit are the component units/counits."""
    source = ArrowObject(p1.name, p1)
    target = ArrowObject(p2.name, p2)
    left = LaxMorphism(
        f"({adj_total.left.name},{adj_base.left.name})",
        source,
        target,
        adj_total.left,
        adj_base.left,
        phi,
        is_identity_nat_trans(phi),
    )
    right = LaxMorphism(
        f"({adj_total.right.name},{adj_base.right.name})",
        target,
        source,
        adj_total.right,
        adj_base.right,
        psi,
        is_identity_nat_trans(psi),
    )
    return ArrowAdjunction(
        left,
        right,
        ArrowTwoCell(adj_base.unit, adj_total.unit),
        ArrowTwoCell(adj_base.counit, adj_total.counit),
    )


def project_base(adj: ArrowAdjunction) -> Adjunction:
    return Adjunction(
        f"{adj.left.on_base.name}⊣{adj.right.on_base.name}",
        adj.left.on_base,
        adj.right.on_base,
        adj.unit.theta_base,
        adj.counit.theta_base,
    )


def project_total(adj: ArrowAdjunction) -> Adjunction:
    return Adjunction(
        f"{adj.left.on_total.name}⊣{adj.right.on_total.name}",
        adj.left.on_total,
        adj.right.on_total,
        adj.unit.theta_total,
        adj.counit.theta_total,
    )


def check_formal_adjunction(adj: ArrowAdjunction, *, settings: Settings | None = None) -> LawReport:
    """Direct check: lax morphisms, projected adjunctions, and unit/counit pasting."""
    settings = settings or default_settings()
    out = ViolationLog("formal adjunction", settings.max_witnesses)
    out.extend(check_lax_morphism(adj.left, settings=settings).prefixed("left"))
    out.extend(check_lax_morphism(adj.right, settings=settings).prefixed("right"))
    out.extend(check_adjunction(project_base(adj), settings=settings).prefixed("base"))
    out.extend(check_adjunction(project_total(adj), settings=settings).prefixed("total"))
    if out.report().violations:
        return out.report()
    unit_target = compose_lax(adj.right, adj.left)
    counit_source = compose_lax(adj.left, adj.right)
    out.extend(check_two_cell(adj.unit, identity_lax(adj.left.source), unit_target, settings=settings).prefixed("unit"))
    out.extend(
        check_two_cell(adj.counit, counit_source, identity_lax(adj.left.target), settings=settings).prefixed("counit")
    )
    return out.report()


def check_arrow_adjunction(adj: ArrowAdjunction, *, settings: Settings | None = None) -> LawReport:
    """``check_formal_adjunction`` plus the mate law ``mate(ψ) = φ⁻¹``."""
    settings = settings or default_settings()
    report = check_formal_adjunction(adj, settings=settings)
    out = ViolationLog(report.subject, settings.max_witnesses)
    out.extend(report)
    if report.structural:
        return out.report()
    phi_inv = invert_nat_trans(adj.left.phi)
    if phi_inv is None:
        out.add("arrow_adjunction.phi_invertible", (adj.left.phi.name,))
        return out.report()
    square = MateSquare(adj.left.source.proj, adj.left.target.proj, project_base(adj), project_total(adj), adj.right.phi)
    psi_tilde = mate(square, verify=False)
    for e, (got, want) in enumerate(zip(psi_tilde.components, phi_inv.components)):
        if got != want:
            out.add("arrow_adjunction.mate", (adj.left.source.total.objects[e],))
    return out.report()


def lift_adjunction(
    adj_base: Adjunction,
    adj_total: Adjunction,
    phi: NatTransData,
    psi: NatTransData,
    *,
    p1: FunctorData,
    p2: FunctorData,
    settings: Settings | None = None,
) -> LiftResult:
    """Decide whether the component adjunctions lift, by invertibility of φ and the mate condition."""
    settings = settings or default_settings()
    try:
        require_passed(check_adjunction(adj_base, settings=settings))
        require_passed(check_adjunction(adj_total, settings=settings))
    except StructuralError as exc:
        raise StructuralError(f"component adjunction fails its laws: {exc}") from exc

    adj = assemble_arrow_adjunction(adj_base, adj_total, phi, psi, p1=p1, p2=p2)
    require_passed(check_lax_morphism(adj.left, settings=settings))
    require_passed(check_lax_morphism(adj.right, settings=settings))

    phi_inv = invert_nat_trans(phi)
    if phi_inv is None:
        log.info("lift refused", extra={"diagnosis": LiftDiagnosis.PHI_NOT_INVERTIBLE.value})
        return LiftResult(LiftDiagnosis.PHI_NOT_INVERTIBLE)
    expected = comate(phi_inv, p1=p1, p2=p2, adj_base=adj_base, adj_total=adj_total, verify=False)
    if expected.components != psi.components:
        log.info("lift refused", extra={"diagnosis": LiftDiagnosis.PSI_NOT_MATE.value})
        return LiftResult(LiftDiagnosis.PSI_NOT_MATE, expected_psi=expected)
    return LiftResult(LiftDiagnosis.LIFTED, adj, expected)

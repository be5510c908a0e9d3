"""Mate correspondence for a square of functors with adjunctions on two sides.

Given ``p1: E1 -> B1``, ``p2: E2 -> B2``, ``L_B ⊣ R_B`` between B1 and B2 and
``L_E ⊣ R_E`` between E1 and E2, a cell ``ψ: p1∘R_E ⇒ R_B∘p2`` transposes to
``ψ̃: L_B∘p1 ⇒ p2∘L_E`` and back.
"""

from __future__ import annotations

from dataclasses import dataclass

from catcomp.adjunction.core import Adjunction, check_adjunction
from catcomp.errors import StructuralError
from catcomp.fincat import (
    FunctorData,
    NatTransData,
    compose_functors,
    require_passed,
    vertical_compose_all,
    whisker,
)


@dataclass(frozen=True)
class MateSquare:
    p1: FunctorData
    p2: FunctorData
    adj_base: Adjunction
    adj_total: Adjunction
    psi: NatTransData


def _check_square(p1: FunctorData, p2: FunctorData, adj_base: Adjunction, adj_total: Adjunction, verify: bool) -> None:
    if adj_base.left.source is not p1.target or adj_base.left.target is not p2.target:
        raise StructuralError(f"base adjunction {adj_base.name} does not run from {p1.target.name} to {p2.target.name}")
    if adj_total.left.source is not p1.source or adj_total.left.target is not p2.source:
        raise StructuralError(f"total adjunction {adj_total.name} does not run from {p1.source.name} to {p2.source.name}")
    if verify:
        require_passed(check_adjunction(adj_base))
        require_passed(check_adjunction(adj_total))


def mate(sq: MateSquare, *, verify: bool = True) -> NatTransData:
    """``(ε_B·p2·L_E) ∘ (L_B·ψ·L_E) ∘ (L_B·p1·η_E)``."""
    p1, p2, adj_b, adj_e, psi = sq.p1, sq.p2, sq.adj_base, sq.adj_total, sq.psi
    _check_square(p1, p2, adj_b, adj_e, verify)
    L_B, R_B, L_E, R_E = adj_b.left, adj_b.right, adj_e.left, adj_e.right
    if psi.source != compose_functors(p1, R_E) or psi.target != compose_functors(R_B, p2):
        raise StructuralError(f"{psi.name} is not a cell {p1.name}∘{R_E.name} ⇒ {R_B.name}∘{p2.name}")

    composite = vertical_compose_all(
        whisker(adj_b.counit, right=compose_functors(p2, L_E)),
        whisker(psi, left=L_B, right=L_E),
        whisker(adj_e.unit, left=compose_functors(L_B, p1)),
    )
    return NatTransData(
        f"mate({psi.name})",
        compose_functors(L_B, p1),
        compose_functors(p2, L_E),
        composite.components,
    )


def comate(
    chi: NatTransData,
    *,
    p1: FunctorData,
    p2: FunctorData,
    adj_base: Adjunction,
    adj_total: Adjunction,
    verify: bool = True,
) -> NatTransData:
    """Inverse of ``mate``: ``(R_B·p2·ε_E) ∘ (R_B·χ·R_E) ∘ (η_B·p1·R_E)``."""
    _check_square(p1, p2, adj_base, adj_total, verify)
    L_B, R_B, L_E, R_E = adj_base.left, adj_base.right, adj_total.left, adj_total.right
    if chi.source != compose_functors(L_B, p1) or chi.target != compose_functors(p2, L_E):
        raise StructuralError(f"{chi.name} is not a cell {L_B.name}∘{p1.name} ⇒ {p2.name}∘{L_E.name}")

    composite = vertical_compose_all(
        whisker(adj_total.counit, left=compose_functors(R_B, p2)),
        whisker(chi, left=R_B, right=R_E),
        whisker(adj_base.unit, right=compose_functors(p1, R_E)),
    )
    return NatTransData(
        f"comate({chi.name})",
        compose_functors(p1, R_E),
        compose_functors(R_B, p2),
        composite.components,
    )

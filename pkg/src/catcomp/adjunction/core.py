"""Adjunctions L ⊣ R between finite categories and their law checks."""

from __future__ import annotations

from dataclasses import dataclass

from catcomp.config import Settings, default_settings
from catcomp.errors import StructuralError
from catcomp.fincat import (
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    compose_functors,
    identity_functor,
    identity_nat_trans,
    opposite_functor,
    validate_nat_trans,
)


@dataclass(frozen=True)
class Adjunction:
    """``left: A -> B`` ⊣ ``right: B -> A`` with ``unit: Id_A ⇒ RL`` and ``counit: LR ⇒ Id_B``."""

    name: str
    left: FunctorData
    right: FunctorData
    unit: NatTransData
    counit: NatTransData

    @property
    def lower(self):
        return self.left.source

    @property
    def upper(self):
        return self.left.target


def check_typing(adj: Adjunction) -> None:
    L, R = adj.left, adj.right
    if L.source is not R.target or L.target is not R.source:
        raise StructuralError(f"adjunction {adj.name}: {L.name} and {R.name} are not opposed")
    if adj.unit.source != identity_functor(L.source) or adj.unit.target != compose_functors(R, L):
        raise StructuralError(f"adjunction {adj.name}: unit is not Id ⇒ {R.name}∘{L.name}")
    if adj.counit.source != compose_functors(L, R) or adj.counit.target != identity_functor(L.target):
        raise StructuralError(f"adjunction {adj.name}: counit is not {L.name}∘{R.name} ⇒ Id")


def check_adjunction(adj: Adjunction, *, settings: Settings | None = None) -> LawReport:
    """Both triangle identities, componentwise; mistyped unit/counit raise."""
    settings = settings or default_settings()
    check_typing(adj)
    out = ViolationLog(f"adjunction {adj.name}", settings.max_witnesses)
    out.extend(validate_nat_trans(adj.unit, settings=settings).prefixed("unit"))
    out.extend(validate_nat_trans(adj.counit, settings=settings).prefixed("counit"))
    if out.report().structural:
        return out.report()

    L, R = adj.left, adj.right
    A, B = L.source, L.target
    eta, eps = adj.unit.components, adj.counit.components
    for a in range(A.object_count):
        la = L.obj_map[a]
        if B.compose(eps[la], L.mor_map[eta[a]]) != B.identity(la):
            out.add("triangle.left", (A.objects[a],))
    for b in range(B.object_count):
        rb = R.obj_map[b]
        if A.compose(R.mor_map[eps[b]], eta[rb]) != A.identity(rb):
            out.add("triangle.right", (B.objects[b],))
    return out.report()


def check_hom_bijection(adj: Adjunction, *, settings: Settings | None = None) -> LawReport:
    """Independent oracle: ``g ↦ R(g) ∘ η_a`` is a bijection Hom(La, b) → Hom(a, Rb)."""
    settings = settings or default_settings()
    check_typing(adj)
    L, R = adj.left, adj.right
    A, B = L.source, L.target
    eta = adj.unit.components
    out = ViolationLog(f"adjunction {adj.name}", settings.max_witnesses)
    for a in range(A.object_count):
        la = L.obj_map[a]
        for b in range(B.object_count):
            rb = R.obj_map[b]
            left_side = B.hom(la, b)
            right_side = A.hom(a, rb)
            image = {A.compose(R.mor_map[g], eta[a]) for g in left_side}
            if len(image) != len(left_side) or len(image) != len(right_side):
                out.add("adjunction.hom_bijection", (A.objects[a], B.objects[b]))
    return out.report()


def identity_adjunction(c) -> Adjunction:
    ident = identity_functor(c)
    cell = identity_nat_trans(ident)
    return Adjunction(f"Id⊣Id on {c.name}", ident, ident, cell, cell)


def opposite_adjunction(adj: Adjunction) -> Adjunction:
    """``L ⊣ R`` becomes ``R^op ⊣ L^op`` with unit ``ε^op`` and counit ``η^op``."""
    L_op, R_op = opposite_functor(adj.left), opposite_functor(adj.right)
    unit = NatTransData(
        f"{adj.counit.name}^op",
        identity_functor(R_op.source),
        compose_functors(L_op, R_op),
        adj.counit.components,
    )
    counit = NatTransData(
        f"{adj.unit.name}^op",
        compose_functors(R_op, L_op),
        identity_functor(L_op.source),
        adj.unit.components,
    )
    return Adjunction(f"({adj.name})^op", R_op, L_op, unit, counit)

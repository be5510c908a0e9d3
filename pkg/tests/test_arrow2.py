from __future__ import annotations

from itertools import product

import pytest

from catcomp.adjunction import identity_adjunction
from catcomp.arrow2 import (
    ArrowObject,
    ArrowTwoCell,
    LiftDiagnosis,
    assemble_arrow_adjunction,
    check_arrow_adjunction,
    check_formal_adjunction,
    check_lax_morphism,
    check_two_cell,
    compose_lax,
    identity_lax,
    identity_two_cell,
    lax_morphism,
    lift_adjunction,
    project_base,
    project_total,
)
from catcomp.comprehension import section_iota
from catcomp.errors import StructuralError
from catcomp.fincat import compose_functors, enumerate_nat_trans, functor_from_labels, identity_functor, nat_trans
from catcomp.instances import cyclic_group_two, idempotent_monoid, pred_instance, terminal_category, walking_arrow


def _endo_cells(c):
    ident = identity_functor(c)
    return ident, list(enumerate_nat_trans(ident, ident))


def _lift(c, phi, psi):
    adj = identity_adjunction(c)
    ident = identity_functor(c)
    return lift_adjunction(adj, adj, phi, psi, p1=ident, p2=ident)


def test_identity_cells_lift_on_z2() -> None:
    z2 = cyclic_group_two()
    ident, cells = _endo_cells(z2)
    one = next(c for c in cells if c.components == (z2.identity(0),))
    result = _lift(z2, one, one)
    assert result.diagnosis is LiftDiagnosis.LIFTED
    assert result.lifted
    assert check_arrow_adjunction(result.adjunction).passed


def test_swap_is_not_the_mate_of_the_identity() -> None:
    z2 = cyclic_group_two()
    ident = identity_functor(z2)
    one = nat_trans("one", ident, ident, {0: z2.identity(0)})
    swap = nat_trans("swap", ident, ident, {0: z2.morphism_index("s")})
    result = _lift(z2, one, swap)
    assert result.diagnosis is LiftDiagnosis.PSI_NOT_MATE
    assert result.adjunction is None
    assert result.expected_psi.components == one.components


def test_swap_paired_with_itself_lifts() -> None:
    z2 = cyclic_group_two()
    ident = identity_functor(z2)
    swap = nat_trans("swap", ident, ident, {0: z2.morphism_index("s")})
    assert _lift(z2, swap, swap).lifted


def test_idempotent_phi_is_not_invertible() -> None:
    idem = idempotent_monoid()
    ident = identity_functor(idem)
    collapse = nat_trans("collapse", ident, ident, {0: idem.morphism_index("e")})
    one = nat_trans("one", ident, ident, {0: idem.identity(0)})
    assert _lift(idem, collapse, one).diagnosis is LiftDiagnosis.PHI_NOT_INVERTIBLE


@pytest.mark.parametrize("build", [cyclic_group_two, idempotent_monoid])
def test_criterion_agrees_with_direct_check(build) -> None:
    c = build()
    ident, cells = _endo_cells(c)
    adj = identity_adjunction(c)
    for phi, psi in product(cells, repeat=2):
        verdict = _lift(c, phi, psi).lifted
        direct = check_formal_adjunction(assemble_arrow_adjunction(adj, adj, phi, psi, p1=ident, p2=ident))
        assert verdict == direct.passed, (phi.components, psi.components, direct.violations)


def test_criterion_agrees_with_direct_check_on_the_pred_lift() -> None:
    sd = pred_instance((0, 1)).section_data
    base = sd.proj.target
    ident = identity_functor(base)
    base_adj = identity_adjunction(base)
    phis = list(enumerate_nat_trans(compose_functors(sd.proj, sd.section), ident))
    psis = list(enumerate_nat_trans(sd.adj.right, sd.proj))
    lifted = 0
    for phi, psi in product(phis, psis):
        result = lift_adjunction(base_adj, sd.adj, phi, psi, p1=ident, p2=sd.proj)
        direct = check_formal_adjunction(assemble_arrow_adjunction(base_adj, sd.adj, phi, psi, p1=ident, p2=sd.proj))
        assert result.lifted == direct.passed, (phi.components, psi.components, direct.violations)
        if result.lifted:
            lifted += 1
            assert check_arrow_adjunction(result.adjunction).passed
            assert psi.components == section_iota(sd).components
    assert lifted == 1


def test_projections_recover_component_adjunctions() -> None:
    z2 = cyclic_group_two()
    ident, cells = _endo_cells(z2)
    adj = identity_adjunction(z2)
    arrow = assemble_arrow_adjunction(adj, adj, cells[0], cells[0], p1=ident, p2=ident)
    assert project_base(arrow).left == adj.left
    assert project_total(arrow).unit.components == adj.unit.components


def test_lift_refuses_broken_component_adjunction() -> None:
    z2 = cyclic_group_two()
    ident = identity_functor(z2)
    swap = nat_trans("swap", ident, ident, {0: z2.morphism_index("s")})
    adj = identity_adjunction(z2)
    broken = type(adj)("bent", ident, ident, swap, adj.counit)
    with pytest.raises(StructuralError, match="component adjunction"):
        lift_adjunction(broken, adj, adj.unit, adj.unit, p1=ident, p2=ident)


def test_lax_morphisms_compose_with_identities() -> None:
    walk, term = walking_arrow(), terminal_category()
    bang = functor_from_labels("bang", walk, term, {"0": "*", "1": "*"}, {"u": "id_*"})
    source = ArrowObject("bang", bang)
    target = ArrowObject("Id_TERM", identity_functor(term))
    m = lax_morphism("m", source, target, bang, identity_functor(term))
    assert m.strict
    assert check_lax_morphism(m).passed
    composed = compose_lax(identity_lax(target), compose_lax(m, identity_lax(source)))
    assert composed.on_total == m.on_total
    assert composed.phi.components == m.phi.components
    assert check_two_cell(identity_two_cell(m), m, composed).passed


def test_perturbed_total_component_breaks_the_pasting() -> None:
    z2 = cyclic_group_two()
    m = identity_lax(ArrowObject("Z2", identity_functor(z2)))
    swap = nat_trans("swap", m.on_total, m.on_total, {0: z2.morphism_index("s")})
    one = identity_two_cell(m)
    report = check_two_cell(ArrowTwoCell(one.theta_base, swap), m, m)
    assert report.laws_failed() == ("two_cell.pasting",)
    assert report.witness("two_cell.pasting") == ("*",)
    base_swap = nat_trans("swap", m.on_base, m.on_base, {0: z2.morphism_index("s")})
    assert check_two_cell(ArrowTwoCell(base_swap, swap), m, m).passed


def test_lax_morphism_endpoints_are_checked() -> None:
    walk, term = walking_arrow(), terminal_category()
    bang = functor_from_labels("bang", walk, term, {"0": "*", "1": "*"}, {"u": "id_*"})
    source = ArrowObject("bang", bang)
    target = ArrowObject("Id_TERM", identity_functor(term))
    wrong = lax_morphism("wrong", source, target, bang, identity_functor(term))
    wrong = type(wrong)("wrong", target, source, bang, identity_functor(term), wrong.phi, True)
    with pytest.raises(StructuralError, match="wrong endpoints"):
        check_lax_morphism(wrong)

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcomp.adjunction import (
    Adjunction,
    MateSquare,
    check_adjunction,
    check_hom_bijection,
    comate,
    find_left_adjoint,
    find_right_adjoint,
    identity_adjunction,
    mate,
    opposite_adjunction,
    verify_cod_id_dom,
)
from catcomp.config import Settings
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat import (
    constant_functor,
    enumerate_nat_trans,
    functor_from_labels,
    generate_category,
    identity_functor,
    identity_nat_trans,
    nat_trans,
    validate_category,
)
from catcomp.instances import cyclic_group_two, idempotent_monoid, terminal_category, walking_arrow


def _bang(walk=None, term=None):
    walk = walk or walking_arrow()
    term = term or terminal_category()
    return functor_from_labels("bang", walk, term, {"0": "*", "1": "*"}, {"u": "id_*"})


def test_right_adjoint_of_bang_picks_the_terminal_object() -> None:
    adj = find_right_adjoint(_bang())
    assert adj is not None
    assert adj.right.obj_map == (1,)
    assert check_adjunction(adj).passed
    assert check_hom_bijection(adj).passed


def test_left_adjoint_of_bang_picks_the_initial_object() -> None:
    bang = _bang()
    adj = find_left_adjoint(bang)
    assert adj is not None
    assert adj.right is bang
    assert adj.left.obj_map == (0,)
    assert check_adjunction(adj).passed
    assert check_hom_bijection(adj).passed


def test_missing_adjoints_are_reported_as_none() -> None:
    walk, term = walking_arrow(), terminal_category()
    top = constant_functor(term, walk, 1)
    bot = constant_functor(term, walk, 0)
    assert find_right_adjoint(top) is None
    assert find_left_adjoint(bot) is None


def test_adjoint_search_respects_budget() -> None:
    with pytest.raises(ResourceError, match="exceeds budget"):
        find_right_adjoint(_bang(), settings=Settings(adjoint_budget=0))


def test_triangle_failure_is_independent_of_hom_counts() -> None:
    z2 = cyclic_group_two()
    ident = identity_functor(z2)
    swap = nat_trans("swap", ident, ident, {0: z2.morphism_index("s")})
    adj = Adjunction("bent", ident, ident, swap, identity_nat_trans(ident))
    report = check_adjunction(adj)
    assert set(report.laws_failed()) == {"triangle.left", "triangle.right"}
    # g ↦ g∘s is still a bijection on each hom-set
    assert check_hom_bijection(adj).passed


def test_mistyped_unit_is_structural() -> None:
    walk, term = walking_arrow(), terminal_category()
    bang = _bang(walk, term)
    bot = constant_functor(term, walk, 0)
    wrong = identity_nat_trans(identity_functor(term))
    adj = Adjunction("wrong", bang, bot, identity_nat_trans(identity_functor(walk)), wrong)
    with pytest.raises(StructuralError, match="unit is not"):
        check_adjunction(adj)


def test_opposite_adjunction_swaps_sides() -> None:
    adj = find_right_adjoint(_bang())
    op = opposite_adjunction(adj)
    assert op.left.source is adj.right.source.opposite
    assert check_adjunction(op).passed
    assert check_hom_bijection(op).passed


@pytest.mark.parametrize("build", [cyclic_group_two, idempotent_monoid, walking_arrow])
def test_mate_and_comate_are_mutually_inverse(build) -> None:
    c = build()
    adj = identity_adjunction(c)
    ident = identity_functor(c)
    for psi in enumerate_nat_trans(ident, ident):
        chi = mate(MateSquare(ident, ident, adj, adj, psi))
        back = comate(chi, p1=ident, p2=ident, adj_base=adj, adj_total=adj)
        assert back.components == psi.components


def test_mate_across_a_real_adjunction() -> None:
    adj = find_right_adjoint(_bang())
    walk, term = adj.left.source, adj.left.target
    p1, p2 = identity_functor(walk), identity_functor(term)
    psi = identity_nat_trans(adj.right)
    chi = mate(MateSquare(p1, p2, adj, adj, psi))
    assert chi.components == identity_nat_trans(adj.left).components
    assert comate(chi, p1=p1, p2=p2, adj_base=adj, adj_total=adj).components == psi.components


def test_mate_rejects_mistyped_cell() -> None:
    adj = find_right_adjoint(_bang())
    walk, term = adj.left.source, adj.left.target
    bad = identity_nat_trans(identity_functor(term))
    with pytest.raises(StructuralError, match="is not a cell"):
        mate(MateSquare(identity_functor(walk), identity_functor(term), adj, adj, bad))


def test_cod_id_dom_on_small_categories() -> None:
    for c in (walking_arrow(), cyclic_group_two(), idempotent_monoid()):
        report = verify_cod_id_dom(c)
        assert report.passed, report.violations


@pytest.mark.parametrize("seed", range(100))
def test_cod_id_dom_on_generated_categories(seed: int) -> None:
    c = generate_category(seed, 3, 8)
    assert c.object_count <= 3
    assert c.morphism_count <= 8
    assert validate_category(c).passed
    report = verify_cod_id_dom(c)
    assert report.passed, report.violations


@settings(max_examples=20, deadline=None)
@given(seed=st.integers(min_value=0, max_value=5_000))
def test_found_adjoints_pass_both_oracles(seed: int) -> None:
    c = generate_category(seed, 3, 6)
    term = terminal_category()
    to_point = functor_from_labels(
        "bang",
        c,
        term,
        {x: "*" for x in c.objects},
        {c.label(f): "id_*" for f in range(c.morphism_count) if not c.is_identity(f)},
    )
    for adj in (find_right_adjoint(to_point), find_left_adjoint(to_point)):
        if adj is None:
            continue
        assert check_adjunction(adj).passed
        assert check_hom_bijection(adj).passed

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcomp.comprehension import section_iota
from catcomp.errors import PreconditionError, StructuralError
from catcomp.fincat import (
    arrow_category,
    build_category,
    compose_functors,
    constant_functor,
    enumerate_factorizations,
    enumerate_nat_trans,
    functor_from_labels,
    generate_category,
    identity_functor,
    initial_objects,
    invert_nat_trans,
    is_pullback,
    nat_trans,
    pullback_counterexample,
    terminal_objects,
    validate_category,
    validate_functor,
    validate_nat_trans,
    vertical_compose,
    whisker,
)
from catcomp.instances import cyclic_group_two, idempotent_monoid, pred_instance, terminal_category, walking_arrow


def _parallel_pair():
    return build_category("PAR", ["a", "b"], [("f", "a", "b"), ("g", "a", "b")])


def _square_with_cone():
    # x and z both sit below a and y; only x is part of the square
    return build_category(
        "SQ",
        ["z", "x", "a", "y", "b"],
        [
            ("za", "z", "a"),
            ("zy", "z", "y"),
            ("zb", "z", "b"),
            ("xa", "x", "a"),
            ("xy", "x", "y"),
            ("xb", "x", "b"),
            ("ab", "a", "b"),
            ("yb", "y", "b"),
        ],
        {("ab", "xa"): "xb", ("yb", "xy"): "xb", ("ab", "za"): "zb", ("yb", "zy"): "zb"},
    )


def test_build_category_infers_identities_and_orders_morphisms() -> None:
    walk = walking_arrow()
    assert walk.objects == ("0", "1")
    assert [walk.label(i) for i in range(walk.morphism_count)] == ["id_0", "u", "id_1"]
    assert walk.is_identity(walk.morphism_index("id_1"))
    u = walk.morphism_index("u")
    assert walk.compose(walk.identity(1), u) == u
    assert walk.compose(u, walk.identity(0)) == u


def test_build_category_rejects_unknown_objects_and_duplicates() -> None:
    with pytest.raises(StructuralError, match="unknown object"):
        build_category("BAD", ["a"], [("f", "a", "b")])
    with pytest.raises(StructuralError, match="duplicate morphism label"):
        build_category("BAD", ["a"], [("f", "a", "a"), ("f", "a", "a")])
    with pytest.raises(StructuralError, match="duplicate object labels"):
        build_category("BAD", ["a", "a"], [])


def test_small_categories_pass_validation() -> None:
    for c in (terminal_category(), walking_arrow(), cyclic_group_two(), idempotent_monoid(), _square_with_cone()):
        report = validate_category(c)
        assert report.passed, report.violations


def test_missing_composite_is_structural() -> None:
    c = build_category("LOOP", ["*"], [("s", "*", "*")])
    report = validate_category(c)
    assert report.structural
    assert report.laws_failed() == ("category.composition.total",)


def test_identity_law_violation_is_reported() -> None:
    c = build_category("BROKEN", ["*"], [("e", "*", "*")], {("e", "e"): "e", ("e", "id_*"): "id_*"})
    report = validate_category(c)
    assert not report.structural
    assert "category.identity.right" in report.laws_failed()


def test_associativity_violation_has_witness() -> None:
    c = build_category(
        "NONASSOC",
        ["*"],
        [("a", "*", "*"), ("b", "*", "*")],
        {("a", "a"): "b", ("b", "b"): "b", ("a", "b"): "a", ("b", "a"): "b"},
    )
    report = validate_category(c)
    assert report.laws_failed() == ("category.associativity",)
    assert len(report.witness("category.associativity")) == 3


def test_opposite_is_an_involution_and_valid() -> None:
    z2 = cyclic_group_two()
    walk = walking_arrow()
    assert walk.opposite.opposite is walk
    assert walk.opposite.name == "WALK^op"
    u = walk.morphism_index("u")
    assert (walk.opposite.dom(u), walk.opposite.cod(u)) == (1, 0)
    assert validate_category(walk.opposite).passed
    assert validate_category(z2.opposite).passed


def test_functor_composition_failure() -> None:
    z2, idem = cyclic_group_two(), idempotent_monoid()
    f = functor_from_labels("collapse", z2, idem, {"*": "*"}, {"s": "e"})
    report = validate_functor(f)
    assert report.laws_failed() == ("functor.composition",)
    assert report.witness("functor.composition") == ("s", "s")


def test_functor_from_labels_requires_every_object() -> None:
    walk, term = walking_arrow(), terminal_category()
    with pytest.raises(StructuralError, match="unmapped"):
        functor_from_labels("F", walk, term, {"0": "*"}, {"u": "id_*"})


def test_functor_composition_is_associative_on_tables() -> None:
    walk, term = walking_arrow(), terminal_category()
    bang = functor_from_labels("bang", walk, term, {"0": "*", "1": "*"}, {"u": "id_*"})
    top = constant_functor(term, walk, 1)
    assert compose_functors(bang, top) == identity_functor(term)
    assert validate_functor(compose_functors(top, bang)).passed


def test_non_natural_family_is_reported() -> None:
    par = _parallel_pair()
    swap = functor_from_labels("swap", par, par, {"a": "a", "b": "b"}, {"f": "g", "g": "f"})
    assert validate_functor(swap).passed
    ident = identity_functor(par)
    alpha = nat_trans("alpha", ident, swap, {0: par.identity(0), 1: par.identity(1)})
    report = validate_nat_trans(alpha)
    assert set(report.laws_failed()) == {"nat_trans.naturality"}


def test_mistyped_component_is_structural() -> None:
    walk = walking_arrow()
    ident = identity_functor(walk)
    alpha = nat_trans("alpha", ident, ident, {0: walk.morphism_index("u"), 1: walk.identity(1)})
    assert validate_nat_trans(alpha).structural


def test_enumerate_nat_trans_and_inverses() -> None:
    z2, idem = cyclic_group_two(), idempotent_monoid()
    z2_cells = list(enumerate_nat_trans(identity_functor(z2), identity_functor(z2)))
    assert len(z2_cells) == 2
    assert all(invert_nat_trans(cell) is not None for cell in z2_cells)
    idem_cells = list(enumerate_nat_trans(identity_functor(idem), identity_functor(idem)))
    assert len(idem_cells) == 2
    collapse = next(c for c in idem_cells if c.components == (idem.morphism_index("e"),))
    assert invert_nat_trans(collapse) is None
    e = idem.morphism_index("e")
    assert vertical_compose(collapse, collapse).components == (e,)


def test_whisker_by_functor_relabels_components() -> None:
    walk, term = walking_arrow(), terminal_category()
    top = constant_functor(term, walk, 1)
    bang = functor_from_labels("bang", walk, term, {"0": "*", "1": "*"}, {"u": "id_*"})
    unit = nat_trans("eta", identity_functor(walk), compose_functors(top, bang), {0: walk.morphism_index("u"), 1: walk.identity(1)})
    assert validate_nat_trans(unit).passed
    at_top = whisker(unit, right=top)
    assert at_top.components == (walk.identity(1),)


def test_initial_and_terminal_objects() -> None:
    walk = walking_arrow()
    assert initial_objects(walk) == [0]
    assert terminal_objects(walk) == [1]
    assert initial_objects(cyclic_group_two()) == []
    assert terminal_objects(terminal_category()) == [0]


def test_pullback_detection() -> None:
    walk = walking_arrow()
    u = walk.morphism_index("u")
    assert is_pullback(walk, u, walk.identity(0), walk.identity(1), u)

    sq = _square_with_cone()
    m = sq.morphism_index
    witness = pullback_counterexample(sq, m("xy"), m("xa"), m("yb"), m("ab"))
    assert witness == (sq.object_index("z"), m("za"), m("zy"))


def test_pullback_rejects_non_commuting_square() -> None:
    par = _parallel_pair()
    with pytest.raises(StructuralError, match="does not commute"):
        pullback_counterexample(par, par.morphism_index("f"), par.identity(0), par.identity(1), par.morphism_index("g"))


def test_arrow_category_of_walking_arrow() -> None:
    arrows = arrow_category(walking_arrow())
    assert arrows.arrow_cat.object_count == 3
    assert arrows.arrow_cat.morphism_count == 6
    assert validate_category(arrows.arrow_cat).passed
    for f in (arrows.dom_f, arrows.cod_f, arrows.id_f):
        assert validate_functor(f).passed
    assert validate_nat_trans(arrows.hom).passed
    assert compose_functors(arrows.dom_f, arrows.id_f) == identity_functor(arrows.base)
    assert compose_functors(arrows.cod_f, arrows.id_f) == identity_functor(arrows.base)


def _through(arrows, alpha):
    """Every functor a with dom∘a, cod∘a the endpoints of alpha and hom·a = alpha."""
    return [
        a
        for a in enumerate_factorizations(arrows, alpha.source, alpha.target)
        if whisker(arrows.hom, right=a).components == alpha.components
    ]


@pytest.mark.parametrize("build", [terminal_category, walking_arrow, cyclic_group_two, idempotent_monoid, _parallel_pair])
def test_factorization_is_unique(build) -> None:
    arrows = arrow_category(build())
    assert arrows.arrow_cat.morphism_count <= 30
    factor = arrows.factorize(arrows.hom)
    assert factor == identity_functor(arrows.arrow_cat)
    assert _through(arrows, arrows.hom) == [factor]


def test_factorization_of_the_comprehension_inclusion_is_unique() -> None:
    pred = pred_instance((0,))
    assert pred.total.morphism_count <= 30
    arrows = arrow_category(pred.base)
    iota = section_iota(pred.section_data)
    assert _through(arrows, iota) == [arrows.factorize(iota)]


def test_other_cells_give_other_factorizations() -> None:
    arrows = arrow_category(cyclic_group_two())
    found = list(enumerate_factorizations(arrows, arrows.dom_f, arrows.cod_f))
    # both central elements of Z/2 are natural dom ⇒ cod
    assert len(found) == 2
    assert _through(arrows, arrows.hom) == [arrows.factorize(arrows.hom)]


def test_factorize_refuses_non_natural_family() -> None:
    par = _parallel_pair()
    arrows = arrow_category(par)
    swap = functor_from_labels("swap", par, par, {"a": "a", "b": "b"}, {"f": "g", "g": "f"})
    alpha = nat_trans("alpha", identity_functor(par), swap, {0: par.identity(0), 1: par.identity(1)})
    with pytest.raises(PreconditionError, match="not natural"):
        arrows.factorize(alpha)


@settings(max_examples=40, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_generated_categories_satisfy_the_laws(seed: int) -> None:
    c = generate_category(seed, 4, 10)
    assert 1 <= c.object_count <= 4
    assert c.morphism_count <= 10
    assert validate_category(c).passed
    assert validate_category(c.opposite).passed


@settings(max_examples=15, deadline=None)
@given(seed=st.integers(min_value=0, max_value=10_000))
def test_arrow_category_of_generated_categories(seed: int) -> None:
    arrows = arrow_category(generate_category(seed, 3, 6))
    assert validate_category(arrows.arrow_cat).passed
    assert validate_nat_trans(arrows.hom).passed


def test_generator_is_deterministic() -> None:
    a, b = generate_category(7, 4, 10), generate_category(7, 4, 10)
    assert a.objects == b.objects
    assert a.morphisms == b.morphisms


def test_generator_bounds_must_be_positive() -> None:
    with pytest.raises(PreconditionError, match="at least 1"):
        generate_category(0, 0, 5)
    with pytest.raises(PreconditionError, match="at least 1"):
        generate_category(0, 3, 0)

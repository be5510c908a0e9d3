from __future__ import annotations

import pytest

from catcomp.adjunction import check_adjunction, check_hom_bijection
from catcomp.arrow2 import LiftDiagnosis
from catcomp.comprehension import (
    SectionKind,
    build_comprehension,
    check_comprehension,
    check_image_hom_bijection,
    check_quotient,
    check_section_data,
    comprehension_with_image,
    derive_comprehension_from_section,
    derive_quotient_from_section,
    lift_section_adjunction,
    opposite_section_data,
    section_iota,
)
from catcomp.errors import PreconditionError, StructuralError
from catcomp.fibration import build_image_structure
from catcomp.fincat import (
    NatTransData,
    arrow_category,
    constant_functor,
    enumerate_nat_trans,
    identity_functor,
    identity_nat_trans,
    validate_functor,
    validate_nat_trans,
)
from catcomp.instances import UnionFind, pred_instance, rel_instance, walking_arrow


@pytest.fixture(scope="module")
def pred():
    return pred_instance((0, 1))


@pytest.fixture(scope="module")
def rel():
    return rel_instance((0, 1))


@pytest.fixture(
    scope="module",
    params=[(0, 1), pytest.param((0, 1, 2), marks=pytest.mark.slow)],
    ids=["pred01", "pred012"],
)
def any_pred(request):
    return pred_instance(request.param)


def _union_find_minima(carrier, pairs) -> frozenset[int]:
    uf = UnionFind(carrier)
    for x, y in pairs:
        uf.union(x, y)
    return frozenset(uf.find(x) for x in carrier)


def test_pred_section_data_is_an_adjunction(pred) -> None:
    sd = pred.section_data
    assert sd.kind is SectionKind.COMPREHENSION
    assert sd.partner is sd.adj.right
    assert check_section_data(sd).passed


def test_pred_adjunction_passes_both_oracles(any_pred) -> None:
    adj = any_pred.section_data.adj
    assert check_adjunction(adj).passed
    assert check_hom_bijection(adj).passed
    iota = section_iota(any_pred.section_data)
    assert validate_nat_trans(iota).passed
    arrows = arrow_category(any_pred.base)
    assert check_comprehension(derive_comprehension_from_section(any_pred.section_data, arrows), arrows).passed


def test_section_iota_is_the_subset_inclusion(pred) -> None:
    st = pred.structure
    iota = section_iota(pred.section_data)
    for e, (a, r) in enumerate(st.structures):
        f = iota.components[e]
        assert pred.base.cod(f) == a
        assert pred.carriers[pred.base.dom(f)] == r
        assert st.sets.as_mapping(f) == {x: x for x in r}


def test_comprehension_factors_through_the_arrow_category(pred) -> None:
    arrows = arrow_category(pred.base)
    cs = derive_comprehension_from_section(pred.section_data, arrows)
    assert validate_functor(cs.P).passed
    assert check_comprehension(cs, arrows).passed
    assert cs.comp == pred.comp_or_quot
    assert cs.lax.strict is False


def test_supplied_iota_must_match_the_section(pred) -> None:
    arrows = arrow_category(pred.base)
    derived = section_iota(pred.section_data)
    assert derive_comprehension_from_section(pred.section_data, arrows, iota=derived).iota.components == derived.components
    # swap in the identity components where they typecheck; at least one differs
    B = pred.base
    wrong = list(derived.components)
    k = next(e for e, f in enumerate(wrong) if not B.is_identity(f))
    wrong[k] = B.identity(B.cod(wrong[k]))
    bogus = NatTransData("ι'", derived.source, derived.target, tuple(wrong))
    with pytest.raises(PreconditionError, match="disagrees"):
        derive_comprehension_from_section(pred.section_data, arrows, iota=bogus)


def test_pred_section_adjunction_lifts(pred) -> None:
    result = lift_section_adjunction(pred.section_data, section_iota(pred.section_data))
    assert result.diagnosis is LiftDiagnosis.LIFTED
    assert result.adjunction is not None


def test_only_the_derived_iota_lifts(pred) -> None:
    sd = pred.section_data
    derived = section_iota(sd)
    lifting = [
        iota.components
        for iota in enumerate_nat_trans(derived.source, derived.target)
        if lift_section_adjunction(sd, iota).diagnosis is LiftDiagnosis.LIFTED
    ]
    assert lifting == [derived.components]


def test_comprehension_with_image_on_pred(pred) -> None:
    s = build_image_structure(pred.proj, pred.section, pred.hints)
    cwi = comprehension_with_image(s, pred.section_data, arrow_category(pred.base))
    assert cwi.report.passed, cwi.report.violations
    assert cwi.adj.left is cwi.image
    assert check_image_hom_bijection(s, pred.section_data).passed


def test_rel_quotient_matches_union_find(rel) -> None:
    sd = rel.section_data
    assert sd.kind is SectionKind.QUOTIENT
    assert check_section_data(sd).passed
    for i, (a, r) in enumerate(rel.structure.structures):
        assert rel.carriers[sd.partner.obj_map[i]] == _union_find_minima(rel.carriers[a], r), rel.total.objects[i]


def test_rel_quotient_structure(rel) -> None:
    arrows = arrow_category(rel.base)
    qs = derive_quotient_from_section(rel.section_data, arrows)
    assert check_quotient(qs, arrows).passed
    assert qs.quot is rel.section_data.adj.left


@pytest.mark.slow
def test_rel_on_three_elements_end_to_end() -> None:
    rel = rel_instance((0, 1, 2))
    sd = rel.section_data
    assert rel.total.object_count == 567
    for i, (a, r) in enumerate(rel.structure.structures):
        assert rel.carriers[sd.partner.obj_map[i]] == _union_find_minima(rel.carriers[a], r), rel.total.objects[i]
    chain = rel.structure.object_of(rel.carrier_index({0, 1, 2}), frozenset({(0, 1)}))
    assert rel.carriers[sd.partner.obj_map[chain]] == frozenset({0, 2})
    arrows = arrow_category(rel.base)
    qs = derive_quotient_from_section(sd, arrows)
    assert check_quotient(qs, arrows).passed
    assert validate_nat_trans(qs.pi).passed
    assert check_section_data(sd).passed
    assert check_hom_bijection(sd.adj).passed
    assert check_adjunction(sd.adj).passed


def test_quotient_section_gives_no_iota(rel) -> None:
    with pytest.raises(StructuralError, match="comprehension section"):
        section_iota(rel.section_data)


def test_comprehension_section_gives_no_quotient(pred) -> None:
    with pytest.raises(StructuralError, match="quotient section"):
        derive_quotient_from_section(pred.section_data, arrow_category(pred.base))


def test_opposite_of_a_quotient_section_is_a_comprehension(rel) -> None:
    op = opposite_section_data(rel.section_data)
    assert op.kind is SectionKind.COMPREHENSION
    assert op.proj.source is rel.total.opposite
    assert check_section_data(op).passed
    with pytest.raises(StructuralError, match="only quotient"):
        opposite_section_data(op)


def test_identity_comprehension_is_strict() -> None:
    walk = walking_arrow()
    ident = identity_functor(walk)
    arrows = arrow_category(walk)
    cs = build_comprehension(ident, ident, identity_nat_trans(ident), arrows)
    assert cs.lax.strict is True
    assert [arrows.arrow_cat.objects[i] for i in cs.P.obj_map] == ["id_0", "id_1"]
    with pytest.raises(StructuralError, match="is not a transformation"):
        build_comprehension(ident, constant_functor(walk, walk, 1), identity_nat_trans(ident), arrows)

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from catcomp.adjunction import check_hom_bijection, find_left_adjoint
from catcomp.config import Settings
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat import validate_category
from catcomp.instances import (
    InstanceDescriptor,
    Partition,
    UnionFind,
    empty_relation_section,
    equivalence_closure,
    finite_sets,
    kleene_gfp,
    kleene_lfp,
    load_instance,
    poset_category,
    powerset_instance,
    powerset_step,
    pred_instance,
    rel_instance,
    rel_quotient_object,
    subset_label,
    validate_instance,
)


def test_union_find_roots_are_block_minima() -> None:
    uf = UnionFind(range(5))
    uf.union(3, 1)
    uf.union(4, 3)
    assert uf.find(4) == 1
    assert uf.find(0) == 0
    assert uf.find(9) == 9


def test_equivalence_closure_orders_blocks() -> None:
    part = equivalence_closure({0, 1, 2, 3}, [(2, 0), (3, 3)])
    assert part.blocks == (frozenset({0, 2}), frozenset({1}), frozenset({3}))
    assert part.representative(2) == 0
    assert part.minima() == frozenset({0, 1, 3})
    assert rel_quotient_object({0, 1, 2}, [(1, 2)]) == frozenset({0, 1})


def test_partition_rejects_bad_blocks() -> None:
    with pytest.raises(StructuralError, match="overlap"):
        Partition(frozenset({0, 1}), (frozenset({0, 1}), frozenset({1})))
    with pytest.raises(StructuralError, match="do not cover"):
        Partition(frozenset({0, 1}), (frozenset({0}),))
    with pytest.raises(StructuralError, match="leaves the carrier"):
        equivalence_closure({0}, [(0, 1)])


@settings(max_examples=50, deadline=None)
@given(pairs=st.lists(st.tuples(st.integers(0, 5), st.integers(0, 5)), max_size=8))
def test_closure_is_an_equivalence(pairs) -> None:
    part = equivalence_closure(range(6), pairs)
    for x, y in pairs:
        assert part.block_of(x) == part.block_of(y)
    assert sum(len(b) for b in part.blocks) == 6


def test_kleene_iteration() -> None:
    step = powerset_step({0}, [(0, 1), (2, 3), (3, 2)])
    assert kleene_lfp(step) == frozenset({0, 1})
    # 2 and 3 only feed each other
    assert kleene_gfp(step, {0, 1, 2, 3}) == frozenset({0, 1, 2, 3})
    assert kleene_gfp(powerset_step({0}, [(2, 3)]), {0, 1, 2, 3}) == frozenset({0})


def test_truncated_set_is_a_category() -> None:
    sets = finite_sets({0, 1})
    assert [subset_label(s) for s in sets.subsets] == ["{}", "{0}", "{1}", "{0,1}"]
    assert sets.category.morphism_count == 18
    assert validate_category(sets.category).passed
    full, one = sets.subset_index({0, 1}), sets.subset_index({1})
    f = sets.function(full, one, {0: 1, 1: 1})
    assert sets.image(f, {0}) == frozenset({1})
    inc = sets.inclusion(one, full)
    assert sets.as_mapping(inc) == {1: 1}


def test_poset_category_is_thin() -> None:
    divides = poset_category("DIV", ["1", "2", "4"], lambda x, y: (2**y) % (2**x) == 0)
    assert divides.category.morphism_count == 6
    assert divides.leq(0, 2)
    assert not divides.leq(2, 0)
    assert divides.category.dom(divides.arrow(0, 2)) == 0


@pytest.mark.parametrize(
    "build",
    [
        lambda: pred_instance((0, 1)),
        pytest.param(lambda: rel_instance((0, 1)), marks=pytest.mark.slow),
        lambda: powerset_instance((0, 1, 2), (0,), ((0, 1), (1, 2))),
    ],
    ids=["pred", "rel", "pow"],
)
def test_instances_validate(build) -> None:
    bundle = build()
    report = validate_instance(bundle)
    assert report.passed, report.violations


def test_pred_sizes() -> None:
    bundle = pred_instance((0, 1))
    assert bundle.total.object_count == 9
    assert bundle.base.morphism_count == 18
    assert bundle.carrier_index({0, 1}) == 3
    assert bundle.total.objects[bundle.section.obj_map[3]] == "({0,1},{0,1})"


def test_loader_dispatches_on_kind() -> None:
    bundle = load_instance(InstanceDescriptor("pow", (0, 1), (0,), ((0, 1),)))
    assert bundle.kind == "pow"
    assert bundle.algebra_pair is not None
    assert load_instance(InstanceDescriptor("rel", (0,))).kind == "rel"
    with pytest.raises(StructuralError, match="unknown instance kind"):
        load_instance(InstanceDescriptor("graph", (0,)))


@pytest.mark.parametrize(
    ("descriptor", "bound"),
    [
        (InstanceDescriptor("pred", (0, 1, 2)), Settings(pred_max_universe=2)),
        (InstanceDescriptor("rel", (0, 1, 2, 3)), Settings()),
        (InstanceDescriptor("pow", (0, 1, 2, 3)), Settings()),
    ],
)
def test_universe_bounds(descriptor, bound) -> None:
    with pytest.raises(ResourceError, match="exceeds the bound"):
        load_instance(descriptor, settings=bound)


@pytest.mark.slow
def test_rel_universe_of_three_is_accepted_reduced() -> None:
    bundle = load_instance(InstanceDescriptor("rel", (0, 1, 2)), settings=Settings())
    assert bundle.total.name == "Rel{0,1,2}⁻"
    assert bundle.total.object_count == 567


def test_reduced_rel_is_a_wide_subcategory_with_the_same_adjunction() -> None:
    full = rel_instance((0, 1))
    reduced = rel_instance((0, 1), reduced=True)
    assert reduced.total.objects == full.total.objects
    assert reduced.total.morphism_count < full.total.morphism_count
    assert validate_category(reduced.total).passed
    st = full.structure
    for k, m in enumerate(reduced.total.morphisms):
        f = reduced.proj.mor_map[k]
        assert full.proj.mor_map[st.morphism_of(f, m.dom, m.cod)] == f
    assert reduced.comp_or_quot.obj_map == full.comp_or_quot.obj_map
    assert check_hom_bijection(reduced.adj).passed
    with pytest.raises(StructuralError, match="is not a morphism"):
        empty_relation_section(reduced)


def test_powerset_rejects_foreign_elements() -> None:
    with pytest.raises(StructuralError, match="not inside"):
        powerset_instance((0, 1), (2,), ())
    with pytest.raises(StructuralError, match="leaves"):
        powerset_instance((0, 1), (), ((0, 5),))


def test_empty_relation_section_has_no_left_adjoint() -> None:
    bundle = rel_instance((0,))
    section = empty_relation_section(bundle)
    assert find_left_adjoint(section) is None
    with pytest.raises(StructuralError, match="needs a rel instance"):
        empty_relation_section(pred_instance((0,)))

from __future__ import annotations

import pytest

from catcomp.comprehension import Flag, NotionClassification, NotionVerdict, classify_notion, hierarchy_violations
from catcomp.fincat import constant_functor
from catcomp.instances import empty_predicate_section, pred_instance, terminal_category, walking_arrow


@pytest.fixture(scope="module")
def pred():
    return pred_instance((0, 1))


def _flags(nc: NotionClassification) -> dict[str, str]:
    return {name: entry["flag"] for name, entry in nc.as_record().items()}


@pytest.mark.parametrize("universe", [(0, 1), pytest.param((0, 1, 2), marks=pytest.mark.slow)])
def test_pred_with_truth_section_is_every_notion(universe) -> None:
    bundle = pred_instance(universe)
    nc = classify_notion(bundle.proj, bundle.section_data)
    assert _flags(nc) == {"jacobs": "true", "d_category": "true", "tc_opfibration": "true", "lawvere": "true"}
    assert hierarchy_violations(nc) == []


def test_empty_predicate_section_is_not_terminal(pred) -> None:
    nc = classify_notion(pred.proj, empty_predicate_section(pred))
    assert nc.tc_opfibration.flag is Flag.TRUE
    assert nc.jacobs.flag is Flag.TRUE
    assert nc.d_category.flag is Flag.FALSE
    assert nc.d_category.witnesses[0] == "⋆{0} not terminal for ({0},{0})"
    assert nc.lawvere.flag is Flag.FALSE
    assert hierarchy_violations(nc) == []


def test_terminality_is_read_in_each_fiber(pred) -> None:
    nc = classify_notion(pred.proj, empty_predicate_section(pred))
    # only the non-empty predicates lack a vertical map into (A, ∅)
    assert set(nc.d_category.witnesses[:5]) == {
        "⋆{0} not terminal for ({0},{0})",
        "⋆{1} not terminal for ({1},{1})",
        "⋆{0,1} not terminal for ({0,1},{0})",
        "⋆{0,1} not terminal for ({0,1},{1})",
        "⋆{0,1} not terminal for ({0,1},{0,1})",
    }
    assert not any("not terminal for ({0,1},{})" in w for w in nc.d_category.witnesses)


def test_missing_section_leaves_flags_undetermined(pred) -> None:
    nc = classify_notion(pred.proj)
    assert {v.flag for v in (nc.jacobs, nc.d_category, nc.tc_opfibration, nc.lawvere)} == {Flag.UNDETERMINED}
    assert nc.tc_opfibration.witnesses == ("no section supplied",)


def test_non_fibration_fails_the_cartesian_notions() -> None:
    at_target = constant_functor(terminal_category(), walking_arrow(), 1)
    nc = classify_notion(at_target)
    assert nc.jacobs.flag is Flag.FALSE
    assert nc.jacobs.witnesses == ("no cartesian lift of u at *",)
    assert nc.d_category.flag is Flag.FALSE
    assert nc.lawvere.witnesses == ("not a bifibration",)
    # it is an opfibration, so only the section is missing
    assert nc.tc_opfibration.flag is Flag.UNDETERMINED


def test_hierarchy_flags_determined_contradictions() -> None:
    yes, no, unknown = NotionVerdict(Flag.TRUE), NotionVerdict(Flag.FALSE), NotionVerdict(Flag.UNDETERMINED)
    assert hierarchy_violations(NotionClassification(no, yes, no, yes)) == [
        "d_category without jacobs",
        "lawvere without tc_opfibration",
    ]
    assert hierarchy_violations(NotionClassification(unknown, yes, unknown, yes)) == []

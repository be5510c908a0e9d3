from __future__ import annotations

import json
import shutil
import subprocess
import sys
from pathlib import Path

import pytest

from catcomp.cli import (
    EXIT_ERROR,
    EXIT_LAW_FAILED,
    EXIT_OK,
    RunFlags,
    Status,
    main,
    parse_documents,
    run,
)

REPO_ROOT = Path(__file__).resolve().parents[1]
FIXTURES = REPO_ROOT / "fixtures"


def _docs(name: str):
    return parse_documents((FIXTURES / name).read_text(encoding="utf-8"))


@pytest.mark.parametrize(
    "name",
    [
        "walk.cat",
        "z2.cat",
        "idem.cat",
        pytest.param("pred.inst", marks=pytest.mark.slow),
        pytest.param("rel.inst", marks=pytest.mark.slow),
        pytest.param("pow.inst", marks=pytest.mark.slow),
    ],
)
def test_fixture_pipelines_pass(name: str) -> None:
    report = run("run-pipeline", _docs(name))
    assert report.exit_status == EXIT_OK, report.render()
    assert report.checks
    assert all(c.status is Status.PASS for c in report.checks)
    assert len(report.record["steps"]) == len(report.checks)


def test_check_category_reports_sizes() -> None:
    report = run("check-category", _docs("walk.cat"), targets=["WALK"])
    assert report.exit_status == EXIT_OK
    assert [c.name for c in report.checks] == ["category WALK"]
    assert report.record["WALK"] == {"objects": 2, "morphisms": 3}


def test_law_failure_exits_one() -> None:
    docs = parse_documents(
        "category NONASSOC\nobjects: *\nmorphisms:\n  a: * -> *\n  b: * -> *\n"
        "compose:\n  a a = b\n  b b = b\n  a b = a\n  b a = b\nend\n"
    )
    report = run("check-category", docs)
    assert report.exit_status == EXIT_LAW_FAILED
    failed = [c for c in report.checks if c.status is Status.FAIL]
    assert [c.name for c in failed] == ["category.associativity"]
    assert failed[0].witnesses


def test_check_two_cell_reads_cells_between_strict_lax_morphisms() -> None:
    docs = parse_documents(
        "category PAR\nobjects: a b\nmorphisms:\n  f: a -> b\n  g: a -> b\nend\n\n"
        "functor flip: PAR -> PAR\nobjects:\n  a -> a\n  b -> b\nmorphisms:\n  f -> g\n  g -> f\nend\n\n"
        "nat_trans bent: Id_PAR => flip\ncomponents:\n  a -> id_a\n  b -> id_b\nend\n"
    )
    report = run("check-two-cell", docs, targets=["bent"])
    assert report.exit_status == EXIT_LAW_FAILED
    failed = {c.name for c in report.checks if c.status is Status.FAIL}
    assert failed == {"two_cell.base.nat_trans.naturality", "two_cell.total.nat_trans.naturality"}
    assert run("check-two-cell", _docs("z2.cat"), targets=["swap"]).exit_status == EXIT_OK


def test_structural_violation_exits_two() -> None:
    docs = parse_documents("category LOOP\nobjects: *\nmorphisms:\n  s: * -> *\nend\n")
    report = run("check-category", docs)
    assert report.exit_status == EXIT_ERROR
    assert "category.composition.total" in report.error


def test_unknown_command_and_missing_target() -> None:
    report = run("check-everything", [])
    assert report.exit_status == EXIT_ERROR
    assert "unknown command" in report.error
    missing = run("check-functor", _docs("walk.cat"), targets=["nope"])
    assert missing.exit_status == EXIT_ERROR
    wrong_kind = run("check-functor", _docs("walk.cat"), targets=["WALK"])
    assert wrong_kind.exit_status == EXIT_ERROR
    assert "expected functor" in wrong_kind.error


def test_seeded_category_is_generated_and_serialized() -> None:
    report = run("check-category", [], RunFlags(seed=11))
    assert report.exit_status == EXIT_OK
    generated = report.record["generated"]
    assert generated.startswith("category ")
    # the serialized category parses back to the one that was checked
    (doc,) = parse_documents(generated)
    assert report.record[doc.name]["objects"] == len(doc.body.objects)


def test_lift_adjunction_by_name_reports_the_diagnosis() -> None:
    docs = _docs("z2.cat")
    ok = run("lift-adjunction", docs, targets=["trivial", "trivial", "one", "one", "Id_Z2", "Id_Z2"])
    assert ok.exit_status == EXIT_OK
    assert ok.record["diagnosis"] == "lifted"
    bad = run("lift-adjunction", docs, targets=["trivial", "trivial", "one", "swap", "Id_Z2", "Id_Z2"])
    assert bad.exit_status == EXIT_LAW_FAILED
    assert bad.checks[0].witnesses == ("psi_not_mate",)


def test_idempotent_phi_is_reported_as_not_invertible() -> None:
    report = run("lift-adjunction", _docs("idem.cat"), targets=["trivial", "trivial", "collapse", "one", "Id_IDEM", "Id_IDEM"])
    assert report.exit_status == EXIT_LAW_FAILED
    assert report.record["diagnosis"] == "phi_not_invertible"


def test_budget_flag_bounds_the_algebra_search() -> None:
    docs = parse_documents("instance pow universe=0,1")
    assert run("lift-to-algebras", docs).exit_status == EXIT_OK
    tight = run("lift-to-algebras", docs, RunFlags(budget=1))
    assert tight.exit_status == EXIT_ERROR
    assert "budget" in tight.error


def test_transport_oracle_in_both_directions() -> None:
    docs = parse_documents("instance pow universe=0,1,2 edges=1-2,2-1")
    for direction, carrier in (("algebra", "{}"), ("coalgebra", "{1,2}")):
        report = run("check-transport", docs, RunFlags(direction=direction))
        assert report.exit_status == EXIT_OK, report.render()
        names = [c.name for c in report.checks]
        assert names == ["transport.initiality", "transport.fixpoint_oracle"]
        assert report.record["pow"]["mu"].startswith(f"({carrier},")


def test_classify_emits_one_check_per_notion() -> None:
    report = run("classify", parse_documents("instance pred universe=0"))
    assert report.exit_status == EXIT_OK
    names = [c.name for c in report.checks]
    assert names[:4] == ["classify.jacobs", "classify.d_category", "classify.tc_opfibration", "classify.lawvere"]
    assert names[-1] == "classify.hierarchy"


def test_rel_quotient_is_checked_against_union_find() -> None:
    report = run("derive-quotient", parse_documents("instance rel universe=0,1"))
    assert report.exit_status == EXIT_OK
    assert "quotient.union_find_oracle" in [c.name for c in report.checks]


def test_pipeline_expectations() -> None:
    docs = _docs("walk.cat") + parse_documents(
        "pipeline expectations\nsteps:\n  check-functor nope expect=error\n  check-category WALK expect=fail\nend\n"
    )
    report = run("run-pipeline", docs, targets=["expectations"])
    assert report.exit_status == EXIT_LAW_FAILED
    first, second = report.checks
    assert first.status is Status.PASS
    assert second.status is Status.FAIL
    assert second.witnesses == ("exit 0",)


def test_unexpected_step_error_aborts_the_pipeline() -> None:
    docs = _docs("walk.cat") + parse_documents("pipeline broken\nsteps:\n  check-functor nope\nend\n")
    report = run("run-pipeline", docs, targets=["broken"])
    assert report.exit_status == EXIT_ERROR
    assert "step 0 (check-functor)" in report.error


def test_json_report_is_deterministic() -> None:
    docs = _docs("walk.cat")
    a = run("check-adjunction", docs).render(as_json=True)
    b = run("check-adjunction", docs).render(as_json=True)
    assert a == b
    payload = json.loads(a)
    assert payload["exit_status"] == 0
    assert {c["name"] for c in payload["checks"]} >= {"adjunction bang_top", "hom_bijection bot_bang"}


def test_main_reads_files_and_prints_json(capsys) -> None:
    code = main(["check-functor", str(FIXTURES / "walk.cat"), "--json"])
    out = capsys.readouterr().out
    assert code == 0
    payload = json.loads(out)
    assert payload["command"] == "check-functor"
    assert len(payload["checks"]) == 3


def test_main_accepts_an_inline_instance(capsys) -> None:
    code = main(["build-instance", "pow", "universe=0,1", "base=0", "edges=0-1"])
    out = capsys.readouterr().out
    assert code == 0
    assert out.splitlines()[-1] == "exit: 0"


def test_main_prefixes_parse_errors_with_the_path(tmp_path: Path, capsys) -> None:
    bad = tmp_path / "bad.cat"
    bad.write_text("category C\nobjects: a\nmorphisms:\n  f: a -> b\nend\n", encoding="utf-8")
    code = main(["check-category", str(bad)])
    out = capsys.readouterr().out
    assert code == EXIT_ERROR
    assert f"ERROR: {bad}: morphism f references unknown object b (line 4" in out


def test_main_rejects_invalid_settings(tmp_path: Path, capsys) -> None:
    cfg = tmp_path / "catcomp.json"
    cfg.write_text(json.dumps({"adjoint_budget": 0}), encoding="utf-8")
    code = main(["check-category", str(FIXTURES / "walk.cat"), "--config", str(cfg)])
    assert code == EXIT_ERROR
    assert "adjoint_budget" in capsys.readouterr().out


def test_main_writes_report_inside_repo(capsys) -> None:
    out_dir = REPO_ROOT / "tests" / "_tmp_tasks" / "cli_out"
    shutil.rmtree(out_dir, ignore_errors=True)
    target = out_dir / "walk.json"
    code = main(["check-category", str(FIXTURES / "walk.cat"), "--json", "--out", str(target)])
    assert code == 0
    assert json.loads(target.read_text(encoding="utf-8"))["command"] == "check-category"
    assert "WROTE:" in capsys.readouterr().out
    with pytest.raises(ValueError, match="escapes repo root"):
        main(["check-category", str(FIXTURES / "walk.cat"), "--out", "/tmp/catcomp_walk.json"])


@pytest.mark.integration
def test_script_runs_a_fixture_pipeline() -> None:
    p = subprocess.run(
        [sys.executable, "scripts/catcomp.py", "run-pipeline", "fixtures/z2.cat", "--json"],
        cwd=str(REPO_ROOT),
        capture_output=True,
        text=True,
    )
    assert p.returncode == 0, f"stdout={p.stdout}\nstderr={p.stderr}"
    assert json.loads(p.stdout)["exit_status"] == 0

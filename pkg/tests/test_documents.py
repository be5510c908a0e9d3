from __future__ import annotations

from pathlib import Path

import pytest

from catcomp.cli import DocumentKind, parse_document, parse_documents, serialize_document, serialize_documents
from catcomp.errors import ParseError
from catcomp.instances import InstanceDescriptor

FIXTURES = sorted((Path(__file__).resolve().parents[1] / "fixtures").glob("*.*"))


@pytest.mark.parametrize("path", FIXTURES, ids=lambda p: p.name)
def test_fixtures_round_trip(path: Path) -> None:
    documents = parse_documents(path.read_text(encoding="utf-8"))
    text = serialize_documents(documents)
    again = parse_documents(text)
    assert again == documents
    assert serialize_documents(again) == text


def test_category_is_canonicalized() -> None:
    doc = parse_document(
        """
        category C
        objects: a b
        morphisms:
          g: a -> b
          f: a -> a
        compose:
          g f = g
          f f = f
          id_a f = f
        end
        """.replace("\n        ", "\n")
    )
    assert doc.kind is DocumentKind.CATEGORY
    assert doc.body.morphisms == (("f", "a", "a"), ("g", "a", "b"))
    # the identity composite is implied and dropped
    assert doc.body.composites == (("f", "f", "f"), ("g", "f", "g"))
    assert serialize_document(doc).splitlines()[3] == "  f: a -> a"


def test_functor_entries_follow_source_order() -> None:
    docs = parse_documents(
        "category W\nobjects: 0 1\nmorphisms:\n  u: 0 -> 1\nend\n"
        "category T\nobjects: *\nend\n"
        "functor bang: W -> T\nmorphisms:\n  u -> id_*\nobjects:\n  1 -> *\n  0 -> *\nend\n"
    )
    bang = docs[2]
    assert bang.body.objects == (("0", "*"), ("1", "*"))
    assert serialize_document(bang) == "functor bang: W -> T\nobjects:\n  0 -> *\n  1 -> *\nmorphisms:\n  u -> id_*\nend\n"


def test_instance_options_are_sorted_and_deduplicated() -> None:
    doc = parse_document("instance pow universe=2,0,1,1 base=0 edges=1-2,0-1,0-1")
    assert doc.name == "pow"
    assert doc.body == InstanceDescriptor("pow", (0, 1, 2), (0,), ((0, 1), (1, 2)))
    assert serialize_document(doc) == "instance pow universe=0,1,2 base=0 edges=0-1,1-2\n"


def test_pipeline_steps_keep_targets_and_options() -> None:
    doc = parse_document("pipeline p\nsteps:\n  check-transport pow direction=coalgebra\n  build-instance pow\nend\n")
    first, second = doc.body.steps
    assert first.command == "check-transport"
    assert first.targets == ("pow",)
    assert first.option("direction") == "coalgebra"
    assert second.option("expect", "pass") == "pass"
    assert doc.locations["step:1"] == 4


def test_nat_trans_reads_composites_left_to_right() -> None:
    doc = parse_document("nat_trans eta: Id_W => top . bang\ncomponents:\n  0 -> u\nend\n")
    assert doc.body.source == ("Id_W",)
    assert doc.body.target == ("top", "bang")


@pytest.mark.parametrize(
    ("text", "message", "line"),
    [
        ("category C\nobjects: a\nmorphisms:\n  f: a -> b\nend\n", "unknown object b", 4),
        ("category C\nobjects: a a\nend\n", "duplicate object a", 2),
        ("category C\nobjects: a\nend\ncategory C\nobjects: b\nend\n", "duplicate document name C", 4),
        ("category C\nobjects: a\ncompose:\n  f f = f\nend\n", "unknown morphism f", 4),
        ("instance graph universe=0\n", "unknown instance kind graph", 1),
        ("\n\ninstance pow universe=0 edges=0\n", "edges expects pairs", 3),
        ("instance pow base=0\n", "needs universe=", 1),
        ("instance pow universe=0 colour=red\n", "unknown instance option colour", 1),
        ("pipeline p\nsteps:\n  check-category C expect=pass expect=fail\nend\n", "duplicate step option expect", 3),
        ("category C\nobjects a\nend\n", "unexpected", 2),
    ],
)
def test_diagnostics_carry_lines(text: str, message: str, line: int) -> None:
    with pytest.raises(ParseError, match=message) as info:
        parse_documents(text)
    assert info.value.line == line


def test_structural_errors_surface_at_the_category_line() -> None:
    with pytest.raises(ParseError, match="not composable: f after g") as info:
        parse_documents("\ncategory L\nobjects: a b\nmorphisms:\n  f: a -> b\n  g: a -> b\ncompose:\n  f g = f\nend\n")
    assert info.value.line == 2


def test_parse_document_requires_exactly_one() -> None:
    with pytest.raises(ParseError, match="exactly one document, found 2"):
        parse_document("instance pred universe=0\ninstance rel universe=0\n")

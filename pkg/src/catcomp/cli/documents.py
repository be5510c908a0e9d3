"""The shared text format: categories, functors, natural transformations, adjunctions, instances, pipelines.

Parsing canonicalizes every document, so ``parse(serialize(docs)) == docs``
and ``serialize`` of a parsed text is the canonical text. Duplicate names and
dangling references inside one text are reported with their line.
"""

from __future__ import annotations

import enum
from collections import Counter
from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import lru_cache

from lark import Lark, Token, Transformer
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, UnexpectedToken, VisitError

from catcomp.errors import ParseError, StructuralError
from catcomp.fincat import CategoryPresentation, build_category, identity_label
from catcomp.instances import INSTANCE_KINDS, InstanceDescriptor

_GRAMMAR = r"""
start: _NL? document*

?document: category | functor | nat_trans | adjunction | instance | pipeline

category: "category" NAME _NL _cat_section* "end" _NL
_cat_section: objects_section | morphisms_section | compose_section | identities_section
objects_section: "objects" ":" NAME* _NL
morphisms_section: "morphisms" ":" _NL morphism_line*
morphism_line: NAME ":" NAME "->" NAME _NL
compose_section: "compose" ":" _NL compose_line*
compose_line: NAME NAME "=" NAME _NL
identities_section: "identities" ":" _NL identity_line*
identity_line: NAME "=" NAME _NL

functor: "functor" NAME ":" NAME "->" NAME _NL _functor_section* "end" _NL
_functor_section: functor_objects | functor_morphisms
functor_objects: "objects" ":" _NL map_line*
functor_morphisms: "morphisms" ":" _NL map_line*
map_line: NAME "->" NAME _NL

nat_trans: "nat_trans" NAME ":" functor_expr "=>" functor_expr _NL components_section? "end" _NL
functor_expr: NAME ("." NAME)*
components_section: "components" ":" _NL map_line*

adjunction: "adjunction" NAME ":" NAME "-|" NAME _NL "unit" ":" NAME _NL "counit" ":" NAME _NL "end" _NL

instance: "instance" NAME option* _NL
option: NAME "=" NAME ("," NAME)*

pipeline: "pipeline" NAME _NL "steps" ":" _NL step* "end" _NL
step: NAME (option | NAME)* _NL

NAME: /[\w⋆*'^{}\[\]]([\w⋆*'^{}\[\]]|-(?![>|]))*/
_NL: /(\r?\n[\t ]*(#[^\n]*)?)+/
COMMENT: /#[^\n]*/
%ignore /[\t \f]+/
%ignore COMMENT
"""


@lru_cache(maxsize=1)
def _parser() -> Lark:
    return Lark(_GRAMMAR, parser="lalr", maybe_placeholders=False)


class DocumentKind(str, enum.Enum):
    CATEGORY = "category"
    FUNCTOR = "functor"
    NAT_TRANS = "nat_trans"
    ADJUNCTION = "adjunction"
    INSTANCE = "instance"
    PIPELINE = "pipeline"


@dataclass(frozen=True)
class CategoryBody:
    """Non-identity morphisms in index order; composites ``(g, f, h)`` mean ``g ∘ f = h``."""

    objects: tuple[str, ...]
    morphisms: tuple[tuple[str, str, str], ...] = ()
    composites: tuple[tuple[str, str, str], ...] = ()
    identities: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class FunctorBody:
    source: str
    target: str
    objects: tuple[tuple[str, str], ...] = ()
    morphisms: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class NatTransBody:
    """``source`` and ``target`` are composites read left to right as ``G . F`` = G∘F."""

    source: tuple[str, ...]
    target: tuple[str, ...]
    components: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class AdjunctionBody:
    left: str
    right: str
    unit: str
    counit: str


@dataclass(frozen=True)
class PipelineStep:
    command: str
    targets: tuple[str, ...] = ()
    options: tuple[tuple[str, str], ...] = ()

    def option(self, key: str, default: str | None = None) -> str | None:
        return dict(self.options).get(key, default)


@dataclass(frozen=True)
class PipelineBody:
    steps: tuple[PipelineStep, ...]


Body = CategoryBody | FunctorBody | NatTransBody | AdjunctionBody | InstanceDescriptor | PipelineBody


@dataclass(frozen=True)
class Document:
    kind: DocumentKind
    name: str
    body: Body
    locations: Mapping[str, int] = field(default_factory=dict, compare=False, repr=False)

    @property
    def line(self) -> int | None:
        return self.locations.get("document")


def _line(token: Token) -> int | None:
    return getattr(token, "line", None)


def _duplicates(tokens: Iterable[Token], what: str) -> None:
    seen: dict[str, Token] = {}
    for tok in tokens:
        if str(tok) in seen:
            raise ParseError(f"duplicate {what} {tok}", _line(tok), getattr(tok, "column", None))
        seen[str(tok)] = tok


def _category_document(name: Token, sections: list[tuple[str, list]]) -> Document:
    counts = Counter(kind for kind, _ in sections)
    for kind, n in counts.items():
        if n > 1:
            raise ParseError(f"section {kind} repeated in category {name}", _line(name))
    by_kind = dict(sections)
    objects: list[Token] = by_kind.get("objects", [])
    morphisms: list[tuple[Token, Token, Token]] = by_kind.get("morphisms", [])
    composites: list[tuple[Token, Token, Token]] = by_kind.get("compose", [])
    identities: list[tuple[Token, Token]] = by_kind.get("identities", [])

    _duplicates(objects, "object")
    _duplicates((m[0] for m in morphisms), "morphism")
    _duplicates((i[0] for i in identities), "identity for object")
    object_set = {str(o) for o in objects}
    for label, dom, cod in morphisms:
        for end in (dom, cod):
            if str(end) not in object_set:
                raise ParseError(f"morphism {label} references unknown object {end}", _line(end), end.column)
    for obj, _ in identities:
        if str(obj) not in object_set:
            raise ParseError(f"identity declared for unknown object {obj}", _line(obj), obj.column)
    id_names = {str(o): identity_label(str(o)) for o in objects} | {str(o): str(lab) for o, lab in identities}
    known = {str(m[0]) for m in morphisms} | set(id_names.values())
    seen_pairs: set[tuple[str, str]] = set()
    for g, f, h in composites:
        for ref in (g, f, h):
            if str(ref) not in known:
                raise ParseError(f"composite references unknown morphism {ref}", _line(ref), ref.column)
        if (str(g), str(f)) in seen_pairs:
            raise ParseError(f"duplicate composite {g} {f}", _line(g), g.column)
        seen_pairs.add((str(g), str(f)))

    try:
        built = build_category(
            str(name),
            [str(o) for o in objects],
            [(str(a), str(b), str(c)) for a, b, c in morphisms],
            {(str(g), str(f)): str(h) for g, f, h in composites},
            {str(o): str(lab) for o, lab in identities},
        )
    except StructuralError as exc:
        raise ParseError(str(exc), _line(name)) from exc
    locations = {"document": _line(name)} | {f"morphism:{m[0]}": _line(m[0]) for m in morphisms}
    return Document(DocumentKind.CATEGORY, str(name), canonical_category_body(built, composites=[(str(g), str(f), str(h)) for g, f, h in composites]), locations)


def canonical_category_body(c: CategoryPresentation, *, composites: Iterable[tuple[str, str, str]] | None = None) -> CategoryBody:
    """The canonical body of ``c``; with ``composites`` only those declared ones are kept."""
    mi = c.morphism_index
    if composites is None:
        composites = [
            (c.label(g), c.label(f), c.label(c.compose(g, f)))
            for g, f in c.composable_pairs()
            if not (c.is_identity(g) or c.is_identity(f))
        ]
    kept = []
    for g, f, h in composites:
        gi, fi, hi = mi(g), mi(f), mi(h)
        if (c.is_identity(gi) and hi == fi) or (c.is_identity(fi) and hi == gi):
            continue
        kept.append((gi, fi, hi))
    kept.sort()
    return CategoryBody(
        objects=c.objects,
        morphisms=tuple(
            (m.label, c.objects[m.dom], c.objects[m.cod]) for idx, m in enumerate(c.morphisms) if not c.is_identity(idx)
        ),
        composites=tuple((c.label(g), c.label(f), c.label(h)) for g, f, h in kept),
        identities=tuple(
            (obj, c.label(c.identity(x))) for x, obj in enumerate(c.objects) if c.label(c.identity(x)) != identity_label(obj)
        ),
    )


def _pairs(entries: list[tuple[Token, Token]], what: str) -> tuple[tuple[str, str], ...]:
    _duplicates((e[0] for e in entries), what)
    return tuple((str(a), str(b)) for a, b in entries)


def _functor_document(name: Token, source: Token, target: Token, sections: list[tuple[str, list]]) -> Document:
    by_kind: dict[str, list] = {}
    for kind, entries in sections:
        if kind in by_kind:
            raise ParseError(f"section {kind} repeated in functor {name}", _line(name))
        by_kind[kind] = entries
    body = FunctorBody(
        str(source),
        str(target),
        _pairs(by_kind.get("objects", []), "object mapping"),
        _pairs(by_kind.get("morphisms", []), "morphism mapping"),
    )
    return Document(DocumentKind.FUNCTOR, str(name), body, {"document": _line(name)})


_INSTANCE_OPTIONS = {"universe", "base", "edges"}


def _ints(values: Sequence[Token], key: str) -> tuple[int, ...]:
    out: list[int] = []
    for v in values:
        try:
            out.append(int(str(v)))
        except ValueError as exc:
            raise ParseError(f"{key} expects integers, got {v}", _line(v), v.column) from exc
    return tuple(sorted(set(out)))


def _edges(values: Sequence[Token]) -> tuple[tuple[int, int], ...]:
    out: set[tuple[int, int]] = set()
    for v in values:
        parts = str(v).split("-")
        try:
            a, b = (int(x) for x in parts)
        except ValueError as exc:
            raise ParseError(f"edges expects pairs like 0-1, got {v}", _line(v), v.column) from exc
        out.add((a, b))
    return tuple(sorted(out))


def _instance_document(kind: Token, options: list[tuple[Token, tuple[Token, ...]]]) -> Document:
    if str(kind) not in INSTANCE_KINDS:
        raise ParseError(f"unknown instance kind {kind}; expected one of {', '.join(INSTANCE_KINDS)}", _line(kind), kind.column)
    _duplicates((key for key, _ in options), "instance option")
    values = {str(key): vals for key, vals in options}
    for key, _ in options:
        if str(key) not in _INSTANCE_OPTIONS:
            raise ParseError(f"unknown instance option {key}", _line(key), key.column)
    if "universe" not in values:
        raise ParseError(f"instance {kind} needs universe=", _line(kind))
    descriptor = InstanceDescriptor(
        str(kind),
        _ints(values["universe"], "universe"),
        _ints(values.get("base", ()), "base"),
        _edges(values.get("edges", ())),
    )
    return Document(DocumentKind.INSTANCE, str(kind), descriptor, {"document": _line(kind)})


class _Collect(Transformer):
    def start(self, items):
        return list(items)

    def objects_section(self, items):
        return ("objects", list(items))

    def morphism_line(self, items):
        return tuple(items)

    def morphisms_section(self, items):
        return ("morphisms", list(items))

    def compose_line(self, items):
        return tuple(items)

    def compose_section(self, items):
        return ("compose", list(items))

    def identity_line(self, items):
        return tuple(items)

    def identities_section(self, items):
        return ("identities", list(items))

    def category(self, items):
        name, *sections = items
        return _category_document(name, sections)

    def map_line(self, items):
        return tuple(items)

    def functor_objects(self, items):
        return ("objects", list(items))

    def functor_morphisms(self, items):
        return ("morphisms", list(items))

    def functor(self, items):
        name, source, target, *sections = items
        return _functor_document(name, source, target, sections)

    def functor_expr(self, items):
        return tuple(items)

    def components_section(self, items):
        return list(items)

    def nat_trans(self, items):
        name, source, target, *rest = items
        components = _pairs(rest[0] if rest else [], "component")
        body = NatTransBody(tuple(map(str, source)), tuple(map(str, target)), components)
        return Document(DocumentKind.NAT_TRANS, str(name), body, {"document": _line(name)})

    def adjunction(self, items):
        name, left, right, unit, counit = items
        body = AdjunctionBody(str(left), str(right), str(unit), str(counit))
        return Document(DocumentKind.ADJUNCTION, str(name), body, {"document": _line(name)})

    def option(self, items):
        key, *values = items
        return (key, tuple(values))

    def instance(self, items):
        kind, *options = items
        return _instance_document(kind, options)

    def step(self, items):
        command, *args = items
        targets = tuple(str(a) for a in args if isinstance(a, Token))
        options = [a for a in args if not isinstance(a, Token)]
        _duplicates((key for key, _ in options), "step option")
        return (
            command,
            PipelineStep(
                str(command),
                targets,
                tuple(sorted((str(key), ",".join(map(str, vals))) for key, vals in options)),
            ),
        )

    def pipeline(self, items):
        name, *steps = items
        locations = {"document": _line(name)} | {f"step:{i}": _line(tok) for i, (tok, _) in enumerate(steps)}
        return Document(DocumentKind.PIPELINE, str(name), PipelineBody(tuple(s for _, s in steps)), locations)


def _describe_unexpected(exc: UnexpectedInput) -> str:
    if isinstance(exc, UnexpectedToken):
        expected = sorted(exc.accepts or exc.expected)
        got = "end of line" if exc.token.type == "_NL" else repr(str(exc.token))
        return f"unexpected {got}; expected one of {', '.join(expected)}"
    if isinstance(exc, UnexpectedCharacters):
        return f"unexpected character {exc.char!r}"
    if isinstance(exc, UnexpectedEOF):
        return "unexpected end of input"
    return "malformed input"


def _canonical_maps(documents: list[Document]) -> list[Document]:
    """Order functor and component entries by index when the source category is in the same text."""
    categories: dict[str, CategoryPresentation] = {}
    functor_sources: dict[str, str] = {}
    for doc in documents:
        if doc.kind is DocumentKind.CATEGORY:
            body = doc.body
            categories[doc.name] = build_category(
                doc.name, body.objects, body.morphisms, {(g, f): h for g, f, h in body.composites}, dict(body.identities)
            )
        elif doc.kind is DocumentKind.FUNCTOR:
            functor_sources[doc.name] = doc.body.source

    def object_key(c: CategoryPresentation):
        order = {o: i for i, o in enumerate(c.objects)}
        return lambda entry: order.get(entry[0], len(order))

    def morphism_key(c: CategoryPresentation):
        order = {m.label: i for i, m in enumerate(c.morphisms)}
        return lambda entry: order.get(entry[0], len(order))

    out: list[Document] = []
    for doc in documents:
        if doc.kind is DocumentKind.FUNCTOR and doc.body.source in categories:
            c, body = categories[doc.body.source], doc.body
            doc = Document(
                doc.kind,
                doc.name,
                FunctorBody(
                    body.source,
                    body.target,
                    tuple(sorted(body.objects, key=object_key(c))),
                    tuple(sorted(body.morphisms, key=morphism_key(c))),
                ),
                doc.locations,
            )
        elif doc.kind is DocumentKind.NAT_TRANS:
            inner = doc.body.source[-1]
            source_cat = functor_sources.get(inner) or (inner[len("Id_"):] if inner.startswith("Id_") else None)
            if source_cat in categories:
                body = doc.body
                doc = Document(
                    doc.kind,
                    doc.name,
                    NatTransBody(body.source, body.target, tuple(sorted(body.components, key=object_key(categories[source_cat])))),
                    doc.locations,
                )
        out.append(doc)
    return out


def parse_documents(text: str) -> list[Document]:
    """Parse every document in ``text``; raises ``ParseError`` with a line on any diagnostic."""
    if not text.endswith("\n"):
        text += "\n"
    try:
        tree = _parser().parse(text)
    except UnexpectedInput as exc:
        raise ParseError(_describe_unexpected(exc), exc.line if exc.line != -1 else None, exc.column if exc.column != -1 else None) from exc
    try:
        documents = _Collect().transform(tree)
    except VisitError as exc:
        if isinstance(exc.orig_exc, ParseError):
            raise exc.orig_exc from None
        raise
    seen: dict[str, Document] = {}
    for doc in documents:
        if doc.name in seen:
            raise ParseError(f"duplicate document name {doc.name}", doc.line)
        seen[doc.name] = doc
    try:
        return _canonical_maps(documents)
    except StructuralError as exc:
        raise ParseError(str(exc)) from exc


def parse_document(text: str) -> Document:
    documents = parse_documents(text)
    if len(documents) != 1:
        raise ParseError(f"expected exactly one document, found {len(documents)}")
    return documents[0]


def _serialize_category(doc: Document) -> list[str]:
    body: CategoryBody = doc.body
    lines = [f"category {doc.name}", "objects: " + " ".join(body.objects) if body.objects else "objects:"]
    if body.morphisms:
        lines.append("morphisms:")
        lines.extend(f"  {label}: {dom} -> {cod}" for label, dom, cod in body.morphisms)
    if body.composites:
        lines.append("compose:")
        lines.extend(f"  {g} {f} = {h}" for g, f, h in body.composites)
    if body.identities:
        lines.append("identities:")
        lines.extend(f"  {obj} = {label}" for obj, label in body.identities)
    return lines


def _serialize_functor(doc: Document) -> list[str]:
    body: FunctorBody = doc.body
    lines = [f"functor {doc.name}: {body.source} -> {body.target}"]
    if body.objects:
        lines.append("objects:")
        lines.extend(f"  {a} -> {b}" for a, b in body.objects)
    if body.morphisms:
        lines.append("morphisms:")
        lines.extend(f"  {a} -> {b}" for a, b in body.morphisms)
    return lines


def _serialize_nat_trans(doc: Document) -> list[str]:
    body: NatTransBody = doc.body
    lines = [f"nat_trans {doc.name}: {' . '.join(body.source)} => {' . '.join(body.target)}"]
    if body.components:
        lines.append("components:")
        lines.extend(f"  {x} -> {f}" for x, f in body.components)
    return lines


def _serialize_instance(doc: Document) -> str:
    d: InstanceDescriptor = doc.body
    parts = [f"instance {d.kind}", "universe=" + ",".join(map(str, d.universe))]
    if d.base:
        parts.append("base=" + ",".join(map(str, d.base)))
    if d.edges:
        parts.append("edges=" + ",".join(f"{a}-{b}" for a, b in d.edges))
    return " ".join(parts)


def _serialize_step(step: PipelineStep) -> str:
    return " ".join([step.command, *step.targets, *(f"{k}={v}" for k, v in step.options)])


def serialize_document(doc: Document) -> str:
    kind = doc.kind
    if kind is DocumentKind.INSTANCE:
        return _serialize_instance(doc) + "\n"
    if kind is DocumentKind.CATEGORY:
        lines = _serialize_category(doc)
    elif kind is DocumentKind.FUNCTOR:
        lines = _serialize_functor(doc)
    elif kind is DocumentKind.NAT_TRANS:
        lines = _serialize_nat_trans(doc)
    elif kind is DocumentKind.ADJUNCTION:
        body: AdjunctionBody = doc.body
        lines = [f"adjunction {doc.name}: {body.left} -| {body.right}", f"unit: {body.unit}", f"counit: {body.counit}"]
    else:
        lines = [f"pipeline {doc.name}", "steps:", *(f"  {_serialize_step(s)}" for s in doc.body.steps)]
    return "\n".join([*lines, "end"]) + "\n"


def serialize_documents(documents: Sequence[Document]) -> str:
    return "\n".join(serialize_document(doc) for doc in documents)

"""Resolve parsed documents into categories, functors, cells, adjunctions and instances by name."""

from __future__ import annotations

from collections.abc import Sequence

from catcomp.adjunction import Adjunction
from catcomp.cli.documents import Document, DocumentKind
from catcomp.config import Settings, default_settings
from catcomp.errors import ParseError
from catcomp.fincat import (
    CategoryPresentation,
    FunctorData,
    NatTransData,
    build_category,
    compose_all_functors,
    functor_from_labels,
    identity_functor,
    nat_trans,
)
from catcomp.instances import InstanceBundle, load_instance

_IDENTITY_PREFIX = "Id_"


class Workspace:
    """Documents from one or more texts; names are unique across all of them."""

    def __init__(self, documents: Sequence[Document], *, settings: Settings | None = None) -> None:
        self.settings = settings or default_settings()
        self._docs: dict[str, Document] = {}
        for doc in documents:
            if doc.name in self._docs:
                raise ParseError(f"duplicate document name {doc.name}", doc.line)
            self._docs[doc.name] = doc
        self._cache: dict[tuple[DocumentKind, str], object] = {}

    def of_kind(self, kind: DocumentKind) -> list[Document]:
        return [doc for doc in self._docs.values() if doc.kind is kind]

    def has(self, name: str) -> bool:
        return name in self._docs

    def document(self, name: str, kind: DocumentKind | None = None) -> Document:
        doc = self._docs.get(name)
        if doc is None:
            raise ParseError(f"unknown {kind.value if kind else 'document'} {name}")
        if kind is not None and doc.kind is not kind:
            raise ParseError(f"{name} is a {doc.kind.value}, expected a {kind.value}", doc.line)
        return doc

    def _cached(self, kind: DocumentKind, name: str, build):
        key = (kind, name)
        if key not in self._cache:
            self._cache[key] = build()
        return self._cache[key]

    def category(self, name: str) -> CategoryPresentation:
        doc = self.document(name, DocumentKind.CATEGORY)
        body = doc.body
        return self._cached(
            DocumentKind.CATEGORY,
            name,
            lambda: build_category(
                name,
                body.objects,
                body.morphisms,
                {(g, f): h for g, f, h in body.composites},
                dict(body.identities),
            ),
        )

    def functor(self, name: str) -> FunctorData:
        """A functor document, or ``Id_<category>`` for an identity."""
        if name not in self._docs and name.startswith(_IDENTITY_PREFIX):
            cat = name[len(_IDENTITY_PREFIX):]
            return self._cached(DocumentKind.FUNCTOR, name, lambda: identity_functor(self.category(cat)).renamed(name))
        doc = self.document(name, DocumentKind.FUNCTOR)
        body = doc.body
        return self._cached(
            DocumentKind.FUNCTOR,
            name,
            lambda: functor_from_labels(
                name,
                self.category(body.source),
                self.category(body.target),
                dict(body.objects),
                dict(body.morphisms),
            ),
        )

    def functor_expr(self, names: Sequence[str]) -> FunctorData:
        """``("G", "F")`` is G∘F."""
        return compose_all_functors(*(self.functor(n) for n in names))

    def nat_trans(self, name: str) -> NatTransData:
        doc = self.document(name, DocumentKind.NAT_TRANS)
        body = doc.body

        def build() -> NatTransData:
            source, target = self.functor_expr(body.source), self.functor_expr(body.target)
            dom, cod = source.source, source.target
            given = dict(body.components)
            missing = [obj for obj in dom.objects if obj not in given]
            if missing:
                raise ParseError(f"{name} has no component at {', '.join(missing)}", doc.line)
            return nat_trans(name, source, target, {dom.object_index(x): cod.morphism_index(f) for x, f in given.items()})

        return self._cached(DocumentKind.NAT_TRANS, name, build)

    def adjunction(self, name: str) -> Adjunction:
        doc = self.document(name, DocumentKind.ADJUNCTION)
        body = doc.body
        return self._cached(
            DocumentKind.ADJUNCTION,
            name,
            lambda: Adjunction(
                name,
                self.functor(body.left),
                self.functor(body.right),
                self.nat_trans(body.unit),
                self.nat_trans(body.counit),
            ),
        )

    def instance(self, name: str) -> InstanceBundle:
        doc = self.document(name, DocumentKind.INSTANCE)
        return self._cached(DocumentKind.INSTANCE, name, lambda: load_instance(doc.body, settings=self.settings))

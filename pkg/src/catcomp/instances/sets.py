"""Set truncated to the subsets of a finite universe, and finite posets as categories."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Any

from catcomp.errors import StructuralError
from catcomp.fincat import CategoryPresentation, ComputedComposition, FunctorData, Morphism
from catcomp.logs import get_logger

log = get_logger(__name__)


def subset_label(s: Iterable[int]) -> str:
    return "{" + ",".join(str(x) for x in sorted(s)) + "}"


def all_subsets(universe: Iterable[int]) -> tuple[frozenset[int], ...]:
    """Every subset, ordered by size and then lexicographically."""
    elements = sorted(set(universe))
    return tuple(frozenset(c) for k in range(len(elements) + 1) for c in combinations(elements, k))


@dataclass(frozen=True, eq=False)
class FiniteSets:
    """All subsets of ``universe`` and all functions between them.

    ``tables[f]`` lists the images of the sorted elements of ``dom f``.
    """

    universe: frozenset[int]
    category: CategoryPresentation
    subsets: tuple[frozenset[int], ...]
    tables: tuple[tuple[int, ...], ...] = field(repr=False)
    _subset_index: dict[frozenset[int], int] = field(repr=False)
    _lookup: dict[tuple[int, int, tuple[int, ...]], int] = field(repr=False)

    def subset_index(self, s: Iterable[int]) -> int:
        key = frozenset(s)
        try:
            return self._subset_index[key]
        except KeyError as exc:
            raise StructuralError(f"{subset_label(key)} is not a subset of {subset_label(self.universe)}") from exc

    def as_mapping(self, f: int) -> dict[int, int]:
        return dict(zip(sorted(self.subsets[self.category.dom(f)]), self.tables[f]))

    def apply(self, f: int, x: int) -> int:
        return self.as_mapping(f)[x]

    def image(self, f: int, s: Iterable[int]) -> frozenset[int]:
        mapping = self.as_mapping(f)
        return frozenset(mapping[x] for x in s)

    def function(self, a: int, b: int, mapping: Mapping[int, int]) -> int:
        """Index of the function ``a -> b`` given elementwise."""
        table = tuple(mapping[x] for x in sorted(self.subsets[a]))
        try:
            return self._lookup[(a, b, table)]
        except KeyError as exc:
            raise StructuralError(
                f"no function {subset_label(self.subsets[a])} -> {subset_label(self.subsets[b])} with images {table}"
            ) from exc

    def inclusion(self, a: int, b: int) -> int:
        return self.function(a, b, {x: x for x in self.subsets[a]})


def finite_sets(universe: Iterable[int]) -> FiniteSets:
    universe = frozenset(universe)
    subsets = all_subsets(universe)
    index = {s: i for i, s in enumerate(subsets)}
    ordered = [tuple(sorted(s)) for s in subsets]
    positions = [{x: i for i, x in enumerate(elements)} for elements in ordered]

    morphisms: list[Morphism] = []
    tables: list[tuple[int, ...]] = []
    lookup: dict[tuple[int, int, tuple[int, ...]], int] = {}
    identities: list[int] = [0] * len(subsets)
    for a, dom_elems in enumerate(ordered):
        for b, cod_elems in enumerate(ordered):
            candidates = list(product(cod_elems, repeat=len(dom_elems)))
            if a == b:
                candidates.remove(dom_elems)
                candidates.insert(0, dom_elems)
            for table in candidates:
                lookup[(a, b, table)] = len(morphisms)
                if a == b and table == dom_elems:
                    identities[a] = len(morphisms)
                    label = f"id_{subset_label(dom_elems)}"
                else:
                    label = f"{subset_label(dom_elems)}->{subset_label(cod_elems)}[{','.join(map(str, table))}]"
                morphisms.append(Morphism(label, a, b))
                tables.append(table)

    def compose(g: int, f: int) -> int:
        pos = positions[morphisms[g].dom]
        tg = tables[g]
        return lookup[(morphisms[f].dom, morphisms[g].cod, tuple(tg[pos[y]] for y in tables[f]))]

    table = tuple(morphisms)
    category = CategoryPresentation(
        name=f"Set{subset_label(universe)}",
        objects=tuple(subset_label(s) for s in subsets),
        morphisms=table,
        identities=tuple(identities),
        composition=ComputedComposition(table, compose),
    )
    log.debug("finite sets built", extra={"universe": sorted(universe), "morphisms": len(table)})
    return FiniteSets(universe, category, subsets, tuple(tables), index, lookup)


@dataclass(frozen=True, eq=False)
class PosetCategory:
    """A finite preorder as a thin category; ``arrow(x, y)`` exists iff ``x ≤ y``."""

    category: CategoryPresentation
    _arrows: dict[tuple[int, int], int] = field(repr=False)

    def arrow(self, x: int, y: int) -> int:
        try:
            return self._arrows[(x, y)]
        except KeyError as exc:
            objects = self.category.objects
            raise StructuralError(f"{objects[x]} is not below {objects[y]} in {self.category.name}") from exc

    def leq(self, x: int, y: int) -> bool:
        return (x, y) in self._arrows


def poset_category(name: str, labels: Sequence[str], leq: Callable[[int, int], bool]) -> PosetCategory:
    n = len(labels)
    morphisms: list[Morphism] = []
    arrows: dict[tuple[int, int], int] = {}
    for x in range(n):
        for y in range(n):
            if x == y or leq(x, y):
                arrows[(x, y)] = len(morphisms)
                label = f"id_{labels[x]}" if x == y else f"{labels[x]}≤{labels[y]}"
                morphisms.append(Morphism(label, x, y))
    table = tuple(morphisms)
    category = CategoryPresentation(
        name=name,
        objects=tuple(labels),
        morphisms=table,
        identities=tuple(arrows[(x, x)] for x in range(n)),
        composition=ComputedComposition(table, lambda g, f: arrows[(table[f].dom, table[g].cod)]),
    )
    return PosetCategory(category, arrows)


@dataclass(frozen=True, eq=False)
class StructuredSets:
    """Subsets carrying extra data (a predicate, a relation), and the functions respecting it.

    ``structures[i] = (a, data)``; ``proj`` forgets the data.
    """

    sets: FiniteSets
    category: CategoryPresentation
    proj: FunctorData
    structures: tuple[tuple[int, object], ...] = field(repr=False)
    _objects: dict[tuple[int, object], int] = field(repr=False)
    _morphisms: dict[tuple[int, int, int], int] = field(repr=False)

    def object_of(self, a: int, data: object) -> int:
        try:
            return self._objects[(a, data)]
        except KeyError as exc:
            raise StructuralError(f"no object over {self.sets.category.objects[a]} with data {data!r}") from exc

    def morphism_of(self, f: int, i: int, j: int) -> int:
        try:
            return self._morphisms[(f, i, j)]
        except KeyError as exc:
            objects = self.category.objects
            raise StructuralError(f"{self.sets.category.label(f)} is not a morphism {objects[i]} -> {objects[j]}") from exc


def structured_sets(
    name: str,
    sets: FiniteSets,
    structures: Sequence[tuple[int, object]],
    labels: Sequence[str],
    accepts: Callable[[Mapping[int, int], Any, Any], bool],
    *,
    candidates: Callable[[int], Iterable[tuple[int, int]]] | None = None,
) -> StructuredSets:
    """``accepts(mapping, d1, d2)`` decides whether a function respects the data.

    ``candidates(i)``, when given, lists the pairs ``(f, j)`` tried out of
    structure ``i`` instead of every function between the carriers; it must
    include the identity and describe a set closed under composition.
    """
    B = sets.category
    mappings = [sets.as_mapping(f) for f in range(B.morphism_count)]
    morphisms: list[Morphism] = []
    under: list[int] = []
    index: dict[tuple[int, int, int], int] = {}
    identities = [0] * len(structures)

    def every_function(i: int) -> Iterator[tuple[int, int]]:
        a = structures[i][0]
        for j, (b, _) in enumerate(structures):
            for f in B.hom(a, b):
                yield f, j

    for i, (_, d1) in enumerate(structures):
        for f, j in (candidates or every_function)(i):
            if not accepts(mappings[f], d1, structures[j][1]):
                continue
            index[(f, i, j)] = len(morphisms)
            if i == j and B.is_identity(f):
                identities[i] = len(morphisms)
                label = f"id_{labels[i]}"
            else:
                label = f"{B.label(f)}:{labels[i]}->{labels[j]}"
            morphisms.append(Morphism(label, i, j))
            under.append(f)

    def compose(g: int, k: int) -> int:
        return index[(B.compose(under[g], under[k]), morphisms[k].dom, morphisms[g].cod)]

    table = tuple(morphisms)
    category = CategoryPresentation(
        name=name,
        objects=tuple(labels),
        morphisms=table,
        identities=tuple(identities),
        composition=ComputedComposition(table, compose),
    )
    proj = FunctorData("p", category, B, tuple(a for a, _ in structures), tuple(under))
    log.debug("structured sets built", extra={"category": name, "objects": len(structures), "morphisms": len(table)})
    objects = {s: i for i, s in enumerate(structures)}
    return StructuredSets(sets, category, proj, tuple(structures), objects, index)

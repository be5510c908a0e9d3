"""Explicit finite category presentations indexed by integers."""

from __future__ import annotations

from collections import Counter, defaultdict
from collections.abc import Callable, Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property

from catcomp.errors import StructuralError


@dataclass(frozen=True)
class Morphism:
    label: str
    dom: int
    cod: int


class ComputedComposition(Mapping[tuple[int, int], int]):
    """Composition table whose entries are produced by a rule on demand.

    Keys are exactly the composable pairs ``(g, f)`` with ``dom g == cod f``;
    concrete categories (functions, monotone maps, squares) use it instead of
    storing every pair.
    """

    def __init__(self, morphisms: Sequence[Morphism], rule: Callable[[int, int], int]) -> None:
        self._morphisms = morphisms
        self._rule = rule

    def __getitem__(self, key: tuple[int, int]) -> int:
        g, f = key
        n = len(self._morphisms)
        if not (0 <= g < n and 0 <= f < n) or self._morphisms[g].dom != self._morphisms[f].cod:
            raise KeyError(key)
        return self._rule(g, f)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        by_dom: dict[int, list[int]] = defaultdict(list)
        for idx, m in enumerate(self._morphisms):
            by_dom[m.dom].append(idx)
        for f, mf in enumerate(self._morphisms):
            for g in by_dom.get(mf.cod, ()):
                yield (g, f)

    def __len__(self) -> int:
        by_dom = Counter(m.dom for m in self._morphisms)
        return sum(by_dom[m.cod] for m in self._morphisms)

    def __contains__(self, key: object) -> bool:
        try:
            self[key]  # type: ignore[index]
        except (KeyError, TypeError, ValueError):
            return False
        return True

    def __eq__(self, other: object) -> bool:
        return self is other

    __hash__ = object.__hash__


@dataclass(frozen=True, eq=False)
class CategoryPresentation:
    """A finite category given by object/morphism tables and a composition map.

    Equality is identity: two presentations are the same category only when
    they are the same value, which keeps every "on the nose" comparison cheap.
    """

    name: str
    objects: tuple[str, ...]
    morphisms: tuple[Morphism, ...]
    identities: tuple[int, ...]
    composition: Mapping[tuple[int, int], int] = field(repr=False)

    @property
    def object_count(self) -> int:
        return len(self.objects)

    @property
    def morphism_count(self) -> int:
        return len(self.morphisms)

    def check_object(self, x: int) -> None:
        if not (isinstance(x, int) and 0 <= x < len(self.objects)):
            raise StructuralError(f"object index out of range in {self.name}: {x}")

    def check_morphism(self, f: int) -> None:
        if not (isinstance(f, int) and 0 <= f < len(self.morphisms)):
            raise StructuralError(f"morphism index out of range in {self.name}: {f}")

    def dom(self, f: int) -> int:
        return self.morphisms[f].dom

    def cod(self, f: int) -> int:
        return self.morphisms[f].cod

    def label(self, f: int) -> str:
        return self.morphisms[f].label

    def identity(self, x: int) -> int:
        return self.identities[x]

    def is_identity(self, f: int) -> bool:
        m = self.morphisms[f]
        return m.dom == m.cod and self.identities[m.dom] == f

    def compose(self, g: int, f: int) -> int:
        """Return ``g ∘ f``."""
        try:
            return self.composition[(g, f)]
        except KeyError as exc:
            raise StructuralError(
                f"no composite in {self.name} for {self._describe(g)} after {self._describe(f)}"
            ) from exc

    def compose_all(self, *morphisms: int) -> int:
        """Compose right to left: ``compose_all(h, g, f) == h ∘ g ∘ f``."""
        if not morphisms:
            raise StructuralError("compose_all needs at least one morphism")
        acc = morphisms[-1]
        for g in reversed(morphisms[:-1]):
            acc = self.compose(g, acc)
        return acc

    def hom(self, a: int, b: int) -> tuple[int, ...]:
        return self._homs.get((a, b), ())

    def out_of(self, a: int) -> tuple[int, ...]:
        return self._outgoing[a]

    def into(self, b: int) -> tuple[int, ...]:
        return self._incoming[b]

    def object_index(self, label: str) -> int:
        try:
            return self._object_by_label[label]
        except KeyError as exc:
            raise StructuralError(f"unknown object in {self.name}: {label}") from exc

    def morphism_index(self, label: str) -> int:
        try:
            return self._morphism_by_label[label]
        except KeyError as exc:
            raise StructuralError(f"unknown morphism in {self.name}: {label}") from exc

    def composable_pairs(self) -> Iterator[tuple[int, int]]:
        """Yield ``(g, f)`` pairs with ``dom g == cod f``, ordered by ``f`` then ``g``."""
        for f, mf in enumerate(self.morphisms):
            for g in self._outgoing[mf.cod]:
                yield g, f

    def composable_pair_count(self) -> int:
        return sum(len(self._outgoing[m.cod]) for m in self.morphisms)

    def composable_triple_count(self) -> int:
        # counted through the middle morphism of h∘g∘f
        return sum(len(self._incoming[m.dom]) * len(self._outgoing[m.cod]) for m in self.morphisms)

    @cached_property
    def opposite(self) -> CategoryPresentation:
        morphisms = tuple(Morphism(m.label, m.cod, m.dom) for m in self.morphisms)
        base = self
        op = CategoryPresentation(
            name=_opposite_name(self.name),
            objects=self.objects,
            morphisms=morphisms,
            identities=self.identities,
            composition=ComputedComposition(morphisms, lambda g, f: base.compose(f, g)),
        )
        op.__dict__["opposite"] = self
        return op

    @cached_property
    def _homs(self) -> dict[tuple[int, int], tuple[int, ...]]:
        grouped: dict[tuple[int, int], list[int]] = defaultdict(list)
        for idx, m in enumerate(self.morphisms):
            grouped[(m.dom, m.cod)].append(idx)
        return {key: tuple(vals) for key, vals in grouped.items()}

    @cached_property
    def _outgoing(self) -> tuple[tuple[int, ...], ...]:
        grouped: list[list[int]] = [[] for _ in self.objects]
        for idx, m in enumerate(self.morphisms):
            grouped[m.dom].append(idx)
        return tuple(tuple(g) for g in grouped)

    @cached_property
    def _incoming(self) -> tuple[tuple[int, ...], ...]:
        grouped: list[list[int]] = [[] for _ in self.objects]
        for idx, m in enumerate(self.morphisms):
            grouped[m.cod].append(idx)
        return tuple(tuple(g) for g in grouped)

    @cached_property
    def _object_by_label(self) -> dict[str, int]:
        return {label: idx for idx, label in enumerate(self.objects)}

    @cached_property
    def _morphism_by_label(self) -> dict[str, int]:
        return {m.label: idx for idx, m in enumerate(self.morphisms)}

    def _describe(self, f: int) -> str:
        if 0 <= f < len(self.morphisms):
            return f"{self.morphisms[f].label}#{f}"
        return f"#{f}"


def _opposite_name(name: str) -> str:
    return name[: -len("^op")] if name.endswith("^op") else f"{name}^op"


def identity_label(obj: str) -> str:
    return f"id_{obj}"


def build_category(
    name: str,
    objects: Sequence[str],
    morphisms: Sequence[tuple[str, str, str]],
    composites: Mapping[tuple[str, str], str] | None = None,
    identities: Mapping[str, str] | None = None,
) -> CategoryPresentation:
    """Assemble a presentation from labels.

    ``morphisms`` holds ``(label, dom, cod)`` triples for the non-identity
    morphisms; identities are named ``id_<object>`` unless ``identities``
    renames them, and a declared morphism carrying the identity's name is
    taken to be that identity. Composites with an identity are inferred;
    every other composite comes from ``composites`` keyed by ``(g, f)``
    labels meaning ``g ∘ f``. Declared composites win over inferred ones.
    """
    objects = tuple(str(o) for o in objects)
    if len(set(objects)) != len(objects):
        dupes = sorted(o for o, n in Counter(objects).items() if n > 1)
        raise StructuralError(f"duplicate object labels in {name}: {dupes}")
    obj_index = {label: idx for idx, label in enumerate(objects)}
    id_names = {obj: (identities or {}).get(obj, identity_label(obj)) for obj in objects}
    id_owner = {label: obj for obj, label in id_names.items()}

    declared: list[tuple[str, int, int, bool, int]] = []
    seen: set[str] = set()
    for position, (label, dom, cod) in enumerate(morphisms):
        if dom not in obj_index or cod not in obj_index:
            raise StructuralError(f"morphism {label} in {name} references unknown object: {dom} -> {cod}")
        if label in seen:
            raise StructuralError(f"duplicate morphism label in {name}: {label}")
        owner = id_owner.get(label)
        if owner is not None and not (dom == cod == owner):
            raise StructuralError(f"identity label clashes with a morphism in {name}: {label}")
        seen.add(label)
        declared.append((label, obj_index[dom], obj_index[cod], owner is not None, position))
    for obj in objects:
        if id_names[obj] not in seen:
            declared.append((id_names[obj], obj_index[obj], obj_index[obj], True, -1))
            seen.add(id_names[obj])

    declared.sort(key=lambda d: (d[1], d[2], 0 if d[3] else 1, d[4]))
    table = tuple(Morphism(label, dom, cod) for label, dom, cod, _, _ in declared)
    mor_index = {m.label: idx for idx, m in enumerate(table)}
    identity_table = tuple(mor_index[id_names[obj]] for obj in objects)

    composition: dict[tuple[int, int], int] = {}
    for f, mf in enumerate(table):
        composition[(identity_table[mf.cod], f)] = f
        composition[(f, identity_table[mf.dom])] = f
    for (g_label, f_label), h_label in (composites or {}).items():
        for ref in (g_label, f_label, h_label):
            if ref not in mor_index:
                raise StructuralError(f"composite in {name} references unknown morphism: {ref}")
        g, f, h = mor_index[g_label], mor_index[f_label], mor_index[h_label]
        if table[g].dom != table[f].cod:
            raise StructuralError(f"declared composite in {name} is not composable: {g_label} after {f_label}")
        composition[(g, f)] = h

    return CategoryPresentation(
        name=name,
        objects=objects,
        morphisms=table,
        identities=identity_table,
        composition=composition,
    )

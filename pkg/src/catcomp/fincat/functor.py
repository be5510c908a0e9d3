"""Functors and natural transformations as index tables, with their algebra."""

from __future__ import annotations

from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field

from catcomp.errors import StructuralError
from catcomp.fincat.category import CategoryPresentation


@dataclass(frozen=True)
class FunctorData:
    """A functor given by its object and morphism tables.

    The name is a display label only and does not take part in equality, so
    composites built along different routes compare equal when their tables do.
    """

    name: str = field(compare=False)
    source: CategoryPresentation
    target: CategoryPresentation
    obj_map: tuple[int, ...]
    mor_map: tuple[int, ...]

    def obj(self, x: int) -> int:
        return self.obj_map[x]

    def mor(self, f: int) -> int:
        return self.mor_map[f]

    def renamed(self, name: str) -> FunctorData:
        return FunctorData(name, self.source, self.target, self.obj_map, self.mor_map)


@dataclass(frozen=True)
class NatTransData:
    """A natural transformation ``source ⇒ target`` given by its components."""

    name: str = field(compare=False)
    source: FunctorData
    target: FunctorData
    components: tuple[int, ...]

    @property
    def domain(self) -> CategoryPresentation:
        return self.source.source

    @property
    def codomain(self) -> CategoryPresentation:
        return self.source.target

    def at(self, x: int) -> int:
        return self.components[x]

    def renamed(self, name: str) -> NatTransData:
        return NatTransData(name, self.source, self.target, self.components)


def functor_from_labels(
    name: str,
    source: CategoryPresentation,
    target: CategoryPresentation,
    obj_map: Mapping[str, str],
    mor_map: Mapping[str, str],
) -> FunctorData:
    """Build a functor from label tables; unmapped identities go to identities."""
    objects: list[int] = []
    for label in source.objects:
        if label not in obj_map:
            raise StructuralError(f"functor {name} leaves object unmapped: {label}")
        objects.append(target.object_index(obj_map[label]))
    morphisms: list[int] = []
    for idx, m in enumerate(source.morphisms):
        if m.label in mor_map:
            morphisms.append(target.morphism_index(mor_map[m.label]))
        elif source.is_identity(idx):
            morphisms.append(target.identity(objects[m.dom]))
        else:
            raise StructuralError(f"functor {name} leaves morphism unmapped: {m.label}")
    return FunctorData(name, source, target, tuple(objects), tuple(morphisms))


def identity_functor(c: CategoryPresentation) -> FunctorData:
    return FunctorData(
        f"Id_{c.name}",
        c,
        c,
        tuple(range(c.object_count)),
        tuple(range(c.morphism_count)),
    )


def constant_functor(source: CategoryPresentation, target: CategoryPresentation, obj: int) -> FunctorData:
    target.check_object(obj)
    return FunctorData(
        f"const_{target.objects[obj]}",
        source,
        target,
        (obj,) * source.object_count,
        (target.identity(obj),) * source.morphism_count,
    )


def compose_functors(g: FunctorData, f: FunctorData) -> FunctorData:
    """Return ``g ∘ f``."""
    if f.target is not g.source:
        raise StructuralError(f"functors not composable: {g.name} after {f.name}")
    return FunctorData(
        f"{g.name}∘{f.name}",
        f.source,
        g.target,
        tuple(g.obj_map[x] for x in f.obj_map),
        tuple(g.mor_map[m] for m in f.mor_map),
    )


def compose_all_functors(*functors: FunctorData) -> FunctorData:
    """Compose right to left: ``compose_all_functors(h, g, f) == h ∘ g ∘ f``."""
    acc = functors[-1]
    for g in reversed(functors[:-1]):
        acc = compose_functors(g, acc)
    return acc


def opposite_functor(f: FunctorData) -> FunctorData:
    return FunctorData(f"{f.name}^op", f.source.opposite, f.target.opposite, f.obj_map, f.mor_map)


def is_fully_faithful(f: FunctorData) -> bool:
    src, tgt = f.source, f.target
    for a in range(src.object_count):
        for b in range(src.object_count):
            image = {f.mor_map[m] for m in src.hom(a, b)}
            if len(image) != len(src.hom(a, b)) or len(image) != len(tgt.hom(f.obj_map[a], f.obj_map[b])):
                return False
    return True


def parallel(f: FunctorData, g: FunctorData) -> bool:
    return f.source is g.source and f.target is g.target


def nat_trans(name: str, source: FunctorData, target: FunctorData, components: Mapping[int, int] | tuple[int, ...]) -> NatTransData:
    if not parallel(source, target):
        raise StructuralError(f"natural transformation {name} between non-parallel functors: {source.name}, {target.name}")
    if isinstance(components, Mapping):
        components = tuple(components[x] for x in range(source.source.object_count))
    return NatTransData(name, source, target, tuple(components))


def identity_nat_trans(f: FunctorData) -> NatTransData:
    return NatTransData(
        f"id_{f.name}",
        f,
        f,
        tuple(f.target.identity(f.obj_map[x]) for x in range(f.source.object_count)),
    )


def is_identity_nat_trans(alpha: NatTransData) -> bool:
    return alpha.source == alpha.target and alpha.components == identity_nat_trans(alpha.source).components


def vertical_compose(beta: NatTransData, alpha: NatTransData) -> NatTransData:
    """Return ``beta ∘ alpha`` for ``alpha: F ⇒ G`` and ``beta: G ⇒ H``."""
    if alpha.target != beta.source:
        raise StructuralError(f"natural transformations not composable: {beta.name} after {alpha.name}")
    c = alpha.codomain
    return NatTransData(
        f"{beta.name}∘{alpha.name}",
        alpha.source,
        beta.target,
        tuple(c.compose(b, a) for b, a in zip(beta.components, alpha.components)),
    )


def vertical_compose_all(*cells: NatTransData) -> NatTransData:
    acc = cells[-1]
    for beta in reversed(cells[:-1]):
        acc = vertical_compose(beta, acc)
    return acc


def whisker(
    alpha: NatTransData,
    *,
    left: FunctorData | None = None,
    right: FunctorData | None = None,
) -> NatTransData:
    """Return ``left · alpha · right``: components ``left(alpha_{right x})``."""
    source, target = alpha.source, alpha.target
    components = alpha.components
    name = alpha.name
    if right is not None:
        source = compose_functors(source, right)
        target = compose_functors(target, right)
        components = tuple(components[x] for x in right.obj_map)
        name = f"{name}·{right.name}"
    if left is not None:
        source = compose_functors(left, source)
        target = compose_functors(left, target)
        components = tuple(left.mor_map[m] for m in components)
        name = f"{left.name}·{name}"
    return NatTransData(name, source, target, components)


def opposite_nat_trans(alpha: NatTransData) -> NatTransData:
    """``alpha: F ⇒ G`` becomes ``alpha^op: G^op ⇒ F^op`` with the same components."""
    return NatTransData(
        f"{alpha.name}^op",
        opposite_functor(alpha.target),
        opposite_functor(alpha.source),
        alpha.components,
    )


def find_inverse(c: CategoryPresentation, f: int) -> int | None:
    """Lowest-index two-sided inverse of ``f`` in ``c``, if any."""
    m = c.morphisms[f]
    for g in c.hom(m.cod, m.dom):
        if c.compose(g, f) == c.identity(m.dom) and c.compose(f, g) == c.identity(m.cod):
            return g
    return None


def invert_nat_trans(alpha: NatTransData) -> NatTransData | None:
    inverses: list[int] = []
    for comp in alpha.components:
        inv = find_inverse(alpha.codomain, comp)
        if inv is None:
            return None
        inverses.append(inv)
    return NatTransData(f"{alpha.name}⁻¹", alpha.target, alpha.source, tuple(inverses))


def enumerate_nat_trans(f: FunctorData, g: FunctorData) -> Iterator[NatTransData]:
    """Yield every natural transformation ``f ⇒ g`` in lexicographic component order."""
    if not parallel(f, g):
        raise StructuralError(f"cannot enumerate transformations between non-parallel {f.name}, {g.name}")
    src, tgt = f.source, f.target
    n = src.object_count
    # morphisms whose naturality square becomes checkable once object x is assigned
    ready: list[list[int]] = [[] for _ in range(n)]
    for idx, m in enumerate(src.morphisms):
        ready[max(m.dom, m.cod)].append(idx)
    chosen: list[int] = []

    def squares_hold(x: int) -> bool:
        for u in ready[x]:
            m = src.morphisms[u]
            if tgt.compose(g.mor_map[u], chosen[m.dom]) != tgt.compose(chosen[m.cod], f.mor_map[u]):
                return False
        return True

    def extend(x: int) -> Iterator[NatTransData]:
        if x == n:
            yield NatTransData(f"{f.name}⇒{g.name}", f, g, tuple(chosen))
            return
        for candidate in tgt.hom(f.obj_map[x], g.obj_map[x]):
            chosen.append(candidate)
            if squares_hold(x):
                yield from extend(x + 1)
            chosen.pop()

    yield from extend(0)

"""Cartesian and opcartesian morphisms, (op)fibration classification and fibers."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from catcomp.fincat import CategoryPresentation, FunctorData, Morphism
from catcomp.logs import get_logger

log = get_logger(__name__)


class ProjectionIndex:
    """Hom-sets of the total category split by their image under ``p``."""

    def __init__(self, p: FunctorData) -> None:
        self.p = p
        self.total = p.source
        self.base = p.target
        self._split: dict[tuple[int, int], dict[int, tuple[int, ...]]] = {}
        self._over_object: dict[int, tuple[int, ...]] | None = None

    def over(self, x: int, y: int, v: int) -> tuple[int, ...]:
        """Morphisms ``x -> y`` of the total category lying over ``v``."""
        key = (x, y)
        split = self._split.get(key)
        if split is None:
            grouped: dict[int, list[int]] = defaultdict(list)
            for g in self.total.hom(x, y):
                grouped[self.p.mor_map[g]].append(g)
            split = {k: tuple(vs) for k, vs in grouped.items()}
            self._split[key] = split
        return split.get(v, ())

    def objects_over(self, b: int) -> tuple[int, ...]:
        if self._over_object is None:
            grouped: dict[int, list[int]] = defaultdict(list)
            for e, image in enumerate(self.p.obj_map):
                grouped[image].append(e)
            self._over_object = {k: tuple(vs) for k, vs in grouped.items()}
        return self._over_object.get(b, ())


@dataclass(frozen=True)
class CartesianStatus:
    morphism: str
    is_cartesian: bool
    is_opcartesian: bool
    witnesses: tuple[tuple[str, str, str], ...] = ()


def opcartesian_failure(index: ProjectionIndex, f: int) -> tuple[int, int] | None:
    """First ``(v, S')`` where ``g ↦ g ∘ f`` is not a bijection E_v(S, S') → E_{v∘u}(R, S')."""
    E, B, p = index.total, index.base, index.p
    r, s = E.dom(f), E.cod(f)
    u = p.mor_map[f]
    for s2 in range(E.object_count):
        for v in B.hom(p.obj_map[s], p.obj_map[s2]):
            gs = index.over(s, s2, v)
            ks = index.over(r, s2, B.compose(v, u))
            if len(gs) != len(ks) or len({E.compose(g, f) for g in gs}) != len(gs):
                return v, s2
    return None


def cartesian_failure(index: ProjectionIndex, f: int) -> tuple[int, int] | None:
    """First ``(v, S')`` where ``g ↦ f ∘ g`` is not a bijection E_v(S', R) → E_{u∘v}(S', S)."""
    E, B, p = index.total, index.base, index.p
    r, s = E.dom(f), E.cod(f)
    u = p.mor_map[f]
    for s2 in range(E.object_count):
        for v in B.hom(p.obj_map[s2], p.obj_map[r]):
            gs = index.over(s2, r, v)
            ks = index.over(s2, s, B.compose(u, v))
            if len(gs) != len(ks) or len({E.compose(f, g) for g in gs}) != len(gs):
                return v, s2
    return None


def is_opcartesian(index: ProjectionIndex, f: int) -> bool:
    return opcartesian_failure(index, f) is None


def is_cartesian(index: ProjectionIndex, f: int) -> bool:
    return cartesian_failure(index, f) is None


def cartesian_status(p: FunctorData, f: int, *, index: ProjectionIndex | None = None) -> CartesianStatus:
    index = index or ProjectionIndex(p)
    p.source.check_morphism(f)
    E, B = p.source, p.target
    witnesses: list[tuple[str, str, str]] = []
    cart = cartesian_failure(index, f)
    if cart is not None:
        witnesses.append(("cartesian", B.label(cart[0]), E.objects[cart[1]]))
    opcart = opcartesian_failure(index, f)
    if opcart is not None:
        witnesses.append(("opcartesian", B.label(opcart[0]), E.objects[opcart[1]]))
    return CartesianStatus(E.label(f), cart is None, opcart is None, tuple(witnesses))


def opcartesian_lift(index: ProjectionIndex, u: int, r: int) -> int | None:
    """Lowest-index opcartesian morphism out of ``r`` over ``u``."""
    B = index.base
    for s in index.objects_over(B.cod(u)):
        for f in index.over(r, s, u):
            if is_opcartesian(index, f):
                return f
    return None


def cartesian_lift(index: ProjectionIndex, u: int, s: int) -> int | None:
    """Lowest-index cartesian morphism into ``s`` over ``u``."""
    B = index.base
    for r in index.objects_over(B.dom(u)):
        for f in index.over(r, s, u):
            if is_cartesian(index, f):
                return f
    return None


@dataclass(frozen=True)
class FibrationClass:
    """Flags plus the lifts found, keyed ``(u, r)`` (opcartesian) and ``(u, s)`` (cartesian)."""

    is_fibration: bool
    is_opfibration: bool
    missing_lifts: tuple[tuple[str, str, str], ...] = ()
    opcartesian_lifts: dict[tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)
    cartesian_lifts: dict[tuple[int, int], int] = field(default_factory=dict, repr=False, compare=False)

    @property
    def is_bifibration(self) -> bool:
        return self.is_fibration and self.is_opfibration


def classify_functor(p: FunctorData, *, index: ProjectionIndex | None = None, limit: int = 20) -> FibrationClass:
    """Exhaustive search for cartesian and opcartesian lifts of every base morphism."""
    index = index or ProjectionIndex(p)
    E, B = p.source, p.target
    missing: list[tuple[str, str, str]] = []
    op_lifts: dict[tuple[int, int], int] = {}
    cart_lifts: dict[tuple[int, int], int] = {}
    for u, m in enumerate(B.morphisms):
        for r in index.objects_over(m.dom):
            found = opcartesian_lift(index, u, r)
            if found is None:
                if len(missing) < limit:
                    missing.append(("opcartesian", m.label, E.objects[r]))
            else:
                op_lifts[(u, r)] = found
        for s in index.objects_over(m.cod):
            found = cartesian_lift(index, u, s)
            if found is None:
                if len(missing) < limit:
                    missing.append(("cartesian", m.label, E.objects[s]))
            else:
                cart_lifts[(u, s)] = found
    fibration = len(cart_lifts) == sum(len(index.objects_over(m.cod)) for m in B.morphisms)
    opfibration = len(op_lifts) == sum(len(index.objects_over(m.dom)) for m in B.morphisms)
    log.debug(
        "classified functor",
        extra={"functor": p.name, "fibration": fibration, "opfibration": opfibration},
    )
    return FibrationClass(fibration, opfibration, tuple(missing), op_lifts, cart_lifts)


def fiber(p: FunctorData, b: int) -> CategoryPresentation:
    """Subcategory of objects over ``b`` and morphisms over ``id_b``."""
    E, B = p.source, p.target
    B.check_object(b)
    id_b = B.identity(b)
    objects = [e for e in range(E.object_count) if p.obj_map[e] == b]
    local = {e: i for i, e in enumerate(objects)}
    morphisms = [f for f, m in enumerate(E.morphisms) if m.dom in local and m.cod in local and p.mor_map[f] == id_b]
    mor_local = {f: i for i, f in enumerate(morphisms)}
    table = tuple(Morphism(E.label(f), local[E.dom(f)], local[E.cod(f)]) for f in morphisms)
    composition: dict[tuple[int, int], int] = {}
    for i, f in enumerate(morphisms):
        for j, g in enumerate(morphisms):
            if E.dom(g) == E.cod(f):
                composition[(j, i)] = mor_local[E.compose(g, f)]
    return CategoryPresentation(
        name=f"{E.name}|{B.objects[b]}",
        objects=tuple(E.objects[e] for e in objects),
        morphisms=table,
        identities=tuple(mor_local[E.identity(e)] for e in objects),
        composition=composition,
    )


def vertical(p: FunctorData, f: int) -> bool:
    return p.target.is_identity(p.mor_map[f])

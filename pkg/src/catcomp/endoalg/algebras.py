"""Categories of algebras and coalgebras of an endofunctor, lifting along Endo(Cat) morphisms."""

from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass, field

from catcomp.config import Settings, default_settings
from catcomp.endoalg.endo import EndoMorphism, EndoObject, endo_morphism
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat import (
    CategoryPresentation,
    ComputedComposition,
    FunctorData,
    Morphism,
    NatTransData,
    initial_objects,
    terminal_objects,
    validate_nat_trans,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


class Direction(str, enum.Enum):
    ALGEBRA = "algebra"
    COALGEBRA = "coalgebra"


class Extreme(str, enum.Enum):
    INITIAL = "initial"
    TERMINAL = "terminal"


@dataclass(frozen=True, eq=False)
class AlgebraBundle:
    """Alg_F(C) or CoAlg_F(C) with the forgetful functor.

    ``structures[i] = (c, a)`` is the carrier and structure morphism of object ``i``.
    """

    carrier: CategoryPresentation
    endo: FunctorData
    direction: Direction
    alg_cat: CategoryPresentation
    forgetful: FunctorData = field(repr=False)
    structures: tuple[tuple[int, int], ...] = field(repr=False)
    _objects: dict[tuple[int, int], int] = field(repr=False)
    _morphisms: dict[tuple[int, int, int], int] = field(repr=False)

    @property
    def endo_object(self) -> EndoObject:
        return EndoObject(self.carrier, self.endo)

    def object_of(self, c: int, a: int) -> int | None:
        return self._objects.get((c, a))

    def morphism_of(self, h: int, i: int, j: int) -> int | None:
        """Index of ``h`` as a morphism from algebra ``i`` to algebra ``j``, if it is one."""
        return self._morphisms.get((h, i, j))


def _is_morphism(c: CategoryPresentation, f: FunctorData, direction: Direction, h: int, a: int, b: int) -> bool:
    if direction is Direction.ALGEBRA:
        return c.compose(h, a) == c.compose(b, f.mor_map[h])
    return c.compose(b, h) == c.compose(f.mor_map[h], a)


def algebra_category(
    c: CategoryPresentation,
    f: FunctorData,
    direction: Direction | str = Direction.ALGEBRA,
    *,
    settings: Settings | None = None,
) -> AlgebraBundle:
    """Enumerate every (carrier, structure) pair and every morphism commuting with the structures."""
    settings = settings or default_settings()
    direction = Direction(direction)
    if f.source is not c or f.target is not c:
        raise StructuralError(f"{f.name} is not an endofunctor of {c.name}")

    structures: list[tuple[int, int]] = []
    for x in range(c.object_count):
        candidates = c.hom(f.obj_map[x], x) if direction is Direction.ALGEBRA else c.hom(x, f.obj_map[x])
        structures.extend((x, a) for a in candidates)
    widest = max(Counter((m.dom, m.cod) for m in c.morphisms).values(), default=0)
    if len(structures) * widest > settings.algebra_budget:
        raise ResourceError(
            f"{direction.value} category of {f.name} needs {len(structures)} objects × {widest} morphisms, "
            f"above the budget {settings.algebra_budget}"
        )

    objects = {s: i for i, s in enumerate(structures)}
    labels = tuple(f"({c.objects[x]},{c.label(a)})" for x, a in structures)
    morphisms: list[Morphism] = []
    under: list[int] = []
    index: dict[tuple[int, int, int], int] = {}
    for i, (x, a) in enumerate(structures):
        for j, (y, b) in enumerate(structures):
            for h in c.hom(x, y):
                if _is_morphism(c, f, direction, h, a, b):
                    index[(h, i, j)] = len(morphisms)
                    under.append(h)
                    morphisms.append(Morphism(f"{c.label(h)}:{labels[i]}->{labels[j]}", i, j))

    def compose(g: int, k: int) -> int:
        return index[(c.compose(under[g], under[k]), morphisms[k].dom, morphisms[g].cod)]

    table = tuple(morphisms)
    prefix = "Alg" if direction is Direction.ALGEBRA else "CoAlg"
    alg_cat = CategoryPresentation(
        name=f"{prefix}_{f.name}({c.name})",
        objects=labels,
        morphisms=table,
        identities=tuple(index[(c.identity(x), i, i)] for i, (x, _) in enumerate(structures)),
        composition=ComputedComposition(table, compose),
    )
    forgetful = FunctorData("U", alg_cat, c, tuple(x for x, _ in structures), tuple(under))
    log.debug(
        "algebra category built",
        extra={"endo": f.name, "direction": direction.value, "objects": len(structures), "morphisms": len(table)},
    )
    return AlgebraBundle(c, f, direction, alg_cat, forgetful, tuple(structures), objects, index)


def lift_to_algebras(m: EndoMorphism, source: AlgebraBundle, target: AlgebraBundle) -> FunctorData:
    """``(c, a) ↦ (P c, P(a) ∘ p̄_c)``; on morphisms the lift acts as ``P``."""
    if source.direction is not Direction.ALGEBRA or target.direction is not Direction.ALGEBRA:
        raise StructuralError("lifting runs on algebra bundles; dualize coalgebras through opposites")
    if source.endo_object != m.source or target.endo_object != m.target:
        raise StructuralError(f"algebra bundles do not match the endpoints of {m.name}")
    P, Y = m.on_carrier, m.target.carrier
    obj_map: list[int] = []
    for c, a in source.structures:
        lifted = target.object_of(P.obj_map[c], Y.compose(P.mor_map[a], m.dist.components[c]))
        if lifted is None:
            raise StructuralError(f"{m.name} sends {source.alg_cat.objects[len(obj_map)]} outside {target.alg_cat.name}")
        obj_map.append(lifted)
    mor_map: list[int] = []
    for k, mk in enumerate(source.alg_cat.morphisms):
        h = source.forgetful.mor_map[k]
        lifted = target.morphism_of(P.mor_map[h], obj_map[mk.dom], obj_map[mk.cod])
        if lifted is None:
            raise StructuralError(f"{m.name} does not preserve the algebra morphism {mk.label}")
        mor_map.append(lifted)
    return FunctorData(f"{P.name}'", source.alg_cat, target.alg_cat, tuple(obj_map), tuple(mor_map))


def beck_lift(p: FunctorData, delta: NatTransData, bundles: tuple[AlgebraBundle, AlgebraBundle]) -> FunctorData:
    """Lift ``p`` to ``Alg_G(E) -> Alg_F(B)`` along ``δ: F∘p ⇒ p∘G``: ``(e, g) ↦ (p e, p(g)∘δ_e)``."""
    total, base = bundles
    m = endo_morphism(p.name, total.endo_object, base.endo_object, p, delta)
    report = validate_nat_trans(m.dist)
    if not report.passed:
        first = report.violations[0]
        raise StructuralError(f"{delta.name} fails {first.law} at {first.witness}")
    return lift_to_algebras(m, total, base)


def extreme_objects(c: CategoryPresentation, which: Extreme | str) -> list[int]:
    """Every object with exactly one morphism to (initial) or from (terminal) each object."""
    return initial_objects(c) if Extreme(which) is Extreme.INITIAL else terminal_objects(c)


def extreme_object(c: CategoryPresentation, which: Extreme | str) -> int | None:
    found = extreme_objects(c, which)
    if len(found) > 1:
        log.info("several extreme objects, all isomorphic", extra={"category": c.name, "which": Extreme(which).value, "count": len(found)})
    return found[0] if found else None

"""The arrow category B^→ (path object) with dom, cod, id, hom and factorization."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterator
from dataclasses import dataclass, field
from itertools import product

from catcomp.errors import PreconditionError, StructuralError
from catcomp.fincat.category import CategoryPresentation, ComputedComposition, Morphism
from catcomp.fincat.functor import FunctorData, NatTransData, parallel
from catcomp.logs import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class ArrowBundle:
    """B^→ together with its structure maps.

    Objects of ``arrow_cat`` are the morphisms of ``base`` with the same
    indices; ``squares[k] = (w, v)`` holds the sides of arrow morphism ``k``.
    """

    base: CategoryPresentation
    arrow_cat: CategoryPresentation
    squares: tuple[tuple[int, int], ...] = field(repr=False)
    dom_f: FunctorData = field(repr=False)
    cod_f: FunctorData = field(repr=False)
    id_f: FunctorData = field(repr=False)
    hom: NatTransData = field(repr=False)
    _index: dict[tuple[int, int, int, int], int] = field(repr=False)

    def square(self, f: int, w: int, v: int, f2: int) -> int | None:
        """Index of the square ``(w, v): f -> f2``, or None if it does not commute."""
        return self._index.get((f, w, v, f2))

    def factorize(self, alpha: NatTransData) -> FunctorData:
        """The unique ``a`` with ``dom∘a = P``, ``cod∘a = Q`` and ``hom·a = alpha``."""
        P, Q = alpha.source, alpha.target
        if P.target is not self.base or not parallel(P, Q):
            raise StructuralError(f"{alpha.name} does not land in {self.base.name}")
        x_cat = P.source
        mor_map: list[int] = []
        for u, m in enumerate(x_cat.morphisms):
            sq = self.square(alpha.components[m.dom], P.mor_map[u], Q.mor_map[u], alpha.components[m.cod])
            if sq is None:
                raise PreconditionError(f"{alpha.name} is not natural at {m.label}; no square to factor through")
            mor_map.append(sq)
        return FunctorData(f"⟨{alpha.name}⟩", x_cat, self.arrow_cat, alpha.components, tuple(mor_map))


def arrow_category(b: CategoryPresentation) -> ArrowBundle:
    """Enumerate commuting squares of ``b``, ordered by (source, w, v, target)."""
    # postcomposition fibers: (w, f' ∘ w) -> [f'] for every f' out of cod w
    fibers: dict[tuple[int, int], list[int]] = defaultdict(list)
    for w, mw in enumerate(b.morphisms):
        for f2 in b.out_of(mw.cod):
            fibers[(w, b.compose(f2, w))].append(f2)

    morphisms: list[Morphism] = []
    squares: list[tuple[int, int]] = []
    index: dict[tuple[int, int, int, int], int] = {}
    for f, mf in enumerate(b.morphisms):
        for w in b.out_of(mf.dom):
            for v in b.out_of(mf.cod):
                vf = b.compose(v, f)
                for f2 in fibers.get((w, vf), ()):
                    if b.cod(f2) != b.cod(v):
                        continue
                    index[(f, w, v, f2)] = len(morphisms)
                    squares.append((w, v))
                    morphisms.append(Morphism(f"({b.label(w)},{b.label(v)}):{mf.label}->{b.label(f2)}", f, f2))

    identities = tuple(index[(f, b.identity(m.dom), b.identity(m.cod), f)] for f, m in enumerate(b.morphisms))

    def compose_squares(g: int, f: int) -> int:
        w1, v1 = squares[f]
        w2, v2 = squares[g]
        return index[(morphisms[f].dom, b.compose(w2, w1), b.compose(v2, v1), morphisms[g].cod)]

    table = tuple(morphisms)
    arrow_cat = CategoryPresentation(
        name=f"{b.name}^→",
        objects=tuple(m.label for m in b.morphisms),
        morphisms=table,
        identities=identities,
        composition=ComputedComposition(table, compose_squares),
    )
    log.debug("arrow category built", extra={"base": b.name, "squares": len(table)})

    sq = tuple(squares)
    dom_f = FunctorData(
        "dom",
        arrow_cat,
        b,
        tuple(m.dom for m in b.morphisms),
        tuple(w for w, _ in sq),
    )
    cod_f = FunctorData(
        "cod",
        arrow_cat,
        b,
        tuple(m.cod for m in b.morphisms),
        tuple(v for _, v in sq),
    )
    id_f = FunctorData(
        "id",
        b,
        arrow_cat,
        tuple(b.identities),
        tuple(index[(b.identity(m.dom), g, g, b.identity(m.cod))] for g, m in enumerate(b.morphisms)),
    )
    hom = NatTransData("hom", dom_f, cod_f, tuple(range(b.morphism_count)))
    return ArrowBundle(b, arrow_cat, sq, dom_f, cod_f, id_f, hom, index)


def enumerate_factorizations(arrows: ArrowBundle, P: FunctorData, Q: FunctorData) -> Iterator[FunctorData]:
    """Yield every functor ``a`` into B^→ with ``dom∘a = P`` and ``cod∘a = Q``.

    Brute force over object assignments; independent of ``factorize``.
    """
    if P.target is not arrows.base or not parallel(P, Q):
        raise StructuralError("factorization inputs must be parallel functors into the base")
    x_cat, b = P.source, arrows.base
    choices = [b.hom(P.obj_map[x], Q.obj_map[x]) for x in range(x_cat.object_count)]
    for assignment in product(*choices):
        mor_map: list[int] = []
        for u, m in enumerate(x_cat.morphisms):
            sq = arrows.square(assignment[m.dom], P.mor_map[u], Q.mor_map[u], assignment[m.cod])
            if sq is None:
                break
            mor_map.append(sq)
        else:
            yield FunctorData("a", x_cat, arrows.arrow_cat, tuple(assignment), tuple(mor_map))

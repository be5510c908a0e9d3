"""Relations over truncated Set and the quotient by the generated equivalence."""

from __future__ import annotations

from collections.abc import Callable, Iterable, Iterator, Mapping, Sequence
from itertools import combinations, product

from catcomp.adjunction import Adjunction
from catcomp.comprehension import SectionData, SectionKind, check_section_data
from catcomp.config import Settings, default_settings
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat import FunctorData, NatTransData, compose_functors, identity_functor, require_passed
from catcomp.instances.bundle import InstanceBundle
from catcomp.instances.partition import Partition, equivalence_closure
from catcomp.instances.sets import FiniteSets, StructuredSets, finite_sets, structured_sets, subset_label
from catcomp.logs import get_logger

log = get_logger(__name__)

Relation = frozenset[tuple[int, int]]


def relation_label(r: Iterable[tuple[int, int]]) -> str:
    return "{" + ",".join(f"{x}-{y}" for x, y in sorted(r)) + "}"


def _relations_on(carrier: frozenset[int]) -> list[Relation]:
    pairs = sorted(product(sorted(carrier), repeat=2))
    return [frozenset(c) for k in range(len(pairs) + 1) for c in combinations(pairs, k)]


def _respects(mapping: Mapping[int, int], r: Relation, s: Relation) -> bool:
    return all((mapping[x], mapping[y]) in s for x, y in r)


def rel_quotient_object(carrier: Iterable[int], pairs: Iterable[tuple[int, int]]) -> frozenset[int]:
    """The block minima of the equivalence generated by ``pairs``: the chosen representative of A/R."""
    return equivalence_closure(carrier, pairs).minima()


def diagonal(carrier: Iterable[int]) -> Relation:
    return frozenset((x, x) for x in carrier)


def _reduced_candidates(
    sets: FiniteSets, structures: Sequence[tuple[int, Relation]]
) -> Callable[[int], Iterator[tuple[int, int]]]:
    B = sets.category
    position = {s: i for i, s in enumerate(structures)}
    relations = [[r for b, r in structures if b == a] for a in range(B.object_count)]
    discrete = [position[(b, diagonal(S))] for b, S in enumerate(sets.subsets)]

    def candidates(i: int) -> Iterator[tuple[int, int]]:
        a, r = structures[i]
        delta = diagonal(sets.subsets[a])
        if r != delta:
            for s in relations[a]:
                if r <= s and s != delta:
                    yield B.identity(a), position[(a, s)]
        for b, j in enumerate(discrete):
            for f in B.hom(a, b):
                yield f, j

    return candidates


def rel_instance(
    universe: Iterable[int],
    *,
    reduced: bool | None = None,
    settings: Settings | None = None,
) -> InstanceBundle:
    """Rel → Set with the discrete section ⋆A = (A, Δ_A) and ⦃(A, R)⦄ = block minima of A/R.

    Every relation is an object. The full presentation has every function
    respecting the relations as a morphism. The reduced one, used by default
    once the universe is larger than ``rel_full_max_universe``, keeps two
    kinds: refinements ``id_A: (A, R) -> (A, S)`` with ``R ⊆ S`` out of a
    non-discrete ``R``, and every morphism into a discrete object. Both kinds
    compose into one of them, and hom-sets into the image of ⋆ are complete,
    so ⦃-⦄ ⊣ ⋆ is the same adjunction on either presentation.
    """
    settings = settings or default_settings()
    universe = frozenset(universe)
    if len(universe) > settings.rel_max_universe:
        raise ResourceError(f"rel universe of {len(universe)} elements exceeds the bound {settings.rel_max_universe}")
    if reduced is None:
        reduced = len(universe) > settings.rel_full_max_universe
    sets = finite_sets(universe)
    B = sets.category
    structures = [(a, r) for a, A in enumerate(sets.subsets) for r in _relations_on(A)]
    labels = [f"({subset_label(sets.subsets[a])},{relation_label(r)})" for a, r in structures]
    name = f"Rel{subset_label(universe)}"
    if reduced:
        candidates = _reduced_candidates(sets, structures)
        st = structured_sets(f"{name}⁻", sets, structures, labels, _respects, candidates=candidates)
    else:
        st = structured_sets(name, sets, structures, labels, _respects)
    E, p = st.category, st.proj

    partitions: list[Partition] = [equivalence_closure(sets.subsets[a], r) for a, r in structures]
    star_obj = tuple(st.object_of(a, diagonal(A)) for a, A in enumerate(sets.subsets))
    star = FunctorData(
        "⋆",
        B,
        E,
        star_obj,
        tuple(st.morphism_of(f, star_obj[m.dom], star_obj[m.cod]) for f, m in enumerate(B.morphisms)),
    )

    quot_obj = tuple(sets.subset_index(part.minima()) for part in partitions)
    quot_mor = []
    for k, m in enumerate(E.morphisms):
        mapping = sets.as_mapping(p.mor_map[k])
        source, target = partitions[m.dom], partitions[m.cod]
        quot_mor.append(
            sets.function(quot_obj[m.dom], quot_obj[m.cod], {x: target.representative(mapping[x]) for x in source.minima()})
        )
    quot = FunctorData("⦃-⦄", E, B, quot_obj, tuple(quot_mor))

    unit_components = []
    for i, (a, _) in enumerate(structures):
        to_rep = sets.function(a, quot_obj[i], {x: partitions[i].representative(x) for x in sets.subsets[a]})
        unit_components.append(st.morphism_of(to_rep, i, star_obj[quot_obj[i]]))
    unit = NatTransData("η", identity_functor(E), compose_functors(star, quot), tuple(unit_components))
    counit = NatTransData("ε", compose_functors(quot, star), identity_functor(B), tuple(B.identities))
    sd = SectionData(p, star, Adjunction("⦃-⦄⊣⋆", quot, star, unit, counit), SectionKind.QUOTIENT)
    require_passed(check_section_data(sd, settings=settings))

    log.info(
        "rel instance built",
        extra={"universe": sorted(universe), "reduced": reduced, "objects": E.object_count, "morphisms": E.morphism_count},
    )
    return InstanceBundle(
        name=E.name,
        kind="rel",
        base=B,
        total=E,
        proj=p,
        section_data=sd,
        carriers=sets.subsets,
        structure=st,
    )


def empty_relation_section(bundle: InstanceBundle) -> FunctorData:
    """⋆A = (A, ∅); unlike the diagonal it has no left adjoint once A is inhabited.

    Needs the full presentation: the reduced one has no maps between empty relations.
    """
    st = bundle.structure
    if not isinstance(st, StructuredSets) or bundle.kind != "rel":
        raise StructuralError("the empty relation section needs a rel instance")
    B = bundle.base
    obj = tuple(st.object_of(a, frozenset()) for a in range(B.object_count))
    return FunctorData(
        "⋆∅",
        B,
        bundle.total,
        obj,
        tuple(st.morphism_of(f, obj[m.dom], obj[m.cod]) for f, m in enumerate(B.morphisms)),
    )

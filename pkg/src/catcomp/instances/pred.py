"""Predicates over truncated Set: objects ``(A, R ⊆ A)``, morphisms ``f`` with ``f(R) ⊆ S``."""

from __future__ import annotations

from collections.abc import Iterable, Mapping

from catcomp.adjunction import Adjunction
from catcomp.comprehension import SectionData, SectionKind, check_section_data
from catcomp.config import Settings, default_settings
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat import FunctorData, NatTransData, compose_functors, identity_functor, require_passed
from catcomp.instances.bundle import InstanceBundle
from catcomp.instances.sets import StructuredSets, finite_sets, structured_sets, subset_label
from catcomp.logs import get_logger

log = get_logger(__name__)


def _preserves(mapping: Mapping[int, int], r: frozenset[int], s: frozenset[int]) -> bool:
    return all(mapping[x] in s for x in r)


def pred_instance(universe: Iterable[int], *, settings: Settings | None = None) -> InstanceBundle:
    """Pred → Set with ⋆A = (A, A), [(A, R)] = R and ι the inclusion R ⊆ A."""
    settings = settings or default_settings()
    universe = frozenset(universe)
    if len(universe) > settings.pred_max_universe:
        raise ResourceError(f"pred universe of {len(universe)} elements exceeds the bound {settings.pred_max_universe}")
    sets = finite_sets(universe)
    B = sets.category
    structures = [(a, r) for a, A in enumerate(sets.subsets) for r in sets.subsets if r <= A]
    labels = [f"({subset_label(sets.subsets[a])},{subset_label(r)})" for a, r in structures]
    st = structured_sets(f"Pred{subset_label(universe)}", sets, structures, labels, _preserves)
    E, p = st.category, st.proj

    star_obj = tuple(st.object_of(a, A) for a, A in enumerate(sets.subsets))
    star = FunctorData(
        "⋆",
        B,
        E,
        star_obj,
        tuple(st.morphism_of(f, star_obj[m.dom], star_obj[m.cod]) for f, m in enumerate(B.morphisms)),
    )
    comp_obj = tuple(sets.subset_index(r) for _, r in structures)
    comp_mor = []
    for k, m in enumerate(E.morphisms):
        mapping = sets.as_mapping(p.mor_map[k])
        r = structures[m.dom][1]
        comp_mor.append(sets.function(comp_obj[m.dom], comp_obj[m.cod], {x: mapping[x] for x in r}))
    comp = FunctorData("[-]", E, B, comp_obj, tuple(comp_mor))

    unit = NatTransData("η", identity_functor(B), compose_functors(comp, star), tuple(B.identities))
    counit = NatTransData(
        "ε",
        compose_functors(star, comp),
        identity_functor(E),
        tuple(st.morphism_of(sets.inclusion(comp_obj[i], a), star_obj[comp_obj[i]], i) for i, (a, _) in enumerate(structures)),
    )
    sd = SectionData(p, star, Adjunction("⋆⊣[-]", star, comp, unit, counit), SectionKind.COMPREHENSION)
    require_passed(check_section_data(sd, settings=settings))

    hints = {
        u: st.morphism_of(u, star_obj[m.dom], st.object_of(m.cod, sets.image(u, sets.subsets[m.dom])))
        for u, m in enumerate(B.morphisms)
    }
    log.info("pred instance built", extra={"universe": sorted(universe), "objects": E.object_count, "morphisms": E.morphism_count})
    return InstanceBundle(
        name=E.name,
        kind="pred",
        base=B,
        total=E,
        proj=p,
        section_data=sd,
        hints=hints,
        carriers=sets.subsets,
        structure=st,
    )


def empty_predicate_section(bundle: InstanceBundle) -> SectionData:
    """⋆A = (A, ∅) with ⋆ ⊣ p: the right adjoint is the projection itself."""
    st = bundle.structure
    if not isinstance(st, StructuredSets) or bundle.kind != "pred":
        raise StructuralError("the empty predicate section needs a pred instance")
    B, E, p = bundle.base, bundle.total, bundle.proj
    empty = frozenset()
    obj = tuple(st.object_of(a, empty) for a in range(B.object_count))
    star = FunctorData(
        "⋆∅",
        B,
        E,
        obj,
        tuple(st.morphism_of(f, obj[m.dom], obj[m.cod]) for f, m in enumerate(B.morphisms)),
    )
    unit = NatTransData("η", identity_functor(B), compose_functors(p, star), tuple(B.identities))
    counit = NatTransData(
        "ε",
        compose_functors(star, p),
        identity_functor(E),
        tuple(st.morphism_of(B.identity(a), obj[a], i) for i, (a, _) in enumerate(st.structures)),
    )
    return SectionData(p, star, Adjunction("⋆∅⊣p", star, p, unit, counit), SectionKind.COMPREHENSION)

"""Reachability over a finite powerset lattice, with the endofunctor data for induction and coinduction.

Base: subsets of the universe ordered by inclusion. Total: pairs ``(A, R ⊆ A)``
ordered componentwise, projected to ``A``. ``F(A) = base ∪ step(A)`` and
``G(A, R) = (F A, base ∪ step(R))``; δ and σ are identities.
"""

from __future__ import annotations

from collections.abc import Iterable

from catcomp.adjunction import Adjunction
from catcomp.comprehension import SectionData, SectionKind, check_section_data
from catcomp.config import Settings, default_settings
from catcomp.endoalg import DistributivityPair
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat import (
    FunctorData,
    NatTransData,
    compose_functors,
    identity_functor,
    identity_nat_trans,
    require_passed,
)
from catcomp.instances.bundle import InstanceBundle
from catcomp.instances.fixpoint import powerset_step
from catcomp.instances.sets import PosetCategory, all_subsets, poset_category, subset_label
from catcomp.logs import get_logger

log = get_logger(__name__)


def _identity_cell(name: str, source: FunctorData, target: FunctorData) -> NatTransData:
    """Identity components between functors that agree on objects."""
    return NatTransData(name, source, target, identity_nat_trans(source).components)


def powerset_instance(
    universe: Iterable[int],
    base_set: Iterable[int],
    edges: Iterable[tuple[int, int]],
    *,
    settings: Settings | None = None,
) -> InstanceBundle:
    settings = settings or default_settings()
    universe, base_set, edges = frozenset(universe), frozenset(base_set), tuple(sorted(set(edges)))
    if len(universe) > settings.pow_max_universe:
        raise ResourceError(f"powerset universe of {len(universe)} elements exceeds the bound {settings.pow_max_universe}")
    if not base_set <= universe:
        raise StructuralError(f"base set {subset_label(base_set)} is not inside {subset_label(universe)}")
    for a, b in edges:
        if a not in universe or b not in universe:
            raise StructuralError(f"edge {a}-{b} leaves {subset_label(universe)}")
    step = powerset_step(base_set, edges)

    subsets = all_subsets(universe)
    index = {s: i for i, s in enumerate(subsets)}
    base = poset_category(f"P{subset_label(universe)}", [subset_label(s) for s in subsets], lambda x, y: subsets[x] <= subsets[y])
    pairs = [(a, r) for a, A in enumerate(subsets) for r, R in enumerate(subsets) if R <= A]
    pair_index = {pr: i for i, pr in enumerate(pairs)}
    total = poset_category(
        f"P2{subset_label(universe)}",
        [f"({subset_label(subsets[a])},{subset_label(subsets[r])})" for a, r in pairs],
        lambda i, j: subsets[pairs[i][0]] <= subsets[pairs[j][0]] and subsets[pairs[i][1]] <= subsets[pairs[j][1]],
    )
    B, E = base.category, total.category

    def lift_objects(name: str, source: PosetCategory, target: PosetCategory, obj_map: tuple[int, ...]) -> FunctorData:
        """A monotone object map on thin categories determines the functor."""
        mor_map = tuple(target.arrow(obj_map[m.dom], obj_map[m.cod]) for m in source.category.morphisms)
        return FunctorData(name, source.category, target.category, obj_map, mor_map)

    p = lift_objects("p", total, base, tuple(a for a, _ in pairs))
    star = lift_objects("⋆", base, total, tuple(pair_index[(a, a)] for a in range(len(subsets))))
    comp = lift_objects("[-]", total, base, tuple(r for _, r in pairs))
    F = lift_objects("F", base, base, tuple(index[step(s)] for s in subsets))
    G = lift_objects("G", total, total, tuple(pair_index[(index[step(subsets[a])], index[step(subsets[r])])] for a, r in pairs))

    unit = _identity_cell("η", identity_functor(B), compose_functors(comp, star))
    counit = NatTransData(
        "ε",
        compose_functors(star, comp),
        identity_functor(E),
        tuple(total.arrow(pair_index[(r, r)], i) for i, (_, r) in enumerate(pairs)),
    )
    sd = SectionData(p, star, Adjunction("⋆⊣[-]", star, comp, unit, counit), SectionKind.COMPREHENSION)
    require_passed(check_section_data(sd, settings=settings))

    quot = p.renamed("⦃-⦄")
    q_unit = NatTransData(
        "η",
        identity_functor(E),
        compose_functors(star, quot),
        tuple(total.arrow(i, pair_index[(a, a)]) for i, (a, _) in enumerate(pairs)),
    )
    q_counit = _identity_cell("ε", compose_functors(quot, star), identity_functor(B))
    qd = SectionData(p, star, Adjunction("⦃-⦄⊣⋆", quot, star, q_unit, q_counit), SectionKind.QUOTIENT)
    require_passed(check_section_data(qd, settings=settings))

    algebra_pair = DistributivityPair(
        F,
        G,
        _identity_cell("δ", compose_functors(F, p), compose_functors(p, G)),
        _identity_cell("σ", compose_functors(G, star), compose_functors(star, F)),
    )
    coalgebra_pair = DistributivityPair(
        F,
        G,
        _identity_cell("δ'", compose_functors(p, G), compose_functors(F, p)),
        _identity_cell("σ'", compose_functors(star, F), compose_functors(G, star)),
    )
    log.info("powerset instance built", extra={"universe": sorted(universe), "base": sorted(base_set), "edges": len(edges)})
    return InstanceBundle(
        name=E.name,
        kind="pow",
        base=B,
        total=E,
        proj=p,
        section_data=sd,
        carriers=subsets,
        structure=total,
        quotient_data=qd,
        algebra_pair=algebra_pair,
        coalgebra_pair=coalgebra_pair,
    )

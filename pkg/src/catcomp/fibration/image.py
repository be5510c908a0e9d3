"""Image structures: a section with chosen opcartesian lifts, their post/pre actions and the image functor."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from catcomp.config import Settings, default_settings
from catcomp.errors import PreconditionError, StructuralError
from catcomp.fibration.cartesian import ProjectionIndex, is_opcartesian, opcartesian_lift
from catcomp.fincat import (
    ArrowBundle,
    FunctorData,
    LawReport,
    ViolationLog,
    compose_functors,
    identity_functor,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class ImageStructure:
    """``lift[u] = (λ_u, ∃_u[⋆_A])`` for every base morphism ``u: A -> B``.

    ``post[(u, v)]`` is ``v▷: ∃_u -> ∃_{v∘u}``; ``pre[(u, w)]`` is
    ``◁w: ∃_{u∘w} -> ∃_u``.
    """

    proj: FunctorData
    section: FunctorData
    lift: tuple[tuple[int, int], ...]
    post: Mapping[tuple[int, int], int] = field(repr=False)
    pre: Mapping[tuple[int, int], int] = field(repr=False)

    def lam(self, u: int) -> int:
        return self.lift[u][0]

    def image_object(self, u: int) -> int:
        return self.lift[u][1]


def _unique_over(index: ProjectionIndex, x: int, y: int, over: int, through: int, target: int) -> int | None:
    """The single ``g: x -> y`` over ``over`` with ``g ∘ through == target``."""
    E = index.total
    found = [g for g in index.over(x, y, over) if E.compose(g, through) == target]
    return found[0] if len(found) == 1 else None


def derive_actions(
    index: ProjectionIndex, section: FunctorData, lift: tuple[tuple[int, int], ...]
) -> tuple[dict[tuple[int, int], int], dict[tuple[int, int], int]]:
    """post/pre tables from the universal property of the chosen lifts."""
    E, B = index.total, index.base
    post: dict[tuple[int, int], int] = {}
    pre: dict[tuple[int, int], int] = {}
    for v, u in B.composable_pairs():
        vu = B.compose(v, u)
        g = _unique_over(index, lift[u][1], lift[vu][1], v, lift[u][0], lift[vu][0])
        if g is None:
            raise StructuralError(f"no unique post action for {B.label(v)} after {B.label(u)}")
        post[(u, v)] = g
    for u, w in B.composable_pairs():
        uw = B.compose(u, w)
        target = E.compose(lift[u][0], section.mor_map[w])
        g = _unique_over(index, lift[uw][1], lift[u][1], B.identity(B.cod(u)), lift[uw][0], target)
        if g is None:
            raise StructuralError(f"no unique pre action for {B.label(u)} after {B.label(w)}")
        pre[(u, w)] = g
    return post, pre


def build_image_structure(
    p: FunctorData,
    section: FunctorData,
    hints: Mapping[int, int] | None = None,
    *,
    index: ProjectionIndex | None = None,
) -> ImageStructure | None:
    """Choose λ_u out of ⋆_A over each u (identity on identities), or None if a lift is missing.

    ``hints`` maps a base morphism to a preferred total morphism; it is taken
    only when it is opcartesian out of ⋆_A over u.
    """
    if section.source is not p.target or section.target is not p.source:
        raise StructuralError(f"{section.name} is not a section candidate for {p.name}")
    if compose_functors(p, section) != identity_functor(p.target):
        raise StructuralError(f"{p.name}∘{section.name} is not the identity")
    index = index or ProjectionIndex(p)
    E, B = p.source, p.target
    lift: list[tuple[int, int]] = []
    for u, m in enumerate(B.morphisms):
        star_a = section.obj_map[m.dom]
        if B.is_identity(u):
            lam = E.identity(star_a)
        else:
            hint = (hints or {}).get(u)
            if (
                hint is not None
                and E.dom(hint) == star_a
                and p.mor_map[hint] == u
                and is_opcartesian(index, hint)
            ):
                lam = hint
            else:
                lam = opcartesian_lift(index, u, star_a)
        if lam is None:
            log.info("image structure missing a lift", extra={"functor": p.name, "morphism": m.label})
            return None
        lift.append((lam, E.cod(lam)))
    lift_table = tuple(lift)
    post, pre = derive_actions(index, section, lift_table)
    return ImageStructure(p, section, lift_table, post, pre)


def check_image_coherence(s: ImageStructure, *, settings: Settings | None = None) -> LawReport:
    """The lift identities, diagrams (a)-(c), compositionality and identity actions."""
    settings = settings or default_settings()
    p, star = s.proj, s.section
    E, B = p.source, p.target
    out = ViolationLog("image structure", settings.max_witnesses)
    lam, ex = s.lam, s.image_object
    lab = B.label

    for x in range(B.object_count):
        if lam(B.identity(x)) != E.identity(star.obj_map[x]):
            out.add("image.identity.lift", (B.objects[x],))

    for v, u in B.composable_pairs():
        vu = B.compose(v, u)
        if E.compose(s.post[(u, v)], lam(u)) != lam(vu):
            out.add("image.coherence.a", (lab(u), lab(v)))
    for u, w in B.composable_pairs():
        if E.compose(s.pre[(u, w)], lam(B.compose(u, w))) != E.compose(lam(u), star.mor_map[w]):
            out.add("image.coherence.b", (lab(w), lab(u)))

    for u, mu in enumerate(B.morphisms):
        if s.post[(u, B.identity(mu.cod))] != E.identity(ex(u)):
            out.add("image.identity.post", (lab(u),))
        if s.pre[(u, B.identity(mu.dom))] != E.identity(ex(u)):
            out.add("image.identity.pre", (lab(u),))

    for w, mw in enumerate(B.morphisms):
        for u in B.out_of(mw.cod):
            uw = B.compose(u, w)
            for v in B.out_of(B.cod(u)):
                lhs = E.compose(s.post[(u, v)], s.pre[(u, w)])
                rhs = E.compose(s.pre[(B.compose(v, u), w)], s.post[(uw, v)])
                if lhs != rhs:
                    out.add("image.coherence.c", (lab(w), lab(u), lab(v)))

    for v, u in B.composable_pairs():
        vu = B.compose(v, u)
        for v2 in B.out_of(B.cod(v)):
            lhs = s.post[(u, B.compose(v2, v))]
            rhs = E.compose(s.post[(vu, v2)], s.post[(u, v)])
            if lhs != rhs:
                out.add("image.compositionality.post", (lab(u), lab(v), lab(v2)))
    for u, w in B.composable_pairs():
        uw = B.compose(u, w)
        for w2 in B.into(B.dom(w)):
            lhs = s.pre[(u, B.compose(w, w2))]
            rhs = E.compose(s.pre[(u, w)], s.pre[(uw, w2)])
            if lhs != rhs:
                out.add("image.compositionality.pre", (lab(w2), lab(w), lab(u)))
    return out.report()


def image_functor(
    s: ImageStructure,
    arrows: ArrowBundle,
    *,
    verify: bool = True,
    settings: Settings | None = None,
) -> FunctorData:
    """B^→ → E: ``u ↦ ∃_u[⋆_A]`` and a square ``(w, v): u -> u'`` to ``◁w ∘ v▷``.

    ``verify=False`` skips the coherence precondition so that tables which are
    deliberately broken can be inspected through ``validate_functor``.
    """
    if arrows.base is not s.proj.target:
        raise StructuralError("arrow bundle is not built on the base of the image structure")
    report = check_image_coherence(s, settings=settings) if verify else LawReport("image structure")
    if not report.passed:
        first = report.violations[0]
        raise PreconditionError(f"image structure is not coherent: {first.law} at {first.witness}")
    E = s.proj.source
    mor_map = []
    for k, (w, v) in enumerate(arrows.squares):
        u = arrows.arrow_cat.dom(k)
        u2 = arrows.arrow_cat.cod(k)
        mor_map.append(E.compose(s.pre[(u2, w)], s.post[(u, v)]))
    return FunctorData(
        "image",
        arrows.arrow_cat,
        E,
        tuple(s.image_object(u) for u in range(arrows.base.morphism_count)),
        tuple(mor_map),
    )

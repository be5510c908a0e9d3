"""Comprehension with image: the adjunction image ⊣ P over the base."""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass

from catcomp.adjunction import Adjunction, check_adjunction
from catcomp.comprehension.structures import (
    SectionData,
    SectionKind,
    derive_comprehension_from_section,
    section_iota,
)
from catcomp.config import Settings, default_settings
from catcomp.errors import StructuralError
from catcomp.fibration import ImageStructure, ProjectionIndex, image_functor, vertical
from catcomp.fincat import (
    ArrowBundle,
    FunctorData,
    LawReport,
    NatTransData,
    ViolationLog,
    compose_functors,
    identity_functor,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


@dataclass(frozen=True)
class ComprehensionWithImage:
    P: FunctorData
    image: FunctorData
    adj: Adjunction
    report: LawReport


def _check_compatible(s: ImageStructure, sd: SectionData) -> None:
    if sd.kind is not SectionKind.COMPREHENSION:
        raise StructuralError("comprehension with image needs a comprehension section")
    if s.proj != sd.proj or s.section != sd.section:
        raise StructuralError("image structure and section data use different sections")


def transpose(s: ImageStructure, sd: SectionData, u: int, h: int) -> tuple[int, int]:
    """``h: ∃_u -> e`` goes to the square ``([h∘λ_u] ∘ η_A, p(h)): u -> ι_e``."""
    E, B = s.proj.source, s.proj.target
    comp, eta = sd.adj.right, sd.adj.unit.components
    w = B.compose(comp.mor_map[E.compose(h, s.lam(u))], eta[B.dom(u)])
    return w, s.proj.mor_map[h]


def image_counit_at(s: ImageStructure, sd: SectionData, iota: NatTransData, index: ProjectionIndex, e: int) -> int | None:
    """The unique ``h: ∃_{ι_e} -> e`` over the identity with ``h ∘ λ_{ι_e} = ε_e``."""
    E, B = s.proj.source, s.proj.target
    u = iota.components[e]
    found = [
        h
        for h in index.over(s.image_object(u), e, B.identity(B.cod(u)))
        if E.compose(h, s.lam(u)) == sd.adj.counit.components[e]
    ]
    return found[0] if len(found) == 1 else None


def comprehension_with_image(
    s: ImageStructure,
    sd: SectionData,
    arrows: ArrowBundle,
    *,
    settings: Settings | None = None,
) -> ComprehensionWithImage:
    """Build ``image ⊣ P`` with unit ``([λ_u]∘η_A, id)`` and counit from the opcartesian property."""
    settings = settings or default_settings()
    _check_compatible(s, sd)
    cs = derive_comprehension_from_section(sd, arrows, settings=settings)
    P = cs.P
    image = image_functor(s, arrows, settings=settings)
    E, B = s.proj.source, s.proj.target
    index = ProjectionIndex(s.proj)

    unit = []
    for u, m in enumerate(B.morphisms):
        w, _ = transpose(s, sd, u, E.identity(s.image_object(u)))
        sq = arrows.square(u, w, B.identity(m.cod), cs.iota.components[s.image_object(u)])
        if sq is None:
            raise StructuralError(f"unit square at {m.label} does not commute")
        unit.append(sq)
    counit = []
    for e in range(E.object_count):
        h = image_counit_at(s, sd, cs.iota, index, e)
        if h is None:
            raise StructuralError(f"no counit component at {E.objects[e]}")
        counit.append(h)

    adj = Adjunction(
        "image⊣P",
        image,
        P,
        NatTransData("η", identity_functor(arrows.arrow_cat), compose_functors(P, image), tuple(unit)),
        NatTransData("ε", compose_functors(image, P), identity_functor(E), tuple(counit)),
    )
    out = ViolationLog("comprehension with image", settings.max_witnesses)
    out.extend(check_adjunction(adj, settings=settings))
    if compose_functors(arrows.cod_f, P) != s.proj:
        out.add("image_comprehension.cod", (P.name,))
    for u, k in enumerate(unit):
        if not B.is_identity(arrows.cod_f.mor_map[k]):
            out.add("image_comprehension.unit_vertical", (B.label(u),))
    for e, h in enumerate(counit):
        if not vertical(s.proj, h):
            out.add("image_comprehension.counit_vertical", (E.objects[e],))
    log.info("comprehension with image assembled", extra={"passed": out.report().passed})
    return ComprehensionWithImage(P, image, adj, out.report())


def check_image_hom_bijection(s: ImageStructure, sd: SectionData, *, settings: Settings | None = None) -> LawReport:
    """Oracle for image ⊣ P: Hom_E(∃_u, e) ≅ commuting squares u -> ι_e, counted without building B^→."""
    settings = settings or default_settings()
    _check_compatible(s, sd)
    iota = section_iota(sd)
    E, B = s.proj.source, s.proj.target
    comp = sd.adj.right
    out = ViolationLog("image ⊣ P hom bijection", settings.max_witnesses)
    for u, m in enumerate(B.morphisms):
        source_obj = s.image_object(u)
        for e in range(E.object_count):
            iota_e = iota.components[e]
            left_side = E.hom(source_obj, e)
            by_diagonal: dict[int, list[int]] = defaultdict(list)
            for v in B.hom(m.cod, s.proj.obj_map[e]):
                by_diagonal[B.compose(v, u)].append(v)
            squares = {
                (w, v)
                for w in B.hom(m.dom, comp.obj_map[e])
                for v in by_diagonal.get(B.compose(iota_e, w), ())
            }
            image = {transpose(s, sd, u, h) for h in left_side}
            if len(image) != len(left_side) or image != squares:
                out.add("image_comprehension.hom_bijection", (m.label, E.objects[e]))
    return out.report()

"""Decide which of the four classical comprehension notions a functor with a section realizes.

Each notion is decided on its own:

- jacobs: p is a fibration and ``([h], p h)`` between ι-components is a
  pullback square for every chosen cartesian ``h``;
- d_category: p is a fibration, ⋆ is fiberwise terminal (so ``p ⊣ ⋆``),
  ⋆ is fully faithful and has a right adjoint;
- tc_opfibration: p is an opfibration and ⋆ is fully faithful with a right adjoint;
- lawvere: p is a bifibration, ⋆ is fiberwise terminal, an image structure
  exists and ``image ⊣ P`` holds with vertical unit and counit.

A necessary condition that is computed and fails gives ``false``; missing
data gives ``undetermined``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from catcomp.adjunction import Adjunction, check_adjunction
from catcomp.comprehension.image import check_image_hom_bijection, image_counit_at
from catcomp.comprehension.structures import (
    ComprehensionStructure,
    SectionData,
    SectionKind,
    section_iota,
)
from catcomp.config import Settings, default_settings
from catcomp.fibration import FibrationClass, ProjectionIndex, build_image_structure, classify_functor, fiber
from catcomp.fincat import (
    FunctorData,
    NatTransData,
    compose_functors,
    identity_functor,
    identity_nat_trans,
    is_fully_faithful,
    pullback_counterexample,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


class Flag(str, enum.Enum):
    TRUE = "true"
    FALSE = "false"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class NotionVerdict:
    flag: Flag
    witnesses: tuple[str, ...] = ()


@dataclass(frozen=True)
class NotionClassification:
    jacobs: NotionVerdict
    d_category: NotionVerdict
    tc_opfibration: NotionVerdict
    lawvere: NotionVerdict

    def as_record(self) -> dict[str, dict[str, object]]:
        return {
            name: {"flag": verdict.flag.value, "witnesses": list(verdict.witnesses)}
            for name, verdict in (
                ("jacobs", self.jacobs),
                ("d_category", self.d_category),
                ("tc_opfibration", self.tc_opfibration),
                ("lawvere", self.lawvere),
            )
        }


def _verdict(failures: list[str]) -> NotionVerdict:
    return NotionVerdict(Flag.FALSE, tuple(failures)) if failures else NotionVerdict(Flag.TRUE)


def _missing(what: str) -> NotionVerdict:
    return NotionVerdict(Flag.UNDETERMINED, (f"no {what} supplied",))


def _fiberwise_terminal_unit(sd: SectionData, index: ProjectionIndex) -> tuple[list[int], list[str]]:
    """⋆a must be terminal in the fiber over a; the unit collects the maps e -> ⋆(p e) over identities."""
    p, star = sd.proj, sd.section
    E, B = p.source, p.target
    failures: list[str] = []
    for a in range(B.object_count):
        local = fiber(p, a)
        top = local.object_index(E.objects[star.obj_map[a]])
        for x in range(local.object_count):
            if len(local.hom(x, top)) != 1:
                failures.append(f"⋆{B.objects[a]} not terminal for {local.objects[x]}")
    if failures:
        return [], failures
    unit = [index.over(e, star.obj_map[a], B.identity(a))[0] for e, a in enumerate(p.obj_map)]
    return unit, failures


def _projection_adjunction(sd: SectionData, unit: list[int]) -> Adjunction:
    """``p ⊣ ⋆`` with unit the terminal maps and identity counit."""
    p, star = sd.proj, sd.section
    return Adjunction(
        f"{p.name}⊣{star.name}",
        p,
        star,
        NatTransData("η", identity_functor(p.source), compose_functors(star, p), tuple(unit)),
        identity_nat_trans(compose_functors(p, star)).renamed("ε"),
    )


def _section_checks(sd: SectionData, settings: Settings) -> list[str]:
    failures: list[str] = []
    if not is_fully_faithful(sd.section):
        failures.append(f"{sd.section.name} is not fully faithful")
    if sd.kind is not SectionKind.COMPREHENSION or sd.adj.left != sd.section:
        failures.append(f"{sd.section.name} carries no right adjoint")
    elif not check_adjunction(sd.adj, settings=settings).passed:
        failures.append(f"{sd.adj.name} fails the triangle identities")
    return failures


def _jacobs(
    fib: FibrationClass,
    p: FunctorData,
    comp: FunctorData | None,
    iota: NatTransData | None,
) -> NotionVerdict:
    if not fib.is_fibration:
        return NotionVerdict(Flag.FALSE, tuple(f"no cartesian lift of {u} at {s}" for k, u, s in fib.missing_lifts if k == "cartesian"))
    if comp is None or iota is None:
        return _missing("comprehension data")
    E, B = p.source, p.target
    failures: list[str] = []
    for (_, _), h in sorted(fib.cartesian_lifts.items()):
        e, e2 = E.dom(h), E.cod(h)
        cone = pullback_counterexample(B, comp.mor_map[h], iota.components[e], iota.components[e2], p.mor_map[h])
        if cone is not None:
            failures.append(f"square of {E.label(h)} is not a pullback")
            if len(failures) >= 5:
                break
    return _verdict(failures)


def classify_notion(
    p: FunctorData,
    sd: SectionData | None = None,
    cs: ComprehensionStructure | None = None,
    *,
    settings: Settings | None = None,
) -> NotionClassification:
    settings = settings or default_settings()
    index = ProjectionIndex(p)
    fib = classify_functor(p, index=index)
    comp: FunctorData | None = None
    iota: NatTransData | None = None
    if cs is not None:
        comp, iota = cs.comp, cs.iota
    elif sd is not None and sd.kind is SectionKind.COMPREHENSION:
        comp, iota = sd.adj.right, section_iota(sd)

    jacobs = _jacobs(fib, p, comp, iota)

    terminal_unit: list[int] = []
    terminal_failures: list[str] = []
    if sd is not None:
        terminal_unit, terminal_failures = _fiberwise_terminal_unit(sd, index)

    if not fib.is_fibration:
        d_category = NotionVerdict(Flag.FALSE, ("not a fibration",))
    elif sd is None:
        d_category = _missing("section")
    else:
        failures = list(terminal_failures)
        if not failures and not check_adjunction(_projection_adjunction(sd, terminal_unit), settings=settings).passed:
            failures.append(f"{p.name} ⊣ {sd.section.name} fails the triangle identities")
        failures.extend(_section_checks(sd, settings))
        d_category = _verdict(failures)

    if not fib.is_opfibration:
        tc = NotionVerdict(Flag.FALSE, ("not an opfibration",))
    elif sd is None:
        tc = _missing("section")
    else:
        tc = _verdict(_section_checks(sd, settings))

    if not fib.is_bifibration:
        lawvere = NotionVerdict(Flag.FALSE, ("not a bifibration",))
    elif sd is None or sd.kind is not SectionKind.COMPREHENSION:
        lawvere = _missing("comprehension section")
    else:
        failures = list(terminal_failures)
        hints = {u: lam for (u, r), lam in fib.opcartesian_lifts.items() if r == sd.section.obj_map[p.target.dom(u)]}
        structure = build_image_structure(p, sd.section, hints, index=index)
        if structure is None:
            failures.append("no image structure")
        else:
            bijection = check_image_hom_bijection(structure, sd, settings=settings)
            failures.extend(f"{v.law} at {v.witness}" for v in bijection.violations[:5])
            section_i = section_iota(sd)
            for e in range(p.source.object_count):
                if image_counit_at(structure, sd, section_i, index, e) is None:
                    failures.append(f"no vertical counit at {p.source.objects[e]}")
                    break
        lawvere = _verdict(failures)

    result = NotionClassification(jacobs, d_category, tc, lawvere)
    log.info("classified notions", extra={"functor": p.name, "flags": {k: v["flag"] for k, v in result.as_record().items()}})
    return result


def hierarchy_violations(nc: NotionClassification) -> list[str]:
    """Implications between the notions that fail on determined flags."""
    out: list[str] = []
    if nc.d_category.flag is Flag.TRUE and nc.jacobs.flag is Flag.FALSE:
        out.append("d_category without jacobs")
    if nc.lawvere.flag is Flag.TRUE and nc.tc_opfibration.flag is Flag.FALSE:
        out.append("lawvere without tc_opfibration")
    return out

"""Law reports and the validators for categories, functors and natural transformations."""

from __future__ import annotations

from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass

from catcomp.config import Settings, default_settings
from catcomp.errors import ResourceError, StructuralError
from catcomp.fincat.category import CategoryPresentation
from catcomp.fincat.functor import FunctorData, NatTransData, parallel
from catcomp.logs import get_logger

log = get_logger(__name__)

LAW = "law"
STRUCTURAL = "structural"


@dataclass(frozen=True)
class Violation:
    law: str
    witness: tuple
    kind: str = LAW
    detail: str = ""


@dataclass(frozen=True)
class LawReport:
    subject: str
    violations: tuple[Violation, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def structural(self) -> bool:
        return any(v.kind == STRUCTURAL for v in self.violations)

    def laws_failed(self) -> tuple[str, ...]:
        return tuple(dict.fromkeys(v.law for v in self.violations))

    def witness(self, law: str) -> tuple | None:
        for v in self.violations:
            if v.law == law:
                return v.witness
        return None

    def prefixed(self, prefix: str) -> LawReport:
        return LawReport(
            self.subject,
            tuple(Violation(f"{prefix}.{v.law}", v.witness, v.kind, v.detail) for v in self.violations),
        )

    def merge(self, *others: LawReport, subject: str | None = None) -> LawReport:
        violations = list(self.violations)
        for other in others:
            violations.extend(other.violations)
        return LawReport(subject or self.subject, tuple(violations))


class ViolationLog:
    """Collects violations, keeping at most ``limit`` witnesses per law."""

    def __init__(self, subject: str, limit: int | None = None) -> None:
        self.subject = subject
        self.limit = limit if limit is not None else default_settings().max_witnesses
        self._items: list[Violation] = []
        self._per_law: dict[str, int] = defaultdict(int)

    def add(self, law: str, witness: Iterable, *, kind: str = LAW, detail: str = "") -> None:
        if self._per_law[law] >= self.limit:
            return
        self._per_law[law] += 1
        self._items.append(Violation(law, tuple(witness), kind, detail))

    def extend(self, report: LawReport) -> None:
        for v in report.violations:
            self.add(v.law, v.witness, kind=v.kind, detail=v.detail)

    def failed(self, law: str) -> bool:
        return self._per_law.get(law, 0) > 0

    def report(self) -> LawReport:
        return LawReport(self.subject, tuple(self._items))


def _check_indices(c: CategoryPresentation) -> None:
    n_obj, n_mor = c.object_count, c.morphism_count
    for idx, m in enumerate(c.morphisms):
        if not (0 <= m.dom < n_obj and 0 <= m.cod < n_obj):
            raise StructuralError(f"morphism {m.label}#{idx} in {c.name} has out-of-range endpoints")
    if len(c.identities) != n_obj:
        raise StructuralError(f"identity table of {c.name} has {len(c.identities)} entries for {n_obj} objects")
    for x, i in enumerate(c.identities):
        if not 0 <= i < n_mor:
            raise StructuralError(f"identity of object {c.objects[x]} in {c.name} is out of range: {i}")


def validate_category(c: CategoryPresentation, *, settings: Settings | None = None) -> LawReport:
    """Check typing, totality, identity laws and associativity of ``c``."""
    settings = settings or default_settings()
    _check_indices(c)
    triples = c.composable_triple_count()
    if triples > settings.validation_budget:
        raise ResourceError(
            f"validating {c.name} needs {triples} composable triples, budget is {settings.validation_budget}"
        )
    log.debug("validating category", extra={"category": c.name, "triples": triples})
    out = ViolationLog(f"category {c.name}", settings.max_witnesses)
    n_mor = c.morphism_count
    lab = c.label

    for x, i in enumerate(c.identities):
        if c.dom(i) != x or c.cod(i) != x:
            out.add("category.identity.typing", (c.objects[x], lab(i)), kind=STRUCTURAL)

    for g, f in c.composable_pairs():
        h = c.composition.get((g, f))
        if h is None:
            out.add("category.composition.total", (lab(g), lab(f)), kind=STRUCTURAL)
            continue
        if not 0 <= h < n_mor:
            raise StructuralError(f"composite of {lab(g)} after {lab(f)} in {c.name} is out of range: {h}")
        if c.dom(h) != c.dom(f) or c.cod(h) != c.cod(g):
            out.add("category.composition.typing", (lab(g), lab(f)), kind=STRUCTURAL)
    if out.failed("category.composition.total") or out.failed("category.identity.typing"):
        return out.report()

    for f, mf in enumerate(c.morphisms):
        left = c.identity(mf.cod)
        if c.compose(left, f) != f:
            out.add("category.identity.left", (lab(left), lab(f)))
        right = c.identity(mf.dom)
        if c.compose(f, right) != f:
            out.add("category.identity.right", (lab(f), lab(right)))

    if not out.failed("category.composition.typing"):
        for g, f in c.composable_pairs():
            gf = c.compose(g, f)
            for h in c.out_of(c.cod(g)):
                if c.compose(h, gf) != c.compose(c.compose(h, g), f):
                    out.add("category.associativity", (lab(h), lab(g), lab(f)))
    return out.report()


def _check_functor_tables(f: FunctorData) -> None:
    src, tgt = f.source, f.target
    if len(f.obj_map) != src.object_count or len(f.mor_map) != src.morphism_count:
        raise StructuralError(f"functor {f.name} tables do not cover {src.name}")
    for x in f.obj_map:
        if not 0 <= x < tgt.object_count:
            raise StructuralError(f"functor {f.name} references a missing object of {tgt.name}: {x}")
    for m in f.mor_map:
        if not 0 <= m < tgt.morphism_count:
            raise StructuralError(f"functor {f.name} references a missing morphism of {tgt.name}: {m}")


def validate_functor(f: FunctorData, *, settings: Settings | None = None) -> LawReport:
    settings = settings or default_settings()
    _check_functor_tables(f)
    src, tgt = f.source, f.target
    out = ViolationLog(f"functor {f.name}", settings.max_witnesses)

    for u, m in enumerate(src.morphisms):
        fu = f.mor_map[u]
        if tgt.dom(fu) != f.obj_map[m.dom] or tgt.cod(fu) != f.obj_map[m.cod]:
            out.add("functor.dom_cod", (m.label,))
    for x in range(src.object_count):
        if f.mor_map[src.identity(x)] != tgt.identity(f.obj_map[x]):
            out.add("functor.identity", (src.objects[x],))
    if out.failed("functor.dom_cod"):
        return out.report()
    for g, u in src.composable_pairs():
        if f.mor_map[src.compose(g, u)] != tgt.compose(f.mor_map[g], f.mor_map[u]):
            out.add("functor.composition", (src.label(g), src.label(u)))
    return out.report()


def validate_nat_trans(alpha: NatTransData, *, settings: Settings | None = None) -> LawReport:
    """Typing of every component, then every naturality square."""
    settings = settings or default_settings()
    if not parallel(alpha.source, alpha.target):
        raise StructuralError(
            f"natural transformation {alpha.name} has non-parallel endpoints {alpha.source.name}, {alpha.target.name}"
        )
    src, tgt = alpha.domain, alpha.codomain
    if len(alpha.components) != src.object_count:
        raise StructuralError(f"natural transformation {alpha.name} does not cover {src.name}")
    out = ViolationLog(f"natural transformation {alpha.name}", settings.max_witnesses)
    F, G = alpha.source, alpha.target
    for x, comp in enumerate(alpha.components):
        if not 0 <= comp < tgt.morphism_count:
            raise StructuralError(f"component of {alpha.name} at {src.objects[x]} is out of range: {comp}")
        if tgt.dom(comp) != F.obj_map[x] or tgt.cod(comp) != G.obj_map[x]:
            out.add("nat_trans.typing", (src.objects[x],), kind=STRUCTURAL)
    if out.failed("nat_trans.typing"):
        return out.report()
    for u, m in enumerate(src.morphisms):
        lhs = tgt.compose(G.mor_map[u], alpha.components[m.dom])
        rhs = tgt.compose(alpha.components[m.cod], F.mor_map[u])
        if lhs != rhs:
            out.add("nat_trans.naturality", (m.label,))
    return out.report()


def require_passed(report: LawReport) -> None:
    """Raise ``StructuralError`` unless ``report`` passed; used as a precondition guard."""
    if not report.passed:
        first = report.violations[0]
        raise StructuralError(f"{report.subject} fails {first.law} at {first.witness}")

"""Named commands over parsed documents, with deterministic reports and exit statuses."""

from __future__ import annotations

import dataclasses
import enum
import json
from collections.abc import Callable, Mapping, Sequence
from dataclasses import dataclass, field

from catcomp.adjunction import check_adjunction, check_hom_bijection
from catcomp.arrow2 import ArrowObject, ArrowTwoCell, check_arrow_adjunction, check_two_cell, lax_morphism, lift_adjunction
from catcomp.cli.documents import Document, DocumentKind, canonical_category_body, serialize_document
from catcomp.cli.workspace import Workspace
from catcomp.comprehension import (
    Flag,
    SectionData,
    SectionKind,
    check_comprehension,
    check_quotient,
    check_section_data,
    classify_notion,
    comprehension_with_image,
    derive_comprehension_from_section,
    derive_quotient_from_section,
    hierarchy_violations,
    lift_section_adjunction,
    opposite_section_data,
    section_iota,
)
from catcomp.config import Settings, default_settings
from catcomp.endoalg import (
    Direction,
    DistributivityPair,
    check_lifting_criterion,
    check_transport,
    coalgebra_as_algebra,
    lift_comprehension_to_algebras,
)
from catcomp.errors import ConfigError, ParseError, PreconditionError, ResourceError, StructuralError
from catcomp.fibration import ImageStructure, build_image_structure, check_image_coherence
from catcomp.fincat import (
    FunctorData,
    LawReport,
    arrow_category,
    generate_category,
    identity_functor,
    validate_category,
    validate_functor,
)
from catcomp.fincat.laws import STRUCTURAL
from catcomp.instances import (
    InstanceBundle,
    kleene_gfp,
    kleene_lfp,
    powerset_step,
    rel_quotient_object,
    subset_label,
    validate_instance,
)
from catcomp.logs import get_logger

log = get_logger(__name__)

EXIT_OK = 0
EXIT_LAW_FAILED = 1
EXIT_ERROR = 2

GENERATED_MAX_OBJECTS = 4
GENERATED_MAX_MORPHISMS = 10


class Status(str, enum.Enum):
    PASS = "pass"
    FAIL = "fail"
    UNDETERMINED = "undetermined"


@dataclass(frozen=True)
class Check:
    name: str
    status: Status
    subject: str = ""
    witnesses: tuple[str, ...] = ()

    def as_record(self) -> dict[str, object]:
        return {"name": self.name, "status": self.status.value, "subject": self.subject, "witnesses": list(self.witnesses)}


@dataclass(frozen=True)
class RunFlags:
    json: bool = False
    budget: int | None = None
    seed: int | None = None
    direction: str = Direction.ALGEBRA.value


@dataclass(frozen=True)
class Report:
    """Exit 0 when no check fails, 1 when a law fails, 2 on structural, parse or resource errors."""

    command: str
    targets: tuple[str, ...] = ()
    checks: tuple[Check, ...] = ()
    exit_status: int = EXIT_OK
    record: Mapping[str, object] = field(default_factory=dict)
    error: str | None = None

    def as_record(self) -> dict[str, object]:
        out: dict[str, object] = {
            "command": self.command,
            "targets": list(self.targets),
            "checks": [c.as_record() for c in self.checks],
            "exit_status": self.exit_status,
            "record": dict(self.record),
        }
        if self.error is not None:
            out["error"] = self.error
        return out

    def render(self, *, as_json: bool = False) -> str:
        if as_json:
            return json.dumps(self.as_record(), indent=2, sort_keys=True, ensure_ascii=False)
        lines = [f"command: {' '.join([self.command, *self.targets])}"]
        for c in self.checks:
            where = f" [{c.subject}]" if c.subject else ""
            lines.append(f"{c.status.value.upper():<12} {c.name}{where}")
            lines.extend(f"    {w}" for w in c.witnesses)
        for key in sorted(self.record):
            lines.append(f"{key}: {json.dumps(self.record[key], sort_keys=True, ensure_ascii=False)}")
        if self.error is not None:
            lines.append(f"ERROR: {self.error}")
        lines.append(f"exit: {self.exit_status}")
        return "\n".join(lines)


@dataclass(frozen=True)
class _Context:
    ws: Workspace
    targets: tuple[str, ...]
    flags: RunFlags
    settings: Settings


Outcome = tuple[list[Check], dict[str, object]]


def _fmt(witness: tuple) -> str:
    return "(" + ", ".join(str(w) for w in witness) + ")"


def _law_checks(report: LawReport, name: str) -> list[Check]:
    """One passing check named ``name``, or one failing check per violated law."""
    if report.structural:
        first = next(v for v in report.violations if v.kind == STRUCTURAL)
        raise StructuralError(f"{report.subject}: {first.law} at {_fmt(first.witness)}")
    if report.passed:
        return [Check(name, Status.PASS, report.subject)]
    grouped: dict[str, list[str]] = {}
    for v in report.violations:
        grouped.setdefault(v.law, []).append(_fmt(v.witness))
    return [Check(law, Status.FAIL, report.subject, tuple(ws)) for law, ws in grouped.items()]


def _flag_check(name: str, flag: Flag, subject: str, witnesses: Sequence[str] = ()) -> Check:
    status = {Flag.TRUE: Status.PASS, Flag.FALSE: Status.FAIL, Flag.UNDETERMINED: Status.UNDETERMINED}[flag]
    return Check(name, status, subject, tuple(witnesses))


def _documents(ctx: _Context, *kinds: DocumentKind) -> list[Document]:
    if ctx.targets:
        docs = [ctx.ws.document(name) for name in ctx.targets]
        for doc in docs:
            if doc.kind not in kinds:
                raise ParseError(f"{doc.name} is a {doc.kind.value}; expected {' or '.join(k.value for k in kinds)}", doc.line)
        return docs
    return [doc for kind in kinds for doc in ctx.ws.of_kind(kind)]


def _require(docs: list[Document], what: str) -> list[Document]:
    if not docs:
        raise StructuralError(f"no {what} to check")
    return docs


def _instances(ctx: _Context) -> list[tuple[Document, InstanceBundle]]:
    docs = _require(_documents(ctx, DocumentKind.INSTANCE), "instance documents")
    return [(doc, ctx.ws.instance(doc.name)) for doc in docs]


def _comprehension_data(bundle: InstanceBundle) -> SectionData:
    if bundle.section_data.kind is not SectionKind.COMPREHENSION:
        raise StructuralError(f"instance {bundle.name} carries no comprehension section")
    return bundle.section_data


def _quotient_data(bundle: InstanceBundle) -> SectionData:
    if bundle.section_data.kind is SectionKind.QUOTIENT:
        return bundle.section_data
    if bundle.quotient_data is None:
        raise StructuralError(f"instance {bundle.name} carries no quotient section")
    return bundle.quotient_data


def _image(bundle: InstanceBundle) -> ImageStructure | None:
    sd = _comprehension_data(bundle)
    return build_image_structure(bundle.proj, sd.section, bundle.hints)


def _check_category(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    record: dict[str, object] = {}
    docs = _documents(ctx, DocumentKind.CATEGORY)
    if not docs and ctx.flags.seed is not None:
        c = generate_category(ctx.flags.seed, GENERATED_MAX_OBJECTS, GENERATED_MAX_MORPHISMS)
        record["generated"] = serialize_document(Document(DocumentKind.CATEGORY, c.name, canonical_category_body(c)))
        categories = [c]
    else:
        categories = [ctx.ws.category(doc.name) for doc in _require(docs, "category documents")]
    for c in categories:
        checks.extend(_law_checks(validate_category(c, settings=ctx.settings), f"category {c.name}"))
        record[c.name] = {"objects": c.object_count, "morphisms": c.morphism_count}
    return checks, record


def _check_functor(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    for doc in _require(_documents(ctx, DocumentKind.FUNCTOR), "functor documents"):
        checks.extend(_law_checks(validate_functor(ctx.ws.functor(doc.name), settings=ctx.settings), f"functor {doc.name}"))
    return checks, {}


def _check_two_cell(ctx: _Context) -> Outcome:
    """Each ``α: F ⇒ G`` is read as the 2-cell ``(α, α)`` between the strict lax morphisms
    ``(F, F)`` and ``(G, G)`` of identity projections."""
    checks: list[Check] = []
    for doc in _require(_documents(ctx, DocumentKind.NAT_TRANS), "natural transformation documents"):
        cell = ctx.ws.nat_trans(doc.name)
        source = ArrowObject(f"Id_{cell.domain.name}", identity_functor(cell.domain))
        target = ArrowObject(f"Id_{cell.codomain.name}", identity_functor(cell.codomain))
        m1 = lax_morphism(cell.source.name, source, target, cell.source, cell.source)
        m2 = lax_morphism(cell.target.name, source, target, cell.target, cell.target)
        report = check_two_cell(ArrowTwoCell(cell, cell), m1, m2, settings=ctx.settings)
        checks.extend(_law_checks(report, f"two_cell {doc.name}"))
    return checks, {}


def _check_adjunction(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    docs = _require(_documents(ctx, DocumentKind.ADJUNCTION, DocumentKind.INSTANCE), "adjunction or instance documents")
    for doc in docs:
        if doc.kind is DocumentKind.ADJUNCTION:
            adj = ctx.ws.adjunction(doc.name)
            checks.extend(_law_checks(check_adjunction(adj, settings=ctx.settings), f"adjunction {doc.name}"))
            checks.extend(_law_checks(check_hom_bijection(adj, settings=ctx.settings), f"hom_bijection {doc.name}"))
            continue
        bundle = ctx.ws.instance(doc.name)
        for sd in filter(None, (bundle.section_data, bundle.quotient_data)):
            checks.extend(_law_checks(check_section_data(sd, settings=ctx.settings), f"section {sd.adj.name}"))
            checks.extend(_law_checks(check_hom_bijection(sd.adj, settings=ctx.settings), f"hom_bijection {sd.adj.name}"))
    return checks, {}


def _lift_adjunction(ctx: _Context) -> Outcome:
    """Targets are one instance, or ``adj_base adj_total phi psi p1 p2``."""
    if len(ctx.targets) == 6:
        names = ctx.targets
        ws = ctx.ws
        result = lift_adjunction(
            ws.adjunction(names[0]),
            ws.adjunction(names[1]),
            ws.nat_trans(names[2]),
            ws.nat_trans(names[3]),
            p1=ws.functor(names[4]),
            p2=ws.functor(names[5]),
            settings=ctx.settings,
        )
        subject = f"{names[0]} over {names[1]}"
    else:
        (doc, bundle), *rest = _instances(ctx)
        if rest:
            raise StructuralError("lift-adjunction takes one instance or six named documents")
        sd = bundle.section_data
        if sd.kind is SectionKind.QUOTIENT:
            sd = opposite_section_data(sd)
        result = lift_section_adjunction(sd, section_iota(sd), settings=ctx.settings)
        subject = doc.name
    if not result.lifted:
        return [Check("lift.diagnosis", Status.FAIL, subject, (result.diagnosis.value,))], {"diagnosis": result.diagnosis.value}
    checks = [Check("lift.diagnosis", Status.PASS, subject)]
    checks.extend(_law_checks(check_arrow_adjunction(result.adjunction, settings=ctx.settings), "lift.arrow_adjunction"))
    return checks, {"diagnosis": result.diagnosis.value}


def _build_image(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    record: dict[str, object] = {}
    for doc, bundle in _instances(ctx):
        s = _image(bundle)
        if s is None:
            checks.append(Check("image.lifts", Status.FAIL, doc.name, ("a base morphism has no opcartesian lift",)))
            continue
        checks.append(Check("image.lifts", Status.PASS, doc.name))
        B, E = bundle.base, bundle.total
        record[doc.name] = {B.label(u): E.objects[s.image_object(u)] for u in range(B.morphism_count) if not B.is_identity(u)}
    return checks, record


def _check_image_coherence(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    for doc, bundle in _instances(ctx):
        s = _image(bundle)
        if s is None:
            checks.append(Check("image.lifts", Status.FAIL, doc.name, ("a base morphism has no opcartesian lift",)))
            continue
        checks.extend(_law_checks(check_image_coherence(s, settings=ctx.settings), "image.coherence"))
    return checks, {}


def _derive_comprehension(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    for doc, bundle in _instances(ctx):
        sd = _comprehension_data(bundle)
        arrows = arrow_category(bundle.base)
        cs = derive_comprehension_from_section(sd, arrows, settings=ctx.settings)
        checks.extend(_law_checks(check_comprehension(cs, arrows), f"comprehension {doc.name}"))
    return checks, {}


def _rel_oracle(bundle: InstanceBundle, qd: SectionData) -> list[Check]:
    """Every quotient object against the union-find closure of its relation."""
    structures = getattr(bundle.structure, "structures", ())
    mismatches = []
    for i, (a, r) in enumerate(structures):
        expected = rel_quotient_object(bundle.carriers[a], r)
        got = bundle.carriers[qd.adj.left.obj_map[i]]
        if got != expected:
            mismatches.append(f"{bundle.total.objects[i]}: {subset_label(got)} != {subset_label(expected)}")
    status = Status.FAIL if mismatches else Status.PASS
    return [Check("quotient.union_find_oracle", status, bundle.name, tuple(mismatches[:20]))]


def _derive_quotient(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    for doc, bundle in _instances(ctx):
        qd = _quotient_data(bundle)
        arrows = arrow_category(bundle.base)
        qs = derive_quotient_from_section(qd, arrows, settings=ctx.settings)
        checks.extend(_law_checks(check_quotient(qs, arrows), f"quotient {doc.name}"))
        if bundle.kind == "rel":
            checks.extend(_rel_oracle(bundle, qd))
    return checks, {}


def _comprehension_with_image(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    for doc, bundle in _instances(ctx):
        s = _image(bundle)
        if s is None:
            checks.append(Check("image.lifts", Status.FAIL, doc.name, ("a base morphism has no opcartesian lift",)))
            continue
        cwi = comprehension_with_image(s, bundle.section_data, arrow_category(bundle.base), settings=ctx.settings)
        checks.extend(_law_checks(cwi.report, f"image_comprehension {doc.name}"))
    return checks, {}


def _classify(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    record: dict[str, object] = {}
    for doc, bundle in _instances(ctx):
        nc = classify_notion(bundle.proj, bundle.section_data, settings=ctx.settings)
        for notion, verdict in (
            ("jacobs", nc.jacobs),
            ("d_category", nc.d_category),
            ("tc_opfibration", nc.tc_opfibration),
            ("lawvere", nc.lawvere),
        ):
            checks.append(_flag_check(f"classify.{notion}", verdict.flag, doc.name, verdict.witnesses))
        broken = hierarchy_violations(nc)
        checks.append(Check("classify.hierarchy", Status.FAIL if broken else Status.PASS, doc.name, tuple(broken)))
        record[doc.name] = nc.as_record()
    return checks, record


def _algebra_data(bundle: InstanceBundle, direction: Direction) -> tuple[FunctorData, SectionData, DistributivityPair]:
    """Algebra-direction data; coalgebra data is turned into algebra data on the opposites."""
    if direction is Direction.ALGEBRA:
        if bundle.algebra_pair is None:
            raise StructuralError(f"instance {bundle.name} carries no algebra distributivity pair")
        return bundle.proj, _comprehension_data(bundle), bundle.algebra_pair
    if bundle.coalgebra_pair is None:
        raise StructuralError(f"instance {bundle.name} carries no coalgebra distributivity pair")
    return coalgebra_as_algebra(bundle.proj, _quotient_data(bundle), bundle.coalgebra_pair)


def _lift_to_algebras(ctx: _Context) -> Outcome:
    direction = Direction(ctx.flags.direction)
    checks: list[Check] = []
    record: dict[str, object] = {}
    for doc, bundle in _instances(ctx):
        p, sd, pair = _algebra_data(bundle, direction)
        criterion = check_lifting_criterion(p, sd, pair, settings=ctx.settings)
        checks.extend(_law_checks(criterion, "lifting.criterion"))
        if not criterion.passed:
            continue
        lifted = lift_comprehension_to_algebras(p, sd, pair, settings=ctx.settings)
        checks.extend(_law_checks(lifted.report, f"lifted_comprehension {doc.name}"))
        record[doc.name] = {
            "direction": direction.value,
            "base_algebras": lifted.base.alg_cat.object_count,
            "total_algebras": lifted.total.alg_cat.object_count,
        }
    return checks, record


def _fixpoint_oracle(doc: Document, bundle: InstanceBundle, carrier: int | None, direction: Direction) -> Check:
    d = doc.body
    step = powerset_step(d.base, d.edges)
    expected = kleene_lfp(step) if direction is Direction.ALGEBRA else kleene_gfp(step, d.universe)
    got = bundle.carriers[carrier] if carrier is not None else None
    if got == expected:
        return Check("transport.fixpoint_oracle", Status.PASS, doc.name)
    shown = subset_label(got) if got is not None else "none"
    return Check("transport.fixpoint_oracle", Status.FAIL, doc.name, (f"{shown} != {subset_label(expected)}",))


def _check_transport(ctx: _Context) -> Outcome:
    direction = Direction(ctx.flags.direction)
    checks: list[Check] = []
    record: dict[str, object] = {}
    for doc, bundle in _instances(ctx):
        if direction is Direction.ALGEBRA:
            if bundle.algebra_pair is None:
                raise StructuralError(f"instance {bundle.name} carries no algebra distributivity pair")
            verdict = check_transport(bundle.proj, _comprehension_data(bundle), bundle.algebra_pair, settings=ctx.settings)
        else:
            if bundle.coalgebra_pair is None:
                raise StructuralError(f"instance {bundle.name} carries no coalgebra distributivity pair")
            verdict = check_transport(
                bundle.proj, _quotient_data(bundle), bundle.coalgebra_pair, direction=direction, settings=ctx.settings
            )
        checks.append(_flag_check("transport.initiality", verdict.verdict, doc.name))
        if bundle.kind == "pow" and verdict.verdict is not Flag.UNDETERMINED:
            checks.append(_fixpoint_oracle(doc, bundle, verdict.mu_carrier, direction))
        record[doc.name] = verdict.as_record()
    return checks, record


def _build_instance(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    record: dict[str, object] = {}
    for doc, bundle in _instances(ctx):
        checks.extend(_law_checks(validate_instance(bundle, settings=ctx.settings), f"instance {doc.name}"))
        record[doc.name] = {
            "total": bundle.total.name,
            "base_objects": bundle.base.object_count,
            "base_morphisms": bundle.base.morphism_count,
            "total_objects": bundle.total.object_count,
            "total_morphisms": bundle.total.morphism_count,
            "section": bundle.adj.name,
        }
    return checks, record


_EXPECTED_EXIT = {"pass": EXIT_OK, "fail": EXIT_LAW_FAILED, "error": EXIT_ERROR}


def _run_pipeline(ctx: _Context) -> Outcome:
    checks: list[Check] = []
    steps: list[dict[str, object]] = []
    for doc in _require(_documents(ctx, DocumentKind.PIPELINE), "pipeline documents"):
        for i, step in enumerate(doc.body.steps):
            expect = step.option("expect", "pass")
            if expect not in _EXPECTED_EXIT:
                raise ParseError(f"step expects pass, fail or error, got {expect}", doc.locations.get(f"step:{i}"))
            if step.command == "run-pipeline":
                raise ParseError("pipelines do not nest", doc.locations.get(f"step:{i}"))
            flags = dataclasses.replace(ctx.flags, direction=step.option("direction", ctx.flags.direction))
            sub = _dispatch(step.command, ctx.ws, step.targets, flags, ctx.settings)
            steps.append(sub.as_record())
            name = f"pipeline.step.{i}.{step.command}"
            if sub.exit_status == _EXPECTED_EXIT[expect]:
                checks.append(Check(name, Status.PASS, doc.name))
            elif sub.exit_status == EXIT_ERROR:
                raise StructuralError(f"pipeline {doc.name} step {i} ({step.command}): {sub.error}")
            else:
                failed = tuple(c.name for c in sub.checks if c.status is Status.FAIL) or (f"exit {sub.exit_status}",)
                checks.append(Check(name, Status.FAIL, doc.name, failed))
    return checks, {"steps": steps}


COMMANDS: dict[str, Callable[[_Context], Outcome]] = {
    "check-category": _check_category,
    "check-functor": _check_functor,
    "check-adjunction": _check_adjunction,
    "check-two-cell": _check_two_cell,
    "lift-adjunction": _lift_adjunction,
    "build-image": _build_image,
    "check-image-coherence": _check_image_coherence,
    "derive-comprehension": _derive_comprehension,
    "derive-quotient": _derive_quotient,
    "comprehension-with-image": _comprehension_with_image,
    "classify": _classify,
    "lift-to-algebras": _lift_to_algebras,
    "check-transport": _check_transport,
    "build-instance": _build_instance,
    "run-pipeline": _run_pipeline,
}


def usage() -> str:
    return "commands: " + ", ".join(sorted(COMMANDS))


def _dispatch(command: str, ws: Workspace, targets: Sequence[str], flags: RunFlags, settings: Settings) -> Report:
    targets = tuple(targets)
    handler = COMMANDS.get(command)
    if handler is None:
        return Report(command, targets, exit_status=EXIT_ERROR, error=f"unknown command {command!r}; {usage()}")
    log.info("command started", extra={"command": command, "targets": list(targets)})
    try:
        checks, record = handler(_Context(ws, targets, flags, settings))
    except PreconditionError as exc:
        report = Report(command, targets, (Check("precondition", Status.FAIL, "", (str(exc),)),), EXIT_LAW_FAILED)
    except (ParseError, StructuralError, ResourceError, ConfigError) as exc:
        report = Report(command, targets, exit_status=EXIT_ERROR, error=str(exc))
    else:
        failed = any(c.status is Status.FAIL for c in checks)
        report = Report(command, targets, tuple(checks), EXIT_LAW_FAILED if failed else EXIT_OK, record)
    log.info("command finished", extra={"command": command, "exit_status": report.exit_status})
    return report


def run(
    command: str,
    inputs: Sequence[Document],
    flags: RunFlags | None = None,
    *,
    targets: Sequence[str] = (),
    settings: Settings | None = None,
) -> Report:
    """Run ``command`` over ``inputs``; targets name the documents to act on, all of the right kind by default."""
    flags = flags or RunFlags()
    settings = (settings or default_settings()).with_overrides(algebra_budget=flags.budget, adjoint_budget=flags.budget)
    try:
        ws = Workspace(inputs, settings=settings)
    except ParseError as exc:
        return Report(command, tuple(targets), exit_status=EXIT_ERROR, error=str(exc))
    return _dispatch(command, ws, targets, flags, settings)

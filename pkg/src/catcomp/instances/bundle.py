"""Instance bundles: a projection with its section data and optional algebra data."""

from __future__ import annotations

from collections.abc import Mapping
from dataclasses import dataclass, field

from catcomp.adjunction import Adjunction
from catcomp.comprehension import SectionData, check_section_data
from catcomp.config import Settings, default_settings
from catcomp.endoalg import DistributivityPair, check_lifting_criterion, coalgebra_as_algebra
from catcomp.fincat import (
    CategoryPresentation,
    FunctorData,
    LawReport,
    ViolationLog,
    validate_category,
    validate_functor,
)
from catcomp.logs import get_logger

log = get_logger(__name__)


@dataclass(frozen=True, eq=False)
class InstanceBundle:
    """``carriers[b]`` is the subset behind base object ``b``."""

    name: str
    kind: str
    base: CategoryPresentation
    total: CategoryPresentation
    proj: FunctorData
    section_data: SectionData
    hints: Mapping[int, int] = field(default_factory=dict, repr=False)
    carriers: tuple[frozenset[int], ...] = field(default=(), repr=False)
    structure: object | None = field(default=None, repr=False)
    quotient_data: SectionData | None = field(default=None, repr=False)
    algebra_pair: DistributivityPair | None = field(default=None, repr=False)
    coalgebra_pair: DistributivityPair | None = field(default=None, repr=False)

    @property
    def section(self) -> FunctorData:
        return self.section_data.section

    @property
    def comp_or_quot(self) -> FunctorData:
        return self.section_data.partner

    @property
    def adj(self) -> Adjunction:
        return self.section_data.adj

    def carrier_index(self, s: frozenset[int]) -> int:
        return self.carriers.index(frozenset(s))


def _validate_category_within_budget(c: CategoryPresentation, out: ViolationLog, settings: Settings) -> None:
    if c.composable_triple_count() > settings.validation_budget:
        log.info("category validation skipped above budget", extra={"category": c.name})
        return
    out.extend(validate_category(c, settings=settings).prefixed(c.name))


def validate_instance(bundle: InstanceBundle, *, settings: Settings | None = None) -> LawReport:
    """Run the category, functor, section and criterion validators on every component."""
    settings = settings or default_settings()
    out = ViolationLog(f"instance {bundle.name}", settings.max_witnesses)
    _validate_category_within_budget(bundle.base, out, settings)
    _validate_category_within_budget(bundle.total, out, settings)
    sd = bundle.section_data
    for f in (bundle.proj, sd.section, sd.partner):
        out.extend(validate_functor(f, settings=settings).prefixed(f.name))
    out.extend(check_section_data(sd, settings=settings))
    if bundle.quotient_data is not None:
        out.extend(check_section_data(bundle.quotient_data, settings=settings).prefixed("quotient"))
    if bundle.algebra_pair is not None:
        pair = bundle.algebra_pair
        for f in (pair.base_endo, pair.total_endo):
            out.extend(validate_functor(f, settings=settings).prefixed(f.name))
        out.extend(check_lifting_criterion(bundle.proj, sd, pair, settings=settings).prefixed("algebra"))
    if bundle.coalgebra_pair is not None and bundle.quotient_data is not None:
        p_op, sd_op, pair_op = coalgebra_as_algebra(bundle.proj, bundle.quotient_data, bundle.coalgebra_pair)
        out.extend(check_lifting_criterion(p_op, sd_op, pair_op, settings=settings).prefixed("coalgebra"))
    return out.report()

"""Instance descriptors and their dispatch to the builders."""

from __future__ import annotations

from dataclasses import dataclass

from catcomp.config import Settings, default_settings
from catcomp.errors import StructuralError
from catcomp.instances.bundle import InstanceBundle
from catcomp.instances.powerset import powerset_instance
from catcomp.instances.pred import pred_instance
from catcomp.instances.rel import rel_instance

INSTANCE_KINDS = ("pred", "rel", "pow")


@dataclass(frozen=True)
class InstanceDescriptor:
    kind: str
    universe: tuple[int, ...]
    base: tuple[int, ...] = ()
    edges: tuple[tuple[int, int], ...] = ()


def load_instance(descriptor: InstanceDescriptor, *, settings: Settings | None = None) -> InstanceBundle:
    settings = settings or default_settings()
    if descriptor.kind == "pred":
        return pred_instance(descriptor.universe, settings=settings)
    if descriptor.kind == "rel":
        return rel_instance(descriptor.universe, settings=settings)
    if descriptor.kind == "pow":
        return powerset_instance(descriptor.universe, descriptor.base, descriptor.edges, settings=settings)
    raise StructuralError(f"unknown instance kind {descriptor.kind!r}; expected one of {', '.join(INSTANCE_KINDS)}")

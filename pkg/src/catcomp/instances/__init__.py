"""Concrete fixtures: Pred and Rel over truncated Set, powerset reachability, small named categories."""

from catcomp.instances.bundle import InstanceBundle, validate_instance
from catcomp.instances.fixpoint import kleene_gfp, kleene_lfp, powerset_step
from catcomp.instances.loader import INSTANCE_KINDS, InstanceDescriptor, load_instance
from catcomp.instances.partition import Partition, UnionFind, equivalence_closure
from catcomp.instances.powerset import powerset_instance
from catcomp.instances.pred import empty_predicate_section, pred_instance
from catcomp.instances.rel import diagonal, empty_relation_section, rel_instance, rel_quotient_object
from catcomp.instances.sets import (
    FiniteSets,
    PosetCategory,
    StructuredSets,
    all_subsets,
    finite_sets,
    poset_category,
    structured_sets,
    subset_label,
)
from catcomp.instances.small import (
    cyclic_group_two,
    empty_category,
    idempotent_monoid,
    terminal_category,
    walking_arrow,
)

__all__ = [
    "INSTANCE_KINDS",
    "FiniteSets",
    "InstanceBundle",
    "InstanceDescriptor",
    "Partition",
    "PosetCategory",
    "StructuredSets",
    "UnionFind",
    "all_subsets",
    "cyclic_group_two",
    "diagonal",
    "empty_category",
    "empty_predicate_section",
    "empty_relation_section",
    "equivalence_closure",
    "finite_sets",
    "idempotent_monoid",
    "kleene_gfp",
    "kleene_lfp",
    "load_instance",
    "poset_category",
    "powerset_instance",
    "powerset_step",
    "pred_instance",
    "rel_instance",
    "rel_quotient_object",
    "structured_sets",
    "subset_label",
    "terminal_category",
    "validate_instance",
    "walking_arrow",
]

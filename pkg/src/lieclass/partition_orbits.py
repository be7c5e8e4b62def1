"""Partition and flag-variety ordering interface (alias module)."""

from .partitions import (
    FlagOrderRelation,
    FlagType,
    Partition,
    canonical_flag,
    cotangent_equivalent,
    dominance_leq,
    flag_order,
    orbit_dim,
    richardson_partition,
    step_partition,
)

__all__ = [
    "FlagOrderRelation",
    "FlagType",
    "Partition",
    "canonical_flag",
    "cotangent_equivalent",
    "dominance_leq",
    "flag_order",
    "orbit_dim",
    "richardson_partition",
    "step_partition",
]

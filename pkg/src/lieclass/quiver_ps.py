"""Quiver representation interface (alias module)."""

from .quivers import (
    QuiverRep,
    QuiverSpec,
    SimpleDescriptor,
    check_relations,
    count_P,
    enumerate_simples,
    is_simple,
    monodromy_operators,
    monodromy_scalar,
    witness,
)

__all__ = [
    "QuiverRep",
    "QuiverSpec",
    "SimpleDescriptor",
    "check_relations",
    "count_P",
    "enumerate_simples",
    "is_simple",
    "monodromy_operators",
    "monodromy_scalar",
    "witness",
]

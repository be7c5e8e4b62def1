"""Tuple taxonomy and weight-order interface (alias module)."""

from .tuples import (
    MonodromyClass,
    TupleClass,
    as_tuple,
    classify_tuple,
    is_positive_sw,
    is_shale_weil,
    monodromy,
    mu0,
    removal_residues,
    rho,
    sigma,
)
from .weights import (
    StabilizerDescriptor,
    WeightOrderContext,
    correctly_ordered,
    is_dominant,
    weight_leq,
    weights_equivalent,
    weyl_stabilizer,
)

__all__ = [
    "MonodromyClass",
    "TupleClass",
    "as_tuple",
    "classify_tuple",
    "is_positive_sw",
    "is_shale_weil",
    "monodromy",
    "mu0",
    "removal_residues",
    "rho",
    "sigma",
    "StabilizerDescriptor",
    "WeightOrderContext",
    "correctly_ordered",
    "is_dominant",
    "weight_leq",
    "weights_equivalent",
    "weyl_stabilizer",
]

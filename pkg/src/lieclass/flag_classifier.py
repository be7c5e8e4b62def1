"""Combinatorial flag classifier interface (alias module)."""

from .classifier import (
    ClassificationDatum,
    ClassificationVerdict,
    bounded_subalgebra_sl,
    classify_flag_datum,
    classify_grassmannian,
    datum_algebra,
    product_flags_spherical,
)

__all__ = [
    "ClassificationDatum",
    "ClassificationVerdict",
    "bounded_subalgebra_sl",
    "classify_flag_datum",
    "classify_grassmannian",
    "datum_algebra",
    "product_flags_spherical",
]

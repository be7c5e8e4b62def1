"""lieclass: computational classification toolkit for spherical flag
varieties, bounded subalgebras and related combinatorics.

The package is organized around a combinatorial layer (partitions, tuples,
weights), exact matrix models of the classical Lie algebras, a Monte Carlo
sphericity oracle with certified ranks, the encoded classification tables,
and auxiliary representation theory (quivers with relations, symmetric
group modules).
"""

from .algebras import CatalogAlgebra, ModuleSpec, make_algebra, representation
from .classifier import (
    ClassificationDatum,
    ClassificationVerdict,
    classify_flag_datum,
    classify_grassmannian,
    product_flags_spherical,
)
from .errors import LieclassError
from .joseph import bounded_count_sl, is_joseph_sl, is_joseph_sp, odd_pair
from .oracle import (
    OracleVerdict,
    complexity_flag,
    is_spherical_flag,
    is_spherical_module,
)
from .partitions import FlagType, Partition, dominance_leq, flag_order
from .quivers import QuiverSpec, count_P, enumerate_simples
from .sphericaltable import is_spherical_module_by_table
from .tuples import classify_tuple, is_shale_weil, monodromy

__version__ = "0.1.0"

__all__ = [
    "CatalogAlgebra",
    "ModuleSpec",
    "make_algebra",
    "representation",
    "ClassificationDatum",
    "ClassificationVerdict",
    "classify_flag_datum",
    "classify_grassmannian",
    "product_flags_spherical",
    "LieclassError",
    "bounded_count_sl",
    "is_joseph_sl",
    "is_joseph_sp",
    "odd_pair",
    "OracleVerdict",
    "complexity_flag",
    "is_spherical_flag",
    "is_spherical_module",
    "FlagType",
    "Partition",
    "dominance_leq",
    "flag_order",
    "QuiverSpec",
    "count_P",
    "enumerate_simples",
    "is_spherical_module_by_table",
    "classify_tuple",
    "is_shale_weil",
    "monodromy",
    "__version__",
]

"""Matrix models of the classical algebras and the module sphericity table
(alias module)."""

from .algebras import (
    CatalogAlgebra,
    ModuleSpec,
    direct_sum,
    make_algebra,
    normalizer_dim,
    normalizer_in_gl,
    representation,
    scalar_on_summands,
    summand_scalars,
)
from .sphericaltable import (
    TABLE_ENTRIES,
    TableVerdict,
    decompose_blocks,
    is_spherical_module_by_table,
)

__all__ = [
    "CatalogAlgebra",
    "ModuleSpec",
    "direct_sum",
    "make_algebra",
    "normalizer_dim",
    "normalizer_in_gl",
    "representation",
    "scalar_on_summands",
    "summand_scalars",
    "TABLE_ENTRIES",
    "TableVerdict",
    "decompose_blocks",
    "is_spherical_module_by_table",
]

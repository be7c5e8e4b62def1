"""Monte Carlo sphericity oracle interface (alias module)."""

from .oracle import (
    COEFF_BOX,
    DEFAULT_SAMPLES,
    FlagPoint,
    OracleVerdict,
    borel_orbit_dim_at,
    complexity_flag,
    is_spherical_flag,
    is_spherical_module,
    levi_borel,
    levi_flag_complexity,
    product_flag_complexity,
    sample_flag_point,
)

__all__ = [
    "COEFF_BOX",
    "DEFAULT_SAMPLES",
    "FlagPoint",
    "OracleVerdict",
    "borel_orbit_dim_at",
    "complexity_flag",
    "is_spherical_flag",
    "is_spherical_module",
    "levi_borel",
    "levi_flag_complexity",
    "product_flag_complexity",
    "sample_flag_point",
]

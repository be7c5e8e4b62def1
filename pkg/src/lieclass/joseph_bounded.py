"""Joseph-ideal and bounded-module counting interface (alias module)."""

from .joseph import (
    JosephVerdict,
    OddPair,
    bounded_count_sl,
    is_joseph_sl,
    is_joseph_sp,
    odd_pair,
    sw_pair_index,
)

__all__ = [
    "JosephVerdict",
    "OddPair",
    "bounded_count_sl",
    "is_joseph_sl",
    "is_joseph_sp",
    "odd_pair",
    "sw_pair_index",
]

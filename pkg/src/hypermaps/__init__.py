"""Exact enumeration of rooted hypermaps by vertices, edges and faces."""

from hypermaps.exactmath import PolySym3, poly_eval, rising_factorial
from hypermaps.fseries import FGrid, f_r, f_r_m1_closed, f_series, f_term
from hypermaps.henum import (
    HGrid,
    NonIntegerResult,
    h_r_point,
    h_r_special_11m,
    h_r_special_1mn,
    totals,
)
from hypermaps.interpolate import CoeffTable, interpolate_table, table_to_poly

__version__ = "0.1.0"

__all__ = [
    "CoeffTable",
    "FGrid",
    "HGrid",
    "NonIntegerResult",
    "PolySym3",
    "f_r",
    "f_r_m1_closed",
    "f_series",
    "f_term",
    "h_r_point",
    "h_r_special_11m",
    "h_r_special_1mn",
    "interpolate_table",
    "poly_eval",
    "rising_factorial",
    "table_to_poly",
    "totals",
]

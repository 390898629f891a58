"""Eulerian and sub-Eulerian polynomials of Coxeter types A, B and D.

Exact brute-force tables, the recurrences that generate them, and truncated
checks of their generating-function identities.
"""

from .algebra import Polynomial, TruncatedSeries, bisection_real_root_count, sturm_real_root_count
from .kernels import BACKEND
from .recurrences import build_ladder, sub_rows
from .signed import DescentClass, SignedPermutation, descent_class, descent_set, elements
from .tables import CheckReport, SubTableRow, brute_force_eulerian, brute_force_sub_row

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CheckReport",
    "DescentClass",
    "Polynomial",
    "SignedPermutation",
    "SubTableRow",
    "TruncatedSeries",
    "bisection_real_root_count",
    "brute_force_eulerian",
    "brute_force_sub_row",
    "build_ladder",
    "descent_class",
    "descent_set",
    "elements",
    "sturm_real_root_count",
    "sub_rows",
]

"""Exact computations for the Jordanian deformation of sl(2).

Generator maps to classical sl(2), irreps, coproducts, twists, the
triangular R-matrix and the checks tying them together, all over Q[h].
"""
from .errors import JTKError
from .hpoly import HPoly
from .maps import BUILTIN_NAMES, builtin_map, expression_map, resolve_map, solve_forward, solve_inverse
from .matrix import PolyMatrix
from .parser import parse, parse_expression
from .reps import classical_irrep, jordanian_irrep
from .series import WSeries
from .similarity import solve_similarity
from .suites import run_suite

__version__ = "0.1.0"

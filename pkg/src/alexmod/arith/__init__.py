"""Exact arithmetic in cyclotomic fields and polynomial rings over them."""

from .field import QQ, CyclotomicField, FieldElement, euler_phi, format_element, lcm
from .poly import Poly, cyclotomic_poly, format_poly, interpolate, poly_gcd, poly_xgcd, resultant
from .grammar import ParseError, parse_entry, parse_poly
from .factor import (
    DEFAULT_CYCLOTOMIC_BOUND,
    FactorizationReport,
    cyclotomic_factors_over,
    factorize,
    is_irreducible,
    squarefree_decomposition,
)

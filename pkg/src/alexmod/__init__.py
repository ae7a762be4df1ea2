"""Alexander modules of hypersurface complements, computed exactly."""

from .arith import *  # noqa: F401,F403
from .arith import QQ, CyclotomicField, Poly, factorize, parse_entry, parse_poly

__version__ = "0.1.0"

"""Certified lower bounds for approximation by algebraic numbers, plus
finite-scale Diophantine approximation experiments on concrete reals.

All numeric claims are backed by exact rational interval arithmetic; no
result depends on floating-point rounding.
"""

from .errors import (DomainError, InputError, PrecisionError, SearchExhausted,
                     WirsingError)
from .intervals import RealInterval, display_digits, interval_log, interval_sqrt
from .polynomials import AlgebraicReal, IntPolynomial, isolate_real_roots
from .targets import (AlgebraicTarget, DecimalOracleTarget, LiouvilleTarget,
                      TargetNumber, golden_ratio, parse_target,
                      quadratic_target, sqrt_target)

__version__ = "1.0.0"

__all__ = [
    "AlgebraicReal",
    "AlgebraicTarget",
    "DecimalOracleTarget",
    "DomainError",
    "InputError",
    "IntPolynomial",
    "LiouvilleTarget",
    "PrecisionError",
    "RealInterval",
    "SearchExhausted",
    "TargetNumber",
    "WirsingError",
    "display_digits",
    "golden_ratio",
    "interval_log",
    "interval_sqrt",
    "isolate_real_roots",
    "parse_target",
    "quadratic_target",
    "sqrt_target",
]

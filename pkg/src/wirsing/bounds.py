"""Certified evaluation of the closed-form lower bounds and related functions.

Central objects: the two-parameter bound

    Phi(m, n) = (4mn + 6n - 4m^2 - 8m)
                / (2m + 2 - n + sqrt(n^2 + 12mn + 20n - 12m^2 - 24m + 4))

for n >= 4 and 1 <= m < (n-1)/2, its optimizer over m, the asymptotic shape
functions F and G with their extremal constants, the R/S pair, and the
right-hand sides of the exponent inequalities this bound rests on.

Rationalizing the denominator gives the equivalent closed form

    Phi(m, n) = (b + sqrt(b^2 + 8a)) / 4,   a = 2mn - 2m^2 + 3n - 4m,
                                            b = n - 2m - 2,

which is what the optimizer uses for exact candidate comparisons; the
discriminant b^2 + 8a equals the radicand of the displayed quotient.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import Dict, List, Optional, Tuple

from .errors import DomainError
from .intervals import RealInterval, display_digits, interval_sqrt
from .polynomials import AlgebraicReal, IntPolynomial, isolate_real_roots

DEFAULT_WIDTH = Fraction(1, 10**30)

FORMULA_IDS = (
    "PHI", "EQ24_ROOT", "F", "G", "R", "S", "C_GAMMA",
    "H11", "H21", "VERYNEW", "WINDAG",
    "TOLL", "DAVSCHM", "TOLLER_1", "TOLLER_2", "TOLLER_3", "STRONG_TOLL",
    "EVEN_N_LOWER", "EVEN_N_UPPER",
)


@dataclass(frozen=True)
class BoundReport:
    """One evaluated bound: certified interval plus its truncated display."""

    formula_id: str
    parameters: Dict[str, Fraction]
    value: RealInterval
    display: str

    def to_json_dict(self) -> dict:
        return {
            "schema_version": 1,
            "formula_id": self.formula_id,
            "params": {k: str(v) for k, v in self.parameters.items()},
            "lo": str(self.value.lo),
            "hi": str(self.value.hi),
            "display": self.display,
        }


@dataclass(frozen=True)
class OptimizationResult:
    n: int
    best_m: int
    bound: RealInterval
    all_candidates: List[Tuple[int, RealInterval]] = field(default_factory=list)


def _check_mn(m: int, n: int) -> None:
    if n < 4:
        raise DomainError(f"n must be >= 4, got {n}")
    if not (1 <= m) or not (2 * m < n - 1):
        raise DomainError(f"m must satisfy 1 <= m < (n-1)/2, got m={m}, n={n}")


def _admissible_ms(n: int):
    if n < 4:
        raise DomainError(f"n must be >= 4, got {n}")
    return range(1, (n - 1 + 1) // 2) if (n - 1) % 2 else range(1, (n - 1) // 2)


def _phi_ab(m: int, n: int) -> Tuple[int, int]:
    return 2 * m * n - 2 * m * m + 3 * n - 4 * m, n - 2 * m - 2


def _certified_display(value_fn, digits: int, width: Fraction) -> Tuple[RealInterval, str]:
    """Evaluate with shrinking width until `digits` truncated decimals are certified."""
    while True:
        iv = value_fn(width)
        disp = display_digits(iv, digits)
        if disp is not None:
            return iv, disp
        width /= 10**6


def phi_bound(m: int, n: int, width: Fraction = DEFAULT_WIDTH, digits: int = 2) -> BoundReport:
    """Certified interval for Phi(m, n), displayed truncated to `digits` decimals."""
    _check_mn(m, n)
    a, b = _phi_ab(m, n)
    disc = b * b + 8 * a

    def value(w):
        return (interval_sqrt(RealInterval.point(disc), w) + b) * Fraction(1, 4)

    iv, disp = _certified_display(value, digits, width)
    return BoundReport("PHI", {"m": Fraction(m), "n": Fraction(n)}, iv, disp)


def phi_quotient_interval(m: int, n: int, width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """Phi(m, n) evaluated directly as the displayed quotient (cross-check path)."""
    _check_mn(m, n)
    num = 4 * m * n + 6 * n - 4 * m * m - 8 * m
    disc = n * n + 12 * m * n + 20 * n - 12 * m * m - 24 * m + 4
    root = interval_sqrt(RealInterval.point(disc), width * width)
    return RealInterval.point(num) / (root + (2 * m + 2 - n))


def equilibrium_lambda(m: int, n: int) -> AlgebraicReal:
    """Unique positive root of (2mn-2m^2+3n-4m) t^2 + (n-2m-2) t - 2."""
    _check_mn(m, n)
    a, b = _phi_ab(m, n)
    roots = isolate_real_roots(IntPolynomial([-2, b, a]), RealInterval(Fraction(0), Fraction(1)))
    if len(roots) != 1:
        raise DomainError(f"expected one positive root for (m, n) = ({m}, {n})")
    return roots[0]


def _cmp_quadratic_sum(b1: int, d1: int, b2: int, d2: int) -> int:
    """Exact sign of (b1 + sqrt(d1)) - (b2 + sqrt(d2)) for non-negative integers d1, d2."""
    # sqrt(d1) - sqrt(d2) vs c := b2 - b1
    c = b2 - b1
    if d1 == d2:
        return (c < 0) - (c > 0)
    s1, s2 = isqrt(d1), isqrt(d2)
    if s1 * s1 == d1 and s2 * s2 == d2:
        t = s1 - s2 - c
        return (t > 0) - (t < 0)
    # compare sqrt(d1) vs c + sqrt(d2)
    if c <= 0 and d1 >= d2:
        if c == 0 and d1 == d2:
            return 0
        return 1
    if c >= 0 and d1 <= d2:
        if c == 0 and d1 == d2:
            return 0
        return -1
    # Both sides positive after the screen above; square once.
    # sqrt(d1) vs c + sqrt(d2)  ->  d1 - c^2 - d2 vs 2 c sqrt(d2)
    lhs = d1 - c * c - d2
    rhs_sq = 4 * c * c * d2
    if c > 0:
        if lhs <= 0:
            return -1
        t = lhs * lhs - rhs_sq
        return (t > 0) - (t < 0)
    # c < 0: rhs negative
    if lhs >= 0:
        return 1
    t = lhs * lhs - rhs_sq
    return (t < 0) - (t > 0)


def best_m(n: int, width: Fraction = DEFAULT_WIDTH) -> OptimizationResult:
    """Exhaustive certified argmax of Phi(m, n) over admissible m (ties to smallest m)."""
    ms = list(_admissible_ms(n))
    if not ms:
        raise DomainError(f"no admissible m for n = {n}")
    keys = []
    for m in ms:
        a, b = _phi_ab(m, n)
        keys.append((m, b, b * b + 8 * a))
    best = keys[0]
    for cand in keys[1:]:
        if _cmp_quadratic_sum(cand[1], cand[2], best[1], best[2]) > 0:
            best = cand
    candidates = [(m, (interval_sqrt(RealInterval.point(d), width) + b) * Fraction(1, 4))
                  for m, b, d in keys]
    bound = next(iv for m, iv in candidates if m == best[0])
    return OptimizationResult(n=n, best_m=best[0], bound=bound, all_candidates=candidates)


# Static reference data: the published comparison column of Tsishchanka's bound.
TSI_REFERENCE = {
    3: "2.73", 4: "3.45", 5: "4.14", 10: "7.06", 20: "12.39", 24: "14.46",
    25: "14.98", 30: "17.55", 50: "27.70", 100: "52.84", 1000: "502.98",
}


def bs_table(ns: List[int], width: Fraction = DEFAULT_WIDTH) -> List[Tuple[int, Optional[str], str]]:
    """Rows (n, tsi_reference, bs_value) with bs truncated to 2 decimals."""
    rows = []
    for n in ns:
        _, disp = _certified_display(lambda w, n=n: best_m(n, w).bound, 2, width)
        rows.append((n, TSI_REFERENCE.get(n), disp))
    return rows


def _require_open_unit_half(t: RealInterval) -> None:
    if not (t.lo > 0 and t.hi < Fraction(1, 2)):
        raise DomainError("argument must lie strictly inside (0, 1/2)")


def eval_F(t: RealInterval, width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """F(t) = (4t - 4t^2) / (2t - 1 + sqrt(1 + 12t - 12t^2))."""
    _require_open_unit_half(t)
    num = t * 4 - (t * t) * 4
    rad = (t * 12 - (t * t) * 12) + 1
    den = t * 2 - 1 + interval_sqrt(rad, width)
    return num / den


def alpha0() -> AlgebraicReal:
    """(3 - sqrt(3)) / 6, the maximizer of F on (0, 1/2); root of 6t^2 - 6t + 1."""
    roots = isolate_real_roots(IntPolynomial([1, -6, 6]),
                               RealInterval(Fraction(0), Fraction(1, 2)))
    assert len(roots) == 1
    return roots[0]


def inv_sqrt3(width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """1/sqrt(3) = F(alpha0), the factor in the main lower bound."""
    return interval_sqrt(RealInterval.point(Fraction(1, 3)), width)


def argmax_F(width: Fraction = DEFAULT_WIDTH) -> Tuple[AlgebraicReal, RealInterval]:
    a0 = alpha0()
    return a0, eval_F(a0.interval(width), width)


def eval_G(t: RealInterval, width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """G(t) = 4(t - t^2) / (2t^2 + 2t - 1 + sqrt(4t^4 + 24t^3 - 32t^2 + 12t + 1))."""
    _require_open_unit_half(t)
    t2 = t * t
    num = (t - t2) * 4
    rad = (t2 * t2) * 4 + (t2 * t) * 24 - t2 * 32 + t * 12 + 1
    den = t2 * 2 + t * 2 - 1 + interval_sqrt(rad, width)
    return num / den


GAMMA0_POLYNOMIAL = IntPolynomial([1, -6, 10, -12, 4])  # 4t^4 - 12t^3 + 10t^2 - 6t + 1


def gamma0() -> AlgebraicReal:
    """The root of 4t^4 - 12t^3 + 10t^2 - 6t + 1 in (0, 1/2)."""
    roots = isolate_real_roots(GAMMA0_POLYNOMIAL, RealInterval(Fraction(0), Fraction(1, 2)))
    if len(roots) != 1:
        raise DomainError("expected exactly one root of the quartic in (0, 1/2)")
    return roots[0]


def delta(width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """The limsup bound G(gamma0) = 0.6408..., certified to the requested width."""
    arg_width = width
    while True:
        g0 = gamma0().interval(arg_width)
        iv = eval_G(g0, arg_width)
        if iv.width() <= width:
            return iv
        arg_width /= 10**3


def eval_c(gamma: RealInterval, width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """c(gamma) = (2g^2 + 2g - 1 + sqrt(4g^4 + 24g^3 - 32g^2 + 12g + 1)) / (4(g - g^2))."""
    _require_open_unit_half(gamma)
    g2 = gamma * gamma
    rad = (g2 * g2) * 4 + (g2 * gamma) * 24 - g2 * 32 + gamma * 12 + 1
    num = g2 * 2 + gamma * 2 - 1 + interval_sqrt(rad, width)
    return num / ((gamma - g2) * 4)


def eval_R(lam: RealInterval, width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """R(t) = (t - sqrt(2t - t^2)) / (2t) on [1, 2]."""
    if not (lam.lo >= 1 and lam.hi <= 2):
        raise DomainError("R is evaluated on [1, 2] only")
    rad = lam * 2 - lam * lam
    return (lam - interval_sqrt(rad, width)) / (lam * 2)


def eval_S(lam: RealInterval, width: Fraction = DEFAULT_WIDTH) -> RealInterval:
    """S(t) = (1 - 2R) / (1 - (t+1)R + tR^2) with R = R(t); S(2) is the limit value 2.

    The defining quotient degenerates to 0/0 at t = 2, where S extends
    continuously to 2 (S maps [1, 2] onto itself).
    """
    if not (lam.lo >= 1 and lam.hi <= 2):
        raise DomainError("S is evaluated on [1, 2] only")
    if lam.lo == lam.hi == 2:
        return RealInterval.point(2)
    if lam.hi == 2:
        raise DomainError("interval arguments touching the removable point t = 2 are not supported")
    r = eval_R(lam, width)
    num = 1 - r * 2
    den = 1 - (lam + 1) * r + lam * (r * r)
    return num / den


def _lam_hat_in_range(n: int, m: int, lam_hat: RealInterval) -> None:
    if lam_hat.lo * (n - m) < 1:
        raise DomainError(f"requires lam_hat >= 1/(n-m) = 1/{n - m}")


def rhs_h11(n: int, m: int, lam_hat: RealInterval) -> RealInterval:
    """((n-m) lam_hat + n - 2m - 1) / (1 - m lam_hat): lower bound for the uniform
    linear-form exponent of degree n - m."""
    _check_mn(m, n)
    _lam_hat_in_range(n, m, lam_hat)
    den = 1 - lam_hat * m
    if den.lo <= 0:
        raise DomainError("requires lam_hat < 1/m (denominator 1 - m*lam_hat must be positive)")
    return (lam_hat * (n - m) + (n - 2 * m - 1)) / den


def rhs_h21(n: int, m: int, lam_hat: RealInterval, lam: RealInterval) -> RealInterval:
    """Max of the two displayed quotients bounding the ordinary linear-form
    exponent of degree n - m from below."""
    _check_mn(m, n)
    _lam_hat_in_range(n, m, lam_hat)
    den1 = 1 - lam_hat * (m + 1)
    if den1.lo <= 0:
        raise DomainError("requires lam_hat < 1/(m+1) (denominator 1 - (m+1)*lam_hat must be positive)")
    den2 = 1 - lam * m
    if den2.lo <= 0:
        raise DomainError("requires lam < 1/m (denominator 1 - m*lam must be positive)")
    q1 = (lam_hat * (n - m) + (n - 2 * m - 2)) / den1
    q2 = (lam * (n - m) + (n - 2 * m - 1)) / den2
    return RealInterval(max(q1.lo, q2.lo), max(q1.hi, q2.hi))


def rhs_verynew(n: int, m: int, lam_hat: RealInterval) -> RealInterval:
    """(n-m-1)/(m+1) * ((n-m) lam_hat + n - 2m - 1) / ((n-m) lam_hat - 1):
    upper bound for the ordinary linear-form exponent of degree n - m."""
    _check_mn(m, n)
    den = lam_hat * (n - m) - 1
    if den.lo <= 0:
        raise DomainError("requires lam_hat > 1/(n-m) (denominator (n-m)*lam_hat - 1 must be positive)")
    return (lam_hat * (n - m) + (n - 2 * m - 1)) / den * Fraction(n - m - 1, m + 1)


def rhs_windag(lam_hat: RealInterval) -> RealInterval:
    """1 / lam_hat: upper bound for the ordinary linear-form exponent of degree m + 1."""
    if lam_hat.lo <= 0:
        raise DomainError("requires lam_hat > 0")
    return 1 / lam_hat


def consistency_max_lambda(n: int, m: int) -> AlgebraicReal:
    """The lam_hat at which the first lower bound of rhs_h21 meets rhs_verynew.

    Comparing the two pins down the largest uniform simultaneous exponent
    consistent with both; for (n, m) = (4, 1) this is (sqrt(19) + 2) / 15.
    """
    _check_mn(m, n)
    # lower = A/B, upper = C/D; equate A*D = C*B as integer polynomials in t.
    A = IntPolynomial([n - 2 * m - 2, n - m])
    B = IntPolynomial([1, -(m + 1)])
    C = IntPolynomial([(n - m - 1) * (n - 2 * m - 1), (n - m - 1) * (n - m)])
    D = IntPolynomial([-(m + 1), (m + 1) * (n - m)])
    ad, cb = (A * D).coefficients, (C * B).coefficients
    size = max(len(ad), len(cb))
    ad += (0,) * (size - len(ad))
    cb += (0,) * (size - len(cb))
    eq = IntPolynomial([x - y for x, y in zip(ad, cb)])
    window = RealInterval(Fraction(1, n - m), Fraction(1, m))
    roots = isolate_real_roots(eq, window)
    if not roots:
        raise DomainError(f"no crossing in (1/{n - m}, 1/{m}) for (n, m) = ({n}, {m})")
    return roots[0]


TRANSFER_KINDS = ("TOLL", "DAVSCHM", "TOLLER_1", "TOLLER_2", "TOLLER_3", "STRONG_TOLL")


def transfer_rhs(kind: str, n: int, *, w: RealInterval = None,
                 w_hat: RealInterval = None, lam_hat: RealInterval = None) -> RealInterval:
    """Right-hand sides of the transfer inequalities bounding the degree-n
    approximation-by-algebraics exponent from below:

      TOLL        (3/2) w_hat - n + 1/2
      DAVSCHM     1 / lam_hat
      TOLLER_1    (w + 1) / 2
      TOLLER_2    w - n + 1
      TOLLER_3    w_hat / (w_hat - n + 1)
      STRONG_TOLL w/2 + w_hat - n + 1/2
    """
    if kind not in TRANSFER_KINDS:
        raise DomainError(f"unknown transfer kind {kind!r}")
    if kind in ("TOLL", "TOLLER_3", "STRONG_TOLL"):
        if w_hat is None or w_hat.hi < n:
            raise DomainError("requires a uniform linear-form exponent w_hat >= n")
    if kind in ("TOLLER_1", "TOLLER_2", "STRONG_TOLL"):
        if w is None or w.hi < n:
            raise DomainError("requires an ordinary linear-form exponent w >= n")
    if kind == "DAVSCHM":
        if lam_hat is None or lam_hat.hi * n < 1 or lam_hat.lo * n > 2:
            raise DomainError("requires a uniform simultaneous exponent lam_hat in [1/n, 2/n]")
    if kind == "TOLL":
        return w_hat * Fraction(3, 2) - n + Fraction(1, 2)
    if kind == "DAVSCHM":
        return 1 / lam_hat
    if kind == "TOLLER_1":
        return (w + 1) * Fraction(1, 2)
    if kind == "TOLLER_2":
        return w - n + 1
    if kind == "TOLLER_3":
        den = w_hat - n + 1
        return w_hat / den
    # STRONG_TOLL
    return w * Fraction(1, 2) + w_hat - n + Fraction(1, 2)


def floor_n_alpha0(n: int) -> int:
    """floor(n * (3 - sqrt(3)) / 6) computed exactly."""
    # n*alpha0 = (3n - sqrt(3 n^2)) / 6
    scale = 10**10
    while True:
        s = isqrt(3 * n * n * scale * scale)  # floor(sqrt(3)*n*scale)
        lo = (3 * n * scale - s - 1) // (6 * scale)
        hi = (3 * n * scale - s) // (6 * scale)
        if lo == hi:
            return hi
        scale *= 10**10


def verify_theorem1B_positivity(n: int, width: Fraction = Fraction(1, 10**20)):
    """Certified evaluation of -((3-sqrt(3))/sqrt(6) n - sqrt(6) m)^2 + (9-2sqrt(3))n - 12m
    at m = max(1, floor(n*alpha0)) clamped into the admissible range.

    Expanding the square, the expression equals P + R*sqrt(3) with
    P = -2n^2 + 6nm - 6m^2 + 9n - 12m and R = n^2 - 2nm - 2n.
    Positivity implies Phi(m, n)/n > 1/sqrt(3).
    """
    if n < 4:
        raise DomainError(f"n must be >= 4, got {n}")
    ms = _admissible_ms(n)
    m = min(max(1, floor_n_alpha0(n)), ms[-1])
    P = -2 * n * n + 6 * n * m - 6 * m * m + 9 * n - 12 * m
    R = n * n - 2 * n * m - 2 * n
    sqrt3 = interval_sqrt(RealInterval.point(3), width)
    expr = sqrt3 * R + P
    positive = expr.certainly_positive()
    if not positive and not (expr.hi < 0):
        # Undecided at this width: settle the sign of P + R*sqrt(3) exactly.
        if R == 0:
            positive = P > 0
        elif R > 0:
            positive = P >= 0 or 3 * R * R > P * P
        else:
            positive = P > 0 and P * P > 3 * R * R
    return m, expr, positive


def phi_exceeds_beta(n: int, m: int) -> bool:
    """Exact check that Phi(m, n) / n > 1 / sqrt(3).

    Using Phi = (b + sqrt(d)) / 4 the claim reads sqrt(3)(b + sqrt(d)) > 4n,
    i.e. sqrt(3d) > 4n - sqrt(3) b; decided with integer square roots.
    """
    _check_mn(m, n)
    a, b = _phi_ab(m, n)
    d = b * b + 8 * a
    # b = n - 2m - 2 >= 0 in the admissible range, so both radicals add.
    scale = 10**12
    while True:
        s3d_lo = isqrt(3 * d * scale * scale)
        s3_lo = isqrt(3 * scale * scale)
        lhs_lo = s3d_lo + s3_lo * b
        lhs_hi = s3d_lo + 1 + (s3_lo + 1) * b
        rhs = 4 * n * scale
        if lhs_lo > rhs:
            return True
        if lhs_hi < rhs:
            return False
        scale *= 10**12


def constants_report(digits: int = 4, width: Fraction = DEFAULT_WIDTH) -> List[Tuple[str, RealInterval, str]]:
    """The named constants: gamma0, delta, alpha0, 1/sqrt(3), (sqrt(19)+2)/15."""
    w = min(width, Fraction(1, 10 ** (digits + 6)))
    out = []

    def add(name, fn):
        iv, disp = _certified_display(fn, digits, w)
        out.append((name, iv, disp))

    add("gamma0", lambda ww: gamma0().interval(ww))
    add("delta", lambda ww: delta(ww))
    add("alpha0", lambda ww: alpha0().interval(ww))
    add("inv_sqrt3", lambda ww: inv_sqrt3(ww))
    add("max_lambda_hat_4", lambda ww: consistency_max_lambda(4, 1).interval(ww))
    return out

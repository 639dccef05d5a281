"""Best-approximation records, Hankel ranks, and shifted-vector tests.

The central scan finds, for a target number xi and dimension n, the integer
vectors (x, y_1, ..., y_n) whose error L(x) = max_j |x xi^j - y_j| strictly
improves on every smaller x.  All record decisions are certified: candidates
are compared through rational interval enclosures that are refined until the
order is provable, with an exact algebraic fallback for quadratic targets.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, InputError, PrecisionError
from .intervals import RealInterval, display_digits, truncate_decimal
from .polynomials import AlgebraicReal, IntPolynomial, _frac_divmod, isolate_real_roots
from .targets import AlgebraicTarget, LiouvilleTarget, TargetNumber, _ipow

_HALF = Fraction(1, 2)
_START_WIDTH = Fraction(1, 2 ** 96)
_MIN_WIDTH = Fraction(1, 2 ** 16384)
_EXACT_SCAN_LIMIT = 20_000
_CHUNK = 2_000_000


class _Undecided(Exception):
    """Internal: an interval comparison needs more precision."""


@dataclass(frozen=True)
class MinimalPoint:
    """Best-approximation vector (x, y_1, ..., y_n) with certified error."""

    coords: Tuple[int, ...]
    n: int
    error: RealInterval
    tie: bool = False

    @property
    def x(self) -> int:
        return self.coords[0]


@dataclass(frozen=True)
class LinearFormRecord:
    """Record minimizer of |a_0 + a_1 xi + ... + a_n xi^n| at its height."""

    coeffs: Tuple[int, ...]
    height: int
    value: RealInterval
    exact_zero: bool = False


@dataclass(frozen=True)
class AlgebraicApproximant:
    """Algebraic number close to the target, with naive height and distance."""

    alpha: AlgebraicReal
    height: int
    distance: RealInterval
    exact_hit: bool = False


# ---------------------------------------------------------------------------
# nearest-integer splitting on rational enclosures


def _round_half_even(t: Fraction) -> Tuple[int, bool]:
    fl = t.numerator // t.denominator
    fr = t - fl
    if fr < _HALF:
        return fl, False
    if fr > _HALF:
        return fl + 1, False
    return (fl if fl % 2 == 0 else fl + 1), True


def _nearest_interval(lo: Fraction, hi: Fraction):
    """Nearest integer and distance bounds for a value known to lie in [lo, hi].

    Returns (y, d_lo, d_hi, ambiguous, tie).  The distance bounds enclose the
    distance to the nearest integer whichever the true value is; ``ambiguous``
    means the choice of y itself is not certified.
    """
    if lo == hi:
        y, tie = _round_half_even(lo)
        d = abs(lo - y)
        return y, d, d, False, tie
    if hi - lo >= _HALF:
        raise _Undecided("enclosure too wide for nearest-integer splitting")
    fl = lo.numerator // lo.denominator
    f_lo = lo - fl
    f_hi = hi - fl
    if f_hi <= _HALF:
        return fl, f_lo, f_hi, False, False
    if f_lo >= _HALF:
        if f_hi <= 1:
            return fl + 1, 1 - f_hi, 1 - f_lo, False, False
        return fl + 1, Fraction(0), max(1 - f_lo, f_hi - 1), False, False
    # The enclosure straddles the half-integer: y is a best guess only.
    d_lo = min(f_lo, 1 - f_hi) if f_hi <= 1 else Fraction(0)
    y = fl if _HALF - f_lo >= f_hi - _HALF else fl + 1
    return y, d_lo, _HALF, True, False


# ---------------------------------------------------------------------------
# power representations and point evaluation


def _power_reprs(xi: TargetNumber, n: int, width: Fraction):
    """Per-exponent representation of xi^j: exact Fraction or an enclosure."""
    reprs: List[Tuple] = [("exact", Fraction(1))]
    for j in range(1, n + 1):
        e = xi.exact_power(j)
        if e is not None:
            reprs.append(("exact", e))
        else:
            iv = xi.power_enclosure(j, width)
            reprs.append(("bracket", iv.lo, iv.hi))
    return reprs


def _point_at(x: int, reprs) -> Tuple[Tuple[int, ...], Fraction, Fraction, bool, bool]:
    """Evaluate the nearest-integer vector at x; distances as certified bounds."""
    ys = []
    d_lo = Fraction(0)
    d_hi = Fraction(0)
    ambiguous = False
    tie = False
    for rep in reprs[1:]:
        if rep[0] == "exact":
            t = x * rep[1]
            y, lo, hi, amb, t_flag = _nearest_interval(t, t)
            tie = tie or t_flag
        else:
            y, lo, hi, amb, _ = _nearest_interval(x * rep[1], x * rep[2])
        ambiguous = ambiguous or amb
        ys.append(y)
        if lo > d_lo:
            d_lo = lo
        if hi > d_hi:
            d_hi = hi
    return (x, *ys), d_lo, d_hi, ambiguous, tie


# ---------------------------------------------------------------------------
# exact comparisons for quadratic targets


def _quad_sign(xi: AlgebraicTarget, u: Fraction, v: Fraction) -> int:
    """Exact sign of u + v*xi for a degree-2 algebraic target."""
    if v == 0:
        return (u > 0) - (u < 0)
    # u + v*xi = 0 would force xi rational; refine until the sign shows.
    width = Fraction(1, 10 ** 30)
    while True:
        iv = xi.enclosure(width)
        val = u + v * iv
        if val.certainly_positive():
            return 1
        if val.hi < 0:
            return -1
        width /= 10 ** 30


def _quad_abs_cmp(xi: AlgebraicTarget, p: Tuple[Fraction, Fraction],
                  q: Tuple[Fraction, Fraction]) -> int:
    """Exact sign of |p| - |q| where p, q are u + v*xi expressions."""
    poly = xi.minimal_polynomial
    c0, c1, c2 = (Fraction(c) for c in poly.coefficients)
    # (u + v xi)^2 = u^2 + 2uv xi + v^2 xi^2 with xi^2 = -(c1 xi + c0)/c2
    def square(expr):
        u, v = expr
        return (u * u - v * v * c0 / c2, 2 * u * v - v * v * c1 / c2)

    su, sv = square(p)
    tu, tv = square(q)
    return _quad_sign(xi, su - tu, sv - tv)


def _quad_exact_dists(xi: AlgebraicTarget, x: int, n: int):
    """Exact per-coordinate distances |x xi^j - y_j| as u + v*xi expressions."""
    dists = []
    for j in range(1, n + 1):
        u, v = xi.quadratic_parts(j)
        u, v = x * u, x * v
        if v == 0:
            y, _ = _round_half_even(u)
        else:
            width = Fraction(1, 10 ** 30)
            while True:
                iv = u + v * xi.enclosure(width)
                if iv.lo.__floor__() == iv.hi.__floor__():
                    fl = iv.lo.__floor__()
                    break
                width /= 10 ** 30
            # tie impossible: u + v*xi is irrational here
            y = fl if _quad_sign(xi, u - fl - _HALF, v) < 0 else fl + 1
        d = (u - y, v)
        if _quad_sign(xi, *d) < 0:
            d = (-d[0], -d[1])
        dists.append(d)
    return dists


def _quad_L_cmp(xi: AlgebraicTarget, xa: int, xb: int, n: int) -> int:
    """Exact sign of L(xa) - L(xb) for a quadratic target."""
    def l_expr(x):
        best = None
        for d in _quad_exact_dists(xi, x, n):
            if best is None or _quad_abs_cmp(xi, d, best) > 0:
                best = d
        return best

    return _quad_abs_cmp(xi, l_expr(xa), l_expr(xb))


# ---------------------------------------------------------------------------
# record keeping with certified comparisons


class _RecordKeeper:
    """Accumulates strictly-improving records with certified comparisons."""

    def __init__(self, xi: TargetNumber, n: int):
        self.xi = xi
        self.n = n
        self.points: List[MinimalPoint] = []
        self._best: Optional[Tuple[Fraction, Fraction]] = None
        self._best_x: Optional[int] = None

    def offer(self, x: int, reprs) -> None:
        coords, lo, hi, amb, tie = _point_at(x, reprs)
        if self._best is None:
            self._accept(x, coords, lo, hi, amb, tie, reprs)
            return
        if hi < self._best[0]:
            self._accept(x, coords, lo, hi, amb, tie, reprs)
        elif lo >= self._best[1]:
            return
        else:
            self._offer_refined(x)

    def _accept(self, x, coords, lo, hi, amb, tie, reprs):
        if amb:
            coords, lo, hi, tie = self._resolve_point(x)
        self.points.append(MinimalPoint(coords, self.n, RealInterval(lo, hi), tie))
        self._best = (lo, hi)
        self._best_x = x

    def _resolve_point(self, x: int):
        width = _START_WIDTH ** 2
        while width >= _MIN_WIDTH:
            reprs = _power_reprs(self.xi, self.n, width)
            coords, lo, hi, amb, tie = _point_at(x, reprs)
            if not amb:
                return coords, lo, hi, tie
            width *= width
        raise PrecisionError(
            f"cannot certify the nearest-integer vector at x={x}; "
            "raise the target oracle precision")

    def _offer_refined(self, x: int) -> None:
        """Undecided against the current best record: refine both locally."""
        width = _START_WIDTH ** 2
        while width >= _MIN_WIDTH:
            reprs = _power_reprs(self.xi, self.n, width)
            coords, lo, hi, amb, tie = _point_at(x, reprs)
            _, b_lo, b_hi, b_amb, _ = _point_at(self._best_x, reprs)
            if not b_amb:
                if hi < b_lo:
                    self._accept(x, coords, lo, hi, amb, tie, reprs)
                    return
                if lo >= b_hi:
                    return
            width *= width
        if isinstance(self.xi, AlgebraicTarget) and self.xi.quadratic_parts(1) is not None:
            if _quad_L_cmp(self.xi, x, self._best_x, self.n) < 0:
                coords, lo, hi, tie = self._resolve_point(x)
                self.points.append(MinimalPoint(coords, self.n, RealInterval(lo, hi), tie))
                self._best = (lo, hi)
                self._best_x = x
            return
        raise PrecisionError(
            f"record comparison between x={x} and x={self._best_x} "
            "stayed undecided at maximum working precision")


def best_approx_sequence(xi: TargetNumber, n: int, x_max: int) -> List[MinimalPoint]:
    """Strictly-improving best-approximation records for x = 1 .. x_max."""
    if n < 1 or x_max < 1:
        raise DomainError("best_approx_sequence needs n >= 1 and x_max >= 1")
    if x_max <= _EXACT_SCAN_LIMIT:
        return _scan_exact(xi, n, x_max)
    return _scan_prefiltered(xi, n, x_max)


def _scan_exact(xi: TargetNumber, n: int, x_max: int) -> List[MinimalPoint]:
    width = _START_WIDTH
    while width >= _MIN_WIDTH:
        keeper = _RecordKeeper(xi, n)
        reprs = _power_reprs(xi, n, width / (4 * x_max))
        try:
            for x in range(1, x_max + 1):
                keeper.offer(x, reprs)
            return keeper.points
        except _Undecided:
            width *= width
    raise PrecisionError("working precision exhausted in the record scan")


def _scan_prefiltered(xi: TargetNumber, n: int, x_max: int) -> List[MinimalPoint]:
    """Float prefilter with certified margins; candidates confirmed exactly."""
    width = Fraction(1, 2 ** 120)
    reprs = _power_reprs(xi, n, width)
    f = []
    err = 0.0
    for rep in reprs[1:]:
        lo = rep[1]
        hi = rep[1] if rep[0] == "exact" else rep[2]
        f.append(float(lo))
        # per-unit-x bound: enclosure width plus float rounding headroom
        err = max(err, float(hi - lo) + abs(float(lo)) * 2.0 ** -50 + 2.0 ** -60)
    f = np.array(f)

    keeper = _RecordKeeper(xi, n)
    exact_reprs = _power_reprs(xi, n, width / (4 * x_max))
    start = 1
    while start <= x_max:
        stop = min(start + _CHUNK, x_max + 1)
        xs = np.arange(start, stop, dtype=np.float64)
        vals = np.multiply.outer(f, xs)
        dist = np.abs(vals - np.rint(vals)).max(axis=0)
        margin = 2.0 * (stop * err) + 1e-15
        if keeper._best is None:
            prev = np.concatenate(([np.inf], np.minimum.accumulate(dist)[:-1]))
        else:
            cap = math.nextafter(float(keeper._best[1]), math.inf)
            prev = np.concatenate(([cap], np.minimum.accumulate(np.minimum(dist, cap))[:-1]))
        candidates = np.nonzero(dist < prev + margin)[0]
        for idx in candidates:
            keeper.offer(start + int(idx), exact_reprs)
        start = stop
    return keeper.points


def naive_best_approx_oracle(xi: TargetNumber, n: int, x_max: int) -> List[MinimalPoint]:
    """Independent brute-force oracle: per-x, per-coordinate candidate loop.

    Structured deliberately unlike the scan: every coordinate tries both
    neighbouring integers and keeps the closer one, with plain interval
    comparisons on Fraction enclosures.  Intended for n <= 3, x_max <= 10^4.
    """
    if n < 1 or x_max < 1:
        raise DomainError("oracle needs n >= 1 and x_max >= 1")
    digits = 60
    while digits <= 7680:
        try:
            return _naive_attempt(xi, n, x_max, Fraction(1, 10 ** digits))
        except _Undecided:
            digits *= 4
    raise PrecisionError("oracle precision exhausted; raise the digit cap")


def _naive_attempt(xi, n, x_max, width):
    pows = []
    for j in range(1, n + 1):
        e = xi.exact_power(j)
        pows.append(RealInterval.point(e) if e is not None
                    else xi.power_enclosure(j, width))
    records = []
    best: Optional[RealInterval] = None
    for x in range(1, x_max + 1):
        ys = []
        err = RealInterval.point(0)
        tie = False
        for iv in pows:
            t = iv * x
            if t.width() == 0:
                y, t_flag = _round_half_even(t.lo)
                tie = tie or t_flag
            else:
                a = t.midpoint().__floor__()
                da, db = abs(t - a), abs(t - (a + 1))
                if da.certainly_lt(db):
                    y = a
                elif db.certainly_lt(da):
                    y = a + 1
                else:
                    raise _Undecided
            ys.append(y)
            d = abs(t - y)
            err = RealInterval(max(err.lo, d.lo), max(err.hi, d.hi))
        if best is None or err.certainly_lt(best):
            records.append(MinimalPoint((x, *ys), n, err, tie))
            best = err
        elif err.lo >= best.hi:
            continue
        else:
            raise _Undecided
    return records


def check_record_laws(points: Sequence[MinimalPoint]) -> None:
    """Assert the quoted sequence laws: x strictly up, errors strictly down."""
    for a, b in zip(points, points[1:]):
        if not b.x > a.x:
            raise InputError(f"record x-coordinates not increasing at x={b.x}")
        if not b.error.certainly_lt(a.error):
            raise InputError(f"record errors not certifiably decreasing at x={b.x}")


# ---------------------------------------------------------------------------
# canonical serialization


def point_error(xi: TargetNumber, coords: Sequence[int],
                width: Fraction = Fraction(1, 10 ** 40)) -> RealInterval:
    """Certified enclosure of max_j |x xi^j - y_j| recomputed from coordinates."""
    x = coords[0]
    lo = Fraction(0)
    hi = Fraction(0)
    for j, y in enumerate(coords[1:], start=1):
        e = xi.exact_power(j)
        if e is not None:
            d = RealInterval.point(abs(x * e - y))
        else:
            d = abs(xi.power_enclosure(j, width / (2 * x)) * x - y)
        lo, hi = max(lo, d.lo), max(hi, d.hi)
    return RealInterval(lo, hi)


def serialize_points(points: Sequence[MinimalPoint], xi: TargetNumber,
                     digits: int = 12) -> str:
    """Line-oriented form: coordinates space-separated, then the error interval.

    The error columns are the certified ``digits``-place truncation of the
    true error and that truncation plus one last-place unit, so the printed
    interval contains the exact error and is independent of scan internals.
    """
    lines = []
    ulp = Fraction(1, 10 ** digits)
    for p in points:
        width = Fraction(1, 10 ** (digits + 8))
        text = None
        while width >= Fraction(1, 10 ** (digits + 160)):
            iv = point_error(xi, p.coords, width)
            text = display_digits(iv, digits)
            if text is not None:
                break
            width /= 10 ** 16
        if text is None:
            raise PrecisionError(
                f"cannot certify {digits} error digits at x={p.x}")
        upper = truncate_decimal(Fraction(text) + ulp, digits)
        lines.append(" ".join(str(c) for c in p.coords) + f" {text} {upper}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Hankel matrices, exact rank, shifted vectors


def matrix_rank_exact(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q by fraction-free (Bareiss) integer elimination."""
    a = [list(r) for r in rows]
    if not a or not a[0]:
        return 0
    m, n = len(a), len(a[0])
    rank = 0
    prev = 1
    col = 0
    while rank < m and col < n:
        piv = next((i for i in range(rank, m) if a[i][col]), None)
        if piv is None:
            col += 1
            continue
        a[rank], a[piv] = a[piv], a[rank]
        p = a[rank][col]
        for i in range(rank + 1, m):
            ai = a[i]
            ar = a[rank]
            f = ai[col]
            for j in range(col, n):
                ai[j] = (ai[j] * p - f * ar[j]) // prev
        prev = p
        rank += 1
        col += 1
    return rank


def _coords_of(p) -> Tuple[int, ...]:
    return p.coords if isinstance(p, MinimalPoint) else tuple(p)


def hankel_matrix(p, h: int) -> List[List[int]]:
    """(h+1) x (n-h+1) Hankel matrix with entry (r, c) = coords[r + c]."""
    coords = _coords_of(p)
    n = len(coords) - 1
    if not 0 <= h <= n:
        raise DomainError(f"Hankel shift h={h} out of range 0..{n}")
    return [[coords[r + c] for c in range(n - h + 1)] for r in range(h + 1)]


def hankel_defect(p) -> int:
    """Smallest h with rank V(h) <= h: the shortest linear recurrence length."""
    coords = _coords_of(p)
    n = len(coords) - 1
    for h in range(n + 1):
        if matrix_rank_exact(hankel_matrix(coords, h)) <= h:
            assert h <= (n + 1) // 2 + 1
            return h
    # unreachable: at h = n the matrix is a single column, rank <= 1 <= n
    raise AssertionError("Hankel defect not found")


def _check_m(n: int, m: int) -> None:
    if not 1 <= m <= (n + 1) // 2:
        raise DomainError(f"m={m} outside 1..ceil(n/2) for n={n}")


def shifted_vectors(p, m: int) -> List[Tuple[int, ...]]:
    coords = _coords_of(p)
    n = len(coords) - 1
    _check_m(n, m)
    return [tuple(coords[t:t + n - m + 1]) for t in range(m + 1)]


def shifted_vectors_independent(p, m: int) -> bool:
    """True iff the m+1 shifted segments of the point span rank m+1 over Q."""
    return matrix_rank_exact(shifted_vectors(p, m)) == m + 1


@dataclass(frozen=True)
class ShiftedSystem:
    vectors: Tuple[Tuple[int, ...], ...]
    errors: Tuple[RealInterval, ...]
    independent: bool


def shifted_solutions(p, m: int, xi: TargetNumber) -> ShiftedSystem:
    """The m+1 shifted vectors with certified evaluations of their own errors."""
    vecs = shifted_vectors(p, m)
    errors = tuple(point_error(xi, v) for v in vecs)
    return ShiftedSystem(tuple(vecs), errors, shifted_vectors_independent(p, m))


# ---------------------------------------------------------------------------
# continued fractions and series shortcuts (oracles for n = 1)


def convergents(xi: TargetNumber, q_max: int) -> List[Tuple[int, int]]:
    """Continued-fraction convergents (p, q) of the target with q <= q_max."""
    if q_max < 1:
        raise DomainError("q_max must be >= 1")
    width = Fraction(1, 10 ** 40)
    while width >= Fraction(1, 10 ** 40960):
        out = _cf_attempt(xi, q_max, width)
        if out is not None:
            return out
        width = width ** 2
    raise PrecisionError("continued-fraction expansion needs more oracle digits")


def _cf_attempt(xi, q_max, width):
    iv = xi.enclosure(width)
    p_prev, q_prev = 1, 0
    p_cur, q_cur = None, None
    out = []
    while True:
        a_lo = iv.lo.__floor__()
        if a_lo != iv.hi.__floor__():
            return None
        if p_cur is None:
            p_cur, q_cur = a_lo, 1
        else:
            p_prev, p_cur = p_cur, a_lo * p_cur + p_prev
            q_prev, q_cur = q_cur, a_lo * q_cur + q_prev
        if q_cur > q_max:
            return out
        out.append((p_cur, q_cur))
        frac = iv - a_lo
        if frac.lo <= 0:
            return None
        iv = 1 / frac


def liouville_convergent_points(target: LiouvilleTarget, k_max: int) -> List[MinimalPoint]:
    """n=1 minimal points at the series truncations x = base^(k!), k = 1..k_max.

    These are the denominators of the partial sums, which approximate the
    series to within base^(-(k+1)!) of themselves and are therefore
    continued-fraction convergents.  A subsequence of the full record list.
    """
    if k_max < 1:
        raise DomainError("k_max must be >= 1")
    b = target.base
    points = []
    for k in range(1, k_max + 1):
        e = math.factorial(k)
        x = _ipow(b, e)
        y = sum(_ipow(b, e - math.factorial(j)) for j in range(1, k + 1))
        gap = math.factorial(k + 1) - e
        err = RealInterval(Fraction(1, _ipow(b, gap)), Fraction(2, _ipow(b, gap)))
        points.append(MinimalPoint((x, y), 1, err))
    return points


# ---------------------------------------------------------------------------
# best linear forms


def _form_value(xi: TargetNumber, avec: Sequence[int], width: Fraction):
    """Nearest-integer distance of sum_j a_j xi^j; returns (a0, lo, hi)."""
    t = RealInterval.point(0)
    for j, a in enumerate(avec, start=1):
        if a == 0:
            continue
        e = xi.exact_power(j)
        iv = RealInterval.point(e) if e is not None else xi.power_enclosure(j, width)
        t = t + iv * a
    y, lo, hi, amb, _ = _nearest_interval(t.lo, t.hi)
    if amb:
        raise _Undecided
    return -y, lo, hi


def best_linear_form_sequence(xi: TargetNumber, n: int, h_max: int) -> List[LinearFormRecord]:
    """Strictly-improving records of |a_0 + a_1 xi + ... + a_n xi^n|.

    Enumerates coefficient shells max|a_j| = H for H = 1..h_max with a_0 the
    nearest integer to the rest; the sign is canonicalized so the first
    nonzero of (a_1, ..., a_n) is positive.  For n = 1 the scan machinery is
    reused directly.
    """
    if n < 1 or h_max < 1:
        raise DomainError("best_linear_form_sequence needs n >= 1 and h_max >= 1")
    if n == 1:
        return [LinearFormRecord((-p.coords[1], p.x), p.x, p.error)
                for p in best_approx_sequence(xi, 1, h_max)]
    records: List[LinearFormRecord] = []
    best: Optional[LinearFormRecord] = None
    for h in range(1, h_max + 1):
        for avec in itertools.product(range(-h, h + 1), repeat=n):
            if max(abs(a) for a in avec) != h:
                continue
            if next(a for a in avec if a) < 0:
                continue
            rec = _evaluate_form(xi, avec, h, best)
            if rec is None:
                continue
            records.append(rec)
            best = rec
            if rec.exact_zero:
                return records
    return records


def _annihilates(xi: TargetNumber, coeffs: Sequence[int]) -> bool:
    """True iff the integer polynomial with these coefficients vanishes at xi."""
    mp = xi.minimal_polynomial
    if mp is None:
        return False
    _, r = _frac_divmod([Fraction(c) for c in coeffs],
                        [Fraction(c) for c in mp.coefficients])
    return not any(r)


def _evaluate_form(xi, avec, height, best) -> Optional[LinearFormRecord]:
    """Certified record test for one coefficient vector; None if not a record.

    Refines both the candidate and the incumbent best record until the strict
    comparison is decided; exact zeros are recognized through the target's
    minimal polynomial.
    """
    w = Fraction(1, 10 ** 40)
    while w >= _MIN_WIDTH ** 2:
        try:
            a0, lo, hi = _form_value(xi, avec, w)
            if lo == 0:
                if hi == 0 or _annihilates(xi, (a0, *avec)):
                    return LinearFormRecord((a0, *avec), height,
                                            RealInterval.point(0), True)
                w = w ** 2
                continue
            if best is None:
                return LinearFormRecord((a0, *avec), height, RealInterval(lo, hi))
            _, b_lo, b_hi = _form_value(xi, best.coeffs[1:], w)
            if hi < b_lo:
                return LinearFormRecord((a0, *avec), height, RealInterval(lo, hi))
            if lo >= b_hi:
                return None
        except _Undecided:
            pass
        w = w ** 2
    raise PrecisionError(
        f"linear-form record comparison undecided at the precision cap "
        f"(coefficients {avec}); distinct forms with equal values suspected")


# ---------------------------------------------------------------------------
# algebraic approximants


def _factor_candidates(coeffs: Sequence[int]) -> List[IntPolynomial]:
    """Irreducible integer factors of the candidate polynomial (via sympy)."""
    import sympy

    x = sympy.Symbol("x")
    expr = sum(c * x ** j for j, c in enumerate(coeffs))
    poly = sympy.Poly(expr, x)
    if poly.degree() < 1:
        return []
    _, factors = poly.factor_list()
    out = []
    for fac, _mult in factors:
        fc = [int(c) for c in reversed(fac.all_coeffs())]
        g = IntPolynomial(fc).primitive()
        if g.degree >= 1:
            out.append(g)
    return out


def _alpha_distance(xi: TargetNumber, alpha: AlgebraicReal,
                    width: Fraction = Fraction(1, 10 ** 30)) -> RealInterval:
    return abs(xi.enclosure(width) - alpha.interval(width))


def algebraic_approximant_sequence(xi: TargetNumber, n: int,
                                   h_max: int) -> List[AlgebraicApproximant]:
    """Height/distance records of algebraic numbers of degree <= n near xi.

    Candidates come from the best-linear-form records and unit perturbations
    of their constant terms; each candidate polynomial is factored exactly and
    the real roots of its irreducible factors near xi are kept.
    """
    if n < 1 or h_max < 1:
        raise DomainError("approximant search needs n >= 1 and h_max >= 1")
    forms = best_linear_form_sequence(xi, n, h_max)
    xi_mid = xi.enclosure(Fraction(1, 10 ** 6))
    window = RealInterval(xi_mid.lo - 1, xi_mid.hi + 1)
    mp = xi.minimal_polynomial

    seen = set()
    candidates = []
    for rec in forms:
        for da0 in (-1, 0, 1):
            coeffs = (rec.coeffs[0] + da0, *rec.coeffs[1:])
            for g in _factor_candidates(coeffs):
                if g.degree > n or g.coefficients in seen:
                    continue
                seen.add(g.coefficients)
                height = max(abs(c) for c in g.coefficients)
                exact_hit = mp is not None and g.coefficients == mp.coefficients
                for idx, root in enumerate(isolate_real_roots(g, window)):
                    candidates.append((height, g.coefficients, idx, root, exact_hit))
    candidates.sort(key=lambda c: (c[0], c[1], c[2]))

    records: List[AlgebraicApproximant] = []
    best_root: Optional[AlgebraicReal] = None
    best: Optional[RealInterval] = None
    for height, _, _, root, exact_hit in candidates:
        if exact_hit and root.isolating.overlaps(xi.enclosure(Fraction(1, 10 ** 30))):
            records.append(AlgebraicApproximant(root, height,
                                                RealInterval.point(0), True))
            return records
        dist = _alpha_distance(xi, root)
        width = Fraction(1, 10 ** 60)
        while best is not None and dist.overlaps(best) and width >= _MIN_WIDTH ** 4:
            dist = _alpha_distance(xi, root, width)
            best = _alpha_distance(xi, best_root, width)
            width = width ** 2
        if best is not None and not dist.certainly_lt(best):
            if dist.lo < best.hi:
                raise PrecisionError(
                    "approximant distance comparison undecided at precision cap")
            continue
        records.append(AlgebraicApproximant(root, height, dist, False))
        best = dist
        best_root = root
    return records

"""Finite-scale exponent estimation and inequality verification.

Record sequences only reach a finite height, so the classical exponents are
estimated from certified log-ratios of the records.  For the ordinary
exponents the headline value is the ratio achieved at the terminal scale
(the last record, or an explicit scan bound); the all-time running max is
kept alongside it because early small-height records inflate it far above
the limit value.  The uniform exponents are running minima of the
successor-normalized ratios after a short burn-in.  The verification
harness evaluates every implemented inequality on such estimates, gating
each relation on its stated hypotheses first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import bounds
from .errors import DomainError, InputError, PrecisionError
from .intervals import RealInterval, interval_log
from .minpoints import AlgebraicApproximant, LinearFormRecord, MinimalPoint

ESTIMATE_KINDS = ("LAMBDA", "LAMBDA_HAT", "W", "W_HAT", "W_STAR")

_TRAIL = 5


@dataclass(frozen=True)
class ExponentEstimate:
    kind: str
    n: int
    value: RealInterval
    window: Tuple[int, int]
    stability: Fraction
    infinite: bool = False
    running: Optional[RealInterval] = None


@dataclass(frozen=True)
class RelationReport:
    relation_id: str
    lhs: Optional[RealInterval]
    rhs: Optional[RealInterval]
    slack: Optional[RealInterval]
    verdict: str
    note: str = ""

    def to_json_dict(self) -> dict:
        def iv(x):
            return None if x is None else {"lo": str(x.lo), "hi": str(x.hi)}

        return {
            "schema_version": 1,
            "relation_id": self.relation_id,
            "lhs": iv(self.lhs),
            "rhs": iv(self.rhs),
            "slack": iv(self.slack),
            "verdict": self.verdict,
            "note": self.note,
        }


def _exact_power_exponent(f: Fraction, base: int) -> Optional[int]:
    """e >= 1 with f == base^-e exactly, else None."""
    if base < 2 or f.numerator != 1 or f <= 0:
        return None
    e = round(math.log(f.denominator) / math.log(base))
    if e >= 1 and base ** e == f.denominator:
        return e
    return None


def _log_ratio(err: RealInterval, scale: int) -> RealInterval:
    """Certified enclosure of -log(err) / log(scale); exact on exact powers."""
    if scale < 2:
        raise DomainError("ratio scale must be >= 2")
    if err.lo <= 0:
        raise PrecisionError(
            "record error has a non-positive lower bound; regenerate the "
            "sequence at higher precision")
    if err.lo == err.hi:
        e = _exact_power_exponent(err.lo, scale)
        if e is not None:
            return RealInterval.point(e)
    return -interval_log(err) / interval_log(RealInterval.point(scale))


def _hull_max(acc: Optional[RealInterval], r: RealInterval) -> RealInterval:
    if acc is None:
        return r
    return RealInterval(max(acc.lo, r.lo), max(acc.hi, r.hi))


def _hull_min(acc: Optional[RealInterval], r: RealInterval) -> RealInterval:
    if acc is None:
        return r
    return RealInterval(min(acc.lo, r.lo), min(acc.hi, r.hi))


def _stability(ratios: List[RealInterval]) -> Fraction:
    trail = ratios[-_TRAIL:]
    return max(r.hi for r in trail) - min(r.lo for r in trail)


def _running_hull(ratios: List[RealInterval], want_max: bool) -> RealInterval:
    fold = _hull_max if want_max else _hull_min
    acc = None
    prev = None
    for r in ratios:
        acc = fold(acc, r)
        # running extrema are monotone by construction; keep the check anyway
        if prev is not None:
            assert acc.lo >= prev.lo if want_max else acc.lo <= prev.lo
        prev = acc
    return acc


def _ordinary_estimate(ratios: List[Tuple[int, RealInterval]], kind: str, n: int,
                       terminal: RealInterval,
                       infinite: bool = False) -> ExponentEstimate:
    """Terminal-scale value plus the all-time running max as a diagnostic.

    The running max over every record keeps ratios from the smallest scales,
    which overshoot badly (a single-digit record can contribute a ratio of 2
    for an exponent that is really 1), so the headline value is the ratio at
    the terminal scale instead.
    """
    if not ratios:
        if infinite:
            # an exact hit ended the scan before any usable finite record;
            # the estimate is purely the infinite flag
            zero = RealInterval.point(0)
            return ExponentEstimate(kind, n, zero, (0, 0), Fraction(0), True, zero)
        raise InputError(f"no usable records to estimate {kind}")
    running = _running_hull([r for _, r in ratios], want_max=True)
    return ExponentEstimate(kind, n, terminal, (ratios[0][0], ratios[-1][0]),
                            _stability([r for _, r in ratios]), infinite, running)


def _uniform_estimate(ratios: List[Tuple[int, RealInterval]], kind: str, n: int,
                      infinite: bool = False) -> ExponentEstimate:
    if not ratios:
        if infinite:
            zero = RealInterval.point(0)
            return ExponentEstimate(kind, n, zero, (0, 0), Fraction(0), True, zero)
        raise InputError(f"no usable records to estimate {kind}")
    running = _running_hull([r for _, r in ratios], want_max=False)
    return ExponentEstimate(kind, n, running, (ratios[0][0], ratios[-1][0]),
                            _stability([r for _, r in ratios]), infinite, running)


def _check_bound(bound: Optional[int], last: int, what: str) -> int:
    if bound is None:
        return last
    if bound < last:
        raise InputError(f"{what} bound {bound} is below the last record at {last}")
    return bound


def estimate_lambda(seq: Sequence[MinimalPoint],
                    x_bound: Optional[int] = None) -> ExponentEstimate:
    """Ordinary exponent of the minimal-point sequence.

    Value: -log L(x_last) / log x_bound, the exponent certified at the
    terminal scale (x_bound defaults to the last record's x).  The running
    max of -log L(x_i) / log x_i is reported in the `running` field.
    """
    if len(seq) < 3:
        raise InputError("estimate_lambda needs at least 3 records")
    ratios = [(i, _log_ratio(p.error, p.x))
              for i, p in enumerate(seq) if p.x >= 2]
    scale = _check_bound(x_bound, seq[-1].x, "x")
    terminal = _log_ratio(seq[-1].error, scale)
    return _ordinary_estimate(ratios, "LAMBDA", seq[0].n, terminal)


def estimate_lambda_hat(seq: Sequence[MinimalPoint]) -> ExponentEstimate:
    """Running min of -log L(x_i) / log x_{i+1,0}, skipping a burn-in of 3.

    L(x_i) stays the best error until the next record appears, so the uniform
    exponent is probed at the successor's x.
    """
    if len(seq) < 3:
        raise InputError("estimate_lambda_hat needs at least 3 records")
    ratios = [(i, _log_ratio(seq[i].error, seq[i + 1].x))
              for i in range(len(seq) - 1) if seq[i + 1].x >= 2]
    burn = 3 if len(ratios) > 3 else 0
    return _uniform_estimate(ratios[burn:], "LAMBDA_HAT", seq[0].n)


def _form_n(seq: Sequence[LinearFormRecord]) -> int:
    return len(seq[0].coeffs) - 1


def estimate_w(seq: Sequence[LinearFormRecord],
               h_bound: Optional[int] = None) -> ExponentEstimate:
    """Ordinary linear-form exponent: -log |form value| / log height.

    Value at the terminal height bound, running max in `running`.
    """
    if not seq:
        raise InputError("estimate_w needs at least one record")
    n = _form_n(seq)
    finite = [r for r in seq if not r.exact_zero]
    infinite = len(finite) < len(seq)
    if len(seq) < 3 and not infinite:
        raise InputError("estimate_w needs at least 3 records")
    ratios = [(i, _log_ratio(r.value, r.height))
              for i, r in enumerate(finite) if r.height >= 2]
    if not ratios:
        return _ordinary_estimate(ratios, "W", n, None, infinite=infinite)
    scale = _check_bound(h_bound, finite[-1].height, "height")
    terminal = _log_ratio(finite[-1].value, scale)
    return _ordinary_estimate(ratios, "W", n, terminal, infinite=infinite)


def estimate_w_hat(seq: Sequence[LinearFormRecord]) -> ExponentEstimate:
    """Running min of -log |value at h_i| / log h_{i+1}, burn-in of 3."""
    if not seq:
        raise InputError("estimate_w_hat needs at least one record")
    n = _form_n(seq)
    finite = [r for r in seq if not r.exact_zero]
    infinite = len(finite) < len(seq)
    if len(seq) < 3 and not infinite:
        raise InputError("estimate_w_hat needs at least 3 records")
    ratios = [(i, _log_ratio(finite[i].value, finite[i + 1].height))
              for i in range(len(finite) - 1) if finite[i + 1].height >= 2]
    burn = 3 if len(ratios) > 3 else 0
    return _uniform_estimate(ratios[burn:], "W_HAT", n, infinite=infinite)


def estimate_w_star(seq: Sequence[AlgebraicApproximant],
                    h_bound: Optional[int] = None,
                    n: Optional[int] = None) -> ExponentEstimate:
    """Approximation by algebraic numbers: -log |xi - alpha| / log H(alpha) - 1.

    Value at the terminal height bound, running max in `running`.  `n` is the
    degree bound of the search; it defaults to the largest degree present.
    """
    if not seq:
        raise InputError("estimate_w_star needs at least one approximant")
    if n is None:
        n = max(a.alpha.minimal_polynomial.degree for a in seq)
    finite = [a for a in seq if not a.exact_hit]
    infinite = len(finite) < len(seq)
    if len(seq) < 3 and not infinite:
        raise InputError("estimate_w_star needs at least 3 approximants")
    ratios = [(i, _log_ratio(a.distance, a.height) - 1)
              for i, a in enumerate(finite) if a.height >= 2]
    if not ratios:
        return _ordinary_estimate(ratios, "W_STAR", n, None, infinite=infinite)
    scale = _check_bound(h_bound, finite[-1].height, "height")
    terminal = _log_ratio(finite[-1].distance, scale) - 1
    return _ordinary_estimate(ratios, "W_STAR", n, terminal, infinite=infinite)


def estimate_suite(xi, n: int, m: int, x_max: int, h_max: int) -> List[ExponentEstimate]:
    """Every estimate verify_relations needs for the pair (n, m).

    Scans minimal points at degree n, linear forms at degrees n-m, m+1 and n,
    and algebraic approximants at degree n.
    """
    from . import minpoints as scans

    if not (1 <= m < n):
        raise InputError("estimate_suite needs 1 <= m < n")
    points = scans.best_approx_sequence(xi, n, x_max)
    out = [estimate_lambda(points, x_bound=x_max), estimate_lambda_hat(points)]
    for d in sorted({n - m, m + 1, n}):
        forms = scans.best_linear_form_sequence(xi, d, h_max)
        out.append(estimate_w(forms, h_bound=h_max))
        out.append(estimate_w_hat(forms))
    # approximant heights are minimal-polynomial coefficient bounds and can
    # exceed the form-height budget, so the terminal scale is the last record
    apps = scans.algebraic_approximant_sequence(xi, n, h_max)
    out.append(estimate_w_star(apps, n=n))
    return out


# ---------------------------------------------------------------------------
# relation verification


HOLDS = "HOLDS"
VIOLATED = "VIOLATED_AT_FINITE_SCALE"
NOT_APPLICABLE = "NOT_APPLICABLE"


def _index(estimates) -> Dict[Tuple[str, int], ExponentEstimate]:
    if isinstance(estimates, dict):
        values: Iterable[ExponentEstimate] = estimates.values()
    else:
        values = estimates
    out = {}
    for e in values:
        out[(e.kind, e.n)] = e
    return out


def _need(idx, kind: str, degree: int) -> ExponentEstimate:
    est = idx.get((kind, degree))
    if est is None:
        raise InputError(f"missing estimate {kind} at degree {degree}")
    return est


def verify_relations(estimates, n: int, m: int) -> List[RelationReport]:
    """Evaluate every implemented inequality on the supplied estimates.

    Hypothesis gates are checked first and an unmet gate yields
    NOT_APPLICABLE (never HOLDS or VIOLATED).  A relation is
    VIOLATED_AT_FINITE_SCALE only when the interval slack certifies the
    violation; otherwise it HOLDS.  All verdicts describe the finite-scale
    estimates, not the limit exponents.
    """
    idx = _index(estimates)
    lam_hat = _need(idx, "LAMBDA_HAT", n)
    reports = []

    def run(rid, lhs_est, rhs_fn, lower_bounds_lhs, rhs_deps=()):
        if any(e.infinite for e in rhs_deps):
            reports.append(RelationReport(
                rid, None, None, None, NOT_APPLICABLE,
                "an estimate entering the right-hand side is flagged infinite"))
            return
        try:
            rhs = rhs_fn()
        except DomainError as exc:
            reports.append(RelationReport(rid, None, None, None,
                                          NOT_APPLICABLE, str(exc)))
            return
        if lhs_est.infinite:
            reports.append(RelationReport(
                rid, None, rhs, None, NOT_APPLICABLE,
                "the left-hand estimate is flagged infinite "
                "(an exact algebraic hit ended the scan)"))
            return
        lhs = lhs_est.value
        slack = (lhs - rhs) if lower_bounds_lhs else (rhs - lhs)
        verdict = VIOLATED if slack.hi < 0 else HOLDS
        reports.append(RelationReport(rid, lhs, rhs, slack, verdict))

    lam = _need(idx, "LAMBDA", n)
    run("H11", _need(idx, "W_HAT", n - m),
        lambda: bounds.rhs_h11(n, m, lam_hat.value), True, rhs_deps=(lam_hat,))
    run("H21", _need(idx, "W", n - m),
        lambda: bounds.rhs_h21(n, m, lam_hat.value, lam.value), True,
        rhs_deps=(lam_hat, lam))
    run("VERYNEW", _need(idx, "W", n - m),
        lambda: bounds.rhs_verynew(n, m, lam_hat.value), False, rhs_deps=(lam_hat,))
    run("WINDAG", _need(idx, "W", m + 1),
        lambda: bounds.rhs_windag(lam_hat.value), False, rhs_deps=(lam_hat,))

    w_star = _need(idx, "W_STAR", n)
    w = _need(idx, "W", n)
    w_hat = _need(idx, "W_HAT", n)
    run("TOLL", w_star, lambda: bounds.transfer_rhs("TOLL", n, w_hat=w_hat.value),
        True, rhs_deps=(w_hat,))
    run("DAVSCHM", w_star,
        lambda: bounds.transfer_rhs("DAVSCHM", n, lam_hat=lam_hat.value), True,
        rhs_deps=(lam_hat,))
    run("TOLLER_1", w_star, lambda: bounds.transfer_rhs("TOLLER_1", n, w=w.value),
        True, rhs_deps=(w,))
    run("TOLLER_2", w_star, lambda: bounds.transfer_rhs("TOLLER_2", n, w=w.value),
        True, rhs_deps=(w,))
    run("TOLLER_3", w_star,
        lambda: bounds.transfer_rhs("TOLLER_3", n, w_hat=w_hat.value), True,
        rhs_deps=(w_hat,))
    run("STRONG_TOLL", w_star,
        lambda: bounds.transfer_rhs("STRONG_TOLL", n, w=w.value, w_hat=w_hat.value),
        True, rhs_deps=(w, w_hat))
    return reports

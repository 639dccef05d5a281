"""Command-line front end.

Every subcommand builds a list of row dictionaries, then renders them as
text, JSON, CSV or TSV; `--export` additionally writes the TSV rows to a
file and `--plot` renders a PNG of the same data.  Output is deterministic
for a fixed configuration.

Exit codes: 0 success, 2 usage, 3 domain error, 4 precision exhausted,
5 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from . import bounds, estimate, minpoints, pgn
from .errors import DomainError, InputError, PrecisionError, SearchExhausted
from .targets import TargetNumber, parse_target

DEFAULT_TABLE_NS = "4,5,10,20,24,25,30,50,100,1000"


@dataclass
class RunConfig:
    """Validated parameters of one CLI invocation."""

    subcommand: str
    target: Optional[TargetNumber] = None
    n: Optional[int] = None
    m: Optional[int] = None
    x_max: Optional[int] = None
    h_max: Optional[int] = None
    q_grid: List[Fraction] = field(default_factory=list)
    digits: int = 4
    output: str = "text"
    seed: int = 0
    jobs: int = 1
    export: Optional[str] = None
    plot: Optional[str] = None


def _fmt(x) -> str:
    return f"{float(x):.12g}"


def _iv_cols(iv) -> Dict[str, str]:
    return {"lo": _fmt(iv.lo), "hi": _fmt(iv.hi)}


def _emit(cfg: RunConfig, rows: List[Dict[str, str]], text_lines: List[str],
          out=None) -> None:
    out = out if out is not None else sys.stdout
    if cfg.output == "json":
        payload = [{"schema_version": 1, **r} for r in rows]
        json.dump(payload, out, indent=2)
        out.write("\n")
    elif cfg.output in ("csv", "tsv"):
        out.write(_delimited(rows, "," if cfg.output == "csv" else "\t"))
    else:
        for line in text_lines:
            out.write(line + "\n")
    if cfg.export:
        with open(cfg.export, "w") as fh:
            fh.write(_delimited(rows, "\t"))


def _delimited(rows: List[Dict[str, str]], sep: str) -> str:
    if not rows:
        return ""
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()),
                            delimiter=sep, lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _cmd_bound(cfg: RunConfig) -> None:
    if cfg.m is None:
        m = bounds.best_m(cfg.n).best_m
    else:
        m = cfg.m
    report = bounds.phi_bound(m, cfg.n, digits=cfg.digits)
    row = {"formula_id": report.formula_id, "n": str(cfg.n), "m": str(m),
           **_iv_cols(report.value), "display": report.display}
    _emit(cfg, [row], [f"n={cfg.n} m={m} bound={report.display}"])


def _cmd_constants(cfg: RunConfig) -> None:
    rows = []
    lines = []
    for name, iv, disp in bounds.constants_report(digits=cfg.digits):
        rows.append({"name": name, **_iv_cols(iv), "display": disp})
        lines.append(f"{name} = {disp}")
    _emit(cfg, rows, lines)


def _cmd_table(cfg: RunConfig, ns: List[int]) -> None:
    rows = []
    lines = []
    for n, ref, disp in bounds.bs_table(ns):
        rows.append({"n": str(n), "reference": ref or "", "bound": disp})
        lines.append(f"{n}\t{ref or '-'}\t{disp}")
    _emit(cfg, rows, lines)


def _point_rows(cfg: RunConfig, points, with_hankel: bool):
    serial = minpoints.serialize_points(points, cfg.target, digits=12)
    rows = []
    lines = serial.splitlines()
    for p, line in zip(points, lines):
        cols = line.split()
        row = {"x": str(p.x)}
        for j, y in enumerate(p.coords[1:], start=1):
            row[f"y{j}"] = str(y)
        row["err_lo"], row["err_hi"] = cols[-2], cols[-1]
        if with_hankel:
            row["hankel_defect"] = str(minpoints.hankel_defect(p))
        rows.append(row)
    if with_hankel:
        lines = [f"{line} {row['hankel_defect']}"
                 for line, row in zip(lines, rows)]
    return rows, lines


def _cmd_minpoints(cfg: RunConfig, with_hankel: bool) -> None:
    points = minpoints.best_approx_sequence(cfg.target, cfg.n, cfg.x_max)
    rows, lines = _point_rows(cfg, points, with_hankel)
    _emit(cfg, rows, lines)
    if cfg.plot:
        from . import plotting
        plotting.plot_decay([p.x for p in points],
                            [float(p.error.hi) for p in points], cfg.plot,
                            xlabel="x", ylabel="L(x)",
                            title=f"{cfg.target.name} n={cfg.n}")


def _cmd_forms(cfg: RunConfig) -> None:
    records = minpoints.best_linear_form_sequence(cfg.target, cfg.n, cfg.h_max)
    rows = []
    lines = []
    for r in records:
        row = {"height": str(r.height)}
        for j, a in enumerate(r.coeffs):
            row[f"a{j}"] = str(a)
        row.update(_iv_cols(r.value))
        row["exact_zero"] = str(int(r.exact_zero))
        rows.append(row)
        tag = " exact-zero" if r.exact_zero else ""
        lines.append(f"H={r.height} coeffs={list(r.coeffs)} "
                     f"value=[{row['lo']},{row['hi']}]{tag}")
    _emit(cfg, rows, lines)
    if cfg.plot:
        from . import plotting
        finite = [r for r in records if not r.exact_zero]
        plotting.plot_decay([r.height for r in finite],
                            [float(r.value.hi) for r in finite], cfg.plot,
                            xlabel="height", ylabel="|form value|",
                            title=f"{cfg.target.name} n={cfg.n}")


def _cmd_approximants(cfg: RunConfig) -> None:
    records = minpoints.algebraic_approximant_sequence(cfg.target, cfg.n, cfg.h_max)
    rows = []
    lines = []
    for a in records:
        coeffs = list(a.alpha.minimal_polynomial.coefficients)
        row = {"height": str(a.height), "coeffs": " ".join(map(str, coeffs)),
               **_iv_cols(a.distance), "exact_hit": str(int(a.exact_hit))}
        rows.append(row)
        tag = " exact-hit" if a.exact_hit else ""
        lines.append(f"H={a.height} minpoly={coeffs} "
                     f"distance=[{row['lo']},{row['hi']}]{tag}")
    _emit(cfg, rows, lines)
    if cfg.plot:
        from . import plotting
        finite = [a for a in records if not a.exact_hit]
        plotting.plot_decay([a.height for a in finite],
                            [float(a.distance.hi) for a in finite], cfg.plot,
                            xlabel="height", ylabel="|xi - alpha|",
                            title=f"{cfg.target.name} n={cfg.n}")


def _cmd_psi(cfg: RunConfig, l: int, side: str, search_bound: int,
             tolerance: Fraction) -> None:
    samples = []
    for q in cfg.q_grid:
        if side in ("primal", "both"):
            samples.append(pgn.psi_empirical(cfg.target, cfg.n, l, q,
                                             search_bound, tolerance))
        if side in ("dual", "both"):
            samples.append(pgn.psi_star_empirical(cfg.target, cfg.n, l, q,
                                                  search_bound, tolerance))
    serial = pgn.serialize_samples(samples)
    rows = []
    for s in samples:
        rows.append({"Q": str(s.Q), "N": str(s.N), "l": str(s.l),
                     "side": s.side, **_iv_cols(s.value),
                     "truncated": str(int(s.truncated))})
    _emit(cfg, rows, serial.splitlines())
    if cfg.plot:
        from . import plotting
        plotting.plot_psi_samples(samples, cfg.plot, title=cfg.target.name)


def _estimate_rows(ests):
    rows = []
    lines = []
    for e in ests:
        row = {"kind": e.kind, "n": str(e.n), **_iv_cols(e.value),
               "stability": _fmt(e.stability),
               "window": f"{e.window[0]}..{e.window[1]}",
               "infinite": str(int(e.infinite))}
        rows.append(row)
        tag = " (exact hit: flagged infinite)" if e.infinite else ""
        lines.append(f"{e.kind} n={e.n} value=[{row['lo']},{row['hi']}] "
                     f"stability={row['stability']} window={row['window']}{tag}")
    return rows, lines


def _cmd_estimate(cfg: RunConfig) -> None:
    points = minpoints.best_approx_sequence(cfg.target, cfg.n, cfg.x_max)
    forms = minpoints.best_linear_form_sequence(cfg.target, cfg.n, cfg.h_max)
    apps = minpoints.algebraic_approximant_sequence(cfg.target, cfg.n, cfg.h_max)
    ests = [estimate.estimate_lambda(points, x_bound=cfg.x_max),
            estimate.estimate_lambda_hat(points),
            estimate.estimate_w(forms, h_bound=cfg.h_max),
            estimate.estimate_w_hat(forms),
            estimate.estimate_w_star(apps, n=cfg.n)]
    rows, lines = _estimate_rows(ests)
    _emit(cfg, rows, lines)


def _cmd_verify(cfg: RunConfig) -> None:
    ests = estimate.estimate_suite(cfg.target, cfg.n, cfg.m, cfg.x_max, cfg.h_max)
    reports = estimate.verify_relations(ests, cfg.n, cfg.m)
    rows = []
    lines = []
    for r in reports:
        def col(iv):
            return "" if iv is None else f"{_fmt(iv.lo)}..{_fmt(iv.hi)}"

        rows.append({"relation_id": r.relation_id, "lhs": col(r.lhs),
                     "rhs": col(r.rhs), "slack": col(r.slack),
                     "verdict": r.verdict, "note": r.note})
        detail = (f" lhs=[{col(r.lhs)}] rhs=[{col(r.rhs)}] slack=[{col(r.slack)}]"
                  if r.slack is not None else f" {r.note}")
        lines.append(f"{r.relation_id} {r.verdict}{detail}")
    _emit(cfg, rows, lines)


# ---------------------------------------------------------------------------
# argument parsing


def _add_common(p, target=False):
    p.add_argument("--digits", type=int, default=4,
                   help="certified decimal digits in displays")
    p.add_argument("--format", choices=("text", "json", "csv", "tsv"),
                   default="text", help="output format")
    p.add_argument("--json", action="store_const", const="json", dest="format",
                   help="shorthand for --format json")
    p.add_argument("--export", metavar="FILE",
                   help="also write the rows as TSV to FILE")
    p.add_argument("--plot", metavar="FILE",
                   help="render a PNG figure of the rows to FILE")
    p.add_argument("--jobs", type=int, default=1,
                   help="worker count (results are deterministic regardless)")
    p.add_argument("--seed", type=int, default=0,
                   help="seed recorded in the run configuration")
    if target:
        p.add_argument("--target", required=True,
                       help="target number: golden | sqrt:<k> | quad:<a>,<b>,<c> "
                            "| liouville[:<base>] | decimal:<file>")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wirsing",
        description="Certified lower bounds and finite-scale Diophantine "
                    "approximation experiments.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    p = sub.add_parser("bound", help="certified lower bound at degree n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int)
    _add_common(p)
    p.set_defaults(digits=2)

    p = sub.add_parser("constants", help="named certified constants")
    _add_common(p)

    p = sub.add_parser("table", help="comparison table over a list of degrees")
    p.add_argument("--n-list", default=DEFAULT_TABLE_NS,
                   help="comma-separated degrees")
    _add_common(p)

    p = sub.add_parser("minpoints", help="minimal-point record scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--hankel", action="store_true",
                   help="append the Hankel defect of each point")
    _add_common(p, target=True)

    p = sub.add_parser("forms", help="best-linear-form record scan")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)
    _add_common(p, target=True)

    p = sub.add_parser("approximants", help="algebraic approximant records")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)
    _add_common(p, target=True)

    p = sub.add_parser("psi", help="successive-minima exponent samples")
    p.add_argument("--N", type=int, required=True, dest="big_n")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--Q", required=True,
                   help="comma-separated list of Q values")
    p.add_argument("--side", choices=("primal", "dual", "both"),
                   default="primal")
    p.add_argument("--search-bound", type=int, default=10**6)
    p.add_argument("--tolerance", default="1/1000")
    _add_common(p, target=True)

    p = sub.add_parser("estimate", help="finite-scale exponent estimates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--xmax", type=int, required=True)
    p.add_argument("--hmax", type=int, required=True)
    _add_common(p, target=True)

    p = sub.add_parser("verify", help="evaluate the inequalities on estimates")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--xmax", type=int, default=10**4)
    p.add_argument("--hmax", type=int, default=15)
    _add_common(p, target=True)

    return parser


def _config_from(args) -> RunConfig:
    cfg = RunConfig(subcommand=args.subcommand, digits=args.digits,
                    output=args.format, seed=args.seed, jobs=args.jobs,
                    export=args.export, plot=args.plot)
    if cfg.jobs < 1:
        raise InputError("--jobs must be >= 1")
    if getattr(args, "target", None) is not None:
        cfg.target = parse_target(args.target)
    for src, dst in (("n", "n"), ("m", "m"), ("xmax", "x_max"),
                     ("hmax", "h_max"), ("big_n", "n")):
        if getattr(args, src, None) is not None:
            setattr(cfg, dst, getattr(args, src))
    if getattr(args, "Q", None):
        cfg.q_grid = [Fraction(part) for part in args.Q.split(",")]
    return cfg


def run(argv=None) -> None:
    args = build_parser().parse_args(argv)
    cfg = _config_from(args)
    if cfg.subcommand == "bound":
        _cmd_bound(cfg)
    elif cfg.subcommand == "constants":
        _cmd_constants(cfg)
    elif cfg.subcommand == "table":
        _cmd_table(cfg, [int(s) for s in args.n_list.split(",")])
    elif cfg.subcommand == "minpoints":
        _cmd_minpoints(cfg, args.hankel)
    elif cfg.subcommand == "forms":
        _cmd_forms(cfg)
    elif cfg.subcommand == "approximants":
        _cmd_approximants(cfg)
    elif cfg.subcommand == "psi":
        _cmd_psi(cfg, args.l, args.side, args.search_bound,
                 Fraction(args.tolerance))
    elif cfg.subcommand == "estimate":
        _cmd_estimate(cfg)
    elif cfg.subcommand == "verify":
        _cmd_verify(cfg)
    else:  # pragma: no cover - argparse enforces the choices
        raise InputError(f"unknown subcommand {cfg.subcommand!r}")


def main(argv=None) -> int:
    try:
        run(argv)
    except InputError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return 3
    except (PrecisionError, SearchExhausted) as exc:
        print(f"precision exhausted: {exc}", file=sys.stderr)
        print("hint: raise the search bound, request fewer digits, or supply "
              "a higher-precision target description", file=sys.stderr)
        return 4
    except (ValueError, ZeroDivisionError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except Exception as exc:  # noqa: BLE001 - the CLI boundary
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 5
    return 0


if __name__ == "__main__":
    sys.exit(main())

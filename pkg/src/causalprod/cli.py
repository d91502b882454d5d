"""Command-line front end: coefficient tables, identity checks, studies, kernel grids.

All artifacts are deterministic functions of (config, seed): CSV with LF line
endings, JSON with sorted keys and a top-level ``"schema": 1`` field.  Complex
values are always split into re/im columns.  Exit status is 0 iff every check
of the invoked command passed at the configured tolerance.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, Sequence

from . import coefficients as coeff
from . import kernel as ker
from . import product as prod
from .combinatorics import catalan_recurrence_holds
from .config import COEFF_TABLE_CAP, CONVERGE_DIM_CAP, RunConfig

SCHEMA_VERSION = 1


def _emit(cfg: RunConfig, headers: Sequence[str], rows: list[dict], extra: dict) -> None:
    if cfg.fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(headers)
        for row in rows:
            writer.writerow([row[h] for h in headers])
        text = buf.getvalue()
    else:
        payload = {"schema": SCHEMA_VERSION, **extra, "rows": rows}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_coeffs(cfg: RunConfig) -> int:
    """Closed-form vs brute-force coefficient tables for degrees up to s_max."""
    if cfg.s_max > COEFF_TABLE_CAP:
        sys.stderr.write(f"refusing: brute-force tables are capped at s_max={COEFF_TABLE_CAP}\n")
        return 2
    rows = []
    all_match = True
    for s in range(1, cfg.s_max + 1):
        for m in range(s):
            for n in range(s - m):
                p = s - 1 - m - n
                for q in range(0, s + 1):
                    dc = coeff.forward_count_closed(m, n, p, q)
                    db = coeff.forward_count_brute(m, n, p, q)
                    ec = coeff.reversed_count_closed(m, n, p, q)
                    eb = coeff.reversed_count_brute(m, n, p, q)
                    if max(abs(dc), abs(db), abs(ec), abs(eb)) == 0:
                        continue
                    match = dc == db and ec == eb
                    all_match = all_match and match
                    rows.append({"m": m, "n": n, "p": p, "q": q,
                                 "D_closed": dc, "D_brute": db,
                                 "E_closed": ec, "E_brute": eb,
                                 "match": int(match)})
    _emit(cfg, ["m", "n", "p", "q", "D_closed", "D_brute", "E_closed", "E_brute", "match"],
          rows, {"s_max": cfg.s_max, "all_match": all_match})
    return 0 if all_match else 1


def _verify_pairs(iv: ker.Interval) -> list[tuple[float, float]]:
    w = iv.width
    fracs = [(0.15, 0.45), (0.25, 0.75), (0.4, 0.6), (0.1, 0.9), (0.55, 0.85)]
    return [(iv.a + u * w, iv.a + v * w) for u, v in fracs]


def cmd_verify(cfg: RunConfig,
               forward_count: Callable[[int, int, int, int], int] | None = None) -> int:
    """Run every identity check and emit a pass/fail report."""
    iv, nu = cfg.interval, cfg.param
    checks: list[dict] = []

    failures = 0
    for m in range(-8, 9):
        for n in range(0, 9):
            for p in range(-8, min(m, 8) + 1):
                if m + n + p + 1 < 0:
                    continue
                if not catalan_recurrence_holds(m, n, p):
                    failures += 1
    checks.append({"name": "catalan_recurrence", "params": "|m|,|n|,|p| <= 8",
                   "residual": float(failures), "tolerance": 0.0, "pass": failures == 0})

    worst = 0
    rng = range(0, cfg.s_max + 1)
    for alpha in rng:
        for beta in rng:
            for gamma in rng:
                if alpha + beta + gamma > cfg.s_max:
                    continue
                for xi in range(0, alpha + beta + gamma + 3):
                    res = coeff.unitarity_identity_residual(
                        alpha, beta, gamma, xi, forward_count=forward_count)
                    worst = max(worst, abs(res))
    checks.append({"name": "unitarity_coefficient_identity",
                   "params": f"alpha+beta+gamma <= {cfg.s_max}",
                   "residual": float(worst), "tolerance": 0.0, "pass": worst == 0})

    iso = max(abs(ker.isometry_residual(x, y, iv, nu, quad_n=64))
              for x, y in _verify_pairs(iv))
    checks.append({"name": "isometry_identity", "params": f"nu={nu.value}, 5 points",
                   "residual": iso, "tolerance": cfg.tol, "pass": iso < cfg.tol})

    lom = max(ker.lommel_residual(al, be, x, quad_n=64)
              for al, be in ((1.0, 2.0), (0.5, 1.5), (3.0, 1.0))
              for x in (0.5, 1.0, 2.0))
    checks.append({"name": "lommel_integral", "params": "3x3 grid",
                   "residual": lom, "tolerance": cfg.tol, "pass": lom < cfg.tol})

    sg = max(ker.sonine_gegenbauer_residual(be, z, quad_n=64)
             for be in (0.5, 1.0, 2.0) for z in (0.4, 1.0, 1.6))
    checks.append({"name": "sonine_gegenbauer_integral", "params": "3x3 grid",
                   "residual": sg, "tolerance": cfg.tol, "pass": sg < cfg.tol})

    rows = [{"name": c["name"], "params": c["params"], "residual": c["residual"],
             "tolerance": c["tolerance"], "pass": int(c["pass"])} for c in checks]
    ok = all(c["pass"] for c in checks)
    _emit(cfg, ["name", "params", "residual", "tolerance", "pass"], rows,
          {"config": {"a": cfg.a, "b": cfg.b, "lambda": cfg.lam, "mu": cfg.mu,
                      "tol": cfg.tol, "s_max": cfg.s_max}, "all_pass": ok})
    return 0 if ok else 1


def cmd_converge(cfg: RunConfig) -> int:
    """Convergence ladder of the product's kernel estimate toward the limit kernel."""
    ns = cfg.n_list
    if any(b <= a for a, b in zip(ns, ns[1:])):
        sys.stderr.write("refusing: --n-list must be strictly increasing\n")
        return 2
    if max(ns) > CONVERGE_DIM_CAP:
        sys.stderr.write(f"refusing: max n is capped at {CONVERGE_DIM_CAP}\n")
        return 2
    study = prod.convergence_study(ns, prod.sample_points(cfg.interval),
                                   cfg.interval, cfg.param)
    rows = [{"n": n, "max_error": err, "fitted_rate": study.fitted_rate}
            for n, err in zip(study.ns, study.max_errors)]
    ok = all(e1 >= e2 for e1, e2 in zip(study.max_errors, study.max_errors[1:]))
    ok = ok and all(e <= b for e, b in zip(study.max_errors, study.bounds))
    _emit(cfg, ["n", "max_error", "fitted_rate"], rows,
          {"bounds": list(study.bounds), "fitted_rate": study.fitted_rate, "all_pass": ok})
    return 0 if ok else 1


def cmd_kernel(cfg: RunConfig) -> int:
    """Kernel values on an n x n interior grid, with optional series comparison."""
    iv, nu = cfg.interval, cfg.param
    step = iv.width / (cfg.n + 1)
    pts = [iv.a + i * step for i in range(1, cfg.n + 1)]
    rows = []
    worst = 0.0
    for x in pts:
        for y in pts:
            val = ker.limit_kernel(x, y, iv, nu)
            row = {"x": x, "y": y, "re": val.real, "im": val.imag}
            if cfg.s_max >= 1:
                ser = coeff.truncated_kernel(x, y, iv.a, iv.b, nu.value, cfg.s_max)
                row["series_re"] = ser.real
                row["series_im"] = ser.imag
                row["abs_diff"] = abs(ser - val)
                worst = max(worst, row["abs_diff"])
            rows.append(row)
    headers = ["x", "y", "re", "im"]
    if cfg.s_max >= 1:
        headers += ["series_re", "series_im", "abs_diff"]
    _emit(cfg, headers, rows, {"n": cfg.n, "s_max": cfg.s_max, "max_series_diff": worst})
    return 0


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--a", type=float, default=0.0)
    common.add_argument("--b", type=float, default=1.0)
    common.add_argument("--lambda", dest="lam", type=float, default=1.0)
    common.add_argument("--mu", type=float, default=0.5)
    common.add_argument("--n", type=int, default=11)
    common.add_argument("--n-list", type=str, default="25,50,100,200",
                        help="comma-separated product sizes for converge")
    common.add_argument("--s-max", type=int, default=6)
    common.add_argument("--tol", type=float, default=1e-8)
    common.add_argument("--format", dest="fmt", choices=("csv", "json"), default="json")
    common.add_argument("--out", type=str, default=None)
    common.add_argument("--seed", type=int, default=0)

    parser = argparse.ArgumentParser(
        prog="causalprod",
        description="Verification lab for causal rotation products and their limit kernel.")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("coeffs", parents=[common],
                   help="closed-form vs brute-force coefficient tables")
    sub.add_parser("verify", parents=[common], help="run all identity checks")
    sub.add_parser("converge", parents=[common], help="product-to-kernel convergence study")
    sub.add_parser("kernel", parents=[common], help="kernel values on a grid")
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    n_list = tuple(int(tok) for tok in args.n_list.split(",") if tok)
    return RunConfig(a=args.a, b=args.b, lam=args.lam, mu=args.mu, n=args.n,
                     n_list=n_list, s_max=args.s_max, tol=args.tol, fmt=args.fmt,
                     out=args.out, seed=args.seed)


def main(argv: Sequence[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        cfg = config_from_args(args)
    except ValueError as exc:
        sys.stderr.write(f"invalid configuration: {exc}\n")
        return 2
    dispatch = {"coeffs": cmd_coeffs, "verify": cmd_verify,
                "converge": cmd_converge, "kernel": cmd_kernel}
    return dispatch[args.command](cfg)


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Run the full verification battery and collect the artifacts in one directory.

Usage:
    python scripts/full_verification.py [--outdir artifacts] [--lambda L] [--mu M]
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from causalprod import cli


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="artifacts")
    ap.add_argument("--lambda", dest="lam", type=float, default=1.0)
    ap.add_argument("--mu", type=float, default=0.5)
    args = ap.parse_args()

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    common = ["--lambda", str(args.lam), "--mu", str(args.mu)]

    runs = [
        ("coeffs", ["coeffs", "--s-max", "6", "--format", "csv",
                    "--out", str(outdir / "coefficient_tables.csv")]),
        ("verify", ["verify", *common, "--s-max", "6",
                    "--out", str(outdir / "verify_report.json")]),
        ("converge", ["converge", *common, "--n-list", "25,50,100,200",
                      "--format", "csv", "--out", str(outdir / "convergence.csv")]),
        ("kernel", ["kernel", *common, "--n", "11", "--s-max", "30",
                    "--out", str(outdir / "kernel_grid.json")]),
    ]
    worst = 0
    for name, argv in runs:
        code = cli.main(argv)
        print(f"{name:10s} exit={code}")
        worst = max(worst, code)
    print("all artifacts in", outdir)
    return worst


if __name__ == "__main__":
    sys.exit(main())

"""Time the Weyl-orbit kernels: jitted vs plain Python, pruned DFS vs full scan.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--json out.json]
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from kostant import kernels
from kostant.multiplicity import _search_problem
from kostant.rootsys import build_root_system

CASES = [
    # family, rank, lambda, mu, run the full scan too
    ("A", 5, (6, 0, 0, 0, 0), (0, 0, 0, 0, 0), True),
    ("A", 7, (10, 0, 0, 0, 0, 0, 0), (2, 0, 0, 0, 0, 0, 0), True),
    ("B", 5, (7, 0, 0, 0, 0), (2, 0, 0, 0, 2), True),
    ("B", 6, (9, 0, 0, 0, 0, 0), (2, 0, 0, 0, 0, 2), True),
    ("A", 10, (10,) + (0,) * 9, (0,) * 9 + (1,), False),
    ("A", 9, (10,) + (0,) * 8, (0,) * 9, False),
]


def _w(coords) -> str:
    return "+".join(f"{c}w{i}" for i, c in enumerate(coords, start=1) if c) or "0"


def _timed(fn, args, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def bench_case(fam, rank, lam, mu, scan, repeat, python_too=True):
    rs = build_root_system(fam, rank)
    x, thr, signed, _ = _search_problem(rs, lam, mu)
    xa, ta = np.asarray(x, np.int64), np.asarray(thr, np.int64)
    width = 2 * len(x) if signed else len(x)
    cap = 1 << 14
    codes = np.zeros((cap, len(x)), np.int64)
    gaps = np.zeros((cap, len(thr)), np.int64)
    row = {"case": f"{rs.name} lambda={list(lam)} mu={list(mu)}", "short": f"{rs.name} {_w(lam)} / {_w(mu)}"}
    if kernels.HAVE_NUMBA:
        kernels.prune_search(xa, ta, signed, 0, width, codes, gaps)  # compile outside the clock
        row["prune_numba"], row["terms"] = _timed(kernels.prune_search, (xa, ta, signed, 0, width, codes, gaps), repeat)
    if python_too:
        row["prune_python"], row["terms"] = _timed(
            kernels.python_impl(kernels.prune_search), (xa, ta, signed, 0, width, codes, gaps), 1)
    if scan and kernels.HAVE_NUMBA:
        kernels.full_scan(xa, ta, signed, codes, gaps)
        row["scan_numba"], _ = _timed(kernels.full_scan, (xa, ta, signed, codes, gaps), repeat)
    if scan and python_too:
        row["scan_python"], _ = _timed(kernels.python_impl(kernels.full_scan), (xa, ta, signed, codes, gaps), 1)
    return row


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", help="also write results here")
    ap.add_argument("--skip-python", action="store_true", help="jitted kernels only")
    args = ap.parse_args()

    cols = ["prune_numba", "prune_python", "scan_numba", "scan_python"]
    print(f"numba available: {kernels.HAVE_NUMBA}")
    print("best-of times in milliseconds (python columns: one run)")
    print(f"{'case':<34}{'terms':>7}" + "".join(f"{c:>14}" for c in cols))
    rows = []
    for fam, rank, lam, mu, scan in CASES:
        row = bench_case(fam, rank, lam, mu, scan, args.repeat, python_too=not args.skip_python)
        rows.append(row)
        cells = "".join(f"{1e3 * row[c]:>14.3f}" if c in row else f"{'-':>14}" for c in cols)
        print(f"{row['short']:<34}{row.get('terms', 0):>7}{cells}", flush=True)
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=1)


if __name__ == "__main__":
    main()

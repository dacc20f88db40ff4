#!/usr/bin/env python3
"""Recompute every frozen census row and print it next to the expectation.

Usage: python3 scripts/reproduce_tables.py [--jobs N] [--no-cache]

This is the long-form version of `colsym selftest --level full`: it
shows the computed row, the frozen row, and per-row wall time, so a
discrepancy is visible at a glance rather than just counted.
"""
import argparse
import sys
import time

from colsym import goldens
from colsym.cache import cached_provider
from colsym.census import Scope, TilingKind, census, format_census


def frozen_row_str(row: dict[int, int]) -> str:
    return ", ".join(
        f"{k}^{{{c}}}" if c >= 2 else str(k) for k, c in sorted(row.items())
    )


def main() -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--jobs", type=int, default=1)
    ap.add_argument("--no-cache", action="store_true")
    args = ap.parse_args()
    provider = cached_provider(enabled=not args.no_cache, jobs=args.jobs)

    mismatches = 0
    for scope, rows, bounds in (
        (Scope.FULL, goldens.FULL_ROWS, goldens.FULL_BOUNDS),
        (Scope.ROTATION, goldens.ROTATION_ROWS, goldens.ROTATION_BOUNDS),
    ):
        for (p, q, kind), (row, last) in rows.items():
            bound = bounds[(p, q, kind)]
            t0 = time.perf_counter()
            rep = census(
                p, q, kind, scope, bound,
                strategy="both" if scope is Scope.ROTATION else "a",
                jobs=args.jobs, classes_provider=provider,
            )
            dt = time.perf_counter() - t0
            ok, why = goldens.matches_row(rep, row, last)
            mark = "ok  " if ok else "BAD "
            print(f"{mark}{format_census(rep)}   ({dt:.2f}s)")
            print(f"    expected: {frozen_row_str(row)}, shown to {last}")
            if not ok:
                print(f"    mismatch: {why}")
                mismatches += 1

    for (p, q), expect in (
        ((4, 3), goldens.CUBE_FULL_PQ),
        ((3, 5), goldens.ICOSAHEDRON_FULL_PQ),
    ):
        rep = census(p, q, TilingKind.PQ, Scope.FULL, 30, classes_provider=provider)
        got = rep.multiplicities()
        ok = got == expect
        print(f"{'ok  ' if ok else 'BAD '}{format_census(rep)}")
        if not ok:
            print(f"    expected {expect}, computed {got}")
            mismatches += 1

    print(f"\n{mismatches} mismatching rows" if mismatches else "\nall rows match")
    return 1 if mismatches else 0


if __name__ == "__main__":
    sys.exit(main())

#!/usr/bin/env python3
"""Run every invariant suite and record case counts, failures and wall time.

    python3 scripts/run_suites.py --count 1000 --seed 7 --out results/suites.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass
from pathlib import Path

from prophopf.axioms import SUITES, FuzzConfig, run_suite


@dataclass
class SuiteRun:
    name: str
    cases: int
    failures: int
    seconds: float
    first_failure: str | None = None


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--count", type=int, default=1000)
    ap.add_argument("--max-nodes", type=int, default=30)
    ap.add_argument("--suite", action="append", choices=SUITES, help="repeatable; default is all")
    ap.add_argument("--out", type=Path)
    args = ap.parse_args()

    cfg = FuzzConfig(seed=args.seed, max_nodes=args.max_nodes, count=args.count)
    runs = []
    for name in args.suite or SUITES:
        start = time.perf_counter()
        report = run_suite(name, cfg)
        elapsed = time.perf_counter() - start
        first = str(report.failures[0]) if report.failures else None
        runs.append(SuiteRun(name, report.cases, len(report.failures), round(elapsed, 3), first))
        print(f"{name:14s} cases={report.cases:6d} failures={len(report.failures):3d} {elapsed:7.2f}s")
        if first:
            print(f"    {first}")

    if args.out:
        args.out.parent.mkdir(parents=True, exist_ok=True)
        payload = {"config": asdict(cfg), "runs": [asdict(r) for r in runs]}
        args.out.write_text(json.dumps(payload, indent=2) + "\n")
    return 1 if any(r.failures for r in runs) else 0


if __name__ == "__main__":
    raise SystemExit(main())

#!/usr/bin/env python3
"""Compare the two normalizers across node budgets.

For each budget, draw random well-typed terms, normalize them both ways, and
report agreement, mean term size, mean canonical size and time per engine.
"""

from __future__ import annotations

import argparse
import statistics
import time
from dataclasses import dataclass

from prophopf.axioms import FuzzConfig, case_seed, random_term
from prophopf.canonical import normalize_eval, normalize_rewrite
from prophopf.hterm import node_count
from prophopf.syntax import print_term


@dataclass(frozen=True)
class SweepConfig:
    seed: int = 1
    terms: int = 2000
    budgets: tuple[int, ...] = (10, 20, 30, 60)
    max_boundary: int = 4


def sweep(cfg: SweepConfig) -> bool:
    ok = True
    print(f"{'nodes':>5} {'terms':>6} {'agree':>6} {'mean size':>9} {'mean s(f)':>9} {'eval ms':>8} {'rewrite ms':>10}")
    for budget in cfg.budgets:
        sizes, canon, t_eval, t_rw, agree = [], [], 0.0, 0.0, 0
        for k in range(cfg.terms):
            term = random_term(FuzzConfig(case_seed(cfg.seed, k), budget, cfg.max_boundary))
            start = time.perf_counter()
            a = normalize_eval(term)
            mid = time.perf_counter()
            b = normalize_rewrite(term)
            t_eval += mid - start
            t_rw += time.perf_counter() - mid
            sizes.append(node_count(term))
            canon.append(a.size)
            if a == b:
                agree += 1
            elif ok:
                ok = False
                print(f"  disagreement: {print_term(term)}\n    eval    {a}\n    rewrite {b}")
        print(
            f"{budget:5d} {cfg.terms:6d} {agree:6d} {statistics.mean(sizes):9.1f} {statistics.mean(canon):9.2f}"
            f" {1000 * t_eval / cfg.terms:8.3f} {1000 * t_rw / cfg.terms:10.3f}"
        )
    return ok


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seed", type=int, default=SweepConfig.seed)
    ap.add_argument("--terms", type=int, default=SweepConfig.terms)
    ap.add_argument("--budgets", type=int, nargs="+", default=list(SweepConfig.budgets))
    args = ap.parse_args()
    return 0 if sweep(SweepConfig(args.seed, args.terms, tuple(args.budgets))) else 1


if __name__ == "__main__":
    raise SystemExit(main())

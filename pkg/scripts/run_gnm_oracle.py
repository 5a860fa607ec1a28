#!/usr/bin/env python3
"""Solve seeded quarter-dense instances and compare against the exact answer."""

import argparse
import time

from quadmis import exact_mis, gen_gnm, gnm_edge_count, greedy_min_degree, resolve_config, solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=50)
    ap.add_argument("--seeds", type=int, default=5)
    ap.add_argument("--time-limit", type=float, default=120.0)
    ap.add_argument("--workers", type=int, default=None)
    args = ap.parse_args()

    m = gnm_edge_count(args.n)
    print(f"instance        solver  exact  greedy  seconds")
    hits = 0
    for seed in range(args.seeds):
        g = gen_gnm(args.n, m, seed)
        t0 = time.perf_counter()
        rep = solve(g, resolve_config(g, preset="gnm", time_limit=args.time_limit), workers=args.workers)
        dt = time.perf_counter() - t0
        optimum = exact_mis(g).optimum_size
        greedy = greedy_min_degree(g).size
        hits += rep.best_size == optimum
        print(f"gnm({args.n},{m})#{seed}  {rep.best_size:>5}  {optimum:>5}  {greedy:>6}  {dt:7.1f}")
    print(f"optimum matched on {hits}/{args.seeds} instances")


if __name__ == "__main__":
    main()

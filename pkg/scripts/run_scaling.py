#!/usr/bin/env python3
"""Check that per-iteration cost tracks edge count, not node count squared."""

import argparse
import tracemalloc

import numpy as np

from quadmis import SolverConfig, gen_gnm, gnm_edge_count, solve


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--sizes", type=int, nargs="+", default=[500, 1000, 2000])
    ap.add_argument("--iterations", type=int, default=12)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    print("     n        m   ms/iter   peak-kwords   8(n+m)-kwords")
    per_iter, ms = [], []
    for n in args.sizes:
        m = gnm_edge_count(n)
        g = gen_gnm(n, m, 0)
        g.adjacency_csr()
        # a step too small to move anything isolates the per-iteration cost
        cfg = SolverConfig(gamma=float(n), alpha=1e-9, iterations=args.iterations, batch_size=32, seed=0)
        best = min(solve(g, cfg, workers=1).wall_time_ms for _ in range(args.repeats))
        fresh = gen_gnm(n, m, 1)
        tracemalloc.start()
        solve(fresh, SolverConfig(gamma=float(n), alpha=1e-9, iterations=5, batch_size=32, seed=0), workers=1)
        _, peak = tracemalloc.get_traced_memory()
        tracemalloc.stop()
        per_iter.append(best / args.iterations)
        ms.append(m)
        print(
            f"{n:>6} {m:>8}   {per_iter[-1]:7.2f}   {peak / 8 / 1e3:11.0f}"
            f"   {8 * (n + m) / 1e3:13.0f}"
        )
    slope = float(np.polyfit(np.log(ms), np.log(per_iter), 1)[0])
    print(f"log-log slope of time vs edges: {slope:.3f} (1.0 = edge-proportional)")


if __name__ == "__main__":
    main()

#!/usr/bin/env python3
"""Benchmark the compiled kernel against the numpy fallback.

Both backends run the same fused saturation loop on identical inputs; the
workload is the standard census setting (ER / BA, 1000 nodes, average degree
6, 10,000 walkers on 4 seed nodes, p = 0.4).

Usage: python benchmarks/bench_backends.py [--sims N]
"""

import argparse
import importlib
import time

import numpy as np

from diffwalk import _kernel_py
from diffwalk.dynamics import SimConfig, draw_seed_nodes, place_walkers
from diffwalk.graphs import GraphSpec, generate, giant_component


def load_backends():
    backends = {"python": _kernel_py}
    try:
        backends["c"] = importlib.import_module("diffwalk._kernel")
    except ImportError:
        print("compiled kernel not available; benchmarking the fallback only")
    return backends


def bench(kernel, g, cfg, sims: int) -> tuple[float, int]:
    deg = g.degrees.astype(np.float64)
    inv_deg = 1.0 / deg
    dx = deg - deg.mean()
    sxx = float(dx @ dx)
    ticks = 0
    start = time.perf_counter()
    for s in range(sims):
        seeds = draw_seed_nodes(g, SimConfig(
            cfg.diffusion_rate, cfg.total_walkers, cfg.seed_node_count, rng_seed=s))
        masses0 = place_walkers(g, seeds, cfg.total_walkers).masses
        _, traj, _ = kernel.run_saturation(
            g.indptr, g.indices, inv_deg, dx, sxx, masses0,
            cfg.diffusion_rate, cfg.r2_threshold, cfg.max_steps)
        ticks += traj.shape[0]
    return time.perf_counter() - start, ticks


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--sims", type=int, default=200,
                        help="simulations per (backend, model) cell")
    args = parser.parse_args()

    backends = load_backends()
    cfg = SimConfig(0.4, 10_000.0, 4)
    print(f"{'model':<6} {'backend':<8} {'sims':>5} {'ticks':>8} "
          f"{'wall s':>8} {'ticks/s':>12}")
    walls = {}
    for model in ("er", "ba"):
        g, _ = giant_component(generate(GraphSpec(model, 1000, 6.0, rng_seed=1)))
        for name, kernel in backends.items():
            wall, ticks = bench(kernel, g, cfg, args.sims)
            walls[(model, name)] = wall
            print(f"{model:<6} {name:<8} {args.sims:>5} {ticks:>8} "
                  f"{wall:>8.3f} {ticks / wall:>12.0f}")
    if len(backends) == 2:
        for model in ("er", "ba"):
            speedup = walls[(model, "python")] / walls[(model, "c")]
            print(f"{model}: compiled kernel speedup x{speedup:.1f}")


if __name__ == "__main__":
    main()

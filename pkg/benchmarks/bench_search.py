#!/usr/bin/env python3
"""Benchmark the cover-search kernels: compiled extension vs pure Python.

Runs the full retracted-cover enumeration on a few standard graphs through
both kernels and reports wall time and node counts (which must match).

Usage: python benchmarks/bench_search.py [--heavy]
"""

import argparse
import time

from geocover import _search_py, build_standard, two_subdivision
from geocover.cover import _SearchSpace, _kernel
from geocover.paths import PathPool

CASES = [
    ("cycle(3)", "cycle", [3], 3),
    ("complete(4)", "complete", [4], 4),
    ("complete_bipartite(2,3)", "complete_bipartite", [2, 3], 3),
    ("sawtooth(3)", "sawtooth", [3], 2),
]
HEAVY = [
    ("complete_bipartite(3,3)", "complete_bipartite", [3, 3], 3),
    ("complete(5)", "complete", [5], 3),
]


def run(backend, sp, max_size, roots):
    t0 = time.perf_counter()
    results, nodes = backend.run_search(
        sp.num_segments, sp.num_vertices, sp.seg_masks, sp.vert_masks,
        sp.path_segs, sp.ends, sp.inc, sp.high_deg, sp.vert_inc_mask,
        sp.seg_paths, sp.max_len, max_size, 10 ** 9, roots)
    return sorted(results), nodes, time.perf_counter() - t0


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--heavy", action="store_true",
                    help="include the larger instances (minutes in pure mode)")
    args = ap.parse_args()
    cases = CASES + (HEAVY if args.heavy else [])
    if _kernel is None:
        print("compiled kernel not built; showing pure kernel only")
    header = f"{'instance':28} {'covers':>8} {'nodes':>10} {'pure s':>9} {'compiled s':>11} {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, tag, params, m in cases:
        sub = two_subdivision(build_standard(tag, params))
        pool = PathPool(sub)
        sp = _SearchSpace(pool, sub)
        roots = list(range(len(pool)))
        pure_res, pure_nodes, pure_t = run(_search_py, sp, m, roots)
        if _kernel is not None:
            comp_res, comp_nodes, comp_t = run(_kernel, sp, m, roots)
            assert comp_res == pure_res and comp_nodes == pure_nodes, name
            print(f"{name:28} {len(pure_res):>8} {pure_nodes:>10} "
                  f"{pure_t:>9.3f} {comp_t:>11.3f} {pure_t / max(comp_t, 1e-9):>7.1f}x")
        else:
            print(f"{name:28} {len(pure_res):>8} {pure_nodes:>10} {pure_t:>9.3f}")


if __name__ == "__main__":
    main()

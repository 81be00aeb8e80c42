#!/usr/bin/env python3
"""Compare the pure-Python and compiled kernels on representative workloads.

Run from the repository root after building the extension:

    python3 benchmarks/bench_kernels.py

Each workload is timed against both kernel backends through the same
driver code, so the ratio isolates the kernel cost (matching counts,
matching enumeration, forcing subset scans).
"""

import time

from matchforce import gen_complete_multipartite, gen_h_k, gen_random
from matchforce._core import COMPILED_AVAILABLE, pure
from matchforce.forcing import (
    _four_cycle_triples,
    _greedy_forcing_set,
    _greedy_four_cycle_packing,
)
from matchforce.graph import Edge, PerfectMatching

if COMPILED_AVAILABLE:
    from matchforce._core import _speedups


def profile_with_kernel(g, kernel_cls):
    """Forcing number of every matching, through an explicit kernel."""
    kern = kernel_cls(g.rows)
    flats = kern.enumerate_pms(g.full_mask, 10**6)
    out = []
    for flat in flats:
        m = PerfectMatching(
            tuple(Edge(flat[i], flat[i + 1]) for i in range(0, len(flat), 2))
        )
        edge_masks = [e.mask for e in m.edges]
        triples = _four_cycle_triples(g, m)
        lower = _greedy_four_cycle_packing(triples)
        upper = len(_greedy_forcing_set(g, m, kern, edge_masks, triples))
        optimum = upper
        for size in range(lower, upper):
            found, _ = kern.forcing_scan(g.full_mask, edge_masks, size)
            if found is not None:
                optimum = size
                break
        out.append(optimum)
    return out


def count_sweep(graphs, kernel_cls):
    """Matching counts over a batch of graphs (the corpus-scan pattern)."""
    total = 0
    for g in graphs:
        kern = kernel_cls(g.rows)
        total += kern.count2(g.full_mask)
        for v in range(g.order):
            for w in range(v + 1, g.order):
                total += kern.count2(g.full_mask ^ (1 << v) ^ (1 << w))
    return total


def timed(fn, *args):
    start = time.perf_counter()
    result = fn(*args)
    return result, time.perf_counter() - start


def main():
    if not COMPILED_AVAILABLE:
        print("compiled kernels unavailable; build with `pip install -e .`")
        return

    workloads = [
        ("profile K_{6,6} (720 matchings)", profile_with_kernel,
         gen_complete_multipartite([6, 6])),
        ("profile H(7,3) (2792 matchings, order 14)", profile_with_kernel,
         gen_h_k(7, 3).graph),
        ("profile random(12, 1/2, seed 3)", profile_with_kernel,
         gen_random(12, "1/2", 3)),
        ("pair-deletion count sweep, 300 x order 10", count_sweep,
         [gen_random(10, "1/2", s) for s in range(300)]),
    ]

    print(f"{'workload':46s} {'pure':>9s} {'compiled':>9s} {'speedup':>8s}")
    for name, fn, arg in workloads:
        res_py, t_py = timed(fn, arg, pure.Kernel)
        res_cy, t_cy = timed(fn, arg, _speedups.Kernel)
        assert res_py == res_cy, f"backend mismatch on {name}"
        print(f"{name:46s} {t_py:8.3f}s {t_cy:8.3f}s {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()

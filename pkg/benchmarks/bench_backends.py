"""Benchmark the numba kernels against the pure Python/numpy fallback.

Both backends are imported directly (bypassing the env-flag dispatch) and
timed on the package's hot paths: witness searches, maximal-independent-set
enumeration, powerset oracle sweeps and fixed-length cycle detection.

Run:  python benchmarks/bench_backends.py
"""

from __future__ import annotations

import time

import numpy as np

import reledge._kernels_numba as nb
import reledge._kernels_numpy as py
from reledge.generate import random_formula, random_graph
from reledge.kernels import _masks
from reledge.reductions import build_sat_graph, eliminate_bad_pairs, sat_to_23sat


def timed(fn, repeats):
    fn()  # warmup / JIT
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def report(name, py_fn, nb_fn, repeats=5):
    t_py = timed(py_fn, repeats)
    t_nb = timed(nb_fn, repeats)
    print(f"{name:<34} numpy {t_py * 1000:9.2f} ms   numba {t_nb * 1000:9.2f} ms   "
          f"speedup {t_py / t_nb:7.1f}x")


def pipeline_graph(num_vars, num_clauses, seed):
    f = random_formula(num_vars, num_clauses, seed, 2, 3)
    split, _ = sat_to_23sat(f)
    clean, _ = eliminate_bad_pairs(split)
    g, m = build_sat_graph(clean)
    return g, m


def main():
    print(f"{'kernel':<34} {'fallback':>15}   {'numba':>16}")

    # relating-witness search on a mid-sized reduction graph
    g, m = pipeline_graph(5, 4, 12345)
    adj, adjc, full = _masks(g)
    a, ac = np.array(adj, dtype=np.uint64), np.array(adjc, dtype=np.uint64)
    hub = m.hub - 1
    forbidden = adjc[hub]
    cand = [v for v in range(g.num_vertices) if not (forbidden >> v) & 1]
    cand_arr = np.array(cand, dtype=np.int64)
    target = adj[hub]
    report(
        f"shed search ({g.num_vertices} vertices)",
        lambda: py.find_witness_set(adj, adjc, cand, 0, target, 0, 0, 1 << 26),
        lambda: nb.find_witness_set(a, ac, cand_arr, np.uint64(0), np.uint64(target),
                                    np.uint64(0), np.uint64(0), 1 << 26),
    )

    # the same search in unsatisfiable mode: full sweep of the space
    report(
        "exhaustive no-witness sweep",
        lambda: py.find_witness_set(adj, adjc, cand, 0, full, 0, 0, 1 << 26),
        lambda: nb.find_witness_set(a, ac, cand_arr, np.uint64(0), np.uint64(full),
                                    np.uint64(0), np.uint64(0), 1 << 26),
    )

    # maximal independent set enumeration on a random graph
    gr = random_graph(20, 48, 999)
    adj2, adjc2, full2 = _masks(gr)
    a2, ac2 = np.array(adj2, dtype=np.uint64), np.array(adjc2, dtype=np.uint64)
    report(
        "MIS enumeration (20 vertices)",
        lambda: py.enumerate_mis(adj2, adjc2, 20, full2, 1 << 20, 1 << 26),
        lambda: nb.enumerate_mis(a2, ac2, 20, np.uint64(full2), 1 << 20, 1 << 26),
    )

    # powerset oracle sweeps
    g3 = random_graph(16, 30, 321)
    adj3, adjc3, _ = _masks(g3)
    a3, ac3 = np.array(adj3, dtype=np.uint64), np.array(adjc3, dtype=np.uint64)
    x, y = g3.edges()[0]
    report(
        "relating oracle sweep (2^16 sets)",
        lambda: py.oracle_relating(adj3, adjc3, 16, x - 1, y - 1),
        lambda: nb.oracle_relating(a3, ac3, 16, x - 1, y - 1),
    )
    report(
        "well-covered oracle sweep",
        lambda: py.oracle_well_covered(adj3, adjc3, 16),
        lambda: nb.oracle_well_covered(a3, ac3, 16),
    )

    # fixed-length cycle detection on a denser graph
    g4 = random_graph(24, 60, 555)
    adj4, _, _ = _masks(g4)
    a4 = np.array(adj4, dtype=np.uint64)
    report(
        "8-cycle detection (24 vertices)",
        lambda: py.has_cycle(adj4, 24, 8),
        lambda: nb.has_cycle(a4, 24, 8),
    )


if __name__ == "__main__":
    main()

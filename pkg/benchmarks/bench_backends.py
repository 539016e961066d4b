"""Compare the compiled and pure-Python exact-solver kernels.

Runs the same workloads through both backends and prints a timing table.
Invoke from the repository root:

    python3 benchmarks/bench_backends.py [--repeat N]

The compiled backend must be importable for a comparison; if it is not,
the script says so and exits with status 1.
"""

from __future__ import annotations

import argparse
import sys
import time

from hypercolor import _fallback
from hypercolor.core import one_intersection_graph
from hypercolor.exact import _adjacency_matrix
from hypercolor.gen import complete_graph, random_hypergraph

try:
    from hypercolor import _kernels
except ImportError:
    _kernels = None


def _graph_workload(n_vertices: int):
    g = one_intersection_graph(complete_graph(n_vertices))
    adj, deg = _adjacency_matrix(g)
    return g.m, adj, deg


def _bench(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3, help="take the best of N runs")
    args = parser.parse_args()

    if _kernels is None:
        print("compiled backend not available; nothing to compare", file=sys.stderr)
        return 1

    m7, adj7, deg7 = _graph_workload(7)
    m8, adj8, deg8 = _graph_workload(8)
    rh = random_hypergraph(18, 26, 2, 4, seed=2024)

    tasks = [
        (
            "graph 6-coloring of the K7 intersection graph (infeasible)",
            lambda k: k.graph_color_k(m7, adj7, deg7, 6),
        ),
        (
            "graph 7-coloring of the K7 intersection graph",
            lambda k: k.graph_color_k(m7, adj7, deg7, 7),
        ),
        (
            "graph 6-coloring of the K8 intersection graph (infeasible)",
            lambda k: k.graph_color_k(m8, adj8, deg8, 6),
        ),
        (
            "hypergraph 2-coloring, random n=18 m=26",
            lambda k: k.hypergraph_color_k(rh.n, rh.edges, 2),
        ),
    ]

    print(f"{'task':<58} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, run in tasks:
        py_out = run(_fallback)
        cy_out = run(_kernels)
        if py_out != cy_out:
            print(f"{label}: BACKEND MISMATCH {py_out!r} vs {cy_out!r}", file=sys.stderr)
            return 1
        t_py = _bench(lambda: run(_fallback), args.repeat)
        t_cy = _bench(lambda: run(_kernels), args.repeat)
        ratio = t_py / t_cy if t_cy > 0 else float("inf")
        print(f"{label:<58} {t_py * 1e3:>8.2f}ms {t_cy * 1e3:>8.2f}ms {ratio:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())

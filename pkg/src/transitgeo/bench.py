"""Benchmark the compiled kernel against the pure-Python fallback.

Run as ``python -m transitgeo.bench``.  Exercises the hot kernels on the
same seeded workloads through both backends and prints the speedups.
"""

from __future__ import annotations

import argparse
import time

from . import _kernel_py
from .core import random_transit_function
from .harness import enumerate_connected_graphs

try:
    from . import _kernel
except ImportError:  # pragma: no cover - compiled backend absent
    _kernel = None


def _time(fn, repeats: int = 1) -> float:
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def _workloads(n_transit: int, samples: int, n_graph: int):
    tables = []
    for i in range(samples):
        R = random_transit_function(n_transit, 97 + i, (0.15, 0.3, 0.5)[i % 3])
        tables.append(list(R.table()))
    graphs = [list(g.adjacency) for g in enumerate_connected_graphs(n_graph)]

    def axioms(kernel):
        for t in tables:
            for fn in ("axiom_b1", "axiom_m", "axiom_j0", "axiom_ch", "axiom_p", "axiom_k", "axiom_cg"):
                getattr(kernel, fn)(n_transit, t)

    def geometry(kernel):
        for t in tables:
            fam = sorted(kernel.convex_sets_closure(n_transit, t), key=lambda m: (m.bit_count(), m))
            kernel.family_geometry(n_transit, fam)

    def graph_tables(kernel):
        for adj in graphs:
            d = kernel.bfs_dist(n_graph, adj)
            kernel.interval_table(n_graph, adj, d)
            kernel.toll_table(n_graph, adj)
            kernel.wtoll_table(n_graph, adj)
            kernel.induced_path_tables(n_graph, adj)

    def walk_oracles(kernel):
        for adj in graphs:
            kernel.toll_walk_table(n_graph, adj)
            kernel.wtoll_walk_table(n_graph, adj)
            kernel.allpaths_walk_table(n_graph, adj)

    def canon(kernel):
        for adj in graphs:
            kernel.canon_key(n_graph, adj)

    return {
        f"axiom checks ({samples} tables, n={n_transit})": axioms,
        f"convexity + geometry ({samples} tables, n={n_transit})": geometry,
        f"graph transit tables ({len(graphs)} graphs, n={n_graph})": graph_tables,
        f"walk oracles ({len(graphs)} graphs, n={n_graph})": walk_oracles,
        f"canonical labeling ({len(graphs)} graphs, n={n_graph})": canon,
    }


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--samples", type=int, default=400, help="random transit functions")
    parser.add_argument("--n-transit", type=int, default=6)
    parser.add_argument("--n-graph", type=int, default=6)
    parser.add_argument("--repeats", type=int, default=2)
    args = parser.parse_args(argv)

    workloads = _workloads(args.n_transit, args.samples, args.n_graph)
    width = max(len(name) for name in workloads)
    print(f"{'workload':<{width}}  {'pure py':>9}  {'compiled':>9}  speedup")
    for name, job in workloads.items():
        py_time = _time(lambda: job(_kernel_py), args.repeats)
        if _kernel is None:
            print(f"{name:<{width}}  {py_time:>8.3f}s  {'-':>9}  (extension not built)")
            continue
        c_time = _time(lambda: job(_kernel), args.repeats)
        print(f"{name:<{width}}  {py_time:>8.3f}s  {c_time:>8.3f}s  {py_time / c_time:>6.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())

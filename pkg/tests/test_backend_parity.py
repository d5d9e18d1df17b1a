"""The compiled kernel and the pure-Python kernel must be interchangeable."""

import random

import pytest

from transitgeo import _kernel_py
from transitgeo.core import random_transit_function
from transitgeo.oracles import _labeled_graphs, _rows_connected

_kernel = pytest.importorskip("transitgeo._kernel")

TRANSIT_FUNCS = [
    "axiom_b1",
    "axiom_b3",
    "axiom_m",
    "axiom_j0",
    "axiom_ch",
    "axiom_p",
    "axiom_aprime",
    "axiom_k",
    "axiom_cg",
]

GRAPH_TABLE_FUNCS = [
    "toll_table",
    "wtoll_table",
    "toll_walk_table",
    "wtoll_walk_table",
    "allpaths_walk_table",
    "induced_path_tables",
]


def _random_rows(n, rng, p=0.45):
    rows = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
    return rows


@pytest.mark.parametrize("seed", range(6))
def test_transit_kernels_agree(seed):
    rng = random.Random(seed)
    for _ in range(40):
        n = rng.randint(1, 7)
        R = random_transit_function(n, rng.randrange(10**6), rng.choice([0.1, 0.3, 0.6]))
        table = list(R.table())
        for fn in TRANSIT_FUNCS:
            assert getattr(_kernel, fn)(n, table) == getattr(_kernel_py, fn)(n, table), fn
        seed_mask = rng.randrange(1 << n)
        assert _kernel.hull_mask(n, table, seed_mask) == _kernel_py.hull_mask(n, table, seed_mask)
        scan_c = _kernel.convex_sets_scan(n, table)
        scan_p = _kernel_py.convex_sets_scan(n, table)
        closure_c = _kernel.convex_sets_closure(n, table)
        closure_p = _kernel_py.convex_sets_closure(n, table)
        assert scan_c == scan_p
        assert closure_c == closure_p
        assert sorted(scan_c) == sorted(closure_c)
        fam = sorted(set(scan_c), key=lambda m: (m.bit_count(), m))
        assert _kernel.family_geometry(n, fam) == _kernel_py.family_geometry(n, fam)


def test_eb1_kernels_agree():
    rng = random.Random(9)
    for _ in range(60):
        n = rng.randint(1, 5)
        R = random_transit_function(n, rng.randrange(10**6), 0.4)
        table = list(R.table())
        btable = [
            table[u * n + v] & ~((1 << u) | (1 << v)) for u in range(n) for v in range(n)
        ]
        assert _kernel.eb1_witness(n, btable) == _kernel_py.eb1_witness(n, btable)


def test_graph_kernels_agree_exhaustively_small():
    for n in range(2, 5):
        for rows in _labeled_graphs(n):
            if not _rows_connected(n, rows):
                continue
            rows = list(rows)
            d_c = _kernel.bfs_dist(n, rows)
            assert d_c == _kernel_py.bfs_dist(n, rows)
            assert _kernel.interval_table(n, rows, d_c) == _kernel_py.interval_table(n, rows, d_c)
            assert _kernel.ptolemy_witness(n, d_c) == _kernel_py.ptolemy_witness(n, d_c)
            for fn in GRAPH_TABLE_FUNCS:
                assert getattr(_kernel, fn)(n, rows) == getattr(_kernel_py, fn)(n, rows), fn
            assert _kernel.canon_key(n, rows) == _kernel_py.canon_key(n, rows)


@pytest.mark.parametrize("n", [6, 7, 8])
def test_graph_kernels_agree_random(n):
    rng = random.Random(n)
    for _ in range(25):
        rows = _random_rows(n, rng)
        if not _rows_connected(n, rows):
            continue
        d_c = _kernel.bfs_dist(n, rows)
        assert d_c == _kernel_py.bfs_dist(n, rows)
        assert _kernel.interval_table(n, rows, d_c) == _kernel_py.interval_table(n, rows, d_c)
        assert _kernel.ptolemy_witness(n, d_c) == _kernel_py.ptolemy_witness(n, d_c)
        for fn in GRAPH_TABLE_FUNCS:
            assert getattr(_kernel, fn)(n, rows) == getattr(_kernel_py, fn)(n, rows), fn
        assert _kernel.canon_key(n, rows) == _kernel_py.canon_key(n, rows)


def test_wide_ground_sets_route_to_pure_backend():
    # beyond one machine word the dispatcher must fall back transparently
    from transitgeo import _backend
    from transitgeo.core import GroundSet, minimal_transit_function
    from transitgeo.convexity import hull
    from transitgeo.core import Subset

    R = minimal_transit_function(GroundSet(70))
    assert _backend.axiom_b1(70, R.table()) is None
    assert _backend.axiom_m(70, R.table()) is None
    h = hull(R, Subset(R.ground, (1 << 69) | 1))
    assert h.bits == (1 << 69) | 1


def test_canon_key_invariant_under_relabeling():
    rng = random.Random(3)
    for _ in range(50):
        n = rng.randint(2, 7)
        rows = _random_rows(n, rng)
        perm = list(range(n))
        rng.shuffle(perm)
        relabeled = [0] * n
        for u in range(n):
            m = rows[u]
            while m:
                low = m & -m
                relabeled[perm[u]] |= 1 << perm[low.bit_length() - 1]
                m ^= low
        assert _kernel.canon_key(n, rows) == _kernel.canon_key(n, relabeled)
        assert _kernel_py.canon_key(n, rows) == _kernel_py.canon_key(n, relabeled)

"""Kernel backend selection.

The compiled extension ``transitgeo._kernel`` is preferred when importable;
``TG_BACKEND=py`` or ``TG_BACKEND=c`` forces a choice.  Ground sets larger
than 64 elements always route to the pure-Python twin, whose masks are
unbounded integers.
"""

import os

from . import _kernel_py

_choice = os.environ.get("TG_BACKEND", "").strip().lower()
if _choice == "py":
    _impl = _kernel_py
elif _choice == "c":
    from . import _kernel as _impl  # noqa: F401  (raises if unavailable)
else:
    try:
        from . import _kernel as _impl
    except ImportError:
        _impl = _kernel_py

BACKEND = _impl.BACKEND_NAME

_WORD = 64


def _pick(n):
    return _impl if n <= _WORD else _kernel_py


def axiom_b1(n, table):
    return _pick(n).axiom_b1(n, table)


def axiom_b3(n, table):
    return _pick(n).axiom_b3(n, table)


def axiom_m(n, table):
    return _pick(n).axiom_m(n, table)


def axiom_j0(n, table):
    return _pick(n).axiom_j0(n, table)


def axiom_ch(n, table):
    return _pick(n).axiom_ch(n, table)


def axiom_p(n, table):
    return _pick(n).axiom_p(n, table)


def axiom_aprime(n, table):
    return _pick(n).axiom_aprime(n, table)


def axiom_k(n, table):
    return _pick(n).axiom_k(n, table)


def axiom_cg(n, table):
    return _pick(n).axiom_cg(n, table)


def hull_mask(n, table, seed):
    return _pick(n).hull_mask(n, table, seed)


def convex_sets_scan(n, table):
    return _pick(n).convex_sets_scan(n, table)


def convex_sets_closure(n, table):
    return _pick(n).convex_sets_closure(n, table)


def family_geometry(n, fam_sorted):
    return _pick(n).family_geometry(n, fam_sorted)


def bfs_dist(n, adj):
    return _pick(n).bfs_dist(n, adj)


def interval_table(n, adj, dist):
    return _pick(n).interval_table(n, adj, dist)


def toll_table(n, adj):
    return _pick(n).toll_table(n, adj)


def wtoll_table(n, adj):
    return _pick(n).wtoll_table(n, adj)


def toll_walk_table(n, adj):
    return _pick(n).toll_walk_table(n, adj)


def wtoll_walk_table(n, adj):
    return _pick(n).wtoll_walk_table(n, adj)


def allpaths_walk_table(n, adj):
    return _pick(n).allpaths_walk_table(n, adj)


def induced_path_tables(n, adj):
    return _pick(n).induced_path_tables(n, adj)


def eb1_witness(n, btable):
    return _pick(n).eb1_witness(n, btable)


def ptolemy_witness(n, dist):
    return _pick(n).ptolemy_witness(n, dist)


def canon_key(n, adj):
    return _pick(n).canon_key(n, adj)

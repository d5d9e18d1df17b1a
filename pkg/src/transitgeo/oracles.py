"""Independent brute-force oracles.

These deliberately avoid the production algorithms: walk-position dynamic
programming instead of component analysis for toll intervals, simple-path
enumeration instead of block trees, vertex-deletion connectivity instead of
block-cut trees, subset scans instead of elimination orderings, and orbit
counting instead of canonical augmentation.  They are test collateral and
are also reachable from the verification harness.
"""

from __future__ import annotations

import itertools
from math import comb, factorial
from typing import Optional

from . import _backend
from .core import Subset, TransitFunction
from .errors import Disconnected
from .graphs import Graph


def toll_by_walks(g: Graph) -> TransitFunction:
    """Toll intervals by positional walk enumeration (length <= 2n)."""
    if not g.is_connected():
        raise Disconnected("toll oracle requires a connected graph")
    return TransitFunction(g.ground, _backend.toll_walk_table(g.n, list(g.adjacency)))


def weak_toll_by_walks(g: Graph) -> TransitFunction:
    """Weak-toll intervals by attachment-wise walk enumeration."""
    if not g.is_connected():
        raise Disconnected("weak-toll oracle requires a connected graph")
    return TransitFunction(g.ground, _backend.wtoll_walk_table(g.n, list(g.adjacency)))


def allpaths_by_enumeration(g: Graph) -> TransitFunction:
    """All-paths intervals by exhaustive simple-path DFS."""
    if not g.is_connected():
        raise Disconnected("all-paths oracle requires a connected graph")
    return TransitFunction(g.ground, _backend.allpaths_walk_table(g.n, list(g.adjacency)))


def cutvertex_by_deletion(g: Graph) -> TransitFunction:
    """Cut-vertex intervals by per-vertex deletion connectivity."""
    if not g.is_connected():
        raise Disconnected("cut-vertex oracle requires a connected graph")
    n = g.n
    table = [0] * (n * n)
    for u in range(n):
        table[u * n + u] = 1 << u

    def separated(u: int, v: int, x: int) -> bool:
        blocked = 1 << x
        seen = 1 << u
        frontier = seen
        while frontier:
            reach = 0
            for y in Subset(g.ground, frontier):
                reach |= g.adjacency[y]
            frontier = reach & ~seen & ~blocked
            seen |= frontier
        return not (seen >> v) & 1

    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            for x in range(n):
                if x != u and x != v and separated(u, v, x):
                    mask |= 1 << x
            table[u * n + v] = mask
            table[v * n + u] = mask
    return TransitFunction(g.ground, table)


def induces_cycle(g: Graph, mask: int) -> bool:
    """True iff the vertices of mask induce a (chordless) cycle."""
    k = mask.bit_count()
    if k < 3:
        return False
    for v in Subset(g.ground, mask):
        if (g.adjacency[v] & mask).bit_count() != 2:
            return False
    sub = g.induced(mask)
    return sub.is_connected()


def chordal_by_subset_scan(g: Graph) -> Optional[int]:
    """First vertex mask inducing a cycle of length >= 4; None if chordal."""
    for mask in range(1 << g.n):
        if mask.bit_count() >= 4 and induces_cycle(g, mask):
            return mask
    return None


def hole_by_subset_scan(g: Graph) -> Optional[int]:
    """First vertex mask inducing a cycle of length >= 5; None if hole-free."""
    for mask in range(1 << g.n):
        if mask.bit_count() >= 5 and induces_cycle(g, mask):
            return mask
    return None


def _labeled_graphs(n: int):
    """All labeled simple graphs on n vertices as adjacency rows."""
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for bits in range(1 << len(pairs)):
        rows = [0] * n
        for i, (u, v) in enumerate(pairs):
            if (bits >> i) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
        yield rows


def _rows_connected(n: int, rows) -> bool:
    seen = 1
    frontier = 1
    while frontier:
        reach = 0
        m = frontier
        while m:
            low = m & -m
            reach |= rows[low.bit_length() - 1]
            m ^= low
        frontier = reach & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def _isomorphic(n: int, rows_a, rows_b) -> bool:
    if sorted(r.bit_count() for r in rows_a) != sorted(r.bit_count() for r in rows_b):
        return False
    for perm in itertools.permutations(range(n)):
        image = [0] * n
        good = True
        for u in range(n):
            row = 0
            m = rows_a[u]
            while m:
                low = m & -m
                row |= 1 << perm[low.bit_length() - 1]
                m ^= low
            image[perm[u]] = row
        for u in range(n):
            if image[u] != rows_b[u]:
                good = False
                break
        if good:
            return True
    return False


def count_connected_classes_pairwise(n: int) -> int:
    """Bucket all labeled connected graphs by exhaustive isomorphism tests."""
    reps: list[list[int]] = []
    for rows in _labeled_graphs(n):
        if not _rows_connected(n, rows):
            continue
        if not any(_isomorphic(n, rows, rep) for rep in reps):
            reps.append(rows)
    return len(reps)


def count_connected_classes_canon(n: int) -> int:
    """Bucket all labeled connected graphs by canonical form."""
    keys = set()
    for rows in _labeled_graphs(n):
        if _rows_connected(n, rows):
            keys.add(_backend.canon_key(n, rows))
    return len(keys)


def connected_labeled_count(n: int) -> int:
    """Number of labeled connected graphs (classic recurrence)."""
    counts = [0, 1]
    for m in range(2, n + 1):
        total = 1 << comb(m, 2)
        for k in range(1, m):
            total -= comb(m - 1, k - 1) * counts[k] * (1 << comb(m - k, 2))
        counts.append(total)
    return counts[n]


def count_connected_classes_burnside(n: int) -> int:
    """Orbit counting over the symmetric group acting on labeled graphs.

    The identity contributes the labeled connected count; every other
    permutation contributes its fixed connected graphs, enumerated through
    its orbits on vertex pairs.
    """
    total = connected_labeled_count(n)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    index = {p: i for i, p in enumerate(pairs)}
    for perm in itertools.permutations(range(n)):
        if perm == tuple(range(n)):
            continue
        seen = set()
        orbits = []
        for p in pairs:
            if p in seen:
                continue
            orbit = []
            q = p
            while q not in seen:
                seen.add(q)
                orbit.append(index[q])
                a, b = perm[q[0]], perm[q[1]]
                q = (a, b) if a < b else (b, a)
            orbits.append(orbit)
        for bits in range(1 << len(orbits)):
            rows = [0] * n
            for i, orbit in enumerate(orbits):
                if (bits >> i) & 1:
                    for j in orbit:
                        u, v = pairs[j]
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u
            if _rows_connected(n, rows):
                total += 1
    assert total % factorial(n) == 0
    return total // factorial(n)

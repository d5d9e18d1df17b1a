"""Hypergraphs, strong vertex deletion, strong cut-vertices and their
cut-vertex transit function.

Separation semantics: x separates u and v when every alternating u,v-path
uses an edge containing x, i.e. strong-deleting x (the vertex together
with all incident edges) leaves u and v in different components.  A
vertex-path variant (x visited by every u,v-path) is also provided: it is
contained in the separation form, coincides with it on 2-uniform
hypergraphs, and equals the cut-vertex transit function of the 2-section
graph, whose convexity is always a convex geometry; only the separation
form can fail the convex-geometry test.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .core import GroundSet, Subset, TransitFunction
from .errors import IndexOutOfRange, NotConnected


@dataclass(frozen=True)
class Hypergraph:
    """Ground set plus a list of nonempty (possibly overlapping) edges."""

    ground: GroundSet
    edges: tuple[int, ...]

    def __post_init__(self):
        for e in self.edges:
            if e == 0:
                raise ValueError("hyperedges must be nonempty")
            if e >> self.ground.n or e < 0:
                raise IndexOutOfRange("hyperedge leaves the ground set")
        object.__setattr__(self, "edges", tuple(self.edges))

    @classmethod
    def from_edge_lists(cls, n: int, edges: Iterable[Iterable[int]]) -> "Hypergraph":
        ground = GroundSet(n)
        masks = []
        for e in edges:
            mask = 0
            for v in e:
                ground.check_index(v)
                mask |= 1 << v
            masks.append(mask)
        return cls(ground, tuple(masks))

    @property
    def n(self) -> int:
        return self.ground.n

    def two_section(self):
        """Graph on the same vertices joining every pair inside an edge."""
        from .graphs import Graph

        rows = [0] * self.n
        for e in self.edges:
            for v in Subset(self.ground, e):
                rows[v] |= e & ~(1 << v)
        return Graph(self.ground, tuple(rows))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "edges": [list(Subset(self.ground, e)) for e in self.edges],
        }


def hypergraph_from_json(payload: dict) -> Hypergraph:
    return Hypergraph.from_edge_lists(int(payload["n"]), payload["edges"])


def _reachable(edges, start_mask: int, allowed: int) -> int:
    """Vertices reachable from start by alternating paths inside ``allowed``."""
    seen = start_mask & allowed
    while True:
        grown = seen
        for e in edges:
            if e & seen:
                grown |= e & allowed
        if grown == seen:
            return seen
        seen = grown


def hyper_connected(h: Hypergraph) -> bool:
    """True iff every vertex pair is joined by an alternating path."""
    full = h.ground.full_mask
    return _reachable(h.edges, 1, full) == full


def strong_delete(h: Hypergraph, v: int) -> Hypergraph:
    """Remove v and every edge containing it; the ground set shrinks."""
    h.ground.check_index(v)
    if h.n == 1:
        raise ValueError("cannot delete the last vertex")
    keep = [x for x in range(h.n) if x != v]
    pos = {x: i for i, x in enumerate(keep)}
    new_edges = []
    for e in h.edges:
        if (e >> v) & 1:
            continue
        mask = 0
        for x in Subset(h.ground, e):
            mask |= 1 << pos[x]
        new_edges.append(mask)
    return Hypergraph(GroundSet(h.n - 1), tuple(new_edges))


def separates(h: Hypergraph, u: int, v: int, x: int) -> bool:
    """True iff u, v land in different components when x is strong-deleted."""
    allowed = h.ground.full_mask & ~(1 << x)
    edges = [e for e in h.edges if not (e >> x) & 1]
    return not (_reachable(edges, 1 << u, allowed) >> v) & 1


def strong_cut_vertices(h: Hypergraph) -> Subset:
    """Vertices whose strong deletion disconnects the remaining >= 2 vertices.

    Deleting down to a single vertex never certifies a cut vertex.
    """
    if not hyper_connected(h):
        raise NotConnected("strong cut-vertex scan requires a connected hypergraph")
    out = 0
    if h.n < 3:
        return Subset(h.ground, 0)
    for x in range(h.n):
        allowed = h.ground.full_mask & ~(1 << x)
        edges = [e for e in h.edges if not (e >> x) & 1]
        start = allowed & -allowed
        if _reachable(edges, start, allowed) != allowed:
            out |= 1 << x
    return Subset(h.ground, out)


def cutvertex_C_hyper(h: Hypergraph) -> TransitFunction:
    """C(u,v) = endpoints plus the strong cut-vertices separating them."""
    if not hyper_connected(h):
        raise NotConnected("cut-vertex transit function requires a connected hypergraph")
    n = h.n
    table = [0] * (n * n)
    for u in range(n):
        table[u * n + u] = 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            for x in range(n):
                if x != u and x != v and separates(h, u, v, x):
                    mask |= 1 << x
            table[u * n + v] = mask
            table[v * n + u] = mask
    return TransitFunction(h.ground, table)


def path_cut_vertices(h: Hypergraph) -> Subset:
    """Vertices visited by every alternating path of some vertex pair.

    Always a subset of :func:`strong_cut_vertices`; equal on 2-uniform
    hypergraphs.
    """
    if not hyper_connected(h):
        raise NotConnected("cut-vertex scan requires a connected hypergraph")
    out = 0
    if h.n < 3:
        return Subset(h.ground, 0)
    for x in range(h.n):
        allowed = h.ground.full_mask & ~(1 << x)
        start = allowed & -allowed
        if _reachable(h.edges, start, allowed) != allowed:
            out |= 1 << x
    return Subset(h.ground, out)


def cutvertex_C_hyper_paths(h: Hypergraph) -> TransitFunction:
    """Vertex-path variant: C(u,v) = vertices lying on every u,v-path.

    Equals the cut-vertex transit function of the 2-section graph: a path
    may traverse an edge without visiting the separating vertex, so this
    is contained in (and can be strictly smaller than) the separation form.
    """
    if not hyper_connected(h):
        raise NotConnected("cut-vertex transit function requires a connected hypergraph")
    n = h.n
    table = [0] * (n * n)
    for u in range(n):
        table[u * n + u] = 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            for x in range(n):
                if x == u or x == v:
                    continue
                allowed = h.ground.full_mask & ~(1 << x)
                if not (_reachable(h.edges, 1 << u, allowed) >> v) & 1:
                    mask |= 1 << x
            table[u * n + v] = mask
            table[v * n + u] = mask
    return TransitFunction(h.ground, table)

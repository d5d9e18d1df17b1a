"""Induced-subgraph engine and the graph classes used by the
characterization theorems (chordal, Ptolemaic, interval, HHD-free, block
graphs, star forests, the pattern family for the P3 Chvatal condition,
and friends)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _backend
from .core import AxiomVerdict, Subset
from .errors import Disconnected, GroundTooLarge
from .graphs import Graph, blocks, distances

HOLE_GUARD = 16

CLASS_IDS = (
    "chordal",
    "ptolemaic",
    "interval",
    "proper_interval",
    "hhd_free",
    "weak_bipolarizable",
    "block_graph",
    "tree",
    "star_forest",
    "triangle_free",
    "p3_j0_class",
    "family_A_free",
    "claw_free",
    "two_connected_or_tree_components",
)


@dataclass(frozen=True)
class Pattern:
    """A small forbidden graph with optional per-vertex role tags."""

    name: str
    graph: Graph
    role_labels: Optional[dict] = None


def _pattern(name: str, n: int, edges, roles=None) -> Pattern:
    return Pattern(name, Graph.from_edges(n, edges), roles)


# Base configuration shared by the whole pattern family below (vertices
# u=0, v=1, x=2, y=3, w=4): edges ux, xv, xy, yw; uy and vy never edges.
_FAMILY_BASE = [(0, 2), (2, 1), (2, 3), (3, 4)]
_UW, _VW, _XW, _UV = (0, 4), (1, 4), (2, 4), (0, 1)
_FAMILY_ROLES = {"u": 0, "v": 1, "x": 2, "y": 3, "w": 4}


def _family(name: str, *extra) -> Pattern:
    return _pattern(name, 5, _FAMILY_BASE + list(extra), dict(_FAMILY_ROLES))


PATTERNS: dict[str, Pattern] = {
    p.name: p
    for p in (
        _pattern("house", 5, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 4), (3, 4)], {"v": 0, "x": 1, "u": 4}),
        _pattern("domino", 6, [(0, 1), (1, 2), (2, 3), (3, 0), (2, 5), (5, 4), (4, 3)], {"v": 0, "x": 1, "u": 4}),
        _pattern("a_graph", 6, [(1, 2), (2, 3), (3, 0), (2, 5), (5, 4), (4, 3)], {"u": 0, "v": 1, "x": 4, "y": 5}),
        _pattern("fan3", 5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)]),
        _pattern("claw", 4, [(0, 1), (0, 2), (0, 3)]),
        _pattern("p4", 4, [(0, 1), (1, 2), (2, 3)]),
        _pattern("c4", 4, [(0, 1), (1, 2), (2, 3), (3, 0)]),
        _pattern("k4_minus", 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]),
        _pattern("pan3", 4, [(0, 1), (1, 2), (0, 2), (2, 3)]),
        # Family members named after the shape obtained by adding optional
        # edges uw, vw, xw, uv to the base configuration.
        _family("fam_F"),
        _family("fam_P", _UW),
        _family("fam_P_bar", _UV),
        _family("fam_K14_plus", _XW),
        _family("fam_K23", _UW, _VW),
        _family("fam_P_plus", _UW, _XW),
        _family("fam_house", _UW, _UV),
        _family("fam_M33", _XW, _UV),
        _family("fam_S23", _UW, _VW, _XW),
        _family("fam_K23_plus", _UW, _VW, _UV),
        _family("fam_F3", _UW, _XW, _UV),
        _family("fam_S23_plus", _UW, _VW, _XW, _UV),
    )
}

FAMILY_A = (
    "fam_F",
    "fam_P",
    "fam_P_bar",
    "fam_K14_plus",
    "fam_K23",
    "fam_P_plus",
    "fam_house",
    "fam_M33",
    "fam_S23",
    "fam_K23_plus",
    "fam_F3",
    "fam_S23_plus",
)


def contains_induced(g: Graph, pattern: Pattern) -> Optional[tuple[int, ...]]:
    """First injective embedding preserving adjacency and non-adjacency.

    Returns a tuple mapping pattern vertex i to host vertex, or None.
    Deterministic: vertices are assigned in pattern order, candidates in
    ascending host order.
    """
    p = pattern.graph
    k, n = p.n, g.n
    if k > n:
        return None
    host_deg = [g.degree(v) for v in range(n)]
    pat_deg = [p.degree(v) for v in range(k)]
    assign = [-1] * k
    used = 0

    def extend(i: int) -> bool:
        nonlocal used
        if i == k:
            return True
        for cand in range(n):
            if (used >> cand) & 1 or host_deg[cand] < pat_deg[i]:
                continue
            ok = True
            for j in range(i):
                want = (p.adjacency[i] >> j) & 1
                have = (g.adjacency[cand] >> assign[j]) & 1
                if want != have:
                    ok = False
                    break
            if ok:
                assign[i] = cand
                used |= 1 << cand
                if extend(i + 1):
                    return True
                used &= ~(1 << cand)
                assign[i] = -1
        return False

    return tuple(assign) if extend(0) else None


def _chordless_cycle(g: Graph, min_count: int) -> Optional[int]:
    """Vertex mask of some induced cycle with >= min_count vertices.

    Grows chordless paths from the cycle's minimum vertex; interior
    vertices avoid the start's neighborhood so the only chord candidates
    are excluded by construction.
    """
    n = g.n
    for start in range(n):
        allowed = ((1 << n) - 1) & ~((1 << (start + 1)) - 1)
        for p1 in Subset(g.ground, g.adjacency[start] & allowed):
            stack = [(p1, (1 << start) | (1 << p1), (1 << start) | (1 << p1), 2)]
            while stack:
                last, pathset, closed, count = stack.pop()
                for y in Subset(g.ground, g.adjacency[last] & allowed & ~closed):
                    if (g.adjacency[start] >> y) & 1:
                        if count + 1 >= min_count:
                            return pathset | (1 << y)
                        continue
                    stack.append(
                        (y, pathset | (1 << y), closed | g.adjacency[last] | (1 << y), count + 1)
                    )
    return None


def has_hole(g: Graph) -> Optional[Subset]:
    """Some induced cycle of length >= 5, found by chordless-cycle DFS."""
    if g.n > HOLE_GUARD:
        raise GroundTooLarge(f"n={g.n} exceeds hole guard {HOLE_GUARD}")
    mask = _chordless_cycle(g, 5)
    return None if mask is None else Subset(g.ground, mask)


def has_asteroidal_triple(g: Graph) -> Optional[tuple[int, int, int]]:
    """First pairwise-nonadjacent triple joined around closed neighborhoods."""
    if not g.is_connected():
        raise Disconnected("asteroidal-triple scan requires a connected graph")
    n = g.n
    # reach[z] = components of G minus N[z].
    reach = []
    for z in range(n):
        blocked = g.adjacency[z] | (1 << z)
        comps = []
        left = g.ground.full_mask & ~blocked
        while left:
            comp = left & -left
            frontier = comp
            while frontier:
                grow = 0
                for a in Subset(g.ground, frontier):
                    grow |= g.adjacency[a]
                frontier = grow & ~blocked & ~comp
                comp |= frontier
            comps.append(comp)
            left &= ~comp
        reach.append(comps)

    def same_comp(z: int, a: int, b: int) -> bool:
        return any((c >> a) & 1 and (c >> b) & 1 for c in reach[z])

    for x in range(n):
        for y in range(x + 1, n):
            if g.has_edge(x, y):
                continue
            for z in range(y + 1, n):
                if g.has_edge(x, z) or g.has_edge(y, z):
                    continue
                if same_comp(z, x, y) and same_comp(y, x, z) and same_comp(x, y, z):
                    return (x, y, z)
    return None


def _chordal_fast(g: Graph) -> bool:
    """Maximum-cardinality search plus perfect-elimination verification."""
    n = g.n
    weight = [0] * n
    order = []
    placed = 0
    for _ in range(n):
        best, best_w = -1, -1
        for v in range(n):
            if not (placed >> v) & 1 and weight[v] > best_w:
                best, best_w = v, weight[v]
        order.append(best)
        placed |= 1 << best
        for w in Subset(g.ground, g.adjacency[best]):
            if not (placed >> w) & 1:
                weight[w] += 1
    # Reverse MCS order is a candidate perfect elimination order.
    elim = list(reversed(order))
    pos = {v: i for i, v in enumerate(elim)}
    for i, v in enumerate(elim):
        later = [w for w in Subset(g.ground, g.adjacency[v]) if pos[w] > i]
        if not later:
            continue
        m = min(later, key=lambda w: pos[w])
        for w in later:
            if w != m and not g.has_edge(m, w):
                return False
    return True


def _first_chordless_cycle4(g: Graph) -> Optional[Subset]:
    """Some induced cycle of length >= 4 (witness extraction)."""
    mask = _chordless_cycle(g, 4)
    return None if mask is None else Subset(g.ground, mask)


def _verdict(class_id: str, holds: bool, witness=None) -> AxiomVerdict:
    return AxiomVerdict(class_id, holds, witness)


def _embedding_witness(pattern: Pattern, embedding) -> tuple:
    roles = pattern.role_labels or {}
    inverse = {v: r for r, v in roles.items()}
    return tuple(
        (f"{pattern.name}:{inverse.get(i, str(i))}", host) for i, host in enumerate(embedding)
    )


def _first_pattern(g: Graph, names) -> Optional[tuple[Pattern, tuple]]:
    for name in names:
        emb = contains_induced(g, PATTERNS[name])
        if emb is not None:
            return PATTERNS[name], emb
    return None


def _cycle_witness(subset: Subset) -> tuple:
    return tuple((f"cycle{i}", v) for i, v in enumerate(subset))


def recognize(g: Graph, class_id: str) -> AxiomVerdict:
    """Membership verdict with a forbidden-structure witness on failure."""
    if class_id == "chordal":
        if _chordal_fast(g):
            return _verdict(class_id, True)
        cyc = _first_chordless_cycle4(g)
        return _verdict(class_id, False, _cycle_witness(cyc))
    if class_id == "ptolemaic":
        base = recognize(g, "chordal")
        if not base.holds:
            return _verdict(class_id, False, base.witness)
        hit = _first_pattern(g, ("fan3",))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        return _verdict(class_id, True)
    if class_id == "interval":
        base = recognize(g, "chordal")
        if not base.holds:
            return _verdict(class_id, False, base.witness)
        at = has_asteroidal_triple(g)
        if at is not None:
            return _verdict(class_id, False, (("at_x", at[0]), ("at_y", at[1]), ("at_z", at[2])))
        return _verdict(class_id, True)
    if class_id == "proper_interval":
        hit = _first_pattern(g, ("claw",))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        base = recognize(g, "interval")
        return _verdict(class_id, base.holds, base.witness)
    if class_id == "hhd_free":
        hit = _first_pattern(g, ("house", "domino"))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        hole = has_hole(g)
        if hole is not None:
            return _verdict(class_id, False, _cycle_witness(hole))
        return _verdict(class_id, True)
    if class_id == "weak_bipolarizable":
        base = recognize(g, "hhd_free")
        if not base.holds:
            return _verdict(class_id, False, base.witness)
        hit = _first_pattern(g, ("a_graph",))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        return _verdict(class_id, True)
    if class_id == "block_graph":
        decomp = blocks(g)
        for b in decomp.blocks:
            verts = list(Subset(g.ground, b))
            for i, u in enumerate(verts):
                for v in verts[i + 1 :]:
                    if not g.has_edge(u, v):
                        return _verdict(
                            class_id, False, tuple((f"block{i}", x) for i, x in enumerate(verts))
                        )
        return _verdict(class_id, True)
    if class_id == "tree":
        if not g.is_connected():
            comps = g.components()
            a = (comps[0] & -comps[0]).bit_length() - 1
            b = (comps[1] & -comps[1]).bit_length() - 1
            return _verdict(class_id, False, (("comp1", a), ("comp2", b)))
        if g.edge_count() != g.n - 1:
            cyc = _first_cycle(g)
            return _verdict(class_id, False, _cycle_witness(cyc))
        return _verdict(class_id, True)
    if class_id == "star_forest":
        cyc = _first_cycle(g)
        if cyc is not None:
            return _verdict(class_id, False, _cycle_witness(cyc))
        hit = _first_pattern(g, ("p4",))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        return _verdict(class_id, True)
    if class_id == "triangle_free":
        for u in range(g.n):
            for v in Subset(g.ground, g.adjacency[u]):
                if v <= u:
                    continue
                common = g.adjacency[u] & g.adjacency[v] & ~((1 << (v + 1)) - 1)
                if common:
                    w = (common & -common).bit_length() - 1
                    return _verdict(class_id, False, (("u", u), ("v", v), ("w", w)))
        return _verdict(class_id, True)
    if class_id == "p3_j0_class":
        hit = _first_pattern(g, ("p4", "c4", "k4_minus", "pan3"))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        return _verdict(class_id, True)
    if class_id == "family_A_free":
        hit = _first_pattern(g, FAMILY_A)
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        return _verdict(class_id, True)
    if class_id == "claw_free":
        hit = _first_pattern(g, ("claw",))
        if hit:
            return _verdict(class_id, False, _embedding_witness(*hit))
        return _verdict(class_id, True)
    if class_id == "two_connected_or_tree_components":
        for comp in g.components():
            sub = g.induced(comp)
            if sub.edge_count() == sub.n - 1:
                continue
            cut = blocks(sub).cut_vertices
            if cut == 0:
                continue
            verts = list(Subset(g.ground, comp))
            c = verts[(cut & -cut).bit_length() - 1]
            return _verdict(class_id, False, (("cut", c),))
        return _verdict(class_id, True)
    raise ValueError(f"unknown class {class_id!r}")


def _first_cycle(g: Graph) -> Optional[Subset]:
    """Vertex set of some cycle (not necessarily induced), or None."""
    cyc4 = _first_chordless_cycle4(g)
    if cyc4 is not None:
        return cyc4
    # Remaining cycles are triangles.
    for u in range(g.n):
        for v in Subset(g.ground, g.adjacency[u]):
            if v <= u:
                continue
            common = g.adjacency[u] & g.adjacency[v] & ~((1 << (v + 1)) - 1)
            if common:
                w = (common & -common).bit_length() - 1
                return Subset(g.ground, (1 << u) | (1 << v) | (1 << w))
    return None


def ptolemy_inequality_holds(g: Graph) -> AxiomVerdict:
    """Exhaustive Ptolemy distance inequality over ordered 4-tuples."""
    if not g.is_connected():
        raise Disconnected("Ptolemy check requires a connected graph")
    dist = distances(g)
    failing = _backend.ptolemy_witness(g.n, list(dist.flat))
    if failing is None:
        return AxiomVerdict("ptolemy", True, None)
    return AxiomVerdict("ptolemy", False, tuple(zip(("u", "v", "w", "x"), failing)))

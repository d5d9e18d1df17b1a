"""Simple graphs, graph6 I/O, distances, blocks and the eight graph
transit functions (geodesic, induced-path, m3, all-paths, toll, weak toll,
P3, cut-vertex)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from . import _backend
from .core import GroundSet, Subset, TransitFunction
from .errors import Disconnected, GroundTooLarge, IndexOutOfRange, MalformedGraph6

INDUCED_PATH_GUARD = 16

MODEL_NAMES = ("I", "J", "m3", "A", "T", "WT", "P3", "C")


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph over a ground set; adjacency as bit rows."""

    ground: GroundSet
    adjacency: tuple[int, ...]

    def __post_init__(self):
        n = self.ground.n
        if len(self.adjacency) != n:
            raise ValueError("adjacency must have one row per vertex")
        for u, row in enumerate(self.adjacency):
            if row >> n or row < 0:
                raise IndexOutOfRange(f"adjacency row {u} leaves the ground set")
            if (row >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in Subset(self.ground, row):
                if not (self.adjacency[v] >> u) & 1:
                    raise ValueError(f"asymmetric edge ({u},{v})")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        ground = GroundSet(n, labels)
        rows = [0] * n
        for u, v in edges:
            ground.check_index(u)
            ground.check_index(v)
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(ground, tuple(rows))

    @property
    def n(self) -> int:
        return self.ground.n

    def neighbors(self, v: int) -> Subset:
        self.ground.check_index(v)
        return Subset(self.ground, self.adjacency[v])

    def degree(self, v: int) -> int:
        self.ground.check_index(v)
        return self.adjacency[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        self.ground.check_index(u)
        self.ground.check_index(v)
        return (self.adjacency[u] >> v) & 1 == 1

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            for v in Subset(self.ground, self.adjacency[u]):
                if u < v:
                    out.append((u, v))
        return out

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adjacency) // 2

    def is_connected(self) -> bool:
        seen = 1
        frontier = 1
        while frontier:
            reach = 0
            for x in Subset(self.ground, frontier):
                reach |= self.adjacency[x]
            frontier = reach & ~seen
            seen |= frontier
        return seen == self.ground.full_mask

    def components(self) -> list[int]:
        """Vertex masks of connected components."""
        left = self.ground.full_mask
        comps = []
        while left:
            start = left & -left
            comp = start
            frontier = start
            while frontier:
                reach = 0
                for x in Subset(self.ground, frontier):
                    reach |= self.adjacency[x]
                frontier = reach & ~comp
                comp |= frontier
            comps.append(comp)
            left &= ~comp
        return comps

    def induced(self, mask: int) -> "Graph":
        """Subgraph induced on the vertices of ``mask`` (reindexed)."""
        verts = list(Subset(self.ground, mask))
        pos = {v: i for i, v in enumerate(verts)}
        rows = [0] * len(verts)
        for v in verts:
            for w in Subset(self.ground, self.adjacency[v] & mask):
                rows[pos[v]] |= 1 << pos[w]
        return Graph(GroundSet(max(len(verts), 1)), tuple(rows) or (0,))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image under vertex map old -> perm[old]."""
        n = self.n
        rows = [0] * n
        for u in range(n):
            for v in Subset(self.ground, self.adjacency[u]):
                rows[perm[u]] |= 1 << perm[v]
        return Graph(GroundSet(n), tuple(rows))

    def to_graph6(self) -> str:
        return encode_graph6(self)

    def to_json(self) -> dict:
        payload = {"n": self.n, "adj": [list(Subset(self.ground, row)) for row in self.adjacency]}
        if self.ground.labels is not None:
            payload["labels"] = list(self.ground.labels)
        return payload


def graph_from_json(payload: dict) -> Graph:
    """Read the adjacency-list JSON graph format."""
    n = int(payload["n"])
    labels = payload.get("labels")
    ground = GroundSet(n, tuple(labels) if labels else None)
    rows = [0] * n
    adj = payload["adj"]
    if len(adj) != n:
        raise ValueError("adjacency list must have n rows")
    for u, nbrs in enumerate(adj):
        for v in nbrs:
            ground.check_index(int(v))
            rows[u] |= 1 << int(v)
    g = Graph(ground, tuple(rows))
    return g


def parse_graph6(text: str) -> Graph:
    """Decode a short-form graph6 string (n <= 62)."""
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    text = text.strip()
    if not text:
        raise MalformedGraph6("empty graph6 string", 0)
    data = text.encode("ascii", errors="replace")
    first = data[0]
    if first == 126:
        raise MalformedGraph6("long-form graph6 (n > 62) not supported", 0)
    if not 63 <= first <= 125:
        raise MalformedGraph6(f"invalid size byte {first}", 0)
    n = first - 63
    if n == 0:
        raise MalformedGraph6("graph6 with zero vertices", 0)
    need_bits = n * (n - 1) // 2
    need_bytes = (need_bits + 5) // 6
    body = data[1:]
    if len(body) != need_bytes:
        raise MalformedGraph6(
            f"expected {need_bytes} data bytes for n={n}, got {len(body)}", len(data)
        )
    bits = 0
    for off, byte in enumerate(body):
        if not 63 <= byte <= 126:
            raise MalformedGraph6(f"invalid data byte {byte}", off + 1)
        bits = (bits << 6) | (byte - 63)
    pad = need_bytes * 6 - need_bits
    if pad and bits & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits", len(data) - 1)
    bits >>= pad
    rows = [0] * n
    # Upper triangle, column-major: (0,1), (0,2), (1,2), (0,3), ...
    pos = need_bits - 1
    for v in range(1, n):
        for u in range(v):
            if (bits >> pos) & 1:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            pos -= 1
    return Graph(GroundSet(n), tuple(rows))


def encode_graph6(g: Graph) -> str:
    """Canonical short-form graph6 encoding."""
    n = g.n
    if n > 62:
        raise GroundTooLarge("short-form graph6 caps at 62 vertices")
    bits = []
    for v in range(1, n):
        for u in range(v):
            bits.append(1 if (g.adjacency[u] >> v) & 1 else 0)
    out = [chr(n + 63)]
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = (val << 1) | b
        out.append(chr(val + 63))
    return "".join(out)


@dataclass(frozen=True)
class DistanceMatrix:
    """Hop counts; -1 marks unreachable pairs."""

    n: int
    flat: tuple[int, ...]

    def d(self, u: int, v: int) -> int:
        return self.flat[u * self.n + v]

    def is_connected(self) -> bool:
        return -1 not in self.flat


def distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix(g.n, tuple(_backend.bfs_dist(g.n, list(g.adjacency))))


def _require_connected(g: Graph):
    if not g.is_connected():
        raise Disconnected("operation requires a connected graph")


def interval_I(g: Graph) -> TransitFunction:
    """Geodesic interval: vertices on shortest u,v-paths."""
    _require_connected(g)
    dist = _backend.bfs_dist(g.n, list(g.adjacency))
    table = _backend.interval_table(g.n, list(g.adjacency), dist)
    return TransitFunction(g.ground, table)


def induced_J(g: Graph) -> TransitFunction:
    """Induced-path (monophonic) intervals, by exhaustive chordless DFS."""
    _require_connected(g)
    if g.n > INDUCED_PATH_GUARD:
        raise GroundTooLarge(f"n={g.n} exceeds induced-path guard {INDUCED_PATH_GUARD}")
    j_table, _ = _backend.induced_path_tables(g.n, list(g.adjacency))
    return TransitFunction(g.ground, j_table)


def m3(g: Graph) -> TransitFunction:
    """Induced paths of length >= 3; endpoints always members."""
    _require_connected(g)
    if g.n > INDUCED_PATH_GUARD:
        raise GroundTooLarge(f"n={g.n} exceeds induced-path guard {INDUCED_PATH_GUARD}")
    _, m3_table = _backend.induced_path_tables(g.n, list(g.adjacency))
    return TransitFunction(g.ground, m3_table)


@dataclass(frozen=True)
class BlockDecomposition:
    """Maximal 2-connected pieces (and bridges), cut vertices, block-cut tree.

    Tree nodes are ("block", i) for block index i and ("cut", v) for cut
    vertex v; edges join blocks to the cut vertices they contain.
    """

    blocks: tuple[int, ...]
    cut_vertices: int
    tree_adjacency: dict

    def block_of(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if (b >> v) & 1]


def blocks(g: Graph) -> BlockDecomposition:
    """Biconnected decomposition by DFS lowpoints (Tarjan)."""
    n = g.n
    disc = [-1] * n
    low = [0] * n
    timer = [0]
    edge_stack: list[tuple[int, int]] = []
    block_masks: list[int] = []

    def dfs(u: int, parent: int):
        disc[u] = low[u] = timer[0]
        timer[0] += 1
        for v in Subset(g.ground, g.adjacency[u]):
            if disc[v] == -1:
                edge_stack.append((u, v))
                dfs(v, u)
                low[u] = min(low[u], low[v])
                if low[v] >= disc[u]:
                    mask = 0
                    while True:
                        a, b = edge_stack.pop()
                        mask |= (1 << a) | (1 << b)
                        if (a, b) == (u, v):
                            break
                    block_masks.append(mask)
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])

    for root in range(n):
        if disc[root] == -1:
            dfs(root, -1)
            if g.adjacency[root] == 0:
                block_masks.append(1 << root)

    cut_mask = 0
    # A vertex is a cut vertex iff it lies in >= 2 blocks.
    for v in range(n):
        if sum(1 for b in block_masks if (b >> v) & 1) >= 2:
            cut_mask |= 1 << v
    tree: dict = {}
    for i, b in enumerate(block_masks):
        tree[("block", i)] = []
    for v in Subset(g.ground, cut_mask):
        tree[("cut", v)] = []
    for i, b in enumerate(block_masks):
        for v in Subset(g.ground, b & cut_mask):
            tree[("block", i)].append(("cut", v))
            tree[("cut", v)].append(("block", i))
    return BlockDecomposition(tuple(block_masks), cut_mask, tree)


def _tree_path(decomp: BlockDecomposition, g: Graph, u: int, v: int):
    """Nodes of the block-cut-tree path between u's and v's locations."""
    cut = decomp.cut_vertices

    def node_of(x):
        if (cut >> x) & 1:
            return ("cut", x)
        for i, b in enumerate(decomp.blocks):
            if (b >> x) & 1:
                return ("block", i)
        raise ValueError(f"vertex {x} in no block")

    start, goal = node_of(u), node_of(v)
    if start == goal:
        return [start]
    prev = {start: None}
    queue = [start]
    while queue:
        nxt = []
        for node in queue:
            for other in decomp.tree_adjacency[node]:
                if other not in prev:
                    prev[other] = node
                    if other == goal:
                        path = [other]
                        while path[-1] is not None:
                            path.append(prev[path[-1]])
                        return [p for p in reversed(path) if p is not None]
                    nxt.append(other)
        queue = nxt
    raise Disconnected(f"no block-tree path between {u} and {v}")


def all_paths_A(g: Graph) -> TransitFunction:
    """All-paths intervals: union of blocks along the block-cut-tree path."""
    _require_connected(g)
    n = g.n
    decomp = blocks(g)
    table = [0] * (n * n)
    for u in range(n):
        table[u * n + u] = 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            for kind, idx in _tree_path(decomp, g, u, v):
                if kind == "block":
                    mask |= decomp.blocks[idx]
            table[u * n + v] = mask
            table[v * n + u] = mask
    return TransitFunction(g.ground, table)


def cutvertex_C(g: Graph) -> TransitFunction:
    """Endpoints plus the cut vertices on the block-cut-tree path."""
    _require_connected(g)
    n = g.n
    decomp = blocks(g)
    table = [0] * (n * n)
    for u in range(n):
        table[u * n + u] = 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v)
            for kind, idx in _tree_path(decomp, g, u, v):
                if kind == "cut":
                    mask |= 1 << idx
            table[u * n + v] = mask
            table[v * n + u] = mask
    return TransitFunction(g.ground, table)


def toll_T(g: Graph) -> TransitFunction:
    """Toll-walk intervals.

    A vertex is in T(u,v) for nonadjacent u, v iff it is a common neighbor
    or reachable from admissible attachments a in N(u)\\N[v], b in
    N(v)\\N[u] through components of the graph minus N[u] u N[v] touched by
    both; attachments cannot repeat on a toll walk.
    """
    _require_connected(g)
    return TransitFunction(g.ground, _backend.toll_table(g.n, list(g.adjacency)))


def weak_toll_WT(g: Graph) -> TransitFunction:
    """Weak-toll-walk intervals; attachments may repeat on the walk."""
    _require_connected(g)
    return TransitFunction(g.ground, _backend.wtoll_table(g.n, list(g.adjacency)))


def p3(g: Graph) -> TransitFunction:
    """Length-two-path intervals: endpoints plus common neighbors."""
    n = g.n
    table = [0] * (n * n)
    for u in range(n):
        table[u * n + u] = 1 << u
    for u in range(n):
        for v in range(u + 1, n):
            mask = (1 << u) | (1 << v) | (g.adjacency[u] & g.adjacency[v])
            table[u * n + v] = mask
            table[v * n + u] = mask
    return TransitFunction(g.ground, table)


_BUILDERS = {
    "I": interval_I,
    "J": induced_J,
    "m3": m3,
    "A": all_paths_A,
    "T": toll_T,
    "WT": weak_toll_WT,
    "P3": p3,
    "C": cutvertex_C,
}


def build_model(g: Graph, model: str) -> TransitFunction:
    """Build one of the eight graph transit functions by name."""
    try:
        builder = _BUILDERS[model]
    except KeyError:
        raise ValueError(f"unknown model {model!r}; choose from {MODEL_NAMES}") from None
    return builder(g)

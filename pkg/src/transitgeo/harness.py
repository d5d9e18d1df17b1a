"""Small-graph enumeration, theorem cross-validation and witness search.

Graph theorems run exhaustively over one representative per isomorphism
class of connected graphs; transit-function and hypergraph theorems run
over seeded random streams.  Every report is reproducible bit-exactly
under fixed seeds.
"""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterator, Optional

from . import _backend
from .axioms import check_axiom
from .convexity import (
    check_eb1,
    check_eb2,
    convex_sets,
    family_geometry_certificate,
    is_convex_geometry,
)
from .core import GroundSet, TransitFunction, random_transit_function, to_betweenness
from .errors import GroundTooLarge, InternalDisagreement, UnknownPredicate, UnknownTheorem
from .graphs import (
    Graph,
    all_paths_A,
    cutvertex_C,
    induced_J,
    interval_I,
    m3,
    p3,
    toll_T,
    weak_toll_WT,
)
from .hypergraph import Hypergraph, cutvertex_C_hyper, hyper_connected, strong_cut_vertices
from .recognizers import recognize
from .setsystems import (
    identifies,
    random_monotone_transit_function,
    transit_system_is_convex_geometry,
)

DEFAULT_SEED = 1729
DEFAULT_SAMPLES = 10000
ENUMERATION_CAP = 8
_DENSITIES = (0.10, 0.25, 0.45)


# ---------------------------------------------------------------------------
# Connected-graph enumeration (canonical augmentation).


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple:
    """One adjacency tuple per isomorphism class of ALL graphs on n vertices."""
    if n == 1:
        return ((0,),)
    found: dict[bytes, tuple] = {}
    for smaller in _graph_classes(n - 1):
        for nb in range(1 << (n - 1)):
            rows = [row | (((nb >> v) & 1) << (n - 1)) for v, row in enumerate(smaller)]
            rows.append(nb)
            key = _backend.canon_key(n, rows)
            if key not in found:
                found[key] = tuple(rows)
    return tuple(rows for _, rows in sorted(found.items()))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of connected graphs."""
    if not 1 <= n <= ENUMERATION_CAP:
        raise GroundTooLarge(f"enumeration supports 1 <= n <= {ENUMERATION_CAP}")
    ground = GroundSet(n)
    for rows in _graph_classes(n):
        g = Graph(ground, rows)
        if g.is_connected():
            yield g


def count_connected_graphs(n: int) -> int:
    return sum(1 for _ in enumerate_connected_graphs(n))


# ---------------------------------------------------------------------------
# Random object streams.


def transit_stream(n: int, seed: int, samples: int) -> Iterator[TransitFunction]:
    for i in range(samples):
        yield random_transit_function(n, seed * 1_000_003 + i, _DENSITIES[i % len(_DENSITIES)])


def monotone_stream(n: int, seed: int, samples: int) -> Iterator[TransitFunction]:
    for i in range(samples):
        yield random_monotone_transit_function(
            n, seed * 1_000_003 + i, _DENSITIES[i % len(_DENSITIES)]
        )


def hypergraph_stream(n_max: int, seed: int, samples: int) -> Iterator[Hypergraph]:
    """Seeded connected random hypergraphs with 2..n_max vertices."""
    import random as _random

    rng = _random.Random(seed)
    produced = 0
    attempts = 0
    while produced < samples and attempts < 50 * samples:
        attempts += 1
        n = rng.randint(2, n_max)
        m = rng.randint(1, 2 * n)
        edges = []
        for _ in range(m):
            mask = 0
            for v in range(n):
                if rng.random() < 0.35:
                    mask |= 1 << v
            if mask == 0:
                mask = 1 << rng.randrange(n)
            edges.append(mask)
        h = Hypergraph(GroundSet(n), tuple(edges))
        if hyper_connected(h):
            produced += 1
            yield h


def tiny_hypergraphs(n_max: int = 5, max_edges: int = 4) -> Iterator[Hypergraph]:
    """Exhaustive connected hypergraphs with <= n_max vertices, <= max_edges
    distinct nonempty edges."""
    from itertools import combinations

    for n in range(1, n_max + 1):
        ground = GroundSet(n)
        all_edges = list(range(1, 1 << n))
        for k in range(1, max_edges + 1):
            for combo in combinations(all_edges, k):
                h = Hypergraph(ground, combo)
                if hyper_connected(h):
                    yield h


# ---------------------------------------------------------------------------
# Theorem registry.


@dataclass(frozen=True)
class TheoremSpec:
    kind: str  # graph | transit | hypergraph
    budget: int
    lhs: Callable
    rhs: Callable
    stream: Optional[str] = None  # transit streams: random | monotone | mixed


@dataclass(frozen=True)
class TheoremReport:
    theorem: str
    n_range: tuple[int, int]
    objects_checked: int
    lhs_true: int
    rhs_true: int
    mismatches: tuple[str, ...]

    @property
    def graphs_checked(self) -> int:
        return self.objects_checked

    def to_json(self) -> dict:
        return {
            "theorem": self.theorem,
            "n_range": list(self.n_range),
            "objects_checked": self.objects_checked,
            "lhs_true": self.lhs_true,
            "rhs_true": self.rhs_true,
            "mismatches": list(self.mismatches),
        }


def _cg(builder):
    return lambda g: is_convex_geometry(builder(g)).is_geometry


def _ax(builder, axiom):
    return lambda g: check_axiom(builder(g), axiom).holds


def _ax2(builder, a1, a2):
    return lambda g: check_axiom(builder(g), a1).holds and check_axiom(builder(g), a2).holds


def _rec(class_id):
    return lambda g: recognize(g, class_id).holds


def connected_sets_family(g: Graph) -> tuple[int, ...]:
    """Masks of connected vertex sets (empty set and singletons included)."""
    out = []
    for mask in range(1 << g.n):
        if mask == 0 or mask & (mask - 1) == 0:
            out.append(mask)
            continue
        if g.induced(mask).is_connected():
            out.append(mask)
    return tuple(out)


def _intersection_closed(family) -> bool:
    fam = set(family)
    members = sorted(fam)
    for i, a in enumerate(members):
        for b in members[i + 1 :]:
            if a & b not in fam:
                return False
    return True


def _connected_alignment_lhs(g: Graph) -> bool:
    family = connected_sets_family(g)
    if not _intersection_closed(family):
        return False
    return family_geometry_certificate(g.n, family).is_geometry


def _connected_alignment_rhs(g: Graph) -> bool:
    if not recognize(g, "block_graph").holds:
        return False
    # On block graphs the connected alignment is exactly the C-convexity.
    family = set(connected_sets_family(g))
    c_family = set(convex_sets(cutvertex_C(g)).sets)
    return family == c_family


def _t11_lhs(R: TransitFunction) -> bool:
    try:
        is_convex_geometry(R)
        return True
    except InternalDisagreement:
        return True


def _t11_rhs(R: TransitFunction) -> bool:
    try:
        is_convex_geometry(R)
        return True
    except InternalDisagreement:
        return False


def _thm45_hyp(R: TransitFunction) -> bool:
    return all(check_axiom(R, a).holds for a in ("m", "a_prime", "k"))


def _wt_eq_t(g: Graph) -> bool:
    return toll_T(g).table() == weak_toll_WT(g).table()


def _hole_a_free(g: Graph) -> bool:
    from .recognizers import PATTERNS, contains_induced, has_hole

    return has_hole(g) is None and contains_induced(g, PATTERNS["a_graph"]) is None


THEOREMS: dict[str, TheoremSpec] = {
    # Convex-geometry characterizations of the eight graph convexities.
    "geo_cg_ptolemaic": TheoremSpec("graph", 7, _cg(interval_I), _rec("ptolemaic")),
    "mono_cg_chordal": TheoremSpec("graph", 6, _cg(induced_J), _rec("chordal")),
    "m3_cg_weakbipolar": TheoremSpec("graph", 6, _cg(m3), _rec("weak_bipolarizable")),
    "allpaths_cg_tree": TheoremSpec("graph", 7, _cg(all_paths_A), _rec("tree")),
    "toll_cg_interval": TheoremSpec("graph", 6, _cg(toll_T), _rec("interval")),
    "weaktoll_cg_properinterval": TheoremSpec("graph", 6, _cg(weak_toll_WT), _rec("proper_interval")),
    "p3_cg_starforest": TheoremSpec("graph", 7, _cg(p3), _rec("star_forest")),
    # Axiom characterizations.
    "j_b1_hhd": TheoremSpec("graph", 6, _ax(induced_J, "b1"), _rec("hhd_free")),
    "m3_b1_hhd": TheoremSpec("graph", 6, _ax(m3, "b1"), _rec("hhd_free")),
    "m3_j0_holeA": TheoremSpec("graph", 6, _ax(m3, "j0"), _hole_a_free),
    "p3_b1_triangle": TheoremSpec("graph", 7, _ax(p3, "b1"), _rec("triangle_free")),
    "p3_j0_forbidden4": TheoremSpec("graph", 7, _ax(p3, "j0"), _rec("p3_j0_class")),
    "p3_ch_familyA": TheoremSpec("graph", 7, _ax(p3, "ch"), _rec("family_A_free")),
    "allpaths_j0_blocks": TheoremSpec(
        "graph", 7, _ax(all_paths_A, "j0"), _rec("two_connected_or_tree_components")
    ),
    "toll_b1j0_interval": TheoremSpec("graph", 6, _ax2(toll_T, "b1", "j0"), _rec("interval")),
    "weaktoll_b1j0_properinterval": TheoremSpec(
        "graph", 6, _ax2(weak_toll_WT, "b1", "j0"), _rec("proper_interval")
    ),
    "wt_eq_t_clawfree": TheoremSpec("graph", 6, _wt_eq_t, _rec("claw_free")),
    "connected_alignment_blockgraph": TheoremSpec(
        "graph", 7, _connected_alignment_lhs, _connected_alignment_rhs
    ),
    # Random transit-function theorems (implications encoded as lhs -> lhs&rhs).
    "ch_implies_m": TheoremSpec(
        "transit",
        6,
        lambda R: check_axiom(R, "ch").holds,
        lambda R: check_axiom(R, "ch").holds and check_axiom(R, "m").holds,
        stream="random",
    ),
    "ch_implies_p": TheoremSpec(
        "transit",
        6,
        lambda R: check_axiom(R, "ch").holds,
        lambda R: check_axiom(R, "ch").holds and check_axiom(R, "p").holds,
        stream="random",
    ),
    "cg_axioms_sufficient": TheoremSpec(
        "transit",
        6,
        lambda R: all(check_axiom(R, a).holds for a in ("ch", "b1", "j0")),
        lambda R: all(check_axiom(R, a).holds for a in ("ch", "b1", "j0"))
        and is_convex_geometry(R).is_geometry,
        stream="mixed",
    ),
    "peano_cg_iff": TheoremSpec(
        "transit",
        6,
        lambda R: check_axiom(R, "p").holds and is_convex_geometry(R).is_geometry,
        lambda R: check_axiom(R, "p").holds
        and check_axiom(R, "b1").holds
        and check_axiom(R, "j0").holds,
        stream="mixed",
    ),
    "t11_equivalences": TheoremSpec("transit", 6, _t11_lhs, _t11_rhs, stream="random"),
    "t12_eb1_eb2": TheoremSpec(
        "transit",
        6,
        lambda R: check_eb1(to_betweenness(R)).holds,
        lambda R: check_eb2(to_betweenness(R)).holds,
        stream="mixed",
    ),
    "setsys_bijection": TheoremSpec(
        "transit",
        6,
        lambda R: check_axiom(R, "m").holds,
        lambda R: identifies(R).holds,
        stream="mixed",
    ),
    "thm45_cg": TheoremSpec(
        "transit",
        6,
        lambda R: _thm45_hyp(R) and transit_system_is_convex_geometry(R).is_geometry,
        lambda R: _thm45_hyp(R) and check_axiom(R, "cg").holds,
        stream="monotone",
    ),
    "lem46_cg_aprime": TheoremSpec(
        "transit",
        6,
        lambda R: check_axiom(R, "cg").holds,
        lambda R: check_axiom(R, "cg").holds and check_axiom(R, "a_prime").holds,
        stream="mixed",
    ),
    "prop51_hyper": TheoremSpec(
        "hypergraph",
        7,
        lambda h: len(strong_cut_vertices(h)) <= 1,
        lambda h: len(strong_cut_vertices(h)) <= 1
        and is_convex_geometry(cutvertex_C_hyper(h)).is_geometry,
    ),
}


def _threads() -> int:
    raw = os.environ.get("TG_THREADS", "").strip()
    try:
        return max(1, int(raw)) if raw else 1
    except ValueError:
        return 1


def verify_theorem(
    theorem: str,
    n_max: Optional[int] = None,
    seed: int = DEFAULT_SEED,
    samples: int = DEFAULT_SAMPLES,
    corpus: Optional[list] = None,
) -> TheoremReport:
    """Evaluate a registered theorem and report mismatching objects.

    Graph theorems run over all connected graphs with 1..n_max vertices,
    plus the graphs of ``corpus`` when given; transit/hypergraph theorems
    over seeded random streams (``samples`` per ground size, sizes 4..6
    for transit functions).
    """
    try:
        spec = THEOREMS[theorem]
    except KeyError:
        raise UnknownTheorem(f"unknown theorem {theorem!r}") from None
    if n_max is None:
        n_max = spec.budget
    if n_max > spec.budget:
        raise GroundTooLarge(f"{theorem} caps at n={spec.budget}")

    rhs = spec.rhs
    lhs_true = rhs_true = checked = 0
    mismatches: list[str] = []

    def record(obj_repr: str, lhs_v: bool, rhs_v: bool):
        nonlocal lhs_true, rhs_true, checked
        checked += 1
        lhs_true += lhs_v
        rhs_true += rhs_v
        if lhs_v != rhs_v:
            mismatches.append(obj_repr)

    if spec.kind == "graph":
        threads = _threads()

        def job(g: Graph):
            return g.to_graph6(), spec.lhs(g), rhs(g)

        sources = [enumerate_connected_graphs(n) for n in range(1, n_max + 1)]
        if corpus:
            sources.append(iter(corpus))
        for graphs in sources:
            if threads > 1:
                with ThreadPoolExecutor(max_workers=threads) as pool:
                    for g6, lv, rv in pool.map(job, graphs):
                        record(g6, lv, rv)
            else:
                for g in graphs:
                    record(*job(g))
        n_range = (1, n_max)
    elif spec.kind == "transit":
        lo = min(4, n_max)
        for n in range(lo, n_max + 1):
            if spec.stream == "monotone":
                stream = monotone_stream(n, seed, samples)
            elif spec.stream == "mixed":
                half = samples // 2
                stream = list(transit_stream(n, seed, samples - half))
                stream += list(monotone_stream(n, seed + 1, half))
            else:
                stream = transit_stream(n, seed, samples)
            for R in stream:
                record(R.dumps(), spec.lhs(R), rhs(R))
        n_range = (lo, n_max)
    elif spec.kind == "hypergraph":
        for h in tiny_hypergraphs():
            record(json.dumps(h.to_json(), sort_keys=True), spec.lhs(h), rhs(h))
        for h in hypergraph_stream(n_max, seed, samples):
            record(json.dumps(h.to_json(), sort_keys=True), spec.lhs(h), rhs(h))
        n_range = (1, n_max)
    else:  # pragma: no cover
        raise UnknownTheorem(spec.kind)

    return TheoremReport(theorem, n_range, checked, lhs_true, rhs_true, tuple(mismatches))


# ---------------------------------------------------------------------------
# Counterexample search.


def _pred_m_j0_b1_cg(limit_n: int, seed: int, samples: int):
    for n in range(4, limit_n + 1):
        for R in monotone_stream(n, seed, samples):
            if all(check_axiom(R, a).holds for a in ("m", "j0", "b1")):
                if not is_convex_geometry(R).is_geometry:
                    return R
    return None


def _pred_ch_b1(limit_n: int, seed: int, samples: int):
    for n in range(3, limit_n + 1):
        for R in transit_stream(n, seed, samples):
            if check_axiom(R, "ch").holds and not check_axiom(R, "b1").holds:
                return R
    return None


def _pred_hyper_cg_3cuts(limit_n: int, seed: int, samples: int):
    for h in tiny_hypergraphs():
        if len(strong_cut_vertices(h)) >= 3:
            if not is_convex_geometry(cutvertex_C_hyper(h)).is_geometry:
                return h
    for h in hypergraph_stream(limit_n, seed, samples):
        if len(strong_cut_vertices(h)) >= 3:
            if not is_convex_geometry(cutvertex_C_hyper(h)).is_geometry:
                return h
    return None


PREDICATES = {
    "m_j0_b1_implies_cg": _pred_m_j0_b1_cg,
    "ch_implies_b1": _pred_ch_b1,
    "hyper_cg_with_3plus_cuts": _pred_hyper_cg_3cuts,
}


def find_counterexample(
    predicate: str,
    n_max: int = 6,
    seed: int = DEFAULT_SEED,
    samples: int = 2000,
):
    """First enumerated object violating a registered predicate, or None."""
    try:
        search = PREDICATES[predicate]
    except KeyError:
        raise UnknownPredicate(f"unknown predicate {predicate!r}") from None
    return search(n_max, seed, samples)

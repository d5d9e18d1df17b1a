import itertools

import pytest

from transitgeo.graphs import Graph
from transitgeo.recognizers import (
    CLASS_IDS,
    FAMILY_A,
    PATTERNS,
    contains_induced,
    has_asteroidal_triple,
    has_hole,
    ptolemy_inequality_holds,
    recognize,
)
from transitgeo import oracles

C4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
C5 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)])
C6 = Graph.from_edges(6, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)])
K4 = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
PAN3 = Graph.from_edges(4, [(0, 1), (1, 2), (0, 2), (2, 3)])
STAR4 = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (0, 4)])


# --- pattern library ----------------------------------------------------------


def test_pattern_inventory():
    base = {"house", "domino", "a_graph", "fan3", "claw", "p4", "c4", "k4_minus", "pan3"}
    assert base | set(FAMILY_A) == set(PATTERNS)
    assert len(FAMILY_A) == 12


def test_pattern_shapes():
    # vertex/edge counts and degree sequences, straight from the constructions
    expect = {
        "house": (5, 6, [2, 2, 2, 3, 3]),
        "domino": (6, 7, [2, 2, 2, 2, 3, 3]),
        "a_graph": (6, 6, [1, 1, 2, 2, 3, 3]),
        "fan3": (5, 7, [2, 2, 3, 3, 4]),
        "claw": (4, 3, [1, 1, 1, 3]),
        "p4": (4, 3, [1, 1, 2, 2]),
        "c4": (4, 4, [2, 2, 2, 2]),
        "k4_minus": (4, 5, [2, 2, 3, 3]),
        "pan3": (4, 4, [1, 2, 2, 3]),
        "fam_F": (5, 4, [1, 1, 1, 2, 3]),       # fork: one subdivided claw edge
        "fam_P": (5, 5, [1, 2, 2, 2, 3]),       # 4-pan
        "fam_P_bar": (5, 5, [1, 2, 2, 2, 3]),   # 3-pan with subdivided tail
        "fam_K14_plus": (5, 5, [1, 1, 2, 2, 4]),
        "fam_K23": (5, 6, [2, 2, 2, 3, 3]),
        "fam_P_plus": (5, 6, [1, 2, 2, 3, 4]),
        "fam_house": (5, 6, [2, 2, 2, 3, 3]),
        "fam_M33": (5, 6, [2, 2, 2, 2, 4]),
        "fam_S23": (5, 7, [2, 2, 2, 4, 4]),     # split graph K2 + independent 3
        "fam_K23_plus": (5, 7, [2, 3, 3, 3, 3]),
        "fam_F3": (5, 7, [2, 2, 3, 3, 4]),
        "fam_S23_plus": (5, 8, [2, 3, 3, 4, 4]),
    }
    for name, (n, m, degs) in expect.items():
        g = PATTERNS[name].graph
        assert g.n == n, name
        assert g.edge_count() == m, name
        assert sorted(g.degree(v) for v in range(n)) == degs, name


def test_family_members_distinct_and_known_shapes():
    adj = {name: list(PATTERNS[name].graph.adjacency) for name in FAMILY_A}
    for a, b in itertools.combinations(FAMILY_A, 2):
        assert not oracles._isomorphic(5, adj[a], adj[b]), (a, b)
    # the house and 3-fan appear both standalone and as family members
    assert oracles._isomorphic(5, adj["fam_house"], list(PATTERNS["house"].graph.adjacency))
    assert oracles._isomorphic(5, adj["fam_F3"], list(PATTERNS["fan3"].graph.adjacency))


def test_fam_s23_is_a_split_graph():
    g = PATTERNS["fam_S23"].graph
    roles = PATTERNS["fam_S23"].role_labels
    clique = [roles["x"], roles["w"]]
    independent = [roles["u"], roles["v"], roles["y"]]
    assert g.has_edge(*clique)
    for a, b in itertools.combinations(independent, 2):
        assert not g.has_edge(a, b)
    for c in clique:
        for i in independent:
            assert g.has_edge(c, i)


# --- induced-subgraph engine ----------------------------------------------------


def test_contains_induced_basics():
    house = PATTERNS["house"].graph
    assert contains_induced(house, PATTERNS["house"]) == (0, 1, 2, 3, 4)
    assert contains_induced(C6, PATTERNS["p4"]) is not None
    assert contains_induced(K4, PATTERNS["claw"]) is None
    # induced, not merely subgraph: K4 contains no induced P3
    assert contains_induced(K4, PATTERNS["p4"]) is None
    assert contains_induced(PAN3, PATTERNS["pan3"]) is not None


def test_contains_induced_respects_nonedges():
    # C4 contains P4 as a subgraph but not as an induced one
    assert contains_induced(C4, PATTERNS["p4"]) is None


# --- holes and asteroidal triples -------------------------------------------------


def test_has_hole():
    assert sorted(has_hole(C5)) == [0, 1, 2, 3, 4]
    assert has_hole(C4) is None
    assert has_hole(K4) is None
    domino = PATTERNS["domino"].graph
    assert has_hole(domino) is None  # its 6-cycle has a chord
    assert has_hole(C6) is not None


def test_hole_agrees_with_subset_scan():
    import random

    rng = random.Random(5)
    for _ in range(120):
        n = rng.randint(4, 7)
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = Graph.from_edges(n, edges)
        assert (has_hole(g) is None) == (oracles.hole_by_subset_scan(g) is None)


def test_asteroidal_triples():
    spider = Graph.from_edges(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
    assert has_asteroidal_triple(spider) == (4, 5, 6)
    path = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4)])
    assert has_asteroidal_triple(path) is None
    # C6 genuinely contains an asteroidal triple (alternating vertices)
    assert has_asteroidal_triple(C6) == (0, 2, 4)


# --- class recognizers -------------------------------------------------------------


def test_recognize_spot_checks():
    house = PATTERNS["house"].graph
    v = recognize(house, "hhd_free")
    assert not v.holds and v.witness is not None
    fan = PATTERNS["fan3"].graph
    assert not recognize(fan, "ptolemaic").holds
    assert recognize(fan, "chordal").holds
    assert recognize(STAR4, "star_forest").holds
    assert recognize(STAR4, "tree").holds
    assert not recognize(C4, "p3_j0_class").holds
    assert not recognize(PAN3, "p3_j0_class").holds
    assert recognize(K4, "block_graph").holds
    assert not recognize(C4, "block_graph").holds
    assert recognize(C4, "two_connected_or_tree_components").holds
    assert not recognize(PAN3, "two_connected_or_tree_components").holds
    assert recognize(C6, "triangle_free").holds
    assert not recognize(K4, "triangle_free").holds
    assert recognize(C5, "claw_free").holds
    for member in FAMILY_A:
        assert not recognize(PATTERNS[member].graph, "family_A_free").holds, member
    assert recognize(PAN3, "family_A_free").holds  # too small to host one


def test_recognize_unknown_class():
    with pytest.raises(ValueError):
        recognize(C4, "nope")


def test_chordal_agrees_with_scan_exhaustively():
    from transitgeo.harness import enumerate_connected_graphs

    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            assert recognize(g, "chordal").holds == (oracles.chordal_by_subset_scan(g) is None)


def test_class_implications_small():
    from transitgeo.harness import enumerate_connected_graphs

    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            if recognize(g, "proper_interval").holds:
                assert recognize(g, "interval").holds
            if recognize(g, "interval").holds:
                assert recognize(g, "chordal").holds
            if recognize(g, "ptolemaic").holds:
                assert recognize(g, "chordal").holds
            if recognize(g, "weak_bipolarizable").holds:
                assert recognize(g, "hhd_free").holds
            if recognize(g, "tree").holds:
                assert recognize(g, "block_graph").holds


def test_ptolemy_inequality():
    assert not ptolemy_inequality_holds(C4).holds
    assert ptolemy_inequality_holds(K4).holds
    tree = Graph.from_edges(6, [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)])
    assert ptolemy_inequality_holds(tree).holds
    v = ptolemy_inequality_holds(C4)
    w = dict(v.witness)
    d = {}
    from transitgeo.graphs import distances

    dist = distances(C4)
    lhs = dist.d(w["u"], w["v"]) * dist.d(w["w"], w["x"]) + dist.d(w["u"], w["x"]) * dist.d(w["v"], w["w"])
    rhs = dist.d(w["u"], w["w"]) * dist.d(w["v"], w["x"])
    assert lhs < rhs


def test_ptolemaic_iff_ptolemy_small():
    from transitgeo.harness import enumerate_connected_graphs

    for n in range(1, 7):
        for g in enumerate_connected_graphs(n):
            assert recognize(g, "ptolemaic").holds == ptolemy_inequality_holds(g).holds


def test_failure_witnesses_revalidate():
    checks = [
        (PATTERNS["house"].graph, "hhd_free"),
        (PAN3, "p3_j0_class"),
        (K4, "triangle_free"),
        (C4, "block_graph"),
        (C6, "chordal"),
        (PATTERNS["fam_K23"].graph, "family_A_free"),
    ]
    for g, cls in checks:
        v = recognize(g, cls)
        assert not v.holds and v.witness is not None
        indices = [i for _, i in v.witness]
        assert all(0 <= i < g.n for i in indices)

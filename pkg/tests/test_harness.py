import pytest

from transitgeo import oracles
from transitgeo.axioms import check_axiom
from transitgeo.convexity import is_convex_geometry
from transitgeo.errors import GroundTooLarge, UnknownPredicate, UnknownTheorem
from transitgeo.harness import (
    THEOREMS,
    count_connected_graphs,
    enumerate_connected_graphs,
    find_counterexample,
    hypergraph_stream,
    monotone_stream,
    tiny_hypergraphs,
    transit_stream,
    verify_theorem,
)

CONNECTED_COUNTS = [1, 1, 2, 6, 21, 112, 853]


def test_enumeration_counts():
    for n, want in enumerate(CONNECTED_COUNTS, start=1):
        assert count_connected_graphs(n) == want


def test_enumeration_representatives_are_nonisomorphic():
    from transitgeo import _backend

    for n in range(1, 6):
        keys = [_backend.canon_key(g.n, list(g.adjacency)) for g in enumerate_connected_graphs(n)]
        assert len(keys) == len(set(keys))
        for g in enumerate_connected_graphs(n):
            assert g.is_connected()


def test_enumeration_counts_against_pairwise_oracle():
    for n in range(1, 6):
        assert oracles.count_connected_classes_pairwise(n) == CONNECTED_COUNTS[n - 1]


def test_enumeration_counts_against_canon_oracle():
    for n in range(1, 7):
        assert oracles.count_connected_classes_canon(n) == CONNECTED_COUNTS[n - 1]


def test_enumeration_counts_against_burnside_oracle():
    for n in range(1, 7):
        assert oracles.count_connected_classes_burnside(n) == CONNECTED_COUNTS[n - 1]


def test_connected_labeled_count_matches_direct():
    from transitgeo.oracles import _labeled_graphs, _rows_connected

    for n in range(1, 6):
        direct = sum(1 for rows in _labeled_graphs(n) if _rows_connected(n, rows))
        assert oracles.connected_labeled_count(n) == direct


def test_enumeration_guard():
    with pytest.raises(GroundTooLarge):
        list(enumerate_connected_graphs(9))


def test_verify_theorem_reports():
    rep = verify_theorem("p3_b1_triangle", n_max=5)
    assert rep.objects_checked == sum(CONNECTED_COUNTS[:5])
    assert rep.mismatches == ()
    assert rep.lhs_true == rep.rhs_true
    payload = rep.to_json()
    assert payload["theorem"] == "p3_b1_triangle"
    assert payload["mismatches"] == []


def test_verify_theorem_transit_kind():
    rep = verify_theorem("ch_implies_m", n_max=5, samples=120)
    assert rep.mismatches == ()
    assert rep.lhs_true > 0  # hypothesis exercised, not vacuous


def test_verify_theorem_deterministic():
    a = verify_theorem("t12_eb1_eb2", n_max=4, samples=80)
    b = verify_theorem("t12_eb1_eb2", n_max=4, samples=80)
    assert a == b


def test_verify_theorem_threads_match_serial(monkeypatch):
    serial = verify_theorem("p3_j0_forbidden4", n_max=5)
    monkeypatch.setenv("TG_THREADS", "4")
    threaded = verify_theorem("p3_j0_forbidden4", n_max=5)
    assert serial == threaded


def test_verify_theorem_external_corpus():
    from transitgeo.graphs import parse_graph6

    base = verify_theorem("p3_b1_triangle", n_max=4)
    extended = verify_theorem(
        "p3_b1_triangle", n_max=4, corpus=[parse_graph6("D?{"), parse_graph6("DhS")]
    )
    assert extended.objects_checked == base.objects_checked + 2
    assert extended.mismatches == ()


def test_verify_theorem_errors():
    with pytest.raises(UnknownTheorem):
        verify_theorem("nope")
    with pytest.raises(GroundTooLarge):
        verify_theorem("mono_cg_chordal", n_max=8)


def test_registry_covers_every_kind():
    kinds = {spec.kind for spec in THEOREMS.values()}
    assert kinds == {"graph", "transit", "hypergraph"}
    assert len(THEOREMS) == 28


def test_registry_budgets_pinned():
    budgets = {name: spec.budget for name, spec in THEOREMS.items() if spec.kind == "graph"}
    assert budgets == {
        "geo_cg_ptolemaic": 7,
        "p3_cg_starforest": 7,
        "p3_b1_triangle": 7,
        "p3_j0_forbidden4": 7,
        "p3_ch_familyA": 7,
        "allpaths_cg_tree": 7,
        "allpaths_j0_blocks": 7,
        "connected_alignment_blockgraph": 7,
        "mono_cg_chordal": 6,
        "m3_cg_weakbipolar": 6,
        "j_b1_hhd": 6,
        "m3_b1_hhd": 6,
        "m3_j0_holeA": 6,
        "toll_cg_interval": 6,
        "toll_b1j0_interval": 6,
        "weaktoll_cg_properinterval": 6,
        "weaktoll_b1j0_properinterval": 6,
        "wt_eq_t_clawfree": 6,
    }


def test_streams_deterministic():
    a = [R.dumps() for R in transit_stream(5, 3, 10)]
    b = [R.dumps() for R in transit_stream(5, 3, 10)]
    assert a == b
    am = [R.dumps() for R in monotone_stream(5, 3, 5)]
    bm = [R.dumps() for R in monotone_stream(5, 3, 5)]
    assert am == bm
    ah = [h.to_json() for h in hypergraph_stream(6, 3, 10)]
    bh = [h.to_json() for h in hypergraph_stream(6, 3, 10)]
    assert ah == bh


def test_monotone_stream_is_monotone():
    for R in monotone_stream(6, 9, 20):
        assert check_axiom(R, "m").holds


def test_tiny_hypergraphs_exhaustive_shape():
    hs = list(tiny_hypergraphs(n_max=3, max_edges=2))
    # every listed hypergraph is connected, within bounds, no duplicates
    seen = set()
    for h in hs:
        assert h.n <= 3 and len(h.edges) <= 2
        key = (h.n, tuple(sorted(h.edges)))
        assert key not in seen
        seen.add(key)


def test_find_counterexample_hits():
    w = find_counterexample("ch_implies_b1", n_max=4, samples=400)
    assert w is not None
    assert check_axiom(w, "ch").holds and not check_axiom(w, "b1").holds

    w2 = find_counterexample("m_j0_b1_implies_cg", n_max=6, samples=2000)
    assert w2 is not None
    assert all(check_axiom(w2, a).holds for a in ("m", "j0", "b1"))
    assert not is_convex_geometry(w2).is_geometry

    h = find_counterexample("hyper_cg_with_3plus_cuts", n_max=5, samples=100)
    assert h is not None
    from transitgeo.hypergraph import cutvertex_C_hyper, strong_cut_vertices

    assert len(strong_cut_vertices(h)) >= 3
    assert not is_convex_geometry(cutvertex_C_hyper(h)).is_geometry


def test_find_counterexample_unknown():
    with pytest.raises(UnknownPredicate):
        find_counterexample("nope")


def test_graph_theorem_spot_values():
    rep = verify_theorem("geo_cg_ptolemaic", n_max=5)
    assert rep.mismatches == ()
    rep2 = verify_theorem("wt_eq_t_clawfree", n_max=5)
    assert rep2.mismatches == ()
    rep3 = verify_theorem("connected_alignment_blockgraph", n_max=5)
    assert rep3.mismatches == ()

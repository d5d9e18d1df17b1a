import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transitgeo import GroundSet, Subset, minimal_transit_function, random_transit_function, to_betweenness
from transitgeo.axioms import check_axiom
from transitgeo.convexity import (
    check_eb1,
    check_eb2,
    convex_sets,
    extreme_points,
    ex_B,
    family_geometry_certificate,
    hull,
    is_convex,
    is_convex_geometry,
    is_jhc,
    segment_transit,
)
from transitgeo.errors import GroundTooLarge, NotConvex

import fixtures


def _sub(R, labels):
    return R.ground.subset_of_labels(labels)


def test_is_convex_examples():
    R23 = fixtures.ex_monotone_not_geometry()
    assert is_convex(R23, _sub(R23, "def"))
    R22 = fixtures.ex_not_monotone()
    assert not is_convex(R22, _sub(R22, "ac"))  # b sits inside R(a,c)
    for R in (R22, R23):
        assert is_convex(R, Subset(R.ground, 0))
        assert is_convex(R, Subset(R.ground, R.ground.full_mask))


def test_hull_examples():
    R23 = fixtures.ex_monotone_not_geometry()
    K = _sub(R23, "def")
    assert hull(R23, K | _sub(R23, "a")).bits == R23.ground.full_mask
    assert hull(R23, K | _sub(R23, "c")).bits == R23.ground.full_mask
    assert hull(R23, K) == K  # idempotent on fixpoints
    # {a,b,c} is R-convex outright (all its pairs default to endpoints);
    # only the transit-set SYSTEM of this table closes it up to V.
    R41 = fixtures.ex_transit_system_not_geometry()
    assert hull(R41, _sub(R41, "abc")) == _sub(R41, "abc")


def test_hull_properties_random():
    for seed in range(40):
        R = random_transit_function(6, seed, 0.3)
        for mask in (0, 1, 0b101, 0b110011):
            S = Subset(R.ground, mask)
            H = hull(R, S)
            assert S <= H
            assert hull(R, H) == H
            assert is_convex(R, H)


def test_convex_sets_closure_equals_scan():
    for seed in range(30):
        R = random_transit_function(6, seed, 0.35)
        assert convex_sets(R, "closure").sets == convex_sets(R, "scan").sets


def test_convex_sets_of_ch_b1_fixture():
    R = fixtures.ex_ch_b1_not_j0()
    fam = convex_sets(R)
    assert _sub(R, "ac").bits not in fam
    assert _sub(R, "bd").bits not in fam
    assert _sub(R, "bc").bits in fam
    assert len(fam) == 12


def test_convex_sets_minimal_n2():
    R = minimal_transit_function(GroundSet(2))
    assert convex_sets(R).sets == (0, 1, 2, 3)


def test_convex_sets_of_transit_system_fixture():
    R = fixtures.ex_transit_system_not_geometry()
    fam = convex_sets(R)
    assert _sub(R, "ab").bits in fam
    # R-convex even though it is not a transit set of this table
    assert _sub(R, "abc").bits in fam
    assert _sub(R, "abd").bits not in fam  # R(a,d) = V escapes it


def test_convex_sets_guard():
    with pytest.raises(GroundTooLarge):
        convex_sets(minimal_transit_function(GroundSet(25)))
    with pytest.raises(GroundTooLarge):
        convex_sets(minimal_transit_function(GroundSet(21)), "scan")


def test_extreme_points():
    R = minimal_transit_function(GroundSet(4))
    K = Subset(R.ground, 0b1011)
    assert extreme_points(R, K) == K
    R22 = fixtures.ex_not_monotone()
    V = Subset(R22.ground, R22.ground.full_mask)
    assert sorted(extreme_points(R22, V).to_labels()) == ["a", "e"]
    R26 = fixtures.ex_j0_ch_not_b1()
    assert extreme_points(R26, Subset(R26.ground, 0b111)).to_labels() == ("c",)
    with pytest.raises(NotConvex):
        extreme_points(R22, _sub(R22, "ac"))


def _verify_chain(R, chain):
    full = R.ground.full_mask
    removed = 0
    for x in chain:
        removed |= 1 << x
        assert is_convex(R, Subset(R.ground, full & ~removed))
    assert removed == full


def test_geometry_certificates_on_examples():
    expectations = {
        fixtures.ex_not_monotone: True,
        fixtures.ex_monotone_not_geometry: False,
        fixtures.ex_ch_b1_not_j0: False,
        fixtures.ex_j0_b1_not_ch: False,
        fixtures.ex_j0_ch_not_b1: False,
        fixtures.ex_peano_not_ch: True,
    }
    for builder, want in expectations.items():
        R = builder()
        cert = is_convex_geometry(R)
        assert cert.is_geometry is want, builder.__name__
        assert (cert.chain is not None) is want
        if want:
            _verify_chain(R, cert.chain)


def test_geometry_anti_exchange_witness():
    R = fixtures.ex_monotone_not_geometry()
    cert = is_convex_geometry(R)
    k_mask, p, q = cert.anti_exchange.witness
    K = Subset(R.ground, k_mask)
    assert is_convex(R, K)
    assert p not in K and q not in K and p != q
    assert q in hull(R, K | Subset(R.ground, 1 << p))
    assert p in hull(R, K | Subset(R.ground, 1 << q))
    # an alternative witness triple over the same table also validates
    K_paper = _sub(R, "def")
    a, c = R.ground.index("a"), R.ground.index("c")
    assert c in hull(R, K_paper | Subset(R.ground, 1 << a))
    assert a in hull(R, K_paper | Subset(R.ground, 1 << c))


def test_family_geometry_rejects_broken_family():
    with pytest.raises(ValueError):
        family_geometry_certificate(2, [0b01, 0b11])  # missing empty set


def test_ex_B():
    R = fixtures.ex_j0_ch_not_b1()
    B = to_betweenness(R)
    assert ex_B(B, Subset(B.ground, 0b111)).to_labels() == ("c",)
    R215 = fixtures.ex_peano_not_ch()
    B215 = to_betweenness(R215)
    uxv = R215.ground.subset_of_labels(("u", "x", "v"))
    assert sorted(ex_B(B215, uxv).to_labels()) == ["u", "v"]
    empty = to_betweenness(minimal_transit_function(GroundSet(4)))
    X = Subset(empty.ground, 0b1011)
    assert ex_B(empty, X) == X


def test_eb1_matches_eb2_on_fixtures():
    # Chvatal's equivalence is between (eB1) and (eB2) over the same strict
    # betweenness.  Note it can disagree with the (Ch) verdict of the
    # generating transit function: endpoints rescue (Ch) instances whose
    # strict counterparts fail.
    cases = [
        fixtures.ex_ch_b1_not_j0,  # ch holds on R, yet eb1/eb2 fail on B
        fixtures.ex_j0_b1_not_ch,
        fixtures.ex_j0_ch_not_b1,
        fixtures.ex_not_monotone,
        fixtures.ex_peano_not_ch,
    ]
    for builder in cases:
        B = to_betweenness(builder())
        assert check_eb1(B).holds == check_eb2(B).holds, builder.__name__


def test_eb1_known_values():
    assert not check_eb1(to_betweenness(fixtures.ex_ch_b1_not_j0())).holds
    assert not check_eb1(to_betweenness(fixtures.ex_j0_b1_not_ch())).holds
    # empty betweenness holds vacuously
    assert check_eb1(to_betweenness(minimal_transit_function(GroundSet(4)))).holds


def test_eb1_guard():
    with pytest.raises(GroundTooLarge):
        check_eb1(to_betweenness(minimal_transit_function(GroundSet(17))))


def test_segment_transit():
    R23 = fixtures.ex_monotone_not_geometry()
    assert segment_transit(R23) == R23  # monotone fixpoint
    R22 = fixtures.ex_not_monotone()
    star = segment_transit(R22)
    assert star.transit_mask(0, 4) == R22.ground.full_mask
    Rmin = minimal_transit_function(GroundSet(5))
    assert segment_transit(Rmin) == Rmin


def test_jhc():
    assert is_jhc(minimal_transit_function(GroundSet(4))).holds
    assert is_jhc(fixtures.ex_peano_not_ch()).holds
    R23 = fixtures.ex_monotone_not_geometry()
    verdict = is_jhc(R23)
    # Prop: JHC iff the segment transit function satisfies (P).
    assert verdict.holds == check_axiom(segment_transit(R23), "p").holds
    assert not verdict.holds


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**31),
    density=st.sampled_from([0.1, 0.3, 0.5]),
)
def test_jhc_iff_segment_peano_random(seed, density):
    R = random_transit_function(5, seed, density)
    assert is_jhc(R).holds == check_axiom(segment_transit(R), "p").holds


@settings(max_examples=60, deadline=None)
@given(
    seed=st.integers(min_value=0, max_value=2**31),
    density=st.sampled_from([0.05, 0.15, 0.3]),
)
def test_single_step_hull_entry_under_ch(seed, density):
    # When (Ch) holds, a point absorbed by <K u q> is already absorbed in
    # one transit step from q and some member of K.
    R = random_transit_function(5, seed, density)
    if not check_axiom(R, "ch").holds:
        return
    full = R.ground.full_mask
    for k_mask in convex_sets(R):
        outside = full & ~k_mask
        for q in Subset(R.ground, outside):
            H = hull(R, Subset(R.ground, k_mask | (1 << q)))
            for p in Subset(R.ground, H.bits & outside & ~(1 << q)):
                assert any(
                    p in R.transit_set(q, x) for x in Subset(R.ground, k_mask)
                ), (R.dumps(), k_mask, p, q)


@settings(max_examples=80, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=6),
    seed=st.integers(min_value=0, max_value=2**31),
    density=st.sampled_from([0.1, 0.3, 0.6]),
)
def test_convexity_closure_properties_random(n, seed, density):
    R = random_transit_function(n, seed, density)
    fam = convex_sets(R)
    members = set(fam.sets)
    assert 0 in members and R.ground.full_mask in members
    ordered = sorted(members)
    for i, a in enumerate(ordered):
        for b in ordered[i + 1 :]:
            assert a & b in members
    assert hull(R, Subset(R.ground, (seed % (1 << n)))).bits in members

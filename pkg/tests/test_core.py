import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from transitgeo import (
    GroundSet,
    Subset,
    make_transit_function,
    minimal_transit_function,
    random_transit_function,
    to_betweenness,
    transit_set,
)
from transitgeo.core import transit_function_from_json
from transitgeo.errors import AxiomViolation, DuplicatePair, IndexOutOfRange

import fixtures


def test_ground_set_validation():
    with pytest.raises(ValueError):
        GroundSet(0)
    with pytest.raises(ValueError):
        GroundSet(2, ("a",))
    with pytest.raises(ValueError):
        GroundSet(2, ("a", "a"))
    g = GroundSet(3, ("x", "y", "z"))
    assert g.label(2) == "z"
    assert g.index("y") == 1
    with pytest.raises(IndexOutOfRange):
        g.check_index(3)
    with pytest.raises(IndexOutOfRange):
        g.index("w")


def test_subset_behaviour():
    g = GroundSet(5)
    s = g.subset([3, 1])
    assert list(s) == [1, 3]
    assert 1 in s and 0 not in s
    assert len(s) == 2
    assert (s | g.subset([0])).bits == 0b01011
    assert (s & g.subset([1])).bits == 0b00010
    assert s.complement().indices() == (0, 2, 4)
    with pytest.raises(IndexOutOfRange):
        g.subset([5])


def test_make_transit_function_defaults_and_errors():
    g = GroundSet(5, tuple("abcde"))
    R = fixtures.ex_not_monotone()
    # defaulted pair keeps the endpoints only
    assert sorted(R.transit_set(1, 2)) == [1, 2]
    # stored pair is symmetric
    assert R.transit_set(0, 4).bits == R.transit_set(4, 0).bits
    assert sorted(R.transit_set(0, 4).to_labels()) == ["a", "b", "d", "e"]
    with pytest.raises(AxiomViolation) as err:
        make_transit_function(g, [(0, 2, [1, 2])])
    assert err.value.axiom == "t1"
    with pytest.raises(DuplicatePair):
        make_transit_function(g, [(0, 2, [0, 1, 2]), (2, 0, [0, 2])])
    with pytest.raises(IndexOutOfRange):
        make_transit_function(g, [(0, 7, [0, 7])])
    with pytest.raises(AxiomViolation) as err:
        make_transit_function(g, [(1, 1, [0, 1])])
    assert err.value.axiom == "t3"


def test_singleton_ground():
    R = make_transit_function(GroundSet(1, ("a",)), ())
    assert list(transit_set(R, 0, 0)) == [0]


def test_transit_set_diagonal_is_singleton():
    R = fixtures.ex_not_monotone()
    for u in range(5):
        assert list(R.transit_set(u, u)) == [u]


def test_to_betweenness_strips_endpoints():
    R = fixtures.ex_ch_b1_not_j0()
    B = to_betweenness(R)
    assert sorted(B.between_set(0, 2)) == [1]
    assert list(B.between_set(0, 1)) == []
    assert list(B.between_set(2, 2)) == []
    R2 = fixtures.ex_peano_not_ch()
    B2 = to_betweenness(R2)
    u, x, v = R2.ground.index("u"), R2.ground.index("x"), R2.ground.index("v")
    assert sorted(B2.between_set(u, v)) == [x]


def test_round_trip_through_entries():
    R = fixtures.ex_no_k()
    rebuilt = make_transit_function(
        R.ground, [(u, v, m) for u, v, m in R.nontrivial_entries()]
    )
    assert rebuilt == R


def test_json_round_trip_bit_exact():
    for builder in (fixtures.ex_not_monotone, fixtures.ex_transit_system_not_geometry):
        R = builder()
        payload = json.loads(json.dumps(R.to_json()))
        back = transit_function_from_json(payload)
        assert back == R
        assert back.ground.labels == R.ground.labels


def test_random_transit_function_determinism():
    a = random_transit_function(5, seed=7, density=0.3)
    b = random_transit_function(5, seed=7, density=0.3)
    assert a == b
    c = random_transit_function(5, seed=8, density=0.3)
    assert a != c


def test_random_density_zero_is_minimal():
    R = random_transit_function(5, seed=7, density=0.0)
    assert R == minimal_transit_function(GroundSet(5))


def test_random_density_one_is_full():
    R = random_transit_function(4, seed=1, density=1.0)
    for u in range(4):
        for v in range(u + 1, 4):
            assert R.transit_mask(u, v) == 0b1111


@settings(max_examples=60, deadline=None)
@given(
    n=st.integers(min_value=1, max_value=9),
    seed=st.integers(min_value=0, max_value=2**31),
    density=st.floats(min_value=0.0, max_value=1.0),
)
def test_random_transit_function_satisfies_axioms(n, seed, density):
    R = random_transit_function(n, seed, density)
    for u in range(n):
        assert R.transit_mask(u, u) == 1 << u
        for v in range(n):
            m = R.transit_mask(u, v)
            assert m == R.transit_mask(v, u)
            assert (m >> u) & 1 and (m >> v) & 1
    B = to_betweenness(R)
    for u in range(n):
        for v in range(n):
            assert u not in B.between_set(u, v)

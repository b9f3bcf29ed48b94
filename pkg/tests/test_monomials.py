import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import EX31, gammas
from schubfpt.errors import BudgetExceededError, DegenerateTopTupleError
from schubfpt.lattice import SchubertLattice
from schubfpt.monomials import (
    anticanonical_shifted_spec,
    canonical_spec,
    generators,
    is_multichain,
    membership,
    min_generation_degree,
    min_member_degree,
    multichains,
)
from schubfpt.tuples import GammaTuple, decompose, kappa_profile


@pytest.fixture(scope="module")
def small():
    return SchubertLattice.enumerate(GammaTuple((1, 3), 4))


@pytest.fixture(scope="module")
def ex31():
    return SchubertLattice.enumerate(EX31)


def test_membership_examples(small, ex31):
    assert membership(((1, 3),), (1, 1), small)
    assert not membership(((3, 4),), (1, 0), small)
    assert membership(((1, 3), (1, 4)), (2, 1), small)
    assert not membership(((1, 3), (1, 4)), (1, 2), small)
    assert membership((EX31.entries,), (1, 1, 1), ex31)
    with pytest.raises(ValueError):
        membership(((1, 3),), (1, 1, 1), small)


def test_generators_examples(small, ex31):
    assert generators((0, 0), small) == {()}
    assert generators((1, 1), small) == {((1, 3),)}
    assert generators((1, 1, 1), ex31) == {(EX31.entries,)}
    gens = generators((2, 1), small)
    assert ((1, 3), (1, 3)) in gens and ((1, 3), (1, 4)) in gens
    # first factor in Omega_0 and Omega_1, second in Omega_0 = {[1,3],[1,4]}
    assert gens == {((1, 3), (1, 3)), ((1, 3), (1, 4))}


def test_generators_budget(ex31):
    with pytest.raises(BudgetExceededError):
        generators((3, 0, 0), ex31, max_count=5)


def test_min_generation_degree_examples(small, ex31):
    assert min_generation_degree(canonical_spec(EX31), ex31) == 8
    assert min_generation_degree((1, 1, 1), ex31) == 1
    assert min_generation_degree((0, 0, 0), ex31) == 0
    assert min_generation_degree((2, 1), small) == 2


def test_specs():
    assert canonical_spec(EX31) == (7, 7, 8)
    assert anticanonical_shifted_spec(EX31, 1) == (1, 1, 0)
    assert anticanonical_shifted_spec(EX31, 3) == (3, 3, 0)
    assert anticanonical_shifted_spec(GammaTuple((1, 3), 4), 2) == (0, 0)
    with pytest.raises(DegenerateTopTupleError):
        canonical_spec(GammaTuple((3, 4), 4))
    with pytest.raises(ValueError):
        anticanonical_shifted_spec(EX31, 0)


def test_shifted_degrees_worked_example(ex31):
    for m in (1, 3):
        assert min_generation_degree(anticanonical_shifted_spec(EX31, m), ex31) == m


def test_multichain_enumeration(small):
    mcs = list(multichains(small, 2))
    assert all(is_multichain(mc, small) for mc in mcs)
    # weakly increasing pairs in the 5-element lattice: 5 loops + 9 strict pairs
    assert len(mcs) == 14


@st.composite
def lattice_and_spec(draw):
    gamma = draw(gammas(max_n=5))
    if gamma.is_top:
        gamma = GammaTuple.bottom(gamma.d, gamma.n + 1)
    lat = SchubertLattice.enumerate(gamma)
    spec = tuple(draw(st.integers(0, 3)) for _ in range(lat.t + 1))
    return lat, spec


@settings(max_examples=50, deadline=None)
@given(lattice_and_spec())
def test_generators_match_counted_members(case):
    lat, spec = case
    u = max(spec)
    gens = generators(spec, lat)
    counted = {mc for mc in multichains(lat, u) if membership(mc, spec, lat)}
    assert gens == counted
    assert (lat.bottom,) * u in gens
    assert min_member_degree(spec, lat) == u


@settings(max_examples=50, deadline=None)
@given(lattice_and_spec(), st.data())
def test_membership_monotone(case, data):
    lat, spec = case
    lower = tuple(data.draw(st.integers(0, u)) for u in spec)
    u = max(spec)
    for mc in multichains(lat, u, max_count=2000):
        if membership(mc, spec, lat):
            assert membership(mc, lower, lat)


@settings(max_examples=30, deadline=None)
@given(gammas(max_n=6))
def test_canonical_and_anticanonical_degrees(gamma):
    if gamma.is_top:
        return
    lat = SchubertLattice.enumerate(gamma)
    prof = kappa_profile(decompose(gamma))
    assert min_member_degree(canonical_spec(gamma), lat) == prof.kappa_max
    for m in (1, 2, 3):
        spec = anticanonical_shifted_spec(gamma, m)
        assert min_member_degree(spec, lat) == m * (prof.kappa_max - prof.kappa_min)

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from conftest import EX31, gammas
from schubfpt.errors import BottomTupleError, DegenerateTopTupleError, InvalidTupleError
from schubfpt.lattice import leq
from schubfpt.tuples import (
    GammaTuple,
    all_tuples,
    decompose,
    fpt,
    is_gorenstein,
    kappa_profile,
    m_value,
    m_value_at,
    neg_a_invariant,
    nu_e_predicted,
    twist,
    upper_neighbors,
)


@pytest.mark.parametrize(
    "entries, n",
    [((), 3), ((0, 2), 3), ((2, 2), 3), ((3, 2), 3), ((1, 4), 3), ((1, 2, 3, 4), 3), ((1,), 0)],
)
def test_invalid_tuples_rejected(entries, n):
    with pytest.raises(InvalidTupleError):
        GammaTuple(entries, n)


def test_parse_cross_checks_d():
    assert GammaTuple.parse("2,3,4,6,8,9", d=6, n=11) == EX31
    with pytest.raises(InvalidTupleError):
        GammaTuple.parse("2,3,4", d=2, n=5)
    with pytest.raises(InvalidTupleError):
        GammaTuple.parse("2,x", d=2, n=5)


def test_decompose_worked_example():
    dec = decompose(EX31)
    assert dec.blocks == ((2, 3, 4), (6,), (8, 9))
    assert dec.gaps == ((5,), (7,), (10, 11))
    assert (dec.s, dec.t) == (2, 2)


def test_decompose_single_block():
    dec = decompose(GammaTuple((1, 2, 3), 7))
    assert dec.blocks == ((1, 2, 3),)
    assert dec.gaps == ((4, 5, 6, 7),)
    assert (dec.s, dec.t) == (0, 0)


def test_decompose_last_entry_at_n():
    dec = decompose(GammaTuple((2, 4), 4))
    assert dec.blocks == ((2,), (4,))
    assert dec.gaps == ((3,), ())
    assert (dec.s, dec.t) == (1, 0)


@given(gammas())
def test_decompose_invariants(gamma):
    dec = decompose(gamma)
    assert dec.entries() == gamma.entries
    assert sum(dec.block_sizes) == gamma.d
    assert sum(dec.block_sizes) + sum(dec.gap_sizes) == gamma.n - gamma.entries[0] + 1
    assert all(dec.gaps[:-1])  # blocks are maximal
    if gamma.entries[-1] == gamma.n:
        assert dec.t == dec.s - 1 and dec.gaps[-1] == ()
    else:
        assert dec.t == dec.s


def test_kappa_profile_examples():
    prof = kappa_profile(decompose(EX31))
    assert prof.kappas == (7, 7, 8)
    assert (prof.kappa_max, prof.kappa_min) == (8, 7)
    assert kappa_profile(decompose(GammaTuple((1, 2, 3), 7))).kappas == (7,)
    assert kappa_profile(decompose(GammaTuple((1, 3), 4))).kappas == (3, 3)


def test_kappa_profile_refuses_top():
    with pytest.raises(DegenerateTopTupleError):
        kappa_profile(decompose(GammaTuple((3, 4), 4)))


@given(gammas())
def test_kappa_matches_scratch_reading(gamma):
    if gamma.is_top:
        return
    assert list(kappa_profile(decompose(gamma)).kappas) == oracles.kappas_from_scratch(gamma.entries, gamma.n)


@given(gammas())
def test_kappa_differences_and_gorenstein(gamma):
    if gamma.is_top:
        return
    dec = decompose(gamma)
    prof = kappa_profile(dec)
    k = prof.kappas
    for i in range(1, dec.t + 1):
        assert k[i - 1] - k[i] == dec.gap_sizes[i - 1] - dec.block_sizes[i]
    assert prof.kappa_min <= prof.kappa_max
    assert (prof.kappa_min == prof.kappa_max) == is_gorenstein(dec)


def test_fpt_and_neg_a():
    assert fpt(EX31) == 7
    assert neg_a_invariant(EX31) == 8
    assert fpt(GammaTuple((1, 3), 4)) == 3
    for d, n in [(1, 1), (2, 4), (3, 3), (4, 9)]:
        top = GammaTuple.top(d, n)
        assert fpt(top) == 1 and neg_a_invariant(top) == 1
    for d, n in [(1, 5), (3, 7), (4, 4 + 3)]:
        assert neg_a_invariant(GammaTuple.bottom(d, n)) == n


def test_neg_a_on_full_lattice_matches_chain_oracle():
    for d, n in [(1, 4), (2, 5), (3, 7)]:
        bottom = GammaTuple.bottom(d, n)
        assert neg_a_invariant(bottom) == len(oracles.principal_chain(bottom.entries, n))


def test_twist_examples():
    assert twist(EX31) == GammaTuple((3, 4, 6, 8, 9, 10), 11)
    assert twist(GammaTuple.bottom(3, 7)) == GammaTuple.top(3, 7)
    assert twist(GammaTuple((2,), 3)) == GammaTuple((2,), 3)


@given(gammas(max_n=7), st.data())
def test_twist_involution_and_order_reversal(gamma, data):
    assert twist(twist(gamma)) == gamma
    other = data.draw(st.sampled_from(list(all_tuples(gamma.d, gamma.n))))
    assert leq(gamma.entries, other.entries) == leq(twist(other).entries, twist(gamma).entries)


def test_m_value_examples():
    assert m_value(GammaTuple((3, 4, 6, 8, 9, 10), 11)) == 1
    for d in range(1, 6):
        assert m_value(GammaTuple(tuple(range(1, d)) + (d + 1,), d + 1)) == 1 - d
    assert m_value(GammaTuple((3,), 3)) == 1
    with pytest.raises(BottomTupleError):
        m_value(GammaTuple((1, 2, 3), 5))


@given(gammas())
def test_m_value_lemma(gamma):
    a = gamma.entries
    if gamma.is_bottom:
        return
    for j in range(1, gamma.d):
        if j < a[j - 1] == a[j] - 1:
            assert m_value_at(a, j + 1) == m_value_at(a, j) - 1
    starts = [j for j in range(1, gamma.d + 1) if a[j - 1] > j and (j == 1 or a[j - 2] != a[j - 1] - 1)]
    assert max(m_value_at(a, j) for j in starts) == m_value(gamma)


def test_upper_neighbors_examples():
    assert [z.entries for z in upper_neighbors(EX31)] == [
        (2, 3, 5, 6, 8, 9),
        (2, 3, 4, 7, 8, 9),
        (2, 3, 4, 6, 8, 10),
    ]
    assert [z.entries for z in upper_neighbors(GammaTuple((1, 2, 3), 6))] == [(1, 2, 4)]
    assert [z.entries for z in upper_neighbors(GammaTuple((2, 4), 4))] == [(3, 4)]
    assert upper_neighbors(GammaTuple((3, 4), 4)) == []


@given(gammas(max_n=7))
def test_upper_neighbors_are_the_covers(gamma):
    els = oracles.upper_set(gamma.entries, gamma.n)
    got = sorted(z.entries for z in upper_neighbors(gamma))
    assert got == sorted(oracles.covers(els, gamma.entries))
    assert len(set(got)) == len(got)


def test_is_gorenstein_examples():
    assert not is_gorenstein(decompose(EX31))
    assert is_gorenstein(decompose(GammaTuple((1, 3), 4)))
    assert is_gorenstein(decompose(GammaTuple((2, 4), 4)))


def test_nu_e_predicted():
    assert nu_e_predicted(EX31, 2, 3) == 49
    assert nu_e_predicted(EX31, 3, 1) == 2 * 7
    assert nu_e_predicted(GammaTuple((1, 3), 4), 5, 2) == 72
    # no wraparound at sizes that would overflow 64-bit arithmetic
    assert nu_e_predicted(EX31, 2, 100) == 7 * (2**100 - 1)
    with pytest.raises(ValueError):
        nu_e_predicted(EX31, 4, 1)
    with pytest.raises(ValueError):
        nu_e_predicted(EX31, 2, 0)
    with pytest.raises(DegenerateTopTupleError):
        nu_e_predicted(GammaTuple((3, 4), 4), 2, 1)

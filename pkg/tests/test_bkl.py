from __future__ import annotations

import pytest
from hypothesis import given

from braidkit.bkl import (
    BandWord,
    BklNF,
    CanonicalFactor,
    artin_to_band,
    band_generator_artin,
    band_to_artin,
    bkl_delta_word,
    bkl_equal,
    bkl_nf,
    brute_force_divisor_count,
    delta_divisors,
    factor_join,
    factor_meet,
    left_divides,
)
from braidkit.braid import BraidWord, braid_equal, delta_word, garside_nf, sigma
from braidkit.garside import is_noncrossing

from .conftest import band_words, braid_words


def test_band_generator_examples():
    assert band_generator_artin(2, 1) == (1,)
    assert band_to_artin(BandWord.parse("a(3,1)")) == sigma(3, 2, 1, -2)
    assert braid_equal(band_to_artin(BandWord.parse("n=3 a(3,2) a(2,1)")), sigma(3, 2, 1))


def test_artin_to_band_examples():
    assert artin_to_band(sigma(2, 1)) == BandWord(2, ((2, 1, 1),))
    assert artin_to_band(sigma(3, -2)) == BandWord(3, ((3, 2, -1),))
    assert artin_to_band(sigma(3, 2, 1)) == bkl_delta_word(3)


def test_band_parse_accepts_either_index_order():
    assert BandWord.parse("a(1,3)", 3) == BandWord.parse("a(3,1)", 3)


@pytest.mark.parametrize("n, count", [(1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (6, 132)])
def test_catalan_counts(n, count):
    assert len(delta_divisors(n)) == count


@pytest.mark.parametrize("n", [2, 3, 4])
def test_divisor_count_against_artin_brute_force(n):
    assert brute_force_divisor_count(n) == len(delta_divisors(n))


def test_divisors_are_noncrossing_and_divide_delta():
    top = CanonicalFactor.delta(5)
    for d in delta_divisors(5):
        assert is_noncrossing(d.blocks)
        assert left_divides(d, top)


def test_meet_and_join_examples():
    a21 = CanonicalFactor.from_blocks(3, [[1, 2]])
    a32 = CanonicalFactor.from_blocks(3, [[2, 3]])
    assert factor_meet(a21, a32) == CanonicalFactor.identity(3)
    assert factor_join(a21, a32) == CanonicalFactor.delta(3)


def test_meet_is_block_intersection():
    from braidkit.bkl import dual_structure

    st = dual_structure(5)
    divs = delta_divisors(5)
    for f in divs[::3]:
        for g in divs[::4]:
            assert factor_meet(f, g).perm == st.meet(f.perm, g.perm)


def test_nf_examples():
    assert bkl_nf(bkl_delta_word(3)) == BklNF(3, 1, ())
    assert bkl_nf(BandWord.parse("a'(2,1)", 2)) == BklNF(2, -1, ())
    nf = bkl_nf(BandWord.parse("a(2,1) a(2,1)", 3))
    assert nf.power == 0 and [str(f) for f in nf.canonical_factors()] == ["a(2,1)", "a(2,1)"]


@given(band_words(max_len=12), band_words(max_len=12))
def test_bkl_agrees_with_garside(u, v):
    v = BandWord(u.n, tuple(x for x in v.letters if x[0] <= u.n))
    same_bkl = bkl_equal(u, v)
    same_garside = garside_nf(band_to_artin(u)) == garside_nf(band_to_artin(v))
    assert same_bkl == same_garside


@given(band_words(max_len=12))
def test_bkl_nf_round_trip(w):
    nf = bkl_nf(w)
    assert bkl_nf(nf.to_word()) == nf
    assert braid_equal(band_to_artin(nf.to_word()), band_to_artin(w))


@given(braid_words(max_len=10))
def test_artin_band_conversions_preserve_the_braid(w):
    assert braid_equal(band_to_artin(artin_to_band(w)), w)


def test_delta_words_agree():
    for n in range(2, 7):
        assert braid_equal(band_to_artin(bkl_delta_word(n)), sigma(n, *range(n - 1, 0, -1)))
        # delta^n = Delta^2
        assert braid_equal(band_to_artin(bkl_delta_word(n) ** n), delta_word(n) ** 2)

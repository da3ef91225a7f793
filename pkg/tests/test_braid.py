from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from braidkit.braid import (
    BraidWord,
    GarsideNF,
    act_free,
    braid_equal,
    delete_strand,
    delete_strands,
    delta_word,
    final_position,
    free_equal,
    garside_nf,
    permutation_of,
    sigma,
)
from braidkit.freegroup import FreeAutomorphism, free_reduce
from braidkit.garside import finishing_set, permutation_braid_letters, starting_set
from braidkit.words import ParseError, parse_letters

from .conftest import braid_words


# -- parsing ---------------------------------------------------------------------


def test_parse_tokens_and_header():
    n, letters = parse_letters("n=5 s3 s3' x2 a(4,2) a'(4,2) b(4,2) e2 t t'")
    assert n == 5
    assert [l.kind for l in letters] == ["s", "s", "x", "a", "a", "b", "e", "t", "t"]
    assert letters[1].sign == -1 and letters[4].sign == -1 and letters[8].sign == -1


@pytest.mark.parametrize(
    "text, token, position",
    [("s1 q2", "q2", 1), ("s1 s2 x1'", "x1'", 2), ("b'(2,1)", "b'(2,1)", 0), ("n=3 e1'", "e1'", 1)],
)
def test_parse_errors_report_token_and_position(text, token, position):
    with pytest.raises(ParseError) as info:
        parse_letters(text)
    assert info.value.token == token
    assert info.value.position == position


def test_braid_word_round_trip():
    w = BraidWord.parse("n=4 s1 s3' s2")
    assert w == sigma(4, 1, -3, 2)
    assert BraidWord.parse(str(w), 4) == w
    assert str(BraidWord(3)) == "1"


def test_index_out_of_range():
    with pytest.raises(ParseError):
        BraidWord.parse("n=3 s3")


# -- permutations and Delta --------------------------------------------------------


def test_permutation_examples():
    assert permutation_of(sigma(2, 1)) == (1, 0)
    assert permutation_of(BraidWord(3)) == (0, 1, 2)
    assert permutation_of(sigma(3, 1, 2, 1)) == permutation_of(sigma(3, 2, 1, 2)) == (2, 1, 0)


def test_delta_word_examples():
    assert delta_word(2).letters == (1,)
    assert braid_equal(delta_word(3), sigma(3, 1, 2, 1))
    assert permutation_of(delta_word(4)) == (3, 2, 1, 0)


# -- normal form: oracle first ------------------------------------------------------


def test_nf_examples():
    assert garside_nf(sigma(3, 1, 2, 1)) == GarsideNF(3, 1, ())
    assert garside_nf(BraidWord(3)) == GarsideNF(3, 0, ())
    nf = garside_nf(sigma(3, -1))
    assert nf.power == -1 and len(nf.factors) == 1
    # the factor is Delta s1^-1 = s1 s2
    assert braid_equal(nf.factor_words()[0], sigma(3, 1, 2))
    assert braid_equal(nf.to_word(), sigma(3, -1))


def test_equality_examples():
    assert braid_equal(sigma(3, 1, 2, 1), sigma(3, 2, 1, 2))
    assert not braid_equal(sigma(3, 1), sigma(3, 2))
    assert braid_equal(sigma(4, 1, 3), sigma(4, 3, 1))


def test_free_action_examples():
    assert act_free(sigma(3, 1)).images == ((2,), (-2, 1, 2), (3,))
    assert act_free(BraidWord(3)) == FreeAutomorphism.identity(3)
    assert act_free(sigma(2, 1, 1)).images == ((-2, 1, 2), (-2, -1, 2, 1, 2))


def test_free_reduce_examples():
    assert free_reduce((1, -1)) == ()
    assert free_reduce((-2, 1, 2)) == (-2, 1, 2)
    assert free_reduce((-2, 1, -1, 2, 3)) == (3,)


@given(braid_words(max_len=12), braid_words(max_len=12))
def test_nf_equality_matches_free_oracle(u, v):
    if u.n != v.n:
        v = BraidWord(u.n, tuple(x for x in v.letters if abs(x) < u.n))
    assert braid_equal(u, v) == free_equal(u, v)


@given(braid_words(max_len=14))
def test_nf_is_a_fixed_point_and_represents_input(w):
    nf = garside_nf(w)
    assert garside_nf(nf.to_word()) == nf
    assert free_equal(nf.to_word(), w)


@given(braid_words(max_len=10))
def test_nf_factors_are_left_weighted(w):
    nf = garside_nf(w)
    top = tuple(range(w.n - 1, -1, -1))
    for f in nf.factors:
        assert f != top and f != tuple(range(w.n))
    for a, b in zip(nf.factors, nf.factors[1:]):
        assert starting_set(b) <= finishing_set(a)


@given(braid_words(max_len=10), st.data())
def test_inserting_relations_keeps_nf(w, data):
    n = w.n
    k = data.draw(st.integers(0, len(w)))
    i = data.draw(st.integers(1, n - 1))
    extra = (i, -i)
    if n >= 3 and i < n - 1 and data.draw(st.booleans()):
        extra = (i, i + 1, i, -(i + 1), -i, -(i + 1))
    v = BraidWord(n, w.letters[:k] + extra + w.letters[k:])
    assert garside_nf(v) == garside_nf(w)


@given(braid_words(max_len=10), braid_words(max_len=10))
def test_nf_multiplication_and_inverse(u, v):
    v = BraidWord(u.n, tuple(x for x in v.letters if abs(x) < u.n))
    nu, nv = garside_nf(u), garside_nf(v)
    assert nu * nv == garside_nf(u * v)
    assert nu.inverse() * nu == garside_nf(BraidWord(u.n))


def test_permutation_braid_letters_realise_permutation():
    p = (2, 0, 3, 1)
    w = BraidWord(4, tuple(i + 1 for i in permutation_braid_letters(p)))
    assert permutation_of(w) == p


def test_nf_text_round_trip():
    nf = garside_nf(sigma(4, 1, -2, 3, 2, 1))
    text = str(nf)
    assert text.startswith("power=")
    words = text.split("factors=")[1].split("|")
    rebuilt = delta_word(4) ** nf.power
    for piece in words:
        rebuilt = rebuilt * BraidWord.parse(piece, 4)
    assert garside_nf(rebuilt) == nf


# -- strand deletion ----------------------------------------------------------------


def test_delete_examples():
    assert delete_strand(sigma(2, 1), 1) == BraidWord(1)
    assert delete_strand(sigma(2, 1, 1), 2) == BraidWord(1)
    assert delete_strand(sigma(3, 1), 3) == sigma(2, 1)


@given(braid_words(min_n=3, max_len=10), st.data())
def test_delete_strand_follows_the_strand(w, data):
    s = data.draw(st.integers(1, w.n))
    cut = data.draw(st.integers(0, len(w)))
    u, v = BraidWord(w.n, w.letters[:cut]), BraidWord(w.n, w.letters[cut:])
    lhs = delete_strand(w, s)
    rhs = delete_strand(u, s) * delete_strand(v, final_position(u, s))
    assert braid_equal(lhs, rhs)


@given(braid_words(min_n=3, max_len=10))
def test_delete_respects_equality(w):
    nf_word = garside_nf(w).to_word()
    for s in range(1, w.n + 1):
        assert braid_equal(delete_strand(w, s), delete_strand(nf_word, s))


def test_delete_strands_many():
    w = sigma(4, 1, 2, 3, 1)
    assert delete_strands(w, [2]) == delete_strand(w, 2)
    assert delete_strands(w, [1, 2, 3, 4]).n == 0

from __future__ import annotations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from braidkit.bkl import BandWord, band_to_artin
from braidkit.braid import garside_nf
from braidkit.singular import (
    SBandWord,
    SingularNF,
    SingularWord,
    alphabet,
    band_to_classical,
    base,
    base_by_closure,
    classical_to_band,
    closure_of,
    complement_word,
    conjugacy_test,
    conjugate_by,
    delta_divide,
    delta_divide_by_closure,
    divider,
    is_admissible,
    left_cancel,
    neighbours,
    pair_lcm,
    positive_closure,
    positive_conjugates,
    shift_gen,
    singular_equal,
    singular_nf,
)
from braidkit.search import common_multiple_search

from .conftest import singular_words


def sb(text: str, n: int | None = None) -> SBandWord:
    return SBandWord.parse(text, n)


def cl(text: str, n: int | None = None) -> SBandWord:
    return classical_to_band(SingularWord.parse(text, n))


def words(n: int, codes) -> set[str]:
    alpha = alphabet(n)
    return {alpha.format(w) for w in codes}


# -- conversions ----------------------------------------------------------------------


def test_conversion_examples():
    assert classical_to_band(SingularWord.parse("x1", 2)) == sb("b(2,1)")
    assert band_to_classical(sb("b(3,1)", 3)) == SingularWord.parse("s2 x1 s2'", 3)
    assert classical_to_band(SingularWord.parse("s1", 2)) == sb("a(2,1)")


# -- positive closure -------------------------------------------------------------


def test_closure_examples():
    assert words(2, closure_of(sb("b(2,1)"))) == {"b(2,1)"}
    assert words(3, closure_of(sb("a(3,2) a(2,1)"))) == {"a(3,2) a(2,1)", "a(3,1) a(3,2)", "a(2,1) a(3,1)"}
    assert words(2, closure_of(sb("a(2,1) b(2,1)"))) == {"a(2,1) b(2,1)", "b(2,1) a(2,1)"}


def test_base_examples():
    assert base(sb("b(2,1)")) == sb("b(2,1)")
    assert str(base(sb("a(3,2) a(2,1)"))) == "a(2,1) a(3,1)"
    assert base(sb("b(2,1) a(2,1)")) == sb("a(2,1) b(2,1)")


def test_delta_divide_examples():
    assert delta_divide(sb("a(3,2) a(2,1)")) == SBandWord(3)
    assert delta_divide(sb("b(2,1)")) is None
    n = 4
    q = delta_divide(SBandWord(n, tuple((*g, 1) for g in [("a", 2, 1)] + complement_word(n, 2, 1))))
    assert q == SBandWord(n)


def test_nf_examples():
    assert singular_nf(sb("a'(2,1)", 2)) == SingularNF(2, -1, ())
    nf = singular_nf(sb("b(2,1)"))
    assert nf.power == 0 and nf.base_word() == sb("b(2,1)")
    assert singular_nf(cl("s2 s1", 3)) == SingularNF(3, 1, ())
    assert str(singular_nf(sb("a'(2,1)", 2))) == "power=-1 base="


def test_equality_examples():
    assert singular_equal(cl("x1 s1", 2), cl("s1 x1", 2))
    assert not singular_equal(cl("x1", 2), cl("s1", 2))
    assert singular_equal(cl("s1 s2 x1", 3), cl("x2 s1 s2", 3))


def test_classical_relations():
    for n in range(3, 6):
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) != 1:
                    assert singular_equal(cl(f"x{i} s{j}", n), cl(f"s{j} x{i}", n))
                    assert singular_equal(cl(f"x{i} x{j}", n), cl(f"x{j} x{i}", n))
                if j == i + 1:
                    assert singular_equal(cl(f"s{i} s{j} x{i}", n), cl(f"x{j} s{i} s{j}", n))
                    assert singular_equal(cl(f"s{j} s{i} x{j}", n), cl(f"x{i} s{j} s{i}", n))
            assert not singular_equal(cl(f"x{i}", n), cl(f"s{i}", n))


# -- the l.c.m. table --------------------------------------------------------------


def test_lcm_examples():
    entry = pair_lcm(4, ("a", 3, 1), ("b", 3, 1))
    assert words(4, [entry.lcm]) == {"a(3,1) b(3,1)"}
    assert pair_lcm(4, ("b", 3, 1), ("b", 2, 1)) is None
    assert pair_lcm(4, ("b", 4, 2), ("b", 3, 1)) is None
    assert not is_admissible(("b", 3, 2), ("b", 4, 3))
    nested = pair_lcm(4, ("a", 4, 2), ("a", 3, 1))
    alpha = alphabet(4)
    delta_4 = tuple(alpha.a(t, s) for t, s in [(4, 3), (3, 2), (2, 1)])
    assert len(nested.lcm) == 3
    assert delta_4 in positive_closure(4, nested.lcm)


@pytest.mark.parametrize("n", [3, 4])
def test_lcm_table_against_closure(n):
    alpha = alphabet(n)
    G = len(alpha.gens)
    for x in range(G):
        for y in range(G):
            if x == y:
                continue
            entry = pair_lcm(n, alpha.gens[x], alpha.gens[y])
            if entry is None:
                continue
            lhs = positive_closure(n, (x,) + entry.comp_x)
            assert (y,) + entry.comp_y in lhs


def test_left_cancel_examples():
    n = 3
    alpha = alphabet(n)
    a32, a21 = ("a", 3, 2), ("a", 2, 1)
    # a32 X = a21 Y = delta_3
    X = (alpha.a(2, 1),)
    Y = (alpha.a(3, 1),)
    assert left_cancel(n, a32, X, a21, Y) == ()
    x, y = ("a", 2, 1), ("b", 2, 1)
    assert left_cancel(2, x, (alphabet(2).b(2, 1),), y, (alphabet(2).a(2, 1),)) == ()


# -- division against the closure oracle --------------------------------------------


@settings(max_examples=80)
@given(st.integers(2, 4).flatmap(lambda n: st.tuples(st.just(n), st.lists(st.integers(0, len(alphabet(n).gens) - 1), max_size=6))))
def test_division_matches_closure(data):
    n, w = data
    w = tuple(w)
    dv = divider(n)
    closure = positive_closure(n, w)
    assert dv.base(w) == min(closure) == base_by_closure(n, w)
    for x in range(len(alphabet(n).gens)):
        got = dv.div_letter(x, w)
        assert (got is not None) == any(v[:1] == (x,) for v in closure)
        if got is not None:
            assert (x,) + got in closure
    q = delta_divide_by_closure(n, w)
    q2 = dv.div_word(alphabet(n).delta(), w)
    assert (q is None) == (q2 is None)
    if q is not None:
        assert dv.base(q2) == q


# -- normal form properties ------------------------------------------------------------


@given(singular_words(max_len=10))
def test_nf_idempotent_and_reconstructs(w):
    nf = singular_nf(w)
    assert singular_nf(nf.to_word()) == nf
    dv = divider(w.n)
    assert dv.delta_split(nf.base)[0] == 0


@given(singular_words(positive=True, max_len=8), st.randoms(use_true_random=False))
def test_base_invariant_under_relations(w, r):
    alpha = alphabet(w.n)
    codes = w.codes()
    for _ in range(30):
        options = list(neighbours(alpha, codes))
        if not options:
            break
        codes = r.choice(options)
    assert divider(w.n).base(codes) == divider(w.n).base(w.codes())


@given(singular_words(max_len=8, allow_b=False), singular_words(max_len=8, allow_b=False))
def test_braid_part_agrees_with_garside(u, v):
    v = SBandWord(u.n, tuple(x for x in v.letters if x[1] <= u.n))

    def to_band(w):
        return BandWord(w.n, tuple((t, s, e) for _, t, s, e in w.letters))

    same = garside_nf(band_to_artin(to_band(u))) == garside_nf(band_to_artin(to_band(v)))
    assert singular_equal(u, v) == same


@given(singular_words(max_len=6), singular_words(max_len=6), singular_words(max_len=3, allow_b=False))
def test_cancelling_inserted_braids(x, y, g):
    n = x.n
    y = SBandWord(n, tuple(l for l in y.letters if l[1] <= n))
    g = SBandWord(n, tuple(l for l in g.letters if l[1] <= n))
    assert singular_nf(x * g * g.inverse() * y) == singular_nf(x * y)


# -- delta commutation and divisibility ----------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_delta_commutation_and_complements(n):
    alpha = alphabet(n)
    delta_class = positive_closure(n, alpha.delta())
    for t in range(2, n + 1):
        for s in range(1, t):
            D = tuple(alpha.code[g] for g in complement_word(n, t, s))
            assert (alpha.a(t, s),) + D in delta_class
            for kind in "ab":
                g = (kind, t, s)
                lhs = (alpha.code[g],) + alpha.delta()
                rhs = alpha.delta() + (alpha.code[shift_gen(n, g, 1)],)
                assert rhs in positive_closure(n, lhs)


# -- conjugacy ------------------------------------------------------------------------------


def test_conjugate_by_examples():
    d3 = sb("a(3,2) a(2,1)", 3)
    assert conjugate_by(sb("a(2,1)", 3), SBandWord(3)) == singular_nf(sb("a(2,1)", 3))
    assert conjugate_by(sb("a(2,1)", 3), d3) == singular_nf(sb("a(3,2)", 3))
    assert conjugate_by(sb("b(2,1)", 3), d3) == singular_nf(sb("b(3,2)", 3))


def test_positive_conjugate_examples():
    c2 = positive_conjugates(sb("a(2,1)", 2))
    assert c2 == {singular_nf(sb("a(2,1)", 2))}
    assert positive_conjugates(sb("b(2,1)", 2)) == {singular_nf(sb("b(2,1)", 2))}
    c3 = positive_conjugates(sb("a(2,1)", 3))
    assert c3 == {singular_nf(sb(x, 3)) for x in ("a(2,1)", "a(3,1)", "a(3,2)")}


def test_conjugacy_examples():
    assert conjugacy_test(sb("a(2,1)", 3), sb("a(3,2)", 3))
    assert not conjugacy_test(sb("a(2,1)", 3), sb("b(2,1)", 3))


@settings(max_examples=30)
@given(singular_words(max_n=3, max_len=5, positive=True), singular_words(max_n=3, max_len=4, allow_b=False))
def test_conjugacy_detects_constructed_conjugates(u, g):
    assume(len(u) > 0)
    g = SBandWord(u.n, tuple(l for l in g.letters if l[1] <= u.n))
    assert conjugacy_test(u, g.inverse() * u * g)


# -- exhaustive common multiple search -----------------------------------------------------


def test_search_finds_table_lengths_at_n3():
    n = 3
    alpha = alphabet(n)
    for x in alpha.gens:
        res = common_multiple_search(n, x, 4)
        for y in alpha.gens:
            entry = pair_lcm(n, x, y)
            found = [L for L in range(1, 5) if y in res.co_divisors[L - 1]]
            if entry is None:
                assert not found
            else:
                assert found and found[0] == len(entry.lcm)

from __future__ import annotations

import pytest

from braidkit.braid import BraidWord, braid_equal
from braidkit.presentations import (
    FAMILIES,
    Assignment,
    Generator,
    Presentation,
    Relation,
    builtin_presentation,
    format_word,
    parse_word,
    quotient_assignments,
    standard_assignment,
    verify_homomorphism,
    word,
)
from braidkit.presentations.models import braid_model

MODEL_FAMILIES = [
    "artin", "two-generator", "lin", "type-b", "type-b-few", "bp", "bp-few",
    "sb", "sb-bkl", "sb-few", "sb-ann", "ib", "ib-balanced", "ib-few",
    "sym-inverse", "ib-typeb", "i-typeb", "ibp",
]
QUOTIENT_ONLY = [
    "type-d", "type-d-few", "sphere", "sphere-few", "ivb", "psb", "ib-sphere",
]
FIXED = {"e8": {}, "g30": {}, "g34": {}, "b2eer": {"e": 2, "r": 3}, "beer": {"e": 3, "r": 4}}


# -- words ---------------------------------------------------------------------------


def test_word_text_round_trip():
    w = word("s1", ("s2", -1), "x1")
    assert format_word(w) == "s1 s2' x1"
    assert parse_word("s1 s2' x1") == w
    assert parse_word("1") == ()
    assert format_word(()) == "1"


def test_structural_errors_are_rejected():
    with pytest.raises(ValueError):
        Presentation.build("bad", ["s1"], [Relation(word("s2"), word("s1"), "x")])
    with pytest.raises(ValueError):
        Presentation.build("bad", [Generator("x1", False)], [Relation(word(("x1", -1)), (), "x")])
    with pytest.raises(ValueError):
        Presentation("bad", (), (Relation(word("s1"), (), "x"),))


def test_non_invertible_labels_cannot_be_inverted():
    p = builtin_presentation("sb", n=3)
    assert not p.generator("x1").invertible
    assert all(e > 0 for r in p.relations for g, e in r.lhs + r.rhs if g.startswith("x"))


# -- family examples -------------------------------------------------------------------


def test_artin_small():
    p = builtin_presentation("artin", n=3)
    assert p.labels == ("s1", "s2")
    assert p.export().splitlines() == ["s1 s2 s1 = s2 s1 s2"]


def test_two_generator_relations():
    p = builtin_presentation("two-generator", n=4)
    assert p.export().splitlines() == [
        "s1 s s s1 s' s' = s s s1 s' s' s1",
        "s s s s = s s1 s s1 s s1",
    ]


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_virtual_drops_one_mixed_family(n):
    full, virtual = builtin_presentation("ibp", n=n), builtin_presentation("ivb", n=n)
    dropped = full.kinds().pop("mixed-forbidden")
    assert dropped == n - 2
    assert len(virtual) == len(full) - dropped
    assert "mixed-forbidden" not in virtual.kinds()
    assert set(virtual.relations) < set(full.relations)


def test_unknown_family_and_bad_params():
    with pytest.raises(ValueError):
        builtin_presentation("no-such-family", n=3)
    with pytest.raises(ValueError):
        builtin_presentation("artin", n=0)


def test_deduplication():
    p = Presentation.build(
        "dup", ["a", "b"],
        [Relation(word("a", "b"), word("b", "a"), "c"), Relation(word("b", "a"), word("a", "b"), "c"),
         Relation(word("a"), word("a"), "c")],
    )
    assert len(p) == 1


# -- verification ------------------------------------------------------------------------


@pytest.mark.parametrize("family", MODEL_FAMILIES)
@pytest.mark.parametrize("n", [3, 4, 5])
def test_families_verify_in_their_models(family, n):
    p = builtin_presentation(family, n=n)
    assert not p.structural_errors()
    report = verify_homomorphism(p, standard_assignment(p))
    assert report.ok and report.holds == len(p), [str(v.relation) for v in report.failures()]


@pytest.mark.parametrize("family", QUOTIENT_ONLY)
@pytest.mark.parametrize("n", [3, 4, 5])
def test_model_less_families_pass_quotients(family, n):
    p = builtin_presentation(family, n=n)
    assert standard_assignment(p) is None
    assert verify_homomorphism(p, None).skipped == len(p)
    quotients = quotient_assignments(p)
    assert quotients
    for q in quotients:
        report = verify_homomorphism(p, q)
        assert report.fails == 0, report.summary()


@pytest.mark.parametrize("family, params", list(FIXED.items()))
def test_exceptional_families_pass_quotients(family, params):
    p = builtin_presentation(family, **params)
    assert not p.structural_errors()
    for q in quotient_assignments(p):
        assert verify_homomorphism(p, q).fails == 0


def test_every_family_is_covered():
    assert set(FAMILIES) == set(MODEL_FAMILIES) | set(QUOTIENT_ONLY) | set(FIXED)


def test_verifier_reports_failures_with_witness():
    p = Presentation.build("wrong", ["s1", "s2"], [Relation(word("s1", "s2"), word("s2", "s1"), "fake")])
    m = braid_model(3)
    a = Assignment(m, {"s1": BraidWord(3, (1,)), "s2": BraidWord(3, (2,))})
    report = verify_homomorphism(p, a)
    assert report.fails == 1 and not report.ok
    assert report.failures()[0].witness


def test_verifier_needs_every_generator():
    p = builtin_presentation("artin", n=3)
    a = Assignment(braid_model(3), {"s1": BraidWord(3, (1,))})
    with pytest.raises(KeyError):
        verify_homomorphism(p, a)


def test_artin_identity_assignment_by_hand():
    p = builtin_presentation("artin", n=4)
    a = Assignment(braid_model(4), {f"s{i}": BraidWord(4, (i,)) for i in range(1, 4)})
    assert verify_homomorphism(p, a).holds == len(p)
    assert braid_equal(a.evaluate(p.relations[0].lhs), a.evaluate(p.relations[0].rhs))

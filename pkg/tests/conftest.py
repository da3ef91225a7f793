from __future__ import annotations

import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from braidkit.bkl import BandWord
from braidkit.braid import BraidWord
from braidkit.inverse import IBWord
from braidkit.singular import SBandWord

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")


@st.composite
def braid_words(draw, min_n=2, max_n=5, max_len=10):
    n = draw(st.integers(min_n, max_n))
    letters = draw(st.lists(st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((i, -i))), max_size=max_len))
    return BraidWord(n, tuple(letters))


@st.composite
def band_words(draw, n=None, max_n=5, max_len=8):
    n = n if n is not None else draw(st.integers(2, max_n))
    pair = st.integers(2, n).flatmap(lambda t: st.tuples(st.just(t), st.integers(1, t - 1)))
    letters = draw(st.lists(st.tuples(pair, st.sampled_from((1, -1))), max_size=max_len))
    return BandWord(n, tuple((t, s, e) for (t, s), e in letters))


@st.composite
def singular_words(draw, n=None, max_n=4, max_len=8, positive=False, allow_b=True):
    n = n if n is not None else draw(st.integers(2, max_n))
    pair = st.integers(2, n).flatmap(lambda t: st.tuples(st.just(t), st.integers(1, t - 1)))
    out = []
    for (t, s), kind, sign in draw(
        st.lists(
            st.tuples(pair, st.sampled_from("ab" if allow_b else "a"), st.sampled_from((1, -1))),
            max_size=max_len,
        )
    ):
        e = 1 if kind == "b" or positive else sign
        out.append((kind, t, s, e))
    return SBandWord(n, tuple(out))


@st.composite
def ib_words(draw, n=None, max_n=5, max_len=8, eps_weight=0.2):
    n = n if n is not None else draw(st.integers(2, max_n))
    sig = st.integers(1, n - 1).flatmap(lambda i: st.sampled_from((("s", i, 1), ("s", i, -1))))
    eps = st.integers(1, n).map(lambda i: ("e", i, 1))
    letters = draw(st.lists(st.one_of(sig, sig, sig, eps), max_size=max_len))
    return IBWord(n, tuple(letters))


@pytest.fixture
def rng():
    return random.Random(12345)


# one line per acceptance criterion, shown in the terminal summary
ACCEPTANCE: dict[int, str] = {}


def record(number: int, name: str, ok: bool, detail: str = "") -> None:
    line = f"criterion {number:2d} {'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else "")
    ACCEPTANCE[number] = line
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])

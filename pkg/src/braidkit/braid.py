"""Artin braid words, the Garside normal form, and the free-group action."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .freegroup import FreeAutomorphism, free_inverse, free_reduce
from .garside import (
    ArtinStructure,
    Perm,
    absorb_inverses,
    normalize,
    perm_identity,
    permutation_braid_letters,
    transposition,
)
from .words import Letter, ParseError, format_letters, parse_letters


@dataclass(frozen=True)
class BraidWord:
    """A word in sigma_i^{+-1}; letter ``i`` is sigma_i and ``-i`` its inverse."""

    n: int
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("strand count must be non-negative")
        for x in self.letters:
            if x == 0 or abs(x) >= self.n:
                raise ValueError(f"letter s{abs(x)} out of range for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> BraidWord:
        header, letters = parse_letters(text)
        return cls.from_letters(letters, header if header is not None else n)

    @classmethod
    def from_letters(cls, letters: Iterable[Letter], n: int | None) -> BraidWord:
        out = []
        for pos, l in enumerate(letters):
            if l.kind != "s":
                raise ParseError(f"braid words only use s letters, got {l.kind}")
            out.append(l.i * l.sign)
        if n is None:
            n = max((abs(x) for x in out), default=0) + 1
        if any(abs(x) >= n for x in out):
            raise ParseError(f"generator index exceeds n-1 = {n - 1}")
        return cls(n, tuple(out))

    def to_letters(self) -> list[Letter]:
        return [Letter("s", abs(x), 0, 1 if x > 0 else -1) for x in self.letters]

    def __str__(self) -> str:
        return format_letters(self.to_letters()) or "1"

    def __mul__(self, other: BraidWord) -> BraidWord:
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        return BraidWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BraidWord:
        base = self if k >= 0 else self.inverse()
        return BraidWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BraidWord:
        return BraidWord(self.n, tuple(-x for x in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(x > 0 for x in self.letters)


def sigma(n: int, *letters: int) -> BraidWord:
    """Shorthand: ``sigma(3, 1, -2)`` is s1 s2' on three strands."""
    return BraidWord(n, tuple(letters))


def permutation_of(w: BraidWord) -> Perm:
    """Strand permutation (0-based): top position i ends at bottom position p[i]."""
    pos = list(range(w.n))  # pos[p] = strand currently at position p
    for x in w.letters:
        i = abs(x) - 1
        pos[i], pos[i + 1] = pos[i + 1], pos[i]
    out = [0] * w.n
    for p, strand in enumerate(pos):
        out[strand] = p
    return tuple(out)


def delta_word(n: int) -> BraidWord:
    """Garside's Delta = s1..s_{n-1} s1..s_{n-2} ... s1."""
    return BraidWord(n, tuple(i for k in range(n - 1, 0, -1) for i in range(1, k + 1)))


@lru_cache(maxsize=None)
def artin_structure(n: int) -> ArtinStructure:
    return ArtinStructure(n)


@dataclass(frozen=True)
class GarsideNF:
    """Delta^power times left-weighted permutation braids (never 1 or Delta)."""

    n: int
    power: int
    factors: tuple[Perm, ...] = ()

    def factor_words(self) -> list[BraidWord]:
        return [BraidWord(self.n, tuple(i + 1 for i in permutation_braid_letters(f))) for f in self.factors]

    def to_word(self) -> BraidWord:
        letters = delta_word(self.n) ** self.power
        for f in self.factor_words():
            letters = letters * f
        return letters

    def inverse(self) -> GarsideNF:
        return garside_nf(self.to_word().inverse())

    def __mul__(self, other: GarsideNF) -> GarsideNF:
        return garside_nf(self.to_word() * other.to_word())

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    def format(self, style: str = "left") -> str:
        """Text form ``power=<m> factors=f1 | f2``.

        ``style="right"`` brackets the same data as Delta^m and the factor
        words written right to left with their inverses, for display only.
        """
        if style not in ("left", "right"):
            raise ValueError("style must be left or right")
        words = [str(w) for w in self.factor_words()]
        if style == "right":
            words = words[::-1]
        return f"power={self.power} factors=" + " | ".join(words)

    def __str__(self) -> str:
        return self.format()


def garside_nf(w: BraidWord) -> GarsideNF:
    """Left-greedy Garside normal form of a braid word."""
    n = w.n
    if n <= 1:
        return GarsideNF(n, 0, ())
    st = artin_structure(n)
    letters = [(transposition(n, abs(x) - 1, abs(x)), 1 if x > 0 else -1) for x in w.letters]
    power, simples = absorb_inverses(st, letters)
    power, factors = normalize(st, power, simples)
    return GarsideNF(n, power, factors)


def braid_equal(w1: BraidWord, w2: BraidWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"strand counts differ: {w1.n} vs {w2.n}")
    return garside_nf(w1) == garside_nf(w2)


# -- free group action --------------------------------------------------------


def sigma_automorphism(n: int, x: int) -> FreeAutomorphism:
    """Images of x_1..x_n under sigma_i (x > 0) or its inverse (x < 0).

    sigma_i:      x_i -> x_{i+1},            x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
    sigma_i^-1:   x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
    """
    i = abs(x)
    images = [(j,) for j in range(1, n + 1)]
    if x > 0:
        images[i - 1] = (i + 1,)
        images[i] = (-(i + 1), i, i + 1)
    else:
        images[i - 1] = (i, i + 1, -i)
        images[i] = (i,)
    return FreeAutomorphism(n, tuple(images))


def act_free(w: BraidWord) -> FreeAutomorphism:
    """Artin's representation; ``act_free(u * v) == act_free(u).then(act_free(v))``."""
    f = FreeAutomorphism.identity(w.n)
    for x in w.letters:
        f = f.then(sigma_automorphism(w.n, x))
    return f


def free_equal(w1: BraidWord, w2: BraidWord) -> bool:
    """Equality through the faithful free-group action."""
    return act_free(w1) == act_free(w2)


# -- strand deletion ----------------------------------------------------------


def delete_strand(w: BraidWord, s: int) -> BraidWord:
    """Remove the strand starting at top position ``s`` (1-based)."""
    if not 1 <= s <= w.n:
        raise ValueError(f"strand {s} out of range 1..{w.n}")
    p = s
    out = []
    for x in w.letters:
        i = abs(x)
        if p == i:
            p = i + 1
        elif p == i + 1:
            p = i
        elif i + 1 < p:
            out.append(x)
        else:
            out.append(x - 1 if x > 0 else x + 1)
    return BraidWord(w.n - 1, tuple(out))


def final_position(w: BraidWord, s: int) -> int:
    """Bottom position (1-based) of the strand that starts at ``s``."""
    return permutation_of(w)[s - 1] + 1


def delete_strands(w: BraidWord, tops: Sequence[int]) -> BraidWord:
    """Delete several strands given by their top positions."""
    for s in sorted(tops, reverse=True):
        w = delete_strand(w, s)
    return w


__all__ = [
    "BraidWord",
    "GarsideNF",
    "act_free",
    "braid_equal",
    "delete_strand",
    "delete_strands",
    "delta_word",
    "final_position",
    "free_equal",
    "free_inverse",
    "free_reduce",
    "garside_nf",
    "permutation_of",
    "sigma",
    "sigma_automorphism",
]

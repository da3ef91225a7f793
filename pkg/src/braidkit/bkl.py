"""Birman-Ko-Lee band generators and the dual (BKL) normal form.

Canonical factors are the positive divisors of delta = a_{n(n-1)} ... a_{21}.
They are in bijection with non-crossing partitions of {1..n}; a factor is
stored as the permutation sending each block element to the next larger
element of its block (block maxima wrap to minima).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable

from .braid import BraidWord, garside_nf
from .garside import (
    DualStructure,
    Perm,
    absorb_inverses,
    cycles_of,
    normalize,
    partition_perm,
    perm_blocks,
    perm_inverse,
    perm_then,
    transposition,
)
from .words import Letter, ParseError, format_letters, parse_letters

DIVISOR_BOUND = 10

BandLetter = tuple[int, int, int]  # (t, s, sign) with t > s


@dataclass(frozen=True)
class BandWord:
    """Word in the band generators a_ts^{+-1}, 1 <= s < t <= n."""

    n: int
    letters: tuple[BandLetter, ...] = ()

    def __post_init__(self):
        for t, s, e in self.letters:
            if not (1 <= s < t <= self.n) or e not in (1, -1):
                raise ValueError(f"bad band letter a({t},{s}) for n={self.n}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> BandWord:
        header, letters = parse_letters(text)
        n = header if header is not None else n
        out = []
        for l in letters:
            if l.kind != "a":
                raise ParseError(f"band words only use a letters, got {l.kind}")
            t, s = max(l.i, l.j), min(l.i, l.j)
            if t == s:
                raise ParseError(f"a({l.i},{l.j}) needs distinct indices")
            out.append((t, s, l.sign))
        if n is None:
            n = max((t for t, _, _ in out), default=1)
        return cls(n, tuple(out))

    def to_letters(self) -> list[Letter]:
        return [Letter("a", t, s, e) for t, s, e in self.letters]

    def __str__(self) -> str:
        return format_letters(self.to_letters()) or "1"

    def __mul__(self, other: BandWord) -> BandWord:
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        return BandWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> BandWord:
        base = self if k >= 0 else self.inverse()
        return BandWord(self.n, base.letters * abs(k))

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> BandWord:
        return BandWord(self.n, tuple((t, s, -e) for t, s, e in reversed(self.letters)))


def band_generator_artin(t: int, s: int) -> tuple[int, ...]:
    """a_ts = (s_{t-1} ... s_{s+1}) s_s (s_{s+1}^-1 ... s_{t-1}^-1)."""
    left = tuple(range(t - 1, s, -1))
    return left + (s,) + tuple(-x for x in reversed(left))


def band_to_artin(w: BandWord) -> BraidWord:
    out: list[int] = []
    for t, s, e in w.letters:
        g = band_generator_artin(t, s)
        out.extend(g if e > 0 else tuple(-x for x in reversed(g)))
    return BraidWord(w.n, tuple(out))


def artin_to_band(w: BraidWord) -> BandWord:
    """sigma_i = a_{(i+1)i}."""
    return BandWord(w.n, tuple((abs(x) + 1, abs(x), 1 if x > 0 else -1) for x in w.letters))


def bkl_delta_word(n: int) -> BandWord:
    """delta = a_{n(n-1)} a_{(n-1)(n-2)} ... a_{21}."""
    return BandWord(n, tuple((t, t - 1, 1) for t in range(n, 1, -1)))


# -- canonical factors --------------------------------------------------------


@dataclass(frozen=True, order=True)
class CanonicalFactor:
    """A positive divisor of delta, i.e. a non-crossing partition."""

    n: int
    perm: Perm

    @classmethod
    def from_blocks(cls, n: int, blocks: Iterable[Iterable[int]]) -> CanonicalFactor:
        """Build from 1-based blocks."""
        return cls(n, partition_perm(n, [[x - 1 for x in b] for b in blocks]))

    @classmethod
    def identity(cls, n: int) -> CanonicalFactor:
        return cls(n, tuple(range(n)))

    @classmethod
    def delta(cls, n: int) -> CanonicalFactor:
        return cls(n, DualStructure(n).top())

    @property
    def blocks(self) -> list[tuple[int, ...]]:
        """Non-singleton blocks, 1-based, sorted descending by maximum."""
        bl = [tuple(x + 1 for x in b) for b in perm_blocks(self.perm) if len(b) > 1]
        return sorted(bl, key=lambda b: -b[-1])

    def word(self) -> BandWord:
        """Each block {i1 > ... > ik} gives a_{i1 i2} ... a_{i(k-1) ik}."""
        letters = []
        for b in self.blocks:
            desc = sorted(b, reverse=True)
            letters.extend((x, y, 1) for x, y in zip(desc, desc[1:]))
        return BandWord(self.n, tuple(letters))

    @property
    def length(self) -> int:
        """Band length = n minus the number of blocks."""
        return self.n - len(cycles_of(self.perm))

    def __str__(self) -> str:
        return str(self.word())


def _noncrossing_partitions(n: int) -> list[list[list[int]]]:
    """All non-crossing partitions of 0..n-1 by the first-element recursion."""
    if n == 0:
        return [[]]
    out = []
    # the block of 0 is {0} + S; each gap between consecutive members of S,
    # and the tail after its maximum, is partitioned independently
    rest = list(range(1, n))
    for mask in range(1 << (n - 1)):
        members = [x for k, x in enumerate(rest) if mask >> k & 1]
        block = [0] + members
        gaps = []
        bounds = block + [n]
        for a, b in zip(bounds, bounds[1:]):
            gaps.append(list(range(a + 1, b)))
        pieces = [[[[g[i] for i in blk] for blk in p] for p in _noncrossing_partitions(len(g))] for g in gaps]
        for combo in product(*pieces):
            part = [block]
            for p in combo:
                part.extend(p)
            out.append(part)
    return out


@lru_cache(maxsize=None)
def delta_divisors(n: int) -> tuple[CanonicalFactor, ...]:
    """All positive left divisors of delta on n strands (Catalan many)."""
    if n > DIVISOR_BOUND:
        raise ValueError(f"divisor enumeration bounded by n <= {DIVISOR_BOUND}")
    if n < 1:
        raise ValueError("n must be positive")
    return tuple(sorted(CanonicalFactor(n, partition_perm(n, p)) for p in _noncrossing_partitions(n)))


def _abs_length(p: Perm) -> int:
    return len(p) - len(cycles_of(p))


def left_divides(f: CanonicalFactor, g: CanonicalFactor) -> bool:
    """f <= g in the divisor lattice: f^{-1} g is again a divisor and lengths add."""
    rest = perm_then(perm_inverse(f.perm), g.perm)
    return _abs_length(f.perm) + _abs_length(rest) == _abs_length(g.perm) and rest in _divisor_perms(f.n)


@lru_cache(maxsize=None)
def _divisor_perms(n: int) -> frozenset[Perm]:
    return frozenset(d.perm for d in delta_divisors(n))


def factor_meet(f: CanonicalFactor, g: CanonicalFactor) -> CanonicalFactor:
    """Greatest common left divisor, by search over the divisor set."""
    if f.n != g.n:
        raise ValueError("strand count mismatch")
    lower = [d for d in delta_divisors(f.n) if left_divides(d, f) and left_divides(d, g)]
    return max(lower, key=lambda d: d.length)


def factor_join(f: CanonicalFactor, g: CanonicalFactor) -> CanonicalFactor:
    """Least common right multiple, by search over the divisor set."""
    if f.n != g.n:
        raise ValueError("strand count mismatch")
    upper = [d for d in delta_divisors(f.n) if left_divides(f, d) and left_divides(g, d)]
    return min(upper, key=lambda d: d.length)


# -- normal form --------------------------------------------------------------


@lru_cache(maxsize=None)
def dual_structure(n: int) -> DualStructure:
    return DualStructure(n)


@dataclass(frozen=True)
class BklNF:
    """delta^power times left-weighted canonical factors (never 1 or delta)."""

    n: int
    power: int
    factors: tuple[Perm, ...] = ()

    def canonical_factors(self) -> list[CanonicalFactor]:
        return [CanonicalFactor(self.n, f) for f in self.factors]

    def to_word(self) -> BandWord:
        w = bkl_delta_word(self.n) ** self.power
        for f in self.canonical_factors():
            w = w * f.word()
        return w

    def __str__(self) -> str:
        return f"power={self.power} factors=" + " | ".join(str(f) for f in self.canonical_factors())


def bkl_nf(w: BandWord) -> BklNF:
    n = w.n
    if n <= 1:
        return BklNF(n, 0, ())
    st = dual_structure(n)
    letters = [(transposition(n, s - 1, t - 1), e) for t, s, e in w.letters]
    power, simples = absorb_inverses(st, letters)
    power, factors = normalize(st, power, simples)
    return BklNF(n, power, factors)


def bkl_equal(w1: BandWord, w2: BandWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"strand counts differ: {w1.n} vs {w2.n}")
    return bkl_nf(w1) == bkl_nf(w2)


def brute_force_divisor_count(n: int) -> int:
    """Count left divisors of delta using only Artin-side equality.

    Every positive band word of length n-1 equal to delta is found by
    exhaustive search; its prefixes are the divisors.  Distinct braids are
    counted through their Garside normal forms.
    """
    gens = [(t, s, 1) for t in range(2, n + 1) for s in range(1, t)]
    delta = garside_nf(band_to_artin(bkl_delta_word(n)))
    seen = set()
    for word in product(gens, repeat=max(n - 1, 0)):
        if garside_nf(band_to_artin(BandWord(n, word))) != delta:
            continue
        for k in range(len(word) + 1):
            seen.add(garside_nf(band_to_artin(BandWord(n, word[:k]))))
    return len(seen)

"""The singular braid monoid SB_n in band generators a_ts, b_ts.

Positive words are tuples of generator codes.  For a fixed n the codes
list every a_ts (sorted by (t, s)) followed by every b_ts, which is also
the linear order used for the deg-lex base.

Two routes to positive equivalence are provided.  The closure route
applies the length-two relations breadth first and is exact but
exponential; it serves as the oracle.  The division route divides by
single letters with the left cancellation theorem and the l.c.m. table;
it is fast and drives the normal form.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from .braid import BraidWord
from .words import Letter, ParseError, format_letters, parse_letters

CLOSURE_LIMIT = 1_000_000

Gen = tuple[str, int, int]  # ("a" or "b", t, s) with t > s
Code = int
PWord = tuple[Code, ...]


class ClosureLimitError(RuntimeError):
    """Raised when a positive equivalence class exceeds the configured size."""


class InadmissiblePairError(ValueError):
    """Raised when two letters with no common multiple are claimed to have one."""


def _crossing_sign(t: int, s: int, r: int, q: int) -> int:
    return (t - r) * (t - q) * (s - r) * (s - q)


@dataclass(frozen=True)
class Alphabet:
    """Generators of SBKL_n^+ with their codes and the relation table."""

    n: int
    gens: tuple[Gen, ...]
    code: dict = field(compare=False, hash=False, repr=False)
    # rewrites[(x, y)] lists the other two-letter words equal to x y
    rewrites: dict = field(compare=False, hash=False, repr=False)

    def a(self, t: int, s: int) -> Code:
        return self.code[("a", max(t, s), min(t, s))]

    def b(self, t: int, s: int) -> Code:
        return self.code[("b", max(t, s), min(t, s))]

    def delta(self) -> PWord:
        return tuple(self.a(t, t - 1) for t in range(self.n, 1, -1))

    def format(self, word: Iterable[Code]) -> str:
        return format_letters(Letter(*self.gens[c], 1) for c in word) or "1"


def defining_relations(n: int) -> list[tuple[tuple[Gen, Gen], tuple[Gen, Gen]]]:
    """Length-two relations of SBKL_n^+ as pairs of two-letter words."""
    rels = []
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    for t, s in pairs:
        for r, q in pairs:
            if _crossing_sign(t, s, r, q) > 0:
                for k1 in "ab":
                    for k2 in "ab":
                        rels.append((((k1, t, s), (k2, r, q)), ((k2, r, q), (k1, t, s))))
        rels.append(((("a", t, s), ("b", t, s)), (("b", t, s), ("a", t, s))))
    for t in range(3, n + 1):
        for s in range(2, t):
            for r in range(1, s):
                ts, sr, tr = ("a", t, s), ("a", s, r), ("a", t, r)
                rels.append(((ts, sr), (tr, ts)))
                rels.append(((tr, ts), (sr, tr)))
                rels.append(((ts, ("b", s, r)), (("b", t, r), ts)))
                rels.append(((sr, ("b", t, r)), (("b", t, s), sr)))
                rels.append(((tr, ("b", t, s)), (("b", s, r), tr)))
    return rels


@lru_cache(maxsize=None)
def alphabet(n: int) -> Alphabet:
    gens = tuple(("a", t, s) for t in range(2, n + 1) for s in range(1, t))
    gens = tuple(sorted(gens, key=lambda g: (g[1], g[2])))
    gens = gens + tuple(("b", t, s) for _, t, s in gens)
    code = {g: i for i, g in enumerate(gens)}
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for lhs, rhs in defining_relations(n):
        u = (code[lhs[0]], code[lhs[1]])
        v = (code[rhs[0]], code[rhs[1]])
        # every relation is length preserving, which the closure relies on
        assert len(u) == len(v) == 2
        parent[find(u)] = find(v)
    classes: dict = {}
    for w in list(parent):
        classes.setdefault(find(w), []).append(w)
    rewrites = {}
    for members in classes.values():
        for w in members:
            rewrites[w] = tuple(m for m in members if m != w)
    return Alphabet(n, gens, code, rewrites)


# -- words ----------------------------------------------------------------------

SLetter = tuple[str, int, int, int]  # (kind, t, s, sign)


@dataclass(frozen=True)
class SBandWord:
    """Singular band word over a_ts^{+-1} and b_ts."""

    n: int
    letters: tuple[SLetter, ...] = ()

    def __post_init__(self):
        for k, t, s, e in self.letters:
            if k not in "ab" or not (1 <= s < t <= self.n):
                raise ValueError(f"bad letter {k}({t},{s}) for n={self.n}")
            if k == "b" and e != 1:
                raise ValueError("b generators have no inverse")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> SBandWord:
        header, letters = parse_letters(text)
        return cls.from_letters(letters, header if header is not None else n)

    @classmethod
    def from_letters(cls, letters: Iterable[Letter], n: int | None) -> SBandWord:
        out = []
        for l in letters:
            if l.kind not in "ab":
                raise ParseError(f"singular band words use a and b letters, got {l.kind}")
            t, s = max(l.i, l.j), min(l.i, l.j)
            if t == s:
                raise ParseError(f"{l.kind}({l.i},{l.j}) needs distinct indices")
            out.append((l.kind, t, s, l.sign))
        if n is None:
            n = max((x[1] for x in out), default=1)
        return cls(n, tuple(out))

    @classmethod
    def from_codes(cls, n: int, word: Iterable[Code]) -> SBandWord:
        gens = alphabet(n).gens
        return cls(n, tuple((*gens[c], 1) for c in word))

    def to_letters(self) -> list[Letter]:
        return [Letter(k, t, s, e) for k, t, s, e in self.letters]

    def codes(self) -> PWord:
        """Codes of a positive word; raises on inverse letters."""
        alpha = alphabet(self.n)
        if any(e < 0 for *_, e in self.letters):
            raise ValueError("word has inverse letters")
        return tuple(alpha.code[(k, t, s)] for k, t, s, _ in self.letters)

    def __str__(self) -> str:
        return format_letters(self.to_letters()) or "1"

    def __mul__(self, other: SBandWord) -> SBandWord:
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        return SBandWord(self.n, self.letters + other.letters)

    def __pow__(self, k: int) -> SBandWord:
        if k < 0:
            return self.inverse() ** (-k)
        return SBandWord(self.n, self.letters * k)

    def __len__(self) -> int:
        return len(self.letters)

    def inverse(self) -> SBandWord:
        if any(k == "b" for k, *_ in self.letters):
            raise ValueError("words with b letters are not invertible")
        return SBandWord(self.n, tuple((k, t, s, -e) for k, t, s, e in reversed(self.letters)))

    def is_positive(self) -> bool:
        return all(e > 0 for *_, e in self.letters)

    def b_count(self) -> int:
        return sum(1 for k, *_ in self.letters if k == "b")

    def a_exponent(self) -> int:
        return sum(e for k, _, _, e in self.letters if k == "a")


@dataclass(frozen=True)
class SingularWord:
    """Word in the classical generators sigma_i^{+-1} and x_i."""

    n: int
    letters: tuple[tuple[str, int, int], ...] = ()  # (kind "s" or "x", i, sign)

    def __post_init__(self):
        for k, i, e in self.letters:
            if k not in "sx" or not 1 <= i < self.n:
                raise ValueError(f"bad letter {k}{i} for n={self.n}")
            if k == "x" and e != 1:
                raise ValueError("x generators have no inverse")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> SingularWord:
        header, letters = parse_letters(text)
        n = header if header is not None else n
        out = []
        for l in letters:
            if l.kind not in "sx":
                raise ParseError(f"classical singular words use s and x letters, got {l.kind}")
            out.append((l.kind, l.i, l.sign))
        if n is None:
            n = max((i for _, i, _ in out), default=0) + 1
        return cls(n, tuple(out))

    @classmethod
    def from_braid(cls, w: BraidWord) -> SingularWord:
        return cls(w.n, tuple(("s", abs(x), 1 if x > 0 else -1) for x in w.letters))

    def to_letters(self) -> list[Letter]:
        return [Letter(k, i, 0, e) for k, i, e in self.letters]

    def __str__(self) -> str:
        return format_letters(self.to_letters()) or "1"

    def __mul__(self, other: SingularWord) -> SingularWord:
        return SingularWord(self.n, self.letters + other.letters)


def classical_to_band(w: SingularWord) -> SBandWord:
    """sigma_i -> a_{(i+1)i}, x_i -> b_{(i+1)i}."""
    return SBandWord(w.n, tuple(("a" if k == "s" else "b", i + 1, i, e) for k, i, e in w.letters))


def band_to_classical(w: SBandWord) -> SingularWord:
    """Conjugate sigma_s or x_s by sigma_{t-1} ... sigma_{s+1}."""
    out: list[tuple[str, int, int]] = []
    for k, t, s, e in w.letters:
        left = list(range(t - 1, s, -1))
        out.extend(("s", i, 1) for i in left)
        out.append(("s" if k == "a" else "x", s, e))
        out.extend(("s", i, -1) for i in reversed(left))
    return SingularWord(w.n, tuple(out))


def convert_singular(w, direction: str):
    """``direction`` is "to-band" or "to-classical"."""
    if direction == "to-band":
        return classical_to_band(w)
    if direction == "to-classical":
        return band_to_classical(w)
    raise ValueError(f"unknown direction {direction!r}")


# -- closure route --------------------------------------------------------------


def neighbours(alpha: Alphabet, word: PWord) -> Iterable[PWord]:
    rw = alpha.rewrites
    for i in range(len(word) - 1):
        alts = rw.get((word[i], word[i + 1]))
        if alts:
            for x, y in alts:
                yield word[:i] + (x, y) + word[i + 2 :]


def positive_closure(n: int, word: Sequence[Code], limit: int = CLOSURE_LIMIT) -> frozenset[PWord]:
    """Every positive word positively equivalent to ``word``."""
    alpha = alphabet(n)
    start = tuple(word)
    seen = {start}
    queue = deque([start])
    while queue:
        w = queue.popleft()
        for v in neighbours(alpha, w):
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise ClosureLimitError(f"positive class exceeds {limit} words")
                queue.append(v)
    return frozenset(seen)


def closure_of(w: SBandWord, limit: int = CLOSURE_LIMIT) -> frozenset[PWord]:
    """Closure of a positive SBandWord; rejects inverse letters."""
    if not w.is_positive():
        raise ValueError("positive_closure needs a word without inverse letters")
    return positive_closure(w.n, w.codes(), limit)


def base_by_closure(n: int, word: Sequence[Code]) -> PWord:
    return min(positive_closure(n, word))


def delta_divide_by_closure(n: int, word: Sequence[Code]) -> PWord | None:
    """Quotient W' with W = delta W', read off the closure."""
    alpha = alphabet(n)
    k = n - 1
    delta_class = positive_closure(n, alpha.delta())
    for v in sorted(positive_closure(n, word)):
        if v[:k] in delta_class:
            return base_by_closure(n, v[k:])
    return None


# -- l.c.m. table -----------------------------------------------------------------


@dataclass(frozen=True)
class LcmEntry:
    """x v y = x comp_x = y comp_y."""

    lcm: PWord
    comp_x: PWord
    comp_y: PWord


def _lcm_gens(x: Gen, y: Gen) -> tuple[list[Gen], list[Gen]] | None:
    """Complements (for x, for y) of the l.c.m. of two distinct generators."""
    kx, t1, s1 = x
    ky, t2, s2 = y
    if _crossing_sign(t1, s1, t2, s2) > 0:
        return [y], [x]
    if kx == "b" and ky == "b":
        return None
    if kx == "b":
        flipped = _lcm_gens(y, x)
        return None if flipped is None else (flipped[1], flipped[0])
    a = lambda t, s: ("a", t, s)  # noqa: E731
    b = lambda t, s: ("b", t, s)  # noqa: E731
    idx = {t1, s1, t2, s2}
    if ky == "a":
        if len(idx) == 3:
            t, s, r = sorted(idx, reverse=True)
            comp = {(t, s): a(s, r), (t, r): a(t, s), (s, r): a(t, r)}
            return [comp[(t1, s1)]], [comp[(t2, s2)]]
        # crossing t > r > s > q with x = a_ts, y = a_rq, or the reverse
        if t1 > t2:
            t, r, s, q = t1, t2, s1, s2
            return [a(t, r), a(s, q)], [a(t, q), a(r, s)]
        t, r, s, q = t2, t1, s2, s1
        return [a(t, q), a(r, s)], [a(t, r), a(s, q)]
    # x = a letter, y = b letter
    if (t1, s1) == (t2, s2):
        return [y], [x]
    if len(idx) == 3:
        t, s, r = sorted(idx, reverse=True)
        table = {
            # one-letter complements from the mixed relations
            ((t, s), (t, r)): ([b(s, r)], [a(t, s)]),
            ((s, r), (t, s)): ([b(t, r)], [a(s, r)]),
            ((t, r), (s, r)): ([b(t, s)], [a(t, r)]),
            # complements of length two, l.c.m. of length three
            ((t, s), (s, r)): ([a(s, r), b(t, s)], [a(t, s), a(s, r)]),
            ((s, r), (t, r)): ([a(t, r), b(s, r)], [a(t, s), a(s, r)]),
            ((t, r), (t, s)): ([a(t, s), b(t, r)], [a(t, s), a(s, r)]),
        }
        return table[((t1, s1), (t2, s2))]
    # crossing t > r > s > q
    if t1 > t2:
        t, r, s, q = t1, t2, s1, s2  # x = a_ts, y = b_rq
        return [a(t, r), a(s, q), b(t, s)], [a(t, r), a(r, s), a(s, q)]
    t, r, s, q = t2, t1, s2, s1  # x = a_rq, y = b_ts
    return [a(t, q), a(r, s), b(r, q)], [a(t, r), a(r, s), a(s, q)]


@lru_cache(maxsize=None)
def pair_lcm_codes(n: int, x: Code, y: Code) -> LcmEntry | None:
    alpha = alphabet(n)
    if x == y:
        return LcmEntry((x,), (), ())
    got = _lcm_gens(alpha.gens[x], alpha.gens[y])
    if got is None:
        return None
    cx = tuple(alpha.code[g] for g in got[0])
    cy = tuple(alpha.code[g] for g in got[1])
    return LcmEntry((x,) + cx, cx, cy)


def pair_lcm(n: int, x: Gen, y: Gen) -> LcmEntry | None:
    """l.c.m. of two generators, or None for an inadmissible pair."""
    alpha = alphabet(n)
    return pair_lcm_codes(n, alpha.code[x], alpha.code[y])


def is_admissible(x: Gen, y: Gen) -> bool:
    return x == y or _lcm_gens(x, y) is not None


# -- division route ---------------------------------------------------------------


class Divider:
    """Left division by letters in SBKL_n^+, memoised per strand count."""

    def __init__(self, n: int):
        self.n = n
        self.alpha = alphabet(n)
        self._memo: dict[tuple[Code, PWord], PWord | None] = {}

    def div_letter(self, x: Code, word: PWord) -> PWord | None:
        """W' with word = x W', or None when x does not left-divide word."""
        if not word:
            return None
        key = (x, word)
        memo = self._memo
        if key in memo:
            return memo[key]
        y, rest = word[0], word[1:]
        if y == x:
            out = rest
        else:
            entry = pair_lcm_codes(self.n, x, y)
            if entry is None:
                out = None
            else:
                z = self.div_word(entry.comp_y, rest)
                out = None if z is None else entry.comp_x + z
        if len(memo) > 2_000_000:
            memo.clear()
        memo[key] = out
        return out

    def div_word(self, divisor: Sequence[Code], word: PWord) -> PWord | None:
        for c in divisor:
            got = self.div_letter(c, word)
            if got is None:
                return None
            word = got
        return word

    def divides(self, x: Code, word: PWord) -> bool:
        return self.div_letter(x, word) is not None

    def base(self, word: PWord) -> PWord:
        """Deg-lex least representative: smallest dividing letter, then recurse."""
        out = []
        ncodes = len(self.alpha.gens)
        while word:
            for c in range(ncodes):
                rest = self.div_letter(c, word)
                if rest is not None:
                    out.append(c)
                    word = rest
                    break
            else:  # pragma: no cover - the first letter always divides
                raise AssertionError("no letter divides a non-empty word")
        return tuple(out)

    def equivalent(self, u: PWord, v: PWord) -> bool:
        return len(u) == len(v) and self.base(u) == self.base(v)

    def delta_split(self, word: PWord) -> tuple[int, PWord]:
        """Largest t with word = delta^t A; returns (t, A)."""
        delta = self.alpha.delta()
        t = 0
        while len(word) >= len(delta) and delta:
            q = self.div_word(delta, word)
            if q is None:
                break
            word = q
            t += 1
        return t, word


@lru_cache(maxsize=None)
def divider(n: int) -> Divider:
    return Divider(n)


def base(w: SBandWord) -> SBandWord:
    """Deg-lex base of a positive word."""
    if not w.is_positive():
        raise ValueError("base needs a positive word")
    return SBandWord.from_codes(w.n, divider(w.n).base(w.codes()))


def delta_divide(w: SBandWord) -> SBandWord | None:
    """Quotient by delta on the left, as a base, or None."""
    if not w.is_positive():
        raise ValueError("delta_divide needs a positive word")
    dv = divider(w.n)
    q = dv.div_word(dv.alpha.delta(), w.codes())
    return None if q is None else SBandWord.from_codes(w.n, dv.base(q))


def left_cancel(n: int, x: Gen, X: Sequence[Code], y: Gen, Y: Sequence[Code]) -> PWord:
    """Z with X = (x v y)*_x Z and Y = (x v y)*_y Z, given x X = y Y."""
    alpha = alphabet(n)
    dv = divider(n)
    cx, cy = alpha.code[x], alpha.code[y]
    X, Y = tuple(X), tuple(Y)
    if not dv.equivalent((cx,) + X, (cy,) + Y):
        raise ValueError("x X and y Y are not positively equivalent")
    entry = pair_lcm_codes(n, cx, cy)
    if entry is None:
        raise InadmissiblePairError(f"{x} and {y} have no common multiple")
    z = dv.div_word(entry.comp_x, X)
    if z is None or not dv.equivalent(entry.comp_y + z, Y):  # pragma: no cover
        raise AssertionError("left cancellation failed")
    return dv.base(z)


# -- normal form --------------------------------------------------------------------


def shift_gen(n: int, g: Gen, k: int) -> Gen:
    """Indices moved by k mod n (1..n), so shift by +1 is delta^-1 g delta."""
    kind, t, s = g
    t2 = (t - 1 + k) % n + 1
    s2 = (s - 1 + k) % n + 1
    return (kind, max(t2, s2), min(t2, s2))


def complement_word(n: int, t: int, s: int) -> list[Gen]:
    """D_ts with a_ts D_ts = delta, from the explicit divisibility formula."""
    a = lambda i, j: ("a", i, j)  # noqa: E731
    out = [a(k, k - 1) for k in range(n, t + 1, -1)]
    if t < n:
        out.append(a(t + 1, s))
    out += [a(k, k - 1) for k in range(t, s + 1, -1)]
    out += [a(k, k - 1) for k in range(s, 1, -1)]
    return out


@dataclass(frozen=True)
class SingularNF:
    """delta^power times a base not left-divisible by delta."""

    n: int
    power: int
    base: PWord = ()

    def base_word(self) -> SBandWord:
        return SBandWord.from_codes(self.n, self.base)

    def to_word(self) -> SBandWord:
        delta = SBandWord.from_codes(self.n, alphabet(self.n).delta())
        return (delta ** self.power) * self.base_word()

    def is_positive(self) -> bool:
        return self.power >= 0

    def positive_codes(self) -> PWord:
        if self.power < 0:
            raise ValueError("negative power")
        return alphabet(self.n).delta() * self.power + self.base

    def __str__(self) -> str:
        return f"power={self.power} base={self.base_word() if self.base else ''}"


def _pull_deltas(w: SBandWord) -> tuple[int, PWord]:
    """Rewrite w as delta^-k P with P positive (codes)."""
    n = w.n
    alpha = alphabet(n)
    pieces: list[list[Gen]] = []
    for kind, t, s, e in w.letters:
        if e > 0:
            pieces.append([(kind, t, s)])
        else:
            pieces.append(complement_word(n, t, s))
    # a negative letter is D delta^-1, so its own D and everything before it
    # moves left past that delta^-1, shifting indices by -1 each time
    k = 0
    out: list[Code] = []
    chunks: list[list[Code]] = []
    for (kind, t, s, e), piece in zip(reversed(w.letters), reversed(pieces)):
        if e < 0:
            k += 1
        shifted = [shift_gen(n, g, -k) for g in piece] if k % n else piece
        chunks.append([alpha.code[g] for g in shifted])
    for chunk in reversed(chunks):
        out.extend(chunk)
    return -k, tuple(out)


def singular_nf(w: SBandWord) -> SingularNF:
    if any(k == "b" and e < 0 for k, _, _, e in w.letters):
        raise ValueError("b letters cannot be inverted")
    n = w.n
    if n <= 1:
        return SingularNF(n, 0, ())
    power, positive = _pull_deltas(w)
    dv = divider(n)
    t, rest = dv.delta_split(positive)
    return SingularNF(n, power + t, dv.base(rest))


def singular_equal(w1: SBandWord, w2: SBandWord) -> bool:
    if w1.n != w2.n:
        raise ValueError(f"strand counts differ: {w1.n} vs {w2.n}")
    return singular_nf(w1) == singular_nf(w2)


def nf_from_codes(n: int, word: PWord) -> SingularNF:
    dv = divider(n)
    t, rest = dv.delta_split(tuple(word))
    return SingularNF(n, t, dv.base(rest))


# -- conjugacy ------------------------------------------------------------------------


def conjugate_by(u: SBandWord, g: SBandWord) -> SingularNF:
    """Normal form of g^-1 u g; ``g`` must be free of b letters."""
    return singular_nf(g.inverse() * u * g)


def _divisor_words(n: int) -> list[SBandWord]:
    from .bkl import delta_divisors

    out = []
    for d in delta_divisors(n):
        out.append(SBandWord(n, tuple(("a", t, s, 1) for t, s, _ in d.word().letters)))
    return out


def positive_conjugates_nf(u: SingularNF, limit: int = 100_000) -> frozenset[SingularNF]:
    """C+(u): close {u} under conjugation by divisors of delta, keeping positive results."""
    if u.power < 0:
        raise ValueError("positive_conjugates needs a positive element")
    n = u.n
    divs = _divisor_words(n)
    seen = {u}
    frontier = [u]
    while frontier:
        nxt = []
        for v in frontier:
            vw = v.to_word()
            for g in divs:
                c = conjugate_by(vw, g)
                if c.power >= 0 and c not in seen:
                    seen.add(c)
                    if len(seen) > limit:
                        raise ClosureLimitError(f"C+ exceeds {limit} elements")
                    nxt.append(c)
        frontier = nxt
    return frozenset(seen)


def positive_conjugates(u: SBandWord, limit: int = 100_000) -> frozenset[SingularNF]:
    if not u.is_positive():
        raise ValueError("positive_conjugates needs a positive word")
    return positive_conjugates_nf(singular_nf(u), limit)


def positivizing_exponent(*nfs: SingularNF) -> int:
    """Smallest k >= 0 with delta^{nk} making every given element positive."""
    n = nfs[0].n
    worst = max(max(0, -f.power) for f in nfs)
    return -(-worst // n)


def conjugacy_test(u: SBandWord, v: SBandWord, limit: int = 100_000) -> bool:
    """u and v are conjugate by a braid iff their C+ sets coincide."""
    if u.n != v.n:
        raise ValueError("strand count mismatch")
    nu, nv = singular_nf(u), singular_nf(v)
    k = positivizing_exponent(nu, nv)
    shift = u.n * k
    pu = SingularNF(u.n, nu.power + shift, nu.base)
    pv = SingularNF(v.n, nv.power + shift, nv.base)
    cu = positive_conjugates_nf(pu, limit)
    if pv not in cu:
        return False
    return cu == positive_conjugates_nf(pv, limit)

"""The inverse braid monoid IB_n of partial braids and its relatives.

A partial braid is stored canonically as (I, J, core): I and J are the
ascending top and bottom endpoint sets and ``core`` is the Garside normal
form of a braid on k = |I| strands.  The strand starting at the r-th point
of I ends at the pi(r)-th point of J, pi being the core permutation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .braid import (
    BraidWord,
    GarsideNF,
    delete_strands,
    delta_word,
    garside_nf,
    permutation_of,
    sigma_automorphism,
)
from .freegroup import PartialFreeIso
from .words import Letter, ParseError, format_letters, parse_letters

IBLetter = tuple[str, int, int]  # ("s", i, sign), ("e", i, 1), ("t", 0, sign), ("xi", i, 1)


@dataclass(frozen=True)
class IBWord:
    """Word over sigma_i^{+-1} and epsilon_i; the type-B variant also allows tau^{+-1}."""

    n: int
    letters: tuple[IBLetter, ...] = ()

    def __post_init__(self):
        for k, i, e in self.letters:
            if k == "s" and not 1 <= i < self.n:
                raise ValueError(f"s{i} out of range for n={self.n}")
            if k == "e" and not 1 <= i <= self.n:
                raise ValueError(f"e{i} out of range for n={self.n}")
            if k == "xi" and not 1 <= i < self.n:
                raise ValueError(f"xi{i} out of range for n={self.n}")
            if k not in ("s", "e", "t", "xi"):
                raise ValueError(f"unknown letter kind {k!r}")

    @classmethod
    def parse(cls, text: str, n: int | None = None) -> IBWord:
        header, letters = parse_letters(text)
        n = header if header is not None else n
        out = []
        for l in letters:
            if l.kind == "s":
                out.append(("s", l.i, l.sign))
            elif l.kind == "e":
                out.append(("e", l.i, 1))
            elif l.kind == "t":
                out.append(("t", 0, l.sign))
            else:
                raise ParseError(f"inverse braid words use s, e and t letters, got {l.kind}")
        if n is None:
            n = max([i + 1 for k, i, _ in out if k == "s"] + [i for k, i, _ in out if k == "e"] + [1])
        return cls(n, tuple(out))

    @classmethod
    def from_braid(cls, w: BraidWord) -> IBWord:
        return cls(w.n, tuple(("s", abs(x), 1 if x > 0 else -1) for x in w.letters))

    def to_letters(self) -> list[Letter]:
        out = []
        for k, i, e in self.letters:
            if k == "xi":
                raise ValueError("xi letters have no text form")
            out.append(Letter(k, i, 0, e))
        return out

    def __str__(self) -> str:
        return format_letters(self.to_letters()) or "1"

    def __mul__(self, other: IBWord) -> IBWord:
        if other.n != self.n:
            raise ValueError("strand count mismatch")
        return IBWord(self.n, self.letters + other.letters)

    def __len__(self) -> int:
        return len(self.letters)

    def has_tau(self) -> bool:
        return any(k == "t" for k, _, _ in self.letters)


def ib(n: int, text: str) -> IBWord:
    return IBWord.parse(text, n)


# -- partial braids ---------------------------------------------------------------


@dataclass(frozen=True)
class PartialBraid:
    n: int
    I: tuple[int, ...]
    J: tuple[int, ...]
    core: GarsideNF

    def __post_init__(self):
        if len(self.I) != len(self.J) or self.core.n != len(self.I):
            raise ValueError("endpoint sets and core size disagree")
        if list(self.I) != sorted(set(self.I)) or list(self.J) != sorted(set(self.J)):
            raise ValueError("endpoint sets must be strictly ascending")

    @property
    def k(self) -> int:
        return len(self.I)

    @classmethod
    def identity(cls, n: int) -> PartialBraid:
        full = tuple(range(1, n + 1))
        return cls(n, full, full, garside_nf(BraidWord(n)))

    @classmethod
    def empty(cls, n: int) -> PartialBraid:
        return cls(n, (), (), garside_nf(BraidWord(0)))

    @classmethod
    def from_braid(cls, w: BraidWord) -> PartialBraid:
        full = tuple(range(1, w.n + 1))
        return cls(w.n, full, full, garside_nf(w))

    @classmethod
    def partial_identity(cls, n: int, points: Iterable[int]) -> PartialBraid:
        pts = tuple(sorted(set(points)))
        return cls(n, pts, pts, garside_nf(BraidWord(len(pts))))

    def is_total(self) -> bool:
        return self.k == self.n

    def core_word(self) -> BraidWord:
        return self.core.to_word()

    def mapping(self) -> dict[int, int]:
        """Top endpoint -> bottom endpoint."""
        if not self.I:
            return {}
        perm = permutation_of(self.core_word())
        return {self.I[r]: self.J[perm[r]] for r in range(self.k)}

    def __mul__(self, other: PartialBraid) -> PartialBraid:
        return pb_multiply(self, other)

    def inverse(self) -> PartialBraid:
        return pb_inverse(self)

    def describe(self) -> str:
        return f"n={self.n} I={list(self.I)} J={list(self.J)} core={self.core}"

    def __str__(self) -> str:
        return format_canonical(self)


def pb_multiply(a: PartialBraid, b: PartialBraid) -> PartialBraid:
    """Stack a over b and drop every strand that does not run top to bottom."""
    if a.n != b.n:
        raise ValueError("strand count mismatch")
    if a.k == 0 or b.k == 0:
        return PartialBraid.empty(a.n)
    wa, wb = a.core_word(), b.core_word()
    pa, pb = permutation_of(wa), permutation_of(wb)
    top_b = set(b.I)
    dead_a = [r + 1 for r in range(a.k) if a.J[pa[r]] not in top_b]
    bottom_a = set(a.J)
    dead_b = [u + 1 for u in range(b.k) if b.I[u] not in bottom_a]
    new_i = tuple(a.I[r] for r in range(a.k) if a.J[pa[r]] in top_b)
    new_j = tuple(sorted(b.J[pb[u]] for u in range(b.k) if b.I[u] in bottom_a))
    if not new_i:
        return PartialBraid.empty(a.n)
    core = delete_strands(wa, dead_a) * delete_strands(wb, dead_b)
    return PartialBraid(a.n, new_i, new_j, garside_nf(core))


def pb_inverse(a: PartialBraid) -> PartialBraid:
    return PartialBraid(a.n, a.J, a.I, garside_nf(a.core_word().inverse()))


def generator_pb(n: int, letter: IBLetter) -> PartialBraid:
    kind, i, e = letter
    if kind == "s":
        return PartialBraid.from_braid(BraidWord(n, (i * e,)))
    if kind == "e":
        return PartialBraid.partial_identity(n, [j for j in range(1, n + 1) if j != i])
    raise ValueError(f"{kind} is not a generator of IB_n")


def pb_from_word(w: IBWord) -> PartialBraid:
    """Left-to-right product of generator images."""
    if w.has_tau():
        raise ValueError("use typeb_embed for words with tau")
    out = PartialBraid.identity(w.n)
    run: list[int] = []
    # consecutive sigma letters are multiplied as one braid, which is cheaper
    for kind, i, e in w.letters:
        if kind == "s":
            run.append(i * e)
            continue
        if run:
            out = out * PartialBraid.from_braid(BraidWord(w.n, tuple(run)))
            run = []
        out = out * generator_pb(w.n, (kind, i, e))
    if run:
        out = out * PartialBraid.from_braid(BraidWord(w.n, tuple(run)))
    return out


def pb_equal(w1: IBWord, w2: IBWord) -> bool:
    return pb_from_word(w1) == pb_from_word(w2)


def canonical_word(a: PartialBraid) -> IBWord:
    """IBWord in the shape prefix, eps_{k+1..n}, core, eps_{k+1..n}, suffix."""
    n, k = a.n, a.k
    letters: list[IBLetter] = []
    # strand at top point I[r] moves left to position r
    for r, i in enumerate(a.I, start=1):
        letters.extend(("s", j, 1) for j in range(i - 1, r - 1, -1))
    marker = [("e", j, 1) for j in range(k + 1, n + 1)]
    letters.extend(marker)
    letters.extend(("s", abs(x), 1 if x > 0 else -1) for x in a.core_word().letters)
    letters.extend(marker)
    # position r moves right to bottom point J[r], last strand first
    for r in range(k, 0, -1):
        letters.extend(("s", j, 1) for j in range(r, a.J[r - 1]))
    return IBWord(n, tuple(letters))


def format_canonical(a: PartialBraid) -> str:
    """Interchange text: ``n=<n>`` followed by the canonical word (re-parses to ``a``)."""
    return f"n={a.n} {canonical_word(a)}"


# -- faithful model in partial free-group isomorphisms -----------------------------


def generator_phi(n: int, letter: IBLetter) -> PartialFreeIso:
    kind, i, e = letter
    if kind == "s":
        return PartialFreeIso.from_automorphism(sigma_automorphism(n, i * e))
    if kind == "e":
        return PartialFreeIso.identity(n, [j for j in range(1, n + 1) if j != i])
    if kind == "xi":
        images = {j: (j,) for j in range(1, n + 1)}
        images[i], images[i + 1] = (i + 1,), (i,)
        return PartialFreeIso.build(n, images)
    raise ValueError(f"{kind} has no free-group image")


def phi_word(w: IBWord) -> PartialFreeIso:
    f = PartialFreeIso.identity(w.n)
    for letter in w.letters:
        f = f.then(generator_phi(w.n, letter))
    return f


def phi(a: PartialBraid) -> PartialFreeIso:
    return phi_word(canonical_word(a))


def ibp_model(w: IBWord) -> PartialFreeIso:
    """Words over sigma, xi and epsilon mapped into partial free isomorphisms."""
    return phi_word(w)


# -- projections --------------------------------------------------------------------


@dataclass(frozen=True)
class PartialInjection:
    n: int
    pairs: tuple[tuple[int, int], ...]  # sorted (x, image)

    @classmethod
    def from_dict(cls, n: int, m: dict[int, int]) -> PartialInjection:
        if len(set(m.values())) != len(m):
            raise ValueError("not injective")
        return cls(n, tuple(sorted(m.items())))

    def as_dict(self) -> dict[int, int]:
        return dict(self.pairs)

    def then(self, other: PartialInjection) -> PartialInjection:
        o = other.as_dict()
        return PartialInjection.from_dict(self.n, {x: o[y] for x, y in self.pairs if y in o})


def tau(a: PartialBraid) -> PartialInjection:
    return PartialInjection.from_dict(a.n, a.mapping())


@dataclass(frozen=True)
class SignedPartialPermutation:
    """Partial signed bijection of {+-1..+-n}; stored on positive points as x -> +-y."""

    n: int
    pairs: tuple[tuple[int, int], ...]

    @classmethod
    def from_dict(cls, n: int, m: dict[int, int]) -> SignedPartialPermutation:
        if len({abs(v) for v in m.values()}) != len(m):
            raise ValueError("not injective")
        return cls(n, tuple(sorted(m.items())))

    @classmethod
    def identity(cls, n: int, domain: Iterable[int] | None = None) -> SignedPartialPermutation:
        dom = range(1, n + 1) if domain is None else domain
        return cls.from_dict(n, {x: x for x in dom})

    def __call__(self, x: int) -> int | None:
        m = dict(self.pairs)
        y = m.get(abs(x))
        if y is None:
            return None
        return y if x > 0 else -y

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(sorted([x for x, _ in self.pairs] + [-x for x, _ in self.pairs]))

    def then(self, other: SignedPartialPermutation) -> SignedPartialPermutation:
        out = {}
        for x, y in self.pairs:
            z = other(y)
            if z is not None:
                out[x] = z
        return SignedPartialPermutation.from_dict(self.n, out)


def rho_b_generator(n: int, letter: IBLetter) -> SignedPartialPermutation:
    kind, i, e = letter
    if kind == "s":
        m = {j: j for j in range(1, n + 1)}
        m[i], m[i + 1] = i + 1, i
        return SignedPartialPermutation.from_dict(n, m)
    if kind == "t":
        m = {j: j for j in range(1, n + 1)}
        m[1] = -1
        return SignedPartialPermutation.from_dict(n, m)
    if kind == "e":
        return SignedPartialPermutation.identity(n, [j for j in range(1, n + 1) if j != i])
    raise ValueError(f"{kind} is not a type-B generator")


def rho_b(w: IBWord) -> SignedPartialPermutation:
    out = SignedPartialPermutation.identity(w.n)
    for letter in w.letters:
        out = out.then(rho_b_generator(w.n, letter))
    return out


# -- type B -------------------------------------------------------------------------


def typeb_word(w: IBWord) -> IBWord:
    """sigma_i -> sigma_{i+1}, eps_i -> eps_{i+1}, tau -> sigma_1^2 on n+1 strands."""
    out: list[IBLetter] = []
    for kind, i, e in w.letters:
        if kind == "s":
            out.append(("s", i + 1, e))
        elif kind == "e":
            out.append(("e", i + 1, 1))
        elif kind == "t":
            out.extend([("s", 1, e), ("s", 1, e)])
        else:
            raise ValueError(f"{kind} is not a type-B generator")
    return IBWord(w.n + 1, tuple(out))


def typeb_embed(w: IBWord) -> PartialBraid:
    return pb_from_word(typeb_word(w))


def signed_image_of_embedding(a: PartialBraid) -> SignedPartialPermutation:
    """Read the signed partial permutation off a partial braid with strand 1 fixed.

    The sign of a strand is the parity of its number of full turns around
    the fixed first strand, read from the two-strand braid obtained by
    deleting every other strand.
    """
    n = a.n - 1
    if not a.I or a.I[0] != 1 or a.J[0] != 1:
        if a.I:
            raise ValueError("first strand is not fixed")
        return SignedPartialPermutation.from_dict(n, {})
    word = a.core_word()
    perm = permutation_of(word)
    out = {}
    for r in range(1, a.k):
        others = [q + 1 for q in range(a.k) if q not in (0, r)]
        two = delete_strands(word, others)
        turns = sum(1 if x > 0 else -1 for x in two.letters) // 2
        sign = -1 if turns % 2 else 1
        out[a.I[r] - 1] = sign * (a.J[perm[r]] - 1)
    return SignedPartialPermutation.from_dict(n, out)


# -- Brunnian braids ------------------------------------------------------------------


def brunnian_test(b: BraidWord, i: int | None = None) -> bool:
    """Does eps_i b = eps_i hold; without ``i`` the conjunction over all strands."""
    indices = range(1, b.n + 1) if i is None else [i]
    pb = PartialBraid.from_braid(b)
    for j in indices:
        eps = generator_pb(b.n, ("e", j, 1))
        if eps * pb != eps:
            return False
    return True


def brunnian_free_generators(n: int) -> list[BraidWord]:
    """x_i = s_{i-1}^-1 ... s_1^-1 s_1^2 s_1 ... s_{i-1}, i = 1..n-1."""
    if n < 2:
        raise ValueError("n must be at least 2")
    out = []
    for i in range(1, n):
        left = tuple(-j for j in range(i - 1, 0, -1))
        right = tuple(range(1, i))
        out.append(BraidWord(n, left + (1, 1) + right))
    return out


# -- abelianisation --------------------------------------------------------------------


@dataclass(frozen=True)
class AbelianImage:
    """Image in E + Z (or E + Z^2 for type B) with eps + alpha = eps."""

    eps: bool
    z: int | tuple[int, int]

    def __add__(self, other: AbelianImage) -> AbelianImage:
        eps = self.eps or other.eps
        if isinstance(self.z, tuple):
            z = (0, 0) if eps else (self.z[0] + other.z[0], self.z[1] + other.z[1])
        else:
            z = 0 if eps else self.z + other.z
        return AbelianImage(eps, z)


def abelianize(x: PartialBraid | IBWord) -> AbelianImage:
    if isinstance(x, PartialBraid):
        if not x.is_total():
            return AbelianImage(True, 0)
        return AbelianImage(False, sum(1 if y > 0 else -1 for y in x.core_word().letters))
    typeb = x.has_tau()
    if any(k == "e" for k, _, _ in x.letters):
        return AbelianImage(True, (0, 0) if typeb else 0)
    s = sum(e for k, _, e in x.letters if k == "s")
    if typeb:
        t = sum(e for k, _, e in x.letters if k == "t")
        return AbelianImage(False, (t, s))
    return AbelianImage(False, s)


def delta_pb(n: int) -> PartialBraid:
    return PartialBraid.from_braid(delta_word(n))


def all_partial_braids(n: int, core_length: int) -> set[PartialBraid]:
    """Partial braids whose canonical core has length <= core_length (small n only)."""
    from itertools import combinations, product

    out = set()
    for k in range(n + 1):
        gens = [x for i in range(1, k) for x in (i, -i)]
        cores = {garside_nf(BraidWord(k))}
        for length in range(1, core_length + 1):
            for letters in product(gens, repeat=length):
                cores.add(garside_nf(BraidWord(k, letters)))
        for I in combinations(range(1, n + 1), k):
            for J in combinations(range(1, n + 1), k):
                for c in cores:
                    out.add(PartialBraid(n, I, J, c))
    return out

"""Left-greedy normal forms in a Garside structure.

Simple elements are stored as permutation tuples (0-based): ``p[i]`` is
the bottom position of the strand that starts at top position ``i``.  A
product AB means "A first, then B", so its permutation is ``p_B o p_A``.

Two structures are provided: the classical one (simples are permutation
braids, Garside element Delta) and the dual one of Birman, Ko and Lee
(simples are non-crossing partitions, Garside element delta).  Both feed
the same normalisation routine.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Sequence

Perm = tuple[int, ...]


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_then(a: Perm, b: Perm) -> Perm:
    """Permutation of the product "a then b"."""
    return tuple(b[x] for x in a)


def perm_inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for i, x in enumerate(a):
        inv[x] = i
    return tuple(inv)


def transposition(n: int, i: int, j: int) -> Perm:
    p = list(range(n))
    p[i], p[j] = p[j], p[i]
    return tuple(p)


class GarsideStructure:
    """Interface used by :func:`normalize`."""

    n: int

    def identity(self) -> Perm:
        return perm_identity(self.n)

    def top(self) -> Perm:
        raise NotImplementedError

    def conjugate(self, a: Perm, k: int) -> Perm:
        """Return top^k a top^{-k}."""
        raise NotImplementedError

    def left_weight(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        raise NotImplementedError

    def complement(self, a: Perm) -> Perm:
        """The simple element a^{-1} top."""
        return perm_then(perm_inverse(a), self.top())

    def left_complement(self, a: Perm) -> Perm:
        """The simple element top a^{-1}."""
        return perm_then(self.top(), perm_inverse(a))


def normalize(
    structure: GarsideStructure, power: int, simples: Sequence[Perm]
) -> tuple[int, tuple[Perm, ...]]:
    """Left-greedy form of top^power * simples[0] * simples[1] * ...

    Each simple is appended on the right and a single leftward sweep
    restores left-weightedness; the sweep stops once a pair is unchanged.
    """
    ident = structure.identity()
    top = structure.top()
    factors: list[Perm] = []
    lw = structure.left_weight
    for x in simples:
        if x == ident:
            continue
        factors.append(x)
        j = len(factors) - 2
        while j >= 0:
            a, b = lw(factors[j], factors[j + 1])
            changed = a != factors[j]
            factors[j], factors[j + 1] = a, b
            if not changed:
                break
            j -= 1
        while factors and factors[-1] == ident:
            factors.pop()
    lead = 0
    while lead < len(factors) and factors[lead] == top:
        lead += 1
    return power + lead, tuple(factors[lead:])


def absorb_inverses(
    structure: GarsideStructure,
    letters: Sequence[tuple[Perm, int]],
) -> tuple[int, list[Perm]]:
    """Turn a signed letter sequence into top^-N times positive simples.

    ``letters`` holds (simple, sign) pairs.  A negative letter x^{-1} is
    rewritten top^{-1} (top x^{-1}); every top^{-1} then travels to the
    front, conjugating the simples it passes.
    """
    negatives_after = 0
    out: list[Perm] = []
    for simple, sign in reversed(letters):
        if sign > 0:
            piece = simple
        else:
            piece = structure.left_complement(simple)
        out.append(structure.conjugate(piece, negatives_after) if negatives_after else piece)
        if sign < 0:
            negatives_after += 1
    out.reverse()
    return -negatives_after, out


class ArtinStructure(GarsideStructure):
    """Permutation braids with the half-twist Delta as Garside element."""

    def __init__(self, n: int):
        self.n = n
        self._top = tuple(range(n - 1, -1, -1))

    def top(self) -> Perm:
        return self._top

    def conjugate(self, a: Perm, k: int) -> Perm:
        if k % 2 == 0:
            return a
        m = self.n - 1
        return tuple(m - a[m - p] for p in range(self.n))

    def left_weight(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        # Move sigma_i from the front of b to the back of a while i lies in
        # the starting set of b but not in the finishing set of a.
        pa, pb = list(a), list(b)
        ainv = list(perm_inverse(a))
        n = self.n
        stack = [i for i in range(n - 1) if pb[i] > pb[i + 1] and ainv[i] < ainv[i + 1]]
        while stack:
            i = stack.pop()
            if not (pb[i] > pb[i + 1] and ainv[i] < ainv[i + 1]):
                continue
            # a := a sigma_i swaps the values i, i+1 in a.
            x, y = ainv[i], ainv[i + 1]
            pa[x], pa[y] = i + 1, i
            ainv[i], ainv[i + 1] = y, x
            # b := sigma_i^{-1} b swaps the entries i, i+1 of b.
            pb[i], pb[i + 1] = pb[i + 1], pb[i]
            for j in (i - 1, i, i + 1):
                if 0 <= j < n - 1 and pb[j] > pb[j + 1] and ainv[j] < ainv[j + 1]:
                    stack.append(j)
        return tuple(pa), tuple(pb)


def permutation_braid_letters(p: Perm) -> list[int]:
    """A positive word (0-based indices) for the permutation braid of ``p``."""
    q = list(p)
    out = []
    i = 0
    while i < len(q) - 1:
        if q[i] > q[i + 1]:
            out.append(i)
            q[i], q[i + 1] = q[i + 1], q[i]
            i = max(i - 1, 0)
        else:
            i += 1
    return out


def starting_set(p: Perm) -> frozenset[int]:
    """Indices i (0-based) such that sigma_{i+1} left-divides the permutation braid."""
    return frozenset(i for i in range(len(p) - 1) if p[i] > p[i + 1])


def finishing_set(p: Perm) -> frozenset[int]:
    """Indices i (0-based) such that sigma_{i+1} right-divides the permutation braid."""
    inv = perm_inverse(p)
    return frozenset(i for i in range(len(p) - 1) if inv[i] > inv[i + 1])


# -- dual structure ---------------------------------------------------------


def cycles_of(p: Perm) -> list[tuple[int, ...]]:
    seen = [False] * len(p)
    out = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cyc = []
        j = i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = p[j]
        out.append(tuple(cyc))
    return out


def partition_perm(n: int, blocks: Sequence[Sequence[int]]) -> Perm:
    """Permutation of the canonical factor of a non-crossing partition.

    Each block element goes to the next larger element of its block and
    the maximum wraps round to the minimum.
    """
    p = list(range(n))
    for block in blocks:
        b = sorted(block)
        for x, y in zip(b, b[1:] + b[:1]):
            p[x] = y
    return tuple(p)


def perm_blocks(p: Perm) -> list[tuple[int, ...]]:
    return [tuple(sorted(c)) for c in cycles_of(p)]


def is_noncrossing(blocks: Sequence[Sequence[int]]) -> bool:
    label = {}
    for k, b in enumerate(blocks):
        for x in b:
            label[x] = k
    xs = sorted(label)
    # a < b < c < d with a, c in one block and b, d in another is a crossing
    for ia, a in enumerate(xs):
        for ib in range(ia + 1, len(xs)):
            b = xs[ib]
            if label[b] == label[a]:
                continue
            for ic in range(ib + 1, len(xs)):
                c = xs[ic]
                if label[c] != label[a]:
                    continue
                for d in xs[ic + 1 :]:
                    if label[d] == label[b]:
                        return False
    return True


class DualStructure(GarsideStructure):
    """Non-crossing partitions with delta = sigma_{n-1} ... sigma_1 as Garside element.

    The meet used for left-weighting is block intersection, which is the
    meet in the non-crossing partition lattice.
    """

    def __init__(self, n: int):
        self.n = n
        self._top = tuple((i + 1) % n for i in range(n))

    def top(self) -> Perm:
        return self._top

    def conjugate(self, a: Perm, k: int) -> Perm:
        n = self.n
        k %= n
        if k == 0:
            return a
        return tuple((a[(p + k) % n] - k) % n for p in range(n))

    def meet(self, a: Perm, b: Perm) -> Perm:
        n = self.n
        la = [0] * n
        for k, c in enumerate(cycles_of(a)):
            for x in c:
                la[x] = k
        lb = [0] * n
        for k, c in enumerate(cycles_of(b)):
            for x in c:
                lb[x] = k
        groups: dict[tuple[int, int], list[int]] = {}
        for x in range(n):
            groups.setdefault((la[x], lb[x]), []).append(x)
        return partition_perm(n, list(groups.values()))

    def left_weight(self, a: Perm, b: Perm) -> tuple[Perm, Perm]:
        c = self.meet(self.complement(a), b)
        if c == self.identity():
            return a, b
        return perm_then(a, c), perm_then(perm_inverse(c), b)


Normalizer = Callable[[GarsideStructure, int, Sequence[Perm]], tuple[int, tuple[Perm, ...]]]


@dataclass(frozen=True)
class GreedyForm:
    """Power of the Garside element plus left-weighted simple factors."""

    power: int
    factors: tuple[Perm, ...]

    @property
    def canonical_length(self) -> int:
        return len(self.factors)

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

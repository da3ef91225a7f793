"""Free groups, their automorphisms, and partial isomorphisms.

A free word is a tuple of nonzero ints: ``i`` is x_i and ``-i`` is x_i^{-1}.
Automorphisms act on the right, so ``f.then(g)`` sends x to ``g`` applied
to ``f(x)``.  This makes the braid action a homomorphism for left-to-right
multiplication of braid words.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

FreeWord = tuple[int, ...]


def free_reduce(word: Iterable[int]) -> FreeWord:
    """Freely reduce ``word`` with a stack; the result is unique."""
    out: list[int] = []
    for g in word:
        if g == 0:
            raise ValueError("0 is not a free generator")
        if out and out[-1] == -g:
            out.pop()
        else:
            out.append(g)
    return tuple(out)


def free_inverse(word: Iterable[int]) -> FreeWord:
    return tuple(-g for g in reversed(tuple(word)))


def substitute(word: Iterable[int], images: Mapping[int, FreeWord]) -> FreeWord:
    """Replace each x_i by ``images[i]``; generators missing from ``images`` map to 1."""
    out: list[int] = []
    for g in word:
        img = images.get(abs(g), ())
        out.extend(img if g > 0 else free_inverse(img))
    return free_reduce(out)


def format_free(word: FreeWord) -> str:
    if not word:
        return "1"
    return " ".join(f"x{abs(g)}" + ("'" if g < 0 else "") for g in word)


def core_letter(word: FreeWord) -> int:
    """Return j when ``word`` is a reduced conjugate w x_j w^{-1}, else 0."""
    k = len(word)
    if k % 2 == 0:
        return 0
    mid = word[k // 2]
    if mid < 0 or word[: k // 2] != free_inverse(word[k // 2 + 1 :]):
        return 0
    return mid


@dataclass(frozen=True)
class FreeAutomorphism:
    """An endomorphism of F_n stored as the images of x_1..x_n."""

    rank: int
    images: tuple[FreeWord, ...]

    @classmethod
    def identity(cls, rank: int) -> FreeAutomorphism:
        return cls(rank, tuple((i,) for i in range(1, rank + 1)))

    def image(self, i: int) -> FreeWord:
        return self.images[i - 1]

    def apply(self, word: Iterable[int]) -> FreeWord:
        return substitute(word, {i + 1: img for i, img in enumerate(self.images)})

    def then(self, other: FreeAutomorphism) -> FreeAutomorphism:
        """Composite map: first ``self``, then ``other``."""
        if other.rank != self.rank:
            raise ValueError("rank mismatch")
        return FreeAutomorphism(self.rank, tuple(other.apply(img) for img in self.images))

    __mul__ = then

    def __str__(self) -> str:
        return ", ".join(f"x{i + 1} -> {format_free(w)}" for i, w in enumerate(self.images))


@dataclass(frozen=True)
class PartialFreeIso:
    """A partial map x_i -> w_i x_j w_i^{-1} of braid-conjugation type.

    ``images`` is a sorted tuple of (domain index, reduced image).  Letters
    that are not the core letter of some image are treated as deleted, so
    every image only uses the image alphabet.
    """

    rank: int
    images: tuple[tuple[int, FreeWord], ...]

    @classmethod
    def build(cls, rank: int, images: Mapping[int, FreeWord]) -> PartialFreeIso:
        targets = {core_letter(w) for w in images.values()}
        if 0 in targets:
            raise ValueError("image is not a conjugate of a generator")
        keep = {j: (j,) for j in targets}
        cleaned = {i: substitute(w, keep) for i, w in images.items()}
        return cls(rank, tuple(sorted(cleaned.items())))

    @classmethod
    def from_automorphism(cls, f: FreeAutomorphism) -> PartialFreeIso:
        return cls.build(f.rank, {i + 1: w for i, w in enumerate(f.images)})

    @classmethod
    def identity(cls, rank: int, domain: Iterable[int] | None = None) -> PartialFreeIso:
        dom = range(1, rank + 1) if domain is None else domain
        return cls(rank, tuple((i, (i,)) for i in sorted(dom)))

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(i for i, _ in self.images)

    @property
    def range(self) -> tuple[int, ...]:
        return tuple(sorted(core_letter(w) for _, w in self.images))

    def then(self, other: PartialFreeIso) -> PartialFreeIso:
        """First ``self``, then ``other``; images whose core letter leaves the domain die."""
        table = dict(other.images)
        out = {}
        for i, w in self.images:
            if core_letter(w) in table:
                out[i] = substitute(w, table)
        return PartialFreeIso.build(self.rank, out)

    __mul__ = then

    def __str__(self) -> str:
        if not self.images:
            return "(empty map)"
        return ", ".join(f"x{i} -> {format_free(w)}" for i, w in self.images)

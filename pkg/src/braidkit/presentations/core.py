"""Presentations over labelled generators and a homomorphism verifier.

A word is a tuple of ``(label, exponent)`` pairs with exponent +-1.  Text
form: labels separated by spaces, a trailing ``'`` marks an inverse and
``1`` is the empty word.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Callable, Iterable, Mapping, Sequence

from ..words import ParseError

Word = tuple[tuple[str, int], ...]


def word(*items: str | tuple[str, int] | Sequence) -> Word:
    """Flatten labels, ``(label, exp)`` pairs and nested words into a word.

    A bare label may end in ``'`` to mean its inverse.
    """
    out: list[tuple[str, int]] = []
    for it in items:
        if isinstance(it, str):
            out.append((it[:-1], -1) if it.endswith("'") else (it, 1))
        elif len(it) == 2 and isinstance(it[0], str) and isinstance(it[1], int):
            out.append((it[0], it[1]))
        else:
            out.extend(word(*it))
    return tuple(out)


def power(w: Word, k: int) -> Word:
    base = w if k >= 0 else inverse_word(w)
    return base * abs(k)


def inverse_word(w: Word) -> Word:
    return tuple((g, -e) for g, e in reversed(w))


def conj(w: Word, by: Word) -> Word:
    """by w by^-1."""
    return by + w + inverse_word(by)


def format_word(w: Word) -> str:
    return " ".join(g + ("'" if e < 0 else "") for g, e in w) or "1"


def parse_word(text: str) -> Word:
    out = []
    for pos, tok in enumerate(text.split()):
        if tok == "1":
            continue
        label = tok[:-1] if tok.endswith("'") else tok
        if not label or "'" in label:
            raise ParseError("bad generator token", tok, pos)
        out.append((label, -1 if tok.endswith("'") else 1))
    return tuple(out)


@dataclass(frozen=True)
class Generator:
    label: str
    invertible: bool = True


@dataclass(frozen=True)
class Relation:
    lhs: Word
    rhs: Word
    kind: str = ""

    def __str__(self) -> str:
        return f"{format_word(self.lhs)} = {format_word(self.rhs)}"


@dataclass(frozen=True)
class Presentation:
    name: str
    generators: tuple[Generator, ...]
    relations: tuple[Relation, ...]
    params: tuple[tuple[str, Any], ...] = ()

    def __post_init__(self):
        errors = self.structural_errors()
        if errors:
            raise ValueError(f"{self.name}: " + "; ".join(errors[:5]))

    @classmethod
    def build(
        cls,
        name: str,
        generators: Iterable[Generator | str],
        relations: Iterable[Relation],
        **params: Any,
    ) -> Presentation:
        gens = tuple(g if isinstance(g, Generator) else Generator(g) for g in generators)
        seen: set[tuple[Word, Word]] = set()
        rels = []
        for r in relations:
            key = (r.lhs, r.rhs)
            if key in seen or (r.rhs, r.lhs) in seen or r.lhs == r.rhs:
                continue
            seen.add(key)
            rels.append(r)
        return cls(name, gens, tuple(rels), tuple(sorted(params.items())))

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(g.label for g in self.generators)

    def generator(self, label: str) -> Generator:
        for g in self.generators:
            if g.label == label:
                return g
        raise KeyError(label)

    def structural_errors(self) -> list[str]:
        table = {g.label: g for g in self.generators}
        errors = []
        if len(table) != len(self.generators):
            errors.append("duplicate generator labels")
        for r in self.relations:
            for g, e in r.lhs + r.rhs:
                if g not in table:
                    errors.append(f"undeclared label {g!r} in {r}")
                elif e < 0 and not table[g].invertible:
                    errors.append(f"inverse of non-invertible {g!r} in {r}")
                elif e not in (1, -1):
                    errors.append(f"bad exponent in {r}")
        return errors

    def kinds(self) -> dict[str, int]:
        out: dict[str, int] = {}
        for r in self.relations:
            out[r.kind] = out.get(r.kind, 0) + 1
        return out

    def export(self) -> str:
        return "\n".join(str(r) for r in self.relations)

    def __len__(self) -> int:
        return len(self.relations)


def rel(lhs: Word, rhs: Word, kind: str) -> Relation:
    return Relation(tuple(lhs), tuple(rhs), kind)


def chain(words: Sequence[Word], kind: str) -> list[Relation]:
    """w0 = w1 = ... = wk as consecutive equalities."""
    return [rel(a, b, kind) for a, b in zip(words, words[1:])]


# -- models and verification ---------------------------------------------------


@dataclass(frozen=True)
class Model:
    """A monoid given by identity, multiplication, equality and optional inversion."""

    name: str
    identity: Any
    multiply: Callable[[Any, Any], Any]
    equal: Callable[[Any, Any], bool]
    inverse: Callable[[Any], Any] | None = None


@dataclass
class Assignment:
    model: Model
    images: Mapping[str, Any]
    inverse_images: Mapping[str, Any] = field(default_factory=dict)

    def image(self, label: str, exponent: int) -> Any:
        if label not in self.images:
            raise KeyError(f"no image for generator {label!r}")
        if exponent > 0:
            return self.images[label]
        if label in self.inverse_images:
            return self.inverse_images[label]
        if self.model.inverse is None:
            raise ValueError(f"model {self.model.name} cannot invert {label!r}")
        return self.model.inverse(self.images[label])

    def evaluate(self, w: Word) -> Any:
        out = self.model.identity
        for g, e in w:
            out = self.model.multiply(out, self.image(g, e))
        return out


@dataclass(frozen=True)
class Verdict:
    relation: Relation
    status: str  # "holds", "fails" or "skipped"
    witness: str = ""


@dataclass(frozen=True)
class VerificationReport:
    presentation: str
    model: str
    verdicts: tuple[Verdict, ...]

    def count(self, status: str) -> int:
        return sum(1 for v in self.verdicts if v.status == status)

    @property
    def holds(self) -> int:
        return self.count("holds")

    @property
    def fails(self) -> int:
        return self.count("fails")

    @property
    def skipped(self) -> int:
        return self.count("skipped")

    @property
    def ok(self) -> bool:
        return self.fails == 0 and self.holds > 0

    def failures(self) -> list[Verdict]:
        return [v for v in self.verdicts if v.status == "fails"]

    def summary(self) -> str:
        return (
            f"{self.presentation} -> {self.model}: {self.holds} hold, "
            f"{self.fails} fail, {self.skipped} skipped"
        )


def verify_homomorphism(p: Presentation, a: Assignment | None) -> VerificationReport:
    """Check every relation of ``p`` under ``a``; without a model all are skipped."""
    if a is None:
        return VerificationReport(p.name, "none", tuple(Verdict(r, "skipped") for r in p.relations))
    missing = [g for g in p.labels if g not in a.images]
    if missing:
        raise KeyError(f"assignment misses generators {missing}")
    verdicts = []
    for r in p.relations:
        left, right = a.evaluate(r.lhs), a.evaluate(r.rhs)
        if a.model.equal(left, right):
            verdicts.append(Verdict(r, "holds"))
        else:
            verdicts.append(Verdict(r, "fails", f"{left!s} != {right!s}"))
    return VerificationReport(p.name, a.model.name, tuple(verdicts))

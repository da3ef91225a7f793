"""Text grammar shared by every word type.

Tokens are whitespace separated::

    s3   s3'        sigma_3, sigma_3 inverse
    x2              singular crossing x_2
    a(4,2) a'(4,2)  band generator a_42 and its inverse
    b(4,2)          singular band generator b_42
    e2              epsilon_2 (strand 2 removed)
    t   t'          tau and its inverse (type B)
    n=5             header fixing the strand count

The parser produces :class:`Letter` tuples; each word type validates the
letters it accepts.
"""

from __future__ import annotations

import re
from typing import Iterable, NamedTuple


class Letter(NamedTuple):
    kind: str  # one of "s", "x", "a", "b", "e", "t"
    i: int = 0
    j: int = 0
    sign: int = 1

    def inverse(self) -> "Letter":
        return self._replace(sign=-self.sign)


class ParseError(ValueError):
    """Raised for malformed tokens; carries the offending token and its position."""

    def __init__(self, message: str, token: str = "", position: int = -1):
        if token:
            message = f"{message}: token {token!r} at position {position}"
        super().__init__(message)
        self.token = token
        self.position = position


_TOKEN = re.compile(
    r"""^(?:
        (?P<idx>[sxe])(?P<i>\d+)(?P<iprime>'?)
      | (?P<band>[ab])(?P<bprime>'?)\((?P<t>\d+),(?P<s>\d+)\)
      | t(?P<tprime>'?)
    )$""",
    re.VERBOSE,
)


def parse_token(token: str, position: int = 0) -> Letter:
    m = _TOKEN.match(token)
    if m is None:
        raise ParseError("unrecognised token", token, position)
    if m.group("idx"):
        kind = m.group("idx")
        sign = -1 if m.group("iprime") else 1
        if sign < 0 and kind != "s":
            raise ParseError(f"generator {kind} has no inverse", token, position)
        return Letter(kind, int(m.group("i")), 0, sign)
    if m.group("band"):
        kind = m.group("band")
        sign = -1 if m.group("bprime") else 1
        if sign < 0 and kind == "b":
            raise ParseError("b generators have no inverse", token, position)
        return Letter(kind, int(m.group("t")), int(m.group("s")), sign)
    return Letter("t", 0, 0, -1 if m.group("tprime") else 1)


def parse_letters(text: str) -> tuple[int | None, list[Letter]]:
    """Parse ``text`` into an optional ``n=`` header value and a letter list."""
    n = None
    letters = []
    tokens = text.split()
    for pos, tok in enumerate(tokens):
        if tok.startswith("n="):
            if pos != 0 and n is not None:
                raise ParseError("duplicate strand-count header", tok, pos)
            try:
                n = int(tok[2:])
            except ValueError:
                raise ParseError("bad strand count", tok, pos) from None
            continue
        if tok == "1":
            continue
        letters.append(parse_token(tok, pos))
    return n, letters


def format_letter(letter: Letter) -> str:
    prime = "'" if letter.sign < 0 else ""
    if letter.kind in "sxe":
        return f"{letter.kind}{letter.i}{prime}"
    if letter.kind in "ab":
        return f"{letter.kind}{prime}({letter.i},{letter.j})"
    return "t" + prime


def format_letters(letters: Iterable[Letter]) -> str:
    return " ".join(format_letter(l) for l in letters)

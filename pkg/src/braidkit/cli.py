"""Command-line front end.

Positional arguments of the word commands start with an optional ``n=K``
header followed by words in the shared token grammar.  Printed normal forms
(``power=.. factors=..`` or ``power=.. base=..``) are accepted back as input.
Exit status: 0 success, 1 a "false" verdict, 2 bad input.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time
from dataclasses import dataclass
from typing import Any, Sequence

from .bkl import BandWord, artin_to_band, band_to_artin, bkl_delta_word, bkl_nf
from .braid import BraidWord, delete_strands, delta_word, garside_nf
from .inverse import IBWord, brunnian_test, canonical_word, pb_from_word
from .presentations import builtin_presentation, quotient_assignments, standard_assignment, verify_homomorphism
from .presentations.graphs import VARIANTS, GraphError, PlanarGraph, band_assignment, sergiescu
from .singular import (
    ClosureLimitError,
    SBandWord,
    SingularWord,
    alphabet,
    band_to_classical,
    classical_to_band,
    conjugacy_test,
    positive_conjugates_nf,
    positivizing_exponent,
    singular_nf,
)
from .words import Letter, ParseError, parse_letters

KINDS = ("garside", "bkl", "singular", "ib")


class UsageError(ValueError):
    pass


@dataclass
class Output:
    lines: list[str]
    data: dict[str, Any]
    status: int = 0


# -- word input ------------------------------------------------------------------------


def split_header(items: Sequence[str]) -> tuple[int | None, list[str]]:
    if items and items[0].startswith("n=") and len(items[0].split()) == 1:
        try:
            return int(items[0][2:]), list(items[1:])
        except ValueError:
            raise ParseError("bad strand count", items[0], 0) from None
    return None, list(items)


def _nf_parts(text: str, key: str) -> tuple[int, list[str]]:
    head, _, rest = text.strip().partition(f" {key}=")
    if not head.startswith("power="):
        raise ParseError(f"expected power=<m> {key}=...", text.split()[0], 0)
    try:
        power = int(head[len("power=") :])
    except ValueError:
        raise ParseError("bad power", head, 0) from None
    return power, [p for p in rest.split("|")]


def _letters_kinds(text: str) -> set[str]:
    _, letters = parse_letters(text)
    return {l.kind for l in letters}


def read_braid(text: str, n: int | None) -> BraidWord:
    """Artin word, band word or a printed Garside normal form."""
    if text.strip().startswith("power="):
        if n is None:
            raise UsageError("normal-form input needs an n= header")
        power, parts = _nf_parts(text, "factors")
        w = delta_word(n) ** power
        for p in parts:
            w = w * BraidWord.parse(p, n)
        return w
    if "a" in _letters_kinds(text):
        return band_to_artin(BandWord.parse(text, n))
    return BraidWord.parse(text, n)


def read_band(text: str, n: int | None) -> BandWord:
    """Band word, Artin word or a printed BKL normal form."""
    if text.strip().startswith("power="):
        if n is None:
            raise UsageError("normal-form input needs an n= header")
        power, parts = _nf_parts(text, "factors")
        w = bkl_delta_word(n) ** power
        for p in parts:
            w = w * BandWord.parse(p, n)
        return w
    if "s" in _letters_kinds(text):
        return artin_to_band(BraidWord.parse(text, n))
    return BandWord.parse(text, n)


def read_singular(text: str, n: int | None) -> SBandWord:
    """Singular band word, classical word (s, x letters) or a printed singular normal form."""
    if text.strip().startswith("power="):
        if n is None:
            raise UsageError("normal-form input needs an n= header")
        power, parts = _nf_parts(text, "base")
        delta = SBandWord.from_codes(n, alphabet(n).delta())
        return (delta**power) * SBandWord.parse(parts[0], n)
    header, letters = parse_letters(text)
    # classical letters are band letters on adjacent strands
    band = [Letter("a" if l.kind == "s" else "b", l.i + 1, l.i, l.sign) if l.kind in "sx" else l for l in letters]
    return SBandWord.from_letters(band, header if header is not None else n)


def read_ib(text: str, n: int | None) -> IBWord:
    return IBWord.parse(text, n)


READERS = {"garside": read_braid, "bkl": read_band, "singular": read_singular, "ib": read_ib}


def normal_form(kind: str, text: str, n: int | None):
    w = READERS[kind](text, n)
    if kind == "garside":
        return garside_nf(w)
    if kind == "bkl":
        return bkl_nf(w)
    if kind == "singular":
        return singular_nf(w)
    return pb_from_word(w)


def _nf_text(kind: str, nf) -> str:
    if kind == "ib":
        return f"n={nf.n} {canonical_word(nf)}"
    return str(nf)


def _words(args, count: int | None = None) -> tuple[int | None, list[str]]:
    n, words = split_header(args.words)
    if count is not None and len(words) != count:
        raise UsageError(f"expected {count} word(s), got {len(words)}")
    return n, words


# -- subcommands ----------------------------------------------------------------------


def cmd_nf(args) -> Output:
    n, words = _words(args)
    if not words:
        raise UsageError("nf needs at least one word")
    lines, data = [], []
    for text in words:
        nf = normal_form(args.kind, text, n)
        lines.append(_nf_text(args.kind, nf))
        data.append({"input": text, "nf": lines[-1]})
    return Output(lines, {"kind": args.kind, "results": data})


def cmd_eq(args) -> Output:
    n, (u, v) = _words(args, 2)
    a, b = normal_form(args.kind, u, n), normal_form(args.kind, v, n)
    if args.kind != "ib" and a.n != b.n:
        raise UsageError(f"strand counts differ: {a.n} vs {b.n}")
    same = a == b
    return Output(["equal" if same else "not equal"], {"kind": args.kind, "equal": same}, 0 if same else 1)


def cmd_conj(args) -> Output:
    n, (u, v) = _words(args, 2)
    wu, wv = read_singular(u, n), read_singular(v, n)
    if wu.n != wv.n:
        raise UsageError("strand counts differ")
    verdict = conjugacy_test(wu, wv, args.limit)
    nu, nv = singular_nf(wu), singular_nf(wv)
    shift = wu.n * positivizing_exponent(nu, nv)
    sets = {}
    lines = [f"conjugate: {str(verdict).lower()}"]
    for name, nf in (("u", nu), ("v", nv)):
        pos = type(nf)(nf.n, nf.power + shift, nf.base)
        members = sorted(str(c) for c in positive_conjugates_nf(pos, args.limit))
        sets[name] = members
        lines.append(f"C+({name}) size={len(members)}")
        if args.show_sets:
            lines += [f"  {m}" for m in members]
    return Output(lines, {"conjugate": verdict, "shift": shift, "sets": sets}, 0 if verdict else 1)


def cmd_delete(args) -> Output:
    n, (text,) = _words(args, 1)
    w = read_braid(text, n)
    out = delete_strands(w, args.strand)
    return Output([f"n={out.n} {out}"], {"n": out.n, "word": str(out)})


def cmd_brunnian(args) -> Output:
    n, (text,) = _words(args, 1)
    w = read_braid(text, n)
    verdict = brunnian_test(w, args.strand)
    label = "brunnian" if args.strand is None else f"{args.strand}-brunnian"
    return Output([f"{label}: {str(verdict).lower()}"], {"brunnian": verdict, "strand": args.strand}, 0 if verdict else 1)


def cmd_convert(args) -> Output:
    n, (text,) = _words(args, 1)
    d = args.direction
    if d == "artin-to-band":
        out = artin_to_band(BraidWord.parse(text, n))
    elif d == "band-to-artin":
        out = band_to_artin(BandWord.parse(text, n))
    elif d == "classical-to-band":
        out = classical_to_band(SingularWord.parse(text, n))
    else:
        out = band_to_classical(SBandWord.parse(text, n))
    return Output([f"n={out.n} {out}"], {"n": out.n, "word": str(out)})


def _int_params(pairs: Sequence[str]) -> dict[str, int]:
    out = {}
    for p in pairs:
        key, sep, value = p.partition("=")
        if not sep:
            raise UsageError(f"parameter {p!r} should look like key=value")
        try:
            out[key] = int(value)
        except ValueError:
            raise UsageError(f"parameter {key} must be an integer") from None
    return out


def _presentation(args):
    if args.graph:
        g = PlanarGraph.load(args.graph)
        return sergiescu(g, args.variant, args.minimal), g
    if not args.family:
        raise UsageError("give a family name or --graph FILE")
    return builtin_presentation(args.family, **_int_params(args.params)), None


def cmd_pres(args) -> Output:
    p, g = _presentation(args)
    gens = [g_.label + ("" if g_.invertible else " (monoid)") for g_ in p.generators]
    if args.action == "gen":
        lines = [f"# {p.name} {dict(p.params)}", "# generators: " + " ".join(gens)] + [str(r) for r in p.relations]
        return Output(
            lines,
            {
                "name": p.name,
                "params": dict(p.params),
                "generators": [{"label": x.label, "invertible": x.invertible} for x in p.generators],
                "relations": [{"lhs": str(r).split(" = ")[0], "rhs": str(r).split(" = ")[1], "kind": r.kind} for r in p.relations],
            },
        )
    if g is not None:
        try:
            assignments = [band_assignment(g, args.variant)]
        except GraphError as exc:
            assignments = [None]
            print(f"no model: {exc}", file=sys.stderr)
    else:
        a = standard_assignment(p)
        assignments = [a] if a is not None else (quotient_assignments(p) or [None])
    reports = [verify_homomorphism(p, a) for a in assignments]
    lines, data = [], []
    for r in reports:
        lines.append(r.summary())
        lines += [f"  fails: {v.relation}" for v in r.failures()]
        data.append({"model": r.model, "holds": r.holds, "fails": r.fails, "skipped": r.skipped,
                     "failures": [str(v.relation) for v in r.failures()]})
    status = 0 if all(r.fails == 0 for r in reports) else 1
    return Output(lines, {"presentation": p.name, "reports": data}, status)


def random_artin(n: int, m: int, rng: random.Random) -> BraidWord:
    return BraidWord(n, tuple(rng.randint(1, n - 1) * rng.choice((1, -1)) for _ in range(m)))


def perturb(w: BraidWord, rng: random.Random) -> BraidWord:
    """Either insert a cancelling pair (same braid) or flip one letter (a different braid)."""
    letters = list(w.letters)
    k = rng.randrange(len(letters) + 1)
    if rng.random() < 0.5:
        i = rng.randint(1, w.n - 1)
        letters[k:k] = [i, -i]
    elif letters:
        k = min(k, len(letters) - 1)
        letters[k] = -letters[k]
    return BraidWord(w.n, tuple(letters))


def cmd_bench(args) -> Output:
    rng = random.Random(args.seed)
    header = f"{'n':>4} {'m':>6} {'garside_s':>10} {'bkl_s':>10} {'agree':>6}"
    lines, rows = [header], []
    for n in args.strands:
        for m in args.lengths:
            tg = tb = 0.0
            agree = 0
            for _ in range(args.pairs):
                u = random_artin(n, m, rng)
                v = perturb(u, rng)
                t0 = time.perf_counter()
                g_same = garside_nf(u) == garside_nf(v)
                t1 = time.perf_counter()
                b_same = bkl_nf(artin_to_band(u)) == bkl_nf(artin_to_band(v))
                t2 = time.perf_counter()
                tg += t1 - t0
                tb += t2 - t1
                if g_same != b_same:
                    raise AssertionError(f"engines disagree on n={n} m={m}")
                agree += 1
            rows.append({"n": n, "m": m, "garside_s": tg / args.pairs, "bkl_s": tb / args.pairs, "agree": agree})
            lines.append(f"{n:>4} {m:>6} {tg / args.pairs:>10.4f} {tb / args.pairs:>10.4f} {agree:>3}/{args.pairs}")
    return Output(lines, {"seed": args.seed, "rows": rows})


# -- parser -----------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidkit", description="Braid groups, singular and inverse braid monoids.")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    sub = p.add_subparsers(dest="command", required=True)

    def words_cmd(name: str, help_: str, kind: bool = True) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
        if kind:
            sp.add_argument("--kind", choices=KINDS, default="garside")
        sp.add_argument("words", nargs="*", help="optional n=K header, then words")
        return sp

    words_cmd("nf", "print normal forms")
    words_cmd("eq", "decide equality of two words")
    sp = words_cmd("conj", "singular conjugacy test with C+ sets", kind=False)
    sp.add_argument("--limit", type=int, default=100_000)
    sp.add_argument("--show-sets", action="store_true")
    sp = words_cmd("delete", "delete strands (top positions)", kind=False)
    sp.add_argument("--strand", type=int, action="append", required=True)
    sp = words_cmd("brunnian", "Brunnian test in the inverse braid monoid", kind=False)
    sp.add_argument("--strand", type=int, default=None)
    sp = words_cmd("convert", "change generating set", kind=False)
    sp.add_argument(
        "--direction",
        choices=("artin-to-band", "band-to-artin", "classical-to-band", "band-to-classical"),
        default="artin-to-band",
    )

    sp = sub.add_parser("pres", help="generate or verify presentations")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.add_argument("action", choices=("gen", "verify"))
    sp.add_argument("family", nargs="?")
    sp.add_argument("params", nargs="*", help="key=value, e.g. n=4 e=3 r=3")
    sp.add_argument("--graph", help="YAML/JSON graph file")
    sp.add_argument("--variant", choices=VARIANTS, default="plane")
    sp.add_argument("--minimal", action="store_true", help="tree relations from one maximal tree")

    sp = sub.add_parser("bench", help="Garside vs BKL timing table")
    sp.add_argument("--json", action="store_true", default=argparse.SUPPRESS)
    sp.add_argument("--lengths", type=int, nargs="+", default=[100, 500, 2000])
    sp.add_argument("--strands", type=int, nargs="+", default=[10, 25, 50])
    sp.add_argument("--pairs", type=int, default=1)
    sp.add_argument("--seed", type=int, default=20240229)
    return p


COMMANDS = {
    "nf": cmd_nf,
    "eq": cmd_eq,
    "conj": cmd_conj,
    "delete": cmd_delete,
    "brunnian": cmd_brunnian,
    "convert": cmd_convert,
    "pres": cmd_pres,
    "bench": cmd_bench,
}


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        out = COMMANDS[args.command](args)
    except (ParseError, UsageError, GraphError, ClosureLimitError, ValueError, KeyError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        if args.json:
            print(json.dumps({"error": str(msg)}), file=stdout)
        else:
            print(f"error: {msg}", file=stderr)
        return 2
    if args.json:
        print(json.dumps(out.data, ensure_ascii=False), file=stdout)
    else:
        for line in out.lines:
            print(line, file=stdout)
    return out.status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

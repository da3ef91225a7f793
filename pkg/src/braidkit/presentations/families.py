"""Builtin presentations transcribed for every braid-like family.

Labels: ``s<i>`` for sigma_i, ``s`` for sigma = s1 ... s(n-1), ``t`` for
tau, ``x<i>`` for singular crossings, ``e`` / ``e<i>`` for epsilon,
``xi<i>`` for the permutation generators, ``d<i>`` / ``d`` for the sphere
generators, ``r`` for rho and ``w`` for omega.
"""

from __future__ import annotations

from typing import Callable

from .core import Generator, Presentation, Relation, Word, chain, conj, inverse_word, power, rel, word


def _s(i: int) -> str:
    return f"s{i}"


def braid_relations(labels: list[str], kind: str = "braid") -> list[Relation]:
    """Artin relations on a linear chain of labels."""
    out = []
    for i in range(len(labels)):
        for j in range(i + 1, len(labels)):
            a, b = labels[i], labels[j]
            if j - i > 1:
                out.append(rel(word(a, b), word(b, a), "commute"))
            else:
                out.append(rel(word(a, b, a), word(b, a, b), kind))
    return out


def invertibility(labels: list[str]) -> list[Relation]:
    out = []
    for a in labels:
        out.append(rel(word(a, a + "'"), (), "inverse"))
        out.append(rel(word(a + "'", a), (), "inverse"))
    return out


def commute(a: Word, b: Word, kind: str) -> Relation:
    return rel(a + b, b + a, kind)


def conjugate_gen(g: str, i: int, by: str = "s") -> Word:
    """by^i g by^-i, e.g. sigma^i sigma_1 sigma^-i = sigma_{i+1}."""
    return conj(word(g), power(word(by), i))


def two_generator_core(n: int, g1: str = "s1", g: str = "s") -> list[Relation]:
    out = []
    for i in range(2, n // 2 + 1):
        c = conjugate_gen(g1, i, g)
        out.append(rel(word(g1) + c, c + word(g1), "two-gen"))
    out.append(rel(power(word(g), n), power(word(g, g1), n - 1), "two-gen"))
    return out


def _gens(labels: list[str], invertible: bool = True) -> list[Generator]:
    return [Generator(x, invertible) for x in labels]


def _need(n: int, low: int, family: str) -> None:
    if not isinstance(n, int) or n < low:
        raise ValueError(f"{family} needs n >= {low}")


# -- braid groups ---------------------------------------------------------------


def artin(n: int) -> Presentation:
    _need(n, 2, "artin")
    labels = [_s(i) for i in range(1, n)]
    return Presentation.build("artin", _gens(labels), braid_relations(labels), n=n)


def two_generator(n: int) -> Presentation:
    _need(n, 2, "two-generator")
    return Presentation.build("two-generator", _gens(["s1", "s"]), two_generator_core(n), n=n)


def lin(n: int) -> Presentation:
    """Generators sigma_1 and beta = sigma sigma_1; sigma is written beta sigma_1^-1."""
    _need(n, 2, "lin")
    sig = word("b", "s1'")
    out = []
    for i in range(2, n // 2 + 1):
        lhs = word("b") + power(sig, i - 1) + word("b")
        rhs = power(sig, i) + word("b") + power(sig, -i - 1) + word("b") + power(sig, i)
        out.append(rel(lhs, rhs, "lin"))
    out.append(rel(power(sig, n), power(word("b"), n - 1), "lin"))
    return Presentation.build("lin", _gens(["s1", "b"]), out, n=n)


def type_b(n: int) -> Presentation:
    _need(n, 2, "type-b")
    labels = [_s(i) for i in range(1, n)]
    out = braid_relations(labels)
    out += [commute(word("t"), word(_s(i)), "tau") for i in range(2, n)]
    out.append(rel(word("t", "s1", "t", "s1"), word("s1", "t", "s1", "t"), "tau"))
    return Presentation.build("type-b", _gens(labels + ["t"]), out, n=n)


def type_b_few(n: int) -> Presentation:
    """tau commutes with sigma^i sigma_1 sigma^-i = sigma_{i+1} for 1 <= i <= n-2."""
    _need(n, 2, "type-b-few")
    out = two_generator_core(n)
    out += [commute(word("t"), conjugate_gen("s1", i), "tau") for i in range(1, n - 1)]
    out.append(rel(word("t", "s1", "t", "s1"), word("s1", "t", "s1", "t"), "tau"))
    return Presentation.build("type-b-few", _gens(["s1", "s", "t"]), out, n=n)


def type_d(n: int) -> Presentation:
    _need(n, 3, "type-d")
    labels = [_s(i) for i in range(1, n)]
    out = braid_relations(labels)
    out += [commute(word("r"), word(_s(i)), "rho") for i in [1] + list(range(3, n))]
    out.append(rel(word("r", "s2", "r"), word("s2", "r", "s2"), "rho"))
    return Presentation.build("type-d", _gens(labels + ["r"]), out, n=n)


def type_d_few(n: int) -> Presentation:
    _need(n, 3, "type-d-few")
    out = two_generator_core(n)
    out += [commute(word("r"), conjugate_gen("s1", i), "rho") for i in [0] + list(range(2, n - 1))]
    c1 = conjugate_gen("s1", 1)
    out.append(rel(word("r") + c1 + word("r"), c1 + word("r") + c1, "rho"))
    return Presentation.build("type-d-few", _gens(["s1", "s", "r"]), out, n=n)


def e8() -> Presentation:
    out = []
    for i in (2, 3, 4):
        c = conjugate_gen("s1", i)
        out.append(rel(word("s1") + c, c + word("s1"), "two-gen"))
    out.append(rel(power(word("s"), 8), power(word("s", "s1"), 7), "two-gen"))
    out += [commute(word("w"), conjugate_gen("s1", i), "omega") for i in (0, 1, 3, 4, 5, 6)]
    c2 = conjugate_gen("s1", 2)
    out.append(rel(word("w") + c2 + word("w"), c2 + word("w") + c2, "omega"))
    return Presentation.build("e8", _gens(["s1", "s", "w"]), out)


def _bmr_common(r: int) -> list[Relation]:
    out = two_generator_core(r, "t2", "t")
    c = conjugate_gen("t2", 1, "t")  # tau_3
    p = word("t2p")
    out.append(rel(p + c + p, c + p + c, "bmr"))
    lhs = c + p + word("t2") + c + p + word("t2")
    rhs = p + word("t2") + c + p + word("t2") + c
    out.append(rel(lhs, rhs, "bmr"))
    return out


def b2eer(e: int, r: int) -> Presentation:
    """Braid group B(2e, e, r) with generators tau_2, tau, sigma and tau_2'."""
    if e < 2 or r < 2:
        raise ValueError("b2eer needs e >= 2 and r >= 2")
    out = _bmr_common(r)
    out += [commute(word("s"), conjugate_gen("t2", i, "t"), "bmr") for i in range(1, r - 1)]
    out.append(commute(word("s"), word("t2p", "t2"), "bmr"))
    lhs = word("t2", "s") + _cycle(["t2p", "t2"], e - 1)
    rhs = word("s") + _cycle(["t2p", "t2"], e)
    out.append(rel(lhs, rhs, "bmr"))
    return Presentation.build("b2eer", _gens(["t2", "t", "s", "t2p"]), out, e=e, r=r)


def _cycle(labels: list[str], count: int) -> Word:
    return word(*[labels[k % len(labels)] for k in range(count)])


def beer(e: int, r: int) -> Presentation:
    """Braid group B(e, e, r) with generators tau_2, tau and tau_2'."""
    if e < 2 or r < 3:
        raise ValueError("beer needs e >= 2 and r >= 3")
    out = _bmr_common(r)
    out.append(rel(_cycle(["t2", "t2p"], e), _cycle(["t2p", "t2"], e), "bmr"))
    return Presentation.build("beer", _gens(["t2", "t", "t2p"]), out, e=e, r=r)


def g30() -> Presentation:
    out = two_generator_core(4)
    out += [commute(word("t"), conjugate_gen("s1", i), "tau") for i in (1, 2)]
    out.append(rel(word("t", "s1", "t", "s1", "t"), word("s1", "t", "s1", "t", "s1"), "tau"))
    return Presentation.build("g30", _gens(["s1", "s", "t"]), out)


def g34() -> Presentation:
    """Generators s, z and w; the third family reads w z^i s z^-i (see notes)."""
    out = []
    for i in (2, 3):
        c = conjugate_gen("s", i, "z")
        out.append(rel(word("s") + c, c + word("s"), "two-gen"))
    out.append(rel(power(word("z"), 6), power(word("z", "s"), 5), "two-gen"))
    out += [commute(word("w"), conjugate_gen("s", i, "z"), "omega") for i in (0, 3, 4)]
    for i in (1, 2):
        c = conjugate_gen("s", i, "z")
        out.append(rel(word("w") + c + word("w"), c + word("w") + c, "omega"))
    c1, c2, w = conjugate_gen("s", 1, "z"), conjugate_gen("s", 2, "z"), word("w")
    out.append(rel(w + c2 + w + c1 + w + c2, c1 + w + c2 + w + c1 + w, "omega"))
    return Presentation.build("g34", _gens(["s", "z", "w"]), out)


def sphere(n: int) -> Presentation:
    _need(n, 2, "sphere")
    labels = [f"d{i}" for i in range(1, n)]
    out = braid_relations(labels)
    out.append(rel(word(*labels, *labels[-1:], *reversed(labels[:-1])), (), "sphere"))
    return Presentation.build("sphere", _gens(labels), out, n=n)


def sphere_few(n: int) -> Presentation:
    _need(n, 2, "sphere-few")
    out = two_generator_core(n, "d1", "d")
    out.append(rel(power(word("d"), n) + power(word("d1", "d'"), n - 1), (), "sphere"))
    return Presentation.build("sphere-few", _gens(["d1", "d"]), out, n=n)


# -- braid-permutation and singular ------------------------------------------------


def _xi(i: int) -> str:
    return f"xi{i}"


def _mixed(n: int, virtual: bool = False) -> list[Relation]:
    out = []
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                out.append(commute(word(_s(i)), word(_xi(j)), "mixed"))
    for i in range(1, n - 1):
        out.append(rel(word(_xi(i), _xi(i + 1), _s(i)), word(_s(i + 1), _xi(i), _xi(i + 1)), "mixed"))
        if not virtual:
            out.append(rel(word(_s(i), _s(i + 1), _xi(i)), word(_xi(i + 1), _s(i), _s(i + 1)), "mixed-forbidden"))
    return out


def _symmetric(labels: list[str]) -> list[Relation]:
    out = braid_relations(labels, "symmetric")
    out += [rel(word(a, a), (), "symmetric") for a in labels]
    return out


def bp(n: int) -> Presentation:
    _need(n, 2, "bp")
    s = [_s(i) for i in range(1, n)]
    x = [_xi(i) for i in range(1, n)]
    out = braid_relations(s) + _symmetric(x) + _mixed(n)
    return Presentation.build("bp", _gens(s + x), out, n=n)


def bp_few(n: int) -> Presentation:
    _need(n, 3, "bp-few")
    out = two_generator_core(n)
    out += [commute(word("xi1"), conjugate_gen("s1", i), "mixed") for i in range(2, n - 1)]
    for i in range(2, n - 1):
        c = conjugate_gen("xi1", i)
        out.append(rel(word("xi1") + c, c + word("xi1"), "symmetric"))
    x2, s2 = conjugate_gen("xi1", 1), conjugate_gen("s1", 1)
    out.append(rel(word("xi1") + x2 + word("s1"), s2 + word("xi1") + x2, "mixed"))
    out.append(rel(word("xi1") + x2 + word("xi1"), x2 + word("xi1") + x2, "symmetric"))
    out.append(rel(word("xi1", "xi1"), (), "symmetric"))
    return Presentation.build("bp-few", _gens(["s1", "s", "xi1"]), out, n=n)


def _x(i: int) -> str:
    return f"x{i}"


def _singular_classical(n: int) -> list[Relation]:
    s = [_s(i) for i in range(1, n)]
    out = braid_relations(s)
    for i in range(1, n):
        for j in range(i + 1, n):
            if j - i > 1:
                out.append(commute(word(_x(i)), word(_x(j)), "commute"))
        for j in range(1, n):
            if abs(i - j) != 1:
                out.append(commute(word(_x(i)), word(_s(j)), "commute"))
    for i in range(1, n - 1):
        out.append(rel(word(_s(i), _s(i + 1), _x(i)), word(_x(i + 1), _s(i), _s(i + 1)), "singular"))
        out.append(rel(word(_s(i + 1), _s(i), _x(i + 1)), word(_x(i), _s(i + 1), _s(i)), "singular"))
    out += invertibility(s)
    return out


def sb(n: int) -> Presentation:
    _need(n, 2, "sb")
    s = [_s(i) for i in range(1, n)]
    x = [_x(i) for i in range(1, n)]
    return Presentation.build("sb", _gens(s) + _gens(x, False), _singular_classical(n), n=n)


def _a(t: int, s: int) -> str:
    return f"a({t},{s})"


def _b(t: int, s: int) -> str:
    return f"b({t},{s})"


def sb_bkl(n: int) -> Presentation:
    _need(n, 2, "sb-bkl")
    pairs = [(t, s) for t in range(2, n + 1) for s in range(1, t)]
    out = []

    def far(t, s, r, q):
        return (t - r) * (t - q) * (s - r) * (s - q) > 0

    for k, (t, s) in enumerate(pairs):
        for r, q in pairs[k + 1 :]:
            if far(t, s, r, q):
                out.append(commute(word(_a(t, s)), word(_a(r, q)), "commute"))
                out.append(commute(word(_b(t, s)), word(_b(r, q)), "commute"))
        for r, q in pairs:
            if far(t, s, r, q):
                out.append(commute(word(_a(t, s)), word(_b(r, q)), "commute"))
    for t, s, r in [(t, s, r) for t in range(3, n + 1) for s in range(2, t) for r in range(1, s)]:
        out += chain([word(_a(t, s), _a(s, r)), word(_a(t, r), _a(t, s)), word(_a(s, r), _a(t, r))], "band")
        out.append(rel(word(_a(t, s), _b(s, r)), word(_b(t, r), _a(t, s)), "band"))
        out.append(rel(word(_a(s, r), _b(t, r)), word(_b(t, s), _a(s, r)), "band"))
        out.append(rel(word(_a(t, r), _b(t, s)), word(_b(s, r), _a(t, r)), "band"))
    for t, s in pairs:
        out.append(commute(word(_a(t, s)), word(_b(t, s)), "commute"))
    out += invertibility([_a(t, s) for t, s in pairs])
    gens = _gens([_a(t, s) for t, s in pairs]) + _gens([_b(t, s) for t, s in pairs], False)
    return Presentation.build("sb-bkl", gens, out, n=n)


def sb_few(n: int) -> Presentation:
    _need(n, 3, "sb-few")
    out = two_generator_core(n)
    out += [commute(word("x1"), conjugate_gen("s1", i), "singular") for i in [0] + list(range(2, n - 1))]
    for i in range(2, n // 2 + 1):
        c = conjugate_gen("x1", i)
        out.append(rel(word("x1") + c, c + word("x1"), "singular"))
    out.append(commute(power(word("s"), n), word("x1"), "singular"))
    s2 = conjugate_gen("s1", 1)
    out.append(rel(word("x1") + s2 + word("s1"), s2 + word("s1") + conjugate_gen("x1", 1), "singular"))
    out += invertibility(["s1", "s"])
    return Presentation.build("sb-few", _gens(["s1", "s"]) + [Generator("x1", False)], out, n=n)


def sb_ann(n: int) -> Presentation:
    """R1 - R11 for singular braids in the annulus."""
    _need(n, 2, "sb-ann")
    s = [_s(i) for i in range(1, n)]
    x = [_x(i) for i in range(1, n)]
    out = [Relation(r.lhs, r.rhs, r.kind) for r in _singular_classical(n)]
    out.append(rel(word("t", "s1", "t", "s1"), word("s1", "t", "s1", "t"), "R7"))
    out.append(rel(word("t", "s1", "t", "x1"), word("x1", "t", "s1", "t"), "R8"))
    out += [commute(word("t"), word(_s(i)), "R9") for i in range(2, n)]
    out += [commute(word("t"), word(_x(i)), "R10") for i in range(2, n)]
    out += invertibility(["t"])
    return Presentation.build("sb-ann", _gens(s + ["t"]) + _gens(x, False), out, n=n)


# -- inverse monoids -----------------------------------------------------------------


def _eps(i: int) -> str:
    return f"e{i}"


def _single_eps_relations(n: int, group_square: bool = True) -> list[Relation]:
    out = [commute(word("e"), word(_s(i)), "epsilon") for i in range(2, n)]
    out += chain([word("e", "s1", "e"), word("s1", "e", "s1", "e"), word("e", "s1", "e", "s1")], "epsilon")
    out.append(rel(word("e"), word("e", "e"), "epsilon"))
    if group_square:
        out.append(rel(word("e"), word("e", "s1", "s1"), "epsilon"))
        out.append(rel(word("e"), word("s1", "s1", "e"), "epsilon"))
    return out


def _balanced_eps_relations(n: int, gen: str = "s", square: bool = True, kind: str = "epsilon") -> list[Relation]:
    """The epsilon_i relations with sigma_i replaced by ``gen``_i."""

    def g(i):
        return f"{gen}{i}"

    out = []
    for i in range(1, n):
        for j in range(1, n + 1):
            if j not in (i, i + 1):
                out.append(commute(word(_eps(j)), word(g(i)), kind))
        out.append(rel(word(_eps(i), g(i)), word(g(i), _eps(i + 1)), kind))
        out.append(rel(word(_eps(i + 1), g(i)), word(g(i), _eps(i)), kind))
        if square:
            out += chain([word(_eps(i + 1), g(i), g(i)), word(g(i), g(i), _eps(i + 1)), word(_eps(i + 1))], kind)
        pair = word(_eps(i), _eps(i + 1))
        out += chain([pair + word(g(i)), word(g(i)) + pair, pair], kind)
    return out


def _idempotents(n: int) -> list[Relation]:
    return [rel(word(_eps(i)), word(_eps(i), _eps(i)), "epsilon") for i in range(1, n + 1)]


def ib(n: int) -> Presentation:
    _need(n, 2, "ib")
    s = [_s(i) for i in range(1, n)]
    out = braid_relations(s) + invertibility(s) + _single_eps_relations(n)
    return Presentation.build("ib", _gens(s) + [Generator("e", False)], out, n=n)


def ib_balanced(n: int) -> Presentation:
    _need(n, 2, "ib-balanced")
    s = [_s(i) for i in range(1, n)]
    e = [_eps(i) for i in range(1, n + 1)]
    out = braid_relations(s) + invertibility(s) + _balanced_eps_relations(n) + _idempotents(n)
    return Presentation.build("ib-balanced", _gens(s) + _gens(e, False), out, n=n)


def ib_few(n: int) -> Presentation:
    _need(n, 2, "ib-few")
    out = invertibility(["s1", "s"])
    out += [commute(word("e"), conjugate_gen("s1", i), "epsilon") for i in range(1, n - 1)]
    out += _single_eps_relations(n)[n - 2 :]
    out += two_generator_core(n)
    return Presentation.build("ib-few", _gens(["s1", "s"]) + [Generator("e", False)], out, n=n)


def sym_inverse(n: int) -> Presentation:
    """Symmetric inverse monoid I_n: sigma_i^2 = 1 instead of invertibility."""
    _need(n, 2, "sym-inverse")
    s = [_s(i) for i in range(1, n)]
    out = braid_relations(s) + [rel(word(a, a), (), "symmetric") for a in s]
    out += _single_eps_relations(n, group_square=False)
    return Presentation.build("sym-inverse", _gens(s, False) + [Generator("e", False)], out, n=n)


def ib_sphere(n: int) -> Presentation:
    _need(n, 2, "ib-sphere")
    p = ib_balanced(n)
    s = [_s(i) for i in range(1, n)]
    extra = rel(word(*s, *s[-1:], *reversed(s[:-1])), (), "sphere")
    return Presentation.build("ib-sphere", p.generators, list(p.relations) + [extra], n=n)


def _type_b_tau(n: int) -> list[Relation]:
    out = [commute(word("t"), word(_s(i)), "tau") for i in range(2, n)]
    out.append(rel(word("t", "s1", "t", "s1"), word("s1", "t", "s1", "t"), "tau"))
    return out


def ib_typeb(n: int) -> Presentation:
    _need(n, 2, "ib-typeb")
    s = [_s(i) for i in range(1, n)]
    e = [_eps(i) for i in range(1, n + 1)]
    out = braid_relations(s) + invertibility(s + ["t"]) + _balanced_eps_relations(n) + _idempotents(n)
    out += _type_b_tau(n)
    out += chain([word("e1", "t"), word("t", "e1"), word("e1")], "tau")
    return Presentation.build("ib-typeb", _gens(s + ["t"]) + _gens(e, False), out, n=n)


def i_typeb(n: int) -> Presentation:
    _need(n, 2, "i-typeb")
    s = [_s(i) for i in range(1, n)]
    e = [_eps(i) for i in range(1, n + 1)]
    out = braid_relations(s) + [rel(word(a, a), (), "symmetric") for a in s + ["t"]]
    out += _balanced_eps_relations(n, square=False) + _idempotents(n)
    out += _type_b_tau(n)
    out += chain([word("e1", "t"), word("t", "e1"), word("e1")], "tau")
    return Presentation.build("i-typeb", _gens(s + ["t"], False) + _gens(e, False), out, n=n)


def ibp(n: int, virtual: bool = False) -> Presentation:
    name = "ivb" if virtual else "ibp"
    _need(n, 2, name)
    s = [_s(i) for i in range(1, n)]
    x = [_xi(i) for i in range(1, n)]
    e = [_eps(i) for i in range(1, n + 1)]
    out = braid_relations(s) + invertibility(s) + _symmetric(x) + _mixed(n, virtual)
    out += _balanced_eps_relations(n) + _idempotents(n)
    out += _balanced_eps_relations(n, gen="xi", square=False, kind="epsilon-xi")
    return Presentation.build(name, _gens(s + x) + _gens(e, False), out, n=n)


def ivb(n: int) -> Presentation:
    return ibp(n, virtual=True)


def psb(n: int) -> Presentation:
    _need(n, 2, "psb")
    s = [_s(i) for i in range(1, n)]
    x = [_x(i) for i in range(1, n)]
    e = [_eps(i) for i in range(1, n + 1)]
    out = _singular_classical(n) + _balanced_eps_relations(n) + _idempotents(n)
    out += _balanced_eps_relations(n, gen="x", kind="epsilon-x")
    return Presentation.build("psb", _gens(s) + _gens(x + e, False), out, n=n)


FAMILIES: dict[str, Callable[..., Presentation]] = {
    "artin": artin,
    "two-generator": two_generator,
    "lin": lin,
    "type-b": type_b,
    "type-b-few": type_b_few,
    "type-d": type_d,
    "type-d-few": type_d_few,
    "e8": e8,
    "b2eer": b2eer,
    "beer": beer,
    "g30": g30,
    "g34": g34,
    "sphere": sphere,
    "sphere-few": sphere_few,
    "bp": bp,
    "bp-few": bp_few,
    "sb": sb,
    "sb-bkl": sb_bkl,
    "sb-few": sb_few,
    "sb-ann": sb_ann,
    "ib": ib,
    "ib-balanced": ib_balanced,
    "ib-few": ib_few,
    "sym-inverse": sym_inverse,
    "ib-sphere": ib_sphere,
    "ib-typeb": ib_typeb,
    "i-typeb": i_typeb,
    "ibp": ibp,
    "ivb": ivb,
    "psb": psb,
}


def builtin_presentation(family: str, **params) -> Presentation:
    try:
        fn = FAMILIES[family]
    except KeyError:
        raise ValueError(f"unknown family {family!r}; known: {', '.join(FAMILIES)}") from None
    try:
        return fn(**params)
    except TypeError as exc:
        raise ValueError(f"invalid parameters for {family}: {exc}") from None

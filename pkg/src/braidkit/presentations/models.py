"""Computable models for the builtin families and quotient checks.

``standard_assignment`` gives a homomorphism candidate into a model where
equality is decidable.  ``quotient_assignments`` gives images in finite or
abelian quotients, which is only a necessary condition but applies to
families without a model.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

import numpy as np

from ..bkl import BandWord, band_to_artin
from ..braid import BraidWord, braid_equal, sigma_automorphism
from ..freegroup import FreeAutomorphism, PartialFreeIso
from ..inverse import (
    PartialBraid,
    PartialInjection,
    SignedPartialPermutation,
    generator_phi,
    generator_pb,
    pb_inverse,
    pb_multiply,
    rho_b_generator,
    tau,
    typeb_word,
    IBWord,
    pb_from_word,
)
from ..singular import SBandWord, singular_equal
from .core import Assignment, Model, Presentation

# -- models ------------------------------------------------------------------------


def braid_model(n: int) -> Model:
    return Model(f"Br_{n}", BraidWord(n), lambda a, b: a * b, braid_equal, lambda a: a.inverse())


def free_model(n: int) -> Model:
    return Model(f"Aut(F_{n})", FreeAutomorphism.identity(n), lambda a, b: a.then(b), lambda a, b: a == b)


def singular_model(n: int) -> Model:
    return Model(f"SB_{n}", SBandWord(n), lambda a, b: a * b, singular_equal, lambda a: a.inverse())


def partial_braid_model(n: int) -> Model:
    return Model(f"IB_{n}", PartialBraid.identity(n), pb_multiply, lambda a, b: a == b, pb_inverse)


def partial_free_model(n: int) -> Model:
    return Model(f"EF_{n}", PartialFreeIso.identity(n), lambda a, b: a.then(b), lambda a, b: a == b)


def injection_model(n: int) -> Model:
    ident = PartialInjection.from_dict(n, {i: i for i in range(1, n + 1)})
    return Model(f"I_{n}", ident, lambda a, b: a.then(b), lambda a, b: a == b, _injection_inverse)


def _injection_inverse(a: PartialInjection) -> PartialInjection:
    return PartialInjection.from_dict(a.n, {y: x for x, y in a.pairs})


def signed_model(n: int) -> Model:
    return Model(
        f"I(B_{n})",
        SignedPartialPermutation.identity(n),
        lambda a, b: a.then(b),
        lambda a, b: a == b,
        _signed_inverse,
    )


def _signed_inverse(a: SignedPartialPermutation) -> SignedPartialPermutation:
    return SignedPartialPermutation.from_dict(a.n, {abs(y): x if y > 0 else -x for x, y in a.pairs})


def integer_model() -> Model:
    return Model("Z", 0, lambda a, b: a + b, lambda a, b: a == b, lambda a: -a)


def matrix_model(dim: int, name: str) -> Model:
    return Model(
        name,
        np.eye(dim),
        lambda a, b: a @ b,
        lambda a, b: bool(np.allclose(a, b, atol=1e-9)),
        np.linalg.inv,
    )


# -- monomial matrices over roots of unity -------------------------------------------


@dataclass(frozen=True)
class Monomial:
    """Monomial r x r matrix: row i has entry zeta_N^exps[i] in column perm[i]."""

    N: int
    perm: tuple[int, ...]
    exps: tuple[int, ...]

    @classmethod
    def identity(cls, N: int, r: int) -> Monomial:
        return cls(N, tuple(range(r)), (0,) * r)

    def __matmul__(self, other: Monomial) -> Monomial:
        perm = tuple(other.perm[j] for j in self.perm)
        exps = tuple((self.exps[i] + other.exps[self.perm[i]]) % self.N for i in range(len(self.perm)))
        return Monomial(self.N, perm, exps)

    def inverse(self) -> Monomial:
        r = len(self.perm)
        perm = [0] * r
        exps = [0] * r
        for i, j in enumerate(self.perm):
            perm[j] = i
            exps[j] = (-self.exps[i]) % self.N
        return Monomial(self.N, tuple(perm), tuple(exps))


def monomial_model(N: int, r: int) -> Model:
    return Model(f"G(N={N},r={r})", Monomial.identity(N, r), lambda a, b: a @ b, lambda a, b: a == b, lambda a: a.inverse())


def _mono_swap(N: int, r: int, i: int, z: int = 0) -> Monomial:
    """Swap coordinates i, i+1 (0-based) with entries zeta^z and zeta^-z."""
    perm = list(range(r))
    exps = [0] * r
    perm[i], perm[i + 1] = i + 1, i
    exps[i], exps[i + 1] = z % N, (-z) % N
    return Monomial(N, tuple(perm), tuple(exps))


# -- Coxeter groups in the geometric representation ------------------------------------


def coxeter_reflections(m: np.ndarray) -> list[np.ndarray]:
    """Reflections s_i(v) = v - 2 B(e_i, v) e_i with B(e_i, e_j) = -cos(pi / m_ij)."""
    k = m.shape[0]
    B = -np.cos(np.pi / m)
    out = []
    for i in range(k):
        s = np.eye(k)
        s[i, :] -= 2 * B[i, :]
        out.append(s.T)
    return out


def coxeter_matrix(k: int, edges: dict[tuple[int, int], int]) -> np.ndarray:
    m = np.full((k, k), 2.0)
    np.fill_diagonal(m, 1.0)
    for (i, j), v in edges.items():
        m[i, j] = m[j, i] = v
    return m


# -- assignments -------------------------------------------------------------------------


def _sigma_product(gens: dict, n: int, model: Model, first: int = 1):
    return reduce(model.multiply, [gens[f"s{i}"] for i in range(first, n)], model.identity)


def _braid_like(p: Presentation, model: Model, images: dict, n: int) -> dict:
    """Fill in the derived labels ``s`` (sigma) and ``b`` (beta) when present."""
    out = dict(images)
    labels = set(p.labels)
    if ("s" in labels or "b" in labels) and "s" not in out:
        out["s"] = _sigma_product(images, n, model)
    if "b" in labels and "b" not in out:
        out["b"] = model.multiply(out["s"], images["s1"])
    return out


def standard_assignment(p: Presentation) -> Assignment | None:
    """The model the family is checked against, or None when there is none."""
    params = dict(p.params)
    n = params.get("n")
    name = p.name
    if name in ("artin", "two-generator", "lin"):
        m = braid_model(n)
        gens = {f"s{i}": BraidWord(n, (i,)) for i in range(1, n)}
        imgs = _braid_like(p, m, gens, n)
        return Assignment(m, {g: imgs[g] for g in p.labels})
    if name in ("type-b", "type-b-few"):
        m = braid_model(n + 1)
        gens = {f"s{i}": BraidWord(n + 1, (i + 1,)) for i in range(1, n)}
        gens["t"] = BraidWord(n + 1, (1, 1))
        gens["s"] = reduce(lambda a, b: a * b, [gens[f"s{i}"] for i in range(1, n)], BraidWord(n + 1))
        return Assignment(m, {g: gens[g] for g in p.labels})
    if name in ("bp", "bp-few"):
        m = free_model(n)
        imgs, inv = {}, {}
        for i in range(1, n):
            imgs[f"s{i}"] = sigma_automorphism(n, i)
            inv[f"s{i}"] = sigma_automorphism(n, -i)
            images = [(j,) for j in range(1, n + 1)]
            images[i - 1], images[i] = (i + 1,), (i,)
            imgs[f"xi{i}"] = inv[f"xi{i}"] = FreeAutomorphism(n, tuple(images))
        imgs["s"] = reduce(lambda a, b: a.then(b), [imgs[f"s{i}"] for i in range(1, n)], m.identity)
        inv["s"] = reduce(lambda a, b: a.then(b), [inv[f"s{i}"] for i in range(n - 1, 0, -1)], m.identity)
        return Assignment(m, {g: imgs[g] for g in p.labels}, {g: inv[g] for g in p.labels})
    if name in ("sb", "sb-few", "sb-bkl", "sb-ann"):
        shift = 1 if name == "sb-ann" else 0
        size = n + shift
        m = singular_model(size)
        gens = {}
        for i in range(1, n):
            gens[f"s{i}"] = SBandWord(size, (("a", i + 1 + shift, i + shift, 1),))
            gens[f"x{i}"] = SBandWord(size, (("b", i + 1 + shift, i + shift, 1),))
        if name == "sb-bkl":
            for t in range(2, n + 1):
                for s in range(1, t):
                    gens[f"a({t},{s})"] = SBandWord(n, (("a", t, s, 1),))
                    gens[f"b({t},{s})"] = SBandWord(n, (("b", t, s, 1),))
        gens["t"] = SBandWord(size, (("a", 2, 1, 1), ("a", 2, 1, 1)))
        gens["s"] = reduce(lambda a, b: a * b, [gens[f"s{i}"] for i in range(1, n)], SBandWord(size))
        if "x1" in gens:
            gens["x1"] = gens["x1"]
        return Assignment(m, {g: gens[g] for g in p.labels})
    if name in ("ib", "ib-balanced", "ib-few"):
        m = partial_braid_model(n)
        gens = {f"s{i}": generator_pb(n, ("s", i, 1)) for i in range(1, n)}
        gens.update({f"e{i}": generator_pb(n, ("e", i, 1)) for i in range(1, n + 1)})
        gens["e"] = gens["e1"]
        gens["s"] = reduce(pb_multiply, [gens[f"s{i}"] for i in range(1, n)], m.identity)
        return Assignment(m, {g: gens[g] for g in p.labels})
    if name == "sym-inverse":
        m = injection_model(n)
        gens = {f"s{i}": tau(generator_pb(n, ("s", i, 1))) for i in range(1, n)}
        gens["e"] = tau(generator_pb(n, ("e", 1, 1)))
        return Assignment(m, {g: gens[g] for g in p.labels})
    if name == "ib-typeb":
        m = partial_braid_model(n + 1)
        gens = {}
        for i in range(1, n):
            gens[f"s{i}"] = pb_from_word(typeb_word(IBWord(n, (("s", i, 1),))))
        for i in range(1, n + 1):
            gens[f"e{i}"] = pb_from_word(typeb_word(IBWord(n, (("e", i, 1),))))
        gens["t"] = pb_from_word(typeb_word(IBWord(n, (("t", 0, 1),))))
        return Assignment(m, {g: gens[g] for g in p.labels})
    if name == "i-typeb":
        m = signed_model(n)
        gens = {f"s{i}": rho_b_generator(n, ("s", i, 1)) for i in range(1, n)}
        gens.update({f"e{i}": rho_b_generator(n, ("e", i, 1)) for i in range(1, n + 1)})
        gens["t"] = rho_b_generator(n, ("t", 0, 1))
        return Assignment(m, {g: gens[g] for g in p.labels})
    if name == "ibp":
        m = partial_free_model(n)
        imgs, inv = {}, {}
        for i in range(1, n):
            imgs[f"s{i}"] = generator_phi(n, ("s", i, 1))
            inv[f"s{i}"] = generator_phi(n, ("s", i, -1))
            imgs[f"xi{i}"] = inv[f"xi{i}"] = generator_phi(n, ("xi", i, 1))
        for i in range(1, n + 1):
            imgs[f"e{i}"] = generator_phi(n, ("e", i, 1))
        return Assignment(m, {g: imgs[g] for g in p.labels}, {g: inv[g] for g in p.labels if g in inv})
    return None


def _degree_images(p: Presentation) -> dict[str, int] | None:
    """Images under the length homomorphism to Z, when it is well defined."""
    params = dict(p.params)
    n = params.get("n")
    r = params.get("r")
    table = {
        "two-generator": {"s1": 1, "s": (n or 0) - 1},
        "type-b-few": {"s1": 1, "s": (n or 0) - 1, "t": 1},
        "type-d-few": {"s1": 1, "s": (n or 0) - 1, "r": 1},
        "e8": {"s1": 1, "s": 7, "w": 1},
        "g30": {"s1": 1, "s": 3, "t": 1},
        "g34": {"s": 1, "z": 5, "w": 1},
        "b2eer": {"t2": 1, "t": (r or 0) - 1, "s": 1, "t2p": 1},
        "beer": {"t2": 1, "t": (r or 0) - 1, "t2p": 1},
        "sphere-few": {"d1": 1, "d": (n or 0) - 1},
    }
    if p.name in table:
        return table[p.name]
    if p.name in ("artin", "type-b", "type-d"):
        return {g: 1 for g in p.labels}
    return None


def quotient_assignments(p: Presentation) -> list[Assignment]:
    """Images in quotients: permutations, signed permutations, reflection groups, Z."""
    params = dict(p.params)
    n = params.get("n")
    out: list[Assignment] = []
    degrees = _degree_images(p)
    if degrees is not None and p.name not in ("sphere-few",):
        out.append(Assignment(integer_model(), degrees))
    name = p.name
    if name in ("sphere", "sphere-few", "ivb", "psb", "ib-sphere"):
        m = injection_model(n)
        gens = {}
        for i in range(1, n):
            t = tau(generator_pb(n, ("s", i, 1)))
            for label in (f"s{i}", f"d{i}", f"xi{i}", f"x{i}"):
                gens[label] = t
        for i in range(1, n + 1):
            gens[f"e{i}"] = tau(generator_pb(n, ("e", i, 1)))
        gens["d"] = reduce(m.multiply, [gens[f"d{i}"] for i in range(1, n)], m.identity)
        out.append(Assignment(m, {g: gens[g] for g in p.labels}))
    if name in ("type-d", "type-d-few"):
        m = signed_model(n)
        gens = {f"s{i}": rho_b_generator(n, ("s", i, 1)) for i in range(1, n)}
        rho = {x: x for x in range(1, n + 1)}
        rho[1], rho[2] = -2, -1
        gens["r"] = SignedPartialPermutation.from_dict(n, rho)
        gens["s"] = reduce(m.multiply, [gens[f"s{i}"] for i in range(1, n)], m.identity)
        out.append(Assignment(m, {g: gens[g] for g in p.labels}))
    if name in ("e8", "g30"):
        if name == "e8":
            # chain s1..s7 with omega attached to the third node
            mat = coxeter_matrix(8, {**{(i, i + 1): 3 for i in range(6)}, (2, 7): 3})
            refl = coxeter_reflections(mat)
            chain_len, extra = 7, "w"
        else:
            # H4: tau - s1 has label 5, s1 - s2 - s3 a chain
            mat = coxeter_matrix(4, {(0, 1): 3, (1, 2): 3, (0, 3): 5})
            refl = coxeter_reflections(mat)
            chain_len, extra = 3, "t"
        m = matrix_model(mat.shape[0], f"W({name})")
        gens = {"s1": refl[0], "s": reduce(np.matmul, refl[:chain_len]), extra: refl[chain_len]}
        out.append(Assignment(m, gens))
    if name in ("b2eer", "beer"):
        e, r = params["e"], params["r"]
        d = 2
        N = d * e
        m = monomial_model(N, r)
        # tau_2' carries zeta_{2e} in B(2e,e,r) and zeta_e in B(e,e,r)
        gens = {"t2": _mono_swap(N, r, 0), "t2p": _mono_swap(N, r, 0, 1 if name == "b2eer" else d)}
        chain = [gens["t2"]] + [_mono_swap(N, r, j) for j in range(1, r - 1)]
        gens["t"] = reduce(lambda a, b: a @ b, chain)
        gens["s"] = Monomial(N, tuple(range(r)), (e,) + (0,) * (r - 1))
        out.append(Assignment(m, {g: gens[g] for g in p.labels}))
    return out

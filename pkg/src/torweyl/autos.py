"""Automorphisms: the S-transformation, exp-ad reflections and the shift s -> s + a.

Ring automorphisms of C[s^+-1, t^+-1] act on g-tensors through the coordinate
change and on the centre by pushing the representing differential form
forward and re-canonicalising.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from torweyl.rootdata import RootSystem
from torweyl.torlie import (DS, DT, Basis, Terms, TorElt, TorError, bracket_terms,
                            canonical_form, form_of, generator_terms, member, Subalgebra)

# Laurent polynomial in (s, t): {(a, b): coeff}
Poly = dict


class NotNilpotent(TorError):
    pass


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for (a, b), c in p.items():
        for (a2, b2), c2 in q.items():
            key = (a + a2, b + b2)
            out[key] = out.get(key, 0) + c * c2
    return {k: v for k, v in out.items() if v}


def _ppow(p: Poly, n: int) -> Poly:
    if n < 0:
        if len(p) != 1:
            raise TorError("negative power of a non-monomial")
        ((a, b), c), = p.items()
        return {(a * n, b * n): Fraction(1) / Fraction(c) ** -n}
    out: Poly = {(0, 0): Fraction(1)}
    for _ in range(n):
        out = _pmul(out, p)
    return out


@dataclass(frozen=True)
class CoordinateChange:
    """s -> s_img, t -> t_img, together with the images of d_s and d_t."""

    s_img: tuple
    t_img: tuple
    degree_images: tuple = field(default=())  # ((DS, terms), (DT, terms))

    def monomial(self, a: int, b: int) -> Poly:
        return _pmul(_ppow(dict(self.s_img), a), _ppow(dict(self.t_img), b))

    def differential(self, var: str) -> dict[tuple[str, int, int], Fraction]:
        # d of a Laurent polynomial as {(kind, a, b): coeff}
        img = dict(self.s_img if var == "s" else self.t_img)
        out: dict = {}
        for (a, b), c in img.items():
            if a:
                out[("ds", a - 1, b)] = out.get(("ds", a - 1, b), 0) + c * a
            if b:
                out[("dt", a, b - 1)] = out.get(("dt", a, b - 1), 0) + c * b
        return out

    def push_form(self, kind: str, a: int, b: int) -> Terms:
        coeff = self.monomial(a, b)
        acc: Terms = {}
        for (k2, a2, b2), c2 in self.differential("s" if kind == "ds" else "t").items():
            for (a1, b1), c1 in coeff.items():
                for basis, c3 in canonical_form(k2, a1 + a2, b1 + b2).items():
                    acc[basis] = acc.get(basis, 0) + c1 * c2 * c3
        return {k: v for k, v in acc.items() if v}

    def apply_basis(self, b: Basis) -> Terms:
        tag = b[0]
        if tag == "G":
            return {("G", b[1], a, c): v for (a, c), v in self.monomial(b[2], b[3]).items()}
        if tag in ("C", "cs", "ct"):
            return self.push_form(*form_of(b))
        images = dict(self.degree_images)
        if b not in images:
            raise TorError(f"{b[0]} is not in the domain of this automorphism")
        return dict(images[b])

    def apply(self, x: TorElt) -> TorElt:
        acc: Terms = {}
        for b, c in x.terms.items():
            for k, v in self.apply_basis(b).items():
                acc[k] = acc.get(k, 0) + c * v
        return TorElt(x.rs, acc)


def _frac(p):
    return tuple((k, Fraction(v)) for k, v in p.items())


# S: s -> t, t -> s^-1.  Covariance of [d, x] forces S(d_s) = d_t, S(d_t) = -d_s.
S_MAP = CoordinateChange(
    _frac({(0, 1): 1}), _frac({(-1, 0): 1}),
    ((DS, ((DT, Fraction(1)),)), (DT, ((DS, Fraction(-1)),))))
# S^-1: s -> t^-1, t -> s; S^-1(d_s) = -d_t, S^-1(d_t) = d_s.
S_INV_MAP = CoordinateChange(
    _frac({(0, -1): 1}), _frac({(1, 0): 1}),
    ((DS, ((DT, Fraction(-1)),)), (DT, ((DS, Fraction(1)),))))


def apply_S(x: TorElt, power: int = 1) -> TorElt:
    if power == 1:
        return S_MAP.apply(x)
    if power == -1:
        return S_INV_MAP.apply(x)
    raise TorError(f"power must be +1 or -1, got {power}")


def s_inverse_terms(terms: Terms) -> Terms:
    acc: Terms = {}
    for b, c in terms.items():
        for k, v in _s_inv_basis(b).items():
            acc[k] = acc.get(k, 0) + c * v
    return {k: v for k, v in acc.items() if v}


_S_INV_MEMO: dict = {}


def _s_inv_basis(b: Basis) -> Terms:
    hit = _S_INV_MEMO.get(b)
    if hit is None:
        hit = _S_INV_MEMO[b] = S_INV_MAP.apply_basis(b)
    return hit


def tau_map(a) -> CoordinateChange:
    a = Fraction(a)
    s_img = {(1, 0): Fraction(1)}
    if a:
        s_img[(0, 0)] = a
    return CoordinateChange(_frac(s_img), _frac({(0, 1): 1}),
                            ((DT, ((DT, Fraction(1)),)),))


def tau_shift(a, x: TorElt) -> TorElt:
    """s -> s + a on the positive-part subalgebra."""
    for b in x.terms:
        if not member(x.rs, b, Subalgebra.PLUS):
            raise TorError(f"tau_a is only defined on tor+; {b} is outside it")
    return tau_map(a).apply(x)


# -- exp ad ------------------------------------------------------------------

def exp_ad(n: TorElt, x: TorElt, cap: int = 12) -> TorElt:
    """sum_j ad(n)^j x / j!, which must terminate within ``cap`` steps."""
    rs = x.rs
    total = dict(x.terms)
    term = dict(x.terms)
    j = 0
    while term:
        j += 1
        if j > cap:
            raise NotNilpotent(f"ad({n}) does not annihilate {x} within {cap} steps")
        term = {k: v / j for k, v in bracket_terms(rs, n.terms, term).items()}
        for k, v in term.items():
            total[k] = total.get(k, 0) + v
    return TorElt(rs, total)


def _chevalley_pair(rs: RootSystem, which: str) -> tuple[TorElt, TorElt]:
    if which == "0":
        return (TorElt(rs, generator_terms(rs, 0, 0, "e")),
                TorElt(rs, generator_terms(rs, 0, 0, "f")))
    return (TorElt.g(rs, rs.e_theta()), TorElt.g(rs, rs.f_theta()))


def _reflection(rs: RootSystem, which: str, x: TorElt, cap: int, inverse: bool = False) -> TorElt:
    e, f = _chevalley_pair(rs, which)
    if inverse:
        # (exp ad e exp ad -f exp ad e)^-1 = exp ad -e exp ad f exp ad -e
        e, f = -e, -f
    y = exp_ad(e, x, cap)
    y = exp_ad(-f, y, cap)
    return exp_ad(e, y, cap)


def apply_T0(x: TorElt, cap: int = 12) -> TorElt:
    return _reflection(x.rs, "0", x, cap)


def apply_Ttheta(x: TorElt, cap: int = 12) -> TorElt:
    return _reflection(x.rs, "theta", x, cap)


def apply_T0_inv(x: TorElt, cap: int = 12) -> TorElt:
    return _reflection(x.rs, "0", x, cap, inverse=True)


def apply_Ttheta_inv(x: TorElt, cap: int = 12) -> TorElt:
    return _reflection(x.rs, "theta", x, cap, inverse=True)


# -- homomorphism checks -------------------------------------------------------

@dataclass
class AutoReport:
    name: str
    checked_pairs: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def check_homomorphism(name: str, phi, basis: list[Basis], rs: RootSystem,
                       pairs=None) -> AutoReport:
    rep = AutoReport(name)
    images = {b: phi(TorElt(rs, {b: 1})) for b in basis}
    it = pairs if pairs is not None else ((a, b) for i, a in enumerate(basis) for b in basis[i + 1:])
    for a, b in it:
        lhs = phi(TorElt(rs, bracket_terms(rs, {a: Fraction(1)}, {b: Fraction(1)})))
        ia = images[a] if a in images else phi(TorElt(rs, {a: 1}))
        ib = images[b] if b in images else phi(TorElt(rs, {b: 1}))
        rhs = TorElt(rs, bracket_terms(rs, ia.terms, ib.terms))
        rep.checked_pairs += 1
        if lhs != rhs:
            rep.failures.append((a, b, lhs - rhs))
    return rep


NAMED = {
    "S": lambda x: apply_S(x, 1),
    "Sinv": lambda x: apply_S(x, -1),
    "T0": apply_T0,
    "Ttheta": apply_Ttheta,
}


def named_automorphism(name: str, a=None):
    if name == "tau":
        if a is None:
            raise TorError("tau needs a shift parameter")
        return lambda x: tau_shift(a, x)
    try:
        return NAMED[name]
    except KeyError:
        raise TorError(f"unknown automorphism {name!r}; choose from {sorted(NAMED) + ['tau']}")


def binomial_shift_reference(a, k: int) -> dict[int, Fraction]:
    """Coefficients of (s + a)^k, for cross-checks."""
    a = Fraction(a)
    return {j: comb(k, j) * a ** (k - j) for j in range(k + 1)}

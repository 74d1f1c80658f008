"""The toroidal Lie algebra on an explicit basis.

Basis elements are hashable tuples:

    ('G', sym, k, l)   sym (x) s^k t^l,  sym a g-basis symbol of :mod:`rootdata`
    ('C', k, l)        c(k, l), (k, l) != (0, 0)
    ('cs',) ('ct',)    c_s = s^-1 ds,  c_t = t^-1 dt
    ('ds',) ('dt',)    degree operators

The central part of a bracket is computed by writing (da) b as a Kahler
differential and reducing it modulo exact forms with :func:`canonical_form`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Callable, Iterable

from torweyl.rootdata import RootSystem, Symbol, neg, unit

Basis = tuple
Terms = dict  # Basis -> Fraction

CS: Basis = ("cs",)
CT: Basis = ("ct",)
DS: Basis = ("ds",)
DT: Basis = ("dt",)


class TorError(ValueError):
    pass


def G(sym: Symbol, k: int, l: int) -> Basis:
    return ("G", sym, k, l)


def C(k: int, l: int) -> Basis:
    if k == 0 and l == 0:
        raise TorError("c(0, 0) is not a basis element")
    return ("C", k, l)


# -- differential forms --------------------------------------------------

def canonical_form(kind: str, a: int, b: int) -> dict[Basis, Fraction]:
    """Reduce s^a t^b ds (kind 'ds') or s^a t^b dt (kind 'dt') modulo exact forms."""
    if kind == "dt":
        if a != 0:
            return {("C", a, b + 1): Fraction(1)}
        return {CT: Fraction(1)} if b == -1 else {}
    if kind != "ds":
        raise TorError(f"unknown differential {kind!r}")
    if b == 0:
        return {CS: Fraction(1)} if a == -1 else {}
    if a == -1:
        return {("C", 0, b): Fraction(1)}
    # d(s^(a+1) t^b) = (a+1) s^a t^b ds + b s^(a+1) t^(b-1) dt
    return {("C", a + 1, b): Fraction(-b, a + 1)}


def form_of(x: Basis) -> tuple[str, int, int]:
    """The differential monomial representing a central basis element."""
    tag = x[0]
    if tag == "C":
        k, l = x[1], x[2]
        return ("dt", k, l - 1) if k != 0 else ("ds", -1, l)
    if tag == "cs":
        return ("ds", -1, 0)
    if tag == "ct":
        return ("dt", 0, -1)
    raise TorError(f"{x} is not central")


def is_central(x: Basis) -> bool:
    return x[0] in ("C", "cs", "ct")


def bidegree(x: Basis) -> tuple[int, int] | None:
    """(s-degree, t-degree); None for the degree operators (they are homogeneous of degree 0)."""
    tag = x[0]
    if tag == "G":
        return (x[2], x[3])
    if tag == "C":
        return (x[1], x[2])
    return (0, 0)


# -- bracket ---------------------------------------------------------------

_MEMO: dict = {}


def bracket_basis(rs: RootSystem, a: Basis, b: Basis) -> dict[Basis, Fraction]:
    key = (rs.name, a, b)
    out = _MEMO.get(key)
    if out is None:
        out = _bracket(rs, a, b)
        _MEMO[key] = out
    return out


def _bracket(rs: RootSystem, a: Basis, b: Basis) -> dict[Basis, Fraction]:
    ta, tb = a[0], b[0]
    if ta == "G" and tb == "G":
        _, x, k, l = a
        _, y, m, n = b
        out: dict[Basis, Fraction] = {}
        for sym, c in rs.bracket_symbols(x, y).items():
            out[("G", sym, k + m, l + n)] = Fraction(c)
        p = rs.pairing_symbols(x, y)
        if p:
            K, L = k + m, l + n
            # (d s^k t^l) s^m t^n = k s^(K-1) t^L ds + l s^K t^(L-1) dt
            if k:
                _accum(out, canonical_form("ds", K - 1, L), p * k)
            if l:
                _accum(out, canonical_form("dt", K, L - 1), p * l)
        return {kk: v for kk, v in out.items() if v}
    if ta in ("ds", "dt"):
        if tb in ("G", "C"):
            s, t = bidegree(b)
            c = s if ta == "ds" else t
            return {b: Fraction(c)} if c else {}
        return {}
    if tb in ("ds", "dt"):
        return {k: -v for k, v in _bracket(rs, b, a).items()}
    return {}


def _accum(acc: dict, terms: dict, c) -> None:
    for k, v in terms.items():
        acc[k] = acc.get(k, 0) + v * c


def bracket_terms(rs: RootSystem, x: Terms, y: Terms) -> Terms:
    acc: dict[Basis, Fraction] = {}
    for a, ca in x.items():
        for b, cb in y.items():
            for c, v in bracket_basis(rs, a, b).items():
                acc[c] = acc.get(c, 0) + ca * cb * v
    return {k: v for k, v in acc.items() if v}


def reference_bracket(rs: RootSystem, a: Basis, b: Basis) -> dict[Basis, Fraction]:
    """The three-case closed formula for [x s^k t^l, y s^m t^n]; used as a cross-check."""
    _, x, k, l = a
    _, y, m, n = b
    out = {("G", s, k + m, l + n): Fraction(c) for s, c in rs.bracket_symbols(x, y).items()}
    p = rs.pairing_symbols(x, y)
    if p:
        if k + m != 0:
            coef = Fraction(l * m - k * n, k + m)
            if coef:
                _accum(out, {("C", k + m, l + n): coef}, p)
        elif l + n != 0:
            if k:
                _accum(out, {("C", 0, l + n): Fraction(k)}, p)
        else:
            if k:
                _accum(out, {CS: Fraction(k)}, p)
            if l:
                _accum(out, {CT: Fraction(l)}, p)
    return {kk: v for kk, v in out.items() if v}


# -- element wrapper -------------------------------------------------------

class TorElt:
    """Immutable sparse element of the toroidal algebra with rational coefficients."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: dict | Iterable = ()):
        acc: dict[Basis, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for b, c in items:
            _validate(rs, b)
            acc[b] = acc.get(b, 0) + Fraction(c)
        object.__setattr__(self, "rs", rs)
        object.__setattr__(self, "terms", {k: v for k, v in acc.items() if v})

    def __setattr__(self, *_):
        raise AttributeError("TorElt is immutable")

    @classmethod
    def basis(cls, rs: RootSystem, b: Basis, c=1) -> TorElt:
        return cls(rs, {b: c})

    @classmethod
    def g(cls, rs: RootSystem, gterms: dict, k: int = 0, l: int = 0) -> TorElt:
        return cls(rs, {("G", s, k, l): c for s, c in gterms.items()})

    @classmethod
    def zero(cls, rs: RootSystem) -> TorElt:
        return cls(rs)

    def _check(self, other: TorElt) -> None:
        if self.rs != other.rs:
            raise TorError(f"elements over different root systems ({self.rs.name}, {other.rs.name})")

    def __add__(self, other: TorElt) -> TorElt:
        self._check(other)
        return TorElt(self.rs, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: TorElt) -> TorElt:
        return self + (-other)

    def __neg__(self) -> TorElt:
        return TorElt(self.rs, {k: -v for k, v in self.terms.items()})

    def __mul__(self, c) -> TorElt:
        return TorElt(self.rs, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, TorElt) and self.rs == other.rs and self.terms == other.terms

    def __hash__(self):
        return hash((self.rs.name, frozenset(self.terms.items())))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        return f"TorElt({format_elt(self)!r})"

    def __str__(self) -> str:
        return format_elt(self)


def _validate(rs: RootSystem, b: Basis) -> None:
    tag = b[0]
    if tag == "G":
        if not rs.valid_symbol(b[1]):
            raise TorError(f"{b[1]} is not a g-basis symbol of {rs.name}")
    elif tag == "C":
        if b[1] == 0 and b[2] == 0:
            raise TorError("c(0, 0) is not a basis element")
    elif tag not in ("cs", "ct", "ds", "dt"):
        raise TorError(f"unknown basis element {b!r}")


def tor_bracket(x: TorElt, y: TorElt) -> TorElt:
    x._check(y)
    return TorElt(x.rs, bracket_terms(x.rs, x.terms, y.terms))


# -- generators of the presentation -----------------------------------------

def generator_terms(rs: RootSystem, i: int, k: int, kind: str) -> Terms:
    """Image of e_{i,k}, f_{i,k} or h_{i,k}; i = 0 is the affine node, 1..rank finite."""
    if not 0 <= i <= rs.rank:
        raise TorError(f"generator index {i} outside 0..{rs.rank}")
    if kind not in ("e", "f", "h"):
        raise TorError(f"generator kind must be e, f or h, got {kind!r}")
    if i == 0:
        if kind == "e":
            g, l = rs.f_theta(), 1
        elif kind == "f":
            g, l = rs.e_theta(), -1
        else:
            out = {("G", s, k, 0): Fraction(-c) for s, c in rs.h_theta().items()}
            out.update(canonical_form("dt", k, -1))
            return out
    else:
        g = {"e": rs.e, "f": rs.f, "h": rs.h}[kind](i - 1)
        l = 0
    return {("G", s, k, l): Fraction(c) for s, c in g.items()}


def generator(rs: RootSystem, i: int, k: int, kind: str) -> TorElt:
    return TorElt(rs, generator_terms(rs, i, k, kind))


def e_theta(rs: RootSystem, k: int = 0, l: int = 0) -> TorElt:
    return TorElt.g(rs, rs.e_theta(), k, l)


def f_theta(rs: RootSystem, k: int = 0, l: int = 0) -> TorElt:
    return TorElt.g(rs, rs.f_theta(), k, l)


def h_theta(rs: RootSystem, k: int = 0, l: int = 0) -> TorElt:
    return TorElt.g(rs, rs.h_theta(), k, l)


def central(rs: RootSystem, name: str) -> TorElt:
    return TorElt(rs, {(name,): 1})


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, what: str, detail=None) -> None:
        self.failures.append((what, detail))

    def summary(self) -> str:
        state = "PASS" if self.passed else "FAIL"
        return f"{state} {self.name}: {self.checked} checks, {len(self.failures)} failures"


def verify_presentation(rs: RootSystem, R: int,
                        bracket: Callable[[RootSystem, Terms, Terms], Terms] | None = None,
                        ) -> Report:
    """Evaluate every defining relation of the presentation under the generator map.

    Index parameters run over [-R, R]; the positive-part presentation is the
    restriction to non-negative indices and is covered by the same checks.
    ``bracket`` may be replaced to test the checker itself.
    """
    br = bracket or bracket_terms
    rep = Report(f"presentation {rs.name} R={R}")
    acart = rs.affine_cartan()
    nodes = range(rs.rank + 1)
    ks = range(-R, R + 1)
    cs = {CS: Fraction(1)}
    gen = {}
    for i in nodes:
        for k in ks:
            for kind in "efh":
                gen[kind, i, k] = generator_terms(rs, i, k, kind)

    def check(label: str, lhs: Terms, rhs: Terms) -> None:
        rep.checked += 1
        diff = _lin([(lhs, 1), (rhs, -1)])
        if diff:
            rep.fail(label, diff)

    for i in nodes:
        for j in nodes:
            a = acart[i][j]
            for k in ks:
                for l in ks:
                    hk = gen["h", i, k]
                    check(f"[h_{i},{k}, h_{j},{l}]", br(rs, hk, gen["h", j, l]),
                          {CS: Fraction(a * k)} if k + l == 0 and a * k else {})
                    rhs: Terms = {}
                    if i == j:
                        rhs = _lin([(generator_terms(rs, i, k + l, "h"), 1),
                                    (cs, k if k + l == 0 else 0)])
                    check(f"[e_{i},{k}, f_{j},{l}]", br(rs, gen["e", i, k], gen["f", j, l]), rhs)
                    check(f"[h_{i},{k}, e_{j},{l}]", br(rs, hk, gen["e", j, l]),
                          _lin([(generator_terms(rs, j, k + l, "e"), a)]))
                    check(f"[h_{i},{k}, f_{j},{l}]", br(rs, hk, gen["f", j, l]),
                          _lin([(generator_terms(rs, j, k + l, "f"), -a)]))
                    if i == j:
                        check(f"[e_{i},{k}, e_{i},{l}]", br(rs, gen["e", i, k], gen["e", i, l]), {})
                        check(f"[f_{i},{k}, f_{i},{l}]", br(rs, gen["f", i, k], gen["f", i, l]), {})
            if i != j:
                for k in ks:
                    for kind in "ef":
                        v = gen[kind, j, k]
                        for _ in range(1 - a):
                            v = br(rs, gen[kind, i, 0], v)
                        check(f"(ad {kind}_{i},0)^{1 - a} {kind}_{j},{k}", v, {})
    dsv, dtv = {DS: Fraction(1)}, {DT: Fraction(1)}
    for i in nodes:
        for k in ks:
            for kind, sign in (("e", 1), ("f", -1), ("h", 0)):
                x = gen[kind, i, k]
                check(f"[d_s, {kind}_{i},{k}]", br(rs, dsv, x), _lin([(x, k)]))
                tdeg = sign if i == 0 else 0
                check(f"[d_t, {kind}_{i},{k}]", br(rs, dtv, x), _lin([(x, tdeg)]))
            check(f"[c_s, e_{i},{k}]", br(rs, cs, gen["e", i, k]), {})
            check(f"[c_s, f_{i},{k}]", br(rs, cs, gen["f", i, k]), {})
            check(f"[c_s, h_{i},{k}]", br(rs, cs, gen["h", i, k]), {})
    check("[d_s, d_t]", br(rs, dsv, dtv), {})
    check("[c_s, d_s]", br(rs, cs, dsv), {})
    check("[c_s, d_t]", br(rs, cs, dtv), {})
    return rep


def _lin(parts: list[tuple[Terms, object]]) -> Terms:
    acc: dict[Basis, Fraction] = {}
    for terms, c in parts:
        if not c:
            continue
        for k, v in terms.items():
            acc[k] = acc.get(k, 0) + v * c
    return {k: v for k, v in acc.items() if v}


# -- subalgebras and triangular decomposition ---------------------------------

class Subalgebra(Enum):
    FULL = "tor"
    PRIME = "tor'"
    PLUS = "tor+"
    N = "n"
    NBAR = "nbar"
    H = "h"
    H_PRIME = "h'"
    AFF_S = "aff(s)"
    AFF_T = "aff(t)"


def affine_sign(rs: RootSystem, sym: Symbol, l: int) -> int:
    """Sign of the affine root weight(sym) + l*delta: +1, -1, or 0 for the Cartan part."""
    if l > 0:
        return 1
    if l < 0:
        return -1
    if sym[0] == "h":
        return 0
    return 1 if sym[1] in rs.positive_roots else -1


def member(rs: RootSystem, b: Basis, tag: Subalgebra) -> bool:
    t = b[0]
    if tag is Subalgebra.FULL:
        return True
    if tag is Subalgebra.PRIME:
        return t != "ds"
    if tag is Subalgebra.PLUS:
        if t == "G":
            return b[2] >= 0
        if t == "C":
            return b[1] >= 1
        return t in ("ct", "dt")
    if tag in (Subalgebra.N, Subalgebra.NBAR):
        want = 1 if tag is Subalgebra.N else -1
        if t == "G":
            return affine_sign(rs, b[1], b[3]) == want
        if t == "C":
            return (b[2] >= 1) if want == 1 else (b[2] <= -1)
        return False
    if tag in (Subalgebra.H, Subalgebra.H_PRIME):
        if t == "G":
            return b[1][0] == "h" and b[3] == 0
        if t == "C":
            return b[2] == 0
        return tag is Subalgebra.H or t != "ds"
    if tag is Subalgebra.AFF_S:
        return (t == "G" and b[3] == 0) or t in ("cs", "ds")
    if tag is Subalgebra.AFF_T:
        return (t == "G" and b[2] == 0) or t in ("ct", "dt")
    raise TorError(f"unknown subalgebra {tag}")


def in_subalgebra(x: TorElt, tag: Subalgebra) -> bool:
    return all(member(x.rs, b, tag) for b in x.terms)


def triangular_split(x: TorElt) -> tuple[TorElt, TorElt, TorElt]:
    parts: dict[Subalgebra, dict] = {Subalgebra.NBAR: {}, Subalgebra.H: {}, Subalgebra.N: {}}
    for b, c in x.terms.items():
        for tag in parts:
            if member(x.rs, b, tag):
                parts[tag][b] = c
                break
    return (TorElt(x.rs, parts[Subalgebra.NBAR]), TorElt(x.rs, parts[Subalgebra.H]),
            TorElt(x.rs, parts[Subalgebra.N]))


# -- evaluation map ------------------------------------------------------------

def ev_map(a, x: TorElt) -> TorElt:
    """Evaluate at s = a, landing in g[t, t^-1] + C c_t + C d_t."""
    a = Fraction(a)
    if a == 0:
        raise TorError("evaluation point must be nonzero")
    out: dict[Basis, Fraction] = {}
    for b, c in x.terms.items():
        t = b[0]
        if t == "ds":
            raise TorError("ev_a is defined on the subalgebra without d_s")
        if t == "G":
            key, v = ("G", b[1], 0, b[3]), c * a ** b[2]
        elif t == "C":
            if b[2] != 0:
                continue
            key, v = CT, c * a ** b[1]
        elif t == "cs":
            continue
        else:
            key, v = b, c
        out[key] = out.get(key, 0) + v
    return TorElt(x.rs, out)


# -- text syntax -----------------------------------------------------------------

def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _fmt_sym(rs: RootSystem, sym: Symbol) -> tuple[str, int]:
    """Printable name of a g-symbol and the sign relating it to that name."""
    if sym[0] == "h":
        return f"H({sym[1] + 1})", 1
    root = sym[1]
    for i in range(rs.rank):
        u = unit(rs.rank, i)
        if root == u:
            return f"E({i + 1})", 1
        if root == neg(u):
            return f"F({i + 1})", -1
    return "X(" + ",".join(str(c) for c in root) + ")", 1


def _fmt_power(var: str, p: int) -> str:
    if p == 0:
        return ""
    return var if p == 1 else f"{var}^{p}"


def sort_key(b: Basis):
    order = {"G": 0, "C": 1, "cs": 2, "ct": 3, "ds": 4, "dt": 5}
    if b[0] == "G":
        sym = b[1]
        return (0, b[3], b[2], sym[0], sym[1])
    return (order[b[0]],) + tuple(b[1:])


def format_basis(rs: RootSystem, b: Basis) -> tuple[str, int]:
    t = b[0]
    if t == "G":
        name, sign = _fmt_sym(rs, b[1])
        parts = [name] + [p for p in (_fmt_power("s", b[2]), _fmt_power("t", b[3])) if p]
        return "*".join(parts), sign
    if t == "C":
        return f"C({b[1]},{b[2]})", 1
    return t, 1


def format_elt(x: TorElt) -> str:
    if not x.terms:
        return "0"
    out = []
    for b in sorted(x.terms, key=sort_key):
        name, sign = format_basis(x.rs, b)
        c = x.terms[b] * sign
        neg_ = c < 0
        mag = -c if neg_ else c
        body = name if mag == 1 else f"{_fmt_coef(mag)}*{name}"
        if not out:
            out.append(("-" if neg_ else "") + body)
        else:
            out.append((" - " if neg_ else " + ") + body)
    return "".join(out)


_FACTOR = re.compile(
    r"""\s*(?:
        (?P<g>[EFH])\((?P<gi>\d+)\)
      | X\((?P<root>-?\d+(?:\s*,\s*-?\d+)*)\)
      | C\((?P<ck>-?\d+)\s*,\s*(?P<cl>-?\d+)\)
      | (?P<named>cs|ct|ds|dt)
      | (?P<var>[st])(?:\^(?P<pow>-?\d+))?
      | (?P<num>\d+(?:/\d+)?)
    )\s*$""", re.VERBOSE)


def _split_terms(text: str) -> list[tuple[int, str]]:
    terms, depth, start, sign = [], 0, 0, 1
    s = text.strip()
    if not s:
        raise TorError("empty element")
    i = 0
    if s[0] in "+-":
        sign = -1 if s[0] == "-" else 1
        i = start = 1
    while i < len(s):
        ch = s[i]
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch in "+-" and depth == 0 and s[i - 1] != "^":
            terms.append((sign, s[start:i]))
            sign = -1 if ch == "-" else 1
            start = i + 1
        i += 1
    terms.append((sign, s[start:]))
    return terms


def parse_elt(rs: RootSystem, text: str) -> TorElt:
    """Parse e.g. ``3/2*E(1)*s^2*t^-1 - C(2,0) + cs``."""
    if text.strip() == "0":
        return TorElt(rs)
    acc: list[tuple[Basis, Fraction]] = []
    for sign, term in _split_terms(text):
        coef = Fraction(sign)
        sym, sgn, k, l, other = None, 1, 0, 0, None
        for raw in term.split("*"):
            m = _FACTOR.match(raw)
            if not m or not raw.strip():
                raise TorError(f"cannot parse factor {raw!r} in {text!r}")
            if m.group("num"):
                coef *= Fraction(m.group("num"))
            elif m.group("var"):
                p = int(m.group("pow")) if m.group("pow") else 1
                if m.group("var") == "s":
                    k += p
                else:
                    l += p
            elif m.group("g") or m.group("root"):
                if sym is not None or other is not None:
                    raise TorError(f"two basis factors in term {term!r}")
                if m.group("root"):
                    root = tuple(int(c) for c in m.group("root").split(","))
                    if len(root) != rs.rank or not rs.is_root(root):
                        raise TorError(f"X{root} is not a root of {rs.name}")
                    sym = ("x", root)
                else:
                    i = int(m.group("gi")) - 1
                    if not 0 <= i < rs.rank:
                        raise TorError(f"index {i + 1} outside 1..{rs.rank}")
                    letter = m.group("g")
                    if letter == "H":
                        sym = ("h", i)
                    elif letter == "E":
                        sym = ("x", unit(rs.rank, i))
                    else:
                        sym, sgn = ("x", neg(unit(rs.rank, i))), -1
            else:
                if sym is not None or other is not None:
                    raise TorError(f"two basis factors in term {term!r}")
                if m.group("named"):
                    other = (m.group("named"),)
                else:
                    other = C(int(m.group("ck")), int(m.group("cl")))
        if sym is not None:
            acc.append((("G", sym, k, l), coef * sgn))
        elif other is not None:
            if k or l:
                raise TorError(f"central/degree element cannot carry s,t powers: {term!r}")
            acc.append((other, coef))
        else:
            raise TorError(f"term {term!r} has no basis factor")
    return TorElt(rs, acc)


def enumerate_basis(rs: RootSystem, kmax: int, lmax: int, *, include_degree: bool = True,
                    kmin: int | None = None) -> list[Basis]:
    """All basis elements with |s-degree| <= kmax, |t-degree| <= lmax (s-degree >= kmin if set)."""
    lo = -kmax if kmin is None else kmin
    out: list[Basis] = []
    for k in range(lo, kmax + 1):
        for l in range(-lmax, lmax + 1):
            for sym in rs.g_basis:
                out.append(("G", sym, k, l))
            if (k, l) != (0, 0):
                out.append(("C", k, l))
    out += [CS, CT]
    if include_degree:
        out += [DS, DT]
    return out

"""The level-one vertex module V(0) = L(Lambda_0) (x) D (x) C[tau^+-1].

L(Lambda_0) is realised on Fock space (x) C_eps[Q]; the Fock space is the
polynomial ring in x_{i,n} = h_i (x) s^-n (i a simple root index, n > 0), and
D is the polynomial ring in delta(-n).  A basis state is the tuple

    (heis, lat, dmon, tau)

with ``heis`` a sorted tuple of (i, n), ``lat`` a lattice vector in
simple-root coordinates, ``dmon`` a sorted tuple of n > 0 and ``tau`` an int.

The s-degree of a state is (lat, lat)/2 + sum(heis n) + sum(dmon); d_s acts
by minus the s-degree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from torweyl.rootdata import RootSystem, add, unit
from torweyl.torlie import Basis, Report, TorElt, TorError, bracket_terms

State = tuple  # (heis, lat, dmon, tau)
Poly = dict  # sorted-tuple monomial -> Fraction


class WindowError(TorError):
    pass


@dataclass(frozen=True)
class Window:
    dmax: int
    tau_min: int = 0
    tau_max: int = 0

    def __post_init__(self):
        if self.dmax < 0 or self.tau_min > self.tau_max:
            raise WindowError(f"empty window {self}")

    def contains(self, st: State, rs: RootSystem) -> bool:
        return sdeg(rs, st) <= self.dmax and self.tau_min <= st[3] <= self.tau_max


def sdeg(rs: RootSystem, st: State) -> int:
    heis, lat, dmon, _ = st
    return rs.norm2(lat) + sum(n for _, n in heis) + sum(dmon)


def ldeg(rs: RootSystem, heis, lat) -> int:
    return rs.norm2(lat) + sum(n for _, n in heis)


def vacuum(rs: RootSystem) -> State:
    return ((), (0,) * rs.rank, (), 0)


def _merge(a: tuple, b: tuple) -> tuple:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b))


def _pmul(p: Poly, q: Poly) -> Poly:
    out: Poly = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            m = _merge(m1, m2)
            out[m] = out.get(m, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def exp_coefficients(gen: list[Poly], nmax: int) -> list[Poly]:
    """Coefficients f_0..f_nmax of exp(sum_k g_k u^k) given gen[k] = k * g_k.

    Uses n f_n = sum_{k=1}^n (k g_k) f_{n-k}.
    """
    f: list[Poly] = [{(): Fraction(1)}]
    for n in range(1, nmax + 1):
        acc: Poly = {}
        for k in range(1, n + 1):
            if k >= len(gen) or not gen[k]:
                continue
            for m, c in _pmul(gen[k], f[n - k]).items():
                acc[m] = acc.get(m, 0) + c
        f.append({m: c / n for m, c in acc.items() if c})
    return f


# -- Delta series --------------------------------------------------------------

@dataclass(frozen=True)
class DeltaSeries:
    l: int
    coeffs: tuple  # coeffs[j] = Delta_l^(-j) as a D-polynomial

    def __getitem__(self, j: int) -> Poly:
        return self.coeffs[j]


_DELTA: dict = {}


def delta_coeffs(l: int, j_max: int) -> DeltaSeries:
    """Delta_l(u) = exp(sum_{k>0} l delta(-k)/k u^k) up to u^j_max."""
    hit = _DELTA.get(l)
    if hit is None or len(hit.coeffs) <= j_max:
        gen: list[Poly] = [{}] + [({(k,): Fraction(l)} if l else {}) for k in range(1, j_max + 1)]
        hit = DeltaSeries(l, tuple(exp_coefficients(gen, j_max)))
        _DELTA[l] = hit
    return DeltaSeries(l, hit.coeffs[:j_max + 1])


def _delta_poly(l: int, j: int) -> Poly:
    hit = _DELTA.get(l)
    if hit is None or len(hit.coeffs) <= j:
        hit = delta_coeffs(l, max(j, 8))
        hit = _DELTA[l]
    return hit.coeffs[j]


# -- L(Lambda_0) = Fock (x) C_eps[Q] ---------------------------------------------

class LAction:
    """Modes x (x) s^m acting on Fock (x) C_eps[Q] for one root system."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self._modes: dict = {}
        self._creation: dict = {}
        self._translate: dict = {}

    def mode(self, sym, m: int, heis: tuple, lat: tuple) -> dict:
        key = (sym, m, heis, lat)
        hit = self._modes.get(key)
        if hit is None:
            hit = self._mode(sym, m, heis, lat)
            self._modes[key] = hit
        return hit

    def _mode(self, sym, m, heis, lat) -> dict:
        rs = self.rs
        if m > ldeg(rs, heis, lat):
            return {}
        if sym[0] == "h":
            i = sym[1]
            if m < 0:
                return {(_merge(heis, ((i, -m),)), lat): Fraction(1)}
            if m == 0:
                c = rs.form(unit(rs.rank, i), lat)
                return {(heis, lat): Fraction(c)} if c else {}
            out: dict = {}
            for j in range(rs.rank):
                a = rs.cartan[i][j]
                if not a:
                    continue
                cnt = heis.count((j, m))
                if cnt:
                    lst = list(heis)
                    lst.remove((j, m))
                    key = (tuple(lst), lat)
                    out[key] = out.get(key, 0) + Fraction(m * a * cnt)
            return {k: v for k, v in out.items() if v}
        return self.vertex(sym[1], m, heis, lat)

    def creation(self, beta: tuple, b: int) -> Poly:
        key = (beta, b)
        hit = self._creation.get(key)
        if hit is None:
            gen: list[Poly] = [{}]
            for k in range(1, b + 1):
                gen.append({((i, k),): Fraction(c) for i, c in enumerate(beta) if c})
            for j, p in enumerate(exp_coefficients(gen, b)):
                self._creation[(beta, j)] = p
            hit = self._creation[key]
        return hit

    def translate(self, beta: tuple, heis: tuple) -> dict:
        """heis(x_{j,k} - (beta, alpha_j) u^-k) as {(power of u^-1, monomial): coeff}."""
        key = (beta, heis)
        hit = self._translate.get(key)
        if hit is not None:
            return hit
        rs = self.rs
        shift = [rs.form(beta, unit(rs.rank, j)) for j in range(rs.rank)]
        cur = {(0, ()): Fraction(1)}
        for (j, k) in heis:
            nxt: dict = {}
            for (a, mono), c in cur.items():
                k1 = (a, mono + ((j, k),))
                nxt[k1] = nxt.get(k1, 0) + c
                if shift[j]:
                    k2 = (a + k, mono)
                    nxt[k2] = nxt.get(k2, 0) - c * shift[j]
            cur = nxt
        hit = {k: v for k, v in cur.items() if v}
        self._translate[key] = hit
        return hit

    def vertex(self, beta: tuple, m: int, heis: tuple, lat: tuple) -> dict:
        """Coefficient of u^-m in X(beta, u) applied to heis (x) e^lat."""
        rs = self.rs
        # u-power: (beta,beta)/2 + (beta,lat) + b - a = -m
        base = -m - rs.norm2(beta) - rs.form(beta, lat)
        sign = rs.eps(beta, lat)
        new_lat = add(beta, lat)
        out: dict = {}
        for (a, mono), c in self.translate(beta, heis).items():
            b = base + a
            if b < 0:
                continue
            for cm, cc in self.creation(beta, b).items():
                key = (_merge(mono, cm), new_lat)
                out[key] = out.get(key, 0) + c * cc * sign
        return {k: v for k, v in out.items() if v}


_LACT: dict = {}


def l_action(rs: RootSystem) -> LAction:
    la = _LACT.get(rs.name)
    if la is None:
        la = _LACT[rs.name] = LAction(rs)
    return la


# -- vectors -----------------------------------------------------------------------

class VElt:
    """Sparse vector of V(0) restricted to a truncation window."""

    __slots__ = ("rs", "window", "terms", "truncated")

    def __init__(self, rs: RootSystem, window: Window, terms: dict | None = None,
                 truncated: bool = False, check: bool = True):
        self.rs = rs
        self.window = window
        clean = {}
        for st, c in (terms or {}).items():
            if not c:
                continue
            if check and not window.contains(st, rs):
                raise WindowError(f"state {st} lies outside {window}")
            clean[st] = Fraction(c)
        self.terms = clean
        self.truncated = truncated

    @classmethod
    def vacuum(cls, rs: RootSystem, window: Window) -> VElt:
        return cls(rs, window, {vacuum(rs): 1})

    @classmethod
    def basis(cls, rs: RootSystem, window: Window, st: State) -> VElt:
        return cls(rs, window, {st: 1})

    def __add__(self, other: VElt) -> VElt:
        acc = dict(self.terms)
        for k, v in other.terms.items():
            acc[k] = acc.get(k, 0) + v
        return VElt(self.rs, self.window, acc, self.truncated or other.truncated, check=False)

    def __sub__(self, other: VElt) -> VElt:
        return self + other * -1

    def __mul__(self, c) -> VElt:
        return VElt(self.rs, self.window, {k: v * c for k, v in self.terms.items()},
                    self.truncated, check=False)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, VElt) and self.terms == other.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "VElt(0)"
        return "VElt(" + " + ".join(f"{c}*{format_state(st)}" for st, c in sorted(self.terms.items())) + ")"


def format_state(st: State) -> str:
    heis, lat, dmon, tau = st
    parts = [f"h{i + 1}(-{n})" for i, n in heis] + [f"d(-{n})" for n in dmon]
    parts.append("e^" + str(list(lat)))
    if tau:
        parts.append(f"tau^{tau}")
    return "*".join(parts)


def state_label(rs: RootSystem, st: State) -> dict:
    heis, lat, dmon, tau = st
    return {"heis": [[i + 1, n] for i, n in heis], "lat": list(lat), "dmon": list(dmon),
            "tau": tau, "sdeg": sdeg(rs, st), "weight": list(lat)}


# -- the toroidal action ------------------------------------------------------------

class VAction:
    """Action of basis elements of the toroidal algebra on tau-free states."""

    def __init__(self, rs: RootSystem):
        self.rs = rs
        self.L = l_action(rs)
        self._memo: dict = {}

    def basis_on_state(self, b: Basis, core: tuple) -> tuple[dict, int]:
        """Act by basis element ``b`` on (heis, lat, dmon); returns ({core: coeff}, tau shift).

        ``dt`` is handled by the caller since it depends on tau.
        """
        key = (b, core)
        hit = self._memo.get(key)
        if hit is None:
            hit = self._act(b, core)
            self._memo[key] = hit
        return hit

    def _act(self, b: Basis, core: tuple) -> tuple[dict, int]:
        rs = self.rs
        heis, lat, dmon = core
        tag = b[0]
        if tag == "G":
            _, sym, k, l = b
            out: dict = {}
            jmax = ldeg(rs, heis, lat) - k if l else min(0, ldeg(rs, heis, lat) - k)
            for j in range(0, jmax + 1):
                lres = self.L.mode(sym, k + j, heis, lat)
                if not lres:
                    continue
                dres = _dmul(dmon, _delta_poly(l, j)) if j else {dmon: Fraction(1)}
                for (h2, lat2), c1 in lres.items():
                    for d2, c2 in dres.items():
                        key = (h2, lat2, d2)
                        out[key] = out.get(key, 0) + c1 * c2
            return {k_: v for k_, v in out.items() if v}, l
        if tag == "C":
            _, k, l = b
            if k > 0:
                return {}, l
            if l == 0:
                return {(heis, lat, _merge(dmon, (-k,))): Fraction(1)}, 0
            if k == 0:
                return {core: Fraction(1)}, l
            scale = Fraction(-k, l)
            dres = _dmul(dmon, _delta_poly(l, -k))
            return {(heis, lat, d2): c * scale for d2, c in dres.items() if c}, l
        if tag == "cs":
            return {core: Fraction(1)}, 0
        if tag == "ct":
            return {}, 0
        if tag == "ds":
            d = ldeg(rs, heis, lat) + sum(dmon)
            return ({core: Fraction(-d)} if d else {}), 0
        raise TorError(f"{b} needs the tau-dependent path")

    def act_terms(self, x_terms: dict, v_terms: dict) -> dict:
        out: dict = {}
        for b, cb in x_terms.items():
            for st, cv in v_terms.items():
                if b[0] == "dt":
                    if st[3]:
                        out[st] = out.get(st, 0) + cb * cv * st[3]
                    continue
                res, shift = self.basis_on_state(b, st[:3])
                tau = st[3] + shift
                for core, c in res.items():
                    key = core + (tau,)
                    out[key] = out.get(key, 0) + cb * cv * c
        return {k: v for k, v in out.items() if v}


def _dmul(dmon: tuple, poly: Poly) -> dict:
    return {_merge(dmon, m): c for m, c in poly.items()}


_VACT: dict = {}


def v_action(rs: RootSystem) -> VAction:
    va = _VACT.get(rs.name)
    if va is None:
        va = _VACT[rs.name] = VAction(rs)
    return va


def _restrict(rs: RootSystem, window: Window, terms: dict, truncated: bool) -> VElt:
    kept = {}
    for st, c in terms.items():
        if window.contains(st, rs):
            kept[st] = c
        else:
            truncated = True
    return VElt(rs, window, kept, truncated, check=False)


def act_tor(x: TorElt, v: VElt) -> VElt:
    """Apply a toroidal element; states leaving the window are dropped and flagged."""
    if x.rs != v.rs:
        raise TorError("element and vector over different root systems")
    terms = v_action(v.rs).act_terms(x.terms, v.terms)
    return _restrict(v.rs, v.window, terms, v.truncated)


def vertex_X_k(beta: tuple, l: int, k: int, v: VElt) -> VElt:
    """Coefficient of u^-k in X(beta + l delta, u) applied to v; beta a root or zero."""
    rs = v.rs
    if any(beta):
        if not rs.is_root(beta):
            raise TorError(f"{beta} is neither a root of {rs.name} nor zero")
        x = TorElt(rs, {("G", ("x", beta), k, l): 1})
        return act_tor(x, v)
    # X(l delta, u) = Delta_l(u) tau^l
    out: dict = {}
    if k <= 0:
        poly = _delta_poly(l, -k)
        for st, c in v.terms.items():
            heis, lat, dmon, tau = st
            for d2, c2 in _dmul(dmon, poly).items():
                key = (heis, lat, d2, tau + l)
                out[key] = out.get(key, 0) + c * c2
    return _restrict(rs, v.window, {k_: c for k_, c in out.items() if c}, v.truncated)


# -- basis enumeration ------------------------------------------------------------------

def colored_partitions(n: int, colors: int, max_part: int | None = None) -> Iterator[tuple]:
    """Multisets of (color, part) with parts summing to n, as sorted tuples."""
    if max_part is None:
        max_part = n
    yield from _cp(n, colors, (max_part, colors - 1))


def _cp(n: int, colors: int, top: tuple) -> Iterator[tuple]:
    if n == 0:
        yield ()
        return
    tp, tc = top
    for part in range(min(tp, n), 0, -1):
        cmax = tc if part == tp else colors - 1
        for c in range(cmax, -1, -1):
            for rest in _cp(n - part, colors, (part, c)):
                yield tuple(sorted(rest + ((c, part),)))


def partitions(n: int) -> Iterator[tuple]:
    for p in colored_partitions(n, 1):
        yield tuple(sorted(part for _, part in p))


def lattice_points(rs: RootSystem, max_norm2: int) -> list[tuple]:
    """All beta in Q with (beta, beta)/2 <= max_norm2."""
    if max_norm2 < 0:
        return []
    inv_diag = _inverse_cartan_diag(rs)
    bounds = [math.isqrt(int(2 * max_norm2 * d) + 1) + 1 for d in inv_diag]
    pts = []
    for v in itertools.product(*(range(-b, b + 1) for b in bounds)):
        if rs.norm2(v) <= max_norm2:
            pts.append(tuple(v))
    pts.sort(key=lambda v: (rs.norm2(v), v))
    return pts


def _inverse_cartan_diag(rs: RootSystem) -> list[Fraction]:
    n = rs.rank
    m = [[Fraction(rs.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)]
         for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col])
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col]:
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[i][n + i] for i in range(n)]


def enumerate_basis(rs: RootSystem, window: Window, *, with_d: bool = True,
                    with_tau: bool = True) -> list[State]:
    """All basis states inside the window, ordered by (tau, s-degree, lattice, heis, dmon)."""
    D = window.dmax
    heis_by_deg = {n: list(colored_partitions(n, rs.rank)) for n in range(D + 1)}
    d_by_deg = {n: (list(partitions(n)) if with_d else ([()] if n == 0 else []))
                for n in range(D + 1)}
    taus = range(window.tau_min, window.tau_max + 1) if with_tau else [0]
    out = []
    for tau in taus:
        for lat in lattice_points(rs, D):
            base = rs.norm2(lat)
            for a in range(D - base + 1):
                for b in range(D - base - a + 1):
                    for h in heis_by_deg[a]:
                        for d in d_by_deg[b]:
                            out.append((h, lat, d, tau))
    out.sort(key=lambda st: (st[3], sdeg(rs, st), st[1], st[0], st[2]))
    return out


def factor_counts(rs: RootSystem, window: Window) -> dict:
    """Independent counts of the four tensor factors, per degree where graded."""
    D = window.dmax
    fock = [sum(1 for _ in colored_partitions(n, rs.rank)) for n in range(D + 1)]
    lat = [0] * (D + 1)
    for v in lattice_points(rs, D):
        lat[rs.norm2(v)] += 1
    dpart = [sum(1 for _ in partitions(n)) for n in range(D + 1)]
    ntau = window.tau_max - window.tau_min + 1
    return {"fock": fock, "lattice": lat, "d": dpart, "tau": ntau}


def predicted_count(rs: RootSystem, window: Window) -> int:
    """Number of states predicted by the tensor factorisation F (x) C[Q] (x) D (x) C[tau]."""
    fc = factor_counts(rs, window)
    D = window.dmax
    total = 0
    for a in range(D + 1):
        for b in range(D + 1 - a):
            for c in range(D + 1 - a - b):
                total += fc["fock"][a] * fc["lattice"][b] * fc["d"][c]
    return total * fc["tau"]


# -- module axiom -------------------------------------------------------------------------

def _s_degree(b: Basis) -> int:
    return b[2] if b[0] in ("G", "C") else 0


def _t_degree(b: Basis) -> int:
    return b[3] if b[0] == "G" else (b[2] if b[0] == "C" else 0)


def check_module_axiom(rs: RootSystem, window: Window, basis: list[Basis],
                       pairs=None) -> Report:
    """[x,y] v = x(y v) - y(x v) on every basis state v with enough headroom.

    A state is used for (x, y) only when no intermediate result can leave the
    window: its s-degree plus the lowering s-degrees of x and y stays within
    dmax, and tau, tau + l_x, tau + l_y, tau + l_x + l_y all lie in range.
    Operators other than d_t shift tau rigidly, so for pairs free of d_t the
    identity is computed on the tau-free core once and holds for every
    admissible tau; pairs involving d_t are computed at each tau separately.
    """
    rep = Report("module-axiom")
    va = v_action(rs)
    cores = sorted({st[:3] for st in enumerate_basis(rs, Window(window.dmax), with_tau=False)},
                   key=lambda c: ldeg(rs, c[0], c[1]) + sum(c[2]))
    core_deg = {c: ldeg(rs, c[0], c[1]) + sum(c[2]) for c in cores}
    it = pairs if pairs is not None else ((a, b) for i, a in enumerate(basis) for b in basis[i + 1:])

    tables: dict = {}

    def act(terms: dict, vec: dict) -> dict:
        out: dict = {}
        get = out.get
        for b, cb in terms.items():
            if b[0] == "dt":
                for key, cv in vec.items():
                    if key[1]:
                        out[key] = get(key, 0) + cb * cv * key[1]
                continue
            tab = tables.get(b)
            if tab is None:
                tab = tables[b] = {}
            for (core, tau), cv in vec.items():
                hit = tab.get(core)
                if hit is None:
                    hit = tab[core] = va.basis_on_state(b, core)
                res, shift = hit
                coef = cv if cb == 1 else cb * cv
                t2 = tau + shift
                for c2, c in res.items():
                    k2 = (c2, t2)
                    val = c if coef == 1 else coef * c
                    old = get(k2)
                    out[k2] = val if old is None else old + val
        return {k: v for k, v in out.items() if v}

    taus = range(window.tau_min, window.tau_max + 1)
    for x, y in it:
        head = max(0, -_s_degree(x)) + max(0, -_s_degree(y))
        lx, ly = _t_degree(x), _t_degree(y)
        ok_taus = [p for p in taus
                   if all(window.tau_min <= p + d <= window.tau_max for d in (lx, ly, lx + ly))]
        if not ok_taus:
            continue
        br = bracket_terms(rs, {x: Fraction(1)}, {y: Fraction(1)})
        with_dt = "dt" in (x[0], y[0]) or ("dt",) in br
        tau_list = ok_taus if with_dt else [0]
        xt, yt = {x: 1}, {y: 1}
        for core in cores:
            if core_deg[core] + head > window.dmax:
                break
            for p in tau_list:
                v = {(core, p): 1}
                lhs = act(br, v)
                rhs = act(xt, act(yt, v))
                for k, c in act(yt, act(xt, v)).items():
                    n = rhs.get(k, 0) - c
                    if n:
                        rhs[k] = n
                    else:
                        rhs.pop(k, None)
                rep.checked += len(ok_taus) if not with_dt else 1
                if lhs != rhs:
                    rep.fail(f"[{x}, {y}] on {core} tau^{p}")
    return rep

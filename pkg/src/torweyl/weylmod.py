"""Level-one Weyl modules with highest weight Lambda_0.

Two independent computations of graded dimensions:

* rank side: the vertex module pulled back along S^-1, where the vacuum is the
  cyclic vector.  Spanning monomials are applied to it, tau is specialised to
  a number, and exact ranks are taken (:func:`rank_spanning`).
* presented side: the module generated by v0 over the positive-s part with
  its defining relations, built as a quotient of the induced module
  U(nbar+) v0 by the submodule generated by the relation vectors
  (:class:`PresentedModule`, :func:`presented_weyl_dims`).

A label is (lam, m, n): finite weight lam in simple-root coordinates, depth m
(the module weight is Lambda_0 + lam - m delta) and s-degree n.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

from torweyl.autos import s_inverse_terms
from torweyl.charseries import CharSeries
from torweyl.linalg import Echelon, axpy
from torweyl.rootdata import RootSystem, add, neg, scale, sub
from torweyl.torlie import (Basis, Report, Subalgebra, TorElt, TorError, bracket_terms,
                            canonical_form, generator_terms, member)
from torweyl.vrep import VElt, Window, WindowError, act_tor, sdeg

DEFAULT_BUDGET = 20000
BUDGET_ENV = "TORWEYL_BUDGET"

Label = tuple  # (lam, m, n)
Monomial = tuple  # non-decreasing tuple of basis elements


class BudgetExceeded(TorError):
    pass


def budget_from_env(default: int = DEFAULT_BUDGET) -> int:
    raw = os.environ.get(BUDGET_ENV)
    if not raw:
        return default
    try:
        val = int(raw)
    except ValueError:
        raise TorError(f"{BUDGET_ENV}={raw!r} is not an integer")
    if val <= 0:
        raise TorError(f"{BUDGET_ENV} must be positive")
    return val


# -- labels and ordering -------------------------------------------------------------

def basis_label(rs: RootSystem, b: Basis) -> Label:
    """(finite weight, depth, s-degree) shift of a homogeneous basis element."""
    zero = (0,) * rs.rank
    if b[0] == "G":
        _, sym, k, l = b
        return (rs.weight_of(sym), -l, k)
    if b[0] == "C":
        return (zero, -b[2], b[1])
    return (zero, 0, 0)


def label_add(a: Label, b: Label) -> Label:
    return (add(a[0], b[0]), a[1] + b[1], a[2] + b[2])


def monomial_label(rs: RootSystem, mono: Monomial) -> Label:
    lab = ((0,) * rs.rank, 0, 0)
    for b in mono:
        lab = label_add(lab, basis_label(rs, b))
    return lab


def order_key(rs: RootSystem, b: Basis):
    """Global factor order: t-degree, then s-degree, then g-symbol index."""
    if b[0] == "G":
        return (b[3], b[2], 0, rs.g_basis.index(b[1]))
    if b[0] == "C":
        return (b[2], b[1], 1, 0)
    return (0, 0, 2, b[0])


# -- the pullback module and its specialisations ---------------------------------------

def pullback_act(x: TorElt, v: VElt) -> VElt:
    """x acting on the pullback of the vertex module along S^-1."""
    return act_tor(TorElt(x.rs, s_inverse_terms(x.terms)), v)


def specialize(v: VElt, a) -> dict:
    """Quotient by z - a, where z = c(1,0) acts as tau^-1: tau^p -> a^-p."""
    a = Fraction(a)
    if not a:
        raise TorError("cannot specialise at a = 0; use presented_weyl_dims for that case")
    out: dict = {}
    for st, c in v.terms.items():
        core = st[:3] + (0,)
        out[core] = out.get(core, 0) + c * a ** (-st[3])
    return {k: c for k, c in out.items() if c}


def vector_label(rs: RootSystem, st) -> tuple:
    """(finite weight, depth) of a basis state of the pullback."""
    return (st[1], sdeg(rs, st))


# -- spanning monomials ------------------------------------------------------------------

@dataclass(frozen=True)
class WeylConfig:
    rs: RootSystem
    a: Fraction = Fraction(1)
    max_m: int = 2
    max_n: int = 2
    budget: int = DEFAULT_BUDGET

    def __post_init__(self):
        if self.max_m < 0 or self.max_n < 0 or self.budget <= 0:
            raise TorError("caps must be nonnegative and the budget positive")


def _tplus_nbar_factors(rs: RootSystem, max_m: int, max_k: int, t_only: bool) -> list[Basis]:
    """Basis of nbar (cap the plus part when t_only is False) with depth <= max_m."""
    out: list[Basis] = []
    ks = [0] if t_only else range(0, max_k + 1)
    for k in ks:
        for l in range(1, max_m + 1):
            for sym in rs.g_basis:
                out.append(("G", sym, k, -l))
            if not t_only and k >= 1:
                out.append(("C", k, -l))
        for beta in rs.positive_roots:
            out.append(("G", ("x", neg(beta)), k, 0))
    return out


def _monomials(rs: RootSystem, factors: list[Basis], target: Label, budget: int) -> list[Monomial]:
    """All non-decreasing monomials in ``factors`` with the given label."""
    factors = sorted(factors, key=lambda b: order_key(rs, b))
    labels = [basis_label(rs, b) for b in factors]
    lam, m, n = target
    deep = [i for i, lb in enumerate(labels) if lb[1] > 0]
    flat = [i for i, lb in enumerate(labels) if lb[1] == 0]
    out: list[Monomial] = []

    def flat_part(start: int, need: tuple, kleft: int, acc: list):
        # only negative roots remain: every coordinate of need must be <= 0
        if all(c == 0 for c in need) and kleft == 0:
            out.append(tuple(sorted(acc, key=lambda b: order_key(rs, b))))
            if len(out) > budget:
                raise BudgetExceeded(f"more than {budget} monomials at label {target}; lower the caps")
            return
        if any(c > 0 for c in need):
            return
        for pos in range(start, len(flat)):
            i = flat[pos]
            w, _, k = labels[i]
            if k > kleft:
                continue
            acc.append(factors[i])
            flat_part(pos, sub(need, w), kleft - k, acc)
            acc.pop()

    def deep_part(start: int, wsum: tuple, mleft: int, kleft: int, acc: list):
        if mleft == 0:
            flat_part(0, sub(lam, wsum), kleft, list(acc))
            return
        for pos in range(start, len(deep)):
            i = deep[pos]
            w, d, k = labels[i]
            if d > mleft or k > kleft:
                continue
            acc.append(factors[i])
            deep_part(pos, add(wsum, w), mleft - d, kleft - k, acc)
            acc.pop()

    deep_part(0, (0,) * rs.rank, m, n, [])
    return sorted(set(out), key=lambda mono: [order_key(rs, b) for b in mono])


def spanning_monomials(config: WeylConfig, target: Label) -> list[Monomial]:
    """c(1,-l) factors times PBW monomials in nbar of the t-affine algebra, with label target."""
    rs = config.rs
    lam, m, n = target
    factors = _tplus_nbar_factors(rs, m, 0, t_only=True) + [("C", 1, -l) for l in range(1, m + 1)]
    return _monomials(rs, factors, (tuple(lam), m, n), config.budget)


def apply_monomial(mono: Monomial, v: VElt, memo: dict | None = None) -> VElt:
    """Rightmost factor acts first; prefix results are shared through ``memo``."""
    rs = v.rs
    if memo is None:
        memo = {}
    cur = v
    for j in range(len(mono) - 1, -1, -1):
        key = mono[j:]
        hit = memo.get(key)
        if hit is None:
            hit = pullback_act(TorElt(rs, {mono[j]: 1}), cur)
            memo[key] = hit
        cur = hit
    return cur


# -- dimension tables ---------------------------------------------------------------------

@dataclass
class DimTable:
    rs: RootSystem
    provenance: str
    caps: dict
    entries: dict = field(default_factory=dict)  # (lam, m, n) -> dim
    a: object = None

    def to_json(self) -> dict:
        return {
            "schema": "1",
            "type": self.rs.name,
            "a": None if self.a is None else str(self.a),
            "caps": dict(self.caps),
            "provenance": self.provenance,
            "entries": [{"weight": list(lam), "m": m, "n": n, "dim": d}
                        for (lam, m, n), d in sorted(self.entries.items(),
                                                     key=lambda kv: (kv[0][1], kv[0][2], kv[0][0]))],
        }

    def to_charseries(self) -> CharSeries:
        return CharSeries(self.caps.get("max_m", 0), self.caps.get("max_n", 0), dict(self.entries))


def target_weights(rs: RootSystem, m: int, margin: int = 1) -> list[tuple]:
    """Finite weights examined at depth m: the support ball plus a margin of zeros."""
    from torweyl.vrep import lattice_points
    return lattice_points(rs, m + margin)


def rank_spanning(config: WeylConfig, weights: Iterable | None = None) -> DimTable:
    """Ranks of spanning-monomial images in the specialised pullback, per (lam, m)."""
    rs = config.rs
    a = Fraction(config.a)
    if not a:
        raise TorError("rank_spanning needs a != 0")
    M = config.max_m
    window = Window(M, -M, M)
    vac = VElt.vacuum(rs, window)
    memo: dict = {}
    table = DimTable(rs, "rank-in-V", {"max_m": M, "max_n": 0}, a=a)
    for m in range(M + 1):
        ws = target_weights(rs, m) if weights is None else [tuple(w) for w in weights]
        for lam in ws:
            ech = Echelon()
            for n in range(m + 1):
                for mono in spanning_monomials(config, (lam, m, n)):
                    w = apply_monomial(mono, vac, memo)
                    if w.truncated:
                        raise WindowError(f"window {window} too small for {mono}; "
                                          f"need s-degree headroom {m}")
                    ech.add(specialize(w, a))
            table.entries[(lam, m, 0)] = ech.rank
    table.entries = {k: v for k, v in table.entries.items() if v}
    return table


# -- the presented module ---------------------------------------------------------------

class PresentedModule:
    """U(nbar+) v0 with the highest-weight data at a = 0, and its relation submodule.

    Vectors are dicts Monomial -> Fraction; monomials are non-decreasing in
    :func:`order_key` and stand for the product applied to v0.
    """

    def __init__(self, rs: RootSystem, budget: int = DEFAULT_BUDGET):
        self.rs = rs
        self.budget = budget
        self._act: dict = {}
        self._key: dict = {}
        self.relations: dict[Label, Echelon] = {}
        self.box: set = set()

    # -- classification
    def key(self, b: Basis):
        k = self._key.get(b)
        if k is None:
            k = self._key[b] = order_key(self.rs, b)
        return k

    def is_nbar(self, b: Basis) -> bool:
        return member(self.rs, b, Subalgebra.PLUS) and member(self.rs, b, Subalgebra.NBAR)

    def _check_plus(self, b: Basis) -> None:
        if not member(self.rs, b, Subalgebra.PLUS):
            raise TorError(f"{b} is outside the positive-s subalgebra")

    @staticmethod
    def character(b: Basis) -> Fraction:
        # h_{i,k} v0 = delta_{i0} 0^k v0: only c_t survives, with value 1
        return Fraction(1) if b[0] == "ct" else Fraction(0)

    # -- action
    def act_basis(self, b: Basis, mono: Monomial) -> dict:
        key = (b, mono)
        hit = self._act.get(key)
        if hit is None:
            hit = self._act_basis(b, mono)
            self._act[key] = hit
        return hit

    def _act_basis(self, b: Basis, mono: Monomial) -> dict:
        tag = b[0]
        if tag in ("ct", "cs") or (tag == "C" and b[2] == 0):
            c = self.character(b)
            return {mono: c} if c else {}
        if tag == "C" and b[2] > 0:
            return {}
        if tag == "dt":
            d = sum(y[3] if y[0] == "G" else y[2] for y in mono)
            return {mono: Fraction(d)} if d else {}
        nbar = self.is_nbar(b)
        if not mono:
            if nbar:
                return {(b,): Fraction(1)}
            if tag == "G" and b[1][0] == "h" and b[3] == 0:
                return {}
            return {}  # nhat kills v0
        y = mono[0]
        if nbar and self.key(b) <= self.key(y):
            return {(b,) + mono: Fraction(1)}
        rest = mono[1:]
        out: dict = {}
        # b y rest = y (b rest) + [b, y] rest
        for m2, c in self.act_basis(b, rest).items():
            axpy(out, c, self.act_basis(y, m2))
        for b2, c in bracket_terms(self.rs, {b: Fraction(1)}, {y: Fraction(1)}).items():
            axpy(out, c, self.act_basis(b2, rest))
        return out

    def act(self, terms: dict, vec: dict) -> dict:
        out: dict = {}
        for b, cb in terms.items():
            self._check_plus(b)
            for mono, cv in vec.items():
                axpy(out, cb * cv, self.act_basis(b, mono))
        return out

    def apply(self, x: TorElt, vec: dict | None = None) -> dict:
        return self.act(x.terms, {(): Fraction(1)} if vec is None else vec)

    def label_of(self, vec: dict) -> Label | None:
        labels = {monomial_label(self.rs, m) for m in vec}
        if len(labels) > 1:
            raise TorError(f"vector is not homogeneous: labels {sorted(labels)}")
        return next(iter(labels), None)

    # -- bases of U(nbar+) v0
    def monomials(self, target: Label) -> list[Monomial]:
        lam, m, n = target
        factors = _tplus_nbar_factors(self.rs, m, n, t_only=False)
        return _monomials(self.rs, factors, (tuple(lam), m, n), self.budget)

    # -- relation submodule
    def relation_vectors(self) -> list[dict]:
        rs = self.rs
        f0 = generator_terms(rs, 0, 0, "f")
        vecs = [self.act(f0, self.act(f0, {(): Fraction(1)}))]
        for i in range(1, rs.rank + 1):
            vecs.append(self.act(generator_terms(rs, i, 0, "f"), {(): Fraction(1)}))
        return vecs

    def _in_top_cone(self, lab: Label) -> bool:
        lam, m, n = lab
        return m >= 0 and n >= 0 and _in_qplus(self.rs, sub(scale(m, self.rs.theta), lam))

    def _affine_geq(self, lab: Label, other: Label) -> bool:
        # Lambda_0 + lam - m delta minus the other weight lies in the positive affine cone
        (lam, m, _), (lam0, m0, _) = lab, other
        return m <= m0 and _in_qplus(self.rs, add(sub(lam, lam0), scale(m0 - m, self.rs.theta)))

    def build_relations(self, targets: Iterable[Label]) -> None:
        """Relation submodule on a finite box of labels containing every target.

        The submodule is U(nbar) U(b) R.  A raising chain starts at a relation
        vector and only climbs, then a lowering chain descends to the target,
        and s-degrees never decrease.  So each element at a target label is
        reached through labels that lie below the top, have s-degree at most
        the target's, and sit above either a relation vector or the target.
        """
        targets = [(tuple(l), m, n) for l, m, n in targets]
        if not targets:
            return
        max_m = max(t[1] for t in targets)
        max_n = max(t[2] for t in targets)
        rel_vecs = self.relation_vectors()
        rel_labels = [self.label_of(r) for r in rel_vecs]

        def in_box(lab: Label) -> bool:
            if not self._in_top_cone(lab) or lab[2] > max_n:
                return False
            if any(lab[2] <= t[2] and self._affine_geq(lab, t) for t in targets):
                return True
            return any(self._affine_geq(lab, r) for r in rel_labels)

        ops = self._operators(max(max_m, max(r[1] for r in rel_labels)), max_n)
        self.box = set()
        self.relations = {}
        queue: list[tuple[Label, dict]] = []

        def offer(vec: dict) -> None:
            if not vec:
                return
            lab = self.label_of(vec)
            if not in_box(lab):
                return
            self.box.add(lab)
            ech = self.relations.setdefault(lab, Echelon())
            if ech.add(vec):
                if len(ech) > self.budget:
                    raise BudgetExceeded(f"relation space at {lab} exceeds budget {self.budget}")
                queue.append((lab, vec))

        for r in rel_vecs:
            offer(r)
        while queue:
            lab, vec = queue.pop()
            for b, blab in ops:
                if in_box(label_add(lab, blab)):
                    offer(self.act({b: Fraction(1)}, vec))

    def _operators(self, max_m: int, max_n: int) -> list[tuple[Basis, Label]]:
        """Basis elements of the positive-s algebra that can move a vector within the caps.

        Elements acting by scalars (c_t, d_t, c(k,0)) or by zero (c(k,l), l > 0)
        cannot produce new relation vectors and are skipped.
        """
        ops = []
        for k in range(0, max_n + 1):
            for l in range(-max_m, max_m + 1):
                for sym in self.rs.g_basis:
                    ops.append(("G", sym, k, l))
                if k >= 1 and l < 0:
                    ops.append(("C", k, l))
        return [(b, basis_label(self.rs, b)) for b in ops]

    def in_relations(self, vec: dict) -> bool:
        vec = {m: c for m, c in vec.items() if c}
        if not vec:
            return True
        lab = self.label_of(vec)
        if lab not in self.box and not self._covered(lab):
            raise TorError(f"label {lab} lies outside the computed relation box")
        ech = self.relations.get(lab)
        return ech.contains(vec) if ech is not None else False

    def _covered(self, lab: Label) -> bool:
        return getattr(self, "_targets", None) is not None and lab in self._targets

    def quotient_dim(self, target: Label) -> int:
        monos = self.monomials(target)
        ech = self.relations.get((tuple(target[0]), target[1], target[2]))
        return len(monos) - (len(ech) if ech is not None else 0)

    def prepare(self, targets: Iterable[Label]) -> None:
        targets = [(tuple(l), m, n) for l, m, n in targets]
        self._targets = set(targets)
        self.build_relations(targets)


def _in_qplus(rs: RootSystem, v: tuple) -> bool:
    return all(c >= 0 for c in v)


def presented_targets(rs: RootSystem, max_m: int, max_n: int, margin: int = 1) -> list[Label]:
    return [(lam, m, n) for m in range(max_m + 1) for n in range(max_n + 1)
            for lam in target_weights(rs, m, margin)]


def presented_weyl_dims(config: WeylConfig, module: PresentedModule | None = None) -> DimTable:
    rs = config.rs
    pm = module or PresentedModule(rs, config.budget)
    targets = presented_targets(rs, config.max_m, config.max_n)
    pm.prepare(targets)
    table = DimTable(rs, "presented-quotient", {"max_m": config.max_m, "max_n": config.max_n}, a=Fraction(0))
    for t in targets:
        d = pm.quotient_dim(t)
        if d:
            table.entries[t] = d
    return table


def formula_table(rs: RootSystem, factor: str, max_m: int, max_n: int = 0) -> DimTable:
    from torweyl.charseries import char_L0, product_expand
    series = product_expand(char_L0(rs, max_m), factor, max_m, max_n)
    return DimTable(rs, "formula", {"max_m": max_m, "max_n": max_n}, dict(series.coeffs))


# -- relation checks -----------------------------------------------------------------------

def verify_hw_relations(rs: RootSystem, krange: int = 3, presented_k: int = 3,
                        module: PresentedModule | None = None) -> Report:
    """Highest-weight relations of the cyclic vector, in the pullback and in the presented module."""
    rep = Report("hw-relations")
    M = 2 * krange + 2
    window = Window(M, -M - krange, M + krange)
    vac = VElt.vacuum(rs, window)

    def zero_in_v(label: str, terms: dict) -> None:
        rep.checked += 1
        w = pullback_act(TorElt(rs, terms), vac)
        if w.truncated or w.terms:
            rep.fail(label, w)

    for k in range(-krange, krange + 1):
        for i in range(0, rs.rank + 1):
            zero_in_v(f"e_({i},{k}) v", generator_terms(rs, i, k, "e"))
        for i in range(1, rs.rank + 1):
            zero_in_v(f"h_({i},{k}) v", generator_terms(rs, i, k, "h"))
        rep.checked += 1
        w = pullback_act(TorElt(rs, generator_terms(rs, 0, k, "h")), vac)
        want = VElt(rs, window, {vac_state(rs, -k): 1})
        if w != want:
            rep.fail(f"h_(0,{k}) v = z^{k} v", w)
    zero_in_v("c_s v", {("cs",): Fraction(1)})
    zero_in_v("d_s v", {("ds",): Fraction(1)})
    zero_in_v("d_t v", {("dt",): Fraction(1)})
    for i in range(1, rs.rank + 1):
        zero_in_v(f"f_{i} v", generator_terms(rs, i, 0, "f"))
    rep.checked += 1
    f0 = TorElt(rs, generator_terms(rs, 0, 0, "f"))
    if pullback_act(f0, pullback_act(f0, vac)).terms:
        rep.fail("f_0^2 v")
    rep.checked += 1
    if pullback_act(TorElt(rs, {("ct",): 1}), vac) != vac:
        rep.fail("c_t v = v")

    if presented_k:
        pm = module or PresentedModule(rs)
        vecs = {}
        for k in range(1, presented_k + 1):
            for i in range(0, rs.rank + 1):
                vecs[f"f_({i},{k}) v0"] = pm.apply(TorElt(rs, generator_terms(rs, i, k, "f")))
        targets = {pm.label_of(v) for v in vecs.values() if v}
        if targets - pm.box:
            pm.prepare(sorted(targets | getattr(pm, "_targets", set())))
        for label, v in vecs.items():
            rep.checked += 1
            if not pm.in_relations(v):
                rep.fail(label, v)
    return rep


def vac_state(rs: RootSystem, tau: int):
    return ((), (0,) * rs.rank, (), tau)


def rewriting_vectors(pm: PresentedModule, ks: Iterable[int], lmax: int) -> dict[str, dict]:
    """Differences that must vanish in the quotient: rewriting of e_theta (x) s^k t^-l and s^k t^-l ds."""
    rs = pm.rs
    one = {(): Fraction(1)}
    et = rs.e_theta()
    out: dict[str, dict] = {}

    def eth(k: int, l: int) -> dict:
        return {("G", s, k, -l): Fraction(c) for s, c in et.items()}

    def ds_form(k: int, l: int) -> dict:
        return canonical_form("ds", k, -l)

    for k in ks:
        for l in range(1, lmax + 1):
            vec = pm.act(eth(k, l), one)
            for m in range(1, l - k + 1):
                axpy(vec, -1, pm.act({("C", k, -l + m): Fraction(1)}, pm.act(eth(0, m), one)))
            out[f"e_theta rewrite k={k} l={l}"] = vec
            vec = pm.act(ds_form(k, l), one)
            for m in range(1, l - k + 1):
                axpy(vec, -1, pm.act({("C", k, -l + m): Fraction(1)}, pm.act(ds_form(0, m), one)))
            out[f"ds rewrite k={k} l={l}"] = vec
            # rewriting of s^k t^-l ds through products of degree-one forms
            if k >= 1:
                vec = pm.act(ds_form(k, l), one)
                for m in range(1, l - k + 1):
                    coeff = Fraction(k, l - m)
                    axpy(vec, -coeff, pm.act(ds_form(k - 1, l - m), pm.act(ds_form(0, m), one)))
                out[f"degree-one rewrite k={k} l={l}"] = vec
    return out


def check_rewriting(pm: PresentedModule, ks=(1, 2), lmax: int = 3) -> Report:
    rep = Report("rewriting-identities")
    vecs = rewriting_vectors(pm, ks, lmax)
    labels = {pm.label_of(v) for v in vecs.values() if v}
    if labels - pm.box:
        pm.prepare(sorted(labels | getattr(pm, "_targets", set())))
    for name, v in vecs.items():
        rep.checked += 1
        if not pm.in_relations(v):
            rep.fail(name, v)
    return rep


def check_degree_one_span(pm: PresentedModule, lmax: int = 2) -> Report:
    """(x (x) s t^-l) v0 lies in the span of the spanning-monomial images modulo relations."""
    rs = pm.rs
    rep = Report("s-degree-one-containment")
    cfg = WeylConfig(rs, Fraction(0), lmax, 1, pm.budget)
    cases: list[tuple[str, Basis]] = []
    for l in range(0, lmax + 1):
        for sym in rs.g_basis:
            b = ("G", sym, 1, -l)
            if pm.is_nbar(b):
                cases.append((f"{sym} s t^-{l}", b))
    vecs = {name: pm.act({b: Fraction(1)}, {(): Fraction(1)}) for name, b in cases}
    labels = {basis_label(rs, b) for _, b in cases}
    pm.prepare(sorted(labels | getattr(pm, "_targets", set())))
    for name, b in cases:
        lab = basis_label(rs, b)
        ech = Echelon()
        rel = pm.relations.get(lab)
        if rel is not None:
            for row in rel.rows.values():
                ech.add(row)
        for mono in spanning_monomials(cfg, lab):
            ech.add(_product(pm, mono))
        rep.checked += 1
        if not ech.contains(vecs[name]):
            rep.fail(name, vecs[name])
    return rep


def _product(pm: PresentedModule, mono: Monomial) -> dict:
    vec = {(): Fraction(1)}
    for b in reversed(mono):
        vec = pm.act({b: Fraction(1)}, vec)
    return vec

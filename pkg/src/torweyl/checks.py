"""The verification battery shared by ``verify-all`` and the acceptance tests.

Each check takes explicit caps and returns a :class:`~torweyl.torlie.Report`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from torweyl import autos, charseries, vrep, weylmod
from torweyl.rootdata import RootSystem, build_root_system
from torweyl.torlie import (Report, Subalgebra, TorElt, bracket_terms, e_theta,
                            enumerate_basis, generator_terms, member, verify_presentation)


def _a(n: int) -> RootSystem:
    return build_root_system("A", n)


def _accumulate(name: str, parts: list[Report]) -> Report:
    rep = Report(name)
    for p in parts:
        rep.checked += p.checked
        rep.failures += [(f"{p.name}: {w}", d) for w, d in p.failures]
    return rep


# -- bracket ------------------------------------------------------------------------

def bracket_soundness(rs: RootSystem, pair_cap: int = 2, triple_cap: int = 1,
                      random_triples: int = 500, random_cap: int = 3, seed: int = 0) -> Report:
    rep = Report(f"bracket soundness {rs.name}")
    one = Fraction(1)

    def br(x: dict, y: dict) -> dict:
        return bracket_terms(rs, x, y)

    pairs = enumerate_basis(rs, pair_cap, pair_cap)
    for i, a in enumerate(pairs):
        for b in pairs[i:]:
            rep.checked += 1
            ab, ba = br({a: one}, {b: one}), br({b: one}, {a: one})
            if ab != {k: -v for k, v in ba.items()}:
                rep.fail(f"antisymmetry {a} {b}")

    def jacobi(a, b, c) -> None:
        rep.checked += 1
        total: dict = {}
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            for k, v in br({x: one}, br({y: one}, {z: one})).items():
                total[k] = total.get(k, 0) + v
        if any(total.values()):
            rep.fail(f"Jacobi {a} {b} {c}")

    trip = enumerate_basis(rs, triple_cap, triple_cap)
    for i, a in enumerate(trip):
        for j in range(i, len(trip)):
            for c in trip[j:]:
                jacobi(a, trip[j], c)
    rng = random.Random(seed)
    pool = enumerate_basis(rs, random_cap, random_cap)
    for _ in range(random_triples):
        jacobi(*rng.sample(pool, 3))
    return rep


def presentation(ranks=(1, 2), R: int = 3) -> Report:
    return _accumulate(f"presentation R={R}", [verify_presentation(_a(n), R) for n in ranks])


# -- automorphisms ----------------------------------------------------------------------

def automorphisms(cap: int = 2, induction_ranks=(1, 2)) -> Report:
    rs = _a(1)
    basis = enumerate_basis(rs, cap, cap)
    parts = []
    for name in ("S", "Sinv", "T0", "Ttheta"):
        r = autos.check_homomorphism(name, autos.named_automorphism(name), basis, rs)
        parts.append(Report(name, r.checked_pairs, [(str(f[:2]), f[2]) for f in r.failures]))
    plus = [b for b in basis if member(rs, b, Subalgebra.PLUS)]
    r = autos.check_homomorphism("tau_1", autos.named_automorphism("tau", 1), plus, rs)
    parts.append(Report("tau_1", r.checked_pairs, [(str(f[:2]), f[2]) for f in r.failures]))
    for n in induction_ranks:
        parts.append(induction_identity(_a(n)))
    return _accumulate("automorphisms", parts)


def induction_identity(rs: RootSystem, ks=range(-2, 3), ls=range(-4, 3)) -> Report:
    rep = Report(f"T0 Ttheta transport {rs.name}")
    for k in ks:
        for l in ls:
            rep.checked += 1
            lhs = e_theta(rs, k, l)
            rhs = autos.apply_T0(autos.apply_Ttheta(e_theta(rs, k, l + 2)))
            if lhs != rhs:
                rep.fail(f"k={k} l={l}", rhs - lhs)
    return rep


# -- vertex module ------------------------------------------------------------------------

def module_axiom(dmax: int = 6, tau: int = 2, cap: int = 2) -> Report:
    rs = _a(1)
    return vrep.check_module_axiom(rs, vrep.Window(dmax, -tau, tau), enumerate_basis(rs, cap, cap))


def vacuum_relations(rs: RootSystem, lcap: int = 3, kcap: int = 3) -> Report:
    """Highest-weight relations on the vacuum of V(0) and of its pullback."""
    rep = Report(f"vacuum relations {rs.name}")
    window = vrep.Window(6, -lcap - 2, lcap + 2)
    vac = vrep.VElt.vacuum(rs, window)

    def act(terms: dict, v=vac):
        return vrep.act_tor(TorElt(rs, terms), v)

    def expect(label: str, got: vrep.VElt, want: vrep.VElt | None = None) -> None:
        rep.checked += 1
        if got.truncated or (got.terms if want is None else got != want):
            rep.fail(label, got)

    g = lambda terms, k=0, l=0: {("G", s, k, l): Fraction(c) for s, c in terms.items()}
    expect("(f_theta s) v", act(g(rs.f_theta(), 1)))
    expect("c_s v = v", act({("cs",): 1}), vac)
    expect("d_s v", act({("ds",): 1}))
    expect("d_t v", act({("dt",): 1}))
    expect("c_t v", act({("ct",): 1}))
    et = act(g(rs.e_theta(), -1))
    expect("(e_theta s^-1)^2 v", act(g(rs.e_theta(), -1), et))
    for i in range(rs.rank):
        expect(f"e_{i + 1} v", act(g(rs.e(i))))
        expect(f"h_{i + 1} v", act(g(rs.h(i))))
        expect(f"f_{i + 1} v", act(g(rs.f(i))))
    # the t-affine algebra kills the vacuum
    for l in range(-lcap, lcap + 1):
        for sym in rs.g_basis:
            expect(f"{sym} t^{l} v", act({("G", sym, 0, l): 1}))
    expect("e_0 v", act(generator_terms(rs, 0, 0, "e")))
    expect("f_0 v", act(generator_terms(rs, 0, 0, "f")))
    # c(0,l) is the tau shift
    for l in range(-lcap, lcap + 1):
        if l:
            want = vrep.VElt(rs, window, {((), (0,) * rs.rank, (), l): 1})
            expect(f"c(0,{l}) v = tau^{l} v", act({("C", 0, l): 1}), want)
    hw = weylmod.verify_hw_relations(rs, krange=kcap, presented_k=kcap)
    return _accumulate(f"highest-weight relations {rs.name}", [rep, hw])


def basis_factorization(ranks=(1, 2), dmax: int = 6, taus=((0, 0), (-1, 1), (-2, 2))) -> Report:
    rep = Report("basis factorization")
    for n in ranks:
        rs = _a(n)
        for d in range(dmax + 1):
            for lo, hi in taus:
                w = vrep.Window(d, lo, hi)
                states = vrep.enumerate_basis(rs, w)
                rep.checked += 1
                if len(states) != len(set(states)) or len(states) != vrep.predicted_count(rs, w):
                    rep.fail(f"{rs.name} {w}", (len(states), vrep.predicted_count(rs, w)))
    return rep


# -- Weyl modules ---------------------------------------------------------------------------

@dataclass
class WeylRun:
    """Dimension tables shared by the character checks, computed once."""

    rank_a1: weylmod.DimTable
    rank_a2: weylmod.DimTable
    presented: weylmod.DimTable
    module: weylmod.PresentedModule


def weyl_tables(rs: RootSystem, max_m_rank: int = 3, max_m: int = 2, max_n: int = 2,
                budget: int | None = None) -> WeylRun:
    budget = budget or weylmod.budget_from_env()
    pm = weylmod.PresentedModule(rs, budget)
    return WeylRun(
        weylmod.rank_spanning(weylmod.WeylConfig(rs, Fraction(1), max_m_rank, 0, budget)),
        weylmod.rank_spanning(weylmod.WeylConfig(rs, Fraction(2), max_m_rank, 0, budget)),
        weylmod.presented_weyl_dims(weylmod.WeylConfig(rs, Fraction(0), max_m, max_n, budget), pm),
        pm,
    )


def _compare(rep: Report, got: dict, want: dict) -> None:
    for key in sorted(set(got) | set(want), key=lambda k: (k[1], k[2], k[0])):
        rep.checked += 1
        if got.get(key, 0) != want.get(key, 0):
            rep.fail(f"label {key}", (got.get(key, 0), want.get(key, 0)))


def character_p(run: WeylRun) -> Report:
    rs = run.rank_a1.rs
    rep = Report(f"p-character {rs.name}")
    m = run.rank_a1.caps["max_m"]
    formula = weylmod.formula_table(rs, charseries.P_FACTOR, m)
    _compare(rep, run.rank_a1.entries, formula.entries)
    _compare(rep, run.rank_a2.entries, run.rank_a1.entries)
    return rep


def character_pq(run: WeylRun) -> Report:
    rs = run.presented.rs
    rep = Report(f"(p,q)-character {rs.name}")
    caps = run.presented.caps
    formula = weylmod.formula_table(rs, charseries.PQ_FACTOR, caps["max_m"], caps["max_n"])
    _compare(rep, run.presented.entries, formula.entries)
    return rep


def rewriting_identities(run: WeylRun, ks=(1, 2), lmax: int = 3) -> Report:
    return _accumulate("rewriting identities", [
        weylmod.check_rewriting(run.module, ks, lmax),
        weylmod.check_degree_one_span(run.module, 2),
    ])


def inequality_chain(run: WeylRun) -> Report:
    """presented >= rank label by label, and presented <= the product formula."""
    rs = run.presented.rs
    rep = Report(f"inequality chain {rs.name}")
    caps = run.presented.caps
    m = caps["max_m"]
    if caps["max_n"] < m:
        rep.fail("s-degree cap below depth cap; the q-collapse would be incomplete")
        return rep
    pres_p = run.presented.to_charseries().collapse_q()
    rank = charseries.CharSeries(m, 0, {k: v for k, v in run.rank_a1.entries.items() if k[1] <= m})
    rep.checked += 1
    if not charseries.char_leq(rank, pres_p):
        rep.fail("rank <= presented", (rank.coeffs, pres_p.coeffs))
    rep.checked += 1
    bound = weylmod.formula_table(rs, charseries.PQ_FACTOR, m, caps["max_n"]).to_charseries()
    if not charseries.char_leq(run.presented.to_charseries(), bound):
        rep.fail("presented <= product bound")
    return rep


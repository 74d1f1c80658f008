from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from torweyl import weylmod as wm
from torweyl.charseries import PQ_FACTOR, P_FACTOR
from torweyl.rootdata import build_root_system
from torweyl.torlie import Subalgebra, TorElt, TorError, enumerate_basis, generator_terms, member, tor_bracket
from torweyl.vrep import VElt, Window

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
Z1 = (0,)
W = Window(6, -4, 4)


@pytest.fixture(scope="module")
def pm():
    mod = wm.PresentedModule(A1)
    mod.prepare(wm.presented_targets(A1, 2, 2))
    return mod


# -- the pullback -----------------------------------------------------------------------------

def test_pullback_examples():
    v = VElt.vacuum(A1, W)
    assert wm.pullback_act(TorElt(A1, {("ct",): 1}), v) == v
    for k in range(-3, 4):
        assert not wm.pullback_act(TorElt(A1, generator_terms(A1, 1, k, "h")), v)
        z_k = wm.pullback_act(TorElt(A1, generator_terms(A1, 0, k, "h")), v)
        assert z_k == VElt(A1, W, {wm.vac_state(A1, -k): 1})


def test_specialize():
    tv = VElt(A1, W, {wm.vac_state(A1, 1): 1})
    assert wm.specialize(tv, 1) == {wm.vac_state(A1, 0): 1}
    assert wm.specialize(tv, 2) == {wm.vac_state(A1, 0): Fraction(1, 2)}
    assert wm.specialize(VElt.vacuum(A1, W), Fraction(7, 3)) == {wm.vac_state(A1, 0): 1}
    # consistency with the z-action: h_(0,1) v specialises to a v
    z = wm.pullback_act(TorElt(A1, generator_terms(A1, 0, 1, "h")), VElt.vacuum(A1, W))
    assert wm.specialize(z, 2) == {wm.vac_state(A1, 0): 2}
    with pytest.raises(TorError):
        wm.specialize(tv, 0)


def test_spanning_monomials():
    cfg = wm.WeylConfig(A1)
    assert wm.spanning_monomials(cfg, (Z1, 1, 1)) == [(("C", 1, -1),)]
    assert wm.spanning_monomials(cfg, (Z1, 0, 0)) == [()]
    got = {frozenset(m) for m in wm.spanning_monomials(cfg, (Z1, 1, 0))}
    assert got == {frozenset({("G", ("h", 0), 0, -1)}),
                   frozenset({("G", ("x", (1,)), 0, -1), ("G", ("x", (-1,)), 0, 0)})}
    for mono in wm.spanning_monomials(wm.WeylConfig(A2, max_m=2), ((0, 0), 2, 1)):
        assert wm.monomial_label(A2, mono) == ((0, 0), 2, 1)


def test_rank_examples():
    t = wm.rank_spanning(wm.WeylConfig(A1, Fraction(1), 1, 0))
    assert t.entries[(Z1, 1, 0)] == 2
    assert t.entries[(Z1, 0, 0)] == 1
    assert t.entries[((1,), 1, 0)] == 1
    with pytest.raises(TorError):
        wm.rank_spanning(wm.WeylConfig(A1, Fraction(0), 1, 0))


@pytest.mark.parametrize("a", [Fraction(1), Fraction(-3), Fraction(2, 5)])
def test_rank_matches_p_formula_a2(a):
    got = wm.rank_spanning(wm.WeylConfig(A2, a, 2, 0))
    assert got.entries == wm.formula_table(A2, P_FACTOR, 2).entries


def test_presented_examples():
    t = wm.presented_weyl_dims(wm.WeylConfig(A1, Fraction(0), 1, 1))
    assert t.entries[(Z1, 1, 0)] == 1
    assert t.entries[(Z1, 1, 1)] == 1
    assert t.entries[(Z1, 0, 0)] == 1
    assert t.provenance == "presented-quotient"


def test_presented_matches_pq_formula_a2_small():
    got = wm.presented_weyl_dims(wm.WeylConfig(A2, Fraction(0), 1, 1))
    assert got.entries == wm.formula_table(A2, PQ_FACTOR, 1, 1).entries


def test_presented_without_f0_squared_is_too_big(monkeypatch):
    # negative control: dropping the f_0^2 relation leaves extra vectors behind
    real = wm.PresentedModule.relation_vectors
    monkeypatch.setattr(wm.PresentedModule, "relation_vectors", lambda self: real(self)[1:])
    got = wm.presented_weyl_dims(wm.WeylConfig(A1, Fraction(0), 2, 2))
    want = wm.formula_table(A1, PQ_FACTOR, 2, 2).entries
    assert any(got.entries.get(k, 0) > want.get(k, 0) for k in got.entries)


def test_relations_and_vacuum(pm):
    for r in pm.relation_vectors():
        assert pm.in_relations(r)
    assert not pm.in_relations({(): Fraction(1)})
    with pytest.raises(TorError):
        pm.in_relations({((("G", ("x", (-1,)), 0, -9)),): Fraction(1)})


def test_hw_relations_report():
    rep = wm.verify_hw_relations(A1, krange=2, presented_k=2)
    assert rep.passed and rep.checked > 20


def test_budget():
    with pytest.raises(wm.BudgetExceeded):
        wm.presented_weyl_dims(wm.WeylConfig(A1, Fraction(0), 2, 2, budget=2))
    with pytest.raises(TorError):
        wm.WeylConfig(A1, budget=0)


def test_budget_env(monkeypatch):
    monkeypatch.setenv(wm.BUDGET_ENV, "17")
    assert wm.budget_from_env() == 17
    monkeypatch.setenv(wm.BUDGET_ENV, "x")
    with pytest.raises(TorError):
        wm.budget_from_env()
    monkeypatch.delenv(wm.BUDGET_ENV)
    assert wm.budget_from_env() == wm.DEFAULT_BUDGET


def test_dim_table_json():
    t = wm.formula_table(A1, PQ_FACTOR, 1, 1)
    js = t.to_json()
    assert js["schema"] == "1" and js["provenance"] == "formula"
    assert js["entries"][0] == {"weight": [0], "m": 0, "n": 0, "dim": 1}
    assert t.to_charseries().coeffs == t.entries


def test_rewriting_identities(pm):
    assert wm.check_rewriting(pm, (1,), 2).passed
    assert wm.check_degree_one_span(pm, 1).passed


def test_outside_positive_part_rejected(pm):
    with pytest.raises(TorError):
        pm.apply(TorElt(A1, {("G", ("h", 0), -1, 0): 1}))


plus = [b for b in enumerate_basis(A1, 1, 1) if member(A1, b, Subalgebra.PLUS)]
small_monos = [(), (("G", ("x", (-1,)), 0, 0),), (("G", ("h", 0), 0, -1),), (("C", 1, -1),),
               (("G", ("x", (-1,)), 0, 0), ("G", ("h", 0), 1, -1))]


@settings(max_examples=80, deadline=None)
@given(x=st.sampled_from(plus), y=st.sampled_from(plus), mono=st.sampled_from(small_monos))
def test_induced_module_is_a_module(x, y, mono):
    # straightening realises a representation before taking the quotient
    mod = wm.PresentedModule(A1)
    vec = {tuple(sorted(mono, key=mod.key)): Fraction(1)}
    X, Y = TorElt(A1, {x: 1}), TorElt(A1, {y: 1})
    lhs = mod.act(tor_bracket(X, Y).terms, vec)
    xy = mod.act(X.terms, mod.act(Y.terms, vec))
    yx = mod.act(Y.terms, mod.act(X.terms, vec))
    diff = dict(xy)
    for k, c in yx.items():
        diff[k] = diff.get(k, 0) - c
    diff = {k: c for k, c in diff.items() if c}
    assert diff == {k: c for k, c in lhs.items() if c}

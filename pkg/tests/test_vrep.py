import itertools
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from torweyl import vrep
from torweyl.rootdata import build_root_system
from torweyl.torlie import TorElt, TorError, enumerate_basis, parse_elt, tor_bracket

A1 = build_root_system("A", 1)
A2 = build_root_system("A", 2)
W = vrep.Window(4, -2, 2)


def vac(rs=A1, w=W):
    return vrep.VElt.vacuum(rs, w)


def act(text, v, rs=A1):
    return vrep.act_tor(parse_elt(rs, text), v)


def state(lat=(0,), heis=(), dmon=(), tau=0):
    return (tuple(heis), tuple(lat), tuple(dmon), tau)


# -- enumeration ----------------------------------------------------------------------------

def test_enumeration_small_windows():
    assert vrep.enumerate_basis(A1, vrep.Window(0)) == [vrep.vacuum(A1)]
    assert len(vrep.enumerate_basis(A1, vrep.Window(1))) == 5
    deg2 = [s for s in vrep.enumerate_basis(A1, vrep.Window(2))
            if vrep.sdeg(A1, s) == 2 and s[1] == (0,)]
    assert len(deg2) == 5


@pytest.mark.parametrize("n,colors", [(n, c) for n in range(8) for c in (1, 2, 3)])
def test_colored_partitions_against_sympy(n, colors):
    # coefficient of u^n in prod_k (1 + u^k + u^2k + ...)^colors, truncated geometric series
    u = sympy.symbols("u")
    prod = sympy.Poly(1, u)
    for k in range(1, n + 1):
        geo = sympy.Poly(sum(u ** (k * j) for j in range(n // k + 1)), u)
        prod = prod * geo ** colors
    want = prod.as_expr().coeff(u, n) if n else 1
    got = list(vrep.colored_partitions(n, colors))
    assert len(got) == len(set(got)) == want


def test_partitions_against_sympy():
    for n in range(12):
        assert sum(1 for _ in vrep.partitions(n)) == sympy.functions.combinatorial.numbers.partition(n)


@pytest.mark.parametrize("rs,bound", [(A1, 5), (A2, 4), (build_root_system("D", 4), 2)])
def test_lattice_points_against_box_search(rs, bound):
    box = 6
    want = sorted(v for v in itertools.product(range(-box, box + 1), repeat=rs.rank)
                  if rs.norm2(v) <= bound)
    assert sorted(vrep.lattice_points(rs, bound)) == want


@pytest.mark.parametrize("rs", [A1, A2])
@pytest.mark.parametrize("dmax", range(5))
def test_count_factorises(rs, dmax):
    w = vrep.Window(dmax, -1, 0)
    assert len(vrep.enumerate_basis(rs, w)) == vrep.predicted_count(rs, w)


# -- Delta series -------------------------------------------------------------------------------

@pytest.mark.parametrize("l", [-3, -1, 0, 1, 2, 5])
def test_delta_series_against_sympy(l):
    jmax = 5
    u = sympy.symbols("u")
    d = sympy.symbols("d1:%d" % (jmax + 1))
    expo = sympy.exp(sum(sympy.Rational(l, k) * d[k - 1] * u ** k for k in range(1, jmax + 1)))
    ser = sympy.expand(sympy.series(expo, u, 0, jmax + 1).removeO())
    got = vrep.delta_coeffs(l, jmax)
    for j in range(jmax + 1):
        poly = sum(sympy.Rational(c.numerator, c.denominator) * sympy.prod([d[n - 1] for n in mono])
                   for mono, c in got[j].items())
        assert sympy.expand(poly - ser.coeff(u, j)) == 0


def test_delta_examples():
    assert vrep.delta_coeffs(1, 1)[1] == {(1,): 1}
    assert vrep.delta_coeffs(2, 2)[2] == {(2,): 1, (1, 1): 2}
    assert all(vrep.delta_coeffs(l, 0)[0] == {(): 1} for l in range(-3, 4))


# -- vertex operators and the action ----------------------------------------------------------

def test_vertex_examples():
    v = vac()
    assert vrep.vertex_X_k((1,), 0, -1, v) == vrep.VElt(A1, W, {state((1,)): 1})
    for k in range(0, 4):
        assert not vrep.vertex_X_k((1,), 0, k, v)
        assert not vrep.vertex_X_k((-1,), 0, k, v)
    assert vrep.vertex_X_k((0,), 1, 0, v) == vrep.VElt(A1, W, {state(tau=1): 1})
    with pytest.raises(TorError):
        vrep.vertex_X_k((2,), 0, 0, v)


def test_act_examples():
    v = vac()
    assert not act("F(1)*t", v)                     # e_0
    assert act("cs", v) == v
    assert act("C(-2,0)", v) == vrep.VElt(A1, W, {state(dmon=(2,)): 1})
    assert not act("C(2,0)", v)
    assert not act("ct", v)
    assert act("C(0,1)", v) == vrep.VElt(A1, W, {state(tau=1): 1})
    assert act("C(0,-2)", v) == vrep.VElt(A1, W, {state(tau=-2): 1})


def test_d_operators_grade():
    for st_ in vrep.enumerate_basis(A1, vrep.Window(3, -1, 1)):
        v = vrep.VElt(A1, W, {st_: 1})
        assert act("ds", v) == v * -vrep.sdeg(A1, st_)


def test_heisenberg_creates_fock_states():
    v = act("H(1)*s^-2", vac())
    assert v == vrep.VElt(A1, W, {state(heis=((0, 2),)): 1})
    # annihilation back: [h s^2, h s^-2] = 4 c_s
    assert act("H(1)*s^2", v) == vac() * 4


def test_window_enforced():
    with pytest.raises(vrep.WindowError):
        vrep.VElt(A1, vrep.Window(1), {state(heis=((0, 2),)): 1})
    with pytest.raises(vrep.WindowError):
        vrep.Window(2, 1, 0)
    out = act("H(1)*s^-3", vrep.VElt.vacuum(A1, vrep.Window(2)))
    assert out.truncated and not out.terms


def test_mismatched_root_system():
    with pytest.raises(TorError):
        vrep.act_tor(parse_elt(A2, "E(1)"), vac())


def test_module_axiom_small_a2():
    rep = vrep.check_module_axiom(A2, vrep.Window(2, -1, 1), enumerate_basis(A2, 1, 1))
    assert rep.passed and rep.checked > 0


def test_module_axiom_detects_a_wrong_action(monkeypatch):
    # flipping the sign of X(alpha) breaks [e, f] = h on the module
    real = vrep.LAction.vertex

    def wrong(self, beta, m, heis, lat):
        out = real(self, beta, m, heis, lat)
        return {k: -v for k, v in out.items()} if beta == (1,) and m == 0 else out

    monkeypatch.setattr(vrep.LAction, "vertex", wrong)
    monkeypatch.setattr(vrep, "_LACT", {})
    monkeypatch.setattr(vrep, "_VACT", {})
    rep = vrep.check_module_axiom(A1, vrep.Window(2), enumerate_basis(A1, 1, 0))
    assert not rep.passed


ops = enumerate_basis(A1, 2, 1)


@settings(max_examples=60, deadline=None)
@given(x=st.sampled_from(ops), y=st.sampled_from(ops), s=st.sampled_from(vrep.enumerate_basis(A1, vrep.Window(2))))
def test_bracket_acts_as_commutator(x, y, s):
    w = vrep.Window(8, -3, 3)
    v = vrep.VElt(A1, w, {s: 1})
    X, Y = TorElt(A1, {x: 1}), TorElt(A1, {y: 1})
    lhs = vrep.act_tor(tor_bracket(X, Y), v)
    rhs = vrep.act_tor(X, vrep.act_tor(Y, v)) - vrep.act_tor(Y, vrep.act_tor(X, v))
    assert not (lhs.truncated or rhs.truncated)
    assert lhs == rhs


@settings(max_examples=40, deadline=None)
@given(l=st.integers(-4, 4), j=st.integers(0, 6))
def test_delta_polys_have_degree_j(l, j):
    for mono, c in vrep.delta_coeffs(l, j)[j].items():
        assert sum(mono) == j and isinstance(c, Fraction)

import itertools

import pytest
from hypothesis import given, settings, strategies as st

from torweyl.rootdata import (GElt, RootDataError, build_root_system, chevalley_bracket,
                              pairing, parse_type)

SYSTEMS = [("A", 1), ("A", 2), ("A", 3), ("A", 4), ("D", 4), ("D", 5)]


def test_a1_data():
    rs = build_root_system("A", 1)
    assert rs.positive_roots == ((1,),)
    assert rs.theta == (1,)
    assert rs.form((1,), (1,)) == 2


def test_a2_data():
    rs = build_root_system("A", 2)
    assert len(rs.positive_roots) == 3
    assert rs.theta == (1, 1)
    assert rs.form((1, 0), (0, 1)) == -1


@pytest.mark.parametrize("label,rank,count", [
    ("A", 1, 1), ("A", 3, 6), ("A", 4, 10), ("D", 4, 12), ("D", 5, 20),
    ("E", 6, 36), ("E", 7, 63), ("E", 8, 120)])
def test_positive_root_counts(label, rank, count):
    # closed forms n(n+1)/2, n(n-1) and the E-series counts
    assert len(build_root_system(label, rank).positive_roots) == count


@pytest.mark.parametrize("label,rank", [("B", 2), ("C", 3), ("G", 2), ("A", 0), ("D", 3), ("E", 9)])
def test_unsupported_rejected(label, rank):
    with pytest.raises(RootDataError):
        build_root_system(label, rank)


def test_parse_type():
    assert parse_type("A2") is build_root_system("A", 2)
    assert parse_type("d_4").name == "D4"
    with pytest.raises(RootDataError):
        parse_type("A")


def test_eps_examples():
    rs = build_root_system("A", 1)
    assert rs.eps((1,), (1,)) == -1
    assert rs.eps((0,), (1,)) == 1
    assert rs.eps((1,), (-1,)) == -1


def test_dimension_mismatch():
    rs = build_root_system("A", 2)
    with pytest.raises(RootDataError):
        rs.eps((1,), (1, 0))


def lattice(rank):
    return st.tuples(*[st.integers(-3, 3)] * rank)


@pytest.mark.parametrize("label,rank", SYSTEMS)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_eps_cocycle_properties(label, rank, data):
    rs = build_root_system(label, rank)
    a, b, c = (data.draw(lattice(rank)) for _ in range(3))
    ab = tuple(x + y for x, y in zip(a, b))
    bc = tuple(x + y for x, y in zip(b, c))
    assert rs.eps(ab, c) == rs.eps(a, c) * rs.eps(b, c)
    assert rs.eps(a, bc) == rs.eps(a, b) * rs.eps(a, c)
    assert rs.eps(a, b) * rs.eps(b, a) == (-1) ** (rs.form(a, b) % 2)
    assert rs.eps(a, a) == (-1) ** (rs.norm2(a) % 2)


def _basis(rs):
    return [GElt(rs, {s: 1}) for s in rs.g_basis]


@pytest.mark.parametrize("label,rank", [("A", 1), ("A", 2), ("A", 3), ("D", 4)])
def test_g_is_a_lie_algebra_with_invariant_form(label, rank):
    rs = build_root_system(label, rank)
    basis = _basis(rs)
    assert len(basis) == rank + 2 * len(rs.positive_roots)
    for x, y in itertools.product(basis, repeat=2):
        assert chevalley_bracket(x, y) == chevalley_bracket(y, x) * -1
        assert pairing(x, y) == pairing(y, x)
    for x, y, z in itertools.combinations(basis, 3):
        jac = (chevalley_bracket(x, chevalley_bracket(y, z)) + chevalley_bracket(y, chevalley_bracket(z, x))
               + chevalley_bracket(z, chevalley_bracket(x, y)))
        assert not jac
        assert pairing(chevalley_bracket(x, y), z) == pairing(x, chevalley_bracket(y, z))


def test_chevalley_generators():
    rs = build_root_system("A", 1)
    e, f, h = (GElt(rs, rs.e(0)), GElt(rs, rs.f(0)), GElt(rs, rs.h(0)))
    assert chevalley_bracket(e, f) == h
    assert not chevalley_bracket(e, e)
    assert chevalley_bracket(h, e) == e * 2
    assert pairing(e, f) == 1 and pairing(h, h) == 2


def test_a2_simple_root_bracket_nonzero():
    rs = build_root_system("A", 2)
    x1, x2 = GElt(rs, {("x", (1, 0)): 1}), GElt(rs, {("x", (0, 1)): 1})
    assert chevalley_bracket(x1, x2) == GElt(rs, {("x", (1, 1)): rs.eps((1, 0), (0, 1))})


def test_cartan_from_simple_roots():
    for label, rank in SYSTEMS:
        rs = build_root_system(label, rank)
        for i, j in itertools.product(range(rank), repeat=2):
            assert rs.form(rs.simple_roots[i], rs.simple_roots[j]) == rs.cartan[i][j]
        assert all(rs.norm2(b) == 1 for b in rs.roots)


def test_mixed_systems_rejected():
    a1, a2 = build_root_system("A", 1), build_root_system("A", 2)
    with pytest.raises(RootDataError):
        chevalley_bracket(GElt(a1, a1.e(0)), GElt(a2, a2.e(0)))
    with pytest.raises(RootDataError):
        GElt(a1, {("x", (2,)): 1})

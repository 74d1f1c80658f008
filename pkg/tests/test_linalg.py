from fractions import Fraction

import sympy
from hypothesis import given, settings, strategies as st

from torweyl.linalg import Echelon, axpy, rank

entry = st.fractions(min_value=-3, max_value=3, max_denominator=3)
rows = st.lists(st.lists(entry, min_size=4, max_size=4), min_size=0, max_size=6)


def as_vec(row):
    return {j: c for j, c in enumerate(row) if c}


@settings(max_examples=200, deadline=None)
@given(rows)
def test_rank_matches_sympy(mat):
    want = sympy.Matrix([[sympy.Rational(c.numerator, c.denominator) for c in r] for r in mat]).rank() \
        if mat else 0
    assert rank(as_vec(r) for r in mat) == want


@settings(max_examples=100, deadline=None)
@given(rows, st.lists(entry, min_size=6, max_size=6))
def test_combinations_are_contained(mat, coeffs):
    ech = Echelon()
    for r in mat:
        ech.add(as_vec(r))
    combo: dict = {}
    for r, c in zip(mat, coeffs):
        axpy(combo, c, as_vec(r))
    assert ech.contains(combo)
    assert not ech.reduce(combo)


def test_independence_and_unit_vectors():
    ech = Echelon()
    assert ech.add({"a": 2, "b": 1})
    assert not ech.add({"a": 4, "b": 2})
    assert ech.add({"b": Fraction(1, 3)})
    assert ech.contains({"a": 1}) and not ech.contains({"c": 1})
    assert len(ech) == ech.rank == 2


def test_axpy_drops_zeros():
    y = {"a": Fraction(1), "b": Fraction(2)}
    axpy(y, -1, {"a": 1})
    assert y == {"b": 2}

"""Simply-laced root data, Chevalley structure constants and the sign cocycle.

The finite Lie algebra g is realised on the basis

    ('h', i)      i = 0 .. rank-1     Cartan elements h_i = h_{alpha_i}
    ('x', beta)   beta a root         root vectors

with

    [h_i, x_b]  = (alpha_i, b) x_b
    [x_a, x_b]  = eps(a, b) x_{a+b}     if a + b is a root
    [x_a, x_-a] = -h_a
    (h_i, h_j)  = (alpha_i, alpha_j),   (x_a, x_-a) = -1.

The Chevalley generators are e_i = x_{alpha_i}, f_i = -x_{-alpha_i}, so that
h_i = [e_i, f_i] and (e_i, f_i) = 1; likewise e_theta = x_theta and
f_theta = -x_{-theta}.  These are exactly the constants produced by lattice
vertex operators, so the toroidal action in :mod:`torweyl.vrep` closes on them.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable

Vec = tuple[int, ...]
Symbol = tuple  # ('h', i) or ('x', root)


class RootDataError(ValueError):
    pass


_RANGES = {"A": "rank >= 1", "D": "rank >= 4", "E": "rank 6, 7 or 8"}


def _edges(label: str, rank: int) -> list[tuple[int, int]]:
    # Bourbaki numbering, 0-based
    if label == "A":
        return [(i, i + 1) for i in range(rank - 1)]
    if label == "D":
        return [(i, i + 1) for i in range(rank - 2)] + [(rank - 3, rank - 1)]
    # E_n: 1-3-4-5-...-n chain, 2 attached to 4
    chain = [0, 2] + list(range(3, rank))
    return [(chain[i], chain[i + 1]) for i in range(len(chain) - 1)] + [(1, 3)]


@dataclass(frozen=True)
class RootSystem:
    label: str
    rank: int
    cartan: tuple[tuple[int, ...], ...]
    positive_roots: tuple[Vec, ...]
    _root_set: frozenset = field(repr=False, compare=False)

    @property
    def name(self) -> str:
        return f"{self.label}{self.rank}"

    @property
    def simple_roots(self) -> tuple[Vec, ...]:
        return tuple(unit(self.rank, i) for i in range(self.rank))

    @cached_property
    def roots(self) -> tuple[Vec, ...]:
        return self.positive_roots + tuple(neg(b) for b in self.positive_roots)

    @cached_property
    def theta(self) -> Vec:
        return max(self.positive_roots, key=sum)

    @cached_property
    def eps_table(self) -> tuple[tuple[int, ...], ...]:
        """Signs eps(alpha_i, alpha_j) on simple roots.

        -1 on the diagonal, (-1)^(alpha_i, alpha_j) below it, +1 above.
        """
        n = self.rank
        rows = []
        for i in range(n):
            row = []
            for j in range(n):
                if i == j:
                    row.append(-1)
                elif i > j:
                    row.append(-1 if self.cartan[i][j] % 2 else 1)
                else:
                    row.append(1)
            rows.append(tuple(row))
        return tuple(rows)

    def is_root(self, v: Vec) -> bool:
        return v in self._root_set

    def form(self, a: Vec, b: Vec) -> int:
        self._check_dim(a)
        self._check_dim(b)
        c = self.cartan
        return sum(a[i] * c[i][j] * b[j]
                   for i in range(self.rank) if a[i]
                   for j in range(self.rank) if b[j])

    def norm2(self, a: Vec) -> int:
        """(a, a) / 2, always an integer for simply-laced lattices."""
        return self.form(a, a) // 2

    def eps(self, a: Vec, b: Vec) -> int:
        self._check_dim(a)
        self._check_dim(b)
        parity = 0
        for i in range(self.rank):
            if not a[i] % 2:
                continue
            for j in range(self.rank):
                if b[j] % 2 and self.eps_table[i][j] == -1:
                    parity ^= 1
        return -1 if parity else 1

    def _check_dim(self, v: Vec) -> None:
        if len(v) != self.rank:
            raise RootDataError(
                f"lattice vector {v} has dimension {len(v)}, expected {self.rank} for {self.name}")

    # -- g-basis ------------------------------------------------------

    @cached_property
    def g_basis(self) -> tuple[Symbol, ...]:
        return tuple(("h", i) for i in range(self.rank)) + tuple(("x", b) for b in self.roots)

    def weight_of(self, sym: Symbol) -> Vec:
        return sym[1] if sym[0] == "x" else (0,) * self.rank

    def coroot(self, b: Vec) -> dict[Symbol, int]:
        """h_b as a combination of the h_i."""
        return {("h", i): c for i, c in enumerate(b) if c}

    def bracket_symbols(self, a: Symbol, b: Symbol) -> dict[Symbol, int]:
        return _bracket_cache(self, a, b)

    def pairing_symbols(self, a: Symbol, b: Symbol) -> int:
        if a[0] == "h" and b[0] == "h":
            return self.cartan[a[1]][b[1]]
        if a[0] == "x" and b[0] == "x" and all(p + q == 0 for p, q in zip(a[1], b[1])):
            return -1
        return 0

    def valid_symbol(self, sym: Symbol) -> bool:
        if sym[0] == "h":
            return 0 <= sym[1] < self.rank
        return sym[0] == "x" and self.is_root(sym[1])

    # Chevalley generators as {symbol: coefficient}
    def e(self, i: int) -> dict[Symbol, int]:
        return {("x", unit(self.rank, i)): 1}

    def f(self, i: int) -> dict[Symbol, int]:
        return {("x", neg(unit(self.rank, i))): -1}

    def h(self, i: int) -> dict[Symbol, int]:
        return {("h", i): 1}

    def e_theta(self) -> dict[Symbol, int]:
        return {("x", self.theta): 1}

    def f_theta(self) -> dict[Symbol, int]:
        return {("x", neg(self.theta)): -1}

    def h_theta(self) -> dict[Symbol, int]:
        return self.coroot(self.theta)

    def affine_cartan(self) -> list[list[int]]:
        """Cartan matrix of the untwisted affine algebra, node 0 first."""
        n = self.rank
        th = self.theta
        idx = [None] + list(range(n))
        out = []
        for i in range(n + 1):
            row = []
            for j in range(n + 1):
                if i == 0 and j == 0:
                    row.append(2)
                elif i == 0:
                    row.append(-self.form(th, unit(n, idx[j])))
                elif j == 0:
                    row.append(-self.form(unit(n, idx[i]), th))
                else:
                    row.append(self.cartan[idx[i]][idx[j]])
            out.append(row)
        return out


_BRACKET_MEMO: dict = {}


def _bracket_cache(rs: RootSystem, a: Symbol, b: Symbol) -> dict[Symbol, int]:
    key = (rs.name, a, b)
    hit = _BRACKET_MEMO.get(key)
    if hit is not None:
        return hit
    out: dict[Symbol, int]
    if a[0] == "h" and b[0] == "h":
        out = {}
    elif a[0] == "h":
        c = rs.form(unit(rs.rank, a[1]), b[1])
        out = {b: c} if c else {}
    elif b[0] == "h":
        c = rs.form(unit(rs.rank, b[1]), a[1])
        out = {a: -c} if c else {}
    else:
        s = add(a[1], b[1])
        if not any(s):
            out = {k: -v for k, v in rs.coroot(a[1]).items()}
        elif rs.is_root(s):
            out = {("x", s): rs.eps(a[1], b[1])}
        else:
            out = {}
    _BRACKET_MEMO[key] = out
    return out


def unit(n: int, i: int) -> Vec:
    return tuple(1 if j == i else 0 for j in range(n))


def add(a: Vec, b: Vec) -> Vec:
    return tuple(p + q for p, q in zip(a, b))


def sub(a: Vec, b: Vec) -> Vec:
    return tuple(p - q for p, q in zip(a, b))


def neg(a: Vec) -> Vec:
    return tuple(-p for p in a)


def scale(c: int, a: Vec) -> Vec:
    return tuple(c * p for p in a)


def build_root_system(label: str, rank: int) -> RootSystem:
    label = label.upper()
    if label not in _RANGES:
        raise RootDataError(
            f"unsupported label {label!r}: only simply-laced types A (rank >= 1), "
            f"D (rank >= 4) and E (rank 6-8) are available")
    ok = {"A": rank >= 1, "D": rank >= 4, "E": 6 <= rank <= 8}[label]
    if not ok:
        raise RootDataError(f"type {label} requires {_RANGES[label]}, got rank {rank}")
    return _build(label, rank)


_SYSTEMS: dict[tuple[str, int], RootSystem] = {}


def _build(label: str, rank: int) -> RootSystem:
    key = (label, rank)
    if key in _SYSTEMS:
        return _SYSTEMS[key]
    cartan = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in _edges(label, rank):
        cartan[i][j] = cartan[j][i] = -1
    ctup = tuple(tuple(r) for r in cartan)

    def pair(a: Vec, i: int) -> int:
        return sum(a[j] * ctup[j][i] for j in range(rank))

    found = [unit(rank, i) for i in range(rank)]
    seen = set(found)
    layer = list(found)
    while layer:
        nxt = []
        for b in layer:
            for i in range(rank):
                if pair(b, i) == -1:
                    c = add(b, unit(rank, i))
                    if c not in seen:
                        seen.add(c)
                        nxt.append(c)
        found.extend(nxt)
        layer = nxt
    found.sort(key=lambda v: (sum(v), tuple(-x for x in v)))
    pos = tuple(found)
    roots = frozenset(pos) | frozenset(neg(b) for b in pos)
    rs = RootSystem(label, rank, ctup, pos, roots)
    _SYSTEMS[key] = rs
    return rs


_TYPE_RE = re.compile(r"^\s*([A-Za-z])\s*_?\s*(\d+)\s*$")


def parse_type(text: str) -> RootSystem:
    """Parse labels such as ``A1``, ``D_4`` or ``e6``."""
    m = _TYPE_RE.match(text)
    if not m:
        raise RootDataError(f"cannot parse root system label {text!r} (expected e.g. A2, D4)")
    return build_root_system(m.group(1), int(m.group(2)))


class GElt:
    """Sparse element of g with exact rational coefficients."""

    __slots__ = ("rs", "terms")

    def __init__(self, rs: RootSystem, terms: dict | Iterable = ()):
        self.rs = rs
        acc: dict[Symbol, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else terms
        for sym, c in items:
            if not rs.valid_symbol(sym):
                raise RootDataError(f"{sym} is not a basis symbol of {rs.name}")
            acc[sym] = acc.get(sym, 0) + Fraction(c)
        self.terms = {k: v for k, v in acc.items() if v}

    def __add__(self, other: GElt) -> GElt:
        _same(self, other)
        return GElt(self.rs, list(self.terms.items()) + list(other.terms.items()))

    def __sub__(self, other: GElt) -> GElt:
        return self + other * -1

    def __mul__(self, c) -> GElt:
        return GElt(self.rs, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        return isinstance(other, GElt) and self.rs == other.rs and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{v}*{k}" for k, v in sorted(self.terms.items()))


def _same(x: GElt, y: GElt) -> None:
    if x.rs != y.rs:
        raise RootDataError(f"elements live over different root systems ({x.rs.name}, {y.rs.name})")


def chevalley_bracket(x: GElt, y: GElt) -> GElt:
    _same(x, y)
    acc: dict[Symbol, Fraction] = {}
    for a, ca in x.terms.items():
        for b, cb in y.terms.items():
            for s, c in x.rs.bracket_symbols(a, b).items():
                acc[s] = acc.get(s, 0) + ca * cb * c
    return GElt(x.rs, acc)


def pairing(x: GElt, y: GElt) -> Fraction:
    _same(x, y)
    return sum((ca * cb * x.rs.pairing_symbols(a, b)
                for a, ca in x.terms.items() for b, cb in y.terms.items()), Fraction(0))

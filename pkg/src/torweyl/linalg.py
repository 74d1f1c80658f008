"""Exact sparse linear algebra over the rationals.

Vectors are dicts key -> Fraction with hashable keys; any nonzero entry may
serve as a pivot, so keys need not be comparable.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable

Vec = dict


def clean(v: Vec) -> Vec:
    return {k: Fraction(c) for k, c in v.items() if c}


def axpy(y: Vec, a, x: Vec) -> None:
    """y += a x, in place, dropping zeros."""
    for k, c in x.items():
        n = y.get(k, 0) + a * c
        if n:
            y[k] = n
        else:
            y.pop(k, None)


class Echelon:
    """Incrementally built row-echelon basis of a subspace."""

    def __init__(self):
        self.rows: dict[Hashable, Vec] = {}  # pivot -> row with coefficient 1 at pivot

    def reduce(self, v: Vec) -> Vec:
        """Remainder of v against the basis (zero iff v lies in the span)."""
        r = dict(v)
        # rows are fully reduced, so subtracting one never creates another pivot
        for k in [k for k in r if k in self.rows]:
            c = r.get(k)
            if c:
                axpy(r, -c, self.rows[k])
        return r

    def add(self, v: Vec) -> bool:
        """Add v to the span; True iff it was independent."""
        r = self.reduce(clean(v))
        if not r:
            return False
        p = next(iter(r))
        inv = 1 / r[p]
        r = {k: c * inv for k, c in r.items()}
        # keep rows fully reduced against the new pivot
        for row in self.rows.values():
            if p in row:
                axpy(row, -row[p], r)
        self.rows[p] = r
        return True

    def contains(self, v: Vec) -> bool:
        return not self.reduce(clean(v))

    def __len__(self) -> int:
        return len(self.rows)

    @property
    def rank(self) -> int:
        return len(self.rows)


def rank(vectors: Iterable[Vec]) -> int:
    ech = Echelon()
    for v in vectors:
        ech.add(v)
    return ech.rank

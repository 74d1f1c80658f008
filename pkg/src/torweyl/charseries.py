"""Truncated characters: coefficients indexed by (finite weight, depth m, s-degree n).

A series is truncated at m <= max_m and n <= max_n.  p-only characters carry
n = 0 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from torweyl.rootdata import RootSystem

P_FACTOR = "p"    # prod_{n>0} 1/(1 - p^n)
PQ_FACTOR = "pq"  # prod_{n>0} 1/(1 - p^n q)
FACTORS = (P_FACTOR, PQ_FACTOR)


class CapMismatch(ValueError):
    pass


@dataclass
class CharSeries:
    max_m: int
    max_n: int = 0
    coeffs: dict = field(default_factory=dict)  # (weight tuple, m, n) -> int

    def __post_init__(self):
        self.coeffs = {k: v for k, v in self.coeffs.items()
                       if v and k[1] <= self.max_m and k[2] <= self.max_n}

    @property
    def caps(self) -> tuple[int, int]:
        return (self.max_m, self.max_n)

    def __getitem__(self, key) -> int:
        return self.coeffs.get(key, 0)

    def __eq__(self, other) -> bool:
        return isinstance(other, CharSeries) and self.caps == other.caps and self.coeffs == other.coeffs

    def weights(self) -> set:
        return {k[0] for k in self.coeffs}

    def collapse_q(self) -> CharSeries:
        """Set q = 1: sum over n."""
        out: dict = {}
        for (lam, m, _), c in self.coeffs.items():
            out[(lam, m, 0)] = out.get((lam, m, 0), 0) + c
        return CharSeries(self.max_m, 0, out)

    def to_json(self) -> list[dict]:
        return [{"weight": list(lam), "m": m, "n": n, "coeff": c}
                for (lam, m, n), c in sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][2], kv[0][0]))]

    def table(self) -> str:
        rows = [("weight", "m", "n", "coeff")]
        for e in self.to_json():
            rows.append((str(e["weight"]), str(e["m"]), str(e["n"]), str(e["coeff"])))
        widths = [max(len(r[i]) for r in rows) for i in range(4)]
        return "\n".join("  ".join(c.rjust(w) for c, w in zip(r, widths)) for r in rows)


def char_L0(rs: RootSystem, max_m: int) -> CharSeries:
    """ch_p of the basic module, by counting Fock (x) lattice basis states."""
    from torweyl.vrep import Window, enumerate_basis, sdeg
    out: dict = {}
    for st in enumerate_basis(rs, Window(max_m), with_d=False, with_tau=False):
        key = (st[1], sdeg(rs, st), 0)
        out[key] = out.get(key, 0) + 1
    return CharSeries(max_m, 0, out)


def char_L0_formula(rs: RootSystem, max_m: int) -> CharSeries:
    """Independent count: lattice theta series times prod 1/(1-p^n)^rank."""
    from torweyl.vrep import lattice_points
    colored = _colored_partition_counts(rs.rank, max_m)
    out = {}
    for beta in lattice_points(rs, max_m):
        base = rs.norm2(beta)
        for j in range(max_m - base + 1):
            out[(beta, base + j, 0)] = colored[j]
    return CharSeries(max_m, 0, out)


@lru_cache(maxsize=None)
def _colored_partition_counts(colors: int, nmax: int) -> tuple:
    coef = [1] + [0] * nmax
    for _ in range(colors):
        for part in range(1, nmax + 1):
            for j in range(part, nmax + 1):
                coef[j] += coef[j - part]
    return tuple(coef)


@lru_cache(maxsize=None)
def partition_count(n: int) -> int:
    return _colored_partition_counts(1, n)[n] if n >= 0 else 0


@lru_cache(maxsize=None)
def partitions_into_parts(n: int, k: int) -> int:
    """Number of partitions of n into exactly k parts."""
    if n == 0 and k == 0:
        return 1
    if n <= 0 or k <= 0:
        return 0
    # either a part equals 1, or subtract 1 from every part
    return partitions_into_parts(n - 1, k - 1) + partitions_into_parts(n - k, k)


def factor_series(factor: str, max_m: int, max_n: int) -> dict[tuple[int, int], int]:
    """Coefficients (m, n) -> c of the named product."""
    if factor == P_FACTOR:
        return {(m, 0): partition_count(m) for m in range(max_m + 1)}
    if factor == PQ_FACTOR:
        return {(m, n): partitions_into_parts(m, n)
                for m in range(max_m + 1) for n in range(max_n + 1) if partitions_into_parts(m, n)}
    raise ValueError(f"unknown product factor {factor!r}; choose from {FACTORS}")


def product_expand(base: CharSeries, factor: str, max_m: int | None = None,
                   max_n: int | None = None) -> CharSeries:
    max_m = base.max_m if max_m is None else max_m
    max_n = (base.max_n if factor == P_FACTOR else max(base.max_n, max_m)) if max_n is None else max_n
    if max_m > base.max_m:
        raise CapMismatch(f"base series only known up to m = {base.max_m}")
    fac = factor_series(factor, max_m, max_n)
    out: dict = {}
    for (lam, m, n), c in base.coeffs.items():
        for (j, k), d in fac.items():
            if m + j <= max_m and n + k <= max_n:
                key = (lam, m + j, n + k)
                out[key] = out.get(key, 0) + c * d
    return CharSeries(max_m, max_n, out)


def char_leq(f: CharSeries, g: CharSeries) -> bool:
    """f <= g coefficientwise."""
    if f.caps != g.caps:
        raise CapMismatch(f"caps differ: {f.caps} vs {g.caps}")
    keys = set(f.coeffs) | set(g.coeffs)
    return all(f[k] <= g[k] for k in keys)

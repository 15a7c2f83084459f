"""Root-system data for types A_r, B_r and G2 in exact arithmetic.

All vectors are tuples.  Root coordinates are integers for roots and
:class:`fractions.Fraction` for general weights.  Simple roots are the
standard basis vectors in root coordinates.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

Vector = tuple


class Family(str, enum.Enum):
    A = "A"
    B = "B"
    G2 = "G2"

    @classmethod
    def parse(cls, name) -> "Family":
        if isinstance(name, Family):
            return name
        key = str(name).strip().upper()
        if key == "G":
            key = "G2"
        try:
            return cls(key)
        except ValueError:
            raise RootSystemError(f"unsupported family {name!r}") from None


class Basis(str, enum.Enum):
    FUNDAMENTAL = "FundamentalWeights"
    ROOT = "SimpleRoots"


class RootSystemError(ValueError):
    """Invalid family/rank combination or mismatched dimensions."""


@dataclass(frozen=True)
class Weight:
    coords: tuple
    basis: Basis = Basis.FUNDAMENTAL

    def __post_init__(self):
        object.__setattr__(self, "coords", tuple(Fraction(c) for c in self.coords))

    def __len__(self):
        return len(self.coords)

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coords)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integral():
            raise ValueError(f"non-integral coordinates {self.coords}")
        return tuple(int(c) for c in self.coords)


def _matinv(m: Sequence[Sequence[Fraction]]) -> list[list[Fraction]]:
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [x / p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


@dataclass(frozen=True)
class RootSystem:
    """Immutable root-system data; build with :func:`build_root_system`."""

    family: Family
    rank: int
    positive_roots: tuple[tuple[int, ...], ...]
    gram: tuple[tuple[int, ...], ...]          # inner products of simple roots
    cartan: tuple[tuple[int, ...], ...]        # cartan[i][j] = 2(a_i,a_j)/(a_j,a_j)
    fw_to_root: tuple[tuple[Fraction, ...], ...]
    rho_root: tuple[Fraction, ...]
    epsilon_dim: int | None

    @property
    def name(self) -> str:
        return "G2" if self.family is Family.G2 else f"{self.family.value}{self.rank}"

    def __str__(self) -> str:
        return self.name

    def __hash__(self) -> int:
        return hash((self.family, self.rank))

    def __eq__(self, other) -> bool:
        return isinstance(other, RootSystem) and (self.family, self.rank) == (other.family, other.rank)

    # coordinate conversions ---------------------------------------------

    def fw_to_root_coords(self, coords: Sequence) -> tuple[Fraction, ...]:
        if len(coords) != self.rank:
            raise RootSystemError(f"expected {self.rank} coordinates, got {len(coords)}")
        m = self.fw_to_root
        return tuple(sum((m[i][j] * Fraction(coords[j]) for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def root_to_fw_coords(self, coords: Sequence) -> tuple[Fraction, ...]:
        # fw coordinate i is <v, alpha_i^vee> = sum_j c_j cartan[j][i]
        if len(coords) != self.rank:
            raise RootSystemError(f"expected {self.rank} coordinates, got {len(coords)}")
        return tuple(sum((Fraction(coords[j]) * self.cartan[j][i] for j in range(self.rank)), Fraction(0))
                     for i in range(self.rank))

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Inner product of two vectors given in root coordinates."""
        g = self.gram
        return sum((Fraction(x[i]) * g[i][j] * Fraction(y[j])
                    for i in range(self.rank) for j in range(self.rank) if g[i][j]), Fraction(0))

    def root_to_epsilon(self, coords: Sequence) -> tuple[Fraction, ...]:
        """Orthonormal epsilon coordinates (A: r+1 entries, B: r entries)."""
        c = [Fraction(x) for x in coords]
        if self.family is Family.A:
            return tuple((c[j] if j < self.rank else 0) - (c[j - 1] if j else 0)
                         for j in range(self.rank + 1))
        if self.family is Family.B:
            return tuple(c[j] - (c[j - 1] if j else 0) for j in range(self.rank))
        raise RootSystemError("G2 has no epsilon model here")

    def epsilon_to_root(self, eps: Sequence) -> tuple[Fraction, ...]:
        """Inverse of :meth:`root_to_epsilon`; for type A the sum of ``eps``
        is projected away first."""
        e = [Fraction(x) for x in eps]
        if self.family is Family.A:
            n = self.rank + 1
            mean = sum(e, Fraction(0)) / n
            e = [x - mean for x in e]
        elif self.family is not Family.B:
            raise RootSystemError("G2 has no epsilon model here")
        out, acc = [], Fraction(0)
        for j in range(self.rank):
            acc += e[j]
            out.append(acc)
        return tuple(out)


def weight_to_root_coords(rs: RootSystem, w: Weight) -> Weight:
    if w.basis is Basis.ROOT:
        return w
    return Weight(rs.fw_to_root_coords(w.coords), Basis.ROOT)


def root_to_weight_coords(rs: RootSystem, w: Weight) -> Weight:
    if w.basis is Basis.FUNDAMENTAL:
        return w
    return Weight(rs.root_to_fw_coords(w.coords), Basis.FUNDAMENTAL)


def rho(rs: RootSystem) -> Weight:
    return Weight(rs.rho_root, Basis.ROOT)


def positive_roots(rs: RootSystem) -> list[tuple[int, ...]]:
    return list(rs.positive_roots)


def _interval(r: int, i: int, j: int) -> list[int]:
    # alpha_i + ... + alpha_j, 0-based inclusive
    return [1 if i <= k <= j else 0 for k in range(r)]


def _roots_a(r: int) -> list[list[int]]:
    return [_interval(r, i, j) for i in range(r) for j in range(i, r)]


def _roots_b(r: int) -> list[list[int]]:
    # eps_k = alpha_k + ... + alpha_r
    eps = [_interval(r, k, r - 1) for k in range(r)]
    roots = []
    for i in range(r):
        roots.append(eps[i])
        for j in range(i + 1, r):
            roots.append([a - b for a, b in zip(eps[i], eps[j])])
            roots.append([a + b for a, b in zip(eps[i], eps[j])])
    return roots


_G2_ROOTS = [[1, 0], [0, 1], [1, 1], [2, 1], [3, 1], [3, 2]]


def _gram(family: Family, r: int) -> list[list[int]]:
    g = [[0] * r for _ in range(r)]
    if family is Family.G2:
        return [[2, -3], [-3, 6]]
    for i in range(r):
        g[i][i] = 2
        if i + 1 < r:
            g[i][i + 1] = g[i + 1][i] = -1
    if family is Family.B:
        g[r - 1][r - 1] = 1
    return g


@lru_cache(maxsize=None)
def build_root_system(family, rank: int) -> RootSystem:
    fam = Family.parse(family)
    r = int(rank)
    if fam is Family.A and r < 1:
        raise RootSystemError("type A needs rank >= 1")
    if fam is Family.B and r < 2:
        raise RootSystemError("type B needs rank >= 2")
    if fam is Family.G2 and r != 2:
        raise RootSystemError("G2 has rank 2")

    if fam is Family.A:
        roots, eps_dim = _roots_a(r), r + 1
    elif fam is Family.B:
        roots, eps_dim = _roots_b(r), r
    else:
        roots, eps_dim = [list(x) for x in _G2_ROOTS], None
    roots = sorted(tuple(x) for x in roots)

    g = _gram(fam, r)
    cartan = [[(2 * g[i][j]) // g[j][j] for j in range(r)] for i in range(r)]
    inv = _matinv(cartan)
    fw_to_root = tuple(tuple(inv[j][i] for j in range(r)) for i in range(r))
    rho_root = tuple(sum(fw_to_root[i], Fraction(0)) for i in range(r))
    return RootSystem(
        family=fam,
        rank=r,
        positive_roots=tuple(roots),
        gram=tuple(tuple(row) for row in g),
        cartan=tuple(tuple(row) for row in cartan),
        fw_to_root=fw_to_root,
        rho_root=rho_root,
        epsilon_dim=eps_dim,
    )

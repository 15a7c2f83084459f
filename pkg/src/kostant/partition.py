"""Kostant's partition function and its q-analog by memoized recursion.

Polynomial values are Kronecker-packed into Python integers: the
coefficient of ``q^k`` occupies bits ``[k*B, (k+1)*B)``.  Addition of packed
values is integer addition and multiplication by ``q^k`` is a left shift,
which keeps the inner loop free of list arithmetic.  ``B`` is chosen from a
proven upper bound on every coefficient, so carries between slots cannot
happen.
"""

from __future__ import annotations

import sys
import threading
from fractions import Fraction
from math import comb
from typing import Sequence

from .qpoly import QPolynomial
from .rootsys import RootSystem, Weight, Basis

DEFAULT_MEMO_CAP = 512 * 1024 * 1024
_ENTRY_BYTES = 160  # rough dict entry plus key tuple plus small int


def is_nonneg_integral(xi) -> bool:
    coords = xi.coords if isinstance(xi, Weight) else xi
    for c in coords:
        if isinstance(c, Fraction):
            if c.denominator != 1 or c < 0:
                return False
        elif c < 0 or int(c) != c:
            return False
    return True


def _slot_bits(total: int, nroots: int) -> int:
    # every coefficient is at most the number of multisets of at most
    # `total` positive roots, which is C(total + R, R)
    bound = comb(total + nroots, nroots)
    bits = bound.bit_length() + 1
    return max(64, -(-bits // 64) * 64)


class PartitionSolver:
    """Memoized evaluator of the q-partition function for one root system.

    The memo is never evicted; once its estimated footprint reaches
    ``memo_cap`` bytes new results are simply not stored.
    """

    def __init__(self, rs: RootSystem, memo_cap: int = DEFAULT_MEMO_CAP, roots=None):
        self.rs = rs
        self.memo_cap = memo_cap
        # descending lex order groups roots by their first nonzero coordinate;
        # a custom root list counts partitions over that subset instead
        self.roots = sorted(rs.positive_roots if roots is None else map(tuple, roots), reverse=True)
        r = rs.rank
        self.support = [tuple(j for j in range(r) if b[j]) for b in self.roots]
        last = [-1] * r
        for i, b in enumerate(self.roots):
            for j in range(r):
                if b[j]:
                    last[j] = i
        # coordinates whose final chance to be covered is root i
        self.closing = [tuple(j for j in range(r) if last[j] == i) for i in range(len(self.roots))]
        self._memos: dict[int, dict] = {}
        self._lock = threading.Lock()
        self._entries = 0

    @property
    def memo_entries(self) -> int:
        return self._entries

    def clear(self) -> None:
        with self._lock:
            self._memos.clear()
            self._entries = 0

    def _memo_for(self, bits: int) -> dict:
        with self._lock:
            return self._memos.setdefault(bits, {})

    def packed(self, xi: Sequence[int]) -> tuple[int, int]:
        """Packed value and slot width for a nonnegative integer vector."""
        v = tuple(int(c) for c in xi)
        bits = _slot_bits(sum(v), len(self.roots))
        memo = self._memo_for(bits)
        limit = 200 + 4 * len(self.roots)
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
        return self._count(0, v, bits, memo), bits

    def _count(self, i: int, v: tuple, bits: int, memo: dict) -> int:
        if i == len(self.roots):
            return 0 if any(v) else 1
        key = (i, v)
        hit = memo.get(key)
        if hit is not None:
            return hit
        beta = self.roots[i]
        sup = self.support[i]
        kmax = min(v[j] // beta[j] for j in sup)
        closing = self.closing[i]
        if closing:
            # this is the last root touching these coordinates, so k is forced
            j0 = closing[0]
            k, rem = divmod(v[j0], beta[j0])
            if rem or k > kmax or any(v[j] != k * beta[j] for j in closing):
                k = -1
            if k < 0:
                res = 0
            else:
                w = tuple(c - k * b for c, b in zip(v, beta)) if k else v
                res = self._count(i + 1, w, bits, memo) << (k * bits)
        else:
            res = 0
            w = list(v)
            for k in range(kmax + 1):
                if k:
                    for j in sup:
                        w[j] -= beta[j]
                sub = self._count(i + 1, tuple(w), bits, memo)
                if sub:
                    res += sub << (k * bits)
        if self._entries * _ENTRY_BYTES < self.memo_cap:
            memo[key] = res
            self._entries += 1
        return res

    def count_q(self, xi) -> QPolynomial:
        coords = xi.coords if isinstance(xi, Weight) else tuple(xi)
        if len(coords) != self.rs.rank:
            raise ValueError(f"expected {self.rs.rank} coordinates, got {len(coords)}")
        if not is_nonneg_integral(coords):
            return QPolynomial.zero()
        value, bits = self.packed(coords)
        return QPolynomial.from_packed(value, bits)


_SOLVERS: dict[tuple, PartitionSolver] = {}
_SOLVERS_LOCK = threading.Lock()


def solver_for(rs: RootSystem, memo_cap: int | None = None) -> PartitionSolver:
    """Shared per-root-system solver; ``memo_cap`` updates the shared cap."""
    key = (rs.family, rs.rank)
    with _SOLVERS_LOCK:
        s = _SOLVERS.get(key)
        if s is None:
            s = _SOLVERS[key] = PartitionSolver(rs, memo_cap or DEFAULT_MEMO_CAP)
        elif memo_cap is not None:
            s.memo_cap = memo_cap
    return s


def _root_coords(rs: RootSystem, xi) -> tuple:
    if isinstance(xi, Weight):
        if xi.basis is not Basis.ROOT:
            raise ValueError("partition functions take simple-root coordinates")
        return xi.coords
    return tuple(xi)


def partition_count_q(rs: RootSystem, xi) -> QPolynomial:
    """q-analog of Kostant's partition function at a root-coordinate vector."""
    return solver_for(rs).count_q(_root_coords(rs, xi))


def partition_count(rs: RootSystem, xi) -> int:
    return partition_count_q(rs, xi)(1)

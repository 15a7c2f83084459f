"""Weyl groups of types A_r, B_r and G2 in compact form.

Type A elements are permutations ``p`` of ``0..r`` with ``w(e_j) = e_{p[j]}``.
Type B elements are signed permutations stored as ``s_j * (p[j] + 1)``, so
``w(e_j) = s_j e_{p[j]}``.  G2 elements are integer 2x2 matrices acting on
root coordinates.  Products are function composition: ``s2s3`` applies
``s3`` first.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

from .rootsys import Family, RootSystem, RootSystemError


@dataclass(frozen=True, order=True)
class WeylElement:
    family: Family
    data: tuple
    sign: int

    def __repr__(self) -> str:
        return f"WeylElement({self.family.value}, {self.data}, {self.sign:+d})"


def weyl_order(rs: RootSystem) -> int:
    if rs.family is Family.A:
        return factorial(rs.rank + 1)
    if rs.family is Family.B:
        return 2 ** rs.rank * factorial(rs.rank)
    return 12


def _parity(p: Sequence[int]) -> int:
    """Sign of a permutation of ``0..n-1`` via cycle decomposition."""
    seen = [False] * len(p)
    sign = 1
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def perm_element(p: Sequence[int]) -> WeylElement:
    return WeylElement(Family.A, tuple(p), _parity(p))


def signed_element(code: Sequence[int]) -> WeylElement:
    p = [abs(c) - 1 for c in code]
    flips = sum(1 for c in code if c < 0)
    return WeylElement(Family.B, tuple(code), _parity(p) * (-1) ** flips)


# G2 --------------------------------------------------------------------

def _g2_reflection(rs: RootSystem, i: int) -> tuple:
    # s_i(v) = v - <v, a_i^vee> a_i on root coordinates, as a column-action matrix
    rows = [[int(r == c) for c in range(2)] for r in range(2)]
    for c in range(2):
        rows[i][c] -= rs.cartan[c][i]
    return tuple(tuple(row) for row in rows)


def _matmul(a, b) -> tuple:
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)) for i in range(2))


@lru_cache(maxsize=None)
def _g2_table(rs: RootSystem) -> tuple:
    ident = ((1, 0), (0, 1))
    gens = [_g2_reflection(rs, 0), _g2_reflection(rs, 1)]
    seen = {ident: 1}
    frontier = [ident]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                h = _matmul(g, m)
                if h not in seen:
                    seen[h] = -seen[m]
                    nxt.append(h)
        frontier = nxt
    if len(seen) != 12:
        raise AssertionError("G2 closure failed")
    return tuple(WeylElement(Family.G2, m, s) for m, s in seen.items())


# construction ----------------------------------------------------------

def identity(rs: RootSystem) -> WeylElement:
    if rs.family is Family.A:
        return WeylElement(Family.A, tuple(range(rs.rank + 1)), 1)
    if rs.family is Family.B:
        return WeylElement(Family.B, tuple(range(1, rs.rank + 1)), 1)
    return WeylElement(Family.G2, ((1, 0), (0, 1)), 1)


def simple_reflection(rs: RootSystem, i: int) -> WeylElement:
    """``s_i`` with 1-based ``i``."""
    if not 1 <= i <= rs.rank:
        raise RootSystemError(f"no simple reflection s{i} in {rs.name}")
    if rs.family is Family.G2:
        return WeylElement(Family.G2, _g2_reflection(rs, i - 1), -1)
    if rs.family is Family.A or i < rs.rank:
        base = list(identity(rs).data)
        base[i - 1], base[i] = base[i], base[i - 1]
        return WeylElement(rs.family, tuple(base), -1)
    base = list(range(1, rs.rank + 1))
    base[-1] = -base[-1]
    return WeylElement(Family.B, tuple(base), -1)


def compose(rs: RootSystem, a: WeylElement, b: WeylElement) -> WeylElement:
    """The product ``a b`` (apply ``b`` first)."""
    if rs.family is Family.A:
        return WeylElement(Family.A, tuple(a.data[j] for j in b.data), a.sign * b.sign)
    if rs.family is Family.B:
        out = []
        for c in b.data:
            t = a.data[abs(c) - 1]
            out.append(t if c > 0 else -t)
        return WeylElement(Family.B, tuple(out), a.sign * b.sign)
    return WeylElement(Family.G2, _matmul(a.data, b.data), a.sign * b.sign)


def inverse(rs: RootSystem, e: WeylElement) -> WeylElement:
    if rs.family is Family.A:
        inv = [0] * len(e.data)
        for j, pj in enumerate(e.data):
            inv[pj] = j
        return WeylElement(Family.A, tuple(inv), e.sign)
    if rs.family is Family.B:
        inv = [0] * len(e.data)
        for j, c in enumerate(e.data):
            inv[abs(c) - 1] = (j + 1) if c > 0 else -(j + 1)
        return WeylElement(Family.B, tuple(inv), e.sign)
    for cand in _g2_table(rs):
        if _matmul(cand.data, e.data) == ((1, 0), (0, 1)):
            return cand
    raise AssertionError("element not in G2")


def enumerate_elements(rs: RootSystem) -> Iterator[WeylElement]:
    """Stream every element once, lexicographically in the compact form."""
    if rs.family is Family.A:
        for p in itertools.permutations(range(rs.rank + 1)):
            yield perm_element(p)
    elif rs.family is Family.B:
        n = rs.rank
        for p in itertools.permutations(range(1, n + 1)):
            for signs in itertools.product((1, -1), repeat=n):
                yield signed_element(tuple(s * v for s, v in zip(signs, p)))
    else:
        yield from _g2_table(rs)


# action ----------------------------------------------------------------

def act_epsilon(e: WeylElement, x: Sequence) -> tuple:
    """Apply a type A or B element to epsilon coordinates."""
    out = [0] * len(x)
    if e.family is Family.A:
        for j, pj in enumerate(e.data):
            out[pj] = x[j]
    else:
        for j, c in enumerate(e.data):
            out[abs(c) - 1] = x[j] if c > 0 else -x[j]
    return tuple(out)


def act(rs: RootSystem, e: WeylElement, v: Sequence) -> tuple:
    """Apply ``e`` to a vector in simple-root coordinates (exact)."""
    if len(v) != rs.rank:
        raise RootSystemError(f"expected {rs.rank} coordinates, got {len(v)}")
    if rs.family is Family.G2:
        m = e.data
        return tuple(sum(Fraction(m[i][j]) * Fraction(v[j]) for j in range(2)) for i in range(2))
    return rs.epsilon_to_root(act_epsilon(e, rs.root_to_epsilon(v)))


def length(rs: RootSystem, e: WeylElement) -> int:
    """Number of positive roots sent to negative roots."""
    return sum(1 for beta in rs.positive_roots if _is_negative(act(rs, e, beta)))


def _is_negative(v) -> bool:
    for c in v:
        if c:
            return c < 0
    return False


# words -----------------------------------------------------------------

def reduced_word(rs: RootSystem, e: WeylElement) -> list[int]:
    """Lexicographically least reduced word, peeling the smallest left
    descent each step."""
    word = []
    ident = identity(rs)
    gens = [simple_reflection(rs, i) for i in range(1, rs.rank + 1)]
    unit = [tuple(int(j == i) for j in range(rs.rank)) for i in range(rs.rank)]
    cur = e
    while cur.data != ident.data:
        inv = inverse(rs, cur)
        for i in range(rs.rank):
            if _is_negative(act(rs, inv, unit[i])):
                word.append(i + 1)
                cur = compose(rs, gens[i], cur)
                break
        else:
            raise AssertionError("no descent found for a non-identity element")
    return word


def from_word(rs: RootSystem, word: Sequence[int]) -> WeylElement:
    out = identity(rs)
    for i in word:
        out = compose(rs, out, simple_reflection(rs, i))
    return out


def format_word(word: Sequence[int]) -> str:
    return "".join(f"s{i}" for i in word) if word else "1"


_WORD_RE = re.compile(r"s(\d+)")


def parse_word(text: str) -> list[int]:
    t = text.strip().replace(" ", "")
    if t in ("1", "e", ""):
        return []
    if not re.fullmatch(r"(s\d+)+", t):
        raise ValueError(f"bad word {text!r}")
    return [int(g) for g in _WORD_RE.findall(t)]

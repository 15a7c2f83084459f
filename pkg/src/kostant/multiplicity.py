"""Weight multiplicities from Kostant's alternating sum, their q-analogs,
Weyl alternation sets, and an independent Freudenthal oracle."""

from __future__ import annotations

import json
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

import numpy as np

from . import kernels
from .partition import is_nonneg_integral, solver_for
from .qpoly import QPolynomial
from .rootsys import Basis, Family, RootSystem, RootSystemError, Weight
from .weyl import (
    WeylElement,
    act,
    compose,
    enumerate_elements,
    format_word,
    perm_element,
    signed_element,
    simple_reflection,
    act_epsilon,
    inverse,
    identity,
)

METHODS = ("prune", "scan", "generic")


def default_threads() -> int:
    try:
        return max(1, int(os.environ.get("KOSTANT_THREADS", "1")))
    except ValueError:
        return 1


def _fw_ints(rs: RootSystem, w) -> tuple[int, ...]:
    if isinstance(w, Weight):
        if w.basis is not Basis.FUNDAMENTAL:
            w = Weight(rs.root_to_fw_coords(w.coords))
        coords = w.coords
    else:
        coords = tuple(w)
    if len(coords) != rs.rank:
        raise RootSystemError(f"expected {rs.rank} coordinates, got {len(coords)}")
    out = []
    for c in coords:
        c = Fraction(c)
        if c.denominator != 1:
            raise RootSystemError(f"weight {tuple(coords)} is not integral")
        out.append(int(c))
    return tuple(out)


# epsilon models of lambda + rho ----------------------------------------

def _eps_a(a: Sequence[int]) -> list[int]:
    # sum of w_i = e_1 + ... + e_i, normalized with last entry 0
    r = len(a)
    x = [0] * (r + 1)
    acc = 0
    for j in range(r - 1, -1, -1):
        acc += a[j]
        x[j] = acc
    return x


def _eps_b2(a: Sequence[int]) -> list[int]:
    # doubled coordinates: w_i = e_1 + ... + e_i (i < r), w_r = (e_1 + ... + e_r)/2
    r = len(a)
    x = [0] * r
    acc = a[-1]
    x[r - 1] = acc
    for j in range(r - 2, -1, -1):
        acc += 2 * a[j]
        x[j] = acc
    return x


def _prefix(v: Sequence[int]) -> list[int]:
    out, acc = [], 0
    for c in v:
        acc += c
        out.append(acc)
    return out


def _search_problem(rs: RootSystem, lam: tuple, mu: tuple):
    """Return ``(x, thr, signed, scale)`` or None when no element can contribute."""
    a = [c + 1 for c in lam]
    b = [c + 1 for c in mu]
    r = rs.rank
    if rs.family is Family.A:
        x, u = _eps_a(a), _eps_a(b)
        total = sum(x) - sum(u)
        if total % (r + 1):
            return None
        c = total // (r + 1)
        pu = _prefix(u)
        thr = [pu[k] + (k + 1) * c for k in range(r)]
        return x, thr, False, 1
    if (a[-1] - b[-1]) % 2:
        return None
    x, u = _eps_b2(a), _eps_b2(b)
    return x, _prefix(u), True, 2


def _decode(rs: RootSystem, code: Sequence[int]) -> WeylElement:
    n = len(code)
    if rs.family is Family.A:
        p = [0] * n
        for j, idx in enumerate(code):
            p[idx] = j
        return perm_element(p)
    data = [0] * n
    for j, c in enumerate(code):
        data[c >> 1] = -(j + 1) if c & 1 else j + 1
    return signed_element(data)


def _run_kernel(kernel, x, thr, signed, threads: int, use_scan: bool):
    n = len(x)
    width = 2 * n if signed else n
    xa = np.asarray(x, dtype=np.int64)
    ta = np.asarray(thr, dtype=np.int64)

    def call(lo, hi, cap=256):
        while True:
            codes = np.zeros((cap, n), np.int64)
            gaps = np.zeros((cap, len(thr)), np.int64)
            if use_scan:
                cnt = kernel(xa, ta, signed, codes, gaps)
            else:
                cnt = kernel(xa, ta, signed, lo, hi, codes, gaps)
            if cnt <= cap:
                return codes[:cnt], gaps[:cnt]
            cap = 1 << int(cnt - 1).bit_length()

    if use_scan or threads <= 1:
        return [call(0, width)]
    bounds = np.linspace(0, width, min(threads, width) + 1).astype(int)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futs = [pool.submit(call, int(lo), int(hi)) for lo, hi in zip(bounds[:-1], bounds[1:]) if hi > lo]
        return [f.result() for f in futs]


def _generic_terms(rs: RootSystem, lam: tuple, mu: tuple) -> list[tuple[WeylElement, tuple]]:
    lr = rs.fw_to_root_coords([c + 1 for c in lam])
    mr = rs.fw_to_root_coords([c + 1 for c in mu])
    out = []
    for e in enumerate_elements(rs):
        xi = tuple(s - t for s, t in zip(act(rs, e, lr), mr))
        if is_nonneg_integral(xi):
            out.append((e, tuple(int(c) for c in xi)))
    return out


def alternation_terms(rs: RootSystem, lam, mu, *, threads: int | None = None,
                      method: str = "prune") -> list[tuple[WeylElement, tuple]]:
    """Pairs ``(sigma, xi)`` with ``xi = sigma(lam+rho) - (mu+rho)`` a
    nonnegative integral root-coordinate vector; these are exactly the
    elements with a nonzero partition-function term."""
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}")
    lam_i, mu_i = _fw_ints(rs, lam), _fw_ints(rs, mu)
    if rs.family is Family.G2 or method == "generic":
        return _generic_terms(rs, lam_i, mu_i)
    prob = _search_problem(rs, lam_i, mu_i)
    if prob is None:
        return []
    x, thr, signed, scale = prob
    regular = all(x[j] > x[j + 1] for j in range(len(x) - 1)) and (not signed or x[-1] > 0)
    use_scan = method == "scan" or not regular
    kernel = kernels.full_scan if use_scan else kernels.prune_search
    chunks = _run_kernel(kernel, x, thr, signed, threads or default_threads(), use_scan)
    out = []
    for codes, gaps in chunks:
        for code, gap in zip(codes.tolist(), gaps.tolist()):
            out.append((_decode(rs, code), tuple(g // scale for g in gap)))
    return out


# reduced words (fast descent tests on epsilon coordinates) -------------

@lru_cache(maxsize=None)
def _simple_eps(rs: RootSystem) -> tuple:
    r = rs.rank
    out = []
    for i in range(r):
        if rs.family is Family.A:
            v = [0] * (r + 1)
            v[i], v[i + 1] = 1, -1
        else:
            v = [0] * r
            v[i] = 1
            if i + 1 < r:
                v[i + 1] = -1
        out.append(tuple(v))
    return tuple(out)


def _first_negative(v) -> bool:
    for c in v:
        if c:
            return c < 0
    return False


def word_of(rs: RootSystem, e: WeylElement) -> list[int]:
    """Lexicographically least reduced word of ``e``."""
    if rs.family is Family.G2:
        from .weyl import reduced_word
        return reduced_word(rs, e)
    # in both epsilon models a root is negative iff its first nonzero entry is
    alphas = _simple_eps(rs)
    gens = [simple_reflection(rs, i + 1) for i in range(rs.rank)]
    ident = identity(rs).data
    word = []
    cur = e
    while cur.data != ident:
        inv = inverse(rs, cur)
        for i, a in enumerate(alphas):
            if _first_negative(act_epsilon(inv, a)):
                word.append(i + 1)
                cur = compose(rs, gens[i], cur)
                break
        else:
            raise AssertionError("no descent found")
    return word


# records ---------------------------------------------------------------

@dataclass(frozen=True)
class AlternationTerm:
    element: WeylElement
    word: tuple
    sign: int
    contribution: QPolynomial

    @property
    def word_str(self) -> str:
        return format_word(self.word)


@dataclass(frozen=True)
class AlternationRecord:
    family: Family
    rank: int
    lam: tuple
    mu: tuple
    terms: tuple
    mq: QPolynomial
    provenance: dict = field(default_factory=dict, compare=False)

    @property
    def m(self) -> int:
        return self.mq(1)

    @property
    def words(self) -> list[str]:
        return [t.word_str for t in self.terms]

    @property
    def elements(self) -> frozenset:
        return frozenset(t.element for t in self.terms)

    def __len__(self) -> int:
        return len(self.terms)

    def to_dict(self) -> dict:
        return {
            "lambda": list(self.lam),
            "mu": list(self.mu),
            "mq": {"coeffs": self.mq.to_json()},
            "m": self.m,
            "set": [{"word": t.word_str, "sign": t.sign, "contribution": t.contribution.to_json()}
                    for t in self.terms],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), separators=(",", ":"))


def alternation_set(rs: RootSystem, lam, mu, *, threads: int | None = None,
                    method: str = "prune") -> AlternationRecord:
    lam_i, mu_i = _fw_ints(rs, lam), _fw_ints(rs, mu)
    solver = solver_for(rs)
    terms = []
    total = QPolynomial.zero()
    for e, xi in alternation_terms(rs, lam_i, mu_i, threads=threads, method=method):
        contrib = solver.count_q(xi)
        word = tuple(word_of(rs, e))
        terms.append(AlternationTerm(e, word, e.sign, contrib))
        total = total + contrib * e.sign
    terms.sort(key=lambda t: (len(t.word), t.word))
    return AlternationRecord(rs.family, rs.rank, lam_i, mu_i, tuple(terms), total,
                             {"method": method, "kernel": "numba" if kernels.HAVE_NUMBA else "python"})


def kostant_multiplicity_q(rs: RootSystem, lam, mu, *, threads: int | None = None,
                           method: str = "prune") -> QPolynomial:
    """Lusztig's q-analog of the weight multiplicity via the alternating sum."""
    solver = solver_for(rs)
    total = QPolynomial.zero()
    for e, xi in alternation_terms(rs, lam, mu, threads=threads, method=method):
        total = total + solver.count_q(xi) * e.sign
    return total


def kostant_multiplicity(rs: RootSystem, lam, mu, **kw) -> int:
    return kostant_multiplicity_q(rs, lam, mu, **kw)(1)


def contributing_terms(rs: RootSystem, lam, mu, **kw) -> list[tuple[str, int, QPolynomial]]:
    rec = alternation_set(rs, lam, mu, **kw)
    return [(t.word_str, t.sign, t.contribution) for t in rec.terms]


# Freudenthal oracle ----------------------------------------------------

def _dominant_conjugate(rs: RootSystem, v: tuple) -> tuple:
    v = list(v)
    while True:
        for i, c in enumerate(v):
            if c < 0:
                row = rs.cartan[i]
                v = [v[j] - c * row[j] for j in range(rs.rank)]
                break
        else:
            return tuple(v)


@lru_cache(maxsize=64)
def _freudenthal_table(rs: RootSystem, lam: tuple) -> dict:
    r = rs.rank
    roots_fw = [tuple(int(c) for c in rs.root_to_fw_coords(b)) for b in rs.positive_roots]
    roots_root = rs.positive_roots

    # dominant weights below lam, reached by subtracting positive roots
    height = {lam: 0}
    frontier = [lam]
    while frontier:
        nxt = []
        for v in frontier:
            for a, ar in zip(roots_fw, roots_root):
                w = tuple(x - y for x, y in zip(v, a))
                if min(w) >= 0 and w not in height:
                    height[w] = height[v] + sum(ar)
                    nxt.append(w)
        frontier = nxt

    def root_coords(v):
        return rs.fw_to_root_coords(v)

    rho_fw = (1,) * r
    lr = root_coords(tuple(x + 1 for x in lam))
    norm_l = rs.inner(lr, lr)
    mult = {lam: 1}

    def m_of(v):
        return mult.get(_dominant_conjugate(rs, v), 0)

    # exact heights: order by root-coordinate sum of lam - mu
    lam_root = root_coords(lam)
    order = sorted(height, key=lambda w: sum(lam_root) - sum(root_coords(w)))
    for mu in order:
        if mu == lam:
            continue
        mr = root_coords(tuple(x + y for x, y in zip(mu, rho_fw)))
        denom = norm_l - rs.inner(mr, mr)
        acc = Fraction(0)
        mu_root = root_coords(mu)
        for a, ar in zip(roots_fw, roots_root):
            k = 1
            while True:
                v = tuple(x + k * y for x, y in zip(mu, a))
                mv = m_of(v)
                if not mv:
                    break
                vr = tuple(s + k * t for s, t in zip(mu_root, ar))
                acc += mv * rs.inner(vr, ar)
                k += 1
        val = 2 * acc / denom
        if val.denominator != 1 or val < 0:
            raise AssertionError(f"Freudenthal produced {val} at {mu}")
        mult[mu] = int(val)
    return mult


def freudenthal_multiplicity(rs: RootSystem, lam, mu) -> int:
    """Weight multiplicity by Freudenthal's recursion (small cases only)."""
    lam_i, mu_i = _fw_ints(rs, lam), _fw_ints(rs, mu)
    if min(lam_i) < 0:
        raise ValueError("Freudenthal oracle needs a dominant highest weight")
    diff = rs.fw_to_root_coords(tuple(x - y for x, y in zip(lam_i, mu_i)))
    if any(c.denominator != 1 for c in diff):
        return 0
    return _freudenthal_table(rs, lam_i).get(_dominant_conjugate(rs, mu_i), 0)

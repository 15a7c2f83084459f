"""Multiplicity-one pairs for ``lambda = l w1`` (and the G2 lists), closed-form
predictions for their alternation sets and q-multiplicities, and a scanner
that checks the power-of-q pattern by brute force."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations
from math import factorial
from typing import Iterable

from .multiplicity import _dominant_conjugate, _freudenthal_table, alternation_set, kostant_multiplicity
from .qpoly import QPolynomial, format_qpoly
from .rootsys import Family, RootSystem, RootSystemError, build_root_system
from .weyl import format_word, from_word


class CostGuardError(RuntimeError):
    """Raised when a request would exceed the desk-scale budget."""

    def __init__(self, message: str, estimate: float | None = None):
        super().__init__(message)
        self.estimate = estimate


class _NotCovered:
    _inst = None

    def __new__(cls):
        if cls._inst is None:
            cls._inst = super().__new__(cls)
        return cls._inst

    def __repr__(self) -> str:
        return "NotCovered"

    def __bool__(self) -> bool:
        return False


NotCovered = _NotCovered()


@dataclass(frozen=True)
class MultOneCase:
    family: Family
    rank: int
    ell: int
    mu: tuple
    lam_index: int = 1       # lambda = ell * w_{lam_index}
    p: int | None = None     # type A: (ell - sum i m_i) / (r+1)
    k: int | None = None     # type B: mu = (..)w1 + 2j w2 + 2k w3 (k-case has no w3)
    j: int | None = None
    n: int | None = None     # G2: m1 = 3n + 1

    @property
    def lam(self) -> tuple:
        out = [0] * self.rank
        out[self.lam_index - 1] = self.ell
        return tuple(out)

    @property
    def kind(self) -> str:
        """``A``, ``B-k``, ``B-jk``, ``B-other``, ``G2`` or ``G2-w1``."""
        if self.family is Family.A:
            return "A"
        if self.family is Family.G2:
            return "G2" if self.lam_index == 2 else "G2-w1"
        if self.k is not None and self.j is None:
            return "B-k"
        if self.j is not None:
            return "B-jk"
        return "B-other"


def _compositions(total: int, weights: list[int]) -> Iterable[tuple]:
    """Nonnegative tuples ``c`` with ``sum c_i w_i == total``."""
    if not weights:
        if total == 0:
            yield ()
        return
    w = weights[-1]
    for c in range(total // w, -1, -1):
        for rest in _compositions(total - c * w, weights[:-1]):
            yield rest + (c,)


def _b_params(rank: int, ell: int, mu: tuple) -> dict:
    if ell % 2 == 0 or rank < 3:
        return {}
    if all(m == 0 for m in mu[2:]):
        return {"k": mu[1] // 2}
    if rank > 3 and all(m == 0 for m in mu[3:]) and mu[2] > 0:
        j, k = mu[1] // 2, mu[2] // 2
        if ell > 2 * j and ell > 4 * k:
            return {"j": j, "k": k}
    return {}


def mult_one_mus(family, rank: int, ell: int) -> list[MultOneCase]:
    """All ``mu`` with ``m(lambda, mu) = 1`` for ``lambda = ell w1``
    (``ell w2`` in G2, plus the extra pair ``(w1, 0)`` listed under ``ell = 1``)."""
    fam = Family.parse(family)
    rs = build_root_system(fam, rank)
    if ell < 0:
        raise ValueError("ell must be nonnegative")
    out: list[MultOneCase] = []
    r = rs.rank
    if fam is Family.A:
        for rem in range(0, ell + 1, r + 1):
            for mu in _compositions(ell - rem, list(range(1, r + 1))):
                out.append(MultOneCase(fam, r, ell, mu, p=rem // (r + 1)))
    elif fam is Family.B:
        # halves h_i = m_i / 2 with ell - 1 = sum_{i<r} 2 i h_i + r h_r
        if ell >= 1:
            weights = [2 * i for i in range(1, r)] + [r]
            for h in _compositions(ell - 1, weights):
                mu = tuple(2 * x for x in h)
                out.append(MultOneCase(fam, r, ell, mu, **_b_params(r, ell, mu)))
    else:
        if ell >= 1:
            for m2 in range((3 * ell - 1) // 3, -1, -1):
                rest = 3 * ell - 1 - 3 * m2
                if rest % 2 == 0:
                    m1 = rest // 2
                    out.append(MultOneCase(fam, 2, ell, (m1, m2), lam_index=2, n=(m1 - 1) // 3))
        if ell == 1:
            out.append(MultOneCase(fam, 2, 1, (0, 0), lam_index=1))
    out.sort(key=lambda c: (c.lam_index, tuple(reversed(c.mu))), reverse=True)
    return out


# predictions -----------------------------------------------------------

def _nonconsecutive(lo: int, hi: int) -> list[tuple]:
    idx = list(range(lo, hi + 1))
    out = []
    for size in range(len(idx) + 1):
        for sub in combinations(idx, size):
            if all(b - a > 1 for a, b in zip(sub, sub[1:])):
                out.append(sub)
    return out


def _canonical(rs: RootSystem, words: Iterable[Iterable[int]]) -> frozenset:
    from .multiplicity import word_of
    return frozenset(format_word(word_of(rs, from_word(rs, list(w)))) for w in words)


def predicted_alternation_set(case: MultOneCase):
    """Canonical reduced words of the alternation set when a proven
    statement covers ``case``; otherwise ``NotCovered``."""
    rs = build_root_system(case.family, case.rank)
    mu = case.mu
    if case.family is Family.A:
        r = case.rank
        m = list(mu) + [0] * 4
        if case.p == 0:
            if all(x == 0 for x in m[2:r]):
                return _canonical(rs, [()])
            if all(x == 0 for x in m[3:r]) and m[2] != 0:
                return _canonical(rs, [(), (2,)])
            if r >= 4 and all(x == 0 for x in m[4:r]) and m[3] != 0:
                if m[3] == 1:
                    return _canonical(rs, [(), (2,), (3,), (2, 3)])
                return _canonical(rs, [(), (2,), (3,), (2, 3), (3, 2), (2, 3, 2)])
            return NotCovered
        if r == 3:
            # rank-3 analysis: conditions on c = m3 + 2p and p
            p, c = case.p, m[2] + 2 * case.p
            words = [()]
            if c >= 1:
                words.append((2,))
            if p >= 1:
                words.append((3,))
            if c >= 2 and p >= 1:
                words.append((2, 3))
            if c >= 1 and p >= 2:
                words.append((3, 2))
            if c >= 2 and p >= 2:
                words.append((2, 3, 2))
            return _canonical(rs, words)
        return NotCovered
    if case.family is Family.B:
        r = case.rank
        if r == 3:
            if mu[2] == 0:
                return _canonical(rs, [(), (2,), (3,)])
            return _canonical(rs, [(), (2,), (3,), (2, 3)])
        kind = case.kind
        if kind == "B-k":
            return _canonical(rs, _nonconsecutive(2, r))
        if kind == "B-jk":
            words = _nonconsecutive(2, r) + [s + (2, 3) for s in _nonconsecutive(5, r)]
            return _canonical(rs, words)
        return NotCovered
    if case.kind == "G2":
        return _canonical(rs, [(), (1,)])
    return NotCovered


def predicted_qmultiplicity(case: MultOneCase):
    """The stated power of ``q`` for covered cases, else ``NotCovered``."""
    mu = case.mu
    if case.family is Family.A:
        if case.p != 0:
            return NotCovered
        r = case.rank
        m = list(mu) + [0] * 4
        if all(x == 0 for x in m[2:r]):
            return QPolynomial.monomial(m[1])
        if all(x == 0 for x in m[3:r]) and m[2] != 0:
            return QPolynomial.monomial(m[1] + 3 * m[2])
        if r >= 4 and all(x == 0 for x in m[4:r]) and m[3] != 0:
            return QPolynomial.monomial(m[1] + 3 * m[2] + 6 * m[3])
        return NotCovered
    if case.family is Family.B:
        r = case.rank
        if case.kind == "B-k":
            return QPolynomial.monomial(2 * case.k + r)
        if case.kind == "B-jk":
            return QPolynomial.monomial(r + 2 * case.j + 6 * case.k - 2)
        return NotCovered
    if case.kind == "G2":
        return QPolynomial.monomial(case.n + 2)
    return NotCovered


@lru_cache(maxsize=None)
def fibonacci(n: int) -> int:
    if n < 1:
        raise ValueError("Fibonacci index starts at 1")
    a, b = 1, 1
    for _ in range(n - 1):
        a, b = b, a + b
    return a


def fibonacci_cardinality(rank: int, case_kind: str) -> int:
    """``F_{r+1}`` for the k-case (r >= 3), ``2 F_r`` for the jk-case (r > 3)."""
    kind = case_kind.lower().removeprefix("b-")
    if kind == "k":
        if rank < 3:
            raise ValueError("k-case count needs rank >= 3")
        return fibonacci(rank + 1)
    if kind == "jk":
        if rank <= 3:
            raise ValueError("jk-case count needs rank > 3")
        return 2 * fibonacci(rank)
    raise ValueError(f"unknown case kind {case_kind!r}")


# conjecture scan -------------------------------------------------------

def estimate_cost(family, rank: int) -> float:
    """Crude work estimate: group order for the worst case of one pair."""
    fam = Family.parse(family)
    if fam is Family.A:
        return float(factorial(rank + 1))
    if fam is Family.B:
        return float(2 ** rank * factorial(rank))
    return 12.0


SCAN_BUDGET = 5e8


@dataclass
class ScanEntry:
    family: str
    rank: int
    ell: int
    lam: tuple
    mu: tuple
    mq: QPolynomial
    size: int

    @property
    def exponent(self) -> int | None:
        return self.mq.monomial_exponent()

    @property
    def ok(self) -> bool:
        return self.exponent is not None and self.mq(1) == 1

    def to_dict(self) -> dict:
        return {"family": self.family, "rank": self.rank, "ell": self.ell, "lambda": list(self.lam),
                "mu": list(self.mu), "mq": {"coeffs": self.mq.to_json()}, "m": self.mq(1),
                "size": self.size, "pure_power": self.exponent is not None}


@dataclass
class ScanReport:
    family: str
    ranks: tuple
    ells: tuple
    entries: list = field(default_factory=list)
    seconds: float = 0.0

    @property
    def violations(self) -> list:
        return [e for e in self.entries if not e.ok]

    def exponents(self) -> dict:
        return {(e.rank, e.ell, e.mu): e.exponent for e in self.entries}

    def to_dict(self) -> dict:
        return {"family": self.family, "ranks": list(self.ranks), "ells": list(self.ells),
                "pairs": len(self.entries), "violations": [e.to_dict() for e in self.violations],
                "entries": [e.to_dict() for e in self.entries]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=1)

    def to_markdown(self) -> str:
        lines = [f"# Power-of-q scan: {self.family}, ranks {self.ranks[0]}..{self.ranks[-1]}, "
                 f"ell {self.ells[0]}..{self.ells[-1]}", "",
                 f"pairs: {len(self.entries)}, violations: {len(self.violations)}", ""]
        for rank in self.ranks:
            rows = [e for e in self.entries if e.rank == rank]
            if not rows:
                continue
            lines += [f"## rank {rank}", "", "| lambda | mu | m_q | size |", "|---|---|---|---|"]
            for e in rows:
                lines.append(f"| {format_weight(e.lam)} | {format_weight(e.mu)} | {format_qpoly(e.mq)} | {e.size} |")
            lines.append("")
        return "\n".join(lines)


def format_weight(coords) -> str:
    terms = []
    for i, c in enumerate(coords, start=1):
        if c:
            terms.append(f"w{i}" if c == 1 else f"{c}w{i}")
    return "+".join(terms) if terms else "0"


def scan_conjecture(family, rank_range, ell_range, *, threads: int | None = None) -> ScanReport:
    """Compute ``m_q`` for every multiplicity-one pair in the given ranges
    and record whether it is a pure power of ``q`` with value one at q=1."""
    fam = Family.parse(family)
    ranks = tuple(rank_range)
    ells = tuple(ell_range)
    worst = max(estimate_cost(fam, r) for r in ranks)
    if worst > SCAN_BUDGET:
        raise CostGuardError(f"scan would enumerate groups of order {worst:.3g}", worst)
    report = ScanReport(fam.value, ranks, ells)
    t0 = time.perf_counter()
    for rank in ranks:
        rs = build_root_system(fam, rank)
        for ell in ells:
            for case in mult_one_mus(fam, rank, ell):
                rec = alternation_set(rs, case.lam, case.mu, threads=threads)
                report.entries.append(ScanEntry(fam.value, rank, ell, case.lam, case.mu, rec.mq, len(rec)))
    report.seconds = time.perf_counter() - t0
    return report


def verify_bz_small(rs: RootSystem, ell: int) -> bool:
    """Compare the multiplicity-one list against brute force over every
    dominant weight below ``ell w1`` (``ell w2`` in G2)."""
    if rs.rank > 3 or ell > 6:
        raise CostGuardError("verify_bz_small is limited to rank <= 3 and ell <= 6")
    idx = 2 if rs.family is Family.G2 else 1
    lam = tuple(ell if i == idx - 1 else 0 for i in range(rs.rank))
    brute = {mu for mu in _freudenthal_table(rs, lam) if kostant_multiplicity(rs, lam, mu) == 1}
    listed = {c.mu for c in mult_one_mus(rs.family, rs.rank, ell) if c.lam == lam}
    return brute == listed

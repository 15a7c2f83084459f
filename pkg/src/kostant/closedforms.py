"""Closed formulas for the q-partition function on small supports.

These are independent of :mod:`kostant.partition` and serve as
differential-test oracles for it.
"""

from __future__ import annotations

from math import comb

from .qpoly import QPolynomial

_ONE_PLUS_Q = QPolynomial((1, 1))
_Q = QPolynomial.monomial(1)


def a2_qformula(n: int, m: int) -> QPolynomial:
    """q-partition count of ``n a1 + m a2`` in A2: ``q^max(n,m) + ... + q^(n+m)``."""
    if n < 0 or m < 0:
        raise ValueError("a2_qformula needs n, m >= 0")
    lo = max(n, m)
    return QPolynomial([0] * lo + [1] * (n + m - lo + 1))


def a3_qformula(m: int, n: int, k: int) -> QPolynomial:
    """q-partition count of ``m a1 + n a2 + k a3`` in A3 by the triple sum
    over ``f, d, e`` of ``q^(m+n+k-d-e-2f)``."""
    if min(m, n, k) < 0:
        raise ValueError("a3_qformula needs nonnegative inputs")
    top = m + n + k
    coeffs = [0] * (top + 1)
    for f in range(min(m, n, k) + 1):
        for d in range(min(m - f, n - f) + 1):
            for e in range(min(n - f - d, k - f) + 1):
                coeffs[top - d - e - 2 * f] += 1
    return QPolynomial(coeffs)


def chain_qformula(i: int, j: int) -> QPolynomial:
    """``q (1+q)^(j-i)``, the count for ``a_i + ... + a_j``."""
    if i < 1 or i > j:
        raise ValueError("chain_qformula needs 1 <= i <= j")
    return _Q * _ONE_PLUS_Q ** (j - i)


def headed_chain_qformula(x: int, y: int, ell: int) -> QPolynomial:
    """Count for ``x a1 + y a2 + a3 + ... + a_ell`` in type B."""
    if x < 1 or y < 1:
        raise ValueError("headed_chain_qformula needs x, y >= 1")
    if ell < 3:
        raise ValueError("headed_chain_qformula needs ell >= 3")
    head = a2_qformula(x - 1, y - 1) + a2_qformula(x, y - 1) + a2_qformula(x, y)
    return _Q * _ONE_PLUS_Q ** (ell - 3) * head


def alt_binomial_sum(r: int) -> QPolynomial:
    total = QPolynomial.zero()
    for m in range(r // 2 + 1):
        term = QPolynomial.monomial(1 + m, comb(r - m, m)) * _ONE_PLUS_Q ** (r - 2 * m)
        total = total + term if m % 2 == 0 else total - term
    return total


def alt_binomial_identity_check(r: int) -> bool:
    """Whether the alternating binomial sum collapses to ``q + ... + q^(r+1)``."""
    if r < 0:
        raise ValueError("r must be nonnegative")
    return alt_binomial_sum(r) == QPolynomial([0] + [1] * (r + 1))

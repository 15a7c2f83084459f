"""Dense polynomials in ``q`` with arbitrary-precision integer coefficients."""

from __future__ import annotations

from typing import Iterable, Sequence


class QPolynomial:
    """Immutable polynomial ``c0 + c1 q + ... + ck q^k``.

    Coefficients are stored densely by exponent with trailing zeros stripped,
    so the zero polynomial has an empty coefficient tuple.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    def __setattr__(self, name, value):
        raise AttributeError("QPolynomial is immutable")

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "QPolynomial":
        if exponent < 0:
            raise ValueError("negative exponent")
        return cls([0] * exponent + [coeff])

    @classmethod
    def zero(cls) -> "QPolynomial":
        return cls()

    @classmethod
    def one(cls) -> "QPolynomial":
        return cls((1,))

    @classmethod
    def from_packed(cls, packed: int, bits: int) -> "QPolynomial":
        """Unpack a Kronecker-packed value ``sum c_k 2^(k*bits)``, all ``c_k >= 0``."""
        mask = (1 << bits) - 1
        out = []
        while packed:
            out.append(packed & mask)
            packed >>= bits
        return cls(out)

    # arithmetic -----------------------------------------------------------

    def __add__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, x in enumerate(b):
            out[i] += x
        return QPolynomial(out)

    def __neg__(self) -> "QPolynomial":
        return QPolynomial(-x for x in self.coeffs)

    def __sub__(self, other: "QPolynomial") -> "QPolynomial":
        if not isinstance(other, QPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "QPolynomial":
        if isinstance(other, int):
            return QPolynomial(other * x for x in self.coeffs)
        if not isinstance(other, QPolynomial):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return QPolynomial()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return QPolynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QPolynomial":
        if n < 0:
            raise ValueError("negative power")
        result, base = QPolynomial.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, k: int) -> "QPolynomial":
        """Multiply by ``q^k``."""
        if not self.coeffs:
            return self
        return QPolynomial((0,) * k + self.coeffs)

    # queries --------------------------------------------------------------

    def __call__(self, q):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, QPolynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, int):
            return self.coeffs == QPolynomial((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        """Degree; ``-1`` for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def low_degree(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return -1

    def monomial_exponent(self) -> int | None:
        """Return ``k`` if this polynomial is exactly ``q^k``, else ``None``."""
        if self.coeffs and self.coeffs[-1] == 1 and not any(self.coeffs[:-1]):
            return len(self.coeffs) - 1
        return None

    def nonnegative(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __repr__(self) -> str:
        return f"QPolynomial({list(self.coeffs)!r})"

    def __str__(self) -> str:
        return format_qpoly(self)

    def to_json(self) -> list[int]:
        return list(self.coeffs)


def _term(c: int, k: int) -> str:
    if k == 0:
        return str(c)
    base = "q" if k == 1 else f"q^{k}"
    return base if c == 1 else f"{c}{base}"


def format_qpoly(p: QPolynomial) -> str:
    """Pure powers print as ``q^k`` (``1`` and ``q`` for k=0,1); anything else
    in ascending sparse form such as ``1 + 2q - q^3``."""
    if not p.coeffs:
        return "0"
    parts: list[str] = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            continue
        if not parts:
            parts.append(_term(c, k) if c > 0 else "-" + _term(-c, k))
        else:
            parts.append(("+ " if c > 0 else "- ") + _term(abs(c), k))
    return " ".join(parts)


def from_exponents(exponents: Sequence[int]) -> QPolynomial:
    """Sum of ``q^e`` over the given exponents (repeats accumulate)."""
    if not exponents:
        return QPolynomial()
    out = [0] * (max(exponents) + 1)
    for e in exponents:
        out[e] += 1
    return QPolynomial(out)

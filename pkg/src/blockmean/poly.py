"""Dense integer polynomials with exact (arbitrary-precision) coefficients.

Counting polynomials are indexed by subgraph order: ``coeffs[i]`` is the
number of counted objects of order ``i``.  All arithmetic is exact; no
floating point is used anywhere, so equality between polynomials is a
reliable test.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class IntPolynomial:
    """Immutable polynomial with Python-int coefficients.

    ``coeffs[i]`` is the coefficient of ``x**i``.  Trailing zeros are
    trimmed on construction, except that the zero polynomial keeps a
    single ``0`` coefficient.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        cs = [int(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, name, value):
        raise AttributeError("IntPolynomial is immutable")

    @staticmethod
    def zero() -> "IntPolynomial":
        return IntPolynomial([0])

    @staticmethod
    def monomial(power: int, coeff: int = 1) -> "IntPolynomial":
        """The polynomial ``coeff * x**power``."""
        if power < 0:
            raise ValueError("negative power")
        return IntPolynomial([0] * power + [coeff])

    @property
    def degree(self) -> int:
        """Degree of the polynomial; the zero polynomial has degree 0."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __add__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return IntPolynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            other = IntPolynomial([other])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        out = list(self.coeffs) + [0] * max(0, len(other.coeffs) - len(self.coeffs))
        for i, c in enumerate(other.coeffs):
            out[i] -= c
        return IntPolynomial(out)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial([c * other for c in self.coeffs])
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        out = [0] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca:
                for j, cb in enumerate(b):
                    if cb:
                        out[i + j] += ca * cb
        return IntPolynomial(out)

    __rmul__ = __mul__

    def shift_down(self, k: int) -> "IntPolynomial":
        """Exact division by ``x**k``; the low k coefficients must be zero."""
        if k < 0:
            raise ValueError("negative shift")
        if any(self.coeffs[:k]):
            raise ValueError("not divisible by x**%d" % k)
        return IntPolynomial(self.coeffs[k:] or [0])

    def eval_one(self) -> int:
        """Value at x = 1 (the total count)."""
        return sum(self.coeffs)

    def deriv_one(self) -> int:
        """Derivative evaluated at x = 1 (the order-weighted count)."""
        return sum(i * c for i, c in enumerate(self.coeffs))

    def __eq__(self, other) -> bool:
        return isinstance(other, IntPolynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __reduce__(self):
        return (IntPolynomial, (self.coeffs,))

    def __repr__(self) -> str:
        return "IntPolynomial(%r)" % list(self.coeffs)

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append("%dx" % c if c != 1 else "x")
            else:
                terms.append("%dx^%d" % (c, i) if c != 1 else "x^%d" % i)
        return " + ".join(terms) if terms else "0"

    def to_json(self) -> list[str]:
        """JSON-friendly form: array of decimal strings, index = order."""
        return [str(c) for c in self.coeffs]

    @staticmethod
    def from_json(data: Iterable[str]) -> "IntPolynomial":
        return IntPolynomial([int(s) for s in data])


def mean_from_poly(p: IntPolynomial) -> Fraction:
    """Mean order ``p'(1) / p(1)`` as an exact fraction."""
    n = p.eval_one()
    if n == 0:
        raise ValueError("mean of an empty collection")
    return Fraction(p.deriv_one(), n)

from fractions import Fraction

import pytest

from blockmean.poly import IntPolynomial, mean_from_poly


def test_trailing_zeros_trimmed():
    assert IntPolynomial([0, 1, 0, 0]).coeffs == (0, 1)
    assert IntPolynomial([0, 0]).coeffs == (0,)
    assert IntPolynomial([]).coeffs == (0,)


def test_arithmetic():
    p = IntPolynomial([0, 3, 2, 1])
    q = IntPolynomial([1, 1])
    assert (p + q).coeffs == (1, 4, 2, 1)
    assert (p - q).coeffs == (-1, 2, 2, 1)
    assert (q * q).coeffs == (1, 2, 1)
    assert (1 + IntPolynomial([0, 1])).coeffs == (1, 1)
    assert (2 * q).coeffs == (2, 2)


def test_monomial_and_shift():
    x = IntPolynomial.monomial(1)
    assert (x * x).coeffs == (0, 0, 1)
    assert (x * x).shift_down(1).coeffs == (0, 1)
    with pytest.raises(ValueError):
        IntPolynomial([0, 1, 1]).shift_down(2)


def test_eval_and_deriv():
    # 3x + 2x^2 + x^3: value 6 at 1, derivative 3 + 4 + 3 = 10.
    p = IntPolynomial([0, 3, 2, 1])
    assert p.eval_one() == 6
    assert p.deriv_one() == 10
    assert mean_from_poly(p) == Fraction(10, 6)


def test_mean_of_zero_polynomial_rejected():
    with pytest.raises(ValueError):
        mean_from_poly(IntPolynomial.zero())


def test_json_roundtrip():
    p = IntPolynomial([0, 10**30, 5])
    assert IntPolynomial.from_json(p.to_json()) == p


def test_str():
    assert str(IntPolynomial([0, 3, 2, 1])) == "3x + 2x^2 + x^3"
    assert str(IntPolynomial.zero()) == "0"


def test_immutability():
    p = IntPolynomial([0, 1])
    with pytest.raises(AttributeError):
        p.coeffs = (1,)

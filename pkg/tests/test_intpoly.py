"""Polynomial layer: arithmetic, division, cyclotomic tables.

Cyclotomic polynomials and totients are checked against the standard
closed forms for small indices.
"""
from fractions import Fraction

import pytest

from quiverlab.intpoly import (
    IntPolynomial,
    cyclotomic_factorization,
    cyclotomic_poly,
    euler_phi,
)

X = IntPolynomial.x()
ONE = IntPolynomial.one()


def poly(*coeffs):
    """Constant-first coefficients."""
    return IntPolynomial(coeffs)


def test_normalization_drops_leading_zeros():
    assert poly(1, 2, 0, 0) == poly(1, 2)
    assert poly(0, 0).is_zero
    assert IntPolynomial.zero().degree == -1


def test_degree_leading_constant():
    p = poly(1, -7, 1)
    assert p.degree == 2
    assert p.leading == 1
    assert p.constant == 1
    assert p.is_monic
    assert p.is_integral


def test_str_rendering():
    assert str(poly(1, -7, 1)) == "x^2 - 7x + 1"
    assert str(poly(-1, 0, 1)) == "x^2 - 1"
    assert str(poly(3)) == "3"
    assert str(IntPolynomial.zero()) == "0"


def test_arithmetic():
    p = poly(1, 1)
    q = poly(-1, 1)
    assert p + q == poly(0, 2)
    assert p - q == poly(2)
    assert p * q == poly(-1, 0, 1)
    assert (X ** 3).degree == 3


def test_divmod_exact_and_remainder():
    p = poly(-1, 0, 0, 1)  # x^3 - 1
    d = poly(-1, 1)
    q, r = divmod(p, d)
    assert r.is_zero
    assert q == poly(1, 1, 1)
    q, r = divmod(poly(1, 0, 1), poly(0, 1))
    assert q == poly(0, 1)
    assert r == poly(1)


def test_gcd_and_lcm():
    a = poly(-1, 1) * poly(1, 1)
    b = poly(-1, 1) * poly(2, 1)
    g = a.gcd(b)
    assert g == poly(-1, 1)
    l = a.lcm(b)
    assert l == poly(-1, 1) * poly(1, 1) * poly(2, 1)


def test_derivative_and_evaluate():
    p = poly(1, -7, 1)
    assert p.derivative() == poly(-7, 2)
    assert p.evaluate(Fraction(0)) == 1
    assert p.evaluate(Fraction(7)) == 1


def test_monic_rescales():
    p = poly(2, 0, 2)
    assert p.monic() == poly(1, 0, 1)


def test_reflect_substitutes_negated_variable():
    # p(-x): roots 1, 2 become -1, -2
    assert poly(2, -3, 1).reflect() == poly(2, 3, 1)
    assert poly(-2, 1).reflect() == poly(-2, -1)
    assert poly(1, 0, -1, 0, 1).reflect() == poly(1, 0, -1, 0, 1)
    p = poly(2, -3, 1)
    assert p.reflect().evaluate(Fraction(-1)) == p.evaluate(Fraction(1))


def test_euler_phi_first_twelve():
    assert [euler_phi(n) for n in range(1, 13)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4]


def test_cyclotomic_poly_small_indices():
    assert cyclotomic_poly(1) == poly(-1, 1)
    assert cyclotomic_poly(2) == poly(1, 1)
    assert cyclotomic_poly(3) == poly(1, 1, 1)
    assert cyclotomic_poly(4) == poly(1, 0, 1)
    assert cyclotomic_poly(6) == poly(1, -1, 1)
    assert cyclotomic_poly(12) == poly(1, 0, -1, 0, 1)
    assert cyclotomic_poly(105).degree == euler_phi(105)


def test_product_over_divisors_recovers_power_minus_one():
    for n in (1, 2, 6, 12):
        prod = ONE
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        expect = IntPolynomial([-1] + [0] * (n - 1) + [1])
        assert prod == expect


def test_cyclotomic_factorization_tables():
    assert cyclotomic_factorization(poly(1, -1, 1)) == ((6, 1),)
    assert cyclotomic_factorization(poly(1, -2, 1)) == ((1, 2),)
    assert cyclotomic_factorization(poly(1, 1, 1) * poly(-1, 1)) == ((1, 1), (3, 1))
    assert cyclotomic_factorization(poly(1, -7, 1)) is None
    assert cyclotomic_factorization(poly(2, 1)) is None


def test_eval_matrix_on_companion_block():
    from quiverlab.cyclo import companion_matrix
    from quiverlab.ratmat import RatMatrix

    p = poly(1, -7, 1)
    m = companion_matrix(p)
    assert p.eval_matrix(m) == RatMatrix.zeros(2, 2)

"""Exact polynomial arithmetic and q-analog utilities."""

from __future__ import annotations

from fractions import Fraction

import pytest

from coxfact.polynomials import (
    integer_roots,
    poly_add,
    poly_div_exact,
    poly_eval,
    poly_mul,
    poly_scale,
    q_integer,
    q_product_ratio,
)


def test_mul_add_eval():
    a = (1, 1)          # 1 + t
    b = (-2, 0, 1)      # t^2 - 2
    assert poly_mul(a, b) == (-2, -2, 1, 1)
    assert poly_add(a, b) == (-1, 1, 1)
    assert poly_eval(poly_mul(a, b), 3) == (1 + 3) * (9 - 2)
    assert poly_scale(a, 5) == (5, 5)
    assert poly_add((1, 2), (0, -2)) == (1,)


def test_div_exact_roundtrip():
    a = (3, 0, 1, 2)
    b = (-1, 4)
    prod = poly_mul(a, b)
    assert poly_div_exact(prod, a) == b
    assert poly_div_exact(prod, b) == a
    with pytest.raises(ValueError):
        poly_div_exact((1, 1, 1), (1, 1))


def test_div_exact_fractional_quotient():
    assert poly_div_exact((1, 3, 2), (1, 1)) == (1, 2)
    assert poly_div_exact((1, 2), (2,)) == (Fraction(1, 2), 1)


def test_q_integers():
    assert q_integer(1) == (1,)
    assert q_integer(4) == (1, 1, 1, 1)
    with pytest.raises(ValueError):
        q_integer(0)


def test_q_product_ratio_binomial():
    # the Gaussian binomial [4 choose 2]_q = 1 + q + 2q^2 + q^3 + q^4
    quo = q_product_ratio([1, 2, 3, 4], [1, 2, 1, 2])
    assert quo == (1, 1, 2, 1, 1)
    assert poly_eval(quo, 1) == 6


def test_q_product_ratio_rejects_non_polynomial():
    with pytest.raises(ValueError):
        q_product_ratio([3], [2])


def test_integer_roots_splitting():
    # (t-1)(t-2)(t-3)
    assert integer_roots((-6, 11, -6, 1)) == (1, 2, 3)
    # t^2 (t-5)
    assert integer_roots((0, 0, -5, 1)) == (0, 0, 5)
    # (t+2)^2
    assert integer_roots((4, 4, 1)) == (-2, -2)
    assert integer_roots((7,)) == ()


def test_integer_roots_failure_cases():
    assert integer_roots((1, 0, 1)) is None        # t^2 + 1
    assert integer_roots((-2, 0, 1)) is None       # t^2 - 2
    assert integer_roots((1, 2)) is None           # non-monic 2t + 1

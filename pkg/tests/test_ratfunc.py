"""Polynomials and rational functions over Q, plus series reconstruction."""

from fractions import Fraction

import pytest

from knopf.errors import InputError
from knopf.ratfunc import Poly, RatFunc, det_poly_matrix, reconstruct_rational


def test_poly_arithmetic():
    p = Poly([1, 1])      # 1 + t
    q = Poly([1, -1])     # 1 - t
    assert (p * q).coeffs == (1, 0, -1)
    assert (p + q).coeffs == (2,)
    assert p.pow(2).coeffs == (1, 2, 1)
    assert Poly([0, 0]).degree == -1


def test_poly_divmod_roundtrip():
    a = Poly([1, 0, -2, 1])
    b = Poly([1, 1])
    q, r = a.divmod(b)
    assert b * q + r == a
    assert r.degree < b.degree


def test_ratfunc_reduces_common_factors():
    # (1 - t^2)/(1 - t) reduces to 1 + t
    r = RatFunc(Poly([1, 0, -1]), Poly([1, -1]))
    assert r.num == Poly([1, 1])
    assert r.den == Poly([1])


def test_series_coeffs_geometric():
    r = RatFunc(Poly([1]), Poly([1, -1]))
    assert r.series_coeffs(5) == [1, 1, 1, 1, 1]


def test_degree_difference_is_a_invariant():
    # (1 + t^2)/(1 - t^2)^3 has degree 2 - 6 = -4
    r = RatFunc(Poly([1, 0, 1]), Poly([1, 0, -1]).pow(3))
    assert r.degree_difference() == -4


def test_series_normal_form_constant_term_one():
    r = RatFunc(Poly([1, 0, 1]), Poly([1, 0, -1]).pow(3))
    num, den = r.series_normal_form()
    assert den.coeffs[0] == 1
    assert num == Poly([1, 0, 1])
    # value agreement: num/den must reproduce the series
    back = RatFunc(num, den)
    assert back.series_coeffs(8) == r.series_coeffs(8)


def test_reconstruct_rational_roundtrip():
    den = Poly([1, 0, -1]).pow(3)
    target = RatFunc(Poly([1, 0, 1]), den)
    window = target.series_coeffs(12)
    rec = reconstruct_rational(window, den)
    assert rec == target


def test_reconstruct_rational_rejects_short_window():
    den = Poly([1, -1]).pow(4)
    series = RatFunc(Poly([1]), den).series_coeffs(3)
    with pytest.raises(InputError):
        reconstruct_rational(series, den)


def test_reconstruct_rational_rejects_wrong_denominator():
    # series of 1/(1-t)^2 cannot be matched against denominator (1-t)
    series = RatFunc(Poly([1]), Poly([1, -1]).pow(2)).series_coeffs(10)
    with pytest.raises(InputError):
        reconstruct_rational(series, Poly([1, -1]))


def test_det_poly_matrix():
    t = Poly([0, 1])
    one = Poly([1])
    m = [[one, t], [t, one]]
    assert det_poly_matrix(m) == Poly([1, 0, -1])


def test_ratfunc_equality_and_arithmetic():
    a = RatFunc(Poly([1]), Poly([1, -1]))
    b = RatFunc(Poly([1]), Poly([1, 1]))
    s = a + b
    # 1/(1-t) + 1/(1+t) = 2/(1-t^2)
    assert s == RatFunc(Poly([2]), Poly([1, 0, -1]))
    assert a.scale(Fraction(1, 2)) + a.scale(Fraction(1, 2)) == a

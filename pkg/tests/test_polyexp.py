"""Exact radial-integral algebra against factorials and quadrature."""
import math
from fractions import Fraction

import numpy as np
import pytest
from scipy.integrate import dblquad, quad

from varpert.polyexp import PolyExp, polyexp_moment, slater_radial

ONE_S = PolyExp.build([(2, 0)], 1)            # 2 e^-r, the unit-charge 1s radial
BARE = PolyExp.build([(1, 0)], 1)


def test_build_normalizes_to_fractions():
    f = PolyExp.build([(0.5, 1), (Fraction(1, 3), 0)], Fraction(3, 2), scale=2.0)
    assert f.terms == ((Fraction(1, 2), 1), (Fraction(1, 3), 0))
    assert f.gamma == Fraction(3, 2)
    assert f.scale == 2.0


def test_build_validation():
    with pytest.raises(ValueError, match="gamma"):
        PolyExp.build([(1, 0)], 0)
    with pytest.raises(ValueError, match="powers"):
        PolyExp.build([(1, -1)], 1)


def test_pointwise_evaluation():
    f = PolyExp.build([(1, 0), (-2, 1)], 2, scale=3.0)
    r = np.array([0.0, 0.5, 1.0])
    expected = 3.0 * (1.0 - 2.0 * r) * np.exp(-2.0 * r)
    assert np.allclose(f(r), expected, rtol=1e-14)


@pytest.mark.parametrize("p, expected", [(0, 0.5), (1, 0.25), (2, 0.25),
                                         (3, 0.375)])
def test_moment_pure_exponential(p, expected):
    # int r^p exp(-2r) dr = p! / 2^(p+1)
    assert polyexp_moment(BARE, BARE, p) == expected


def test_moment_against_quadrature():
    f = PolyExp.build([(1, 0), (-1, 2)], Fraction(4, 3), scale=1.7)
    g = PolyExp.build([(3, 1)], Fraction(1, 2), scale=0.4)
    val, _ = quad(lambda r: r ** 2 * f(r) * g(r), 0.0, 60.0, limit=200)
    assert polyexp_moment(f, g, 2) == pytest.approx(val, rel=1e-10)


def test_moment_rejects_divergent_power():
    with pytest.raises(ValueError, match="diverges"):
        polyexp_moment(BARE, BARE, -1)


def test_one_s_norm_is_unity():
    assert polyexp_moment(ONE_S, ONE_S, 2) == pytest.approx(1.0, abs=1e-15)


@pytest.mark.parametrize("k", [0, 1, 2])
def test_slater_against_quadrature(k):
    # arbitrary non-hydrogenic legs keep this oracle independent; the
    # domain is split at r1 = r2 so each piece is smooth
    a = PolyExp.build([(1, 0)], 1)
    b = PolyExp.build([(1, 1)], Fraction(3, 2))
    c = PolyExp.build([(2, k), (-1, k + 1)], 1)
    d = PolyExp.build([(1, k)], 2)

    def f(r1):
        return r1 * r1 * a(r1) * c(r1)

    def g(r2):
        return r2 * r2 * b(r2) * d(r2)

    lower, _ = dblquad(lambda r2, r1: f(r1) * g(r2) * r2 ** k / r1 ** (k + 1),
                       0.0, 30.0, 0.0, lambda r1: r1, epsrel=1e-11)
    upper, _ = dblquad(lambda r2, r1: f(r1) * g(r2) * r1 ** k / r2 ** (k + 1),
                       0.0, 30.0, lambda r1: r1, 30.0, epsrel=1e-11)
    assert slater_radial(k, a, b, c, d) == pytest.approx(lower + upper,
                                                         rel=1e-9)


def test_slater_swap_symmetry():
    a = PolyExp.build([(1, 1)], 1)
    b = PolyExp.build([(1, 0), (1, 1)], Fraction(5, 4))
    c = PolyExp.build([(2, 1)], Fraction(3, 4))
    d = PolyExp.build([(1, 1)], 2)
    assert slater_radial(1, a, b, c, d) == pytest.approx(
        slater_radial(1, b, a, d, c), rel=1e-13)


def test_slater_monopole_one_s():
    # R^0(1s,1s;1s,1s) = 5/8 at unit charge
    assert slater_radial(0, ONE_S, ONE_S, ONE_S, ONE_S) == pytest.approx(
        0.625, rel=1e-13)


def test_slater_rejects_negative_multipole():
    with pytest.raises(ValueError):
        slater_radial(-1, ONE_S, ONE_S, ONE_S, ONE_S)


def test_slater_rejects_singular_kernel():
    # s-type legs cannot support a k = 2 kernel at the origin
    with pytest.raises(ValueError, match="kernel"):
        slater_radial(2, BARE, BARE, BARE, BARE)


def test_scale_factors_multiply_through():
    scaled = PolyExp.build([(1, 0)], 1, scale=3.0)
    assert polyexp_moment(scaled, BARE, 2) == pytest.approx(
        3.0 * polyexp_moment(BARE, BARE, 2), rel=1e-15)
    assert slater_radial(0, scaled, ONE_S, ONE_S, ONE_S) == pytest.approx(
        3.0 * slater_radial(0, BARE, ONE_S, ONE_S, ONE_S), rel=1e-15)

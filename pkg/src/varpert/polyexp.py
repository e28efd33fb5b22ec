"""Closed-form radial integral algebra over polynomial-times-exponential terms.

A radial factor f(r) = scale * sum_j c_j r^j exp(-gamma r) covers every
hydrogenic function and every integrand this package meets. Coefficients and
decay rates are exact rationals; the single float ``scale`` absorbs the
irrational normalization, so one-dimensional moments and two-dimensional
Slater kernels reduce to exact factorial sums with at most a few ulp of
rounding at the final conversion. Orthogonality integrals in particular
come out exactly zero.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

Rational = Fraction | int


@dataclass(frozen=True)
class PolyExp:
    """Radial function scale * sum_j c_j r^j exp(-gamma r), r in a0.

    ``terms`` holds (coefficient, power) pairs with exact rational
    coefficients and integer powers >= 0; ``gamma`` is the exact rational
    decay rate in 1/a0; ``scale`` is a plain float multiplier.
    """

    terms: tuple[tuple[Fraction, int], ...]
    gamma: Fraction
    scale: float = 1.0

    def __post_init__(self) -> None:
        if not self.gamma > 0:
            raise ValueError("gamma must be > 0")
        for coeff, power in self.terms:
            if not isinstance(power, int) or power < 0:
                raise ValueError(f"powers must be integers >= 0, got {power}")

    @classmethod
    def build(cls, terms: Iterable[tuple[Rational, int]], gamma: Rational,
              scale: float = 1.0) -> "PolyExp":
        """Normalize inputs to exact ``Fraction`` coefficients."""
        tt = tuple((Fraction(c), int(p)) for c, p in terms)
        return cls(terms=tt, gamma=Fraction(gamma), scale=float(scale))

    def __call__(self, r):
        """Evaluate pointwise; accepts scalars or numpy arrays."""
        import numpy as np

        g = float(self.gamma)
        acc = 0.0
        for coeff, power in self.terms:
            acc = acc + float(coeff) * np.power(r, power)
        return self.scale * acc * np.exp(-g * np.asarray(r, dtype=float))


def _product(f: PolyExp, g: PolyExp, extra_power: int = 0) -> tuple[dict[int, Fraction], Fraction]:
    """Pointwise product f*g*r^extra_power as {power: coeff} plus decay rate."""
    out: dict[int, Fraction] = {}
    for cf, pf in f.terms:
        for cg, pg in g.terms:
            p = pf + pg + extra_power
            out[p] = out.get(p, Fraction(0)) + cf * cg
    return out, f.gamma + g.gamma


def polyexp_moment(f: PolyExp, g: PolyExp, p: int) -> float:
    """Exact integral of r^p f(r) g(r) over [0, inf).

    Termwise int r^k exp(-gamma r) dr = k!/gamma^(k+1); every combined
    power k must be >= 0 for convergence at the origin.
    """
    prod, gam = _product(f, g, p)
    total = Fraction(0)
    for power, coeff in prod.items():
        if power < 0:
            raise ValueError(f"combined power {power} < 0, integral diverges")
        total += coeff * math.factorial(power) / gam ** (power + 1)
    return f.scale * g.scale * float(total)


def _lower_tail(m: int, nu: Fraction) -> list[tuple[Fraction, int]]:
    """Coefficients of exp(-nu x) sum_i (m!/i!) x^i / nu^(m+1-i).

    This is the subtracted part of the lower incomplete integral
    int_0^x t^m exp(-nu t) dt = m!/nu^(m+1) - exp(-nu x) * (that sum).
    """
    fact_m = math.factorial(m)
    return [(Fraction(fact_m, math.factorial(i)) / nu ** (m + 1 - i), i)
            for i in range(m + 1)]


def slater_radial(k: int, a: PolyExp, b: PolyExp, c: PolyExp, d: PolyExp) -> float:
    """Slater integral R^k with legs a, c on r1 and legs b, d on r2.

    Computes the double integral of
    r1^2 r2^2 a(r1) c(r1) b(r2) d(r2) r_<^k / r_>^(k+1)
    in closed form. The inner r2 integral splits at r1 into a lower piece
    (kernel r2^k/r1^(k+1)) and an upper piece (kernel r1^k/r2^(k+1)); both
    reduce through the incomplete-factorial identity in ``_lower_tail`` to
    single factorial sums, so there is no quadrature anywhere.

    Symmetry: swapping (a, b) together with (c, d) relabels r1 and r2 and
    leaves the value unchanged.
    """
    if k < 0:
        raise ValueError("multipole order k must be >= 0")
    p_terms, mu = _product(a, c, 2)
    g_terms, nu = _product(b, d, 2)
    total = Fraction(0)
    for pg, cg in g_terms.items():
        # lower piece: full moment minus the exponential tail at r1
        m = pg + k
        whole = Fraction(math.factorial(m)) / nu ** (m + 1)
        tail = _lower_tail(m, nu)
        for pp, cp in p_terms.items():
            q = pp - (k + 1)
            if q < 0:
                raise ValueError(
                    f"kernel power k={k} too high for r1-side power {pp}")
            total += cp * cg * whole * math.factorial(q) / mu ** (q + 1)
            for coef, i in tail:
                qi = q + i
                total -= (cp * cg * coef
                          * math.factorial(qi) / (mu + nu) ** (qi + 1))
        # upper piece: r1^k times the exponential tail of order pg - k - 1
        mm = pg - k - 1
        if mm < 0:
            raise ValueError(
                f"kernel power k={k} too high for r2-side power {pg}")
        for coef, i in _lower_tail(mm, nu):
            for pp, cp in p_terms.items():
                qi = pp + k + i
                total += (cp * cg * coef
                          * math.factorial(qi) / (mu + nu) ** (qi + 1))
    return a.scale * b.scale * c.scale * d.scale * float(total)

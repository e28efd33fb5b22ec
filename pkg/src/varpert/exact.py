"""Independent eigenvalue oracles for -kappa psi'' + (k x^2 + b x^4) psi = E psi.

Two deliberately different routes: adaptive Runge-Kutta-Fehlberg shooting on
the half line with parity initial conditions, and truncated-basis
diagonalization of the band Hamiltonian. Agreement between them is the
package's definition of "exact" for this potential.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy.linalg import eig_banded

from .model import AnharmonicSpec, hbar_omega
from .oscillator import OscBasis, build_hamiltonian


class ConvergenceError(RuntimeError):
    """Eigenvalue search failed; carries search diagnostics."""

    def __init__(self, message: str, **diagnostics: object) -> None:
        super().__init__(message)
        self.diagnostics = diagnostics


@dataclass(frozen=True)
class ShootingConfig:
    """Numerical knobs of the shooting search.

    ``x_max`` overrides the integration half-width when positive; by default
    the width is sized per energy so that the potential wall both exceeds
    E by 25 harmonic quanta and accumulates 25 WKB decay constants beyond
    the turning point, keeping boundary contamination of the eigenvalue
    below 1e-10. ``abs_tol`` is the local ODE error tolerance (at most
    1e-6), ``energy_tol`` the bisection width on E, and ``max_iter`` the
    combined bracket-growth and bisection budget.
    """

    x_max: float = 0.0
    abs_tol: float = 1e-10
    energy_tol: float = 1e-9
    max_iter: int = 240

    def __post_init__(self) -> None:
        if not 0.0 < self.abs_tol <= 1e-6:
            raise ValueError("abs_tol must lie in (0, 1e-6]")
        if not self.energy_tol > 0.0:
            raise ValueError("energy_tol must be > 0")
        if self.max_iter < 8:
            raise ValueError("max_iter must be >= 8")


# Fehlberg 4(5) coefficients: stage nodes, stage weights, 5th-order
# combination, and the embedded error row.
_RKF_STAGES = (
    (),
    (1.0 / 4.0,),
    (3.0 / 32.0, 9.0 / 32.0),
    (1932.0 / 2197.0, -7200.0 / 2197.0, 7296.0 / 2197.0),
    (439.0 / 216.0, -8.0, 3680.0 / 513.0, -845.0 / 4104.0),
    (-8.0 / 27.0, 2.0, -3544.0 / 2565.0, 1859.0 / 4104.0, -11.0 / 40.0),
)
_RKF_NODES = (0.0, 0.25, 0.375, 12.0 / 13.0, 1.0, 0.5)
_RKF_B5 = (16.0 / 135.0, 0.0, 6656.0 / 12825.0, 28561.0 / 56430.0,
           -9.0 / 50.0, 2.0 / 55.0)
_RKF_ERR = (1.0 / 360.0, 0.0, -128.0 / 4275.0, -2197.0 / 75240.0,
            1.0 / 50.0, 2.0 / 55.0)


def _integrate(spec: AnharmonicSpec, energy: float, parity: int,
               x_max: float, abs_tol: float) -> tuple[float, int]:
    """March psi from 0 to x_max; return (psi(x_max), node count)."""
    k = spec.stiffness_k
    b = spec.quartic_b
    inv_kappa = 1.0 / spec.constants.kappa

    def rhs(x: float, y0: float, y1: float) -> tuple[float, float]:
        x2 = x * x
        return y1, (k * x2 + b * x2 * x2 - energy) * inv_kappa * y0

    y0, y1 = (1.0, 0.0) if parity == 0 else (0.0, 1.0)
    x = 0.0
    h = min(1e-3, 0.01 * x_max)
    nodes = 0
    last_sign = 1.0 if parity == 0 else 1.0  # first motion is positive
    while x < x_max:
        if x + h > x_max:
            h = x_max - x
        ka = [0.0] * 6
        kb = [0.0] * 6
        for i in range(6):
            ya, yb = y0, y1
            for j, a in enumerate(_RKF_STAGES[i]):
                ya += h * a * ka[j]
                yb += h * a * kb[j]
            ka[i], kb[i] = rhs(x + _RKF_NODES[i] * h, ya, yb)
        n0 = y0 + h * sum(w * v for w, v in zip(_RKF_B5, ka))
        n1 = y1 + h * sum(w * v for w, v in zip(_RKF_B5, kb))
        e0 = h * sum(w * v for w, v in zip(_RKF_ERR, ka))
        e1 = h * sum(w * v for w, v in zip(_RKF_ERR, kb))
        err = max(abs(e0), abs(e1))
        tol = abs_tol * max(1.0, abs(n0), abs(n1))
        if err <= tol or h <= 1e-12:
            x += h
            y0, y1 = n0, n1
            if y0 != 0.0:
                if (y0 < 0.0) != (last_sign < 0.0):
                    nodes += 1
                last_sign = y0
        if err > 0.0:
            h *= min(4.0, max(0.1, 0.9 * (tol / err) ** 0.2))
        else:
            h *= 4.0
    return y0, nodes


def _default_x_max(spec: AnharmonicSpec, energy: float) -> float:
    """Half-width combining the energy-margin and WKB-decay criteria."""
    k = spec.stiffness_k
    b = spec.quartic_b
    kappa = spec.constants.kappa
    hw = hbar_omega(spec)

    def wall(v: float) -> float:
        # outer solution of k x^2 + b x^4 = v
        if b == 0.0:
            return math.sqrt(v / k)
        x2 = (-k + math.sqrt(k * k + 4.0 * b * v)) / (2.0 * b)
        return math.sqrt(x2)

    x_margin = wall(energy + 25.0 * hw)
    # march the decay integral int sqrt((V-E)/kappa) dx to 25
    x = wall(max(energy, 1e-12))
    dx = 0.01 * max(x, 1.0)
    s = 0.0
    f_here = 0.0
    while s < 25.0:
        x_next = x + dx
        v_next = k * x_next * x_next + b * x_next ** 4 - energy
        f_next = math.sqrt(max(v_next, 0.0) / kappa)
        s += 0.5 * (f_here + f_next) * dx
        x, f_here = x_next, f_next
    return max(x, x_margin)


def shoot_eigenvalue(spec: AnharmonicSpec, n: int,
                     cfg: ShootingConfig = ShootingConfig()) -> float:
    """n-th eigenvalue by parity shooting and node-count bisection.

    Even n integrates with psi(0)=1, psi'(0)=0, odd n with psi(0)=0,
    psi'(0)=1, so only [0, x_max] is traversed and the target node count on
    the open half line is floor(n/2). The eigenvalue is where a node enters
    through the far boundary, so bisecting the energy on that count change
    is equivalent to a sign change of psi(x_max) and converges to within
    ``energy_tol``.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    parity = n % 2
    target = n // 2
    hw = hbar_omega(spec)
    budget = cfg.max_iter

    e_lo = 0.0
    e_hi = hw * (n + 1.5)
    x_max = cfg.x_max if cfg.x_max > 0.0 else _default_x_max(spec, e_hi)

    def nodes_at(e: float) -> int:
        return _integrate(spec, e, parity, x_max, cfg.abs_tol)[1]

    while nodes_at(e_hi) <= target:
        budget -= 1
        if budget <= 0:
            raise ConvergenceError(
                f"no bracket for level n={n} within iteration budget",
                n=n, e_hi=e_hi, nodes=nodes_at(e_hi), target=target)
        e_lo = e_hi
        e_hi *= 1.4
        if cfg.x_max <= 0.0:
            x_max = _default_x_max(spec, e_hi)

    lo, hi = e_lo, e_hi
    while hi - lo > cfg.energy_tol:
        budget -= 1
        if budget <= 0:
            raise ConvergenceError(
                f"bisection budget exhausted for level n={n}",
                n=n, e_lo=lo, e_hi=hi, width=hi - lo,
                energy_tol=cfg.energy_tol)
        mid = 0.5 * (lo + hi)
        if nodes_at(mid) > target:
            hi = mid
        else:
            lo = mid
    return 0.5 * (lo + hi)


def diag_eigenvalues(spec: AnharmonicSpec, dim: int = 120,
                     basis_u: float | None = None,
                     n_levels: int = 4) -> Sequence[float]:
    """Lowest eigenvalues from band diagonalization, ascending.

    ``basis_u`` selects the basis quantum (hbar omega when omitted); results
    are basis independent once ``dim`` is converged. Requires
    dim >= n_levels + 20 so the top of the truncated spectrum cannot
    contaminate the requested levels.
    """
    if dim < n_levels + 20:
        raise ValueError(f"dim must be >= n_levels + 20, got {dim}")
    u = hbar_omega(spec) if basis_u is None else basis_u
    basis = OscBasis(hbar_Omega=u, kappa=spec.constants.kappa)
    ham = build_hamiltonian(spec, basis, dim)
    try:
        w = eig_banded(ham.bands, lower=True, eigvals_only=True,
                       select="i", select_range=(0, n_levels - 1))
    except np.linalg.LinAlgError as exc:
        raise ConvergenceError(f"band eigensolver failed: {exc}",
                               dim=dim, basis_u=u) from exc
    return [float(v) for v in w]

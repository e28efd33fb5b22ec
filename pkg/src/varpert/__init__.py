"""Variational-perturbation energies for quartic oscillators and helium.

The quartic anharmonic oscillator V(x) = k x^2 + b x^4 is treated by
optimizing the harmonic reference frequency separately for every level
and then applying Rayleigh-Schroedinger perturbation theory in the
optimized basis. The same machinery, with a screened nuclear charge as
the variational parameter, gives helium ground and excited state
energies. Two independent exact oracles (radial shooting and banded
diagonalization) validate every closed form.
"""
from .anharmonic import (OmegaSolution, energy_conventional_pt,
                         energy_first_order, energy_present,
                         energy_variational, pt_divergent,
                         second_order_closed_form, second_order_sum,
                         solve_omega)
from .cache import IntegralCache, cache_integrals
from .exact import (ConvergenceError, ShootingConfig, diag_eigenvalues,
                    shoot_eigenvalue)
from .helium import (HeliumChannel, HeliumResult, enumerate_channels,
                     excited_triplet_energy, ground_state, hydrogenic_radial,
                     optimal_zstar_excited, optimal_zstar_ground,
                     second_order_correction, variational_ground_energy)
from .model import (AnharmonicSpec, Constants, LevelResult, hbar_omega,
                    make_anharmonic_spec)
from .oscillator import (BandMatrix, OscBasis, build_hamiltonian,
                         hprime_element, x2_element, x4_element)
from .polyexp import PolyExp, polyexp_moment, slater_radial
from .reports import ReportDocument, RunConfig, run_helium, run_table

__version__ = "0.1.0"

__all__ = [
    "AnharmonicSpec",
    "BandMatrix",
    "Constants",
    "ConvergenceError",
    "HeliumChannel",
    "HeliumResult",
    "IntegralCache",
    "LevelResult",
    "OmegaSolution",
    "OscBasis",
    "PolyExp",
    "ReportDocument",
    "RunConfig",
    "ShootingConfig",
    "build_hamiltonian",
    "cache_integrals",
    "diag_eigenvalues",
    "energy_conventional_pt",
    "energy_first_order",
    "energy_present",
    "energy_variational",
    "enumerate_channels",
    "excited_triplet_energy",
    "ground_state",
    "hbar_omega",
    "hprime_element",
    "hydrogenic_radial",
    "make_anharmonic_spec",
    "optimal_zstar_excited",
    "optimal_zstar_ground",
    "polyexp_moment",
    "pt_divergent",
    "run_helium",
    "run_table",
    "second_order_closed_form",
    "second_order_correction",
    "second_order_sum",
    "shoot_eigenvalue",
    "slater_radial",
    "solve_omega",
    "variational_ground_energy",
    "x2_element",
    "x4_element",
    "__version__",
]

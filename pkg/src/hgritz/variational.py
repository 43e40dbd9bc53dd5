"""Choice of the basis width parameter alpha.

For the harmonic oscillator there is a closed-form special value
alpha = m omega / hbar at which the Hamiltonian matrix is exactly diagonal
and every truncation reproduces the exact spectrum.  For everything else the
width is chosen variationally: scan a grid of alphas, or minimize the ground
eigenvalue over a bracket with golden-section search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .basis import BasisSpec, Constants, _require_positive
from .eigensolver import eigh
from .errors import ConvergenceError
from .operators import PotentialSpec, Spectrum, hamiltonian_matrix
from .spectral import ConvergenceTable

_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


@dataclass(frozen=True, eq=False)
class AlphaScanResult:
    """Spectra over an ascending alpha grid at fixed dim, plus the grid argmin."""

    alphas: np.ndarray
    energies: tuple[np.ndarray, ...]
    argmin_alpha: float


@dataclass(frozen=True)
class MinimizeResult:
    """Golden-section minimizer of the ground eigenvalue over alpha.

    boundary is set when the search converged onto a bracket endpoint, i.e.
    the objective looked monotone on the bracket and the returned point is a
    boundary solution rather than an interior minimum.
    """

    alpha_star: float
    energy: float
    boundary: bool


def solve_spectrum(pot: PotentialSpec, constants: Constants, alpha: float,
                   dim: int) -> Spectrum:
    """One secular-equation solve at the given width parameter."""
    spec = BasisSpec(alpha, constants.hbar, constants.mass)
    result = eigh(hamiltonian_matrix(spec, pot, dim))
    return Spectrum(result.eigenvalues, result.eigenvectors)


def exact_diagonal_alpha(omega: float, constants: Constants = Constants()) -> float:
    """The width m omega / hbar that makes the harmonic matrix exactly diagonal."""
    _require_positive("omega", omega)
    return constants.mass * float(omega) / constants.hbar


def scan_alpha(pot: PotentialSpec, constants: Constants, dim: int,
               alphas) -> AlphaScanResult:
    """Full spectrum per alpha over a grid; argmin is over the ground level."""
    grid = np.asarray(alphas, dtype=float)
    if grid.ndim != 1 or grid.size == 0:
        raise ValueError("need a non-empty alpha grid")
    if np.any(~np.isfinite(grid)) or np.any(grid <= 0.0):
        raise ValueError("alphas must be positive finite reals")
    grid = np.sort(grid)
    energies = []
    for a in grid:
        try:
            energies.append(solve_spectrum(pot, constants, float(a), dim).eigenvalues)
        except ConvergenceError as err:
            raise ConvergenceError(
                f"eigensolver failed at alpha = {a!r}: {err}",
                dim=err.dim, index=err.index) from err
    ground = np.array([e[0] for e in energies])
    argmin = float(grid[int(np.argmin(ground))])
    return AlphaScanResult(grid, tuple(energies), argmin)


def minimize_alpha(pot: PotentialSpec, constants: Constants, dim: int,
                   bracket: tuple[float, float], *, levels: int = 1,
                   rel_tol: float = 1e-8,
                   width_floor: float = 1e-12) -> MinimizeResult:
    """Golden-section search for the alpha minimizing the ground eigenvalue.

    The objective is the lowest eigenvalue (optionally the sum of the lowest
    `levels`, which is exposed but not the default) and is assumed unimodal
    on the bracket; a monotone objective converges onto an endpoint and is
    flagged as a boundary solution instead of raising.  The bracket shrinks
    until its width falls below max(rel_tol * alpha, width_floor).
    """
    lo, hi = (float(bracket[0]), float(bracket[1]))
    if not (0.0 < lo < hi):
        raise ValueError(f"need 0 < lo < hi, got ({lo}, {hi})")
    if levels < 1 or levels > dim:
        raise ValueError("levels must lie in [1, dim]")

    def objective(a):
        w = solve_spectrum(pot, constants, a, dim).eigenvalues
        return float(w[:levels].sum())

    lo0, hi0 = lo, hi
    m1 = hi - _INVPHI * (hi - lo)
    m2 = lo + _INVPHI * (hi - lo)
    f1 = objective(m1)
    f2 = objective(m2)
    while hi - lo > max(rel_tol * 0.5 * (lo + hi), width_floor):
        if f1 < f2:
            hi, m2, f2 = m2, m1, f1
            m1 = hi - _INVPHI * (hi - lo)
            f1 = objective(m1)
        else:
            lo, m1, f1 = m1, m2, f2
            m2 = lo + _INVPHI * (hi - lo)
            f2 = objective(m2)
    alpha_star = 0.5 * (lo + hi)
    energy = float(solve_spectrum(pot, constants, alpha_star, dim).eigenvalues[0])
    edge = 2.0 * max(rel_tol * alpha_star, width_floor)
    boundary = (alpha_star - lo0) <= edge or (hi0 - alpha_star) <= edge
    return MinimizeResult(alpha_star, energy, boundary)


def convergence_table(pot: PotentialSpec, constants: Constants, alpha: float,
                      dims) -> ConvergenceTable:
    """Spectra at fixed alpha across truncation sizes, ready for check_mhu."""
    dims = tuple(int(d) for d in dims)
    spectra = tuple(solve_spectrum(pot, constants, alpha, d).eigenvalues for d in dims)
    return ConvergenceTable(dims, spectra, float(alpha), pot)

"""Variational spectral solver for 1D Schrodinger Hamiltonians.

Builds Hamiltonian matrices in an orthonormal Hermite-Gaussian basis of
adjustable width alpha, diagonalizes them with a self-contained symmetric
eigensolver, optimizes alpha variationally, and machine-checks the
structural facts about the results: exact diagonalization of the harmonic
oscillator at alpha = m omega / hbar, upper-bound/monotonicity/interlacing
of truncated spectra, and the node count of each eigenfunction.  A Numerov
shooting solver supplies independent reference energies.
"""

from .basis import (BasisSpec, Constants, MAX_INDEX, basis_derivative,
                    basis_table, basis_value, hermite_eval, x_recurrence_coeffs)
from .eigensolver import SymmetricEigenResult, eigh, eigh_tridiagonal
from .errors import (BracketingError, ConvergenceError, DegenerateInputError,
                     QuadratureError, ScanResolutionError)
from .operators import (BandedSymMatrix, PotentialSpec, Spectrum,
                        hamiltonian_matrix, kinetic_matrix, potential_matrix,
                        to_dense)
from .quadrature import (QuadratureRule, element_oracle, gauss_hermite_rule,
                         inner_product, kinetic_second_form)
from .spectral import (CheckResult, ConvergenceTable, MhuReport,
                       WavefunctionSamples, check_mhu, count_nodes,
                       default_node_grid, parity_classify, reconstruct)
from .variational import (AlphaScanResult, MinimizeResult, convergence_table,
                          exact_diagonal_alpha, minimize_alpha, scan_alpha,
                          solve_spectrum)
from . import numerov

__version__ = "0.1.0"

__all__ = [
    "BasisSpec", "Constants", "MAX_INDEX", "basis_derivative", "basis_table",
    "basis_value", "hermite_eval", "x_recurrence_coeffs",
    "SymmetricEigenResult", "eigh", "eigh_tridiagonal",
    "BracketingError", "ConvergenceError", "DegenerateInputError",
    "QuadratureError", "ScanResolutionError",
    "BandedSymMatrix", "PotentialSpec", "Spectrum", "hamiltonian_matrix",
    "kinetic_matrix", "potential_matrix", "to_dense",
    "QuadratureRule", "element_oracle", "gauss_hermite_rule", "inner_product",
    "kinetic_second_form",
    "CheckResult", "ConvergenceTable", "MhuReport", "WavefunctionSamples",
    "check_mhu", "count_nodes", "default_node_grid", "parity_classify",
    "reconstruct",
    "AlphaScanResult", "MinimizeResult", "convergence_table",
    "exact_diagonal_alpha", "minimize_alpha", "scan_alpha", "solve_spectrum",
    "numerov",
    "__version__",
]

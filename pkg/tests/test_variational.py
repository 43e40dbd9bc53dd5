import numpy as np
import pytest

from hgritz import (BasisSpec, Constants, PotentialSpec, check_mhu,
                    convergence_table, exact_diagonal_alpha, hamiltonian_matrix,
                    minimize_alpha, scan_alpha, solve_spectrum)

C = Constants()
HARM = PotentialSpec.harmonic(1.0)
QUART = PotentialSpec.quartic(1.0)


def harmonic_ground_dim1(alpha):
    """Closed form for the 1x1 truncation: alpha/4 + 1/(4 alpha)."""
    return alpha / 4.0 + 1.0 / (4.0 * alpha)


def quartic_ground_dim1(alpha):
    """Closed form for the 1x1 truncation: alpha/4 + 3/(4 alpha^2)."""
    return alpha / 4.0 + 3.0 / (4.0 * alpha**2)


class TestExactDiagonalAlpha:
    def test_natural_units(self):
        assert exact_diagonal_alpha(1.0) == 1.0

    def test_direct_formula(self):
        assert exact_diagonal_alpha(3.0, Constants(hbar=1.0, mass=2.0)) == 6.0

    def test_returned_alpha_kills_the_off_band(self):
        constants = Constants(hbar=1.0, mass=2.0)
        omega = 3.0
        alpha = exact_diagonal_alpha(omega, constants)
        spec = BasisSpec(alpha, constants.hbar, constants.mass)
        h = hamiltonian_matrix(spec, PotentialSpec.harmonic(omega), 20)
        assert np.abs(h.bands[2]).max() == 0.0

    def test_returned_alpha_near_cancellation_generic_constants(self):
        # alpha = m omega / hbar is not exactly representable here, so the
        # cancellation is only down to rounding of the two quarter terms
        constants = Constants(hbar=1.5, mass=2.5)
        alpha = exact_diagonal_alpha(0.8, constants)
        spec = BasisSpec(alpha, constants.hbar, constants.mass)
        h = hamiltonian_matrix(spec, PotentialSpec.harmonic(0.8), 20)
        assert np.abs(h.bands[2]).max() <= 1e-13


class TestScanAlpha:
    def test_harmonic_dim1_closed_form(self):
        scan = scan_alpha(HARM, C, 1, [0.5, 1.0, 2.0])
        np.testing.assert_allclose([e[0] for e in scan.energies],
                                   [0.625, 0.5, 0.625], rtol=1e-14)
        assert scan.argmin_alpha == 1.0

    def test_ground_level_never_undercuts_exact(self):
        scan = scan_alpha(HARM, C, 7, np.linspace(0.3, 3.0, 12))
        for e in scan.energies:
            assert e[0] >= 0.5 - 1e-12

    def test_quartic_dim1_closed_form(self):
        alphas = [0.7, 1.3, 2.1, 3.4]
        scan = scan_alpha(QUART, C, 1, alphas)
        np.testing.assert_allclose([e[0] for e in scan.energies],
                                   [quartic_ground_dim1(a) for a in alphas], rtol=1e-14)

    def test_argmin_invariant_under_consistent_scaling(self):
        # hbar = mass = 2 keeps m omega / hbar = 1, so the argmin stays put
        scan = scan_alpha(HARM, Constants(hbar=2.0, mass=2.0), 1, [0.5, 1.0, 2.0])
        assert scan.argmin_alpha == 1.0

    def test_input_validation(self):
        with pytest.raises(ValueError):
            scan_alpha(HARM, C, 3, [])
        with pytest.raises(ValueError):
            scan_alpha(HARM, C, 3, [1.0, -2.0])


class TestMinimizeAlpha:
    def test_harmonic_dim1(self):
        res = minimize_alpha(HARM, C, 1, (0.1, 10.0))
        assert abs(res.alpha_star - 1.0) <= 1e-6
        assert abs(res.energy - 0.5) <= 1e-10
        assert not res.boundary

    def test_quartic_dim1_against_calculus_oracle(self):
        # d/da (a/4 + 3/(4 a^2)) = 0  =>  a^3 = 6
        alpha_true = 6.0 ** (1.0 / 3.0)
        res = minimize_alpha(QUART, C, 1, (0.5, 5.0))
        assert abs(res.alpha_star - alpha_true) <= 1e-6
        assert abs(res.energy - quartic_ground_dim1(alpha_true)) <= 1e-12
        assert not res.boundary

    def test_monotone_objective_flagged_as_boundary(self):
        # on [2, 5] the dim-1 harmonic ground energy increases, so the search
        # converges onto the left endpoint
        res = minimize_alpha(HARM, C, 1, (2.0, 5.0))
        assert res.boundary
        assert res.alpha_star == pytest.approx(2.0, abs=1e-6)

    def test_levels_objective(self):
        res = minimize_alpha(HARM, C, 2, (0.2, 5.0), levels=2)
        assert abs(res.alpha_star - 1.0) <= 1e-6

    def test_bracket_validation(self):
        with pytest.raises(ValueError):
            minimize_alpha(HARM, C, 1, (2.0, 1.0))
        with pytest.raises(ValueError):
            minimize_alpha(HARM, C, 1, (-1.0, 2.0))
        with pytest.raises(ValueError):
            minimize_alpha(HARM, C, 2, (0.5, 2.0), levels=3)


class TestConvergenceTable:
    def test_exact_diagonal_prefixes(self):
        table = convergence_table(HARM, C, 1.0, (2, 4, 8))
        for d, spectrum in zip(table.dims, table.spectra):
            np.testing.assert_allclose(spectrum, np.arange(d) + 0.5, atol=1e-13)

    def test_quartic_ground_energy_improves_with_dim(self):
        table = convergence_table(QUART, C, 2.0, (10, 20, 40))
        ground = [s[0] for s in table.spectra]
        assert ground[1] <= ground[0] + 1e-12
        assert ground[2] <= ground[1] + 1e-12
        gaps = np.diff(ground)
        assert abs(gaps[1]) <= abs(gaps[0])
        assert check_mhu(table).passed

    def test_single_dim_table(self):
        table = convergence_table(HARM, C, 1.3, (6,))
        assert check_mhu(table).passed

    def test_monotone_improvement_fixed_alpha(self):
        energies = [solve_spectrum(HARM, C, 0.7, d).eigenvalues[0]
                    for d in (4, 8, 16, 32)]
        assert all(b <= a + 1e-12 for a, b in zip(energies, energies[1:]))

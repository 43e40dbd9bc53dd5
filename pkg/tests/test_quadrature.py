import math

import numpy as np
import pytest

from hgritz import (BasisSpec, PotentialSpec, QuadratureError, QuadratureRule,
                    basis_value, element_oracle, gauss_hermite_rule,
                    inner_product, kinetic_matrix, kinetic_second_form,
                    potential_matrix)
from hgritz import hermite_eval
from hgritz.quadrature import minimum_order

SQRT_PI = math.sqrt(math.pi)
SPEC1 = BasisSpec(1.0)
HARM = PotentialSpec.harmonic(1.0)
QUART = PotentialSpec.quartic(1.0)


def double_factorial_moment(j):
    """integral y^(2j) e^(-y^2) dy = sqrt(pi) (2j-1)!! / 2^j."""
    val = SQRT_PI
    for k in range(1, j + 1):
        val *= (2 * k - 1) / 2.0
    return val


class TestRule:
    def test_order_one(self):
        rule = gauss_hermite_rule(1)
        np.testing.assert_array_equal(rule.nodes, [0.0])
        np.testing.assert_allclose(rule.weights, [SQRT_PI], rtol=1e-15)

    def test_order_two(self):
        rule = gauss_hermite_rule(2)
        np.testing.assert_allclose(rule.nodes, [-1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0)],
                                   atol=1e-15)
        np.testing.assert_allclose(rule.weights, [SQRT_PI / 2.0, SQRT_PI / 2.0], rtol=1e-14)
        # the nodes are the roots of the degree-2 Hermite polynomial
        assert abs(hermite_eval(2, rule.nodes[0])) < 1e-13

    @pytest.mark.parametrize("order", [2, 3, 5, 8, 13, 21, 40])
    def test_second_moment(self, order):
        rule = gauss_hermite_rule(order)
        assert float((rule.weights * rule.nodes**2).sum()) == pytest.approx(
            SQRT_PI / 2.0, abs=1e-12)

    @pytest.mark.parametrize("order", [1, 2, 3, 4, 6, 9, 12])
    def test_polynomial_exactness(self, order):
        # exact for all even monomials up to degree 2K - 1
        rule = gauss_hermite_rule(order)
        for j in range(order):
            got = float((rule.weights * rule.nodes ** (2 * j)).sum())
            want = double_factorial_moment(j)
            assert got == pytest.approx(want, rel=1e-12)

    def test_symmetry_and_positivity(self):
        rule = gauss_hermite_rule(17)
        np.testing.assert_array_equal(rule.nodes, -rule.nodes[::-1])
        np.testing.assert_array_equal(rule.weights, rule.weights[::-1])
        assert np.all(rule.weights > 0.0)
        assert rule.nodes[8] == 0.0
        assert float(rule.weights.sum()) == pytest.approx(SQRT_PI, abs=1e-12)

    def test_large_order(self):
        rule = gauss_hermite_rule(128)
        assert float(rule.weights.sum()) == pytest.approx(SQRT_PI, abs=1e-12)

    def test_order_validation(self):
        with pytest.raises(ValueError):
            gauss_hermite_rule(0)
        with pytest.raises(ValueError):
            gauss_hermite_rule(513)
        with pytest.raises(ValueError):
            gauss_hermite_rule(2.5)


class TestInnerProduct:
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_orthonormality(self, alpha):
        rule = gauss_hermite_rule(48)
        spec = BasisSpec(alpha)
        for r in range(21):
            for s in range(r, 21):
                got = inner_product(spec,
                                    lambda x: basis_value(spec, r, x),
                                    lambda x: basis_value(spec, s, x),
                                    rule)
                want = 1.0 if r == s else 0.0
                assert abs(got - want) <= 1e-10

    def test_opposite_parity_vanishes(self):
        rule = gauss_hermite_rule(8)
        got = inner_product(SPEC1,
                            lambda x: basis_value(SPEC1, 0, x),
                            lambda x: basis_value(SPEC1, 1, x),
                            rule)
        assert abs(got) <= 1e-14

    def test_x_squared_cross_element(self):
        rule = gauss_hermite_rule(8)
        got = inner_product(SPEC1,
                            lambda x: basis_value(SPEC1, 0, x),
                            lambda x: x * x * basis_value(SPEC1, 2, x),
                            rule)
        assert got == pytest.approx(math.sqrt(2.0) / 2.0, abs=1e-12)

    def test_non_finite_contribution_reported(self):
        # a legal rule whose nodes sit far enough out that e^(y^2) overflows
        rule = QuadratureRule(np.array([-27.0, 27.0]),
                              np.array([SQRT_PI / 2.0, SQRT_PI / 2.0]), 2)
        with pytest.raises(QuadratureError) as err:
            inner_product(SPEC1, lambda x: np.ones_like(x), lambda x: np.ones_like(x), rule)
        assert err.value.node is not None


class TestElementOracle:
    def test_harmonic_diagonal(self):
        t, v = element_oracle(SPEC1, HARM, 0, 0)
        assert t == pytest.approx(0.25, abs=1e-12)
        assert v == pytest.approx(0.25, abs=1e-12)

    def test_parity_zero(self):
        t, v = element_oracle(SPEC1, HARM, 0, 1)
        assert abs(t) <= 1e-14
        assert abs(v) <= 1e-14

    def test_quartic_band_four(self):
        _, v = element_oracle(SPEC1, QUART, 0, 4)
        assert v == pytest.approx(0.25 * math.sqrt(24.0), abs=1e-10)

    def test_insufficient_order_rejected(self):
        rule = gauss_hermite_rule(5)
        assert minimum_order(6, 6, 4) > 5
        with pytest.raises(ValueError):
            element_oracle(SPEC1, QUART, 6, 6, rule)

    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    @pytest.mark.parametrize("pot", [HARM, QUART,
                                     PotentialSpec.even_polynomial([0.2, 0.4, 0.1])])
    def test_oracle_matches_analytic_matrices(self, alpha, pot):
        spec = BasisSpec(alpha)
        dim = 13
        rule = gauss_hermite_rule(2 * (dim - 1) + pot.degree + 4)
        t_matrix = kinetic_matrix(spec, dim)
        v_matrix = potential_matrix(spec, pot, dim)
        worst_t = worst_v = 0.0
        for r in range(dim):
            for s in range(r, dim):
                t_ref, v_ref = element_oracle(spec, pot, r, s, rule)
                worst_t = max(worst_t, abs(t_matrix.entry(r, s) - t_ref))
                worst_v = max(worst_v, abs(v_matrix.entry(r, s) - v_ref))
        assert worst_t <= 1e-10
        assert worst_v <= 1e-10


class TestSecondDerivativeForm:
    @pytest.mark.parametrize("alpha", [0.5, 1.0, 2.0])
    def test_integration_by_parts_consistency(self, alpha):
        spec = BasisSpec(alpha)
        rule = gauss_hermite_rule(32)
        for r in range(0, 11, 2):
            for s in range(r, 11, 2):
                first, _ = element_oracle(spec, HARM, r, s, rule)
                second = kinetic_second_form(spec, r, s, rule)
                assert abs(first - second) <= 1e-8

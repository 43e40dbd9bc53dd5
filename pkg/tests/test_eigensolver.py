import math

import numpy as np
import pytest

from helpers import charpoly_eigenvalues

from hgritz import (BasisSpec, PotentialSpec, eigh, eigh_tridiagonal,
                    hamiltonian_matrix)


def test_two_by_two_closed_form():
    res = eigh(np.array([[2.0, 1.0], [1.0, 2.0]]))
    np.testing.assert_allclose(res.eigenvalues, [1.0, 3.0], atol=1e-14)
    expect0 = np.array([1.0, -1.0]) / math.sqrt(2.0)
    expect1 = np.array([1.0, 1.0]) / math.sqrt(2.0)
    assert min(np.abs(res.eigenvectors[:, 0] - expect0).max(),
               np.abs(res.eigenvectors[:, 0] + expect0).max()) < 1e-14
    assert min(np.abs(res.eigenvectors[:, 1] - expect1).max(),
               np.abs(res.eigenvectors[:, 1] + expect1).max()) < 1e-14


def test_identity():
    res = eigh(np.eye(5))
    np.testing.assert_array_equal(res.eigenvalues, np.ones(5))


def test_harmonic_exact_diagonal_matrix():
    spec = BasisSpec(1.0)
    h = hamiltonian_matrix(spec, PotentialSpec.harmonic(1.0), 5)
    res = eigh(h)
    np.testing.assert_allclose(res.eigenvalues, [0.5, 1.5, 2.5, 3.5, 4.5], atol=1e-14)


def test_tridiagonal_scalar():
    res = eigh_tridiagonal([0.0], [])
    np.testing.assert_array_equal(res.eigenvalues, [0.0])


def test_tridiagonal_hermite_jacobi_order_two():
    res = eigh_tridiagonal([0.0, 0.0], [math.sqrt(0.5)])
    np.testing.assert_allclose(res.eigenvalues,
                               [-1.0 / math.sqrt(2.0), 1.0 / math.sqrt(2.0)],
                               atol=1e-15)


def test_tridiagonal_two_by_two_closed_form():
    a, b = 1.7, -0.4
    res = eigh_tridiagonal([a, a], [b])
    np.testing.assert_allclose(res.eigenvalues, [a - abs(b), a + abs(b)], atol=1e-14)


@pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 13, 21, 34, 50])
def test_random_reconstruction_orthogonality(n):
    rng = np.random.default_rng(1000 + n)
    a = rng.standard_normal((n, n))
    a = a + a.T
    res = eigh(a)
    recon = res.eigenvectors @ np.diag(res.eigenvalues) @ res.eigenvectors.T
    scale = 1.0 + np.abs(a).max()
    assert np.abs(recon - a).max() <= 1e-9 * scale
    assert np.abs(res.eigenvectors.T @ res.eigenvectors - np.eye(n)).max() <= 1e-10
    assert res.residual_norm <= 1e-10 * (1.0 + np.abs(a).sum(axis=1).max())
    # third route: library reference
    np.testing.assert_allclose(res.eigenvalues, np.linalg.eigvalsh(a),
                               atol=1e-11 * scale)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_matches_characteristic_polynomial_bisection(n):
    rng = np.random.default_rng(77 + n)
    a = rng.standard_normal((n, n))
    a = a + a.T
    res = eigh(a)
    roots = charpoly_eigenvalues(a)
    np.testing.assert_allclose(res.eigenvalues, roots, atol=1e-9)


def test_permutation_similarity():
    rng = np.random.default_rng(5)
    n = 17
    a = rng.standard_normal((n, n))
    a = a + a.T
    perm = rng.permutation(n)
    p = np.eye(n)[perm]
    res_a = eigh(a)
    res_p = eigh(p @ a @ p.T)
    np.testing.assert_allclose(res_a.eigenvalues, res_p.eigenvalues, atol=1e-10)


def test_deterministic_and_sign_convention():
    rng = np.random.default_rng(9)
    a = rng.standard_normal((12, 12))
    a = a + a.T
    first = eigh(a)
    second = eigh(a)
    np.testing.assert_array_equal(first.eigenvalues, second.eigenvalues)
    np.testing.assert_array_equal(first.eigenvectors, second.eigenvectors)
    for j in range(12):
        i = int(np.argmax(np.abs(first.eigenvectors[:, j])))
        assert first.eigenvectors[i, j] > 0.0


def test_degenerate_cluster_stays_orthonormal():
    # eigenvectors inside a degenerate cluster are arbitrary up to rotation;
    # only orthonormality and the reconstructed projector are contractual
    a = np.diag([2.0, 2.0, 5.0])
    q, _ = np.linalg.qr(np.random.default_rng(3).standard_normal((3, 3)))
    a = q @ a @ q.T
    a = 0.5 * (a + a.T)
    res = eigh(a)
    np.testing.assert_allclose(res.eigenvalues, [2.0, 2.0, 5.0], atol=1e-12)
    recon = res.eigenvectors @ np.diag(res.eigenvalues) @ res.eigenvectors.T
    np.testing.assert_allclose(recon, a, atol=1e-12)


def test_input_validation():
    with pytest.raises(ValueError):
        eigh(np.ones((2, 3)))
    with pytest.raises(ValueError):
        eigh(np.array([[1.0, 2.0], [0.0, 1.0]]))
    with pytest.raises(ValueError):
        eigh(np.array([[np.nan]]))
    with pytest.raises(ValueError):
        eigh_tridiagonal([1.0, 2.0], [0.5, 0.5])

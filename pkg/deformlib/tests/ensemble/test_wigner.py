import numpy as np
import pytest

from deformlib.ensemble.entries import EntryDistribution
from deformlib.ensemble.wigner import (Deformation, SymmetryClass,
                                       check_beta, coordinate_vectors,
                                       default_delta, deform,
                                       delocalized_vectors, haar_vectors,
                                       projected_quadratic_form,
                                       sample_wigner, truncate_v)


def test_check_beta():
    assert check_beta(1) is SymmetryClass.REAL
    assert check_beta(2) is SymmetryClass.COMPLEX
    with pytest.raises(ValueError):
        check_beta(4)
    with pytest.raises(TypeError):
        check_beta(True)


@pytest.mark.parametrize('beta', [1, 2])
def test_sample_wigner_self_adjoint(rng, gaussian_law, beta):
    h = sample_wigner(50, beta, gaussian_law, rng)
    assert h.shape == (50, 50)
    assert np.array_equal(h, h.conj().T)
    assert np.iscomplexobj(h) == (beta == 2)


@pytest.mark.parametrize('beta', [1, 2])
def test_sample_wigner_variances(rng, gaussian_law, beta):
    n = 400
    h = sample_wigner(n, beta, gaussian_law, rng)
    off = np.abs(h[np.triu_indices(n, 1)]) ** 2
    diag = np.abs(np.diag(h)) ** 2
    assert np.isclose(off.mean() * n, 1.0, atol=0.02)
    assert np.isclose(diag.mean() * n, 3.0 - beta, atol=0.6)


def test_sample_wigner_complex_pseudo_variance(rng, gaussian_law):
    n = 300
    h = sample_wigner(n, 2, gaussian_law, rng)
    off = h[np.triu_indices(n, 1)]
    assert abs(np.mean(off ** 2) * n) < 0.03


def test_sample_wigner_spectrum_on_bulk(rng, rademacher_law):
    h = sample_wigner(500, 1, rademacher_law, rng)
    spectrum = np.linalg.eigvalsh(h)
    assert -2.2 < spectrum[0] and spectrum[-1] < 2.2


def test_sample_wigner_reproducible(gaussian_law):
    a = sample_wigner(20, 2, gaussian_law, 5)
    b = sample_wigner(20, 2, gaussian_law, 5)
    assert np.array_equal(a, b)


@pytest.mark.parametrize('n', [0, -1, 3.0])
def test_sample_wigner_n(gaussian_law, n):
    with pytest.raises(ValueError):
        sample_wigner(n, 1, gaussian_law)


def test_deformation_matrix():
    deformation = Deformation(coordinate_vectors(4, 2), [-2.0, 3.0])
    assert np.allclose(deformation.matrix(), np.diag([-2.0, 3.0, 0.0, 0.0]))
    assert deformation.n == 4
    assert deformation.rank == 2


def test_deformation_vector_argument():
    v = np.ones(4) / 2.0
    deformation = Deformation(v, 2.0)
    assert deformation.v.shape == (4, 1)
    assert np.allclose(deformation.matrix(), 0.5 * np.ones((4, 4)))


@pytest.mark.parametrize('v, d', [
    (np.eye(4, 2), [1.0]),
    (np.eye(4, 2), [0.0, 2.0]),
    (np.eye(4, 2), [3.0, 2.0]),
    (np.eye(4, 2), [2.0, 12.0]),
    (np.ones((4, 2)), [1.0, 2.0]),
    (np.eye(4, 2), [np.nan, 2.0]),
    (np.eye(4, 2), []),
])
def test_deformation_invalid(v, d):
    with pytest.raises(ValueError):
        Deformation(v, d)


def test_deformation_sigma():
    with pytest.raises(ValueError):
        Deformation(np.eye(4, 1), [2.0], sigma=1.0)
    assert Deformation(np.eye(4, 1), [14.0], sigma=15.0).d[0] == 14.0


def test_deform_adds_deformation(rng, gaussian_law, single_coordinate):
    h = sample_wigner(200, 1, gaussian_law, rng)
    h_tilde = deform(h, single_coordinate)
    expected = h.copy()
    expected[0, 0] += 2.0
    assert np.allclose(h_tilde, expected)


def test_deform_dimension(rng, gaussian_law, single_coordinate):
    with pytest.raises(ValueError):
        deform(sample_wigner(10, 1, gaussian_law, rng), single_coordinate)


def test_deform_creates_outlier(rng, gaussian_law, single_delocalized):
    h_tilde = deform(sample_wigner(200, 1, gaussian_law, rng),
                     single_delocalized)
    top = np.linalg.eigvalsh(h_tilde)[-1]
    # theta(2) = 2.5
    assert abs(top - 2.5) < 0.3


def test_default_delta():
    assert np.isclose(default_delta(1000), 1.0 / np.log(1000))


def test_truncate_v():
    v = np.array([[0.9, 0.1], [0.1, -0.9], [0.3, 0.3]])
    assert np.array_equal(truncate_v(v, 0.2),
                          [[0.9, 0.0], [0.0, -0.9], [0.3, 0.3]])
    with pytest.raises(ValueError):
        truncate_v(v, 0.0)


def test_truncate_v_delocalized_vanishes():
    n = 1000
    v = delocalized_vectors(n, 3)
    assert not np.any(truncate_v(v, default_delta(n)))


def test_truncate_v_accepts_deformation(single_coordinate):
    v_delta = truncate_v(single_coordinate, default_delta(200))
    assert np.array_equal(v_delta, single_coordinate.v)


def test_projected_quadratic_form_zero():
    form = projected_quadratic_form(np.zeros((10, 2)), 1,
                                    EntryDistribution.gaussian(), 0)
    assert form.shape == (2, 2)
    assert not np.any(form)


def test_projected_quadratic_form_variance(rademacher_law):
    n = 100
    v_delta = coordinate_vectors(n, 1)
    rng = np.random.default_rng(21)
    draws = np.array([projected_quadratic_form(v_delta, 1, rademacher_law,
                                               rng)[0, 0]
                      for _ in range(2000)])
    # the diagonal entry sqrt(2/N) x takes the two values +-sqrt(2/N)
    assert np.allclose(np.abs(draws), np.sqrt(2.0 / n))


def test_projected_quadratic_form_hermitian(rng, gaussian_law):
    v_delta = coordinate_vectors(30, 3)
    form = projected_quadratic_form(v_delta, 2, gaussian_law, rng)
    assert np.allclose(form, form.conj().T)
    assert np.iscomplexobj(form)


@pytest.mark.parametrize('n, r', [(8, 1), (33, 4), (200, 2)])
def test_delocalized_vectors(n, r):
    v = delocalized_vectors(n, r)
    assert v.shape == (n, r)
    assert np.allclose(v.T @ v, np.eye(r))
    assert np.allclose(v[:, 0], 1.0 / np.sqrt(n))
    assert np.max(np.abs(v)) <= np.sqrt(2.0 / n) + 1e-12


def test_delocalized_vectors_rank():
    with pytest.raises(ValueError):
        delocalized_vectors(3, 4)


@pytest.mark.parametrize('beta', [1, 2])
def test_haar_vectors_orthonormal(rng, beta):
    v = haar_vectors(40, 3, beta, rng)
    assert np.allclose(v.conj().T @ v, np.eye(3))
    assert np.iscomplexobj(v) == (beta == 2)


def test_haar_vectors_reproducible():
    assert np.array_equal(haar_vectors(10, 2, 1, 7), haar_vectors(10, 2, 1, 7))

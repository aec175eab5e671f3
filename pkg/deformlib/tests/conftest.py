import numpy as np
import pytest

from deformlib.ensemble.entries import EntryDistribution
from deformlib.ensemble.wigner import (Deformation, coordinate_vectors,
                                       delocalized_vectors)
from deformlib.util.semicircle import ControlParams


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def gaussian_law():
    return EntryDistribution.gaussian()


@pytest.fixture
def rademacher_law():
    return EntryDistribution.rademacher()


@pytest.fixture
def skewed_law():
    return EntryDistribution.skewed_two_point(2.0)


@pytest.fixture
def cp_1000():
    return ControlParams(1000)


# ----- Deformations at N = 200 ------
@pytest.fixture
def single_coordinate():
    return Deformation(coordinate_vectors(200, 1), [2.0])


@pytest.fixture
def single_delocalized():
    return Deformation(delocalized_vectors(200, 1), [2.0])


@pytest.fixture
def two_sided():
    # one outlier on each side of the bulk, never in the same block
    return Deformation(delocalized_vectors(200, 2), [-3.0, 3.0])


@pytest.fixture
def overlapping_pair():
    return Deformation(delocalized_vectors(200, 2), [2.0, 2.0])


def create_spd_tensor(m, beta, rng):
    """Covariance tensor E Psi_ij Psi_kl of Psi = sum_t c_t A_t for fixed
    self-adjoint A_t and independent standard normal c_t."""
    mats = []
    for _ in range(m * m + 2):
        a = rng.standard_normal((m, m))
        if beta == 2:
            a = a + 1j * rng.standard_normal((m, m))
        mats.append((a + a.conj().T) / 2.0)
    mats = np.array(mats)
    return np.einsum('tij,tkl->ijkl', mats, mats)

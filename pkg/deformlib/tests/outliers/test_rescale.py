import numpy as np
import pytest

from deformlib.ensemble.wigner import deform, sample_wigner
from deformlib.outliers.partition import Partition, partition_fine
from deformlib.outliers.rescale import (RescaledOutliers, alpha_index,
                                        column_label, extract_and_rescale,
                                        outlier_location_bound,
                                        reconstruct_eigenvalues)
from deformlib.util.semicircle import ControlParams, theta


@pytest.fixture
def spectrum_10():
    # d = (-3, 2, 2.0001) at N = 10: outliers at positions 1, 9 and 10
    spectrum = np.linspace(-1.9, 1.9, 10)
    spectrum[0] = theta(-3.0) - 0.2
    spectrum[8] = theta(2.0) - 0.1
    spectrum[9] = theta(2.0) + 0.4
    return spectrum


@pytest.fixture
def partition_10():
    return Partition([(1,), (2, 3)], [-3.0, 2.0, 2.0001], 10)


def test_alpha_index():
    d = [-3.0, 2.0, 4.0]
    assert alpha_index(1, d, 10) == 1
    assert alpha_index(2, d, 10) == 9
    assert alpha_index(3, d, 10) == 10


def test_alpha_index_range():
    with pytest.raises(ValueError):
        alpha_index(0, [2.0], 10)
    with pytest.raises(ValueError):
        alpha_index(2, [2.0], 10)


def test_extract_and_rescale(spectrum_10, partition_10):
    zeta = extract_and_rescale(spectrum_10, partition_10,
                               [-3.0, 2.0, 2.0001], 10)
    sqrt_n = np.sqrt(10.0)
    expected = [sqrt_n / np.sqrt(2.0) * -0.2, sqrt_n * -0.1, sqrt_n * 0.4]
    assert np.allclose(zeta.as_array(), expected)
    assert list(zeta.values) == [((1,), 1), ((2, 3), 2), ((2, 3), 3)]
    assert zeta.labels() == ['zeta[1,1]', 'zeta[2-3,2]', 'zeta[2-3,3]']
    assert np.allclose(zeta.block_values((2, 3)), expected[1:])


def test_extract_from_extreme_eigenvalues(spectrum_10, partition_10):
    d = [-3.0, 2.0, 2.0001]
    full = extract_and_rescale(spectrum_10, partition_10, d, 10)
    ends = (spectrum_10[:1], spectrum_10[-2:])
    assert extract_and_rescale(ends, partition_10, d, 10) == full


def test_extract_missing_extreme(partition_10):
    ends = (np.array([-3.5]), np.array([2.9]))
    with pytest.raises(ValueError):
        extract_and_rescale(ends, partition_10, [-3.0, 2.0, 2.0001], 10)


def test_extract_unsorted_spectrum(partition_10):
    with pytest.raises(ValueError):
        extract_and_rescale(np.arange(10.0)[::-1], partition_10,
                            [-3.0, 2.0, 2.0001], 10)


def test_extract_wrong_length(partition_10):
    with pytest.raises(ValueError):
        extract_and_rescale(np.arange(9.0), partition_10,
                            [-3.0, 2.0, 2.0001], 10)


def test_extract_empty_partition():
    zeta = extract_and_rescale(np.arange(10.0), Partition([], [0.5], 10),
                               [0.5], 10)
    assert len(zeta) == 0
    assert zeta.as_array().shape == (0,)


def test_reconstruct_eigenvalues(spectrum_10, partition_10):
    d = [-3.0, 2.0, 2.0001]
    zeta = extract_and_rescale(spectrum_10, partition_10, d, 10)
    assert np.allclose(reconstruct_eigenvalues(zeta, d, 10),
                       spectrum_10[[0, 8, 9]])


def test_column_label():
    assert column_label((1, 2), 1) == 'zeta[1-2,1]'
    assert column_label((3,), 3, name='xi') == 'xi[3,3]'


def test_rescaled_outliers_equality():
    a = RescaledOutliers([(((1,), 1), 0.5)])
    b = RescaledOutliers([(((1,), 1), 0.5)])
    c = RescaledOutliers([(((2,), 2), 0.5)])
    assert a == b
    assert a != c


def test_outlier_location_bound(spectrum_10):
    d = [-3.0, 2.0, 2.0001]
    cp = ControlParams(10, outlier_factor=1.0)
    report = outlier_location_bound(spectrum_10, d, cp)
    assert list(report['index']) == [1, 2, 3]
    assert np.isclose(report['deviation'][0], 0.2)
    assert np.isclose(report['bound'][0], 10.0 * np.sqrt(2.0 / 10.0))
    assert report['holds']


def test_outlier_location_bound_simulated(rng, gaussian_law,
                                          single_delocalized):
    h_tilde = deform(sample_wigner(200, 1, gaussian_law, rng),
                     single_delocalized)
    spectrum = np.linalg.eigvalsh(h_tilde)
    cp = ControlParams(200)
    report = outlier_location_bound(spectrum, single_delocalized.d, cp)
    assert report['holds']
    part = partition_fine(single_delocalized.d, cp)
    zeta = extract_and_rescale(spectrum, part, single_delocalized.d, 200)
    assert abs(zeta.as_array()[0]) < 10.0

# coding=utf-8

# License: BSD 3 clause

import numpy as np
from scipy.stats import ks_2samp, wasserstein_distance

"""
This file contains the distances between one-dimensional empirical
distributions used to compare simulated and reference samples:

- Two-sample Kolmogorov-Smirnov distance
- Wasserstein-1 distance
- Minimum spacing of groups of eigenvalues (level repulsion statistic)
"""


def _check_sample(sample, name):
    sample = np.asarray(sample, dtype=np.float64).ravel()
    if sample.size == 0:
        raise ValueError("The sample {} is empty.".format(name))
    if not np.all(np.isfinite(sample)):
        raise ValueError("The sample {} contains NaN or infinite values."
                         .format(name))
    return sample


def ks_distance(a, b):
    """Supremum distance between the empirical distribution functions of
    two samples.

    Parameters
    ----------
    a : array of shape (n_samples_a,)

    b : array of shape (n_samples_b,)

    Returns
    -------
    distance : float in [0, 1]
    """
    a = _check_sample(a, 'a')
    b = _check_sample(b, 'b')
    return float(ks_2samp(a, b).statistic)


def wasserstein1(a, b):
    """L1 distance between the empirical quantile functions of two samples.
    For samples of equal size it is the mean absolute difference of the
    sorted samples.

    Parameters
    ----------
    a : array of shape (n_samples_a,)

    b : array of shape (n_samples_b,)

    Returns
    -------
    distance : float
    """
    a = _check_sample(a, 'a')
    b = _check_sample(b, 'b')
    return float(wasserstein_distance(a, b))


def ks_null_quantile(n_a, n_b, level=0.99):
    """Asymptotic quantile c(level) sqrt((n_a + n_b) / (n_a n_b)) of the
    two-sample KS statistic under the null hypothesis, with
    c(level) = sqrt(-log((1 - level) / 2) / 2)."""
    if not 0 < level < 1:
        raise ValueError("level must be in (0, 1), got {}.".format(level))
    c = np.sqrt(-np.log((1.0 - level) / 2.0) / 2.0)
    return float(c * np.sqrt((n_a + n_b) / (n_a * n_b)))


def min_gaps(samples):
    """Smallest spacing within each row of a sample of eigenvalue groups.

    Parameters
    ----------
    samples : array of shape (n_samples, k)
        Each row holds k >= 2 values.

    Returns
    -------
    gaps : array of shape (n_samples,)
    """
    samples = np.atleast_2d(np.asarray(samples, dtype=np.float64))
    if samples.shape[1] < 2:
        raise ValueError("Minimum gaps need at least two values per row, "
                         "got {}.".format(samples.shape[1]))
    return np.min(np.diff(np.sort(samples, axis=1), axis=1), axis=1)

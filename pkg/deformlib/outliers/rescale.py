# coding=utf-8

# License: BSD 3 clause

from collections import OrderedDict

import numpy as np

from deformlib.outliers.partition import (block_label, block_reference_d,
                                          fluctuation_scale, is_outlier)
from deformlib.util.semicircle import theta


def alpha_index(i, d, n):
    """Position alpha(i) in the ascending spectrum of the outlier created
    by d_i: alpha(i) = i if d_i < 0 and N - r + i if d_i > 0.

    Parameters
    ----------
    i : int
        1-based index in [1, r].

    d : array of shape (r,)

    n : int

    Returns
    -------
    alpha : int
        1-based position in [1, n].
    """
    d = np.atleast_1d(d)
    r = d.size
    if not 1 <= i <= r:
        raise ValueError("i must be in [1, {}], got {}.".format(r, i))
    if d[i - 1] == 0:
        raise ValueError("d_{} is zero.".format(i))
    if d[i - 1] < 0:
        return int(i)
    return int(n - r + i)


class RescaledOutliers(object):
    """Values indexed by (block, i) for every covered index i.

    Holds the rescaled outliers zeta^pi_i of a deformed matrix as well as
    the eigenvalues xi^pi_i of the reference matrices, in the order of the
    partition.

    Parameters
    ----------
    values : OrderedDict
        Maps (block, i) to a float.
    """

    def __init__(self, values):
        self.values = OrderedDict(values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, key):
        return self.values[key]

    def __eq__(self, other):
        if not isinstance(other, RescaledOutliers):
            return NotImplemented
        return (list(self.values) == list(other.values)
                and np.array_equal(self.as_array(), other.as_array()))

    def __repr__(self):
        return 'RescaledOutliers({})'.format(dict(zip(self.labels(),
                                                      self.as_array())))

    def as_array(self):
        return np.fromiter(self.values.values(), dtype=np.float64,
                           count=len(self.values))

    def labels(self, name='zeta'):
        return [column_label(block, i, name) for block, i in self.values]

    def block_values(self, block):
        return np.array([v for (b, _), v in self.values.items()
                         if b == tuple(block)])


def column_label(block, i, name='zeta'):
    """Column header name[block,i], e.g. 'zeta[1-2,1]'."""
    return '{}[{},{}]'.format(name, block_label(block), i)


def _eigenvalue_at(alpha, spectrum, n):
    if isinstance(spectrum, tuple):
        lowest, highest = spectrum
        if alpha <= len(lowest):
            return lowest[alpha - 1]
        offset = n - len(highest)
        if alpha > offset:
            return highest[alpha - offset - 1]
        raise ValueError("Eigenvalue {} is not among the extreme eigenvalues "
                         "provided.".format(alpha))
    return spectrum[alpha - 1]


def _check_spectrum(spectrum, n):
    if isinstance(spectrum, tuple):
        parts = tuple(np.asarray(s, dtype=np.float64) for s in spectrum)
        if len(parts) != 2 or any(np.any(np.diff(p) < 0) for p in parts):
            raise ValueError("Expected a pair (lowest, highest) of ascending "
                             "eigenvalues.")
        return parts
    spectrum = np.asarray(spectrum, dtype=np.float64)
    if spectrum.shape != (n,):
        raise ValueError("The spectrum must have length n = {}, got shape {}."
                         .format(n, spectrum.shape))
    if np.any(np.diff(spectrum) < 0):
        raise ValueError("The spectrum must be sorted in ascending order.")
    return spectrum


def extract_and_rescale(spectrum, partition, d, n):
    """Rescaled outliers

        zeta^pi_i = N^{1/2} (|d_pi| - 1)^{-1/2} (mu_alpha(i) - theta(d_pi))

    for every block pi of ``partition`` and every i in pi.

    Parameters
    ----------
    spectrum : array of shape (n,) or tuple of arrays
        Ascending spectrum of the deformed matrix, or the pair
        (lowest, highest) returned by
        :func:`deformlib.util.spectra.extreme_eigenvalues`.

    partition : Partition

    d : array of shape (r,)

    n : int

    Returns
    -------
    zeta : RescaledOutliers
    """
    spectrum = _check_spectrum(spectrum, n)
    d = np.atleast_1d(np.asarray(d, dtype=np.float64))
    values = OrderedDict()
    for block in partition.blocks:
        if block[-1] > d.size or block[0] < 1:
            raise ValueError("Block {} is out of range [1, {}]."
                             .format(block, d.size))
        d_pi = block_reference_d(block, d)
        center = theta(d_pi)
        scale = np.sqrt(n) / np.sqrt(abs(d_pi) - 1.0)
        for i in block:
            mu = _eigenvalue_at(alpha_index(i, d, n), spectrum, n)
            values[(block, i)] = float(scale * (mu - center))
    return RescaledOutliers(values)


def reconstruct_eigenvalues(zeta, d, n):
    """Invert :func:`extract_and_rescale`: the outlier eigenvalues
    mu_alpha(i) as an array in the order of ``zeta``."""
    d = np.atleast_1d(np.asarray(d, dtype=np.float64))
    out = []
    for (block, _), value in zeta.values.items():
        d_pi = block_reference_d(block, d)
        out.append(theta(d_pi) + value * np.sqrt(abs(d_pi) - 1.0)
                   / np.sqrt(n))
    return np.array(out)


def outlier_location_bound(spectrum, d, cp, constant=10.0):
    """Compare every outlier with its classical location.

    For every i passing the outlier threshold, the deviation
    |mu_alpha(i) - theta(d_i)| is reported next to
    constant * N^{-1/2} (|d_i| - 1)^{1/2}. Diagnostic only.

    Returns
    -------
    report : dict
        Keys 'index', 'deviation', 'bound' (arrays) and 'holds' (bool).
    """
    n = cp.n
    spectrum = _check_spectrum(spectrum, n)
    d = np.atleast_1d(np.asarray(d, dtype=np.float64))
    index, deviation, bound = [], [], []
    for i in range(1, d.size + 1):
        if not is_outlier(d[i - 1], cp):
            continue
        mu = _eigenvalue_at(alpha_index(i, d, n), spectrum, n)
        index.append(i)
        deviation.append(abs(mu - theta(d[i - 1])))
        bound.append(constant * fluctuation_scale(d[i - 1], n))
    deviation = np.array(deviation)
    bound = np.array(bound)
    return {'index': np.array(index, dtype=int), 'deviation': deviation,
            'bound': bound, 'holds': bool(np.all(deviation <= bound))}

# coding=utf-8

# License: BSD 3 clause

from collections import OrderedDict

import numpy as np
from scipy.stats import moment

from deformlib.base import exclusion_counts, to_sample_array
from deformlib.outliers.partition import block_label
from deformlib.util.distances import ks_distance, min_gaps, wasserstein1

"""
Comparison of the simulated rescaled outliers with the eigenvalues of the
reference matrices.

The two samples are compared through a fixed family of statistics: marginal
Kolmogorov-Smirnov and Wasserstein-1 distances, the first four moments of
every covered index, the covariance of the indices of each block, the
correlation matrix of all covered indices and, for blocks with at least two
indices, the distribution of the smallest gap. The report holds numbers only;
thresholds belong to the caller.
"""

SMALL_GAP_FRACTION = 0.1


def index_key(block, i):
    """Key of a covered index in the report, e.g. '1-2,1'."""
    return '{},{}'.format(block_label(block), i)


def _as_samples(samples, partition, side):
    """Array of included samples and the exclusion counts of ``samples``."""
    width = len(partition.covered)
    if isinstance(samples, (list, tuple)):
        for res in samples:
            snapshot = getattr(res, 'partition_snapshot', None)
            if snapshot is not None and snapshot != partition:
                raise ValueError("Trial {} of the {} sample was rescaled with "
                                 "another partition.".format(res.index, side))
        return to_sample_array(samples, width), exclusion_counts(samples)
    array = np.atleast_2d(np.asarray(samples, dtype=np.float64))
    if array.ndim != 2 or array.shape[1] != width:
        raise ValueError("The {} sample has shape {}, expected (n_trials, {}) "
                         "for the partition {}.".format(side, array.shape,
                                                        width,
                                                        partition.blocks))
    return array, {}


def _variance(x):
    return float(np.var(x, ddof=1)) if x.size > 1 else 0.0


def _covariance(x):
    if x.shape[0] < 2:
        return np.zeros((x.shape[1], x.shape[1]))
    return np.atleast_2d(np.cov(x, rowvar=False))


def _correlation(x):
    with np.errstate(divide='ignore', invalid='ignore'):
        cov = _covariance(x)
        scale = np.sqrt(np.diag(cov))
        corr = cov / np.outer(scale, scale)
    return np.where(np.isfinite(corr), corr, 0.0)


def _small_gap_fraction(gaps, scale):
    if scale <= 0:
        return float(np.mean(gaps <= 0))
    return float(np.mean(gaps < SMALL_GAP_FRACTION * scale))


class ComparisonReport(object):
    """Statistics comparing an empirical sample (simulation side) with a
    reference sample.

    Attributes
    ----------
    per_index : OrderedDict
        For every covered index, keyed by :func:`index_key`: 'ks',
        'wasserstein1' and the pairs 'mean_emp'/'mean_ref', 'var_emp'/
        'var_ref', 'third_emp'/'third_ref', 'fourth_emp'/'fourth_ref' of
        central moments.

    joint : dict
        'correlation_emp'/'correlation_ref' over all covered indices,
        'blocks' mapping every block label to its cross covariances and,
        for blocks with two or more indices, 'min_gap_ks',
        'min_gap_wasserstein1' and 'small_gap_emp'/'small_gap_ref'.

    counts : dict
        Included trials per side and the excluded trials per reason.
    """

    def __init__(self, per_index, joint, counts, partition):
        self.per_index = per_index
        self.joint = joint
        self.counts = counts
        self.partition = partition

    def max_ks(self):
        return max(entry['ks'] for entry in self.per_index.values())

    def to_dict(self):
        """Plain nested dictionaries and lists, ready for json.dump."""
        def convert(obj):
            if isinstance(obj, dict):
                return OrderedDict((k, convert(v)) for k, v in obj.items())
            if isinstance(obj, np.ndarray):
                return obj.tolist()
            if isinstance(obj, np.generic):
                return obj.item()
            return obj

        return OrderedDict([('partition', self.partition.to_dict()),
                            ('counts', convert(self.counts)),
                            ('per_index', convert(self.per_index)),
                            ('joint', convert(self.joint))])


def compare(zetas, xis, partition):
    """Compare rescaled outliers with reference eigenvalues.

    Parameters
    ----------
    zetas : array of shape (n_emp, m) or list of TrialResult
        Simulated rescaled outliers, one column per covered index of
        ``partition``. Excluded trials of a result list are dropped and
        counted.

    xis : array of shape (n_ref, m) or list of ReferenceTrial
        Eigenvalues of the reference matrices.

    partition : Partition

    Returns
    -------
    report : ComparisonReport
    """
    if len(partition) == 0:
        raise ValueError("Cannot compare samples over an empty partition.")
    emp, excluded_emp = _as_samples(zetas, partition, 'simulated')
    ref, excluded_ref = _as_samples(xis, partition, 'reference')
    if emp.shape[0] == 0 or ref.shape[0] == 0:
        raise ValueError("Both samples need at least one included trial, got "
                         "{} and {}.".format(emp.shape[0], ref.shape[0]))

    per_index = OrderedDict()
    column = 0
    for block in partition.blocks:
        for i in block:
            a, b = emp[:, column], ref[:, column]
            per_index[index_key(block, i)] = OrderedDict([
                ('ks', ks_distance(a, b)),
                ('wasserstein1', wasserstein1(a, b)),
                ('mean_emp', float(np.mean(a))),
                ('mean_ref', float(np.mean(b))),
                ('var_emp', _variance(a)),
                ('var_ref', _variance(b)),
                ('third_emp', float(moment(a, 3))),
                ('third_ref', float(moment(b, 3))),
                ('fourth_emp', float(moment(a, 4))),
                ('fourth_ref', float(moment(b, 4)))])
            column += 1

    blocks = OrderedDict()
    start = 0
    for block in partition.blocks:
        cols = slice(start, start + len(block))
        start += len(block)
        entry = OrderedDict([
            ('cross_covariance_emp', _covariance(emp[:, cols])),
            ('cross_covariance_ref', _covariance(ref[:, cols]))])
        if len(block) > 1:
            gaps_emp = min_gaps(emp[:, cols])
            gaps_ref = min_gaps(ref[:, cols])
            scale = np.sqrt(np.mean(np.diag(entry['cross_covariance_ref'])))
            entry['min_gap_ks'] = ks_distance(gaps_emp, gaps_ref)
            entry['min_gap_wasserstein1'] = wasserstein1(gaps_emp, gaps_ref)
            entry['small_gap_emp'] = _small_gap_fraction(gaps_emp, scale)
            entry['small_gap_ref'] = _small_gap_fraction(gaps_ref, scale)
        blocks[block_label(block)] = entry

    joint = OrderedDict([('correlation_emp', _correlation(emp)),
                         ('correlation_ref', _correlation(ref)),
                         ('blocks', blocks)])
    counts = OrderedDict([('simulation', int(emp.shape[0])),
                          ('reference', int(ref.shape[0])),
                          ('excluded_simulation', excluded_emp),
                          ('excluded_reference', excluded_ref)])
    return ComparisonReport(per_index, joint, counts, partition)


def block_min_gaps(samples, partition):
    """Minimum gaps of every block with two or more indices.

    Returns
    -------
    gaps : OrderedDict
        Block label to array of shape (n_samples,).
    """
    samples = np.atleast_2d(np.asarray(samples, dtype=np.float64))
    out = OrderedDict()
    start = 0
    for block in partition.blocks:
        if len(block) > 1:
            out[block_label(block)] = min_gaps(
                samples[:, start:start + len(block)])
        start += len(block)
    return out

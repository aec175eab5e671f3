# coding=utf-8

# License: BSD 3 clause

import numpy as np
from scipy.cluster.hierarchy import DisjointSet

from deformlib.util.semicircle import coarse_cutoff, outlier_threshold

"""
This file contains the grouping of outliers into blocks of overlapping
outliers.

An outlier created by d_i fluctuates on the scale N^{-1/2} (|d_i| - 1)^{1/2}
around theta(d_i). Two indices i, j overlap at cutoff s when d_i and d_j lie
on the same side of [-1, 1] and

    N^{1/2} (|d_i| - 1)^{1/2} |d_i - d_j| <= s.

The blocks of a partition are the connected components of this relation,
applied in both orders (i, j) and (j, i), that contain at least one index
passing the outlier threshold. The fine partition uses the cutoff s of the
control parameters, the coarse partition a larger cutoff, so that every fine
block lies in exactly one coarse block.

Indices are 1-based throughout this module.
"""


class Partition(object):
    """Blocks of overlapping outliers.

    Parameters
    ----------
    blocks : list of tuples of int
        Disjoint blocks of consecutive 1-based indices in [1, r], in
        increasing order.

    d : array of shape (r,)
        Ascending eigenvalues of the deformation.

    n : int
        Dimension N.

    kind : {'fine', 'coarse'} (Default = 'fine')

    Attributes
    ----------
    d_blocks : list of float
        Reference value d_pi = min{d_i : i in pi} of every block.

    covered : tuple of int
        Sorted union of the blocks.
    """

    def __init__(self, blocks, d, n, kind='fine'):
        if kind not in ('fine', 'coarse'):
            raise ValueError('"kind" should be one of the following '
                             "['fine', 'coarse'], got {}.".format(kind))
        self.blocks = [tuple(int(i) for i in b) for b in blocks]
        self.d = np.asarray(d, dtype=np.float64)
        self.n = int(n)
        self.kind = kind
        self._validate()
        self.d_blocks = [block_reference_d(b, self.d) for b in self.blocks]
        self.covered = tuple(sorted(i for b in self.blocks for i in b))

    def _validate(self):
        r = self.d.size
        seen = set()
        for block in self.blocks:
            if len(block) == 0:
                raise ValueError("Blocks must be nonempty.")
            if list(block) != list(range(block[0], block[-1] + 1)):
                raise ValueError("Block {} is not a set of consecutive "
                                 "integers.".format(block))
            if block[0] < 1 or block[-1] > r:
                raise ValueError("Block {} is out of range [1, {}]."
                                 .format(block, r))
            if seen.intersection(block):
                raise ValueError("Blocks are not disjoint.")
            seen.update(block)
            values = self.d[np.asarray(block) - 1]
            if np.any(values > 0) and np.any(values < 0):
                raise ValueError("Block {} mixes outliers on both sides of "
                                 "the spectrum (d = {}); the overlap cutoff "
                                 "is too large for N = {}."
                                 .format(block, values, self.n))
            if np.any(np.abs(values) <= 1):
                raise ValueError("Block {} contains an index with |d_i| <= 1 "
                                 "(d = {}).".format(block, values))

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __eq__(self, other):
        if not isinstance(other, Partition):
            return NotImplemented
        return (self.blocks == other.blocks and self.kind == other.kind
                and self.n == other.n and np.array_equal(self.d, other.d))

    def __repr__(self):
        return 'Partition(kind={!r}, blocks={})'.format(self.kind,
                                                        self.blocks)

    def to_dict(self):
        return {'kind': self.kind, 'n': self.n, 'd': self.d.tolist(),
                'blocks': [list(b) for b in self.blocks],
                'd_blocks': [float(x) for x in self.d_blocks]}

    @classmethod
    def from_dict(cls, data):
        return cls(data['blocks'], data['d'], data['n'],
                   kind=data.get('kind', 'fine'))


def block_label(block):
    """Compact label of a block, '1-2' for (1, 2) and '3' for (3,)."""
    if len(block) == 1:
        return str(block[0])
    return '{}-{}'.format(block[0], block[-1])


def is_outlier(d_i, cp):
    """True iff |d_i| - 1 passes the outlier threshold of ``cp``."""
    return bool(abs(d_i) - 1.0 >= outlier_threshold(cp))


def overlap_metric(d_i, d_j, n):
    """N^{1/2} (|d_i| - 1)^{1/2} |d_i - d_j|.

    Raises
    ------
    ValueError
        If |d_i| <= 1.
    """
    if not abs(d_i) > 1:
        raise ValueError("The overlap metric needs |d_i| > 1, got {}."
                         .format(d_i))
    return float(np.sqrt(n) * np.sqrt(abs(d_i) - 1.0) * abs(d_i - d_j))


def fluctuation_scale(d_i, n):
    """N^{-1/2} (|d_i| - 1)^{1/2}."""
    if not abs(d_i) >= 1:
        raise ValueError("The fluctuation scale needs |d_i| >= 1, got {}."
                         .format(d_i))
    return float(np.sqrt((abs(d_i) - 1.0) / n))


def critical_d(a, n):
    """1 + a N^{-1/3}, the value of d at distance a from the transition on
    its natural scale."""
    return 1.0 + a * n ** (-1.0 / 3.0)


def _check_d(d):
    d = np.atleast_1d(np.asarray(d, dtype=np.float64))
    if d.ndim != 1:
        raise ValueError("d must be one-dimensional.")
    if np.any(np.diff(d) < 0):
        raise ValueError("d must be sorted in ascending order, got {}."
                         .format(d))
    return d


def _closure(d, n, cutoff, outliers):
    r = d.size
    components = DisjointSet(range(1, r + 1))
    for i in range(r):
        if not abs(d[i]) > 1:
            continue
        for j in range(r):
            # partners outside [-1, 1] on the side of d_i only
            if j == i or not d[i] * d[j] > 0 or not abs(d[j]) > 1:
                continue
            if overlap_metric(d[i], d[j], n) <= cutoff:
                components.merge(i + 1, j + 1)
    blocks = {tuple(sorted(components.subset(i + 1))) for i in outliers}
    return sorted(blocks)


def _partition(d, cp, cutoff, kind):
    d = _check_d(d)
    outliers = [i for i in range(d.size) if is_outlier(d[i], cp)]
    blocks = _closure(d, cp.n, cutoff, outliers)
    return Partition(blocks, d, cp.n, kind=kind)


def partition_fine(d, cp):
    """Fine partition of the outliers at cutoff ``cp.s_cutoff``.

    Parameters
    ----------
    d : array of shape (r,)
        Ascending eigenvalues of the deformation.

    cp : ControlParams

    Returns
    -------
    partition : Partition
        Empty when no d_i passes the outlier threshold.
    """
    return _partition(d, cp, cp.s_cutoff, 'fine')


def partition_coarse(d, cp):
    """Coarse partition of the outliers at cutoff ``coarse_cutoff(cp)``."""
    cutoff = max(coarse_cutoff(cp), cp.s_cutoff)
    return _partition(d, cp, cutoff, 'coarse')


def coarse_block_of(block, coarse):
    """The block of the coarse partition ``coarse`` containing ``block``."""
    block = set(block)
    for candidate in coarse.blocks:
        if block.issubset(candidate):
            return candidate
    raise ValueError("No block of the coarse partition contains {}."
                     .format(sorted(block)))


def block_reference_d(block, d):
    """Reference value d_pi = min{d_i : i in block}."""
    if len(block) == 0:
        raise ValueError("The block is empty.")
    d = np.asarray(d, dtype=np.float64)
    return float(np.min(d[np.asarray(block, dtype=int) - 1]))

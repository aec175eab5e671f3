# coding=utf-8

# License: BSD 3 clause

import warnings
from collections import OrderedDict

import numpy as np
from scipy.linalg import block_diag

from deformlib.ensemble.moments import moment_tensors
from deformlib.ensemble.wigner import (SymmetryClass, check_beta,
                                       default_delta,
                                       projected_quadratic_form, truncate_v)
from deformlib.outliers.rescale import RescaledOutliers
from deformlib.reference import tensors
from deformlib.reference.gaussian import HermitianGaussian
from deformlib.util.rng import check_rng
from deformlib.util.spectra import eigenvalues_sorted

"""
Reference matrices of the outlier blocks.

For every block pi of the fine partition, the rescaled outliers of pi have the
same limiting law as the eigenvalues xi^pi of the |pi| x |pi| matrix

    Upsilon^pi + Psi^pi + N^{1/2} (|d_pi|-1)^{1/2} (|d_pi|+1)
                          (1/d_pi - D_[pi]^{-1}),

where Upsilon^pi is the [pi]-minor of

    (|d_pi|+1) (|d_pi|-1)^{1/2} (N^{1/2} V_delta* H V_delta / d_pi^2
                                 + S(V) / d_pi^4)

and Psi = (+) Psi^pi is a Gaussian matrix independent of H.

All blocks of Upsilon are built from the same draw of V_delta* H V_delta,
which correlates blocks even when their outliers do not overlap. The H used
here is a fresh sample, independent of any simulated matrix.
"""


class ReferenceSpec(object):
    """Inputs of the reference construction.

    Parameters
    ----------
    partition : Partition
        Fine partition of the outliers.

    deformation : Deformation

    law : EntryDistribution

    beta : {1, 2}

    cp : ControlParams

    delta_cutoff : float or None (Default = None)
        Entry cutoff delta of V. None selects 1/log N. Values outside
        [1/phi, 1) raise a UserWarning.

    include_e : bool (Default = True)
        Add the regularizing term E = Delta / phi to the covariance of Psi.

    include_diagonal : bool (Default = False)
        Use the true diagonal moments of H in the moment matrices, see
        :func:`deformlib.ensemble.moments.moment_tensors`.
    """

    def __init__(self, partition, deformation, law, beta, cp,
                 delta_cutoff=None, include_e=True, include_diagonal=False):
        self.partition = partition
        self.deformation = deformation
        self.law = law
        self.beta = check_beta(beta)
        self.cp = cp
        self.delta_cutoff = delta_cutoff
        self.include_e = include_e
        self.include_diagonal = include_diagonal
        self._validate()
        self.delta_ = (default_delta(self.n) if delta_cutoff is None
                       else float(delta_cutoff))
        self.v_delta = truncate_v(deformation, self.delta_)
        self._covariance = None
        self._s = None

    def _validate(self):
        if self.deformation.n != self.cp.n or self.partition.n != self.cp.n:
            raise ValueError("Dimension mismatch between the deformation "
                             "(n={}), the partition (n={}) and the control "
                             "parameters (n={}).".format(self.deformation.n,
                                                         self.partition.n,
                                                         self.cp.n))
        if not np.array_equal(self.partition.d, self.deformation.d):
            raise ValueError("The partition was built for another d.")
        if (self.beta == SymmetryClass.REAL
                and np.iscomplexobj(self.deformation.v)
                and np.any(np.imag(self.deformation.v) != 0)):
            raise ValueError("beta = 1 requires a real matrix v.")
        if self.delta_cutoff is not None:
            if not self.delta_cutoff > 0:
                raise ValueError("delta_cutoff must be positive, got {}."
                                 .format(self.delta_cutoff))
            if not 1.0 / self.phi <= self.delta_cutoff < 1.0:
                warnings.warn("delta_cutoff = {} is outside the admissible "
                              "window [1/phi, 1) = [{:.4g}, 1)."
                              .format(self.delta_cutoff, 1.0 / self.phi),
                              UserWarning)

    @property
    def n(self):
        return self.cp.n

    @property
    def phi(self):
        return self.cp.phi

    @property
    def moments(self):
        """Moment matrices of H. They are N x N and rebuilt on every access;
        the tensors derived from them are cached instead."""
        return moment_tensors(self.law, self.n, self.beta,
                              self.include_diagonal)

    def s_matrix(self):
        """Third-moment shift S(V), computed once."""
        if self._s is None:
            self._s = tensors.tensor_s(self.deformation.v, self.moments)
        return self._s

    def covariance(self):
        """Joint covariance tensor of Psi, computed once."""
        if self._covariance is None:
            self._covariance = tensors.psi_covariance_joint(self)
        return self._covariance

    def block_positions(self):
        """0-based positions of every block inside the covered indices."""
        position = {i: p for p, i in enumerate(self.partition.covered)}
        return [[position[i] for i in block]
                for block in self.partition.blocks]

    def shift(self):
        """Deterministic diagonal N^{1/2} (|d_pi|-1)^{1/2} (|d_pi|+1)
        (1/d_pi - 1/d_i) over the covered indices."""
        values = []
        for block, d_pi in zip(self.partition.blocks,
                               self.partition.d_blocks):
            d_block = self.deformation.d[np.asarray(block) - 1]
            values.append(np.sqrt(self.n) * np.sqrt(abs(d_pi) - 1.0)
                          * (abs(d_pi) + 1.0) * (1.0 / d_pi - 1.0 / d_block))
        if not values:
            return np.zeros((0, 0))
        return np.diag(np.concatenate(values))


class ReferenceSample(object):
    """One draw of the reference matrices.

    Attributes
    ----------
    upsilon : array of shape (m, m)
        Block-diagonal Upsilon over the covered indices.

    psi : array of shape (m, m)
        Block-diagonal Gaussian matrix Psi.

    shift : array of shape (m, m)
        Deterministic diagonal shift.

    xi : RescaledOutliers
        Ascending eigenvalues xi^pi_i of every block.
    """

    def __init__(self, upsilon, psi, shift, xi):
        self.upsilon = upsilon
        self.psi = psi
        self.shift = shift
        self.xi = xi


def build_upsilon(spec, random_state=None):
    """Block-diagonal Upsilon = (+) Upsilon^pi over the covered indices.

    A single draw of V_delta* H V_delta is shared by all blocks.

    Returns
    -------
    upsilon : array of shape (m, m)
    """
    rng = check_rng(random_state)
    if len(spec.partition) == 0:
        return np.zeros((0, 0))
    form = projected_quadratic_form(spec.v_delta, spec.beta, spec.law, rng)
    s = spec.s_matrix()
    blocks = []
    for block, d_pi in zip(spec.partition.blocks, spec.partition.d_blocks):
        idx = np.asarray(block) - 1
        prefactor = (abs(d_pi) + 1.0) * np.sqrt(abs(d_pi) - 1.0)
        full = (np.sqrt(spec.n) * form / d_pi ** 2 + s / d_pi ** 4)
        blocks.append(prefactor * full[np.ix_(idx, idx)])
    upsilon = block_diag(*blocks)
    if spec.beta == SymmetryClass.REAL:
        upsilon = np.real(upsilon)
    return (upsilon + upsilon.conj().T) / 2.0


def psi_sampler(spec):
    """Gaussian sampler of Psi for ``spec``."""
    return HermitianGaussian(spec.covariance(), spec.beta,
                             blocks=spec.block_positions())


def reference_eigenvalues(spec, random_state=None, sampler=None):
    """Draw the reference matrices of every block and their eigenvalues.

    Parameters
    ----------
    spec : ReferenceSpec
        Requires a nonempty partition.

    random_state : int, RandomState, Generator or None

    sampler : HermitianGaussian or None
        Pre-built sampler of Psi, see :func:`psi_sampler`. Built from
        ``spec`` when None.

    Returns
    -------
    sample : ReferenceSample
    """
    if len(spec.partition) == 0:
        raise ValueError("The partition is empty: there is no reference "
                         "matrix to sample.")
    rng = check_rng(random_state)
    if sampler is None:
        sampler = psi_sampler(spec)
    upsilon = build_upsilon(spec, rng)
    psi = sampler.sample(rng)
    shift = spec.shift()
    total = upsilon + psi + shift

    xi = OrderedDict()
    for block, positions in zip(spec.partition.blocks,
                                spec.block_positions()):
        idx = np.asarray(positions)
        values = eigenvalues_sorted(total[np.ix_(idx, idx)])
        for i, value in zip(block, values):
            xi[(block, i)] = float(value)
    return ReferenceSample(upsilon, psi, shift, RescaledOutliers(xi))

# coding=utf-8

# License: BSD 3 clause

import warnings

import numpy as np
from scipy.linalg import eigh, pinv

from deformlib.ensemble.wigner import SymmetryClass, check_beta
from deformlib.reference.tensors import (PSD_TOL, IndefiniteCovarianceError,
                                         as_pair_matrix)
from deformlib.util.rng import check_rng

"""
Sampling of self-adjoint Gaussian matrices with a prescribed entry covariance
tensor T[i, j, k, l] = E Psi_ij Psi_kl.

Psi is parametrized by independent real coordinates: the diagonal entries and
the real (and for beta = 2 imaginary) parts of the upper triangle. The linear
map L from coordinates x to vec(Psi) turns the pair matrix K of the tensor into
the real covariance C = L^+ K L^+* of x, which is factorized by a symmetric
square root.
"""

CLIP_TOL = PSD_TOL


def psd_factor(cov, tol=CLIP_TOL):
    """Symmetric square root S of a real covariance C, with S S^T = C.

    Negative eigenvalues down to -tol * trace(C) are clipped to zero, with a
    RuntimeWarning when the clipped mass exceeds rounding level.

    Parameters
    ----------
    cov : array of shape (p, p)
        Real symmetric matrix.

    tol : float (Default = 1e-10)

    Returns
    -------
    factor : array of shape (p, p)

    Raises
    ------
    IndefiniteCovarianceError
        If the smallest eigenvalue is below -tol * trace(C).
    """
    cov = np.asarray(cov, dtype=np.float64)
    if cov.size == 0:
        return cov.copy()
    cov = (cov + cov.T) / 2.0
    w, u = eigh(cov)
    scale = max(float(np.trace(cov)), float(np.max(np.abs(w))), 0.0)
    if w[0] < -tol * scale:
        raise IndefiniteCovarianceError(
            "The covariance is indefinite: smallest eigenvalue {:.3e}, "
            "tolerance {:.3e}.".format(w[0], -tol * scale))
    if w[0] < -100 * np.finfo(float).eps * max(scale, 1.0):
        warnings.warn("Clipping negative covariance eigenvalues down to "
                      "{:.3e}.".format(w[0]), RuntimeWarning)
    return (u * np.sqrt(np.clip(w, 0.0, None))) @ u.T


def min_eigenvalue_ratio(tensor):
    """Smallest eigenvalue of the pair matrix of ``tensor`` divided by its
    trace."""
    pair = as_pair_matrix(tensor)
    pair = (pair + pair.conj().T) / 2.0
    trace = float(np.real(np.trace(pair)))
    w = np.linalg.eigvalsh(pair)
    return float(w[0]) / trace if trace > 0 else float(w[0])


def coordinate_map(m, beta, blocks=None):
    """Linear map from independent real coordinates to vec(Psi).

    Parameters
    ----------
    m : int
        Dimension of Psi.

    beta : {1, 2}

    blocks : list of sequences of int or None
        0-based positions of the diagonal blocks of Psi. Entries outside the
        blocks are identically zero. None means a single block.

    Returns
    -------
    lmap : array of shape (m * m, p)
        Complex for beta = 2.
    """
    beta = check_beta(beta)
    if blocks is None:
        blocks = [range(m)]
    columns = []

    def unit(i, j):
        e = np.zeros(m * m, dtype=np.complex128)
        e[i * m + j] = 1.0
        return e

    for block in blocks:
        block = sorted(block)
        for a, i in enumerate(block):
            columns.append(unit(i, i))
            for j in block[a + 1:]:
                columns.append(unit(i, j) + unit(j, i))
                if beta == SymmetryClass.COMPLEX:
                    columns.append(1j * unit(i, j) - 1j * unit(j, i))
    if not columns:
        return np.zeros((m * m, 0), dtype=np.complex128)
    lmap = np.column_stack(columns)
    if beta == SymmetryClass.REAL:
        return lmap.real
    return lmap


def coordinate_covariance(tensor, beta, blocks=None):
    """Real covariance of the coordinates of Psi, see
    :func:`coordinate_map`."""
    m = tensor.shape[0]
    lmap = coordinate_map(m, beta, blocks)
    if lmap.shape[1] == 0:
        return np.zeros((0, 0)), lmap
    left = pinv(lmap)
    cov = left @ as_pair_matrix(tensor) @ left.conj().T
    return np.real(cov), lmap


class HermitianGaussian(object):
    """Centred Gaussian self-adjoint matrix with entry covariance
    ``tensor``. The factorization is done once, at construction.

    Parameters
    ----------
    tensor : array of shape (m, m, m, m)

    beta : {1, 2}

    blocks : list of sequences of int or None
        0-based positions of the diagonal blocks.

    tol : float (Default = 1e-10)
        Clipping tolerance relative to the trace.
    """

    def __init__(self, tensor, beta, blocks=None, tol=CLIP_TOL):
        self.tensor = np.asarray(tensor)
        self.beta = check_beta(beta)
        if self.tensor.ndim != 4 or len(set(self.tensor.shape)) != 1:
            raise ValueError("Expected a tensor of shape (m, m, m, m), got "
                             "{}.".format(self.tensor.shape))
        self.m = self.tensor.shape[0]
        self.blocks = blocks
        cov, self.lmap_ = coordinate_covariance(self.tensor, self.beta,
                                                blocks)
        self.factor_ = psd_factor(cov, tol)

    def sample(self, random_state=None, size=None):
        """Draw Psi.

        Parameters
        ----------
        random_state : int, RandomState, Generator or None

        size : int or None
            Number of independent draws. None returns a single matrix.

        Returns
        -------
        psi : array of shape (m, m) or (size, m, m)
        """
        rng = check_rng(random_state)
        count = 1 if size is None else int(size)
        p = self.factor_.shape[0]
        x = rng.standard_normal((count, p)) @ self.factor_.T
        vec = x @ self.lmap_.T
        psi = vec.reshape(count, self.m, self.m)
        if self.beta == SymmetryClass.REAL:
            psi = np.real(psi)
        else:
            psi = (psi + np.conj(np.swapaxes(psi, 1, 2))) / 2.0
        return psi[0] if size is None else psi


def sample_hermitian_gaussian(tensor, beta, random_state=None, blocks=None):
    """Draw one centred Gaussian self-adjoint matrix Psi with
    E Psi_ij Psi_kl = tensor[i, j, k, l].

    Raises
    ------
    IndefiniteCovarianceError
        If the covariance is too indefinite.
    """
    return HermitianGaussian(tensor, beta, blocks).sample(random_state)

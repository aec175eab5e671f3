# coding=utf-8

# License: BSD 3 clause

import numpy as np

from deformlib.ensemble.wigner import SymmetryClass, check_beta


class MomentTensors(object):
    """Moment matrices of a Wigner matrix H,

        mu3_ij = N^{3/2} E(|h_ij|^2 h_ij),   mu4_ij = N^2 E|h_ij|^4.

    Parameters
    ----------
    mu3 : array of shape (n, n)
        Real for beta = 1, complex for beta = 2.

    mu4 : array of shape (n, n)
        Real.

    beta : {1, 2}
    """

    def __init__(self, mu3, mu4, beta):
        self.mu3 = np.asarray(mu3)
        self.mu4 = np.asarray(mu4, dtype=np.float64)
        self.beta = check_beta(beta)
        if self.mu3.shape != self.mu4.shape or self.mu3.ndim != 2:
            raise ValueError("mu3 and mu4 must be square matrices of equal "
                             "shape, got {} and {}."
                             .format(self.mu3.shape, self.mu4.shape))

    @property
    def n(self):
        return self.mu3.shape[0]

    @property
    def excess_kurtosis(self):
        """mu4 - 4 + beta, zero off the diagonal for Gaussian entries."""
        return self.mu4 - 4.0 + self.beta


def entry_moments(law, beta):
    """Scaled third and fourth moments of a single entry.

    Returns
    -------
    moments : dict
        Keys 'offdiag' and 'diag', each mapping to the pair (mu3, mu4).
    """
    beta = check_beta(beta)
    m3, m4 = law.third_moment, law.fourth_moment
    if beta == SymmetryClass.REAL:
        # diagonal entries sqrt(2/N) x
        return {'offdiag': (m3, m4),
                'diag': (2.0 ** 1.5 * m3, 4.0 * m4)}
    # (x + iy)/sqrt(2N): E(x^2 + y^2)(x + iy) = m3 (1 + i)
    return {'offdiag': (m3 * (1.0 + 1.0j) / 2.0 ** 1.5, (m4 + 1.0) / 2.0),
            'diag': (complex(m3), m4)}


def moment_tensors(law, n, beta, include_diagonal=True):
    """Moment matrices mu3 and mu4 of a Wigner matrix with entry law ``law``.

    Parameters
    ----------
    law : EntryDistribution

    n : int
        Dimension N.

    beta : {1, 2}

    include_diagonal : bool (Default = True)
        If False, the diagonal is filled with the Gaussian values mu3 = 0
        and mu4 = 4 - beta. Diagonal entries contribute O(1/N) to the
        covariance tensors, and the centring mu4 - 4 + beta vanishes for
        Gaussian entries only off the diagonal.

    Returns
    -------
    moments : MomentTensors
    """
    beta = check_beta(beta)
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("n must be a positive integer, got {}.".format(n))
    table = entry_moments(law, beta)
    off3, off4 = table['offdiag']
    if include_diagonal:
        diag3, diag4 = table['diag']
    else:
        diag3, diag4 = 0.0, 4.0 - beta

    dtype = np.float64 if beta == SymmetryClass.REAL else np.complex128
    mu3 = np.full((n, n), off3, dtype=dtype)
    if beta == SymmetryClass.COMPLEX:
        # h_ji is the conjugate of h_ij, so mu3 is Hermitian
        mu3[np.tril_indices(n, -1)] = np.conj(off3)
    mu4 = np.full((n, n), off4, dtype=np.float64)
    mu3[np.diag_indices(n)] = diag3
    mu4[np.diag_indices(n)] = diag4
    return MomentTensors(mu3, mu4, beta)

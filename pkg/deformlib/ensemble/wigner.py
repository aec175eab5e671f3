# coding=utf-8

# License: BSD 3 clause

from enum import IntEnum

import numpy as np
from scipy.fft import dct

from deformlib.util.rng import check_rng
from deformlib.util.spectra import check_self_adjoint

"""
Wigner matrices and their finite-rank deformations.

A Wigner matrix H of dimension N has independent entries h_ij (i <= j), with
E|h_ij|^2 = 1/N off the diagonal. The diagonal variance is 2/N for real
symmetric matrices and 1/N for complex Hermitian ones. Complex off-diagonal
entries are (x + iy)/sqrt(2N) with x and y independent copies of the entry law,
so that E h_ij^2 = 0.

The deformed matrix is H + V D V*, where V has r orthonormal columns and D is
the diagonal matrix of the ascending nonzero values d_1 <= ... <= d_r.
"""

ORTHONORMALITY_TOL = 1e-10


class SymmetryClass(IntEnum):
    """Symmetry class beta of a Wigner matrix."""
    REAL = 1
    COMPLEX = 2


def check_beta(beta):
    """Validate ``beta`` and return it as a :class:`SymmetryClass`."""
    if isinstance(beta, bool):
        raise TypeError("beta must be 1 or 2, got a boolean.")
    try:
        return SymmetryClass(beta)
    except ValueError:
        raise ValueError("beta must be 1 (real symmetric) or 2 (complex "
                         "Hermitian), got {}.".format(beta))


def _wigner_block(k, n, beta, law, rng):
    """k x k principal block of a Wigner matrix of dimension n."""
    if beta == SymmetryClass.REAL:
        x = law.sample((k, k), rng)
        upper = np.triu(x, 1)
        block = upper + upper.T
        block[np.diag_indices(k)] = np.sqrt(2.0) * np.diag(x)
    else:
        x = law.sample((k, k), rng)
        y = law.sample((k, k), rng)
        upper = np.triu(x + 1j * y, 1) / np.sqrt(2.0)
        block = upper + upper.conj().T
        block[np.diag_indices(k)] = np.diag(x)
    return block / np.sqrt(n)


def sample_wigner(n, beta, law, random_state=None):
    """Sample a Wigner matrix.

    Parameters
    ----------
    n : int
        Dimension N >= 1.

    beta : {1, 2}
        Symmetry class, real symmetric or complex Hermitian.

    law : EntryDistribution
        Standardized law of the entries.

    random_state : int, RandomState, Generator or None

    Returns
    -------
    h : array of shape (n, n)
        Real for beta = 1, complex for beta = 2. h equals its conjugate
        transpose exactly.
    """
    beta = check_beta(beta)
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)) or n < 1:
        raise ValueError("n must be a positive integer, got {}.".format(n))
    rng = check_rng(random_state)
    return _wigner_block(n, n, beta, law, rng)


class Deformation(object):
    """Finite-rank deformation V D V*.

    Parameters
    ----------
    v : array of shape (n, r)
        Orthonormal columns v^(1), ..., v^(r).

    d : array of shape (r,)
        Nonzero nondecreasing eigenvalues of D.

    sigma : float (Default = 10.0)
        Constant Sigma bounding the deformation, -Sigma + 1 <= d_1 and
        d_r <= Sigma - 1.
    """

    def __init__(self, v, d, sigma=10.0):
        self.v = np.asarray(v)
        if self.v.ndim == 1:
            self.v = self.v[:, np.newaxis]
        self.d = np.atleast_1d(np.asarray(d, dtype=np.float64))
        self.sigma = sigma
        self._validate()

    def _validate(self):
        if self.d.ndim != 1 or self.d.size == 0:
            raise ValueError("d must be a nonempty vector, got shape {}."
                             .format(self.d.shape))
        if self.v.ndim != 2 or self.v.shape[1] != self.d.size:
            raise ValueError("v must have shape (n, {}), got {}."
                             .format(self.d.size, self.v.shape))
        if self.v.shape[0] < self.d.size:
            raise ValueError("The rank r = {} exceeds n = {}."
                             .format(self.d.size, self.v.shape[0]))
        if not np.all(np.isfinite(self.v)) or not np.all(
                np.isfinite(self.d)):
            raise ValueError("v and d must be finite.")
        gram = self.v.conj().T @ self.v
        err = np.max(np.abs(gram - np.eye(self.rank)))
        if err > ORTHONORMALITY_TOL:
            raise ValueError("The columns of v are not orthonormal: "
                             "max |V*V - 1| = {:.3e}.".format(err))
        if np.any(self.d == 0):
            raise ValueError("All d_i must be nonzero, got {}."
                             .format(self.d))
        if np.any(np.diff(self.d) < 0):
            raise ValueError("d must be sorted in nondecreasing order, "
                             "got {}.".format(self.d))
        if not self.sigma > 1:
            raise ValueError("sigma must be larger than 1, got {}."
                             .format(self.sigma))
        if self.d[0] < 1 - self.sigma or self.d[-1] > self.sigma - 1:
            raise ValueError("d must lie in [-sigma + 1, sigma - 1] = "
                             "[{}, {}], got {}.".format(1 - self.sigma,
                                                       self.sigma - 1,
                                                       self.d))

    @property
    def n(self):
        return self.v.shape[0]

    @property
    def rank(self):
        return self.d.size

    def matrix(self):
        """The n x n matrix V D V*."""
        return (self.v * self.d) @ self.v.conj().T

    def __repr__(self):
        return 'Deformation(n={}, d={}, sigma={})'.format(
            self.n, np.array2string(self.d, separator=', '), self.sigma)


def deform(h, deformation):
    """Deformed matrix H + V D V*.

    Parameters
    ----------
    h : array of shape (n, n)
        Self-adjoint matrix.

    deformation : Deformation

    Returns
    -------
    h_tilde : array of shape (n, n)
    """
    h = np.asarray(h)
    if h.ndim != 2 or h.shape != (deformation.n, deformation.n):
        raise ValueError("Dimension mismatch: h has shape {} and the "
                         "deformation acts on dimension {}."
                         .format(h.shape, deformation.n))
    return check_self_adjoint(h + deformation.matrix())


def default_delta(n):
    """Default entry cutoff 1/log N."""
    return 1.0 / np.log(n)


def truncate_v(v, delta):
    """Entrywise cutoff V^delta_ij = V_ij 1{|V_ij| > delta}.

    Parameters
    ----------
    v : Deformation or array of shape (n, r)

    delta : float
        Positive cutoff.

    Returns
    -------
    v_delta : array of shape (n, r)
    """
    if isinstance(v, Deformation):
        v = v.v
    v = np.asarray(v)
    if not delta > 0:
        raise ValueError("delta must be positive, got {}.".format(delta))
    return np.where(np.abs(v) > delta, v, 0)


def projected_quadratic_form(v_delta, beta, law, random_state=None):
    """Sample V_delta* H V_delta for a fresh Wigner matrix H.

    Only the rows where V_delta has support contribute, so only the
    principal block of H on those rows is sampled, with the variance of a
    Wigner matrix of the full dimension N = v_delta.shape[0].

    Parameters
    ----------
    v_delta : array of shape (n, r)

    beta : {1, 2}

    law : EntryDistribution

    random_state : int, RandomState, Generator or None

    Returns
    -------
    form : array of shape (r, r)
    """
    beta = check_beta(beta)
    rng = check_rng(random_state)
    v_delta = np.asarray(v_delta)
    n, r = v_delta.shape
    support = np.flatnonzero(np.any(v_delta != 0, axis=1))
    dtype = np.complex128 if (beta == SymmetryClass.COMPLEX
                              or np.iscomplexobj(v_delta)) else np.float64
    if support.size == 0:
        return np.zeros((r, r), dtype=dtype)
    block = _wigner_block(support.size, n, beta, law, rng)
    v_s = v_delta[support]
    form = v_s.conj().T @ block @ v_s
    return ((form + form.conj().T) / 2.0).astype(dtype, copy=False)


def coordinate_vectors(n, r):
    """First r standard basis vectors e_1, ..., e_r."""
    return np.eye(n, r)


def delocalized_vectors(n, r):
    """First r vectors of the orthonormal cosine basis. The first one is
    N^{-1/2}(1, ..., 1) and every entry is at most (2/N)^{1/2} in modulus."""
    if r > n:
        raise ValueError("r = {} exceeds n = {}.".format(r, n))
    basis = dct(np.eye(n), type=2, norm='ortho', axis=0)
    return np.ascontiguousarray(basis[:r].T)


def haar_vectors(n, r, beta=1, random_state=None):
    """r orthonormal columns distributed according to the Haar measure on
    the real (beta = 1) or complex (beta = 2) Stiefel manifold."""
    beta = check_beta(beta)
    rng = check_rng(random_state)
    g = rng.standard_normal((n, r))
    if beta == SymmetryClass.COMPLEX:
        g = (g + 1j * rng.standard_normal((n, r))) / np.sqrt(2.0)
    q, upper = np.linalg.qr(g)
    phases = np.diag(upper) / np.abs(np.diag(upper))
    return q * phases

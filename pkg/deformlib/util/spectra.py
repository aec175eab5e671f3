# coding=utf-8

# License: BSD 3 clause

import warnings

import numpy as np
from scipy.linalg import eigvalsh
from scipy.sparse.linalg import ArpackNoConvergence, eigsh

from deformlib.util.semicircle import classical_locations, control_parameter

"""
This file contains eigenvalue routines for self-adjoint matrices. Spectra are
always returned in ascending order, lambda_i(A) <= lambda_j(A) for i <= j.

It also contains two classical perturbation results, used as verified
utilities and by the property suites:

- the block perturbation bound for near-degenerate spectra
- the inclusion of sigma(A + B) in the ||B||-neighbourhood of sigma(A)
"""

SELF_ADJOINT_TOL = 1e-10
DENSE_LIMIT = 4000


def check_self_adjoint(mat, tol=SELF_ADJOINT_TOL):
    """Check that ``mat`` is square and self-adjoint up to ``tol``.

    Matrices within tolerance are symmetrized, (A + A*)/2, so that rounding
    accumulated while building them does not reach the eigensolver.

    Returns
    -------
    mat : array of shape (n, n)
        The symmetrized matrix.
    """
    mat = np.asarray(mat)
    if mat.ndim != 2 or mat.shape[0] != mat.shape[1]:
        raise ValueError("Expected a square matrix, got shape {}."
                         .format(mat.shape))
    if not np.all(np.isfinite(mat)):
        raise ValueError("The matrix contains NaN or infinite entries.")
    if mat.size == 0:
        return mat
    scale = max(1.0, float(np.max(np.abs(mat))))
    asym = float(np.max(np.abs(mat - mat.conj().T)))
    if asym > tol * scale:
        raise ValueError("The matrix is not self-adjoint: "
                         "max |A - A*| = {:.3e}.".format(asym))
    return (mat + mat.conj().T) / 2.0


def eigenvalues_sorted(mat):
    """Full spectrum of a self-adjoint matrix in ascending order.

    Parameters
    ----------
    mat : array of shape (n, n)
        Real symmetric or complex Hermitian matrix.

    Returns
    -------
    spectrum : array of shape (n,)
    """
    mat = check_self_adjoint(mat)
    return np.sort(eigvalsh(mat), kind='stable')


def extreme_eigenvalues(mat, k_low, k_high, method='auto'):
    """The ``k_low`` smallest and ``k_high`` largest eigenvalues.

    Parameters
    ----------
    mat : array of shape (n, n)
        Self-adjoint matrix.

    k_low, k_high : int
        Number of eigenvalues requested at each end of the spectrum.

    method : {'auto', 'dense', 'lanczos'} (Default = 'auto')
        'dense' calls LAPACK on an index range of the spectrum, 'lanczos'
        uses the implicitly restarted Lanczos iteration of ARPACK and falls
        back to 'dense' when it does not converge. 'auto' selects 'dense' up
        to dimension 4000.

    Returns
    -------
    lowest : array of shape (k_low,)
        Ascending.

    highest : array of shape (k_high,)
        Ascending.
    """
    mat = check_self_adjoint(mat)
    n = mat.shape[0]
    if k_low < 0 or k_high < 0 or k_low + k_high > n:
        raise ValueError("Need 0 <= k_low, k_high and k_low + k_high <= n, "
                         "got k_low={}, k_high={}, n={}."
                         .format(k_low, k_high, n))
    if method not in ('auto', 'dense', 'lanczos'):
        raise ValueError('"method" should be one of the following '
                         "['auto', 'dense', 'lanczos'], got {}."
                         .format(method))
    if method == 'auto':
        method = 'dense' if n <= DENSE_LIMIT else 'lanczos'

    if method == 'lanczos':
        try:
            return (_lanczos_end(mat, k_low, 'SA'),
                    _lanczos_end(mat, k_high, 'LA'))
        except ArpackNoConvergence:
            warnings.warn("Lanczos iteration did not converge, falling "
                          "back to the dense solver.", RuntimeWarning)

    lowest = np.empty(0)
    highest = np.empty(0)
    if k_low > 0:
        lowest = eigvalsh(mat, subset_by_index=[0, k_low - 1])
    if k_high > 0:
        highest = eigvalsh(mat, subset_by_index=[n - k_high, n - 1])
    return np.sort(lowest), np.sort(highest)


def _lanczos_end(mat, k, which):
    n = mat.shape[0]
    if k == 0:
        return np.empty(0)
    if k >= n - 1:
        # ARPACK needs k < n - 1 for Hermitian problems
        spectrum = eigvalsh(mat)
        return spectrum[:k] if which == 'SA' else spectrum[n - k:]
    # fixed starting vector keeps the iteration reproducible
    v0 = np.ones(n, dtype=mat.dtype) / np.sqrt(n)
    values = eigsh(mat, k=k, which=which, v0=v0, return_eigenvectors=False,
                   tol=1e-12)
    return np.sort(values)


class BlockPerturbation(object):
    """Block matrices A = diag(A11, A22) and off-diagonal B with blocks
    B12 and B21 = B12*.

    Parameters
    ----------
    a11 : array of shape (n, n)
        Self-adjoint upper left block.

    a22 : array of shape (m, m)
        Self-adjoint lower right block.

    b12 : array of shape (n, m)
        Coupling block.
    """

    def __init__(self, a11, a22, b12):
        self.a11 = check_self_adjoint(np.atleast_2d(a11))
        self.a22 = check_self_adjoint(np.atleast_2d(a22))
        self.b12 = np.atleast_2d(np.asarray(b12))
        expected = (self.a11.shape[0], self.a22.shape[0])
        if self.b12.shape != expected:
            raise ValueError("b12 must have shape {}, got {}."
                             .format(expected, self.b12.shape))

    @property
    def unperturbed(self):
        n, m = self.b12.shape
        dtype = np.result_type(self.a11, self.a22, self.b12)
        a = np.zeros((n + m, n + m), dtype=dtype)
        a[:n, :n] = self.a11
        a[n:, n:] = self.a22
        return a

    @property
    def coupling(self):
        n, m = self.b12.shape
        b = np.zeros((n + m, n + m), dtype=np.result_type(self.b12, float))
        b[:n, n:] = self.b12
        b[n:, :n] = self.b12.conj().T
        return b


def _spectral_gap(spec_a, spec_b):
    return float(np.min(np.abs(spec_a[:, np.newaxis] - spec_b[np.newaxis, :])))


def perturbation_bound(bp):
    """Locate the eigenvalues of A + B near sigma(A11) and check the bound
    |mu_i - lambda_i(A11)| <= ||B||^2 / (gap - 2 ||B||).

    Parameters
    ----------
    bp : BlockPerturbation
        Requires gap = dist(sigma(A11), sigma(A22)) >= 3 ||B||.

    Returns
    -------
    report : dict
        Keys 'gap', 'coupling_norm', 'bound', 'eigenvalues' (the eigenvalues
        of A + B in the 2||B||-neighbourhood of sigma(A11)),
        'displacements', 'bounds_per_index' and 'holds'.
    """
    spec_11 = eigenvalues_sorted(bp.a11)
    spec_22 = eigenvalues_sorted(bp.a22)
    norm_b = float(np.linalg.norm(bp.b12, 2))
    gap = _spectral_gap(spec_11, spec_22)
    if gap < 3.0 * norm_b:
        raise ValueError("The spectral gap {:.4g} is smaller than "
                         "3 ||B|| = {:.4g}.".format(gap, 3.0 * norm_b))

    perturbed = eigenvalues_sorted(bp.unperturbed + bp.coupling)
    dist = np.min(np.abs(perturbed[:, np.newaxis] - spec_11[np.newaxis, :]),
                  axis=1)
    in_domain = perturbed[dist <= 2.0 * norm_b]

    if norm_b == 0.0:
        bound = 0.0
    else:
        bound = norm_b ** 2 / (gap - 2.0 * norm_b)
    n = spec_11.size
    holds = in_domain.size == n
    if holds:
        displacements = np.abs(in_domain - spec_11)
        scale = max(1.0, float(np.max(np.abs(spec_11))))
        holds = bool(np.all(displacements <= bound + 1e-12 * scale))
    else:
        displacements = np.full(n, np.nan)

    return {'gap': gap,
            'coupling_norm': norm_b,
            'bound': bound,
            'eigenvalues': in_domain,
            'displacements': displacements,
            'bounds_per_index': np.full(n, bound),
            'holds': holds}


def spectrum_inclusion(a, b, return_distance=False):
    """Check that sigma(A + B) lies in the closed ||B||-neighbourhood of
    sigma(A).

    Parameters
    ----------
    a, b : arrays of shape (n, n)
        Self-adjoint matrices.

    return_distance : bool (Default = False)
        Also return the largest distance from an eigenvalue of A + B to
        sigma(A).

    Returns
    -------
    included : bool

    max_distance : float
        Only returned when ``return_distance`` is True.
    """
    a = check_self_adjoint(a)
    b = check_self_adjoint(b)
    if a.shape != b.shape:
        raise ValueError("Shapes differ: {} and {}.".format(a.shape, b.shape))
    spec_a = eigenvalues_sorted(a)
    spec_ab = eigenvalues_sorted(a + b)
    norm_b = float(np.linalg.norm(b, 2))
    max_distance = float(np.max(np.min(
        np.abs(spec_ab[:, np.newaxis] - spec_a[np.newaxis, :]), axis=1)))
    scale = max(1.0, float(np.max(np.abs(spec_a))))
    included = max_distance <= norm_b + 1e-12 * scale
    if return_distance:
        return included, max_distance
    return included


def _check_ascending(spectrum):
    spectrum = np.asarray(spectrum, dtype=np.float64)
    if spectrum.ndim != 1:
        raise ValueError("A spectrum must be one-dimensional.")
    if np.any(np.diff(spectrum) < 0):
        raise ValueError("The spectrum must be sorted in ascending order.")
    return spectrum


def rigidity_gauge(spectrum, constant=1.0, phi_power=0.0):
    """Deviation of each eigenvalue from its classical location.

    The envelope constant * phi^phi_power * min(alpha, N + 1 - alpha)^{-1/3}
    * N^{-2/3} is reported next to the deviations; it is not asserted.

    Parameters
    ----------
    spectrum : array of shape (n,)
        Ascending spectrum of an undeformed Wigner matrix.

    constant : float (Default = 1.0)

    phi_power : float (Default = 0.0)
        Exponent of the control parameter phi in the envelope. Requires
        n >= 3 when nonzero.

    Returns
    -------
    report : dict
        Keys 'deviation', 'envelope' and 'ratio' (deviation / envelope).
    """
    spectrum = _check_ascending(spectrum)
    n = spectrum.size
    gamma = classical_locations(n)
    alpha = np.arange(1, n + 1)
    envelope = (constant * np.minimum(alpha, n + 1 - alpha) ** (-1.0 / 3.0)
                * n ** (-2.0 / 3.0))
    if phi_power:
        envelope = envelope * control_parameter(n) ** phi_power
    deviation = np.abs(spectrum - gamma)
    return {'deviation': deviation, 'envelope': envelope,
            'ratio': deviation / envelope}


def count_beyond(spectrum, threshold):
    """Number of eigenvalues strictly larger than ``threshold``."""
    return int(np.sum(np.asarray(spectrum) > threshold))


def interlacing_holds(spectrum_h, spectrum_deformed, rank, tol=1e-9):
    """Weyl interlacing for a rank ``rank`` perturbation:
    lambda_{alpha - r} <= mu_alpha <= lambda_{alpha + r}."""
    lam = _check_ascending(spectrum_h)
    mu = _check_ascending(spectrum_deformed)
    if lam.size != mu.size:
        raise ValueError("Spectra of different sizes: {} and {}."
                         .format(lam.size, mu.size))
    n = lam.size
    scale = tol * max(1.0, float(np.max(np.abs(lam))))
    idx = np.arange(n)
    lower_ok = mu[rank:] >= lam[idx[rank:] - rank] - scale
    upper_ok = mu[:n - rank] <= lam[idx[:n - rank] + rank] + scale
    return bool(np.all(lower_ok) and np.all(upper_ok))

# coding=utf-8

# License: BSD 3 clause

from collections import namedtuple

import numpy as np
from scipy.optimize import brentq
from scipy.special import roots_legendre

"""
This file contains closed-form quantities of Wigner's semicircle law:

- density and distribution function
- Stieltjes transform and its first two derivatives
- the outlier location map theta(d) = d + 1/d and its inverse
- distance to the spectral edges and classical eigenvalue locations
- the logarithmic control parameter phi and the finite-N outlier thresholds

All functions accept scalars or numpy arrays unless stated otherwise.
"""

SpectralPoint = namedtuple('SpectralPoint', ['e', 'eta'])
SpectralPoint.__doc__ = """Point z = e + i*eta of the upper half plane."""


class ControlParams(object):
    """Thresholds used to decide which eigenvalues of D create outliers and
    which outliers overlap.

    Parameters
    ----------
    n : int
        Dimension N of the Wigner matrix.

    k_exponent : float (Default = 1.0)
        Exponent K of the literal threshold phi^K N^{-1/3}.

    s_cutoff : float (Default = 10.0)
        Cutoff s used by the fine partition of overlapping outliers.

    outlier_factor : float (Default = 5.0)
        Constant c of the working threshold c N^{-1/3}. At desk-scale N the
        literal phi^K is too large to be useful, so the working threshold
        uses a calibrated constant instead.

    literal : bool (Default = False)
        Use phi^K N^{-1/3} and phi^{K/2} instead of the calibrated constants.

    coarse_factor : float (Default = 100.0)
        The coarse partition cutoff is coarse_factor * s_cutoff when
        ``literal`` is False.
    """

    def __init__(self, n, k_exponent=1.0, s_cutoff=10.0, outlier_factor=5.0,
                 literal=False, coarse_factor=100.0):
        self.n = n
        self.k_exponent = k_exponent
        self.s_cutoff = s_cutoff
        self.outlier_factor = outlier_factor
        self.literal = literal
        self.coarse_factor = coarse_factor
        self._validate()

    def _validate(self):
        if isinstance(self.n, bool) or not isinstance(self.n,
                                                      (int, np.integer)):
            raise TypeError("n must be an integer, got {}."
                            .format(type(self.n).__name__))
        for name in ('n', 'k_exponent', 's_cutoff', 'outlier_factor',
                     'coarse_factor'):
            value = getattr(self, name)
            if not value > 0:
                raise ValueError("{} must be positive, got {}."
                                 .format(name, value))
        if self.literal and self.n < 3:
            raise ValueError("The literal thresholds need n >= 3, got {}."
                             .format(self.n))

    @property
    def phi(self):
        return control_parameter(self.n)

    def __repr__(self):
        return ('ControlParams(n={}, k_exponent={}, s_cutoff={}, '
                'outlier_factor={}, literal={}, coarse_factor={})'
                .format(self.n, self.k_exponent, self.s_cutoff,
                        self.outlier_factor, self.literal,
                        self.coarse_factor))

    def to_dict(self):
        return {'n': int(self.n), 'k_exponent': float(self.k_exponent),
                's_cutoff': float(self.s_cutoff),
                'outlier_factor': float(self.outlier_factor),
                'literal': bool(self.literal),
                'coarse_factor': float(self.coarse_factor)}


def density(x):
    """Density of the semicircle law, (1/2pi) sqrt([4 - x^2]_+)."""
    x = np.asarray(x, dtype=np.float64)
    return np.sqrt(np.clip(4.0 - x ** 2, 0.0, None)) / (2.0 * np.pi)


def semicircle_cdf(x, method='closed'):
    """Distribution function of the semicircle law.

    Parameters
    ----------
    x : float or array
        Evaluation points.

    method : {'closed', 'quadrature'} (Default = 'closed')
        'closed' uses x sqrt(4 - x^2)/(4 pi) + arcsin(x/2)/pi + 1/2.
        'quadrature' integrates the density with 64-point Gauss-Legendre
        after the substitution x = 2 sin(t), which removes the square root
        singularities at the edges.

    Returns
    -------
    cdf : float or array
    """
    x = np.clip(np.asarray(x, dtype=np.float64), -2.0, 2.0)
    if method == 'closed':
        return (x * np.sqrt(4.0 - x ** 2) / (4.0 * np.pi)
                + np.arcsin(x / 2.0) / np.pi + 0.5)
    if method != 'quadrature':
        raise ValueError('"method" should be one of the following '
                         "['closed', 'quadrature'], got {}.".format(method))

    nodes, weights = roots_legendre(64)
    upper = np.arcsin(x / 2.0)
    lower = -np.pi / 2.0
    half = (upper - lower) / 2.0
    mid = (upper + lower) / 2.0
    t = mid[..., np.newaxis] + half[..., np.newaxis] * nodes
    # rho(2 sin t) * 2 cos t = (2/pi) cos^2 t
    integrand = (2.0 / np.pi) * np.cos(t) ** 2
    return half * np.sum(weights * integrand, axis=-1)


def _as_complex(z):
    if isinstance(z, SpectralPoint):
        if z.eta < 0:
            raise ValueError("eta must be nonnegative, got {}."
                             .format(z.eta))
        return np.complex128(complex(z.e, z.eta))
    z = np.asarray(z, dtype=np.complex128)
    if np.any(z.imag < 0):
        raise ValueError("The Stieltjes transform is evaluated on the "
                         "closed upper half plane only.")
    return z


def stieltjes_m(z):
    """Stieltjes transform m(z) of the semicircle law.

    m(z) is the root of m^2 + z m + 1 = 0 with m(z) ~ -1/z at infinity.
    The root of larger modulus is computed first and m is obtained as its
    reciprocal, which avoids cancellation for large |z|.

    Parameters
    ----------
    z : complex, array of complex or SpectralPoint
        Points off the spectrum [-2, 2].

    Returns
    -------
    m : complex or array of complex
    """
    z = _as_complex(z)
    inside = (z.imag == 0) & (np.abs(z.real) <= 2.0)
    if np.any(inside):
        raise ValueError("m(z) is not defined on the spectrum [-2, 2] with "
                         "eta = 0.")
    s = np.sqrt(z - 2.0) * np.sqrt(z + 2.0)
    return -2.0 / (z + s)


def stieltjes_m_prime(z):
    """Derivative m'(z) = m^2 / (1 - m^2)."""
    m = stieltjes_m(z)
    return m ** 2 / (1.0 - m ** 2)


def stieltjes_m_second(z):
    """Second derivative m''(z) = 2 m m' / (1 - m^2)^2."""
    m = stieltjes_m(z)
    m_prime = m ** 2 / (1.0 - m ** 2)
    return 2.0 * m * m_prime / (1.0 - m ** 2) ** 2


def theta(d):
    """Classical location theta(d) = d + 1/d of the outlier created by d.

    Raises
    ------
    ValueError
        If |d| < 1.
    """
    d = np.asarray(d, dtype=np.float64)
    if np.any(np.abs(d) < 1.0):
        raise ValueError("theta(d) is defined for |d| >= 1 only, got {}."
                         .format(d))
    return d + 1.0 / d


def theta_inverse(t, branch=None):
    """Inverse of theta on the branch |d| >= 1.

    Parameters
    ----------
    t : float or array
        Points with |t| >= 2.

    branch : {None, 1, -1} (Default = None)
        Sign of the requested d. It must agree with sign(t); None takes it
        from t.

    Returns
    -------
    d : float or array
        (t + sign(t) sqrt(t^2 - 4)) / 2.
    """
    t = np.asarray(t, dtype=np.float64)
    if np.any(np.abs(t) < 2.0):
        raise ValueError("theta_inverse needs |t| >= 2, got {}.".format(t))
    sign = np.sign(t)
    if branch is not None:
        if branch not in (1, -1):
            raise ValueError("branch must be 1 or -1, got {}."
                             .format(branch))
        if np.any(sign != branch):
            raise ValueError("branch {} does not match the sign of t."
                             .format(branch))
    return (t + sign * np.sqrt(t ** 2 - 4.0)) / 2.0


def kappa(e):
    """Distance ||E| - 2| from E to the spectral edges."""
    return np.abs(np.abs(np.asarray(e, dtype=np.float64)) - 2.0)


def classical_locations(n):
    """Classical locations gamma_1 < ... < gamma_n of the eigenvalues.

    gamma_alpha solves n * F(gamma_alpha) = alpha where F is the
    semicircle distribution function; gamma_n = 2.

    Parameters
    ----------
    n : int
        Number of eigenvalues.

    Returns
    -------
    gamma : array of shape (n,)
    """
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError("n must be an integer, got {}."
                        .format(type(n).__name__))
    if n < 1:
        raise ValueError("n must be at least 1, got {}.".format(n))

    gamma = np.empty(n)
    for alpha in range(1, n):
        target = alpha / n
        gamma[alpha - 1] = brentq(lambda x: semicircle_cdf(x) - target,
                                  -2.0, 2.0, xtol=1e-14, rtol=1e-15)
    gamma[-1] = 2.0
    return gamma


def control_parameter(n):
    """phi_N = (log N)^(log log N).

    Parameters
    ----------
    n : int or float
        Must be at least 3 so that log log N is defined and positive.
    """
    if not n >= 3:
        raise ValueError("The control parameter needs n >= 3, got {}."
                         .format(n))
    log_n = np.log(n)
    return float(np.exp(np.log(log_n) * np.log(log_n)))


def outlier_threshold(cp):
    """Threshold on |d| - 1 above which d creates an outlier."""
    if cp.literal:
        return cp.phi ** cp.k_exponent * cp.n ** (-1.0 / 3.0)
    return cp.outlier_factor * cp.n ** (-1.0 / 3.0)


def coarse_cutoff(cp):
    """Overlap cutoff of the coarse partition: phi^{K/2} or a multiple
    of the fine cutoff."""
    if cp.literal:
        return cp.phi ** (cp.k_exponent / 2.0)
    return cp.coarse_factor * cp.s_cutoff


def isotropic_error_scale(e, eta, n):
    """N^{-1/2} (kappa_E + eta)^{-1/4}, the size of the fluctuations of
    the resolvent of a Wigner matrix outside the spectrum."""
    return n ** -0.5 * (kappa(e) + eta) ** -0.25

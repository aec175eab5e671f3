# coding=utf-8

# License: BSD 3 clause

import numpy as np

from deformlib.util.rng import check_rng

"""
This file contains the catalog of scalar laws used for the entries of Wigner
matrices. Every law is centred with unit variance; the matrix samplers apply
the 1/sqrt(N) scaling afterwards.

- gaussian: standard normal, E x^3 = 0, E x^4 = 3
- rademacher: +-1 with equal probability, E x^3 = 0, E x^4 = 1
- skewed-two-point: values a and -1/a with tunable E x^3 = a - 1/a
- shifted-exponential: Exp(1) - 1, E x^3 = 2, E x^4 = 9
- custom-table: any finite table, standardized numerically
"""

KINDS = ('gaussian', 'rademacher', 'skewed-two-point', 'shifted-exponential',
         'custom-table')

STANDARDIZATION_TOL = 1e-12


class EntryDistribution(object):
    """Standardized law of the entries of a Wigner matrix.

    Use the class methods (:meth:`gaussian`, :meth:`rademacher`,
    :meth:`skewed_two_point`, :meth:`shifted_exponential`,
    :meth:`custom_table`) rather than the constructor.

    Parameters
    ----------
    kind : str
        One of 'gaussian', 'rademacher', 'skewed-two-point',
        'shifted-exponential' and 'custom-table'.

    third_moment : float
        E x^3 of the standardized law.

    fourth_moment : float
        E x^4 of the standardized law.

    tail_constant : float
        Declared constant theta of the subexponential tail bound
        P(|x| >= t) <= exp(-t^theta) / theta. It is carried for reference and
        not verified.

    values, probabilities : array or None
        Atoms of the law for the discrete kinds.
    """

    def __init__(self, kind, third_moment, fourth_moment, tail_constant,
                 values=None, probabilities=None):
        self.kind = kind
        self.third_moment = float(third_moment)
        self.fourth_moment = float(fourth_moment)
        self.tail_constant = float(tail_constant)
        self.values = None if values is None else np.asarray(values, float)
        self.probabilities = (None if probabilities is None
                              else np.asarray(probabilities, float))
        self._validate()

    def _validate(self):
        if self.kind not in KINDS:
            raise ValueError('"kind" should be one of the following '
                             '{}, got {}.'.format(list(KINDS), self.kind))
        if self.fourth_moment < 1.0:
            raise ValueError("The fourth moment must be at least 1, got {}."
                             .format(self.fourth_moment))
        feasible = 1.0 + self.third_moment ** 2
        if self.fourth_moment < feasible - 1e-9 * max(1.0, feasible):
            raise ValueError("Infeasible moments: E x^4 = {} < 1 + (E x^3)^2"
                             " = {}.".format(self.fourth_moment, feasible))
        if self.tail_constant <= 0:
            raise ValueError("The tail constant must be positive, got {}."
                             .format(self.tail_constant))

    @classmethod
    def gaussian(cls):
        return cls('gaussian', 0.0, 3.0, 0.5)

    @classmethod
    def rademacher(cls):
        return cls('rademacher', 0.0, 1.0, 0.25,
                   values=[-1.0, 1.0], probabilities=[0.5, 0.5])

    @classmethod
    def skewed_two_point(cls, third_moment):
        """Two-point law on {a, -1/a} with P(a) = 1/(1 + a^2).

        The law is centred with unit variance and E x^3 = a - 1/a, so
        a = (m3 + sqrt(m3^2 + 4)) / 2. Its fourth moment 1 + m3^2 is the
        smallest one compatible with m3.
        """
        m3 = float(third_moment)
        a = (m3 + np.sqrt(m3 ** 2 + 4.0)) / 2.0
        p = 1.0 / (1.0 + a ** 2)
        return cls('skewed-two-point', m3, 1.0 + m3 ** 2, 0.25,
                   values=[a, -1.0 / a], probabilities=[p, 1.0 - p])

    @classmethod
    def shifted_exponential(cls):
        return cls('shifted-exponential', 2.0, 9.0, 0.5)

    @classmethod
    def custom_table(cls, values, probabilities, tail_constant=0.25):
        """Finite law given by a table of atoms, centred and scaled to unit
        variance.

        Raises
        ------
        ValueError
            If the table is degenerate or cannot be standardized to 1e-12.
        """
        values = np.asarray(values, dtype=np.float64).ravel()
        probabilities = np.asarray(probabilities, dtype=np.float64).ravel()
        if values.size == 0 or values.size != probabilities.size:
            raise ValueError("values and probabilities must be nonempty and "
                             "of equal length, got {} and {}."
                             .format(values.size, probabilities.size))
        if not (np.all(np.isfinite(values))
                and np.all(np.isfinite(probabilities))):
            raise ValueError("The table contains NaN or infinite entries.")
        if np.any(probabilities < 0):
            raise ValueError("Probabilities must be nonnegative.")
        total = probabilities.sum()
        if abs(total - 1.0) > 1e-9:
            raise ValueError("Probabilities must sum to 1, got {}."
                             .format(total))
        probabilities = probabilities / total

        mean = np.dot(probabilities, values)
        var = np.dot(probabilities, (values - mean) ** 2)
        if not var > 0:
            raise ValueError("The law is degenerate and cannot be "
                             "standardized.")
        std_values = (values - mean) / np.sqrt(var)
        if (abs(np.dot(probabilities, std_values)) > STANDARDIZATION_TOL
                or abs(np.dot(probabilities, std_values ** 2) - 1.0)
                > STANDARDIZATION_TOL):
            raise ValueError("The law could not be standardized to a "
                             "tolerance of {}.".format(STANDARDIZATION_TOL))
        m3 = np.dot(probabilities, std_values ** 3)
        m4 = np.dot(probabilities, std_values ** 4)
        return cls('custom-table', m3, m4, tail_constant,
                   values=std_values, probabilities=probabilities)

    @classmethod
    def from_dict(cls, params):
        """Build a law from its dictionary form, see :meth:`to_dict`."""
        params = dict(params)
        kind = params.pop('kind', None)
        if kind == 'gaussian':
            return cls.gaussian()
        if kind == 'rademacher':
            return cls.rademacher()
        if kind == 'shifted-exponential':
            return cls.shifted_exponential()
        if kind == 'skewed-two-point':
            return cls.skewed_two_point(params['third_moment'])
        if kind == 'custom-table':
            return cls.custom_table(params['values'],
                                    params['probabilities'],
                                    params.get('tail_constant', 0.25))
        raise ValueError('"kind" should be one of the following '
                         '{}, got {}.'.format(list(KINDS), kind))

    def to_dict(self):
        out = {'kind': self.kind}
        if self.kind == 'skewed-two-point':
            out['third_moment'] = self.third_moment
        elif self.kind == 'custom-table':
            out['values'] = self.values.tolist()
            out['probabilities'] = self.probabilities.tolist()
            out['tail_constant'] = self.tail_constant
        return out

    @property
    def is_symmetric(self):
        """True when x and -x have the same law."""
        if self.kind in ('gaussian', 'rademacher'):
            return True
        if self.kind == 'shifted-exponential':
            return False
        order = np.argsort(self.values)
        return bool(np.allclose(self.values[order], -self.values[order][::-1],
                                atol=1e-12)
                    and np.allclose(self.probabilities[order],
                                    self.probabilities[order][::-1],
                                    atol=1e-12))

    def sample(self, size, random_state=None):
        """Draw independent standardized samples.

        Parameters
        ----------
        size : int or tuple of ints
            Output shape.

        random_state : int, RandomState, Generator or None

        Returns
        -------
        samples : array of shape ``size``
        """
        rng = check_rng(random_state)
        if self.kind == 'gaussian':
            return rng.standard_normal(size)
        if self.kind == 'shifted-exponential':
            return rng.exponential(1.0, size) - 1.0
        idx = rng.choice(self.values.size, size=size, p=self.probabilities)
        return self.values[idx]

    def __repr__(self):
        if self.kind == 'skewed-two-point':
            return 'EntryDistribution.skewed_two_point({})'.format(
                self.third_moment)
        return "EntryDistribution(kind='{}', third_moment={}, " \
               "fourth_moment={})".format(self.kind, self.third_moment,
                                          self.fourth_moment)

    def __eq__(self, other):
        if not isinstance(other, EntryDistribution):
            return NotImplemented
        return self.to_dict() == other.to_dict()

    def __hash__(self):
        return hash((self.kind, self.third_moment, self.fourth_moment))


def empirical_moments(samples):
    """Mean, variance, third and fourth raw moments of a sample together
    with their standard errors.

    Returns
    -------
    moments : dict
        Keys 'mean', 'var', 'third', 'fourth', each mapping to a pair
        (estimate, standard error).
    """
    x = np.asarray(samples, dtype=np.float64).ravel()
    n = x.size
    out = {}
    for name, power in (('mean', 1), ('var', 2), ('third', 3),
                        ('fourth', 4)):
        values = x ** power
        out[name] = (float(values.mean()),
                     float(values.std(ddof=1) / np.sqrt(n)))
    return out

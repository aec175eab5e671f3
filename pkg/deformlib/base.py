# coding=utf-8

# License: BSD 3 clause

import warnings
from abc import abstractmethod, ABCMeta

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted
from threadpoolctl import threadpool_limits

from deformlib.ensemble.entries import EntryDistribution
from deformlib.ensemble.wigner import Deformation, SymmetryClass, check_beta
from deformlib.outliers.partition import partition_fine
from deformlib.outliers.rescale import column_label
from deformlib.util.rng import check_seed
from deformlib.util.semicircle import ControlParams


class BaseExperiment(BaseEstimator):
    """Base class for the Monte Carlo experiments.

    An experiment draws ``trials`` independent samples of the outliers of a
    deformed Wigner matrix (simulation side) or of the eigenvalues of the
    reference matrices (reference side). Trial t draws from its own random
    stream, derived from ``(master_seed, t)`` and the side of the experiment,
    so results do not depend on ``n_jobs``.

    Warning: This class should not be used directly.
    Use derived classes instead.

    Parameters
    ----------
    deformation : Deformation
        Eigenvectors V and eigenvalues d of the deformation.

    law : EntryDistribution or None (Default = None)
        Law of the entries of H. None selects the Gaussian law.

    beta : {1, 2} (Default = 1)
        Symmetry class of H.

    trials : int (Default = 100)
        Number of independent trials.

    master_seed : int (Default = 0)
        64-bit seed of the experiment.

    control : ControlParams or None (Default = None)
        Outlier thresholds. None selects ``ControlParams(n)``.

    delta_cutoff : float or None (Default = None)
        Entry cutoff of V used by the reference side. None selects 1/log N.

    include_e : bool (Default = True)
        Keep the regularizing term E in the covariance of the reference side.

    eigen_method : {'auto', 'dense', 'lanczos', 'full'} (Default = 'auto')
        Eigensolver of the simulation side. 'full' computes the whole
        spectrum, the other values are passed to
        :func:`deformlib.util.spectra.extreme_eigenvalues`.

    require_separation : bool (Default = False)
        Exclude simulated trials in which a covered outlier falls inside the
        bulk [-2, 2].

    n_jobs : int (Default = 1)
        The number of parallel jobs to run. None means 1 unless in a
        joblib.parallel_backend context. -1 means using all processors.
    """
    __metaclass__ = ABCMeta

    side = None

    @abstractmethod
    def __init__(self, deformation=None, law=None, beta=1, trials=100,
                 master_seed=0, control=None, delta_cutoff=None,
                 include_e=True, eigen_method='auto',
                 require_separation=False, n_jobs=1):
        self.deformation = deformation
        self.law = law
        self.beta = beta
        self.trials = trials
        self.master_seed = master_seed
        self.control = control
        self.delta_cutoff = delta_cutoff
        self.include_e = include_e
        self.eigen_method = eigen_method
        self.require_separation = require_separation
        self.n_jobs = n_jobs

    def fit(self):
        """Validate the parameters and build the partition of the outliers.

        Returns
        -------
        self
        """
        self._validate_parameters()
        self.law_ = (EntryDistribution.gaussian() if self.law is None
                     else self.law)
        self.beta_ = check_beta(self.beta)
        self.n_ = self.deformation.n
        self.cp_ = (ControlParams(self.n_) if self.control is None
                    else self.control)
        self.partition_ = partition_fine(self.deformation.d, self.cp_)
        if len(self.partition_) == 0:
            warnings.warn("No eigenvalue of the deformation passes the "
                          "outlier threshold; every trial will be excluded.",
                          RuntimeWarning)
        self.labels_ = [column_label(block, i, self._name)
                        for block in self.partition_.blocks for i in block]
        self._fit()
        return self

    def _fit(self):
        pass

    def _validate_parameters(self):
        if not isinstance(self.deformation, Deformation):
            raise TypeError("deformation should be a Deformation, got {}."
                            .format(type(self.deformation).__name__))
        if self.law is not None and not isinstance(self.law,
                                                   EntryDistribution):
            raise TypeError("law should be an EntryDistribution or None, got "
                            "{}.".format(type(self.law).__name__))
        if isinstance(self.trials, bool) or not isinstance(
                self.trials, (int, np.integer)):
            raise TypeError("parameter trials should be an integer")
        if self.trials < 1:
            raise ValueError("parameter trials must be at least 1. "
                             "input trials is {}".format(self.trials))
        check_seed(self.master_seed)
        if (self.control is not None
                and not isinstance(self.control, ControlParams)):
            raise TypeError("control should be a ControlParams or None, got "
                            "{}.".format(type(self.control).__name__))
        if self.control is not None and self.control.n != self.deformation.n:
            raise ValueError("control.n = {} does not match the dimension "
                             "n = {} of the deformation."
                             .format(self.control.n, self.deformation.n))
        if self.eigen_method not in ('auto', 'dense', 'lanczos', 'full'):
            raise ValueError('"eigen_method" should be one of the following '
                             "['auto', 'dense', 'lanczos', 'full'], got {}."
                             .format(self.eigen_method))
        if (check_beta(self.beta) == SymmetryClass.REAL
                and np.iscomplexobj(self.deformation.v)
                and np.any(np.imag(self.deformation.v) != 0)):
            raise ValueError("beta = 1 requires a real matrix v.")

    @property
    def _name(self):
        return 'zeta' if self.side == 'simulation' else 'xi'

    def run(self):
        """Run every trial.

        Returns
        -------
        results : list
            One result per trial, in trial order. Excluded trials carry
            ``excluded=True`` and the reason of the exclusion.
        """
        check_is_fitted(self, 'partition_')
        if len(self.partition_) == 0:
            results = [self._excluded(t, None, 'empty partition')
                       for t in range(self.trials)]
        else:
            results = Parallel(n_jobs=self.n_jobs)(
                delayed(self._run_trial_pinned)(t) for t in range(self.trials))
        self.n_excluded_ = sum(1 for res in results if res.excluded)
        if self.n_excluded_ and len(self.partition_):
            warnings.warn("{} of {} trials were excluded."
                          .format(self.n_excluded_, self.trials),
                          RuntimeWarning)
        return results

    def _run_trial_pinned(self, trial_index):
        # single-threaded BLAS keeps every trial bit-identical for any n_jobs
        with threadpool_limits(limits=1):
            return self._run_trial(trial_index)

    @abstractmethod
    def _run_trial(self, trial_index):
        pass

    @abstractmethod
    def _excluded(self, trial_index, seed_used, reason):
        pass

    def sample(self, results=None):
        """Included trials as an array of shape (n_included, |[Pi]|), in the
        column order of ``labels_``."""
        check_is_fitted(self, 'partition_')
        if results is None:
            results = self.run()
        return to_sample_array(results, len(self.labels_))

    def to_frame(self, results):
        """Included trials as a DataFrame with columns 'trial', 'seed' and
        one column per covered index."""
        check_is_fitted(self, 'partition_')
        kept = [res for res in results if not res.excluded]
        frame = pd.DataFrame(to_sample_array(kept, len(self.labels_)),
                             columns=self.labels_)
        frame.insert(0, 'seed', [str(res.seed_used) for res in kept])
        frame.insert(0, 'trial', [res.index for res in kept])
        return frame


def to_sample_array(results, width):
    """Stack the values of the included results into an array of shape
    (n_included, width)."""
    rows = [res.values.as_array() for res in results if not res.excluded]
    if not rows:
        return np.empty((0, width))
    return np.vstack(rows)


def exclusion_counts(results):
    """Number of excluded trials per reason."""
    counts = {}
    for res in results:
        if res.excluded:
            counts[res.reason] = counts.get(res.reason, 0) + 1
    return counts

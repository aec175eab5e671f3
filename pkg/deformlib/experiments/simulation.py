# coding=utf-8

# License: BSD 3 clause

import numpy as np
import pandas as pd
from joblib import Parallel, delayed
from numpy.linalg import LinAlgError
from scipy.sparse.linalg import ArpackNoConvergence
from threadpoolctl import threadpool_limits

from deformlib.base import BaseExperiment
from deformlib.ensemble.entries import EntryDistribution
from deformlib.ensemble.wigner import (Deformation, check_beta, deform,
                                       delocalized_vectors, sample_wigner)
from deformlib.outliers.partition import is_outlier
from deformlib.outliers.rescale import (extract_and_rescale,
                                        reconstruct_eigenvalues)
from deformlib.util import spectra
from deformlib.util.rng import check_seed, trial_stream
from deformlib.util.semicircle import ControlParams, theta


class TrialResult(object):
    """Outcome of one simulated trial.

    Parameters
    ----------
    index : int
        Trial index.

    zeta : RescaledOutliers or None
        Rescaled outliers, None for excluded trials without a spectrum.

    partition_snapshot : Partition
        Partition used to rescale the outliers.

    seed_used : int
        64-bit digest of the random stream of the trial.

    excluded : bool (Default = False)

    reason : str or None (Default = None)
    """

    def __init__(self, index, zeta, partition_snapshot, seed_used,
                 excluded=False, reason=None):
        self.index = index
        self.zeta = zeta
        self.partition_snapshot = partition_snapshot
        self.seed_used = seed_used
        self.excluded = excluded
        self.reason = reason

    @property
    def values(self):
        return self.zeta

    def __eq__(self, other):
        if not isinstance(other, TrialResult):
            return NotImplemented
        return (self.index == other.index and self.zeta == other.zeta
                and self.partition_snapshot == other.partition_snapshot
                and self.seed_used == other.seed_used
                and self.excluded == other.excluded
                and self.reason == other.reason)

    def __repr__(self):
        return 'TrialResult(index={}, excluded={}, zeta={!r})'.format(
            self.index, self.excluded, self.zeta)


def _outlier_spectrum(h_tilde, d, method):
    """Spectrum of the deformed matrix in a form accepted by
    extract_and_rescale."""
    if method == 'full':
        return spectra.eigenvalues_sorted(h_tilde)
    k_low = int(np.sum(d < 0))
    return spectra.extreme_eigenvalues(h_tilde, k_low, d.size - k_low,
                                       method=method)


class SimulationExperiment(BaseExperiment):
    """Rescaled outliers of H + V D V* over independent draws of H.

    Every trial samples H, deforms it, computes the outlier eigenvalues and
    rescales them block by block with the fine partition. Trials in which the
    eigensolver fails are recorded as excluded.

    Parameters
    ----------
    See :class:`deformlib.base.BaseExperiment`.

    Examples
    --------
    >>> import numpy as np
    >>> from deformlib.ensemble import Deformation, coordinate_vectors
    >>> deformation = Deformation(coordinate_vectors(200, 1), [2.0])
    >>> experiment = SimulationExperiment(deformation, beta=2, trials=10)
    >>> zeta = experiment.fit().sample()
    >>> zeta.shape
    (10, 1)
    """
    side = 'simulation'

    def __init__(self, deformation=None, law=None, beta=1, trials=100,
                 master_seed=0, control=None, delta_cutoff=None,
                 include_e=True, eigen_method='auto',
                 require_separation=False, n_jobs=1):
        super(SimulationExperiment, self).__init__(
            deformation=deformation, law=law, beta=beta, trials=trials,
            master_seed=master_seed, control=control,
            delta_cutoff=delta_cutoff, include_e=include_e,
            eigen_method=eigen_method,
            require_separation=require_separation, n_jobs=n_jobs)

    def _excluded(self, trial_index, seed_used, reason):
        return TrialResult(trial_index, None, self.partition_, seed_used,
                           excluded=True, reason=reason)

    def _run_trial(self, trial_index):
        rng, seed_used = trial_stream(self.master_seed, trial_index,
                                      'simulation')
        d = self.deformation.d
        try:
            h = sample_wigner(self.n_, self.beta_, self.law_, rng)
            h_tilde = deform(h, self.deformation)
            spectrum = _outlier_spectrum(h_tilde, d, self.eigen_method)
        except (LinAlgError, ArpackNoConvergence) as exc:
            return self._excluded(trial_index, seed_used,
                                  'eigensolver failure: {}'.format(exc))
        zeta = extract_and_rescale(spectrum, self.partition_, d, self.n_)
        if self.require_separation:
            mu = reconstruct_eigenvalues(zeta, d, self.n_)
            if np.any(np.abs(mu) <= 2.0):
                return self._excluded(trial_index, seed_used,
                                      'outlier inside the bulk')
        return TrialResult(trial_index, zeta, self.partition_, seed_used)


def run_simulation_trials(config):
    """Run the simulation side of an experiment.

    Parameters
    ----------
    config : SimulationExperiment, BaseExperiment or dict
        An experiment, whose parameters are reused, or a dictionary of
        :class:`SimulationExperiment` parameters.

    Returns
    -------
    results : list of TrialResult
    """
    if isinstance(config, BaseExperiment):
        config = config.get_params()
    return SimulationExperiment(**config).fit().run()


def _extreme_eigenvalue(n, beta, law, deformation, master_seed, index,
                        method):
    rng, _ = trial_stream(master_seed, index, 'sweep')
    d = deformation.d[0]
    with threadpool_limits(limits=1):
        h_tilde = deform(sample_wigner(n, beta, law, rng), deformation)
        if method == 'full':
            spectrum = spectra.eigenvalues_sorted(h_tilde)
            return spectrum[-1] if d > 0 else spectrum[0]
        lowest, highest = spectra.extreme_eigenvalues(
            h_tilde, int(d < 0), int(d > 0), method=method)
    return highest[-1] if d > 0 else lowest[0]


def outlier_sweep(d_grid, n, trials, beta=1, law=None, master_seed=0,
                  eigen_method='auto', n_jobs=1):
    """Extreme eigenvalue of H + d v v* across a grid of d.

    For |d| > 1 the extreme eigenvalue detaches from the bulk and
    concentrates at theta(d); for |d| <= 1 it sticks to the edge 2 sign(d).

    Parameters
    ----------
    d_grid : array of shape (n_points,)
        Nonzero values of d.

    n : int

    trials : int
        Trials per grid point.

    beta : {1, 2} (Default = 1)

    law : EntryDistribution or None (Default = None)

    master_seed : int (Default = 0)

    eigen_method : {'auto', 'dense', 'lanczos', 'full'} (Default = 'auto')

    n_jobs : int (Default = 1)

    Returns
    -------
    table : DataFrame
        Columns 'd', 'prediction', 'mean', 'std', 'is_outlier' and
        'trials'.
    """
    d_grid = np.atleast_1d(np.asarray(d_grid, dtype=np.float64))
    if d_grid.size == 0 or np.any(d_grid == 0):
        raise ValueError("d_grid must be nonempty and contain nonzero values "
                         "only.")
    if trials < 1:
        raise ValueError("trials must be at least 1, got {}.".format(trials))
    beta = check_beta(beta)
    check_seed(master_seed)
    law = EntryDistribution.gaussian() if law is None else law
    cp = ControlParams(n)
    v = delocalized_vectors(n, 1)

    tasks = []
    for g, d in enumerate(d_grid):
        deformation = Deformation(v, [d], sigma=max(10.0, abs(d) + 2.0))
        for t in range(trials):
            tasks.append(delayed(_extreme_eigenvalue)(
                n, beta, law, deformation, master_seed, g * trials + t,
                eigen_method))
    values = np.asarray(Parallel(n_jobs=n_jobs)(tasks)).reshape(
        d_grid.size, trials)

    prediction = np.where(np.abs(d_grid) > 1,
                          theta(np.where(np.abs(d_grid) > 1, d_grid, 1.0)),
                          2.0 * np.sign(d_grid))
    std = (values.std(axis=1, ddof=1) if trials > 1
           else np.zeros(d_grid.size))
    return pd.DataFrame({'d': d_grid,
                         'prediction': prediction,
                         'mean': values.mean(axis=1),
                         'std': std,
                         'is_outlier': [is_outlier(d, cp) for d in d_grid],
                         'trials': trials})

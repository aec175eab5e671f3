# coding=utf-8

# License: BSD 3 clause

from deformlib.base import BaseExperiment
from deformlib.reference.limit import (ReferenceSpec, psi_sampler,
                                       reference_eigenvalues)
from deformlib.util.rng import trial_stream


class ReferenceTrial(object):
    """Outcome of one reference trial.

    Attributes
    ----------
    index : int

    xi : RescaledOutliers or None
        Eigenvalues of the reference matrices of every block.

    seed_used : int or None

    excluded : bool

    reason : str or None
    """

    def __init__(self, index, xi, seed_used, excluded=False, reason=None):
        self.index = index
        self.xi = xi
        self.seed_used = seed_used
        self.excluded = excluded
        self.reason = reason

    @property
    def values(self):
        return self.xi

    def __eq__(self, other):
        if not isinstance(other, ReferenceTrial):
            return NotImplemented
        return (self.index == other.index and self.xi == other.xi
                and self.seed_used == other.seed_used
                and self.excluded == other.excluded
                and self.reason == other.reason)

    def __repr__(self):
        return 'ReferenceTrial(index={}, excluded={}, xi={!r})'.format(
            self.index, self.excluded, self.xi)


class ReferenceExperiment(BaseExperiment):
    """Eigenvalues of the reference matrices over independent draws.

    The covariance of the Gaussian part is computed and factorized once, in
    :meth:`fit`. Each trial then draws a fresh H for the Upsilon term and a
    fresh Psi, both from the random stream of the trial.

    Parameters
    ----------
    See :class:`deformlib.base.BaseExperiment`.

    Attributes
    ----------
    spec_ : ReferenceSpec or None
        None when the partition is empty.

    covariance_ : array of shape (m, m, m, m) or None
        Joint covariance tensor of Psi over the covered indices.

    sampler_ : HermitianGaussian or None
    """
    side = 'reference'

    def __init__(self, deformation=None, law=None, beta=1, trials=100,
                 master_seed=0, control=None, delta_cutoff=None,
                 include_e=True, eigen_method='auto',
                 require_separation=False, n_jobs=1):
        super(ReferenceExperiment, self).__init__(
            deformation=deformation, law=law, beta=beta, trials=trials,
            master_seed=master_seed, control=control,
            delta_cutoff=delta_cutoff, include_e=include_e,
            eigen_method=eigen_method,
            require_separation=require_separation, n_jobs=n_jobs)

    def _fit(self):
        if len(self.partition_) == 0:
            self.spec_ = None
            self.covariance_ = None
            self.sampler_ = None
            return
        self.spec_ = ReferenceSpec(self.partition_, self.deformation,
                                   self.law_, self.beta_, self.cp_,
                                   delta_cutoff=self.delta_cutoff,
                                   include_e=self.include_e)
        self.spec_.s_matrix()
        self.covariance_ = self.spec_.covariance()
        self.sampler_ = psi_sampler(self.spec_)

    def _excluded(self, trial_index, seed_used, reason):
        return ReferenceTrial(trial_index, None, seed_used, excluded=True,
                              reason=reason)

    def _run_trial(self, trial_index):
        rng, seed_used = trial_stream(self.master_seed, trial_index,
                                      'reference')
        sample = reference_eigenvalues(self.spec_, rng, sampler=self.sampler_)
        return ReferenceTrial(trial_index, sample.xi, seed_used)


def run_reference_trials(config):
    """Run the reference side of an experiment.

    Parameters
    ----------
    config : BaseExperiment or dict
        An experiment, whose parameters are reused, or a dictionary of
        :class:`ReferenceExperiment` parameters.

    Returns
    -------
    results : list of ReferenceTrial
    """
    if isinstance(config, BaseExperiment):
        config = config.get_params()
    return ReferenceExperiment(**config).fit().run()

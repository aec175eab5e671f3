import numpy as np
import pytest

from deformlib.ensemble.wigner import Deformation, delocalized_vectors
from deformlib.experiments.reference import (ReferenceExperiment,
                                             ReferenceTrial,
                                             run_reference_trials)
from deformlib.experiments.simulation import (SimulationExperiment,
                                              run_simulation_trials)
from deformlib.reference.gaussian import HermitianGaussian
from deformlib.reference.tensors import tensor_delta


def test_reference_fit(gaussian_law, single_delocalized):
    experiment = ReferenceExperiment(single_delocalized, law=gaussian_law,
                                     trials=3).fit()
    assert experiment.covariance_.shape == (1, 1, 1, 1)
    assert isinstance(experiment.sampler_, HermitianGaussian)
    expected = (0.75 + 1.0 / experiment.cp_.phi) * tensor_delta(1, 1)
    assert np.allclose(experiment.covariance_, expected)
    assert experiment.labels_ == ['xi[1,1]']


def test_reference_reproducible(two_sided):
    first = ReferenceExperiment(two_sided, trials=4,
                                master_seed=7).fit().run()
    second = ReferenceExperiment(two_sided, trials=4,
                                 master_seed=7).fit().run()
    assert first == second
    assert all(isinstance(res, ReferenceTrial) for res in first)


def test_reference_independent_of_n_jobs(overlapping_pair):
    serial = ReferenceExperiment(overlapping_pair, trials=5, beta=2,
                                 n_jobs=1).fit().run()
    parallel = ReferenceExperiment(overlapping_pair, trials=5, beta=2,
                                   n_jobs=2).fit().run()
    assert serial == parallel


def test_reference_streams_differ_from_simulation(single_delocalized):
    params = {'deformation': single_delocalized, 'trials': 2,
              'master_seed': 1}
    sim = run_simulation_trials(params)
    ref = run_reference_trials(params)
    assert sim[0].seed_used != ref[0].seed_used
    assert sim[1].seed_used != ref[1].seed_used


def test_reference_from_simulation_config(single_delocalized):
    experiment = SimulationExperiment(single_delocalized, trials=2,
                                      master_seed=4)
    results = run_reference_trials(experiment)
    assert len(results) == 2
    assert not any(res.excluded for res in results)


def test_reference_sorted_within_block(overlapping_pair):
    xi = ReferenceExperiment(overlapping_pair, trials=20).fit().sample()
    assert xi.shape == (20, 2)
    assert np.all(xi[:, 1] >= xi[:, 0])


def test_reference_empty_partition():
    deformation = Deformation(delocalized_vectors(100, 1), [0.5])
    experiment = ReferenceExperiment(deformation, trials=2)
    with pytest.warns(RuntimeWarning):
        experiment.fit()
    assert experiment.spec_ is None
    assert experiment.sampler_ is None
    results = experiment.run()
    assert [res.reason for res in results] == ['empty partition'] * 2


def test_reference_without_e(gaussian_law, single_delocalized):
    experiment = ReferenceExperiment(single_delocalized, law=gaussian_law,
                                     include_e=False).fit()
    assert np.allclose(experiment.covariance_, 1.5)


def test_reference_delta_cutoff_passed(single_coordinate):
    experiment = ReferenceExperiment(single_coordinate,
                                     delta_cutoff=0.5).fit()
    assert experiment.spec_.delta_ == 0.5

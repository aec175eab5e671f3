import json

import numpy as np
import pytest

from deformlib.experiments.comparison import (ComparisonReport,
                                              block_min_gaps, compare,
                                              index_key)
from deformlib.experiments.simulation import SimulationExperiment
from deformlib.experiments.reference import ReferenceExperiment
from deformlib.outliers.partition import Partition


@pytest.fixture
def single_block():
    return Partition([(1,)], [2.0], 200)


@pytest.fixture
def pair_block():
    return Partition([(1, 2)], [2.0, 2.0], 200)


def test_index_key():
    assert index_key((1, 2), 1) == '1-2,1'
    assert index_key((3,), 3) == '3,3'


def test_compare_ks_half(single_block):
    report = compare([[0.0], [1.0]], [[0.5], [1.5]], single_block)
    entry = report.per_index['1,1']
    assert np.isclose(entry['ks'], 0.5)
    assert np.isclose(entry['wasserstein1'], 0.5)
    assert np.isclose(entry['mean_emp'], 0.5)
    assert np.isclose(entry['mean_ref'], 1.0)


def test_compare_identical(rng, pair_block):
    samples = np.sort(rng.standard_normal((300, 2)), axis=1)
    report = compare(samples, samples, pair_block)
    for entry in report.per_index.values():
        assert entry['ks'] == 0.0
        assert entry['wasserstein1'] == 0.0
        assert entry['var_emp'] == entry['var_ref']
    block = report.joint['blocks']['1-2']
    assert block['min_gap_ks'] == 0.0
    assert block['small_gap_emp'] == block['small_gap_ref']
    assert np.allclose(report.joint['correlation_emp'],
                       report.joint['correlation_ref'])
    assert report.max_ks() == 0.0


def test_compare_shift(rng, single_block):
    a = rng.standard_normal((500, 1))
    report = compare(a, a + 0.25, single_block)
    entry = report.per_index['1,1']
    assert np.isclose(entry['wasserstein1'], 0.25)
    assert np.isclose(entry['var_emp'], entry['var_ref'])
    assert np.isclose(entry['third_emp'], entry['third_ref'])


def test_compare_moments(single_block):
    a = np.array([[0.0], [0.0], [3.0]])
    entry = compare(a, a, single_block).per_index['1,1']
    assert np.isclose(entry['mean_emp'], 1.0)
    assert np.isclose(entry['var_emp'], 3.0)
    # central moments: (-1 - 1 + 8) / 3 and (1 + 1 + 16) / 3
    assert np.isclose(entry['third_emp'], 2.0)
    assert np.isclose(entry['fourth_emp'], 6.0)


def test_compare_block_statistics(pair_block):
    emp = np.array([[0.0, 1.0], [0.0, 0.01], [0.0, 2.0]])
    ref = np.array([[0.0, 1.0], [0.0, 1.5], [0.0, 2.0]])
    block = compare(emp, ref, pair_block).joint['blocks']['1-2']
    assert block['cross_covariance_emp'].shape == (2, 2)
    assert np.isclose(block['small_gap_emp'], 1.0 / 3.0)
    assert block['small_gap_ref'] == 0.0
    assert np.isclose(block['min_gap_wasserstein1'], (0.99 + 0.5) / 3.0)


def test_compare_singleton_blocks_have_no_gap_statistics(rng):
    partition = Partition([(1,), (2,)], [-3.0, 3.0], 200)
    samples = rng.standard_normal((50, 2))
    report = compare(samples, samples, partition)
    assert set(report.joint['blocks']) == {'1', '2'}
    assert 'min_gap_ks' not in report.joint['blocks']['1']
    assert report.joint['correlation_emp'].shape == (2, 2)


def test_compare_shape_mismatch(single_block):
    with pytest.raises(ValueError):
        compare(np.zeros((5, 2)), np.zeros((5, 1)), single_block)


def test_compare_empty_partition():
    with pytest.raises(ValueError):
        compare(np.zeros((3, 0)), np.zeros((3, 0)),
                Partition([], [0.5], 200))


def test_compare_no_included_trials(single_block):
    with pytest.raises(ValueError):
        compare(np.empty((0, 1)), np.zeros((3, 1)), single_block)


def test_compare_result_lists(two_sided):
    sim = SimulationExperiment(two_sided, trials=20, master_seed=2).fit()
    ref = ReferenceExperiment(two_sided, trials=30, master_seed=2).fit()
    report = compare(sim.run(), ref.run(), sim.partition_)
    assert report.counts['simulation'] == 20
    assert report.counts['reference'] == 30
    assert report.counts['excluded_simulation'] == {}
    assert list(report.per_index) == ['1,1', '2,2']
    assert 0.0 <= report.max_ks() <= 1.0


def test_compare_rejects_other_partition(single_delocalized):
    results = SimulationExperiment(single_delocalized, trials=2).fit().run()
    partition = Partition([(1,)], [3.0], 200)
    with pytest.raises(ValueError):
        compare(results, np.zeros((3, 1)), partition)


def test_report_to_dict_is_json(rng, pair_block):
    samples = np.sort(rng.standard_normal((40, 2)), axis=1)
    report = compare(samples, samples + 0.1, pair_block)
    assert isinstance(report, ComparisonReport)
    data = json.loads(json.dumps(report.to_dict()))
    assert list(data) == ['partition', 'counts', 'per_index', 'joint']
    assert data['partition']['blocks'] == [[1, 2]]
    assert len(data['joint']['correlation_emp']) == 2


def test_block_min_gaps():
    partition = Partition([(1,), (2, 3)], [-3.0, 2.0, 2.0], 200)
    samples = np.array([[9.0, 0.0, 0.5], [9.0, 1.0, 3.0]])
    gaps = block_min_gaps(samples, partition)
    assert list(gaps) == ['2-3']
    assert np.allclose(gaps['2-3'], [0.5, 2.0])

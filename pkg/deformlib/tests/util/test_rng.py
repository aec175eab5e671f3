import numpy as np
import pytest

from deformlib.util.rng import (PURPOSES, check_rng, check_seed,
                                trial_seed_sequence, trial_stream)


def test_check_rng_generator_passthrough():
    gen = np.random.default_rng(0)
    assert check_rng(gen) is gen


def test_check_rng_int():
    assert isinstance(check_rng(3), np.random.RandomState)


@pytest.mark.parametrize('seed', [1.0, '7', True, None])
def test_check_seed_type(seed):
    with pytest.raises(TypeError):
        check_seed(seed)


@pytest.mark.parametrize('seed', [-1, 2 ** 64])
def test_check_seed_range(seed):
    with pytest.raises(ValueError):
        check_seed(seed)


def test_check_seed_numpy_integer():
    assert check_seed(np.uint64(2 ** 63)) == 2 ** 63


def test_trial_stream_reproducible():
    gen_a, seed_a = trial_stream(42, 5)
    gen_b, seed_b = trial_stream(42, 5)
    assert seed_a == seed_b
    assert np.array_equal(gen_a.standard_normal(10),
                          gen_b.standard_normal(10))


def test_trial_stream_uses_philox():
    gen, _ = trial_stream(0, 0)
    assert isinstance(gen.bit_generator, np.random.Philox)


def test_trial_streams_differ_by_index():
    seeds = {trial_stream(42, t)[1] for t in range(50)}
    assert len(seeds) == 50


def test_trial_streams_differ_by_purpose():
    seeds = {trial_stream(42, 0, purpose)[1] for purpose in PURPOSES}
    assert len(seeds) == len(PURPOSES)


def test_trial_streams_differ_by_master_seed():
    assert trial_stream(1, 0)[1] != trial_stream(2, 0)[1]


def test_trial_stream_independent_of_order():
    forward = [trial_stream(9, t)[0].random() for t in range(5)]
    backward = [trial_stream(9, t)[0].random() for t in reversed(range(5))]
    assert forward == backward[::-1]


def test_trial_seed_sequence_spawn_key():
    seq = trial_seed_sequence(11, 3, 'reference')
    assert seq.entropy == 11
    assert seq.spawn_key == (PURPOSES['reference'], 3)


def test_trial_seed_sequence_purpose():
    with pytest.raises(ValueError):
        trial_seed_sequence(0, 0, 'bootstrap')


def test_trial_seed_sequence_index():
    with pytest.raises(ValueError):
        trial_seed_sequence(0, -1)

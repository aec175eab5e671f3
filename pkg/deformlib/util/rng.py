# coding=utf-8

# License: BSD 3 clause

import numpy as np
from sklearn.utils.validation import check_random_state

"""
Random stream handling.

Every Monte Carlo trial draws from its own counter-based stream derived from
``(master_seed, purpose, trial_index)``. Streams for different purposes (the
deformed-matrix simulation and the reference ensemble) never coincide, and the
stream of a trial does not depend on how the trials are scheduled across
workers.
"""

PURPOSES = {'simulation': 0, 'reference': 1, 'check': 2, 'sweep': 3,
            'deformation': 4}


def check_rng(random_state):
    """Turn ``random_state`` into an object exposing the numpy sampling API.

    Parameters
    ----------
    random_state : int, RandomState instance, Generator instance or None
        If Generator, it is returned unchanged. Otherwise the behaviour is the
        one of :func:`sklearn.utils.check_random_state`.

    Returns
    -------
    rng : Generator or RandomState
    """
    if isinstance(random_state, np.random.Generator):
        return random_state
    return check_random_state(random_state)


def check_seed(seed):
    """Validate a 64-bit master seed."""
    if isinstance(seed, (bool, np.bool_)) or not isinstance(
            seed, (int, np.integer)):
        raise TypeError("The master seed must be an integer, got {}."
                        .format(type(seed).__name__))
    if not 0 <= int(seed) < 2 ** 64:
        raise ValueError("The master seed must be in [0, 2**64), got {}."
                         .format(seed))
    return int(seed)


def trial_seed_sequence(master_seed, trial_index, purpose='simulation'):
    """Seed sequence of a single trial.

    Parameters
    ----------
    master_seed : int
        Seed of the whole experiment.

    trial_index : int
        Index of the trial, starting at zero.

    purpose : str (Default = 'simulation')
        A key of PURPOSES.

    Returns
    -------
    seq : numpy.random.SeedSequence
    """
    if purpose not in PURPOSES:
        raise ValueError('"purpose" should be one of {}, got {}.'
                         .format(sorted(PURPOSES), purpose))
    if trial_index < 0:
        raise ValueError("trial_index must be nonnegative, got {}."
                         .format(trial_index))
    return np.random.SeedSequence(check_seed(master_seed),
                                  spawn_key=(PURPOSES[purpose],
                                             int(trial_index)))


def trial_stream(master_seed, trial_index, purpose='simulation'):
    """Philox generator of a single trial.

    Returns
    -------
    rng : numpy.random.Generator

    seed_used : int
        A 64-bit digest of the stream, stored with the trial results.
    """
    seq = trial_seed_sequence(master_seed, trial_index, purpose)
    seed_used = int(seq.generate_state(1, dtype=np.uint64)[0])
    return np.random.Generator(np.random.Philox(seq)), seed_used

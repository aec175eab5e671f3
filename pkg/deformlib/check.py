# coding=utf-8

# License: BSD 3 clause

from collections import OrderedDict

import numpy as np

from deformlib.ensemble import entries, moments, wigner
from deformlib.outliers import partition
from deformlib.reference import gaussian, limit, tensors
from deformlib.util import semicircle, spectra
from deformlib.util.rng import trial_stream

"""
Property suites run by ``deformlib check``.

Every suite is a function of a random generator returning a
:class:`SuiteResult`. The library functions are looked up through their
modules at call time, so a suite always exercises the code currently bound in
the package.
"""

PSD_CONFIGS = 1000
PERTURBATION_INSTANCES = 10000
PARTITION_VECTORS = 1000


class SuiteResult(object):
    """Number of checks run by a suite and the messages of the failed ones."""

    def __init__(self, name):
        self.name = name
        self.n_checks = 0
        self.failures = []

    def check(self, condition, message):
        self.n_checks += 1
        if not condition:
            self.failures.append(message)

    @property
    def passed(self):
        return not self.failures

    def summary(self):
        status = 'OK' if self.passed else 'FAIL'
        return '[{}] {} ({} checks, {} failures)'.format(
            self.name, status, self.n_checks, len(self.failures))


def _close(a, b, tol):
    return bool(np.max(np.abs(np.asarray(a) - np.asarray(b))) <= tol)


def check_identities(rng):
    """Exact identities of the semicircle law."""
    res = SuiteResult('identities')
    e = rng.uniform(-5.0, 5.0, 1000)
    eta = rng.uniform(1e-3, 5.0, 1000)
    z = e + 1j * eta
    m = semicircle.stieltjes_m(z)
    res.check(_close(m + 1.0 / m + z, 0.0, 1e-12),
              "m + 1/m + z != 0 on the upper half plane grid")
    res.check(bool(np.all(m.imag > 0)), "Im m(z) <= 0 for some Im z > 0")

    d = np.concatenate([-np.linspace(1.01, 9.0, 50),
                        np.linspace(1.01, 9.0, 50)])
    t = semicircle.theta(d)
    res.check(_close(semicircle.stieltjes_m(t + 0j), -1.0 / d, 1e-12),
              "m(theta(d)) != -1/d")
    res.check(_close((np.abs(d) - 1.0) * semicircle.stieltjes_m_prime(t + 0j),
                     1.0 / (np.abs(d) + 1.0), 1e-10),
              "(|d| - 1) m'(theta(d)) != 1/(|d| + 1)")
    res.check(_close(semicircle.theta_inverse(t), d, 1e-12),
              "theta_inverse(theta(d)) != d")

    x = np.linspace(-2.0, 2.0, 101)
    res.check(_close(semicircle.semicircle_cdf(x),
                     semicircle.semicircle_cdf(x, method='quadrature'),
                     1e-12),
              "closed-form and quadrature distribution functions differ")
    gamma = semicircle.classical_locations(20)
    res.check(_close(semicircle.semicircle_cdf(gamma),
                     np.arange(1, 21) / 20.0, 1e-12),
              "classical locations are not the quantiles of the law")
    return res


def _random_v(rng, n, r, beta):
    return wigner.haar_vectors(n, r, beta, rng)


def check_tensors(rng):
    """Algebraic identities of the covariance tensors and agreement of the
    contractions with loop evaluations."""
    res = SuiteResult('tensors')
    for beta in (1, 2):
        for r in (1, 2, 3):
            res.check(_close(tensors.tensor_p(np.eye(r), beta),
                             np.einsum('il,kj->ijkl', np.eye(r), np.eye(r))
                             + (beta == 1) * np.einsum('ik,jl->ijkl',
                                                       np.eye(r), np.eye(r)),
                             1e-14),
                      "P(1) != Delta for beta={}, r={}".format(beta, r))

    for _ in range(100):
        beta = int(rng.integers(1, 3))
        r = int(rng.integers(1, 4))
        v = _random_v(rng, 20, r, beta)
        law = entries.EntryDistribution.skewed_two_point(rng.uniform(-2, 2))
        mom = moments.moment_tensors(law, 20, beta)
        w = tensors.tensor_w(v, mom)
        res.check(_close(tensors.tensor_q(v, mom),
                         w + w.transpose(2, 3, 0, 1), 1e-12),
                  "Q != W + W swapped (beta={}, r={})".format(beta, r))

    for beta in (1, 2):
        for r in (1, 2, 3):
            n = 12
            v = _random_v(rng, n, r, beta)
            law = entries.EntryDistribution.skewed_two_point(1.5)
            mom = moments.moment_tensors(law, n, beta)
            res.check(_close(tensors.tensor_s(v, mom),
                             tensors.oracle_tensor_s(v, mom), 1e-10),
                      "S differs from its loop evaluation (beta={}, r={})"
                      .format(beta, r))
            res.check(_close(tensors.tensor_w(v, mom),
                             tensors.oracle_tensor_w(v, mom), 1e-10),
                      "W differs from its loop evaluation (beta={}, r={})"
                      .format(beta, r))
            res.check(_close(tensors.tensor_r(v, mom, beta),
                             tensors.oracle_tensor_r(v, mom, beta), 1e-10),
                      "R differs from its loop evaluation (beta={}, r={})"
                      .format(beta, r))
    return res


def _random_spec(rng):
    n = int(rng.integers(50, 201))
    r = int(rng.integers(1, 4))
    beta = int(rng.integers(1, 3))
    magnitudes = rng.uniform(2.5, 6.0, r)
    signs = rng.choice([-1.0, 1.0], r)
    d = np.sort(signs * magnitudes)
    # a pair of nearly equal values exercises blocks with several indices
    if r > 1 and rng.uniform() < 0.5:
        d[1] = d[0] + 1e-3
        d = np.sort(d)
    law = entries.EntryDistribution.skewed_two_point(rng.uniform(-2.0, 2.0))
    deformation = wigner.Deformation(_random_v(rng, n, r, beta), d)
    cp = semicircle.ControlParams(n)
    part = partition.partition_fine(d, cp)
    return limit.ReferenceSpec(part, deformation, law, beta, cp)


def _e_term_margin():
    """Covariance of the 1 x 1 reference matrix for Rademacher entries,
    v = e_1 and d = 9, together with the contribution of E to it. Without E
    the covariance is of order 1e-5."""
    n = 1000
    cp = semicircle.ControlParams(n)
    deformation = wigner.Deformation(wigner.coordinate_vectors(n, 1), [9.0])
    part = partition.partition_fine(deformation.d, cp)
    spec = limit.ReferenceSpec(part, deformation,
                               entries.EntryDistribution.rademacher(), 1, cp)
    cov, _ = gaussian.coordinate_covariance(spec.covariance(), 1,
                                            spec.block_positions())
    return float(cov[0, 0]), 2.0 / cp.phi


def check_psd(rng, n_configs=PSD_CONFIGS):
    """Nonnegativity of the covariance of the Gaussian part of the
    reference matrices."""
    res = SuiteResult('psd')
    for _ in range(n_configs):
        spec = _random_spec(rng)
        if len(spec.partition) == 0:
            continue
        try:
            ratio = gaussian.min_eigenvalue_ratio(spec.covariance())
        except tensors.IndefiniteCovarianceError as exc:
            res.check(False, "{} for n={}, d={}".format(exc, spec.n,
                                                       spec.deformation.d))
            continue
        res.check(ratio >= -tensors.PSD_TOL,
                  "indefinite covariance (min eigenvalue / trace = {:.3e}) "
                  "for n={}, d={}".format(ratio, spec.n, spec.deformation.d))

    value, e_term = _e_term_margin()
    res.check(value >= 0.5 * e_term,
              "covariance {:.3e} of the near-degenerate configuration is "
              "below half of the regularizing term {:.3e}"
              .format(value, e_term))

    n = 1000
    cp = semicircle.ControlParams(n)
    for beta in (1, 2):
        deformation = wigner.Deformation(wigner.delocalized_vectors(n, 1),
                                         [2.0])
        part = partition.partition_fine(deformation.d, cp)
        spec = limit.ReferenceSpec(part, deformation,
                                   entries.EntryDistribution.gaussian(), beta,
                                   cp)
        expected = (3.0 / 4.0 + 1.0 / cp.phi) * tensors.tensor_delta(1, beta)
        res.check(_close(spec.covariance(), expected, 1e-10),
                  "Gaussian covariance != ((|d|+1)/d^2 + 1/phi) Delta for "
                  "beta={}".format(beta))
    return res


def check_gaussian(rng, n_samples=40000):
    """Moments of the sampled Gaussian matrices."""
    res = SuiteResult('gaussian')
    for beta in (1, 2):
        tensor = 0.8 * tensors.tensor_delta(2, beta)
        sampler = gaussian.HermitianGaussian(tensor, beta)
        cov, _ = gaussian.coordinate_covariance(tensor, beta)
        res.check(_close(sampler.factor_ @ sampler.factor_.T, cov, 1e-10),
                  "factor does not reproduce the coordinate covariance "
                  "(beta={})".format(beta))
        psi = sampler.sample(rng, size=n_samples)
        res.check(_close(psi, np.conj(np.swapaxes(psi, 1, 2)), 1e-14),
                  "sampled matrices are not self-adjoint (beta={})"
                  .format(beta))
        empirical = np.einsum('sij,skl->ijkl', psi, psi) / n_samples
        res.check(_close(empirical, tensor, 0.05),
                  "empirical covariance differs from the tensor (beta={})"
                  .format(beta))
    return res


def _random_block_perturbation(rng, n=4, m=4):
    b12 = rng.standard_normal((n, m))
    norm_b = rng.uniform(0.01, 0.3)
    b12 *= norm_b / np.linalg.norm(b12, 2)
    q1 = np.linalg.qr(rng.standard_normal((n, n)))[0]
    q2 = np.linalg.qr(rng.standard_normal((m, m)))[0]
    l1 = rng.uniform(-1.0, 1.0, n)
    l2 = rng.uniform(1.0 + 3.0 * norm_b + 0.05, 3.0, m)
    return spectra.BlockPerturbation((q1 * l1) @ q1.T, (q2 * l2) @ q2.T, b12)


def check_perturbation(rng, n_instances=PERTURBATION_INSTANCES):
    """Block perturbation bound and spectrum inclusion."""
    res = SuiteResult('perturbation')
    report = spectra.perturbation_bound(
        spectra.BlockPerturbation([[0.0]], [[10.0]], [[1.0]]))
    res.check(abs(report['eigenvalues'][0] - (5.0 - np.sqrt(26.0))) <= 1e-12,
              "worked 2 x 2 example does not give 5 - sqrt(26)")
    res.check(abs(report['bound'] - 0.125) <= 1e-15 and report['holds'],
              "worked 2 x 2 example: bound 1/8 not reproduced")

    failed = 0
    for _ in range(n_instances):
        if not spectra.perturbation_bound(
                _random_block_perturbation(rng))['holds']:
            failed += 1
    res.check(failed == 0, "perturbation bound violated in {} of {} "
              "instances".format(failed, n_instances))

    failed = 0
    for _ in range(n_instances):
        a = rng.standard_normal((6, 6))
        b = 0.3 * rng.standard_normal((6, 6))
        if not spectra.spectrum_inclusion(a + a.T, b + b.T):
            failed += 1
    res.check(failed == 0, "spectrum inclusion violated in {} of {} pairs"
              .format(failed, n_instances))
    return res


def check_spectra(rng):
    """Ordering and agreement of the eigenvalue routines."""
    res = SuiteResult('spectra')
    res.check(_close(spectra.eigenvalues_sorted(np.diag([3.0, 1.0, 2.0])),
                     [1.0, 2.0, 3.0], 1e-12),
              "eigenvalues_sorted does not return an ascending spectrum")
    h = wigner.sample_wigner(80, 1, entries.EntryDistribution.gaussian(), rng)
    spectrum = spectra.eigenvalues_sorted(h)
    res.check(bool(np.all(np.diff(spectrum) >= 0)),
              "spectrum of a Wigner matrix is not ascending")
    for method in ('dense', 'lanczos'):
        lowest, highest = spectra.extreme_eigenvalues(h, 2, 3, method=method)
        res.check(_close(lowest, spectrum[:2], 1e-8)
                  and _close(highest, spectrum[-3:], 1e-8),
                  "extreme eigenvalues ({}) differ from the full spectrum"
                  .format(method))
    deformation = wigner.Deformation(wigner.haar_vectors(80, 2, 1, rng),
                                     [-3.0, 3.0])
    deformed = spectra.eigenvalues_sorted(wigner.deform(h, deformation))
    res.check(spectra.interlacing_holds(spectrum, deformed, 2),
              "interlacing violated by a rank-2 deformation")
    res.check(spectra.count_beyond(deformed, 2.5)
              <= spectra.count_beyond(spectrum, 2.5) + 2,
              "a rank-2 deformation moved more than 2 eigenvalues")
    return res


def _random_d(rng, r):
    """Ascending signed d mixing clear outliers, values near the transition
    at |d| = 1 and values inside [-1, 1], with a chained neighbour half of
    the time."""
    kind = rng.integers(0, 3, r)
    magnitudes = np.select([kind == 0, kind == 1],
                           [rng.uniform(1.05, 4.0, r),
                            1.0 + rng.uniform(-0.02, 0.02, r)],
                           rng.uniform(0.1, 1.0, r))
    d = np.sort(rng.choice([-1.0, 1.0], r) * magnitudes)
    if r > 1 and rng.uniform() < 0.5:
        k = int(rng.integers(0, r - 1))
        d[k + 1] = d[k] + rng.uniform(0.0, 1e-3)
        d = np.sort(d)
    return d


def check_partition(rng, n_vectors=PARTITION_VECTORS):
    """Worked examples of the partitions and refinement of the coarse
    partition."""
    res = SuiteResult('partition')
    cp = semicircle.ControlParams(10000)
    fine = partition.partition_fine([1.5, 1.5005, 3.0], cp)
    res.check(fine.blocks == [(1, 2), (3,)],
              "partition of (1.5, 1.5005, 3.0) is {}".format(fine.blocks))
    res.check(len(partition.partition_fine([0.5, 1.01], cp)) == 0,
              "partition without outliers is not empty")

    failures = []
    for _ in range(n_vectors):
        n = int(rng.integers(100, 10001))
        cp = semicircle.ControlParams(n)
        d = _random_d(rng, int(rng.integers(1, 6)))
        try:
            fine = partition.partition_fine(d, cp)
            coarse = partition.partition_coarse(d, cp)
        except ValueError as exc:
            failures.append('n={}, d={}: {}'.format(n, d, exc))
            continue
        for block in fine.blocks:
            owners = [c for c in coarse.blocks if set(block) <= set(c)]
            values = d[np.asarray(block) - 1]
            if len(owners) != 1:
                failures.append('n={}, d={}: fine block {} is not inside '
                                'one coarse block'.format(n, d, block))
            elif not any(partition.is_outlier(x, cp) for x in values):
                failures.append('n={}, d={}: block {} has no outlier'
                                .format(n, d, block))
    res.check(not failures, "{} of {} random d-vectors failed, first: {}"
              .format(len(failures), n_vectors,
                      failures[0] if failures else None))
    return res


SUITES = OrderedDict([('identities', check_identities),
                      ('tensors', check_tensors),
                      ('psd', check_psd),
                      ('gaussian', check_gaussian),
                      ('perturbation', check_perturbation),
                      ('spectra', check_spectra),
                      ('partition', check_partition)])


def run_checks(names=None, master_seed=0):
    """Run property suites.

    Parameters
    ----------
    names : list of str or None (Default = None)
        Suites to run, in the order of SUITES. None runs all of them.

    master_seed : int (Default = 0)

    Returns
    -------
    results : list of SuiteResult
    """
    if names is None:
        names = list(SUITES)
    unknown = sorted(set(names) - set(SUITES))
    if unknown:
        raise ValueError("Unknown suites {}; available suites are {}."
                         .format(unknown, list(SUITES)))
    results = []
    for index, name in enumerate(SUITES):
        if name not in names:
            continue
        rng, _ = trial_stream(master_seed, index, 'check')
        try:
            results.append(SUITES[name](rng))
        except Exception as exc:
            res = SuiteResult(name)
            res.check(False, 'raised {}: {}'.format(type(exc).__name__, exc))
            results.append(res)
    return results

# coding=utf-8

# License: BSD 3 clause

import argparse
import hashlib
import json
import os
import sys
import time
from collections import OrderedDict

import numpy as np
import pandas as pd

import deformlib
from deformlib import check
from deformlib.ensemble.entries import KINDS, EntryDistribution
from deformlib.ensemble.wigner import (Deformation, coordinate_vectors,
                                       delocalized_vectors, haar_vectors)
from deformlib.experiments.comparison import block_min_gaps, compare
from deformlib.experiments.reference import ReferenceExperiment
from deformlib.experiments.simulation import (SimulationExperiment,
                                              outlier_sweep)
from deformlib.base import exclusion_counts
from deformlib.outliers.partition import Partition
from deformlib.util.rng import trial_stream
from deformlib.util.semicircle import ControlParams

"""
Command line interface.

    deformlib simulate  --config PATH --out DIR
    deformlib reference --config PATH --out DIR
    deformlib compare   --sim DIR --ref DIR --out DIR
    deformlib sweep     --config PATH --out DIR
    deformlib check     [--suite NAME] [--list]

Exit status is 0 on success, 1 when a property suite fails and 2 on usage or
configuration errors. The configuration file format is documented in
README.rst.
"""

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_CONFIG = 2

ENV_N_JOBS = 'DEFORMLIB_N_JOBS'
V_CHOICES = ('coordinate', 'delocalized', 'haar')
EIGEN_METHODS = ('auto', 'dense', 'lanczos', 'full')


class ConfigError(ValueError):
    """Invalid configuration. ``field`` is the dotted path of the offending
    entry, e.g. 'deformation.d'."""

    def __init__(self, field, message):
        self.field = field
        super(ConfigError, self).__init__(
            '{}: {}'.format(field, message) if field else message)


_MISSING = object()


def _get(section, name, path, types, default=_MISSING):
    field = '{}.{}'.format(path, name)
    if name not in section:
        if default is _MISSING:
            raise ConfigError(field, 'required field is missing')
        return default
    value = section[name]
    if value is None and default is None:
        return None
    if isinstance(value, bool) and bool not in types:
        raise ConfigError(field, 'expected {}, got a boolean'.format(
            ' or '.join(t.__name__ for t in types)))
    if not isinstance(value, types):
        raise ConfigError(field, 'expected {}, got {!r}'.format(
            ' or '.join(t.__name__ for t in types), value))
    return value


def _section(raw, name, required=True):
    if name not in raw:
        if required:
            raise ConfigError(name, 'required section is missing')
        return {}
    if not isinstance(raw[name], dict):
        raise ConfigError(name, 'expected an object')
    return raw[name]


def _law(value):
    if isinstance(value, str):
        value = {'kind': value}
    if not isinstance(value, dict):
        raise ConfigError('ensemble.law', 'expected a string or an object')
    if value.get('kind') not in KINDS:
        raise ConfigError('ensemble.law.kind', 'expected one of {}, got {!r}'
                          .format(list(KINDS), value.get('kind')))
    try:
        return EntryDistribution.from_dict(value).to_dict()
    except KeyError as exc:
        raise ConfigError('ensemble.law.{}'.format(exc.args[0]),
                          'required field is missing')
    except (TypeError, ValueError) as exc:
        raise ConfigError('ensemble.law', str(exc))


def normalize_config(raw, command='simulate'):
    """Validate a parsed configuration and fill in the defaults.

    Parameters
    ----------
    raw : dict
        Parsed JSON configuration.

    command : str (Default = 'simulate')
        The deformation section is optional for 'sweep' only.

    Returns
    -------
    config : OrderedDict
        Sections 'ensemble', 'deformation', 'control' and 'montecarlo' with
        every field present.

    Raises
    ------
    ConfigError
    """
    if not isinstance(raw, dict):
        raise ConfigError('', 'the configuration must be a JSON object')
    unknown = sorted(set(raw) - {'ensemble', 'deformation', 'control',
                                 'montecarlo'})
    if unknown:
        raise ConfigError(unknown[0], 'unknown section')

    ens = _section(raw, 'ensemble')
    n = _get(ens, 'n', 'ensemble', (int,))
    if n < 3:
        raise ConfigError('ensemble.n', 'must be at least 3, got {}'
                          .format(n))
    beta = _get(ens, 'beta', 'ensemble', (int,), 1)
    if beta not in (1, 2):
        raise ConfigError('ensemble.beta', 'must be 1 or 2, got {}'
                          .format(beta))
    ensemble = OrderedDict([('n', n), ('beta', beta),
                            ('law', _law(ens.get('law', 'gaussian')))])

    deformation = None
    if command != 'sweep' or 'deformation' in raw:
        dfm = _section(raw, 'deformation')
        d = _get(dfm, 'd', 'deformation', (list,))
        if not d or not all(isinstance(x, (int, float))
                            and not isinstance(x, bool) for x in d):
            raise ConfigError('deformation.d', 'expected a nonempty list of '
                              'numbers')
        if len(d) > n:
            raise ConfigError('deformation.d', 'rank {} exceeds n = {}'
                              .format(len(d), n))
        v = _get(dfm, 'v', 'deformation', (str, list), 'coordinate')
        if isinstance(v, str) and v not in V_CHOICES:
            raise ConfigError('deformation.v', 'expected one of {} or a '
                              'matrix, got {!r}'.format(list(V_CHOICES), v))
        if isinstance(v, list):
            shape = np.shape(v)
            if shape != (n, len(d)):
                raise ConfigError('deformation.v', 'expected a {} x {} '
                                  'matrix, got shape {}'
                                  .format(n, len(d), shape))
        sigma = _get(dfm, 'sigma', 'deformation', (int, float), 10.0)
        deformation = OrderedDict([('d', [float(x) for x in d]), ('v', v),
                                   ('sigma', float(sigma))])

    ctl = _section(raw, 'control', required=False)
    control = OrderedDict([
        ('k_exponent', float(_get(ctl, 'k_exponent', 'control',
                                  (int, float), 1.0))),
        ('s_cutoff', float(_get(ctl, 's_cutoff', 'control', (int, float),
                                10.0))),
        ('outlier_factor', float(_get(ctl, 'outlier_factor', 'control',
                                      (int, float), 5.0))),
        ('literal', _get(ctl, 'literal', 'control', (bool,), False)),
        ('coarse_factor', float(_get(ctl, 'coarse_factor', 'control',
                                     (int, float), 100.0))),
        ('delta_cutoff', _get(ctl, 'delta_cutoff', 'control', (int, float),
                              None)),
        ('include_e', _get(ctl, 'include_e', 'control', (bool,), True))])

    mc = _section(raw, 'montecarlo', required=False)
    trials = _get(mc, 'trials', 'montecarlo', (int,), 100)
    if trials < 1:
        raise ConfigError('montecarlo.trials', 'must be at least 1, got {}'
                          .format(trials))
    seed = _get(mc, 'seed', 'montecarlo', (int,), 0)
    if not 0 <= seed < 2 ** 64:
        raise ConfigError('montecarlo.seed', 'must be in [0, 2**64), got {}'
                          .format(seed))
    eigen_method = _get(mc, 'eigen_method', 'montecarlo', (str,), 'auto')
    if eigen_method not in EIGEN_METHODS:
        raise ConfigError('montecarlo.eigen_method', 'expected one of {}, '
                          'got {!r}'.format(list(EIGEN_METHODS),
                                            eigen_method))
    d_grid = _get(mc, 'd_grid', 'montecarlo', (list,), None)
    if command == 'sweep' and not d_grid:
        raise ConfigError('montecarlo.d_grid', 'required field is missing')
    montecarlo = OrderedDict([
        ('trials', trials), ('seed', seed), ('eigen_method', eigen_method),
        ('require_separation', _get(mc, 'require_separation', 'montecarlo',
                                    (bool,), False)),
        ('d_grid', None if d_grid is None else [float(x) for x in d_grid])])

    return OrderedDict([('ensemble', ensemble), ('deformation', deformation),
                        ('control', control), ('montecarlo', montecarlo)])


def load_config(path, command='simulate', seed=None):
    """Read, validate and normalize a JSON configuration file.

    Parameters
    ----------
    path : str

    command : str (Default = 'simulate')

    seed : int or None (Default = None)
        Overrides montecarlo.seed.

    Raises
    ------
    ConfigError
    """
    try:
        with open(path) as f:
            raw = json.load(f)
    except IOError as exc:
        raise ConfigError('', 'cannot read {}: {}'.format(path, exc))
    except ValueError as exc:
        line = getattr(exc, 'lineno', None)
        where = ' (line {})'.format(line) if line is not None else ''
        raise ConfigError('', 'invalid JSON in {}{}: {}'
                          .format(path, where, exc))
    if seed is not None:
        if not isinstance(raw, dict):
            raise ConfigError('', 'the configuration must be a JSON object')
        raw.setdefault('montecarlo', {})
        if isinstance(raw['montecarlo'], dict):
            raw['montecarlo']['seed'] = seed
    return normalize_config(raw, command)


def config_hash(config):
    """SHA-256 of the canonical JSON form of ``config``."""
    canonical = json.dumps(config, sort_keys=True, separators=(',', ':'))
    return hashlib.sha256(canonical.encode('utf-8')).hexdigest()


def build_deformation(config):
    """Deformation described by a normalized configuration."""
    ens, dfm = config['ensemble'], config['deformation']
    n, r = ens['n'], len(dfm['d'])
    if dfm['v'] == 'coordinate':
        v = coordinate_vectors(n, r)
    elif dfm['v'] == 'delocalized':
        v = delocalized_vectors(n, r)
    elif dfm['v'] == 'haar':
        rng, _ = trial_stream(config['montecarlo']['seed'], 0, 'deformation')
        v = haar_vectors(n, r, ens['beta'], rng)
    else:
        v = np.asarray(dfm['v'], dtype=np.float64)
    try:
        return Deformation(v, dfm['d'], sigma=dfm['sigma'])
    except ValueError as exc:
        raise ConfigError('deformation', str(exc))


def build_control(config):
    ctl = config['control']
    try:
        return ControlParams(config['ensemble']['n'],
                             k_exponent=ctl['k_exponent'],
                             s_cutoff=ctl['s_cutoff'],
                             outlier_factor=ctl['outlier_factor'],
                             literal=ctl['literal'],
                             coarse_factor=ctl['coarse_factor'])
    except (TypeError, ValueError) as exc:
        raise ConfigError('control', str(exc))


def experiment_params(config, n_jobs=1):
    """Parameters of :class:`deformlib.base.BaseExperiment` described by a
    normalized configuration."""
    mc = config['montecarlo']
    return dict(deformation=build_deformation(config),
                law=EntryDistribution.from_dict(config['ensemble']['law']),
                beta=config['ensemble']['beta'],
                trials=mc['trials'],
                master_seed=mc['seed'],
                control=build_control(config),
                delta_cutoff=config['control']['delta_cutoff'],
                include_e=config['control']['include_e'],
                eigen_method=mc['eigen_method'],
                require_separation=mc['require_separation'],
                n_jobs=n_jobs)


def _timestamp():
    # SOURCE_DATE_EPOCH pins the timestamp for byte-identical reruns
    epoch = os.environ.get('SOURCE_DATE_EPOCH')
    seconds = int(epoch) if epoch else int(time.time())
    return time.strftime('%Y-%m-%dT%H:%M:%SZ', time.gmtime(seconds))


class RunManifest(object):
    """Provenance of an output directory.

    Parameters
    ----------
    command : str

    config : dict
        Normalized configuration, sufficient to reproduce the directory.

    output_paths : dict
        Role of every file written, mapped to its name in the directory.

    extra : dict or None
        Command specific entries, e.g. the exclusion counts.
    """
    FILENAME = 'manifest.json'

    def __init__(self, command, config, output_paths, extra=None,
                 timestamp=None):
        self.command = command
        self.config = config
        self.config_hash = config_hash(config) if config is not None else None
        self.seed = (config['montecarlo']['seed'] if config is not None
                     else None)
        self.tool_version = deformlib.__version__
        self.timestamp = _timestamp() if timestamp is None else timestamp
        self.output_paths = output_paths
        self.extra = extra or {}

    def to_dict(self):
        return OrderedDict([('command', self.command),
                            ('config_hash', self.config_hash),
                            ('timestamp', self.timestamp),
                            ('tool_version', self.tool_version),
                            ('seed', self.seed),
                            ('output_paths', self.output_paths),
                            ('extra', self.extra),
                            ('config', self.config)])

    def write(self, directory):
        _write_json(self.to_dict(), os.path.join(directory, self.FILENAME))

    @classmethod
    def read(cls, directory):
        path = os.path.join(directory, cls.FILENAME)
        try:
            with open(path) as f:
                data = json.load(f, object_pairs_hook=OrderedDict)
        except (IOError, ValueError) as exc:
            raise ConfigError('', 'cannot read the manifest {}: {}'
                              .format(path, exc))
        manifest = cls(data['command'], data['config'], data['output_paths'],
                       data.get('extra'), timestamp=data['timestamp'])
        manifest.tool_version = data['tool_version']
        return manifest


def _write_json(obj, path):
    with open(path, 'w') as f:
        json.dump(obj, f, indent=2)
        f.write('\n')


def _prepare_out(directory):
    if os.path.exists(directory) and not os.path.isdir(directory):
        raise ConfigError('', '{} exists and is not a directory'
                          .format(directory))
    if not os.path.isdir(directory):
        os.makedirs(directory)


def resolve_n_jobs(threads):
    """Thread count from --threads, else DEFORMLIB_N_JOBS, else 1."""
    if threads is not None:
        value = threads
    else:
        env = os.environ.get(ENV_N_JOBS)
        if not env:
            return 1
        try:
            value = int(env)
        except ValueError:
            raise ConfigError('', '{} must be an integer, got {!r}'
                              .format(ENV_N_JOBS, env))
    if value == 0 or value < -1:
        raise ConfigError('', 'the thread count must be positive or -1, got '
                          '{}'.format(value))
    return value


def _run_side(experiment_cls, name, args):
    config = load_config(args.config, args.command, args.seed)
    experiment = experiment_cls(**experiment_params(
        config, resolve_n_jobs(args.threads)))
    try:
        experiment.fit()
    except ValueError as exc:
        raise ConfigError('deformation', str(exc))
    results = experiment.run()
    _prepare_out(args.out)

    samples = '{}.csv'.format(name)
    experiment.to_frame(results).to_csv(os.path.join(args.out, samples),
                                        index=False)
    _write_json(experiment.partition_.to_dict(),
                os.path.join(args.out, 'partition.json'))
    outputs = OrderedDict([('samples', samples),
                           ('partition', 'partition.json')])
    return config, experiment, results, outputs


def _excluded_summary(results):
    return OrderedDict([('n_excluded', sum(1 for r in results if r.excluded)),
                        ('reasons', exclusion_counts(results))])


def cmd_simulate(args):
    config, experiment, results, outputs = _run_side(SimulationExperiment,
                                                     'zeta', args)
    RunManifest('simulate', config, outputs,
                _excluded_summary(results)).write(args.out)
    print('[simulate] {} trials, {} excluded, {} outliers -> {}'.format(
        len(results), experiment.n_excluded_, len(experiment.labels_),
        args.out))
    return EXIT_OK


def _tensor_json(tensor, indices, beta):
    out = OrderedDict([('indices', list(indices)), ('beta', int(beta)),
                       ('real', np.real(tensor).tolist())])
    if beta == 2:
        out['imag'] = np.imag(tensor).tolist()
    return out


def cmd_reference(args):
    config, experiment, results, outputs = _run_side(ReferenceExperiment,
                                                     'xi', args)
    if experiment.spec_ is None:
        covariance = None
    else:
        spec = experiment.spec_
        covariance = OrderedDict([
            ('psi', _tensor_json(experiment.covariance_,
                                 experiment.partition_.covered,
                                 experiment.beta_)),
            ('s_matrix', _tensor_json(spec.s_matrix(),
                                      range(1, spec.deformation.rank + 1),
                                      experiment.beta_)),
            ('delta_cutoff', spec.delta_),
            ('phi', spec.phi)])
    _write_json(covariance, os.path.join(args.out, 'covariance.json'))
    outputs['covariance'] = 'covariance.json'
    RunManifest('reference', config, outputs,
                _excluded_summary(results)).write(args.out)
    print('[reference] {} trials, {} outliers -> {}'.format(
        len(results), len(experiment.labels_), args.out))
    return EXIT_OK


def _read_side(directory):
    manifest = RunManifest.read(directory)
    if manifest.command not in ('simulate', 'reference'):
        raise ConfigError('', '{} holds the output of {!r}, not samples'
                          .format(directory, manifest.command))
    with open(os.path.join(directory,
                           manifest.output_paths['partition'])) as f:
        partition = Partition.from_dict(json.load(f))
    frame = pd.read_csv(os.path.join(directory,
                                     manifest.output_paths['samples']),
                        dtype={'seed': str})
    values = frame.drop(columns=['trial', 'seed']).to_numpy(dtype=np.float64)
    return manifest, partition, values


def safe_label(key):
    """File name fragment of a report key, '1-2,1' -> '1-2_1'."""
    return key.replace(',', '_')


def _ecdf_frame(a, b):
    grid = np.union1d(a, b)
    return pd.DataFrame({
        'value': grid,
        'ecdf_sim': np.searchsorted(np.sort(a), grid, side='right') / a.size,
        'ecdf_ref': np.searchsorted(np.sort(b), grid, side='right') / b.size})


def _hist_frame(a, b, bins=50):
    edges = np.histogram_bin_edges(np.concatenate([a, b]), bins=bins)
    with np.errstate(invalid='ignore', divide='ignore'):
        dens_a = np.histogram(a, bins=edges, density=True)[0]
        dens_b = np.histogram(b, bins=edges, density=True)[0]
    return pd.DataFrame({'bin_left': edges[:-1], 'bin_right': edges[1:],
                         'density_sim': np.nan_to_num(dens_a),
                         'density_ref': np.nan_to_num(dens_b)})


def cmd_compare(args):
    sim_manifest, sim_partition, zetas = _read_side(args.sim)
    ref_manifest, ref_partition, xis = _read_side(args.ref)
    for field in ('n', 'beta'):
        if (sim_manifest.config['ensemble'][field]
                != ref_manifest.config['ensemble'][field]):
            raise ConfigError('ensemble.{}'.format(field),
                              'the two directories differ')
    if sim_partition.d.size != ref_partition.d.size:
        raise ConfigError('deformation.d', 'the two directories have ranks '
                          '{} and {}'.format(sim_partition.d.size,
                                             ref_partition.d.size))
    if sim_partition != ref_partition:
        raise ConfigError('', 'the partitions differ: {} and {}'
                          .format(sim_partition.blocks, ref_partition.blocks))
    try:
        report = compare(zetas, xis, sim_partition)
    except ValueError as exc:
        raise ConfigError('', str(exc))
    report.counts['excluded_simulation'] = sim_manifest.extra.get(
        'reasons', {})
    report.counts['excluded_reference'] = ref_manifest.extra.get(
        'reasons', {})

    _prepare_out(args.out)
    outputs = OrderedDict([('report', 'report.json')])
    _write_json(report.to_dict(), os.path.join(args.out, 'report.json'))
    for column, key in enumerate(report.per_index):
        label = safe_label(key)
        a, b = zetas[:, column], xis[:, column]
        ecdf, hist = 'ecdf_{}.csv'.format(label), 'hist_{}.csv'.format(label)
        _ecdf_frame(a, b).to_csv(os.path.join(args.out, ecdf), index=False)
        _hist_frame(a, b).to_csv(os.path.join(args.out, hist), index=False)
        outputs['ecdf_' + label] = ecdf
        outputs['hist_' + label] = hist
    gaps_sim = block_min_gaps(zetas, sim_partition)
    gaps_ref = block_min_gaps(xis, sim_partition)
    for label in gaps_sim:
        name = 'min_gap_{}.csv'.format(label)
        pd.DataFrame({
            'side': (['simulation'] * gaps_sim[label].size
                     + ['reference'] * gaps_ref[label].size),
            'min_gap': np.concatenate([gaps_sim[label], gaps_ref[label]])
        }).to_csv(os.path.join(args.out, name), index=False)
        outputs['min_gap_' + label] = name

    extra = OrderedDict([('sim', OrderedDict([
                             ('directory', os.path.abspath(args.sim)),
                             ('config_hash', sim_manifest.config_hash)])),
                         ('ref', OrderedDict([
                             ('directory', os.path.abspath(args.ref)),
                             ('config_hash', ref_manifest.config_hash)]))])
    manifest = RunManifest('compare', sim_manifest.config, outputs, extra)
    manifest.write(args.out)
    print('[compare] {} indices, max KS {:.4f} -> {}'.format(
        len(report.per_index), report.max_ks(), args.out))
    return EXIT_OK


def cmd_sweep(args):
    config = load_config(args.config, 'sweep', args.seed)
    mc = config['montecarlo']
    try:
        table = outlier_sweep(
            mc['d_grid'], config['ensemble']['n'], mc['trials'],
            beta=config['ensemble']['beta'],
            law=EntryDistribution.from_dict(config['ensemble']['law']),
            master_seed=mc['seed'], eigen_method=mc['eigen_method'],
            n_jobs=resolve_n_jobs(args.threads))
    except ValueError as exc:
        raise ConfigError('montecarlo.d_grid', str(exc))
    _prepare_out(args.out)
    table.to_csv(os.path.join(args.out, 'sweep.csv'), index=False)
    RunManifest('sweep', config,
                OrderedDict([('table', 'sweep.csv')])).write(args.out)
    print('[sweep] {} values of d -> {}'.format(len(table), args.out))
    return EXIT_OK


def cmd_check(args):
    if args.list:
        for name, suite in check.SUITES.items():
            print('{:<14}{}'.format(name, suite.__doc__.splitlines()[0]))
        return EXIT_OK
    names = args.suite or None
    try:
        results = check.run_checks(names, master_seed=args.seed or 0)
    except ValueError as exc:
        raise ConfigError('--suite', str(exc))
    failed = []
    for res in results:
        print(res.summary())
        for message in res.failures:
            print('  - {}'.format(message))
        if not res.passed:
            failed.append(res.name)
    if failed:
        print('[check] FAIL: {}'.format(', '.join(failed)))
        return EXIT_CHECK_FAILED
    print('[check] OK ({} suites)'.format(len(results)))
    return EXIT_OK


def _seed(text):
    value = int(text)
    if not 0 <= value < 2 ** 64:
        raise argparse.ArgumentTypeError('the seed must be in [0, 2**64)')
    return value


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--threads', type=int, default=argparse.SUPPRESS,
                        help='Number of parallel jobs (default: ${} or 1).'
                        .format(ENV_N_JOBS))
    common.add_argument('--seed', type=_seed, default=argparse.SUPPRESS,
                        help='Master seed, overrides montecarlo.seed.')

    parser = argparse.ArgumentParser(
        prog='deformlib', parents=[common],
        description='Outliers of deformed Wigner matrices.')
    parser.add_argument('--version', action='version',
                        version='%(prog)s ' + deformlib.__version__)
    sub = parser.add_subparsers(dest='command', metavar='COMMAND')
    sub.required = True

    for name, help_text in (('simulate', 'Sample the rescaled outliers.'),
                            ('reference', 'Sample the reference '
                                          'eigenvalues.'),
                            ('sweep', 'Extreme eigenvalue across a grid '
                                      'of d.')):
        cmd = sub.add_parser(name, parents=[common], help=help_text)
        cmd.add_argument('--config', required=True,
                         help='JSON configuration file.')
        cmd.add_argument('--out', required=True, help='Output directory.')

    cmd = sub.add_parser('compare', parents=[common],
                         help='Compare simulated and reference samples.')
    cmd.add_argument('--sim', required=True,
                     help='Output directory of simulate.')
    cmd.add_argument('--ref', required=True,
                     help='Output directory of reference.')
    cmd.add_argument('--out', required=True, help='Output directory.')

    cmd = sub.add_parser('check', parents=[common],
                         help='Run the property suites.')
    cmd.add_argument('--suite', action='append', default=None,
                     choices=list(check.SUITES),
                     help='Suite to run. Repeatable. Default: all.')
    cmd.add_argument('--list', action='store_true',
                     help='List the suites and exit.')
    return parser


COMMANDS = {'simulate': cmd_simulate,
            'reference': cmd_reference,
            'compare': cmd_compare,
            'sweep': cmd_sweep,
            'check': cmd_check}


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    args.threads = getattr(args, 'threads', None)
    args.seed = getattr(args, 'seed', None)
    try:
        return COMMANDS[args.command](args)
    except ConfigError as exc:
        print('error: {}'.format(exc), file=sys.stderr)
        return EXIT_CONFIG


if __name__ == '__main__':
    sys.exit(main())

import json
import os

import numpy as np
import pandas as pd
import pytest

from deformlib.cli import (EXIT_CONFIG, EXIT_OK, ConfigError, RunManifest,
                           build_deformation, config_hash, load_config,
                           main, normalize_config, resolve_n_jobs,
                           safe_label)
from deformlib.util.semicircle import control_parameter


def _config(**sections):
    raw = {'ensemble': {'n': 120, 'beta': 1, 'law': 'gaussian'},
           'deformation': {'d': [-3.0, 3.0], 'v': 'delocalized'},
           'montecarlo': {'trials': 6, 'seed': 5}}
    for name, value in sections.items():
        if value is None:
            raw.pop(name, None)
        else:
            raw[name] = value
    return raw


def _write(tmp_path, raw, name='config.json'):
    path = tmp_path / name
    path.write_text(json.dumps(raw))
    return str(path)


@pytest.fixture(autouse=True)
def fixed_epoch(monkeypatch):
    monkeypatch.setenv('SOURCE_DATE_EPOCH', '0')
    monkeypatch.delenv('DEFORMLIB_N_JOBS', raising=False)


def test_normalize_defaults():
    config = normalize_config(_config())
    assert config['ensemble']['law'] == {'kind': 'gaussian'}
    assert config['deformation']['sigma'] == 10.0
    assert config['control']['s_cutoff'] == 10.0
    assert config['control']['include_e'] is True
    assert config['montecarlo']['eigen_method'] == 'auto'
    assert config['montecarlo']['d_grid'] is None


def test_normalize_law_object():
    raw = _config(ensemble={'n': 50, 'law': {'kind': 'skewed-two-point',
                                             'third_moment': 1.0}})
    assert normalize_config(raw)['ensemble']['law'] == {
        'kind': 'skewed-two-point', 'third_moment': 1.0}


@pytest.mark.parametrize('raw, field', [
    (_config(deformation={'v': 'delocalized'}), 'deformation.d'),
    (_config(deformation={'d': []}), 'deformation.d'),
    (_config(deformation={'d': [2.0], 'v': 'random'}), 'deformation.v'),
    (_config(deformation={'d': [2.0], 'v': [[1.0]]}), 'deformation.v'),
    (_config(ensemble={'n': 2}), 'ensemble.n'),
    (_config(ensemble={'n': 50, 'beta': 4}), 'ensemble.beta'),
    (_config(ensemble={'n': 50, 'law': 'cauchy'}), 'ensemble.law.kind'),
    (_config(ensemble={'n': 50, 'law': {'kind': 'skewed-two-point'}}),
     'ensemble.law.third_moment'),
    (_config(ensemble=None), 'ensemble'),
    (_config(montecarlo={'trials': 0}), 'montecarlo.trials'),
    (_config(montecarlo={'seed': -1}), 'montecarlo.seed'),
    (_config(montecarlo={'eigen_method': 'qr'}), 'montecarlo.eigen_method'),
    (_config(control={'literal': 'yes'}), 'control.literal'),
    (_config(extras={}), 'extras'),
])
def test_normalize_errors(raw, field):
    with pytest.raises(ConfigError) as exc:
        normalize_config(raw)
    assert exc.value.field == field
    assert str(exc.value).startswith(field)


def test_normalize_sweep_needs_grid():
    raw = _config(deformation=None)
    with pytest.raises(ConfigError):
        normalize_config(raw, 'sweep')
    raw['montecarlo']['d_grid'] = [1.5, 2]
    config = normalize_config(raw, 'sweep')
    assert config['deformation'] is None
    assert config['montecarlo']['d_grid'] == [1.5, 2.0]


def test_load_config_invalid_json(tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{\n  "ensemble": {\n    "n": ,\n}')
    with pytest.raises(ConfigError) as exc:
        load_config(str(path))
    assert 'line 3' in str(exc.value)


def test_load_config_seed_override(tmp_path):
    config = load_config(_write(tmp_path, _config()), seed=77)
    assert config['montecarlo']['seed'] == 77


def test_config_hash_is_canonical():
    a = normalize_config(_config())
    b = json.loads(json.dumps(a), object_pairs_hook=lambda p: dict(
        reversed(p)))
    assert config_hash(a) == config_hash(b)
    assert len(config_hash(a)) == 64


def test_build_deformation_haar_is_seeded():
    config = normalize_config(_config(
        deformation={'d': [2.0], 'v': 'haar'}))
    a = build_deformation(config)
    b = build_deformation(config)
    assert np.array_equal(a.v, b.v)


def test_build_deformation_explicit_matrix():
    v = np.eye(120, 1).tolist()
    config = normalize_config(_config(deformation={'d': [2.0], 'v': v}))
    assert np.array_equal(build_deformation(config).v, np.eye(120, 1))


def test_build_deformation_invalid():
    v = np.ones((120, 1)).tolist()
    config = normalize_config(_config(deformation={'d': [2.0], 'v': v}))
    with pytest.raises(ConfigError):
        build_deformation(config)


def test_resolve_n_jobs(monkeypatch):
    assert resolve_n_jobs(None) == 1
    assert resolve_n_jobs(3) == 3
    monkeypatch.setenv('DEFORMLIB_N_JOBS', '4')
    assert resolve_n_jobs(None) == 4
    assert resolve_n_jobs(-1) == -1
    with pytest.raises(ConfigError):
        resolve_n_jobs(0)
    monkeypatch.setenv('DEFORMLIB_N_JOBS', 'many')
    with pytest.raises(ConfigError):
        resolve_n_jobs(None)


def test_safe_label():
    assert safe_label('1-2,1') == '1-2_1'


def test_simulate(tmp_path, capsys):
    out = tmp_path / 'sim'
    code = main(['simulate', '--config', _write(tmp_path, _config()),
                 '--out', str(out)])
    assert code == EXIT_OK
    frame = pd.read_csv(out / 'zeta.csv')
    assert list(frame.columns) == ['trial', 'seed', 'zeta[1,1]', 'zeta[2,2]']
    assert len(frame) == 6
    manifest = RunManifest.read(str(out))
    assert manifest.command == 'simulate'
    assert manifest.seed == 5
    assert manifest.timestamp == '1970-01-01T00:00:00Z'
    assert manifest.extra['n_excluded'] == 0
    partition = json.loads((out / 'partition.json').read_text())
    assert partition['blocks'] == [[1], [2]]
    assert '[simulate]' in capsys.readouterr().out


def test_simulate_byte_identical(tmp_path):
    config = _write(tmp_path, _config())
    first, second = tmp_path / 'a', tmp_path / 'b'
    assert main(['simulate', '--config', config, '--out', str(first)]) == 0
    assert main(['simulate', '--config', config, '--out', str(second),
                 '--threads', '2']) == 0
    for name in ('zeta.csv', 'partition.json', 'manifest.json'):
        assert (first / name).read_bytes() == (second / name).read_bytes()


def test_simulate_seed_flag(tmp_path):
    config = _write(tmp_path, _config())
    assert main(['--seed', '9', 'simulate', '--config', config, '--out',
                 str(tmp_path / 'a')]) == 0
    assert main(['simulate', '--config', config, '--out',
                 str(tmp_path / 'b'), '--seed', '10']) == 0
    assert RunManifest.read(str(tmp_path / 'a')).seed == 9
    assert RunManifest.read(str(tmp_path / 'b')).seed == 10


def test_simulate_missing_d(tmp_path, capsys):
    raw = _config(deformation={'v': 'delocalized'})
    code = main(['simulate', '--config', _write(tmp_path, raw), '--out',
                 str(tmp_path / 'sim')])
    assert code == EXIT_CONFIG
    assert 'deformation.d' in capsys.readouterr().err
    assert not (tmp_path / 'sim').exists()


def test_simulate_missing_file(tmp_path):
    assert main(['simulate', '--config', str(tmp_path / 'none.json'),
                 '--out', str(tmp_path / 'sim')]) == EXIT_CONFIG


def test_reference_covariance_gue(tmp_path):
    raw = _config(ensemble={'n': 200, 'beta': 2, 'law': 'gaussian'},
                  deformation={'d': [2.0], 'v': 'delocalized'})
    out = tmp_path / 'ref'
    assert main(['reference', '--config', _write(tmp_path, raw), '--out',
                 str(out)]) == EXIT_OK
    covariance = json.loads((out / 'covariance.json').read_text())
    phi = control_parameter(200)
    assert np.isclose(covariance['phi'], phi)
    assert np.allclose(covariance['psi']['real'], [[[[0.75 + 1.0 / phi]]]])
    assert np.allclose(covariance['psi']['imag'], 0.0)
    assert np.allclose(covariance['s_matrix']['real'], 0.0)
    assert np.isclose(covariance['delta_cutoff'], 1.0 / np.log(200))
    assert list(pd.read_csv(out / 'xi.csv').columns) == ['trial', 'seed',
                                                          'xi[1,1]']


def test_reference_empty_partition(tmp_path):
    raw = _config(deformation={'d': [0.5], 'v': 'delocalized'})
    out = tmp_path / 'ref'
    with pytest.warns(RuntimeWarning):
        code = main(['reference', '--config', _write(tmp_path, raw),
                     '--out', str(out)])
    assert code == EXIT_OK
    assert json.loads((out / 'covariance.json').read_text()) is None


def test_compare_identical_directories(tmp_path):
    config = _write(tmp_path, _config())
    sim = tmp_path / 'sim'
    assert main(['simulate', '--config', config, '--out', str(sim)]) == 0
    out = tmp_path / 'cmp'
    assert main(['compare', '--sim', str(sim), '--ref', str(sim), '--out',
                 str(out)]) == EXIT_OK
    report = json.loads((out / 'report.json').read_text())
    for entry in report['per_index'].values():
        assert entry['ks'] == 0.0
        assert entry['wasserstein1'] == 0.0
    for name in ('ecdf_1_1.csv', 'hist_1_1.csv', 'ecdf_2_2.csv',
                 'manifest.json'):
        assert (out / name).exists()
    hist = pd.read_csv(out / 'hist_1_1.csv')
    assert len(hist) == 50
    assert np.allclose(hist['density_sim'], hist['density_ref'])


def test_compare_simulation_with_reference(tmp_path):
    raw = _config(deformation={'d': [3.0, 3.0], 'v': 'delocalized'})
    config = _write(tmp_path, raw)
    sim, ref = tmp_path / 'sim', tmp_path / 'ref'
    assert main(['simulate', '--config', config, '--out', str(sim)]) == 0
    assert main(['reference', '--config', config, '--out', str(ref)]) == 0
    out = tmp_path / 'cmp'
    assert main(['compare', '--sim', str(sim), '--ref', str(ref), '--out',
                 str(out)]) == EXIT_OK
    report = json.loads((out / 'report.json').read_text())
    assert list(report['per_index']) == ['1-2,1', '1-2,2']
    assert 'min_gap_ks' in report['joint']['blocks']['1-2']
    gaps = pd.read_csv(out / 'min_gap_1-2.csv')
    assert set(gaps['side']) == {'simulation', 'reference'}
    manifest = json.loads((out / 'manifest.json').read_text())
    assert manifest['extra']['sim']['config_hash'] == \
        manifest['extra']['ref']['config_hash']


def test_compare_incompatible_rank(tmp_path, capsys):
    sim, ref = tmp_path / 'sim', tmp_path / 'ref'
    assert main(['simulate', '--config', _write(tmp_path, _config()),
                 '--out', str(sim)]) == 0
    raw = _config(deformation={'d': [3.0], 'v': 'delocalized'})
    assert main(['reference', '--config', _write(tmp_path, raw, 'r.json'),
                 '--out', str(ref)]) == 0
    code = main(['compare', '--sim', str(sim), '--ref', str(ref), '--out',
                 str(tmp_path / 'cmp')])
    assert code == EXIT_CONFIG
    assert 'deformation.d' in capsys.readouterr().err


def test_compare_missing_manifest(tmp_path):
    os.makedirs(str(tmp_path / 'empty'))
    assert main(['compare', '--sim', str(tmp_path / 'empty'), '--ref',
                 str(tmp_path / 'empty'), '--out',
                 str(tmp_path / 'cmp')]) == EXIT_CONFIG


def test_sweep(tmp_path):
    raw = _config(deformation=None,
                  montecarlo={'trials': 3, 'd_grid': [0.5, 3.0]})
    out = tmp_path / 'sweep'
    assert main(['sweep', '--config', _write(tmp_path, raw), '--out',
                 str(out)]) == EXIT_OK
    table = pd.read_csv(out / 'sweep.csv')
    assert list(table['d']) == [0.5, 3.0]
    assert list(table['is_outlier']) == [False, True]
    assert RunManifest.read(str(out)).command == 'sweep'


def test_sweep_zero_in_grid(tmp_path):
    raw = _config(deformation=None,
                  montecarlo={'trials': 3, 'd_grid': [0.0, 3.0]})
    assert main(['sweep', '--config', _write(tmp_path, raw), '--out',
                 str(tmp_path / 'sweep')]) == EXIT_CONFIG


def test_version(capsys):
    with pytest.raises(SystemExit) as exc:
        main(['--version'])
    assert exc.value.code == 0
    assert 'deformlib' in capsys.readouterr().out

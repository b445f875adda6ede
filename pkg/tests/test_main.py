import json
import logging

import numpy as np
import pytest

from DiskRep.errors import ExperimentError
from ExperimentRunner.commands import DEFAULT_POINTS, parse_points, synth_command
from MeasureModel.measure import Measure
from ExperimentRunner.experiment_factory import ExperimentFactory
from main import build_parser, experiment_overrides, main


@pytest.fixture(autouse=True)
def restore_logging():
    root = logging.getLogger()
    level, handlers = root.level, list(root.handlers)
    yield
    for handler in root.handlers[:]:
        if handler not in handlers:
            root.removeHandler(handler)
    root.setLevel(level)


def _exit_code(argv):
    with pytest.raises(SystemExit) as excinfo:
        main(argv)
    return excinfo.value.code


def test_parser_defaults():
    args = build_parser().parse_args(['synth'])
    assert args.kernel == 'mobius'
    assert args.space == 'besov'
    assert args.extra == []
    assert args.formats is None
    assert args.log_level == 'WARNING'


def test_experiment_overrides():
    args = build_parser().parse_args(['besov_forward', '--r', '0.4', '--rho-list', '0.9,0.99',
                                      '--set', 'control_rho_max = 0.9'])
    assert experiment_overrides(args) == {'r': 0.4, 'rho_list': '0.9,0.99', 'control_rho_max': '0.9'}
    with pytest.raises(ValueError):
        experiment_overrides(build_parser().parse_args(['besov_forward', '--set', 'rho_max']))


def test_parse_points():
    np.testing.assert_allclose(parse_points(None), np.asarray(DEFAULT_POINTS, dtype=complex))
    np.testing.assert_allclose(parse_points('0.5, 0.1+0.2j,-1j'), [0.5, 0.1 + 0.2j, -1j])
    with pytest.raises(ExperimentError):
        parse_points('0.5,abc')


def test_command_without_measure():
    args = build_parser().parse_args(['synth'])
    with pytest.raises(ExperimentError):
        synth_command(args)


def test_list_command(capsys):
    assert _exit_code(['list']) == 0
    data = json.loads(capsys.readouterr().out)
    names = [row['name'] for row in data['tables']['experiments']]
    assert 'invariant_constant' in names
    assert names == sorted(names)
    aliases = {row['name']: row['aliases'] for row in data['tables']['experiments']}
    assert aliases['invariant_constant'] == 'cr_constant'
    assert aliases['bloch_carleson'] == ''


def test_lattice_command(capsys):
    assert _exit_code(['lattice', '--r', '0.5', '--rho', '0.9']) == 0
    data = json.loads(capsys.readouterr().out)
    assert data['results']['lattice']['r'] == 0.5
    assert data['assertions'][0]['name'] == 'lattice_valid'


def test_synth_command_with_measure_file(tmp_path, capsys):
    mu = Measure.atomic([0.5, -0.3j], [1.0, 0.5j])
    path = tmp_path / 'measure.json'
    path.write_text(mu.to_json())
    assert _exit_code(['synth', '--measure', str(path), '--points', '0.2,0.1+0.4j']) == 0
    data = json.loads(capsys.readouterr().out)
    z = np.asarray([0.2, 0.1 + 0.4j])
    expected = ((z[:, None] - mu.locations) / (1.0 - z[:, None] * np.conj(mu.locations))) @ mu.weights
    values = [complex(*row['value']) for row in data['tables']['values']]
    np.testing.assert_allclose(values, expected, rtol=1e-10)


def test_synth_command_writes_reports(tmp_path, capsys):
    path = tmp_path / 'measure.json'
    path.write_text(Measure.atom(0.5).to_json())
    out = tmp_path / 'reports'
    assert _exit_code(['synth', '--measure', str(path), '--k', '1', '--out', str(out),
                       '--format', 'json', '--format', 'csv']) == 0
    assert 'Wrote' in capsys.readouterr().out
    data = json.loads((out / 'synth.json').read_text())
    assert len(data['tables']['derivative']) == len(DEFAULT_POINTS)
    assert (out / 'synth.csv').exists()


def test_unknown_target(capsys):
    assert _exit_code(['no_such_experiment']) == 1
    assert capsys.readouterr().out.startswith('Error:')


def test_command_rejects_extra_targets(capsys):
    assert _exit_code(['list', 'lattice']) == 1
    assert 'Error:' in capsys.readouterr().out


def test_synth_command_on_plane_measure(tmp_path):
    path = tmp_path / 'plane.json'
    path.write_text(json.dumps({'space': 'plane', 'atoms': [{'z': [0.0, 0.0], 'w': [1.0, 0.0]}]}))
    args = build_parser().parse_args(['synth', '--measure', str(path)])
    report = synth_command(args)
    # the Fock kernel of an atom at the origin is the constant one
    values = [row['value'] for row in report.tables['values']]
    np.testing.assert_allclose(values, 1.0)


@pytest.mark.parametrize('alias,key', [
    ('cr_constant', 'invariant_constant'),
    ('lemma3_equiv', 'averaging_equivalence'),
    ('cor4_counterexample', 'log_moment_counterexample'),
    ('thmA_forward', 'besov_forward'),
    ('thmB_roundtrip', 'lipschitz_roundtrip'),
    ('lemma6_polynomials', 'polynomial_measures'),
])
def test_experiment_aliases(alias, key):
    assert ExperimentFactory.resolve([alias]) == [key]
    assert ExperimentFactory.resolve([key, alias]) == [key]
    assert ExperimentFactory.key_for(type(ExperimentFactory.create(alias))) == key


def test_aliases_do_not_shadow_keys():
    aliases = ExperimentFactory.get_aliases()
    assert not set(aliases) & set(ExperimentFactory.get_available_types())
    assert len(ExperimentFactory.resolve(['all'] + list(aliases))) == len(ExperimentFactory.get_available_types())


@pytest.mark.slow
def test_run_experiment_by_alias(tmp_path, capsys):
    assert _exit_code(['cr_constant', '--out', str(tmp_path)]) == 0
    assert 'invariant_constant' in capsys.readouterr().out

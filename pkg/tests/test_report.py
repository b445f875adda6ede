import json
import logging
import os

import numpy as np
import pytest

from DiskRep.errors import ExperimentError
from DiskRep.log_manager import LogManager, MemoryLogHandler
from ExperimentRunner.base_experiment import BaseExperiment, number_field, schema_with
from ExperimentRunner.experiment_factory import ExperimentFactory
from ExperimentRunner.report import ExperimentReport, clean_value
from ExperimentRunner.report_writer import ReportWriter
from ExperimentRunner.runner import ExperimentRunner, ExperimentSpec
from MeasureModel.convergence import Verdict


class _PassingExperiment(BaseExperiment):
    display_name = "Passing probe"
    claim = "x equals x"
    tolerances = {'abs': 1e-12}

    @classmethod
    def get_config_schema(cls):
        return schema_with(
            number_field('x', 2.0, 'Value'),
            number_field('n', 3, 'Count', kind='integer', min=1),
            number_field('radii', (0.3, 0.5), 'Radii', kind='list'),
        )

    def _run(self, report):
        x = self.params['x']
        report.add_result('x', x)
        report.add_rows('values', [{'i': i, 'value': x * i} for i in range(self.params['n'])])
        report.assert_that('x_matches', abs(x - x) <= self.tolerances['abs'], value=0.0, tolerance='abs')


class _FailingExperiment(BaseExperiment):
    display_name = "Failing probe"
    claim = "raises"

    def _run(self, report):
        self.logger.warning("about to fail")
        raise RuntimeError("boom")


@pytest.fixture
def probes():
    ExperimentFactory.register('probe_pass', _PassingExperiment)
    ExperimentFactory.register('probe_fail', _FailingExperiment)
    yield
    ExperimentFactory.unregister('probe_pass')
    ExperimentFactory.unregister('probe_fail')


def test_clean_value():
    assert clean_value(np.float64(0.1) + np.float64(0.2)) == 0.3
    assert clean_value(1 + 2j) == [1.0, 2.0]
    assert clean_value(np.arange(3)) == [0, 1, 2]
    assert clean_value(float('inf')) == 'inf'
    assert clean_value(Verdict.CONVERGED) == 'CONVERGED'
    assert clean_value({1: np.bool_(True)}) == {'1': True}


def test_report_assertions_and_json():
    report = ExperimentReport(name='demo', claim='c', seed=1, tolerances={'rel': 0.01})
    report.assert_that('first', True, value=0.5, tolerance='rel')
    report.assert_that('second', False, value=2 + 0j)
    report.add_rows('table', [{'z': 0.5j, 'v': 1.0}])
    assert not report.passed
    assert [a.name for a in report.failures] == ['second']
    assert report.assertions[0].tolerance == 0.01
    text = report.to_json()
    assert text.endswith('\n')
    data = json.loads(text)
    assert data['passed'] is False
    assert data['tables']['table'][0]['z'] == [0.0, 0.5]
    assert list(data) == sorted(data)


def test_report_csv_and_summary():
    report = ExperimentReport(name='demo', claim='c')
    report.assert_that('ok', True, value=1.0)
    report.add_rows('rows', [{'a': 1, 'b': [1, 2]}])
    lines = report.to_csv().splitlines()
    assert lines[0].split(',')[0] == 'table'
    assert len(lines) == 3
    summary = report.summary()
    assert summary.startswith('[PASS] demo: c')
    assert 'ok   ok = 1.0' in summary


def test_report_writer(tmp_path):
    report = ExperimentReport(name='demo')
    paths = ReportWriter(str(tmp_path / 'out'), ['json', 'csv']).write(report)
    assert [os.path.basename(p) for p in paths] == ['demo.json', 'demo.csv']
    assert json.loads(open(paths[0]).read())['name'] == 'demo'
    assert not [f for f in os.listdir(tmp_path / 'out') if f.startswith('.tmp_')]


def test_report_writer_rejects_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        ReportWriter(str(tmp_path), ['xml'])


def test_configure_converts_and_validates():
    experiment = _PassingExperiment().configure(x='1.5', n=4.0, radii='0.1,0.2')
    assert experiment.params['x'] == 1.5
    assert experiment.params['n'] == 4
    assert experiment.params['radii'] == (0.1, 0.2)
    assert experiment.params['seed'] is not None
    with pytest.raises(ExperimentError):
        _PassingExperiment().configure(unknown=1)
    with pytest.raises(ExperimentError):
        _PassingExperiment().configure(n=2.5)
    with pytest.raises(ExperimentError):
        _PassingExperiment().configure(n=0)
    with pytest.raises(ExperimentError):
        _PassingExperiment().configure(x='abc')


def test_failing_experiment_reports_error():
    report = _FailingExperiment().run('failing')
    assert not report.passed
    assert report.failures[0].name == 'error'
    assert 'RuntimeError: boom' in report.failures[0].detail
    assert 'WARNING: about to fail' in report.messages


def test_factory_resolve(probes):
    assert 'probe_pass' in ExperimentFactory.resolve(['all'])
    assert ExperimentFactory.resolve(['probe_pass', 'probe_pass']) == ['probe_pass']
    with pytest.raises(ExperimentError):
        ExperimentFactory.resolve(['no_such_experiment'])
    with pytest.raises(ExperimentError):
        ExperimentFactory.create('no_such_experiment')
    assert ExperimentFactory.get_claims()['probe_pass'] == 'x equals x'


def test_registered_experiments():
    names = ExperimentFactory.get_available_types()
    for name in ('averaging_equivalence', 'besov_forward', 'bloch_carleson', 'fock_roundtrip',
                 'invariant_constant', 'lipschitz_roundtrip', 'log_moment_counterexample',
                 'polynomial_measures'):
        assert name in names
    assert names == sorted(names)


def test_runner_runs_and_writes(probes, tmp_path):
    specs = [ExperimentSpec('probe_pass', overrides={'x': 3.0}, out_dir=str(tmp_path), formats=('json', 'csv')),
             ExperimentSpec('probe_fail')]
    with ExperimentRunner(max_workers=2) as runner:
        results = runner.run_many(specs)
    assert [r.spec.name for r in results] == ['probe_pass', 'probe_fail']
    assert results[0].passed and not results[1].passed
    assert len(results[0].paths) == 2
    assert results[0].report.results['x'] == 3.0
    assert ExperimentRunner.exit_status(results) == 1
    assert ExperimentRunner.exit_status(results[:1]) == 0


def test_runner_strict_overrides(probes):
    with ExperimentRunner() as runner:
        with pytest.raises(ExperimentError):
            runner.run(ExperimentSpec('probe_pass', overrides={'t': 1.0}))
        result = runner.run(ExperimentSpec('probe_pass', overrides={'t': 1.0}, strict=False, seed=7))
    assert result.passed
    assert result.report.seed == 7


def test_memory_handler_messages():
    handler = MemoryLogHandler(max_logs=2)
    logger = logging.getLogger('SpaceMembership.test')
    logger.addHandler(handler)
    try:
        logger.warning('one')
        logger.error('two')
        logger.warning('three')
    finally:
        logger.removeHandler(handler)
    assert handler.get_messages() == ['ERROR: two', 'WARNING: three']
    assert handler.get_messages(logging.ERROR) == ['ERROR: two']
    assert handler.logs[-1].logger == 'SpaceMembership.test'


def test_log_manager_file_logging(tmp_path):
    root = logging.getLogger()
    level, handlers = root.level, list(root.handlers)
    manager = LogManager()
    try:
        manager.setup_logging('INFO', enable_file_logging=True, log_dir=str(tmp_path))
        assert root.level == logging.INFO
        logging.getLogger('DiskQuadrature.test').info('written to file')
        manager.file_handler.flush()
        assert 'written to file' in (tmp_path / 'diskrep.log').read_text()
    finally:
        for handler in root.handlers[:]:
            if handler not in handlers:
                root.removeHandler(handler)
                handler.close()
        root.setLevel(level)

import pytest

from ExperimentRunner.experiment_factory import ExperimentFactory

EXPERIMENTS = [
    'averaging_equivalence',
    'besov_forward',
    'bloch_carleson',
    'fock_roundtrip',
    'invariant_constant',
    'lipschitz_roundtrip',
    'log_moment_counterexample',
    'polynomial_measures',
]


@pytest.mark.slow
@pytest.mark.parametrize('name', EXPERIMENTS)
def test_experiment_passes_with_defaults(name):
    report = ExperimentFactory.create(name).run(name)
    assert report.passed, report.summary()
    assert report.assertions
    assert report.claim


@pytest.mark.slow
def test_report_is_reproducible():
    first = ExperimentFactory.create('invariant_constant').configure(seed=11).run().to_json()
    second = ExperimentFactory.create('invariant_constant').configure(seed=11).run().to_json()
    assert first == second


def test_schemas_declare_seed():
    for name in EXPERIMENTS:
        fields = {f['name']: f for f in ExperimentFactory.get_class(name).get_config_schema()['fields']}
        assert fields['seed']['type'] == 'integer'


def test_overrides_are_validated():
    experiment = ExperimentFactory.create('invariant_constant').configure(r='0.2,0.4', rho_list='0.9,0.99')
    assert experiment.params['r'] == (0.2, 0.4)
    assert tuple(experiment.params['rho_list']) == (0.9, 0.99)


def test_counterexample_separates_localized_and_berezin():
    report = ExperimentFactory.create('log_moment_counterexample').configure(terms=1000).run()
    outcomes = {a.name: a.passed for a in report.assertions}
    assert outcomes['localized_l1_is_invariant_multiple_of_mass']
    assert outcomes['localized_l1_increments_shrink']
    assert outcomes['berezin_l1_increments_persist']
    heads = report.tables['heads']
    assert [row['atoms'] for row in heads] == [3, 6, 12]
    assert heads[-1]['berezin_l1'] > 3.0 * heads[-1]['localized_l1']

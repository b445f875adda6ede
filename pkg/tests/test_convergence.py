import numpy as np
import pytest

from MeasureModel.convergence import Verdict, boundary_coordinate, classify_trend, make_report


def test_constant_sequence_converges():
    assert classify_trend([2.0] * 8).verdict == Verdict.CONVERGED


def test_linear_growth_diverges():
    assert classify_trend(np.arange(1.0, 9.0)).verdict == Verdict.DIVERGENT


def test_harmonic_partial_sums_diverge():
    N = 10 ** np.arange(1, 7)
    partial = np.cumsum(1.0 / np.arange(1, N[-1] + 1))[N - 1]
    result = classify_trend(partial, x=np.log(N))
    assert result.verdict == Verdict.DIVERGENT


def test_square_summable_partial_sums_converge():
    N = 10 ** np.arange(1, 7)
    partial = np.cumsum(1.0 / np.arange(1, N[-1] + 1) ** 2)[N - 1]
    result = classify_trend(partial, x=np.log(N))
    assert result.verdict == Verdict.CONVERGED
    np.testing.assert_allclose(partial[-1], np.pi ** 2 / 6, rtol=1e-5)


def test_geometric_tail_converges():
    rho = [1 - 10.0 ** -k for k in range(1, 9)]
    values = [2.0 * (1 - np.sqrt(1 - r * r)) for r in rho]
    result = classify_trend(values, rho=rho)
    assert result.verdict == Verdict.CONVERGED
    assert result.reason == 'geometric tail below tolerance'


def test_power_law_in_boundary_coordinate_diverges():
    rho = [1 - 10.0 ** -k for k in range(1, 9)]
    values = [(1 - r) ** -0.5 for r in rho]
    result = classify_trend(values, rho=rho)
    assert result.verdict == Verdict.DIVERGENT


def test_alternating_sequence_undecided():
    assert classify_trend([1.0, 2.0, 1.0, 2.0, 1.0, 2.0]).verdict == Verdict.UNDECIDED


def test_too_few_points_undecided():
    result = classify_trend([1.0, 2.0, 3.0])
    assert result.verdict == Verdict.UNDECIDED
    assert result.reason == 'too few points'


@pytest.mark.parametrize('bad', [np.inf, np.nan])
def test_non_finite_values_diverge(bad):
    assert classify_trend([1.0, 2.0, bad, 3.0]).verdict == Verdict.DIVERGENT


def test_length_mismatch():
    with pytest.raises(ValueError):
        classify_trend([1.0, 2.0, 3.0, 4.0], x=[0.0, 1.0])


def test_boundary_coordinate():
    np.testing.assert_allclose(boundary_coordinate([0.9, 0.99]), [np.log(10), np.log(100)])


def test_make_report():
    rho = [0.5, 0.9, 0.99, 0.999]
    report = make_report([1, 1, 1, 1], rho, 'total_mass', label='atom', r=0.3)
    assert report.converged and not report.divergent
    assert report.last == 1.0
    assert report.rows()[0] == {'kind': 'total_mass', 'label': 'atom', 'rho': 0.5, 'value': 1.0}
    data = report.to_dict()
    assert data['verdict'] == 'CONVERGED'
    assert data['extra'] == {'r': 0.3}


def test_report_with_custom_abscissa():
    report = make_report([1.0, 2.0, 4.0, 8.0, 16.0], [2, 3, 4, 5, 6], 'fock_norm', x=[2, 3, 4, 5, 6], x_label='R')
    assert report.divergent
    assert 'R' in report.to_dict()

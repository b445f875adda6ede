import numpy as np
import pytest

from DiskRep.errors import ConstraintError, DomainError
from MeasureModel.convergence import Verdict
from MeasureModel.measure import Measure
from RepresentationSynthesis.constructions import synth_bergman, synth_mobius
from SpaceMembership.functions import LogSingular, Monomial, Pole
from SpaceMembership.seminorms import (
    bergman_norm,
    bergman_order,
    besov_holder_bound,
    besov_order,
    besov_seminorm,
    bloch_seminorm,
    boundedness_scan,
    lipschitz_order,
    lipschitz_seminorm,
)
from SpaceMembership.spaces import SpaceSpec


@pytest.mark.parametrize('p,k', [(0.5, 3), (1.0, 2), (1.5, 1), (2.0, 1), (0.3, 4)])
def test_besov_order(p, k):
    assert besov_order(p) == k


def test_lipschitz_and_bergman_orders():
    assert lipschitz_order(0.0) == 1
    assert lipschitz_order(1.5) == 2
    assert lipschitz_order(2.0) == 3
    assert bergman_order(2.0, 0.0) == 0
    assert bergman_order(1.0, -1.5) == 1


def test_besov_of_quadratic():
    report = besov_seminorm(Monomial(2), 1.0)
    np.testing.assert_allclose(report.last, 2.0, rtol=1e-8)
    assert report.verdict == Verdict.CONVERGED
    assert report.extra['k'] == 2


def test_besov_rejects_bad_parameters():
    with pytest.raises(DomainError):
        besov_seminorm(Monomial(2), 0.0)
    with pytest.raises(DomainError):
        besov_seminorm(Monomial(2), float('inf'))
    with pytest.raises(ConstraintError):
        besov_seminorm(Monomial(2), 1.0, k=1)


def test_bergman_norm_of_identity():
    report = bergman_norm(Monomial(1), 2.0, 0.0)
    # int_{|z| <= rho} |z|^2 dA = rho^4 / 2
    np.testing.assert_allclose(report.last, 0.5 * report.rho[-1] ** 4, rtol=1e-10)
    assert report.verdict == Verdict.CONVERGED


def test_bloch_seminorm_of_logarithm():
    report = bloch_seminorm(LogSingular())
    assert report.kind == 'bloch'
    assert report.verdict == Verdict.CONVERGED
    assert 1.99 <= report.last <= 2.0 + 1e-6


def test_lipschitz_separates_members():
    assert lipschitz_seminorm(LogSingular(), 1.5).verdict == Verdict.DIVERGENT
    report = lipschitz_seminorm(Monomial(3), 1.5)
    assert report.verdict == Verdict.CONVERGED
    assert report.last <= 3.0 + 1e-12
    # the sup 3 sits at |z| = 1/sqrt(2), between probe shells
    np.testing.assert_allclose(report.last, 3.0, rtol=1e-2)


def test_lipschitz_rejects_negative_exponent():
    with pytest.raises(DomainError):
        lipschitz_seminorm(Monomial(1), -0.5)
    with pytest.raises(ConstraintError):
        lipschitz_seminorm(Monomial(1), 1.0, k=1)


def test_boundedness_scan():
    assert boundedness_scan(Monomial(1)).verdict == Verdict.CONVERGED
    assert boundedness_scan(LogSingular()).verdict == Verdict.DIVERGENT


def test_holder_bound_dominates_besov_integral():
    mu = Measure.atomic([0.5, -0.3j], [0.2, 0.1])
    bound = besov_holder_bound(mu, 1.0, k=2)
    report = besov_seminorm(synth_mobius(mu), 1.0, k=2)
    assert report.verdict == Verdict.CONVERGED
    assert report.last <= bound * (1.0 + 1e-6)


def test_holder_bound_rejections():
    with pytest.raises(DomainError):
        besov_holder_bound(Measure.atom(0.5), 2.0)
    with pytest.raises(ConstraintError):
        besov_holder_bound(Measure.area(), 1.0)
    assert besov_holder_bound(Measure.zero(), 1.0) == 0.0


@pytest.mark.parametrize('spec,label,k', [
    (SpaceSpec('besov', p=1.0), 'B_1', 2),
    (SpaceSpec('bergman', p=2.0), 'A^2_0', 0),
    (SpaceSpec('bloch'), 'Bloch', 1),
    (SpaceSpec('lipschitz', t=1.5), 'Lambda_1.5', 2),
])
def test_space_spec_defaults(spec, label, k):
    assert spec.label == label
    assert spec.k == k
    assert SpaceSpec.from_dict(spec.to_dict()) == spec


@pytest.mark.parametrize('kwargs', [
    {'family': 'hardy', 'p': 2.0},
    {'family': 'besov'},
    {'family': 'besov', 'p': -1.0},
    {'family': 'lipschitz', 't': -0.5},
    {'family': 'besov', 'p': 1.0, 'k': 1},
    {'family': 'lipschitz', 't': 1.0, 'k': 1},
])
def test_space_spec_rejections(kwargs):
    with pytest.raises(ConstraintError):
        SpaceSpec(**kwargs)


def test_space_spec_evaluate():
    report = SpaceSpec('bergman', p=2.0).evaluate(Monomial(1))
    np.testing.assert_allclose(report.last, 0.5 * report.rho[-1] ** 4, rtol=1e-10)


RANK = {Verdict.CONVERGED: 0, Verdict.UNDECIDED: 1, Verdict.DIVERGENT: 2}


@pytest.mark.parametrize('p,alpha', [(1.0, 0.0), (2.0, 0.0), (2.0, 1.0), (0.5, -0.5)])
def test_bergman_norm_of_constant_is_truncated_mass(p, alpha):
    report = bergman_norm(Monomial(0), p, alpha)
    rho = report.rho[-1]
    np.testing.assert_allclose(report.last, 1.0 - (1.0 - rho ** 2) ** (alpha + 1.0), rtol=1e-9)
    assert report.verdict == Verdict.CONVERGED


@pytest.mark.parametrize('p,k', [(1.0, 2), (1.0, 3), (2.0, 1), (2.0, 2), (0.5, 3), (0.5, 4)])
def test_besov_of_boundary_root_pole_diverges(p, k):
    # (1 - z)^{-1/2} lies in no Besov space; outer radii may be cut from the schedule
    report = besov_seminorm(Pole(1.0, 0.5), p, k=k)
    assert report.verdict == Verdict.DIVERGENT
    assert len(report.values) >= 4
    assert np.all(np.isfinite(report.values))
    dropped = report.extra.get('unresolved_rho', [])
    assert len(report.rho) + len(dropped) == 10


def test_besov_of_logarithm_diverges_below_bloch():
    assert besov_seminorm(LogSingular(), 0.5).verdict == Verdict.DIVERGENT


@pytest.mark.parametrize('f', [Monomial(3), Pole(1.0, 0.5), LogSingular()], ids=['monomial', 'pole', 'log'])
def test_besov_verdict_independent_of_order(f):
    assert besov_seminorm(f, 1.0, k=2).verdict == besov_seminorm(f, 1.0, k=3).verdict


@pytest.mark.parametrize('f', [Monomial(3), Pole(1.0, -0.5), Pole(1.0, 0.5), LogSingular()],
                         ids=['monomial', 'root', 'pole', 'log'])
def test_besov_membership_monotone_in_p(f):
    ranks = [RANK[besov_seminorm(f, p).verdict] for p in (0.5, 1.0, 2.0)]
    # B_p grows with p: a member for some p stays one for every larger p
    for smaller, larger in zip(ranks, ranks[1:]):
        assert not (smaller == 0 and larger == 2)


@pytest.mark.parametrize('f,verdict', [
    (LogSingular(), Verdict.CONVERGED),
    (Monomial(2), Verdict.CONVERGED),
    (Pole(1.0, 0.5), Verdict.DIVERGENT),
], ids=['log', 'monomial', 'pole'])
def test_bloch_agrees_with_lipschitz_zero_at_higher_order(f, verdict):
    assert bloch_seminorm(f).verdict == verdict
    assert lipschitz_seminorm(f, 0.0, k=2).verdict == verdict


def test_bergman_norm_of_boundary_pole_diverges():
    assert bergman_norm(Pole(1.0, 1.0), 2.0, 0.0).verdict == Verdict.DIVERGENT


def test_bergman_norm_of_atomic_representation(small_lattice):
    centers = small_lattice.centers[small_lattice.active]
    coeffs = 2.0 ** -np.arange(len(centers))
    f = synth_bergman(Measure.atomic(centers, coeffs), b=3.0, p=2.0, alpha=0.0)
    report = bergman_norm(f, 2.0, 0.0)
    assert report.verdict == Verdict.CONVERGED
    assert 'unresolved_rho' not in report.extra
    assert 0.0 < report.last < np.inf

import json

import numpy as np
import pytest

from DiskQuadrature.quadrature import QuadratureScheme
from DiskRep.errors import ConstraintError, InfiniteMassError
from FockPlane.plane_measure import PlaneMeasure
from MeasureModel.density_factory import DensityFactory
from MeasureModel.measure import Measure
from RepresentationSynthesis.kernel_factory import KernelFactory
from RepresentationSynthesis.kernels.base_kernel import check_pole_exponent
from SpaceMembership.derivatives import cauchy_derivative

ATOMS = Measure.atomic([0.5, -0.3j, 0.2 + 0.6j], [0.2, 0.1j, -0.4])
Z = np.asarray([0.0, 0.4 - 0.1j, -0.7, 0.6j])


def test_available_kernels():
    assert KernelFactory.get_available_types() == [
        'bergman', 'lipschitz', 'lipschitz_carleson', 'mobius', 'mobius_derivative']


def test_mobius_atom_sum():
    f = KernelFactory.build('mobius', ATOMS)
    a, w = ATOMS.locations, ATOMS.weights
    direct = ((Z[:, None] - a) / (1.0 - Z[:, None] * np.conj(a))) @ w
    np.testing.assert_allclose(f(Z), direct, rtol=1e-13)


@pytest.mark.parametrize('kernel,params', [
    ('mobius', {}),
    ('mobius_derivative', {}),
    ('bergman', {'b': 3.0, 'p': 1.0, 'alpha': 0.0}),
    ('lipschitz', {'b': 2.0, 't': 1.5}),
    ('lipschitz_carleson', {'t': 0.5}),
])
@pytest.mark.parametrize('k', [1, 2, 3])
def test_exact_derivatives_match_numeric(kernel, params, k):
    f = KernelFactory.build(kernel, ATOMS, **params)
    np.testing.assert_allclose(f.derivative(k, Z), cauchy_derivative(f, Z, k), rtol=1e-6)


@pytest.mark.parametrize('kernel,params', [
    ('mobius', {}),
    ('mobius_derivative', {}),
    ('bergman', {'b': 3.0, 'p': 1.0, 'alpha': 0.0}),
])
@pytest.mark.parametrize('k', [1, 2, 3])
def test_exact_derivatives_at_random_interior_points(kernel, params, k):
    rng = np.random.default_rng(5)
    z = np.sqrt(rng.uniform(0.0, 0.95 ** 2, 50)) * np.exp(2j * np.pi * rng.uniform(size=50))
    f = KernelFactory.build(kernel, ATOMS, **params)
    exact = f.derivative(k, z)
    np.testing.assert_allclose(cauchy_derivative(f, z, k), exact, rtol=1e-6,
                               atol=1e-10 * np.max(np.abs(exact)))


def test_mobius_derivative_kernel_is_derivative_of_mobius():
    f = KernelFactory.build('mobius', ATOMS)
    fprime = KernelFactory.build('mobius_derivative', ATOMS)
    np.testing.assert_allclose(fprime(Z), f.derivative(1, Z), rtol=1e-13)


def test_mobius_synthesis_bounded_by_total_variation(disk_points):
    mu = ATOMS + Measure.atom(-0.9 + 0.1j, 0.25 - 0.5j) + Measure.area().scale(-0.5)
    f = KernelFactory.build('mobius', mu)
    mass = mu.atom_mass() + 0.5
    assert np.max(np.abs(f(disk_points))) <= mass
    np.testing.assert_allclose(f(0.0), -np.sum(mu.locations * mu.weights), rtol=1e-12)


@pytest.mark.parametrize('kernel,params', [
    ('mobius', {}),
    ('mobius_derivative', {}),
    ('bergman', {'b': 3.0, 'p': 1.0, 'alpha': 0.0}),
    ('lipschitz', {'b': 2.0, 't': 1.5}),
])
def test_synthesis_is_linear_in_the_measure(kernel, params):
    other = Measure.atomic([0.1 - 0.7j, -0.45], [0.3, 1.0 + 1.0j])
    a = 2.0 - 1.0j
    combined = KernelFactory.build(kernel, a * ATOMS + other, **params)
    parts = (a * KernelFactory.build(kernel, ATOMS, **params)(Z) +
             KernelFactory.build(kernel, other, **params)(Z))
    np.testing.assert_allclose(combined(Z), parts, rtol=1e-12, atol=1e-14)


def test_area_measure_collapses_to_monomial():
    f = KernelFactory.build('mobius', Measure.area())
    assert len(f.monomial_terms) == 1
    n, c = f.monomial_terms[0]
    assert n == 1
    np.testing.assert_allclose(c, 0.5, rtol=1e-10)
    np.testing.assert_allclose(f.derivative(1, 0.0), 0.5, rtol=1e-10)


def test_non_separable_density_by_quadrature():
    # angular mean of w (1 - |w|^2) / |1 - w|^2 is |w|^2, so f(0) = -rho^4 / 2
    rho = 0.99
    mu = Measure.from_density(DensityFactory.create('bloch_log'))
    f = KernelFactory.build('mobius', mu, QuadratureScheme(rho=rho))
    assert f.monomial_terms == []
    np.testing.assert_allclose(f(0.0), -0.5 * rho ** 4, rtol=1e-6)


def test_infinite_mass_rejected():
    mu = Measure.from_density(DensityFactory.create('power', a=-1.5))
    with pytest.raises(InfiniteMassError):
        KernelFactory.build('mobius', mu)
    with pytest.raises(InfiniteMassError):
        KernelFactory.build('mobius_derivative', mu)


def test_plane_measure_rejected():
    with pytest.raises(ConstraintError):
        KernelFactory.build('mobius', PlaneMeasure.gaussian())


@pytest.mark.parametrize('params', [
    {'b': 1.5, 'p': 1.0, 'alpha': 0.0},
    {'b': 3.0, 'p': 0.0},
    {'b': 5.0, 'p': 1.0, 'alpha': -1.0},
    {'b': 2.0, 'p': 0.5, 'alpha': 0.0},
])
def test_bergman_admissibility(params):
    with pytest.raises(ConstraintError):
        KernelFactory.build('bergman', ATOMS, **params)


def test_bergman_bound_is_strict():
    KernelFactory.build('bergman', ATOMS, b=4.0 + 1e-9, p=0.5, alpha=0.0)


@pytest.mark.parametrize('params', [
    {'b': -2.0, 't': 4.0},
    {'b': 0.0, 't': 2.0},
    {'b': 0.5, 't': 0.25},
    {'b': 2.0, 't': -1.0},
])
def test_lipschitz_admissibility(params):
    with pytest.raises(ConstraintError):
        KernelFactory.build('lipschitz', ATOMS, **params)


def test_lipschitz_non_integer_negative_pole():
    f = KernelFactory.build('lipschitz', ATOMS, b=-0.5, t=2.0)
    a, w = ATOMS.locations, ATOMS.weights
    direct = ((1.0 - np.abs(a) ** 2) ** 1.5 * (1.0 - Z[:, None] * np.conj(a)) ** 0.5) @ w
    np.testing.assert_allclose(f(Z), direct, rtol=1e-12)


def test_lipschitz_carleson_pole_check():
    with pytest.raises(ConstraintError):
        KernelFactory.build('lipschitz_carleson', ATOMS, t=2.0)
    with pytest.raises(ConstraintError):
        KernelFactory.build('lipschitz_carleson', ATOMS, t=1.0, alpha=-1.0)


def test_check_pole_exponent():
    check_pole_exponent(-0.5, 'test')
    check_pole_exponent(1.0, 'test')
    for b in (0.0, -1.0, -3.0):
        with pytest.raises(ConstraintError):
            check_pole_exponent(b, 'test')


def test_negative_derivative_order():
    f = KernelFactory.build('mobius', ATOMS)
    with pytest.raises(ValueError):
        f.derivative(-1, Z)


def test_unknown_kernel():
    with pytest.raises(ValueError):
        KernelFactory.build('szego', ATOMS)


def test_peak_radius_and_info():
    f = KernelFactory.build('lipschitz', ATOMS, b=2.0, t=1.0)
    np.testing.assert_allclose(f.peak_radius, abs(0.2 + 0.6j))
    info = f.get_info()
    assert info['kernel_type'] == 'LipschitzKernel'
    assert info['params'] == {'b': 2.0, 't': 1.0}
    assert f.focus() == ()


def test_to_dict_round_trip(tmp_path):
    f = KernelFactory.build('bergman', ATOMS, b=4.0, p=1.0, alpha=0.5)
    data = f.to_dict()
    assert data['kernel'] == 'bergman'
    path = tmp_path / 'kernel.json'
    path.write_text(json.dumps(data))
    g = KernelFactory.load(str(path))
    np.testing.assert_allclose(g(Z), f(Z), rtol=1e-13)


def test_from_dict_with_explicit_measure():
    g = KernelFactory.from_dict({'kernel': 'mobius'}, measure=ATOMS)
    np.testing.assert_allclose(g(Z), KernelFactory.build('mobius', ATOMS)(Z))
    with pytest.raises(ValueError):
        KernelFactory.from_dict({'kernel': 'mobius'})
    with pytest.raises(ValueError):
        KernelFactory.from_dict({'params': {}}, measure=ATOMS)
    with pytest.raises(ValueError):
        KernelFactory.from_dict({'kernel': 'mobius', 'params': {'b': 2.0}}, measure=ATOMS)

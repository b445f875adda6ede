import numpy as np
import pytest

from DiskRep.errors import ConstraintError
from MeasureModel.measure import Measure
from RepresentationSynthesis.constructions import (
    default_power,
    integrate_derivative,
    lattice_atomic_measure,
    polynomial_measure,
    polynomial_representation,
    synth_bergman,
    synth_lipschitz,
    synth_lipschitz_carleson,
    synth_mobius,
    synth_mobius_derivative,
)
from RepresentationSynthesis.decomposition import decompose, domination_constant, fit_lattice_coefficients
from RepresentationSynthesis.kernel_factory import KernelFactory

ATOMS = Measure.atomic([0.5, -0.3j, 0.2 + 0.6j], [0.2, 0.1j, -0.4])
PROBES = np.asarray([0.0, 0.3, -0.5 + 0.2j, 0.9j, 0.99 * np.exp(0.7j)])


@pytest.mark.parametrize('m', range(6))
def test_polynomial_measure_represents_monomial(m):
    f = synth_mobius(polynomial_measure(m))
    np.testing.assert_allclose(f(PROBES), PROBES ** m, atol=1e-8)


@pytest.mark.parametrize('m', [0, 1, 3])
def test_polynomial_measure_with_target_exponent(m):
    f = synth_mobius(polynomial_measure(m, p=0.5))
    np.testing.assert_allclose(f(PROBES), PROBES ** m, atol=1e-8)


@pytest.mark.parametrize('m,N,c', [(1, 0, 2.0), (2, 1, 12.0), (0, 0, -1.5)])
def test_polynomial_measure_coefficients(m, N, c):
    density = polynomial_measure(m, N).densities[0]
    np.testing.assert_allclose(density.coefficient, c, rtol=1e-12)


def test_polynomial_measure_rejects_bad_degree():
    with pytest.raises(ConstraintError):
        polynomial_measure(-1)
    with pytest.raises(ConstraintError):
        polynomial_measure(2, N=-1)


@pytest.mark.parametrize('p,N', [(None, 0), (1.0, 4), (0.5, 6), (3.0, 3)])
def test_default_power(p, N):
    assert default_power(p) == N


def test_default_power_rejects_nonpositive():
    with pytest.raises(ConstraintError):
        default_power(0.0)


def test_polynomial_representation():
    # the linear term dominates, so the summed density never vanishes
    coeffs = [0.1, 2.0, 0.0, 0.02j]
    f = synth_mobius(polynomial_representation(coeffs, p=1.0))
    expected = np.polynomial.Polynomial(np.asarray(coeffs, dtype=complex))(PROBES)
    np.testing.assert_allclose(f(PROBES), expected, atol=1e-8)


def test_mobius_derivative_operation():
    value = synth_mobius_derivative(ATOMS, 2, 0.3)
    assert isinstance(value, complex)
    np.testing.assert_allclose(value, synth_mobius(ATOMS).derivative(2, 0.3))
    with pytest.raises(ConstraintError):
        synth_mobius_derivative(ATOMS, 0, 0.3)


def test_named_syntheses_match_factory():
    np.testing.assert_allclose(synth_bergman(ATOMS, 3.0, 1.0, 0.0)(PROBES),
                               KernelFactory.build('bergman', ATOMS, b=3.0, p=1.0, alpha=0.0)(PROBES))
    np.testing.assert_allclose(synth_lipschitz(ATOMS, 2.0, 1.0)(PROBES),
                               KernelFactory.build('lipschitz', ATOMS, b=2.0, t=1.0)(PROBES))
    np.testing.assert_allclose(synth_lipschitz_carleson(ATOMS, 0.5)(PROBES),
                               KernelFactory.build('lipschitz_carleson', ATOMS, t=0.5, alpha=0.0)(PROBES))


@pytest.mark.parametrize('k', [1, 2, 3])
def test_lattice_atomic_measure_derivative_identity(small_lattice, rng, k):
    centers = small_lattice.centers
    coeffs = rng.standard_normal(len(centers)) + 1j * rng.standard_normal(len(centers))
    mu = lattice_atomic_measure(small_lattice, coeffs, k)
    z = PROBES[:4]
    expected = ((1.0 - np.abs(centers) ** 2) / (1.0 - z[:, None] * np.conj(centers)) ** (k + 1)) @ coeffs
    np.testing.assert_allclose(synth_mobius(mu).derivative(k, z), expected, rtol=1e-10)


def test_lattice_atomic_measure_rejections(small_lattice):
    with pytest.raises(ConstraintError):
        lattice_atomic_measure(small_lattice, [1.0, 2.0], 1)
    with pytest.raises(ConstraintError):
        lattice_atomic_measure(small_lattice, np.ones(len(small_lattice.centers)), 0)


def test_zero_coefficients_are_dropped(small_lattice):
    coeffs = np.zeros(len(small_lattice.centers))
    coeffs[3] = 1.0
    assert lattice_atomic_measure(small_lattice, coeffs, 2).atom_count == 1


def test_integrate_derivative_prescribed_value():
    fprime = KernelFactory.build('mobius_derivative', ATOMS)
    f = integrate_derivative(fprime, value_at_zero=0.3)
    np.testing.assert_allclose(f(0.0), 0.3, atol=1e-10)
    np.testing.assert_allclose(f.derivative(1, PROBES), fprime(PROBES), rtol=1e-10)


def test_integrate_derivative_constant_fix():
    fprime = KernelFactory.build('mobius_derivative', ATOMS)
    base = integrate_derivative(fprime)
    shifted = integrate_derivative(fprime, constant_fix=polynomial_measure(0).scale(2.0))
    np.testing.assert_allclose(shifted(PROBES), base(PROBES) + 2.0, atol=1e-8)
    np.testing.assert_allclose(base(PROBES), synth_mobius(ATOMS)(PROBES))


def test_integrate_derivative_of_zero_measure():
    f = integrate_derivative(KernelFactory.build('mobius_derivative', Measure.zero()))
    np.testing.assert_allclose(f(PROBES), 0.0)


def test_integrate_derivative_needs_derivative_kernel():
    with pytest.raises(ConstraintError):
        integrate_derivative(synth_mobius(ATOMS))


@pytest.mark.parametrize('k', [1, 2, 3])
def test_domination_constant_at_most_one(k, disk_points):
    report = domination_constant(ATOMS, k, disk_points)
    assert report.k == k
    assert report.probes == len(disk_points)
    assert 0.0 < report.constant <= 1.0 + 1e-12


def test_domination_single_atom_is_sharp():
    report = domination_constant(Measure.atom(0.4 + 0.3j, 2.0), 2, PROBES)
    np.testing.assert_allclose(report.constant, 1.0, rtol=1e-12)


def test_domination_rejects_densities():
    with pytest.raises(ConstraintError):
        domination_constant(Measure.area(), 1, PROBES)


def test_lattice_fit_recovers_atomic_function(small_lattice, rng):
    centers = small_lattice.centers
    weights = rng.standard_normal(len(centers)) / len(centers)
    atoms = synth_mobius(Measure.atomic(centers, weights))

    def f(z):
        return atoms(z) + 0.3 - 0.2j * z

    result = fit_lattice_coefficients(f, small_lattice, p=1.0)
    assert result.relative_residual < 1e-8
    assert result.probes == 4 * (len(centers) + 2)
    np.testing.assert_allclose(result.lp_sum, np.sum(np.abs(result.coefficients)))
    refit = synth_mobius(lattice_atomic_measure(small_lattice, result.coefficients, 1))
    a0, a1 = result.polynomial
    np.testing.assert_allclose(refit(PROBES[:3]) + a0 + a1 * PROBES[:3], f(PROBES[:3]), atol=1e-6)


def test_lattice_fit_without_exponent(small_lattice):
    result = fit_lattice_coefficients(lambda z: np.exp(3.0 * z), small_lattice)
    assert result.lp_sum is None
    assert result.relative_residual > 0.0
    assert result.to_dict()['atoms'] == len(small_lattice.centers)


def test_lattice_fit_needs_enough_probes(small_lattice):
    with pytest.raises(ConstraintError):
        fit_lattice_coefficients(lambda z: z, small_lattice, probes=[0.1, 0.2])


def test_decompose_returns_measure(small_lattice):
    mu = decompose(lambda z: z ** 2, small_lattice)
    assert isinstance(mu, Measure)
    assert mu.atom_count == len(small_lattice.centers)

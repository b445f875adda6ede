import math

import numpy as np
import pytest
from numpy.polynomial import Polynomial

from SpaceMembership.derivatives import cauchy_derivative, contour_radius, radial_derivative
from SpaceMembership.functions import (
    BlackBox,
    Exponential,
    LogLog,
    LogSingular,
    Monomial,
    Pole,
    PolynomialFunction,
    as_holomorphic,
)

Z = np.asarray([0.3 + 0.2j, -0.5j, 0.7])


@pytest.mark.parametrize('k', [1, 2, 3, 4])
def test_cauchy_derivative_matches_exponential(k):
    np.testing.assert_allclose(cauchy_derivative(np.exp, Z, k), np.exp(Z), rtol=1e-9)


@pytest.mark.parametrize('k', [1, 2, 3, 4, 6])
def test_cauchy_derivative_of_boundary_pole(k):
    # the contour about 0.9 reaches halfway to the pole at 1
    z = np.asarray([0.9, 0.5j, -0.99])
    expected = math.factorial(k) * (1.0 - z) ** (-k - 1)
    np.testing.assert_allclose(cauchy_derivative(lambda w: 1.0 / (1.0 - w), z, k), expected, rtol=1e-9)


def test_cauchy_derivative_rejects_order_zero():
    with pytest.raises(ValueError):
        cauchy_derivative(np.exp, 0.1, 0)


def test_cauchy_derivative_needs_enough_nodes():
    with pytest.raises(ValueError):
        cauchy_derivative(np.exp, 0.1, 4, nodes=4)


def test_contour_radius_shrinks_toward_circle():
    radii = contour_radius(np.asarray([0.0, 0.9, 0.999]))
    np.testing.assert_allclose(radii, [0.5, 0.05, 0.0005])
    np.testing.assert_allclose(contour_radius(0.5, scale=0.2), 0.1)


def test_cauchy_derivative_exact_for_quadratic():
    value = cauchy_derivative(lambda z: z ** 2, np.asarray(0.4 + 0j), 2, radius=0.1)
    np.testing.assert_allclose(value, 2.0, rtol=1e-13)


def test_radial_derivative_of_monomial():
    f = Monomial(3)
    np.testing.assert_allclose(radial_derivative(f.derivative, Z, 2), 9.0 * Z ** 3, rtol=1e-12)
    np.testing.assert_allclose(radial_derivative(f.derivative, Z, 0), Z ** 3)


def test_monomial_derivatives():
    f = Monomial(4, c=2.0)
    np.testing.assert_allclose(f.derivative(2, Z), 24.0 * Z ** 2)
    np.testing.assert_allclose(f.derivative(5, Z), 0.0)
    with pytest.raises(ValueError):
        Monomial(-1)


def test_polynomial_function():
    f = PolynomialFunction([1.0, 0.0, 3.0])
    np.testing.assert_allclose(f(Z), 1.0 + 3.0 * Z ** 2)
    np.testing.assert_allclose(f.derivative(1, Z), 6.0 * Z)
    np.testing.assert_allclose(f.coefficients, [1.0, 0.0, 3.0])


def test_pole_derivative_exact_and_numeric():
    f = Pole(1.0, 2.0)
    np.testing.assert_allclose(f.derivative(2, 0.3), 6.0 * 0.7 ** -4, rtol=1e-12)
    np.testing.assert_allclose(cauchy_derivative(f, 0.3, 2), f.derivative(2, 0.3), rtol=1e-6)


def test_log_singular_derivatives():
    f = LogSingular()
    np.testing.assert_allclose(f.derivative(1, Z), 1.0 / (1.0 - Z))
    np.testing.assert_allclose(f.derivative(3, Z), 2.0 / (1.0 - Z) ** 3)
    assert f.focus() == (0.0,)
    assert f.peak_radius == 0.0


def test_loglog_first_derivative_matches_numeric():
    f = LogLog()
    np.testing.assert_allclose(f.derivative(1, Z), cauchy_derivative(f, Z, 1), rtol=1e-7)


def test_peak_radius_of_exterior_pole():
    assert Pole(2.0).peak_radius == 0.5
    assert Pole(2.0).focus() == ()


def test_exponential_log_abs_does_not_overflow():
    f = Exponential(1.0, 2)
    np.testing.assert_allclose(f.log_abs(np.asarray([30.0])), [900.0])
    np.testing.assert_allclose(f.log_abs(0.5j), np.log(abs(f(0.5j))))


def test_as_holomorphic():
    assert isinstance(as_holomorphic(Polynomial([1, 2])), PolynomialFunction)
    wrapped = as_holomorphic(np.sin)
    assert isinstance(wrapped, BlackBox)
    np.testing.assert_allclose(wrapped.derivative(1, Z), np.cos(Z), rtol=1e-7)
    f = Monomial(1)
    assert as_holomorphic(f) is f
    with pytest.raises(TypeError):
        as_holomorphic(3)

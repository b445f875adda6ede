import math
from fractions import Fraction

import numpy as np
import pytest

from DiskGeometry.geometry import pseudo_disk
from DiskQuadrature.quadrature import (
    DiskWeight,
    QuadratureScheme,
    angular_nodes,
    as_weight,
    integrate_disk,
    integrate_disk_resolved,
    integrate_disk_schedule,
    integrate_plane_schedule,
    integrate_pseudo_disk,
    integrate_pseudo_disks,
    jacobi_end_rule,
    moment,
    moment_exact,
    radial_integral,
)
from DiskRep.errors import ConstraintError, QuadratureError

FULL = QuadratureScheme(rho=1.0 - 1e-12)


def test_second_moment_of_area():
    np.testing.assert_allclose(integrate_disk(lambda z: np.abs(z) ** 2).real, 0.5, atol=1e-7)


def test_cumulative_schedule_of_constant():
    values = integrate_disk_schedule(lambda z: np.ones_like(z), [0.5, 0.9])
    np.testing.assert_allclose(values.real, [0.25, 0.81], rtol=1e-12)


def test_holomorphic_integrand_has_value_at_origin():
    value = integrate_disk(lambda z: 3.0 + z ** 2 + 5 * z ** 7, scheme=FULL)
    np.testing.assert_allclose(value, 3.0, rtol=1e-10)


def test_standard_weight_normalized():
    np.testing.assert_allclose(integrate_disk(lambda z: np.ones_like(z), weight=1.0, scheme=FULL).real,
                               1.0, rtol=1e-10)


def test_invariant_weight():
    value = integrate_disk(lambda z: (1 - np.abs(z) ** 2) ** 2, weight='invariant',
                           scheme=QuadratureScheme(rho=0.9))
    np.testing.assert_allclose(value.real, 0.81, rtol=1e-10)


@pytest.mark.parametrize('k, N, expected', [(1, 0, Fraction(1, 2)), (1, 1, Fraction(1, 6)), (0, 0, Fraction(1))])
def test_moment_exact(k, N, expected):
    assert moment_exact(k, N) == expected


@pytest.mark.parametrize('k', [0, 1, 3, 6])
@pytest.mark.parametrize('N', [1, 2, 5])
def test_moment_matches_quadrature(k, N):
    value = integrate_disk(lambda z: np.abs(z) ** (2 * k), weight=DiskWeight.power(N), scheme=FULL)
    np.testing.assert_allclose(value.real, moment(k, N), rtol=1e-10)


def test_large_moment_uses_log_gamma():
    np.testing.assert_allclose(moment(200, 0), 1.0 / 201.0, rtol=1e-12)
    np.testing.assert_allclose(moment(100, 100),
                               math.exp(2 * math.lgamma(101) - math.lgamma(202)), rtol=1e-12)


@pytest.mark.parametrize('k, N', [(-1, 0), (0, -2), (1.5, 0)])
def test_moment_rejects_bad_orders(k, N):
    with pytest.raises(ConstraintError):
        moment(k, N)


def test_pseudo_disk_mean_value():
    disk = pseudo_disk(0.5, 0.5)
    np.testing.assert_allclose(integrate_pseudo_disk(lambda w: w, disk), disk.center * disk.radius ** 2,
                               rtol=1e-12)


def test_pseudo_disks_batched_area():
    centers = np.asarray([0.0, 0.5, 0.9j])
    disks = [pseudo_disk(c, 0.3) for c in centers]
    values = integrate_pseudo_disks(lambda w: np.ones_like(w), [d.center for d in disks], [d.radius for d in disks])
    np.testing.assert_allclose(values.real, [d.area for d in disks], rtol=1e-12)


def test_jacobi_end_rule_integrates_endpoint_singularity():
    rule = jacobi_end_rule(-0.5, levels=20)
    np.testing.assert_allclose(rule.integrate(np.ones_like(rule.t)), [2.0], rtol=1e-10)


def test_jacobi_end_rule_rejects_nonintegrable_weight():
    with pytest.raises(ConstraintError):
        jacobi_end_rule(-1.0, levels=10)


def test_radial_integral():
    np.testing.assert_allclose(radial_integral(lambda t, s: s, [0.5]), [0.21875], rtol=1e-12)


@pytest.mark.parametrize('focus', [(), (0.0,), (0.0, np.pi / 2)])
def test_angular_weights_sum_to_one(focus):
    theta, weights = angular_nodes(64, focus)
    assert len(theta) == len(weights)
    np.testing.assert_allclose(np.sum(weights), 1.0, rtol=1e-12)


def test_focused_rule_resolves_boundary_peak():
    # Poisson kernel mean is one at every radius
    r = 1 - 1e-6
    value = integrate_disk_schedule(lambda z: (1 - np.abs(z) ** 2) / np.abs(1 - z) ** 2, [r], focus=(0.0,))
    np.testing.assert_allclose(value.real, [r * r], rtol=1e-7)


def test_gaussian_plane_integral():
    values = integrate_plane_schedule(lambda w: np.exp(-np.abs(w) ** 2), 1.0, [2.0, 8.0])
    np.testing.assert_allclose(values.real, [np.pi * (1 - np.exp(-4.0)), np.pi], rtol=1e-10)


def test_non_finite_integrand_raises():
    with pytest.raises(QuadratureError):
        integrate_disk(lambda z: np.full_like(z, np.nan))


@pytest.mark.parametrize('weight', ['bogus', {'beta': 1}, -1.0])
def test_invalid_weights(weight):
    with pytest.raises(ConstraintError):
        as_weight(weight)


def test_weight_forms():
    assert as_weight(None) == DiskWeight.none()
    assert as_weight({'alpha': 2}).factor == 3.0
    assert as_weight('invariant').exponent == -2.0
    assert as_weight({'power': 1.5}) == DiskWeight.power(1.5)


@pytest.mark.parametrize('kwargs', [{'angular_nodes': 5}, {'radial_nodes': 1}, {'rho': 1.0}, {'tol': 0.0}])
def test_invalid_schemes(kwargs):
    with pytest.raises(ConstraintError):
        QuadratureScheme(**kwargs)


def test_scheme_from_args_keeps_defaults():
    class Args:
        rho = 0.9
        tol = None
    scheme = QuadratureScheme.from_args(Args())
    assert scheme.rho == 0.9
    assert scheme.tol == QuadratureScheme().tol


def test_pseudo_disk_with_interior_kink():
    # |w| is not smooth at the origin; polar coordinates about the origin reduce
    # the integral to (2/3) mean_phi reach(phi)^3
    center, radius = 0.3 + 0.0j, 0.44
    phi = 2.0 * np.pi * np.arange(4096) / 4096
    b = -center.real * np.cos(phi)
    reach = -b + np.sqrt(b * b + radius ** 2 - abs(center) ** 2)
    expected = 2.0 / 3.0 * np.mean(reach ** 3)
    value = integrate_pseudo_disks(np.abs, [center], [radius], kinks=[0j])
    np.testing.assert_allclose(value.real, [expected], rtol=1e-10)


def test_kink_outside_disk_keeps_center_rule():
    disk = pseudo_disk(0.8, 0.2)
    plain = integrate_pseudo_disk(lambda w: np.abs(w) ** 2, disk)
    values = integrate_pseudo_disks(lambda w: np.abs(w) ** 2, [disk.center], [disk.radius], kinks=[0j])
    np.testing.assert_allclose(values[0], plain, rtol=1e-14)


def _rough_outside(z):
    # angularly discontinuous beyond |z| = 0.995, so no trapezoid size resolves it there
    rough = np.sign(np.sin(5000.5 * np.angle(z)))
    return np.where(np.abs(z) > 0.995, 1.0 + 0.5 * rough, 1.0)


def test_resolved_prefix_stops_before_unresolved_radius():
    schedule = [0.9, 0.99, 0.999]
    values, resolved = integrate_disk_resolved(_rough_outside, schedule)
    assert resolved == 2
    np.testing.assert_allclose(values[:2].real, np.square(schedule[:2]), rtol=1e-12)
    with pytest.raises(QuadratureError):
        integrate_disk_schedule(_rough_outside, schedule)


def test_resolved_covers_smooth_schedule():
    values, resolved = integrate_disk_resolved(lambda z: np.abs(z) ** 2, [0.5, 0.9, 0.99])
    assert resolved == 3
    np.testing.assert_allclose(values.real, 0.5 * np.asarray([0.5, 0.9, 0.99]) ** 4, rtol=1e-12)

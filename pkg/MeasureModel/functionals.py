"""
Functionals of measures: localized and averaging functions, the Berezin
transform, their truncated norms, total variation and Carleson constants.

Truncated integrals are always reported over a radius schedule together with
a trend verdict; deciding finite versus infinite is left to the classifier.
"""

import logging
import math
from dataclasses import dataclass, replace
from typing import Any, Dict, List, Optional, Sequence

import numpy as np
from scipy.special import beta as beta_function

from DiskRep.config import Config, validate_schedule
from DiskRep.errors import ConstraintError, DomainError, InfiniteMassError
from DiskGeometry.geometry import check_in_disk, check_radius, pseudo_disk_parameters, _pseudo_distance_unchecked
from DiskGeometry.lattice import Lattice
from DiskQuadrature.quadrature import (
    QuadratureScheme,
    gauss_legendre,
    integrate_disk,
    integrate_disk_schedule,
    integrate_pseudo_disks,
    radial_integral,
    radial_rule,
)
from .convergence import SeminormReport, Verdict, make_report
from .measure import Measure

logger = logging.getLogger(__name__)

# Pairwise distance blocks are capped at this many entries
_BLOCK_ENTRIES = 1 << 20
# Gauss-Legendre nodes for the arc part of captured invariant areas
_ARC_NODES = 48


def _check_p(p: float) -> float:
    p = float(p)
    if not p > 0.0:
        raise DomainError(f"Exponent p must be positive, got {p}")
    return p


def _shape_like(values: np.ndarray, z: Any):
    if np.ndim(z) == 0:
        return values.reshape(()).item()
    return values.reshape(np.shape(z))


# ----------------------------------------------------------------------
# Localized function
# ----------------------------------------------------------------------
def _atom_capture(mu: Measure, z: np.ndarray, r: float, variation: bool) -> np.ndarray:
    """sum of (|)w_k(|) over atoms with pseudo_distance(z, a_k) < r, per point"""
    dtype = float if variation else complex
    out = np.zeros(len(z), dtype=dtype)
    if not mu.atom_count:
        return out
    weights = np.abs(mu.weights) if variation else mu.weights
    tree = mu.atom_tree
    if tree is None:
        block = max(1, _BLOCK_ENTRIES // mu.atom_count)
        for start in range(0, len(z), block):
            zz = z[start:start + block]
            inside = _pseudo_distance_unchecked(zz[:, None], mu.locations[None, :]) < r
            out[start:start + block] = inside.astype(float) @ weights
        return out

    center, radius = pseudo_disk_parameters(z, r)
    points = np.column_stack([center.real, center.imag])
    candidates = tree.query_ball_point(points, radius * (1.0 + 1e-9) + 1e-15)
    for i, idx in enumerate(candidates):
        if not idx:
            continue
        idx = np.asarray(idx)
        inside = _pseudo_distance_unchecked(z[i], mu.locations[idx]) < r
        out[i] = np.sum(weights[idx][inside])
    return out


def _density_capture(mu: Measure, z: np.ndarray, r: float, variation: bool,
                     scheme: Optional[QuadratureScheme]) -> np.ndarray:
    if not mu.densities:
        return np.zeros(len(z), dtype=float if variation else complex)
    center, radius = pseudo_disk_parameters(z, r)
    integrand = mu.abs_density if variation else mu.density_value
    values = integrate_pseudo_disks(integrand, center, radius, scheme, kinks=mu.kink_points())
    return values.real if variation else values


def localized(mu: Measure, r: float, z: Any, variation: bool = False,
              scheme: Optional[QuadratureScheme] = None):
    """
    mu(D(z, r)), or |mu|(D(z, r)) when variation is set.

    Atoms count iff pseudo_distance(z, a) < r strictly; densities are
    integrated over the Euclidean realization of D(z, r). Accepts arrays
    of points.

    Raises:
        QuadratureError: if a density integral misses the tolerance
    """
    r = check_radius(r)
    z_arr = check_in_disk(z)
    flat = np.atleast_1d(z_arr).ravel()
    values = _atom_capture(mu, flat, r, variation) + _density_capture(mu, flat, r, variation, scheme)
    return _shape_like(values, z)


def averaged(mu: Measure, r: float, z: Any, scheme: Optional[QuadratureScheme] = None):
    """Averaging function |mu|(D(z, r)) / (1 - |z|^2)^2"""
    z_arr = check_in_disk(z)
    values = np.asarray(localized(mu, r, z_arr, variation=True, scheme=scheme))
    values = values / (1.0 - np.abs(z_arr) ** 2) ** 2
    return _shape_like(np.asarray(values), z)


# ----------------------------------------------------------------------
# Berezin transform
# ----------------------------------------------------------------------
def _berezin_kernel(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    return (1.0 - np.abs(z) ** 2) ** 2 / np.abs(1.0 - z * np.conj(w)) ** 4


def berezin(mu: Measure, z: Any, variation: bool = True, scheme: Optional[QuadratureScheme] = None):
    """
    Berezin transform int (1 - |z|^2)^2 / |1 - z conj(w)|^4 d|mu|(w).

    With variation unset the complex measure is integrated instead.

    Raises:
        InfiniteMassError: if the total variation of mu is not finite
    """
    z_arr = check_in_disk(z)
    report = mu.finite_mass_report
    if report.verdict != Verdict.CONVERGED:
        raise InfiniteMassError(
            f"Berezin transform needs |mu|(D) < infinity; total mass trend is {report.verdict.value} ({report.reason})")

    flat = np.atleast_1d(z_arr).ravel()
    out = np.zeros(len(flat), dtype=float if variation else complex)
    if mu.atom_count:
        weights = np.abs(mu.weights) if variation else mu.weights
        block = max(1, _BLOCK_ENTRIES // mu.atom_count)
        for start in range(0, len(flat), block):
            zz = flat[start:start + block]
            out[start:start + block] += _berezin_kernel(zz[:, None], mu.locations[None, :]) @ weights
    if mu.densities:
        density = mu.abs_density if variation else mu.density_value
        focus = mu.singular_directions()
        for i, zi in enumerate(flat):
            value = integrate_disk(lambda w, zi=zi: _berezin_kernel(zi, w) * density(w),
                                   scheme=scheme, peak=abs(zi), focus=focus)
            out[i] += value.real if variation else value
    return _shape_like(out, z)


# ----------------------------------------------------------------------
# Total variation and moments
# ----------------------------------------------------------------------
def _radial_variation_integral(mu: Measure, rho_schedule, radial_factor, scheme: Optional[QuadratureScheme]):
    """Cumulative int_{|w| <= rho} radial_factor(|w|^2) |g(w)| dA(w) for the density part"""
    probe = mu.abs_angular_mean(np.asarray([0.25]))
    if probe is not None:
        return radial_integral(lambda t, s: radial_factor(t, s) * mu.abs_angular_mean(t), rho_schedule).real

    def integrand(w):
        t = np.abs(w) ** 2
        return radial_factor(t, 1.0 - t) * mu.abs_density(w)

    return integrate_disk_schedule(integrand, rho_schedule, scheme=scheme, focus=mu.singular_directions()).real


def _atom_partial_sums(mu: Measure, schedule, factor: Optional[np.ndarray] = None) -> np.ndarray:
    if not mu.atom_count:
        return np.zeros(len(schedule))
    mags = np.abs(mu.weights) if factor is None else np.abs(mu.weights) * factor
    radii = np.abs(mu.locations)
    return np.asarray([float(np.sum(mags[radii <= rho])) for rho in schedule])


def total_mass(mu: Measure, rho_schedule: Optional[Sequence[float]] = None,
               scheme: Optional[QuadratureScheme] = None) -> SeminormReport:
    """Truncated |mu|({|z| <= rho}) per rho with a convergence verdict"""
    if mu.space != 'disk':
        raise DomainError("total_mass works on disk measures; plane measures report their own mass")
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    values = _atom_partial_sums(mu, schedule)
    if mu.densities:
        values = values + _radial_variation_integral(mu, schedule, lambda t, s: np.ones_like(t), scheme)
    return make_report(values, schedule, 'total_mass', label=mu.describe())


def log_moment(mu: Measure, rho_schedule: Optional[Sequence[float]] = None,
               scheme: Optional[QuadratureScheme] = None) -> SeminormReport:
    """Truncated int log(1 / (1 - |w|^2)) d|mu|(w)"""
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    factor = -np.log1p(-np.abs(mu.locations) ** 2) if mu.atom_count else None
    values = _atom_partial_sums(mu, schedule, factor)
    if mu.densities:
        values = values + _radial_variation_integral(mu, schedule, lambda t, s: -np.log(s), scheme)
    return make_report(values, schedule, 'log_moment', label=mu.describe())


# ----------------------------------------------------------------------
# Norms of the localized function
# ----------------------------------------------------------------------
def captured_area(center_abs, radius, rho: float, exponent: float = -2.0, nodes: int = _ARC_NODES) -> np.ndarray:
    """
    int over {|z| <= rho} inside the Euclidean disk (|center| = center_abs,
    radius) of (1 - |z|^2)^exponent dA(z), for exponent < -1.

    The part of the disk containing whole circles |z| = s has a closed form;
    the remaining annulus is integrated in s = mid - half cos(v), which
    absorbs the square-root behaviour of the arc length at both ends.
    """
    cc, R = np.broadcast_arrays(np.asarray(center_abs, dtype=float), np.asarray(radius, dtype=float))
    k = -(exponent + 1.0)
    full_end = np.clip(np.minimum(rho, R - cc), 0.0, None)
    full = np.where(R > cc, np.expm1(-k * np.log1p(-full_end ** 2)) / k, 0.0)

    lo = np.abs(cc - R)
    hi = np.minimum(rho, cc + R)
    has_arc = (hi > lo) & (cc > 0.0)
    x, wx = gauss_legendre(nodes)
    v = 0.5 * np.pi * (x + 1.0)
    wv = 0.5 * np.pi * wx
    mid = (0.5 * (lo + hi))[..., None]
    half = (0.5 * (hi - lo))[..., None]
    s = mid - half * np.cos(v)
    ds = half * np.sin(v) * wv
    cc_safe = np.where(cc > 0.0, cc, 1.0)[..., None]
    s_safe = np.where(s > 0.0, s, 1.0)
    cos_phi = np.clip((s * s + cc_safe ** 2 - R[..., None] ** 2) / (2.0 * s_safe * cc_safe), -1.0, 1.0)
    frac = np.arccos(cos_phi) / np.pi
    one_minus = (1.0 - s) * (1.0 + s)
    arc = np.sum(2.0 * s * one_minus ** exponent * frac * ds, axis=-1)
    return full + np.where(has_arc, arc, 0.0)


def _fubini_lp1(mu: Measure, r: float, schedule, exponent: float, scheme: Optional[QuadratureScheme]) -> np.ndarray:
    """
    int_{|z| <= rho} |mu|(D(z, r)) (1 - |z|^2)^exponent dA(z) through
    Fubini: w in D(z, r) iff z in D(w, r).
    """
    values = np.zeros(len(schedule))
    if mu.atom_count:
        center, radius = pseudo_disk_parameters(mu.locations, r)
        mags = np.abs(mu.weights)
        for i, rho in enumerate(schedule):
            values[i] += float(mags @ captured_area(np.abs(center), radius, rho, exponent))
    if not mu.densities:
        return values

    radial_mean = mu.abs_angular_mean(np.asarray([0.25])) is not None
    for i, rho in enumerate(schedule):
        rho_out = (rho + r) / (1.0 + rho * r)
        inner = (rho - r) / (1.0 - rho * r)
        breaks = sorted({b for b in (r, inner, rho_out) if 0.0 < b <= rho_out})
        if radial_mean:
            rule = radial_rule(breaks)
            center, radius = pseudo_disk_parameters(np.sqrt(rule.t), r)
            lam = captured_area(np.abs(center), radius, rho, exponent)
            values[i] += float(rule.integrate(lam * mu.abs_angular_mean(rule.t))[-1].real)
        else:
            def integrand(w, rho=rho):
                c, R = pseudo_disk_parameters(w, r)
                return mu.abs_density(w) * captured_area(np.abs(c), R, rho, exponent)

            loose = replace(scheme or QuadratureScheme(), tol=1e-6)
            values[i] += integrate_disk_schedule(integrand, breaks, scheme=loose,
                                                 focus=mu.singular_directions())[-1].real
    return values


def _localized_abs(mu: Measure, r: float, z: np.ndarray, averaged_values: bool,
                   scheme: Optional[QuadratureScheme]) -> np.ndarray:
    values = np.asarray(localized(mu, r, z, variation=True, scheme=scheme), dtype=float)
    if averaged_values:
        values = values / (1.0 - np.abs(z) ** 2) ** 2
    return values


def _direct_lp(mu: Measure, r: float, p: float, schedule, averaged_values: bool,
               scheme: Optional[QuadratureScheme]) -> np.ndarray:
    """Outer quadrature of F(z)^p against dlambda; radial when F depends on |z| only"""
    if mu.rotation_invariant:
        rule = radial_rule(schedule)
        F = _localized_abs(mu, r, np.sqrt(rule.t).astype(complex), averaged_values, scheme)
        return rule.integrate(F ** p * rule.s ** -2.0).real

    outer = scheme or QuadratureScheme()
    if mu.atom_count:
        # indicator-type integrands: fixed resolution, no angular refinement
        outer = replace(outer, tol=float('inf'))
    return integrate_disk_schedule(lambda z: _localized_abs(mu, r, z, averaged_values, scheme) ** p,
                                   schedule, weight='invariant', scheme=outer,
                                   focus=mu.singular_directions()).real


def probe_radii(schedule: Sequence[float], per_step: int = Config.SHELLS_PER_STEP) -> np.ndarray:
    """0, then per_step radii per schedule interval, evenly spaced in log(1 / (1 - rho))"""
    radii = [0.0]
    previous = 0.0
    for rho in schedule:
        x0, x1 = -math.log1p(-previous), -math.log1p(-rho)
        for x in np.linspace(x0, x1, per_step + 1)[1:]:
            radii.append(-math.expm1(-x))
        previous = rho
    radii[-1] = schedule[-1]
    return np.unique(np.asarray(radii))


def _probe_points(mu: Measure, radii: np.ndarray, angles: int) -> np.ndarray:
    if mu.rotation_invariant:
        return radii.astype(complex)
    theta = 2.0 * np.pi * np.arange(angles) / angles
    points = (radii[:, None] * np.exp(1j * theta)[None, :]).ravel()
    return np.unique(points)


def _running_sup(points: np.ndarray, values: np.ndarray, schedule) -> np.ndarray:
    radii = np.abs(points)
    return np.asarray([float(np.max(values[radii <= rho + 1e-15], initial=0.0)) for rho in schedule])


def _sup_lp(mu: Measure, r: float, schedule, averaged_values: bool,
            scheme: Optional[QuadratureScheme]) -> np.ndarray:
    points = _probe_points(mu, probe_radii(schedule), Config.CARLESON_ANGLES)
    if mu.atom_count:
        inside = mu.locations[np.abs(mu.locations) <= schedule[-1]]
        points = np.concatenate([points, inside])
    values = _localized_abs(mu, r, points, averaged_values, scheme)
    return _running_sup(points, values, schedule)


def localized_lp_norm(mu: Measure, r: float, p: float, rho_schedule: Optional[Sequence[float]] = None,
                      averaged: bool = False, scheme: Optional[QuadratureScheme] = None) -> SeminormReport:
    """
    Truncated int_{|z| <= rho} |mu|(D(z, r))^p dlambda(z) per rho.

    p = 1 goes through Fubini (exact for atoms), p = inf reports the running
    sup over probe shells, other p use an outer quadrature. With averaged
    set the averaging function replaces the localized one.
    """
    r = check_radius(r)
    p = _check_p(p)
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    kind = 'averaged_lp' if averaged else 'localized_lp'
    label = f"r={r:g}, p={p:g}"

    if mu.is_zero:
        values = np.zeros(len(schedule))
    elif math.isinf(p):
        values = _sup_lp(mu, r, schedule, averaged, scheme)
    elif p == 1.0:
        values = _fubini_lp1(mu, r, schedule, -4.0 if averaged else -2.0, scheme)
    else:
        values = _direct_lp(mu, r, p, schedule, averaged, scheme)
    return make_report(values, schedule, kind, label=label, r=r, p=p)


def averaged_lp_norm(mu: Measure, r: float, p: float, rho_schedule: Optional[Sequence[float]] = None,
                     scheme: Optional[QuadratureScheme] = None) -> SeminormReport:
    """Truncated L^p(dlambda) norm of the averaging function"""
    return localized_lp_norm(mu, r, p, rho_schedule, averaged=True, scheme=scheme)


# ----------------------------------------------------------------------
# Lattice sequences
# ----------------------------------------------------------------------
@dataclass
class SequenceResult:
    """l^p norm of a lattice sequence with its partial sums"""
    norm: float
    values: np.ndarray
    centers: np.ndarray
    report: SeminormReport

    def to_dict(self) -> Dict[str, Any]:
        return {'norm': self.norm, 'count': int(len(self.values)), 'report': self.report.to_dict()}


def _center_values(mu: Measure, lat: Lattice, r: float, averaged_values: bool,
                   scheme: Optional[QuadratureScheme]) -> np.ndarray:
    """|mu|(D(z_n, r)) (or averaged) at every site, one evaluation per ring when possible"""
    if mu.rotation_invariant:
        per_ring = _localized_abs(mu, r, lat.ring_radii.astype(complex), averaged_values, scheme)
        return np.repeat(per_ring, lat.ring_counts)
    return _localized_abs(mu, r, lat.sites, averaged_values, scheme)


def _sequence_schedule(lat: Lattice, schedule: Optional[Sequence[float]]) -> List[float]:
    if schedule is not None:
        return list(validate_schedule(schedule))
    chosen = [rho for rho in Config.LATTICE_SCHEDULE if rho <= lat.rho_max]
    if len(chosen) < Config.MIN_TREND_POINTS:
        picks = np.unique(np.linspace(0, len(lat.ring_radii) - 1, min(len(lat.ring_radii), 6)).astype(int))
        chosen = [float(lat.ring_radii[i]) for i in picks]
    return chosen


def sequence_lp(mu: Measure, lat: Lattice, p: float, averaged: bool = False,
                schedule: Optional[Sequence[float]] = None,
                scheme: Optional[QuadratureScheme] = None) -> SequenceResult:
    """
    l^p norm of {mu_r(z_n)} (or of the averaging values) over active centers.

    The report holds partial sums of v_n^p (running max for p = inf) over
    centers with |z_n| <= rho for each rho of the schedule.
    """
    p = _check_p(p)
    values = _center_values(mu, lat, lat.r, averaged, scheme)[lat.active]
    centers = lat.sites[lat.active]
    if math.isinf(p):
        norm = float(np.max(values, initial=0.0))
    else:
        norm = float(np.sum(values ** p) ** (1.0 / p))

    radii = np.abs(centers)
    sched = _sequence_schedule(lat, schedule)
    if math.isinf(p):
        partial = [float(np.max(values[radii <= rho], initial=0.0)) for rho in sched]
    else:
        partial = [float(np.sum(values[radii <= rho] ** p)) for rho in sched]
    kind = 'averaged_sequence_lp' if averaged else 'sequence_lp'
    report = make_report(partial, sched, kind, label=f"r={lat.r:g}, p={p:g}", r=lat.r, p=p)
    return SequenceResult(norm=norm, values=values, centers=centers, report=report)


# ----------------------------------------------------------------------
# Carleson constants
# ----------------------------------------------------------------------
@dataclass
class CarlesonProfile:
    """Shell maxima of |mu|(D(z, r)) / (1 - |z|^2)^t"""
    t: float
    r: float
    radii: List[float]
    shell_max: List[float]
    constant: float
    report: SeminormReport
    probes: int = 0

    @property
    def bounded(self) -> bool:
        return self.report.verdict == Verdict.CONVERGED

    def to_dict(self) -> Dict[str, Any]:
        return {
            't': self.t,
            'r': self.r,
            'radii': list(self.radii),
            'shell_max': list(self.shell_max),
            'constant': self.constant,
            'bounded': self.bounded,
            'probes': self.probes,
            'report': self.report.to_dict(),
        }


def carleson_constant(mu: Measure, t: float, r: float, probes: Optional[Sequence] = None,
                      scheme: Optional[QuadratureScheme] = None) -> CarlesonProfile:
    """
    max over probes of |mu|(D(z, r)) / (1 - |z|^2)^t.

    Default probes are 0 plus Config.CARLESON_ANGLES points on each shell
    1 - 2^-k. The verdict classifies the running maximum over shells.
    """
    t = float(t)
    if not t > 0.0:
        raise DomainError(f"Carleson exponent t must be positive, got {t}")
    r = check_radius(r)
    if probes is None:
        radii = np.concatenate([[0.0], np.asarray(Config.CARLESON_SHELLS)])
        points = _probe_points(mu, radii, Config.CARLESON_ANGLES)
    else:
        points = check_in_disk(np.asarray(probes, dtype=complex)).ravel()

    ratios = _localized_abs(mu, r, points, False, scheme) / (1.0 - np.abs(points) ** 2) ** t
    moduli = np.round(np.abs(points), 14)
    shells = np.unique(moduli)
    shell_max = np.asarray([float(np.max(ratios[moduli == s])) for s in shells])
    running = np.maximum.accumulate(shell_max)
    report = make_report(running, shells, 'carleson', label=f"t={t:g}, r={r:g}", t=t, r=r)
    return CarlesonProfile(t=t, r=r, radii=[float(s) for s in shells], shell_max=[float(v) for v in shell_max],
                           constant=float(np.max(ratios)), report=report, probes=int(len(points)))


def carleson_sequence_constant(mu: Measure, lat: Lattice, t: float,
                               scheme: Optional[QuadratureScheme] = None) -> float:
    """Lattice form sup_n |mu|(D(z_n, r)) / (1 - |z_n|^2)^t"""
    values = _center_values(mu, lat, lat.r, False, scheme)
    ratios = values / (1.0 - np.abs(lat.sites) ** 2) ** float(t)
    return float(np.max(ratios[lat.active], initial=0.0))


def carleson_embedding_ratio(mu: Measure, t: float, p: float = 2.0, degrees: Sequence[int] = range(8),
                             rho: float = Config.DEFAULT_RHO,
                             scheme: Optional[QuadratureScheme] = None) -> Dict[str, Any]:
    """
    Ratios int |z^m|^p d|mu| / int |z^m|^p (1 - |z|^2)^{t-2} dA over monomials.

    For t > 1 a t-Carleson measure keeps these ratios bounded in m.
    """
    t = float(t)
    p = _check_p(p)
    if not t > 1.0:
        raise ConstraintError(f"The embedding needs t > 1, got {t}")
    ratios = []
    for m in degrees:
        power = 0.5 * m * p
        denominator = float(beta_function(power + 1.0, t - 1.0))
        numerator = 0.0
        if mu.atom_count:
            numerator += float(np.sum(np.abs(mu.weights) * np.abs(mu.locations) ** (m * p)))
        if mu.densities:
            numerator += float(_radial_variation_integral(
                mu, [rho], lambda tt, s, power=power: tt ** power, scheme)[-1])
        ratios.append(numerator / denominator)
    return {'t': t, 'p': p, 'degrees': list(degrees), 'ratios': ratios, 'constant': max(ratios, default=0.0)}


# ----------------------------------------------------------------------
# Berezin norms
# ----------------------------------------------------------------------
def berezin_lp_norm(mu: Measure, p: float = 1.0, rho_schedule: Optional[Sequence[float]] = None) -> SeminormReport:
    """
    Truncated int berezin(|mu|) dA for p = 1, through Fubini.

    int (1 - |z|^2)^2 / |1 - z conj(w)|^4 dA(z) is the Forelli-Rudin
    integral with (a, b) = (2, 4), so the values are
    int_{|w| <= rho} FR(2, 4, w) d|mu|(w), growing like the log moment.
    """
    from SpaceMembership.forelli_rudin import forelli_rudin

    p = _check_p(p)
    if p != 1.0:
        raise ConstraintError("berezin_lp_norm is implemented for p = 1 only")
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    factor = np.asarray(forelli_rudin(2.0, 4.0, mu.locations)) if mu.atom_count else None
    values = _atom_partial_sums(mu, schedule, factor)
    if mu.densities:
        def weight(t, s):
            return np.asarray(forelli_rudin(2.0, 4.0, np.sqrt(t)))
        values = values + _radial_variation_integral(mu, schedule, weight, None)
    return make_report(values, schedule, 'berezin_lp', label=mu.describe())

"""
Quadrature on the unit disk, on pseudo-hyperbolic disks and on the plane.

Disk integrals use the polar product rule in t = |z|^2: composite
Gauss-Legendre panels graded toward t = 1 (breakpoints 1 - 2^-j plus every
schedule radius) and an adaptive trapezoid in the angle. With the normalized
area measure,

    int_{|z| <= rho} f dA = int_0^{rho^2} mean_theta f(sqrt(t) e^{i theta}) dt,

so one pass over the panels yields the integral at every radius of a
schedule.
"""

import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Optional, Sequence, Tuple, Union

import numpy as np
from scipy.special import roots_jacobi, roots_legendre

from DiskRep.config import Config, validate_schedule
from DiskRep.errors import ConstraintError, QuadratureError

logger = logging.getLogger(__name__)

# Evaluation blocks are capped at this many points
_BLOCK_POINTS = 1 << 20


@dataclass(frozen=True)
class QuadratureScheme:
    """Resolution and truncation of disk quadrature"""
    radial_nodes: int = Config.RADIAL_NODES
    angular_nodes: int = Config.ANGULAR_NODES
    rho: float = Config.DEFAULT_RHO
    tol: float = Config.QUAD_TOL
    max_angular_nodes: int = Config.MAX_ANGULAR_NODES

    def __post_init__(self):
        if self.radial_nodes < 2:
            raise ConstraintError(f"radial_nodes must be >= 2, got {self.radial_nodes}")
        if self.angular_nodes < 4 or self.angular_nodes % 2:
            raise ConstraintError(f"angular_nodes must be even and >= 4, got {self.angular_nodes}")
        if not 0.0 < self.rho < 1.0:
            raise ConstraintError(f"Truncation radius must lie in (0, 1), got {self.rho}")
        if not self.tol > 0.0:
            raise ConstraintError(f"Tolerance must be positive, got {self.tol}")
        if self.max_angular_nodes < self.angular_nodes:
            raise ConstraintError("max_angular_nodes must be >= angular_nodes")

    @classmethod
    def from_args(cls, args: Any) -> 'QuadratureScheme':
        """Build from parsed CLI flags; missing or None flags keep the defaults"""
        overrides = {}
        for name in ('radial_nodes', 'angular_nodes', 'rho', 'tol'):
            value = getattr(args, name, None)
            if value is not None:
                overrides[name] = value
        return cls(**overrides)

    def with_rho(self, rho: float) -> 'QuadratureScheme':
        return replace(self, rho=rho)

    def to_dict(self) -> dict:
        return {
            'radial_nodes': self.radial_nodes,
            'angular_nodes': self.angular_nodes,
            'rho': self.rho,
            'tol': self.tol,
            'max_angular_nodes': self.max_angular_nodes,
        }


@dataclass(frozen=True)
class DiskWeight:
    """Radial weight c (1 - |z|^2)^e multiplying the area measure"""
    kind: str = 'none'
    exponent: float = 0.0
    factor: float = 1.0

    @classmethod
    def none(cls) -> 'DiskWeight':
        return cls()

    @classmethod
    def alpha(cls, alpha: float) -> 'DiskWeight':
        """Normalized dA_alpha = (alpha + 1)(1 - |z|^2)^alpha dA"""
        alpha = float(alpha)
        if alpha <= -1.0:
            raise ConstraintError(f"dA_alpha needs alpha > -1, got {alpha}")
        return cls('alpha', alpha, alpha + 1.0)

    @classmethod
    def invariant(cls) -> 'DiskWeight':
        """Moebius invariant dlambda = dA / (1 - |z|^2)^2"""
        return cls('invariant', -2.0, 1.0)

    @classmethod
    def power(cls, exponent: float) -> 'DiskWeight':
        return cls('power', float(exponent), 1.0)

    def __call__(self, s: np.ndarray) -> np.ndarray:
        """Weight as a function of s = 1 - |z|^2"""
        if self.exponent == 0.0:
            return np.full_like(s, self.factor)
        return self.factor * s ** self.exponent


WeightLike = Union[None, str, float, int, dict, DiskWeight]


def as_weight(weight: WeightLike) -> DiskWeight:
    """Accept None, 'none', 'invariant', a number (alpha), {'alpha': a} or a DiskWeight"""
    if weight is None:
        return DiskWeight.none()
    if isinstance(weight, DiskWeight):
        return weight
    if isinstance(weight, str):
        if weight == 'none':
            return DiskWeight.none()
        if weight == 'invariant':
            return DiskWeight.invariant()
        raise ConstraintError(f"Unknown weight '{weight}'. Use 'none', 'invariant' or an alpha value")
    if isinstance(weight, dict):
        if 'alpha' in weight:
            return DiskWeight.alpha(weight['alpha'])
        if 'power' in weight:
            return DiskWeight.power(weight['power'])
        raise ConstraintError(f"Unknown weight specification {weight}")
    return DiskWeight.alpha(float(weight))


# ----------------------------------------------------------------------
# One-dimensional rules
# ----------------------------------------------------------------------
@lru_cache(maxsize=64)
def gauss_legendre(n: int) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes and weights on [-1, 1]"""
    x, w = roots_legendre(n)
    return x, w


@lru_cache(maxsize=64)
def gauss_jacobi(n: int, a: float) -> Tuple[np.ndarray, np.ndarray]:
    """Gauss-Jacobi rule for (1 - x)^a on [-1, 1]"""
    x, w = roots_jacobi(n, a, 0.0)
    return x, w


@dataclass(frozen=True, eq=False)
class RadialRule:
    """
    Composite rule in t = |z|^2.

    ``s`` holds 1 - t computed without cancellation; ``panel`` is the panel
    of every node and ``outputs`` the panel count up to each requested
    radius, so ``integrate`` returns cumulative integrals.
    """
    t: np.ndarray
    s: np.ndarray
    w: np.ndarray
    panel: np.ndarray
    outputs: np.ndarray

    def integrate(self, values: np.ndarray) -> np.ndarray:
        values = np.asarray(values)
        n_panels = int(self.panel[-1]) + 1 if self.panel.size else 0
        weighted = values * self.w
        if np.iscomplexobj(weighted):
            sums = (np.bincount(self.panel, weights=weighted.real, minlength=n_panels) +
                    1j * np.bincount(self.panel, weights=weighted.imag, minlength=n_panels))
        else:
            sums = np.bincount(self.panel, weights=weighted, minlength=n_panels)
        cumulative = np.concatenate([[0.0], np.cumsum(sums)])
        return cumulative[self.outputs]


def _one_minus_square(rho: float) -> float:
    return (1.0 - rho) * (1.0 + rho)


def _breakpoints_s(ends_s: Sequence[float]) -> np.ndarray:
    """Descending s-breakpoints: 1, the dyadic grading 2^-j, and every requested end"""
    s_min = min(ends_s)
    points = [1.0]
    j = 1
    while 2.0 ** (-j) > s_min:
        points.append(2.0 ** (-j))
        j += 1
    points.extend(ends_s)
    points = np.unique(np.asarray(points, dtype=float))[::-1]
    keep = [points[0]]
    for value in points[1:]:
        if keep[-1] - value > 1e-13 * keep[-1]:
            keep.append(value)
    return np.asarray(keep)


def radial_rule(rho_schedule: Sequence[float], nodes: int = Config.RADIAL_NODES) -> RadialRule:
    """
    Graded Gauss-Legendre rule on [0, rho_max^2] in t = |z|^2.

    The first panel uses t = b y^2 so odd powers of |z| integrate exactly.
    Every schedule radius is a breakpoint, making the cumulative values exact
    truncations rather than interpolations.
    """
    schedule = validate_schedule(rho_schedule)
    ends_s = [_one_minus_square(rho) for rho in schedule]
    breaks = _breakpoints_s(ends_s)
    x, wx = gauss_legendre(nodes)
    y = 0.5 * (x + 1.0)

    t_parts, s_parts, w_parts, p_parts = [], [], [], []
    for k in range(len(breaks) - 1):
        sa, sb = breaks[k], breaks[k + 1]
        width = sa - sb
        if k == 0:
            # t = width * y^2, dt = 2 width y dy
            t = width * y * y
            s = 1.0 - t
            w = wx * width * y
        else:
            s = sa - width * y
            t = 1.0 - s
            w = 0.5 * width * wx
        t_parts.append(t)
        s_parts.append(s)
        w_parts.append(w)
        p_parts.append(np.full(nodes, k, dtype=int))

    outputs = np.asarray([int(np.argmin(np.abs(breaks - e))) for e in ends_s], dtype=int)
    return RadialRule(t=np.concatenate(t_parts), s=np.concatenate(s_parts), w=np.concatenate(w_parts),
                      panel=np.concatenate(p_parts), outputs=outputs)


def jacobi_end_rule(a: float, levels: int, nodes: int = Config.RADIAL_NODES) -> RadialRule:
    """
    Rule for int_0^1 (1 - t)^a h(t) dt reaching t = 1.

    Legendre panels up to 1 - 2^-levels carry the weight (1 - t)^a in their
    weights; the last panel is Gauss-Jacobi so the endpoint singularity of
    the weight is integrated exactly.
    """
    if a <= -1.0:
        raise ConstraintError(f"Jacobi end rule needs a > -1, got {a}")
    s_end = 2.0 ** (-levels)
    base = radial_rule([math.sqrt(1.0 - s_end)], nodes)
    xj, wj = gauss_jacobi(nodes, float(a))
    s_tail = 0.5 * s_end * (1.0 - xj)
    w_tail = wj * (0.5 * s_end) ** (a + 1.0)
    last = int(base.panel[-1]) + 1
    return RadialRule(
        t=np.concatenate([base.t, 1.0 - s_tail]),
        s=np.concatenate([base.s, s_tail]),
        w=np.concatenate([base.w * base.s ** a, w_tail]),
        panel=np.concatenate([base.panel, np.full(nodes, last, dtype=int)]),
        outputs=np.asarray([last + 1]),
    )


def radial_integral(func: Callable[[np.ndarray, np.ndarray], np.ndarray], rho_schedule: Sequence[float],
                    nodes: int = Config.RADIAL_NODES) -> np.ndarray:
    """Cumulative int_0^{rho^2} func(t, 1 - t) dt for every rho of the schedule"""
    rule = radial_rule(rho_schedule, nodes)
    return rule.integrate(func(rule.t, rule.s))


# ----------------------------------------------------------------------
# Angular rule
# ----------------------------------------------------------------------
def _next_pow2(n: float) -> int:
    return 1 << max(2, int(math.ceil(math.log2(max(n, 4)))))


def _sidi(u: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """psi(psi(u)) with psi(u) = u - sin u and its derivative"""
    p1 = u - np.sin(u)
    d1 = 1.0 - np.cos(u)
    p2 = p1 - np.sin(p1)
    d2 = (1.0 - np.cos(p1)) * d1
    return p2, d2


@lru_cache(maxsize=256)
def angular_nodes(count: int, focus: Tuple[float, ...] = ()) -> Tuple[np.ndarray, np.ndarray]:
    """
    Angles and mean-weights of the periodic trapezoid rule.

    Without focus the rule is uniform with theta = 0 included. With focus
    angles, every arc between consecutive focus angles gets ``count`` nodes
    clustered at both ends by the iterated map u - sin u. Taking every other
    node (weights doubled) gives the nested coarse rule in both cases.
    """
    if not focus:
        theta = 2.0 * np.pi * np.arange(count) / count
        return theta, np.full(count, 1.0 / count)

    starts = np.sort(np.mod(np.asarray(focus, dtype=float), 2.0 * np.pi))
    lengths = np.diff(np.concatenate([starts, [starts[0] + 2.0 * np.pi]]))
    u = 2.0 * np.pi * np.arange(count) / count
    p2, d2 = _sidi(u)
    thetas, weights = [], []
    for start, length in zip(starts, lengths):
        if length <= 0.0:
            continue
        thetas.append(start + length * p2 / (2.0 * np.pi))
        weights.append(length * d2 / (2.0 * np.pi * count))
    return np.concatenate(thetas), np.concatenate(weights)


def _evaluate(f: Callable, points: np.ndarray) -> np.ndarray:
    values = np.asarray(f(points))
    if values.shape != points.shape:
        values = np.broadcast_to(values, points.shape)
    if not np.all(np.isfinite(values)):
        raise QuadratureError("Integrand returned non-finite values")
    return values


def angular_means(f: Callable, radii: np.ndarray, counts: np.ndarray, tol: float, max_nodes: int,
                  focus: Tuple[float, ...] = ()):
    """
    Adaptive angular means of f on the circles |z| = radii.

    Each circle starts at its own power-of-two node count and doubles until
    the nested estimate |I_M - I_{M/2}| <= tol * mean|f| or the cap is hit.

    Returns:
        (means, abs_means, error estimates) per circle
    """
    n = len(radii)
    means = np.zeros(n, dtype=complex)
    abs_means = np.zeros(n)
    errors = np.zeros(n)
    counts = np.asarray(counts, dtype=int).copy()
    pending = np.ones(n, dtype=bool)

    while np.any(pending):
        for count in np.unique(counts[pending]):
            theta, weights = angular_nodes(int(count), focus)
            rows = np.nonzero(pending & (counts == count))[0]
            block = max(1, _BLOCK_POINTS // len(theta))
            for start in range(0, len(rows), block):
                sel = rows[start:start + block]
                vals = _evaluate(f, radii[sel, None] * np.exp(1j * theta)[None, :])
                fine = vals @ weights
                coarse = vals[:, ::2] @ (2.0 * weights[::2])
                mags = np.abs(vals) @ weights
                diff = np.abs(fine - coarse)
                means[sel] = fine
                abs_means[sel] = mags
                errors[sel] = diff
                done = (diff <= tol * mags) | (count >= max_nodes)
                pending[sel[done]] = False
                counts[sel[~done]] = min(2 * int(count), max_nodes)
    return means, abs_means, errors


def _initial_counts(r: np.ndarray, base: int, peak: float, max_nodes: int) -> np.ndarray:
    """Trapezoid start size from the gap 1 - r * peak to the nearest singularity"""
    if peak <= 0.0:
        return np.full(len(r), base, dtype=int)
    gap = np.maximum(1.0 - r * peak, 1e-300)
    wanted = 2.0 * np.ceil(Config.ANGULAR_DECAY / gap)
    counts = np.asarray([_next_pow2(v) for v in np.minimum(wanted, max_nodes)], dtype=int)
    return np.clip(np.maximum(counts, base), base, max_nodes)


# ----------------------------------------------------------------------
# Disk integrals
# ----------------------------------------------------------------------
def integrate_disk_resolved(f: Callable, rho_schedule: Sequence[float], weight: WeightLike = None,
                            scheme: Optional[QuadratureScheme] = None, peak: float = 0.0,
                            focus: Sequence[float] = ()) -> Tuple[np.ndarray, int]:
    """
    Cumulative weighted integrals of f over {|z| <= rho} for every rho,
    with the number of leading radii covered by an angular error estimate
    within tolerance.

    Near a boundary singularity the integrand cannot be evaluated to better
    than the rounding of 1 - |z|, so the outer radii of long schedules may
    stay unresolved while the inner ones are accurate.

    Args:
        f: Vectorized integrand on complex arrays
        rho_schedule: Increasing truncation radii
        weight: None, 'invariant', an alpha value or a DiskWeight
        scheme: Node counts and tolerance; its rho is ignored here
        peak: Modulus of the nearest integrand singularity seen from the
            origin divided into 1 (e.g. |w| for kernels 1/(1 - z conj(w)))
        focus: Boundary directions where f is singular

    Returns:
        (values per radius, count of resolved leading radii)
    """
    scheme = scheme or QuadratureScheme()
    w = as_weight(weight)
    rule = radial_rule(rho_schedule, scheme.radial_nodes)
    r = np.sqrt(rule.t)
    counts = _initial_counts(r, scheme.angular_nodes, float(peak), scheme.max_angular_nodes)
    means, abs_means, errors = angular_means(f, r, counts, scheme.tol, scheme.max_angular_nodes,
                                             tuple(float(a) for a in focus))
    factor = np.abs(w(rule.s))
    values = rule.integrate(means * w(rule.s))
    totals = rule.integrate(factor * abs_means)
    estimates = rule.integrate(factor * errors)
    ok = (estimates <= scheme.tol * totals) | (estimates <= 1e-300)
    # the cumulative check at a radius certifies every value up to it
    resolved = int(np.nonzero(ok)[0][-1]) + 1 if np.any(ok) else 0
    logger.debug(f"Disk quadrature: {len(r)} radial nodes, max {int(np.max(counts))} angles, "
                 f"estimate {float(estimates[-1]):.2e}, {resolved}/{len(ok)} radii resolved")
    return values, resolved


def integrate_disk_schedule(f: Callable, rho_schedule: Sequence[float], weight: WeightLike = None,
                            scheme: Optional[QuadratureScheme] = None, peak: float = 0.0,
                            focus: Sequence[float] = ()) -> np.ndarray:
    """
    Cumulative weighted integrals of f over {|z| <= rho} for every rho.

    Arguments as for integrate_disk_resolved.

    Raises:
        QuadratureError: if the angular error estimate exceeds tol * int|f|
            at the outermost radius of the schedule
    """
    values, resolved = integrate_disk_resolved(f, rho_schedule, weight, scheme, peak, focus)
    if resolved < len(values):
        raise QuadratureError("Angular refinement did not reach the tolerance",
                              value=complex(values[-1]))
    return values


def integrate_disk(f: Callable, weight: WeightLike = None, scheme: Optional[QuadratureScheme] = None,
                   peak: float = 0.0, focus: Sequence[float] = ()) -> complex:
    """
    Weighted integral of f over {|z| <= scheme.rho} against normalized area.

    With weight alpha the (alpha + 1) normalization is included, so the
    constant 1 integrates to 1 - (1 - rho^2)^(alpha + 1).
    """
    scheme = scheme or QuadratureScheme()
    return complex(integrate_disk_schedule(f, [scheme.rho], weight, scheme, peak, focus)[-1])


# ----------------------------------------------------------------------
# Pseudo-hyperbolic disks
# ----------------------------------------------------------------------
def _disk_rule(radial: int, angles: int):
    x, wx = gauss_legendre(radial)
    u = 0.5 * (x + 1.0)
    # weight 2u du on [0, 1] sums to one
    wu = wx * u
    theta = 2.0 * np.pi * np.arange(angles) / angles
    return u, wu, theta


def _disk_values(f: Callable, centers: np.ndarray, radii: np.ndarray, anchors: np.ndarray,
                 radial: int, angles: int):
    """
    Polar product rule about an anchor point inside each disk.

    Rays from the anchor a leave the disk at distance
    rho(phi) = -b + sqrt(b^2 + R^2 - |a - c|^2) with b = Re((a - c) e^{-i phi}),
    and int_D f dA = mean_phi rho(phi)^2 int_0^1 f(a + rho u e^{i phi}) 2u du.
    """
    u, wu, theta = _disk_rule(radial, angles)
    e = np.exp(1j * theta)
    d = anchors - centers
    b = (d[:, None] * np.conj(e)[None, :]).real
    reach = -b + np.sqrt(np.maximum(b * b + (radii ** 2 - np.abs(d) ** 2)[:, None], 0.0))
    points = anchors[:, None, None] + reach[:, None, :] * u[None, :, None] * e[None, None, :]
    vals = _evaluate(f, points)
    scale = reach ** 2 / angles
    value = np.einsum('nua,u,na->n', vals, wu, scale)
    magnitude = np.einsum('nua,u,na->n', np.abs(vals), wu, scale)
    return value, magnitude


def _anchors(centers: np.ndarray, radii: np.ndarray, kinks: Sequence[complex]) -> np.ndarray:
    """Centers, replaced by a kink point wherever one lies strictly inside the disk"""
    anchors = centers.copy()
    for kink in kinks:
        inside = np.abs(centers - kink) < radii
        anchors[inside & (anchors == centers)] = kink
    return anchors


def integrate_pseudo_disks(f: Callable, centers, radii, scheme: Optional[QuadratureScheme] = None,
                           kinks: Sequence[complex] = ()) -> np.ndarray:
    """
    Batched integrals of f over Euclidean disks against normalized area.

    A coarse and a fine product rule are compared; disks whose difference
    exceeds tol * int|f| are recomputed at doubled resolution, at most
    Config.PSEUDO_DISK_REFINEMENTS times. Disks containing one of ``kinks``
    (points where f is continuous but not smooth) use polar coordinates about
    that point, so the kink sits at the origin of every ray.
    """
    scheme = scheme or QuadratureScheme()
    centers = np.atleast_1d(np.asarray(centers, dtype=complex))
    radii = np.atleast_1d(np.asarray(radii, dtype=float))
    anchors = _anchors(centers, radii, tuple(complex(k) for k in kinks))
    result = np.zeros(len(centers), dtype=complex)
    radial, angles = Config.PSEUDO_DISK_NODES, Config.PSEUDO_DISK_ANGLES
    block = max(1, _BLOCK_POINTS // (4 * radial * angles))

    for start in range(0, len(centers), block):
        c = centers[start:start + block]
        rad = radii[start:start + block]
        a = anchors[start:start + block]
        pending = np.arange(len(c))
        coarse, _ = _disk_values(f, c, rad, a, radial, angles)
        level_radial, level_angles = 2 * radial, 2 * angles
        for attempt in range(Config.PSEUDO_DISK_REFINEMENTS + 1):
            fine, mags = _disk_values(f, c[pending], rad[pending], a[pending], level_radial, level_angles)
            diff = np.abs(fine - coarse)
            result[start + pending] = fine
            ok = diff <= scheme.tol * np.maximum(mags, 1e-300)
            if np.all(ok):
                break
            if attempt == Config.PSEUDO_DISK_REFINEMENTS:
                worst = int(np.argmax(diff))
                raise QuadratureError(
                    f"Pseudo-disk rule did not converge for the disk centered at {c[pending][worst]}",
                    estimate=float(diff[worst]), value=complex(fine[worst]))
            pending = pending[~ok]
            coarse = fine[~ok]
            level_radial, level_angles = 2 * level_radial, 2 * level_angles
    return result


def integrate_pseudo_disk(f: Callable, disk, scheme: Optional[QuadratureScheme] = None) -> complex:
    """Integral of f over the Euclidean realization ``disk`` of a pseudo-hyperbolic disk"""
    return complex(integrate_pseudo_disks(f, [disk.center], [disk.radius], scheme)[0])


# ----------------------------------------------------------------------
# Moments
# ----------------------------------------------------------------------
def _check_moment_args(k: int, N: int):
    if int(k) != k or int(N) != N or k < 0 or N < 0:
        raise ConstraintError(f"moment needs non-negative integers, got k={k}, N={N}")


def moment_exact(k: int, N: int) -> Fraction:
    """int |w|^{2k} (1 - |w|^2)^N dA = k! N! / (k + N + 1)! as a Fraction"""
    _check_moment_args(k, N)
    return Fraction(math.factorial(int(k)) * math.factorial(int(N)), math.factorial(int(k) + int(N) + 1))


def moment(k: int, N: int) -> float:
    """Float value of the radial moment; large orders go through lgamma"""
    _check_moment_args(k, N)
    k, N = int(k), int(N)
    if k + N > 170:
        return math.exp(math.lgamma(k + 1) + math.lgamma(N + 1) - math.lgamma(k + N + 2))
    return float(moment_exact(k, N))


# ----------------------------------------------------------------------
# Plane integrals
# ----------------------------------------------------------------------
def plane_radial_rule(alpha: float, R_schedule: Sequence[float], nodes: int = Config.FOCK_RADIAL_NODES):
    """
    Panels in u = alpha |w|^2 on [0, 1], [1, 2], [2, 4], ... up to alpha R^2.

    Returns:
        (u, weights in du, panel ids, output panel counts)
    """
    ends = sorted(float(alpha) * float(R) ** 2 for R in R_schedule)
    points = [0.0, 1.0]
    while points[-1] < ends[-1]:
        points.append(2.0 * points[-1])
    points = np.unique(np.asarray([p for p in points if p < ends[-1]] + ends))
    x, wx = gauss_legendre(nodes)
    u_parts, w_parts, p_parts = [], [], []
    for k in range(len(points) - 1):
        a, b = points[k], points[k + 1]
        u_parts.append(a + 0.5 * (b - a) * (x + 1.0))
        w_parts.append(0.5 * (b - a) * wx)
        p_parts.append(np.full(nodes, k, dtype=int))
    outputs = np.asarray([int(np.searchsorted(points, e)) for e in ends], dtype=int)
    return np.concatenate(u_parts), np.concatenate(w_parts), np.concatenate(p_parts), outputs


def integrate_plane_schedule(f: Callable, alpha: float, R_schedule: Sequence[float],
                             radial_nodes: int = Config.FOCK_RADIAL_NODES,
                             angular_nodes: int = Config.FOCK_ANGULAR_NODES,
                             tol: float = Config.QUAD_TOL,
                             max_angular_nodes: int = Config.MAX_ANGULAR_NODES) -> np.ndarray:
    """
    Cumulative int_{|w| <= R} f dv (Lebesgue area) for every R of the schedule.

    dv = (pi / alpha) du dtheta / (2 pi) under u = alpha |w|^2.
    """
    u, wu, panel, outputs = plane_radial_rule(alpha, R_schedule, radial_nodes)
    r = np.sqrt(u / alpha)
    counts = np.full(len(u), int(angular_nodes), dtype=int)
    means, abs_means, errors = angular_means(f, r, counts, tol, max_angular_nodes)
    estimate = float(np.sum(wu * errors))
    total_abs = float(np.sum(wu * abs_means))
    if estimate > tol * total_abs and estimate > 1e-300:
        raise QuadratureError("Plane angular refinement did not reach the tolerance", estimate=estimate)
    rule = RadialRule(t=u, s=u, w=wu * np.pi / alpha, panel=panel, outputs=outputs)
    return rule.integrate(means)

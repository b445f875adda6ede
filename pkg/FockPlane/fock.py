"""
Fock-space tools on C: Gaussian-weighted norms, the exponential-kernel
synthesis, the reproducing identity, Euclidean lattices and localized
functions of plane measures.

Kernel values e^{alpha z conj(w)} overflow long before the Gaussian factors
bring them back down, so magnitudes are combined as logarithms wherever a
sum of exponentials appears.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import numpy as np
from DiskRep.config import Config
from DiskRep.errors import ConstraintError, DomainError, TruncationError
from DiskQuadrature.quadrature import integrate_plane_schedule, integrate_pseudo_disks, plane_radial_rule
from MeasureModel.convergence import SeminormReport, make_report
from SpaceMembership.functions import HolomorphicFunction, Monomial, PolynomialFunction, as_holomorphic
from .plane_measure import PlaneMeasure, default_radius

logger = logging.getLogger(__name__)

# Atom sums are evaluated in blocks of at most this many kernel values
_BLOCK_VALUES = 1 << 22
MAX_REPRODUCE_DEGREE = 8


def _check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not alpha > 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return alpha


def default_R_schedule(alpha: float) -> Tuple[float, ...]:
    """Config.FOCK_R_SCHEDULE in units of 1 / sqrt(alpha)"""
    return tuple(R / math.sqrt(alpha) for R in Config.FOCK_R_SCHEDULE)


# ----------------------------------------------------------------------
# Norms
# ----------------------------------------------------------------------
def _shell_probes(R_max: float, count: int) -> Tuple[np.ndarray, np.ndarray]:
    radii = np.linspace(0.0, R_max, count)
    theta = 2.0 * np.pi * np.arange(Config.SHELL_ANGLES) / Config.SHELL_ANGLES
    return radii, radii[:, None] * np.exp(1j * theta)[None, :]


def fock_norm(f: Any, p: float, alpha: float, R_schedule: Optional[Sequence[float]] = None,
              radial_nodes: int = Config.FOCK_RADIAL_NODES,
              angular_nodes: int = Config.FOCK_ANGULAR_NODES) -> SeminormReport:
    """
    Truncated int_{|z| <= R} |f(z) e^{-alpha |z|^2 / 2}|^p dv(z) per R.

    p = inf reports the running sup over probe shells instead. The integrand
    is exp(p (log|f| - alpha |z|^2 / 2)), using f.log_abs so entire
    functions of high order never overflow.
    """
    alpha = _check_alpha(alpha)
    p = float(p)
    if not p > 0.0:
        raise DomainError(f"Fock exponent must be positive, got {p}")
    f = as_holomorphic(f)
    schedule = sorted(float(R) for R in (R_schedule or default_R_schedule(alpha)))

    def log_weighted(z):
        with np.errstate(divide='ignore'):
            return f.log_abs(z) - 0.5 * alpha * np.abs(z) ** 2

    if math.isinf(p):
        radii, points = _shell_probes(schedule[-1], Config.SHELLS_PER_STEP * 8 * len(schedule))
        shell_max = np.exp(np.max(log_weighted(points), axis=1))
        values = [float(np.max(shell_max[radii <= R + 1e-12])) for R in schedule]
    else:
        values = integrate_plane_schedule(lambda z: np.exp(p * log_weighted(z)), alpha, schedule,
                                          radial_nodes=radial_nodes, angular_nodes=angular_nodes).real
    return make_report(values, schedule, 'fock', label=f"{f.name}, p={p:g}, alpha={alpha:g}",
                       x=schedule, x_label='R', p=p, alpha=alpha)


# ----------------------------------------------------------------------
# Synthesis
# ----------------------------------------------------------------------
class FockFunction(HolomorphicFunction):
    """
    f(z) = int e^{alpha z conj(w) - alpha |w|^2 / 2} dmu(w) for a plane measure.

    Separable densities e^{i m theta} q(|w|^2) reduce to c z^m with
    c = pi alpha^m / m! int_0^{R^2} t^{m/2} e^{-alpha t / 2} q(t) dt.
    """

    def __init__(self, measure: PlaneMeasure, alpha: float, tol: float = Config.FOCK_TAIL_TOL):
        self.logger = logging.getLogger(self.__class__.__name__)
        if not isinstance(measure, PlaneMeasure):
            raise ConstraintError(f"Fock synthesis needs a PlaneMeasure, got {type(measure).__name__}")
        self.measure = measure
        self.alpha = _check_alpha(alpha)
        self.tol = float(tol)
        self.terms: List[Tuple[int, complex]] = []
        self._quadrature_densities = []
        for density in measure.densities:
            if density.angular_order is None or density.angular_order < 0:
                self._quadrature_densities.append(density)
            else:
                self.terms.append(self._separable_term(density))
        if self._quadrature_densities:
            self._check_quadrature_tail()
        self.name = f"fock[{measure.describe()}]"

    def _separable_term(self, density) -> Tuple[int, complex]:
        m = density.angular_order
        R = self.measure.R
        u, wu, panel, outputs = plane_radial_rule(self.alpha, [R, 2.0 * R])
        t = u / self.alpha
        integrand = t ** (0.5 * m) * np.exp(-0.5 * self.alpha * t) * density.profile(t)
        sums = np.bincount(panel, weights=(wu * integrand).real) + 1j * np.bincount(panel, weights=(wu * integrand).imag)
        cumulative = np.concatenate([[0.0], np.cumsum(sums)])[outputs] / self.alpha
        scale = math.pi * self.alpha ** m / math.factorial(m)
        inner, outer = scale * cumulative[0], scale * cumulative[1]
        self._check_tail(abs(outer - inner), abs(outer), f"density {density!r}")
        return m, complex(inner)

    def _check_quadrature_tail(self):
        R = self.measure.R
        values = integrate_plane_schedule(
            lambda w: np.exp(-0.5 * self.alpha * np.abs(w) ** 2) *
            np.abs(sum(d(w) for d in self._quadrature_densities)),
            self.alpha, [R, 2.0 * R]).real
        self._check_tail(values[1] - values[0], values[1], "non-separable densities")

    def _check_tail(self, tail: float, total: float, what: str):
        if tail > self.tol * max(total, Config.CONVERGENCE_FLOOR):
            raise TruncationError(
                f"Truncation at R={self.measure.R:g} leaves a tail {tail:.3e} for {what}; increase R", tail=tail)

    def _log_atom_terms(self, z: np.ndarray, k: int):
        """Complex exponents and log-coefficients of the atom terms of f^(k)"""
        a = self.measure.locations
        exponent = self.alpha * z[:, None] * np.conj(a)[None, :] - 0.5 * self.alpha * np.abs(a)[None, :] ** 2
        coeff = self.measure.weights * (self.alpha * np.conj(a)) ** k
        return exponent, coeff

    def _atoms(self, z: np.ndarray, k: int) -> np.ndarray:
        flat = z.ravel()
        out = np.zeros(flat.shape, dtype=complex)
        if not self.measure.atom_count:
            return out.reshape(z.shape)
        block = max(1, _BLOCK_VALUES // self.measure.atom_count)
        for start in range(0, len(flat), block):
            exponent, coeff = self._log_atom_terms(flat[start:start + block], k)
            out[start:start + block] = np.exp(exponent) @ coeff
        return out.reshape(z.shape)

    def _quadrature(self, z: np.ndarray, k: int) -> np.ndarray:
        flat = z.ravel()
        out = np.zeros(flat.shape, dtype=complex)
        for i, zi in enumerate(flat):
            def integrand(w, zi=zi):
                wc = np.conj(w)
                kernel = (self.alpha * wc) ** k * np.exp(self.alpha * zi * wc - 0.5 * self.alpha * np.abs(w) ** 2)
                return kernel * sum(d(w) for d in self._quadrature_densities)
            out[i] = integrate_plane_schedule(integrand, self.alpha, [self.measure.R])[-1]
        return out.reshape(z.shape)

    def derivative(self, k: int, z):
        if int(k) != k or k < 0:
            raise ValueError(f"Derivative order must be a non-negative integer, got {k}")
        k = int(k)
        z = np.asarray(z, dtype=complex)
        total = self._atoms(z, k)
        for n, c in self.terms:
            if n >= k:
                total = total + c * (math.factorial(n) / math.factorial(n - k)) * z ** (n - k)
        if self._quadrature_densities:
            total = total + self._quadrature(z, k)
        return total

    def __call__(self, z):
        return self.derivative(0, z)

    def log_abs(self, z):
        """log|f| with the largest atom exponent factored out of the sum"""
        z = np.asarray(z, dtype=complex)
        if self.terms or self._quadrature_densities or not self.measure.atom_count:
            with np.errstate(divide='ignore'):
                return np.log(np.abs(self(z)))
        flat = z.ravel()
        exponent, coeff = self._log_atom_terms(flat, 0)
        nonzero = coeff != 0
        if not np.any(nonzero):
            return np.full(z.shape, -np.inf)
        exponent = exponent[:, nonzero]
        shift = np.max(exponent.real, axis=1, keepdims=True)
        scaled = np.exp(exponent - shift) @ coeff[nonzero]
        with np.errstate(divide='ignore'):
            return (shift[:, 0] + np.log(np.abs(scaled))).reshape(z.shape)

    def to_dict(self) -> Dict[str, Any]:
        return {'kernel': 'fock', 'params': {'alpha': self.alpha}, 'measure': self.measure.to_dict()}


def synth_fock(mu: PlaneMeasure, alpha: float, tol: float = Config.FOCK_TAIL_TOL) -> FockFunction:
    """
    Entire function int e^{alpha z conj(w) - alpha |w|^2 / 2} dmu(w).

    Raises:
        TruncationError: when the density mass beyond mu.R exceeds tol of the total
    """
    return FockFunction(mu, alpha, tol)


# ----------------------------------------------------------------------
# Reproducing identity
# ----------------------------------------------------------------------
@dataclass
class ReproduceResult:
    """max |f(z) - int e^{alpha z conj(w)} f(w) dlambda_alpha(w)| over probes"""
    residual: float
    probes: int
    degree: int
    alpha: float
    R: float

    def to_dict(self) -> Dict[str, Any]:
        return {'residual': self.residual, 'probes': self.probes, 'degree': self.degree,
                'alpha': self.alpha, 'R': self.R}


def _as_polynomial(f: Any) -> PolynomialFunction:
    if isinstance(f, Monomial):
        coefficients = np.zeros(f.m + 1, dtype=complex)
        coefficients[-1] = f.c
        return PolynomialFunction(coefficients)
    if isinstance(f, (list, tuple, np.ndarray)):
        return PolynomialFunction(f)
    f = as_holomorphic(f)
    if not isinstance(f, PolynomialFunction):
        raise ConstraintError(f"The reproducing check needs a polynomial, got {f!r}")
    return f


def reproduce_probes(alpha: float) -> np.ndarray:
    """Origin plus 8 points on each of the circles |z| = (0.5, 1, 2) / sqrt(alpha)"""
    theta = 2.0 * np.pi * np.arange(8) / 8
    rings = [r / math.sqrt(alpha) * np.exp(1j * theta) for r in (0.5, 1.0, 2.0)]
    return np.concatenate([[0.0 + 0.0j]] + rings)


def fock_reproduce_check(f: Any, alpha: float, R: Optional[float] = None,
                         probes: Optional[Sequence[complex]] = None) -> ReproduceResult:
    """Residual of the reproducing identity for a polynomial of degree <= 8, by direct plane quadrature"""
    alpha = _check_alpha(alpha)
    poly = _as_polynomial(f)
    degree = int(poly.poly.degree())
    if degree > MAX_REPRODUCE_DEGREE:
        raise ConstraintError(f"Polynomial degree {degree} exceeds {MAX_REPRODUCE_DEGREE}")
    R = float(R) if R is not None else default_radius(alpha)
    z = np.asarray(probes if probes is not None else reproduce_probes(alpha), dtype=complex).ravel()

    residuals = np.zeros(len(z))
    for i, zi in enumerate(z):
        def integrand(w, zi=zi):
            return np.exp(alpha * zi * np.conj(w) - alpha * np.abs(w) ** 2) * poly(w) * (alpha / np.pi)
        value = integrate_plane_schedule(integrand, alpha, [R])[-1]
        residuals[i] = abs(poly(zi) - value)
    result = ReproduceResult(residual=float(np.max(residuals)), probes=len(z), degree=degree, alpha=alpha, R=R)
    logger.debug(f"Reproducing check deg={degree} alpha={alpha:g} R={R:g}: residual {result.residual:.3e}")
    return result


# ----------------------------------------------------------------------
# Lattices and atomic measures
# ----------------------------------------------------------------------
@dataclass(frozen=True, eq=False)
class PlaneLattice:
    """Square grid d (j + i k) restricted to |z| <= extent"""
    spacing: float
    extent: float

    def __post_init__(self):
        if not self.spacing > 0.0:
            raise DomainError(f"Lattice spacing must be positive, got {self.spacing}")
        if not self.extent > 0.0:
            raise DomainError(f"Lattice extent must be positive, got {self.extent}")

    @property
    def centers(self) -> np.ndarray:
        n = int(math.floor(self.extent / self.spacing))
        grid = self.spacing * np.arange(-n, n + 1)
        points = (grid[:, None] + 1j * grid[None, :]).ravel()
        points = points[np.abs(points) <= self.extent + 1e-12]
        return points[np.lexsort((np.angle(points), np.abs(points)))]

    def __len__(self) -> int:
        return len(self.centers)

    @property
    def covering_radius(self) -> float:
        return self.spacing / math.sqrt(2.0)

    def covers(self, R: float) -> bool:
        """Every |z| <= R lies within the covering radius of some center"""
        return R + self.covering_radius <= self.extent

    def to_dict(self) -> Dict[str, Any]:
        return {'spacing': self.spacing, 'extent': self.extent,
                'centers': [[float(c.real), float(c.imag)] for c in self.centers]}


def plane_lattice(alpha: float, extent: float, spacing: Optional[float] = None) -> PlaneLattice:
    """Square lattice with spacing 1 / sqrt(alpha) unless given"""
    alpha = _check_alpha(alpha)
    return PlaneLattice(spacing=float(spacing) if spacing is not None else 1.0 / math.sqrt(alpha),
                        extent=float(extent))


def fock_atomic_measure(lattice: PlaneLattice, coeffs: Sequence[complex], R: Optional[float] = None) -> PlaneMeasure:
    """Atoms c_n at the lattice centers"""
    centers = lattice.centers
    coeffs = np.asarray(coeffs, dtype=complex).ravel()
    if len(coeffs) != len(centers):
        raise ConstraintError(f"{len(coeffs)} coefficients for {len(centers)} lattice centers")
    return PlaneMeasure(locations=centers, weights=coeffs,
                        R=R if R is not None else max(Config.FOCK_DEFAULT_R, lattice.extent))


def weyl_shift(mu: PlaneMeasure, b: complex, alpha: float) -> PlaneMeasure:
    """
    Translate atoms a -> a + b with weights multiplied by e^{i alpha Im(a conj(b))}.

    The synthesis then satisfies f_shifted(z) = e^{alpha z conj(b) - alpha |b|^2 / 2} f(z - b).
    """
    alpha = _check_alpha(alpha)
    if mu.densities:
        raise ConstraintError("Translation is implemented for atomic plane measures")
    b = complex(b)
    a = mu.locations
    phase = np.exp(1j * alpha * np.imag(a * np.conj(b)))
    return mu._like(locations=a + b, weights=mu.weights * phase)


# ----------------------------------------------------------------------
# Localized function
# ----------------------------------------------------------------------
def lens_area(d: Any, r: float, R: float) -> np.ndarray:
    """Area of {|z| <= R} intersected with the disk of radius r centered at distance d"""
    d = np.abs(np.asarray(d, dtype=float))
    out = np.zeros(d.shape)
    inside = d + r <= R
    covers = d + R <= r
    partial = ~inside & ~covers & (d < R + r)
    out[inside] = np.pi * r * r
    out[covers] = np.pi * R * R
    dp = d[partial]
    a1 = np.clip((dp * dp + r * r - R * R) / (2.0 * dp * r), -1.0, 1.0)
    a2 = np.clip((dp * dp + R * R - r * r) / (2.0 * dp * R), -1.0, 1.0)
    k = np.sqrt(np.maximum((-dp + r + R) * (dp + r - R) * (dp - r + R) * (dp + r + R), 0.0))
    out[partial] = r * r * np.arccos(a1) + R * R * np.arccos(a2) - 0.5 * k
    return out


def plane_localized(mu: PlaneMeasure, r: float, z: Any) -> np.ndarray:
    """|mu|(D(z, r)) for the Euclidean disk D(z, r)"""
    z = np.asarray(z, dtype=complex)
    flat = z.ravel()
    out = np.zeros(flat.shape)
    if mu.atom_count:
        mags = np.abs(mu.weights)
        block = max(1, _BLOCK_VALUES // mu.atom_count)
        for start in range(0, len(flat), block):
            zb = flat[start:start + block]
            out[start:start + block] = (np.abs(zb[:, None] - mu.locations[None, :]) < r) @ mags
    if mu.densities:
        if mu.variation_radial:
            radii, inverse = np.unique(np.abs(flat), return_inverse=True)
            values = integrate_pseudo_disks(mu.abs_density, radii.astype(complex), np.full(len(radii), r),
                                            kinks=mu.kink_points()).real
            out = out + np.pi * values[inverse]
        else:
            out = out + np.pi * integrate_pseudo_disks(mu.abs_density, flat, np.full(len(flat), r),
                                                       kinks=mu.kink_points()).real
    return out.reshape(z.shape)


def _plane_lp1(mu: PlaneMeasure, r: float, schedule: Sequence[float]) -> List[float]:
    """int_{|z| <= R} |mu|(D(z, r)) dv = int lens(|w|, r, R) d|mu|(w)"""
    values = []
    mags = np.abs(mu.weights)
    radii = np.abs(mu.locations)
    for R in schedule:
        total = float(np.sum(mags * lens_area(radii, r, R))) if mu.atom_count else 0.0
        if mu.densities:
            reach = R + r
            if mu.abs_angular_mean(np.asarray([0.25])) is not None:
                u, wu, panel, outputs = plane_radial_rule(1.0, [reach])
                total += float(np.pi * np.sum(wu * lens_area(np.sqrt(u), r, R) * mu.abs_angular_mean(u)))
            else:
                total += float(integrate_plane_schedule(lambda w: lens_area(np.abs(w), r, R) * mu.abs_density(w),
                                                        1.0, [reach])[-1].real)
        values.append(total)
    return values


def fock_localized_lp(mu: PlaneMeasure, r: float, p: float,
                      R_schedule: Optional[Sequence[float]] = None) -> SeminormReport:
    """
    Truncated L^p(dv) norm (p-th power for finite p) of z -> |mu|(D(z, r)) over |z| <= R.

    p = 1 goes through Fubini and tends to pi r^2 |mu|(C). Other finite p
    integrate the localized function on a fixed polar grid; it is
    discontinuous for atoms, so no angular error estimate is enforced.
    """
    r = float(r)
    p = float(p)
    if not r > 0.0:
        raise DomainError(f"Radius must be positive, got {r}")
    if not p > 0.0:
        raise DomainError(f"Exponent must be positive, got {p}")
    schedule = sorted(float(R) for R in (R_schedule or (0.25 * mu.R, 0.375 * mu.R, 0.5 * mu.R, 0.625 * mu.R,
                                                         0.75 * mu.R, 0.875 * mu.R, mu.R)))
    if mu.is_zero:
        values = [0.0] * len(schedule)
    elif p == 1.0:
        values = _plane_lp1(mu, r, schedule)
    elif math.isinf(p):
        radii, points = _shell_probes(schedule[-1], Config.SHELLS_PER_STEP * 8 * len(schedule))
        shell_max = np.max(plane_localized(mu, r, points), axis=1)
        values = [float(np.max(shell_max[radii <= R + 1e-12])) for R in schedule]
    else:
        values = integrate_plane_schedule(lambda z: plane_localized(mu, r, z) ** p, 1.0, schedule,
                                          angular_nodes=512, tol=float('inf')).real
    return make_report(values, schedule, 'fock_localized', label=f"{mu.describe()}, r={r:g}, p={p:g}",
                       x=schedule, x_label='R', r=r, p=p)

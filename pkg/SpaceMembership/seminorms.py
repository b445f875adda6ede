"""
Truncated seminorms of holomorphic functions on the disk.

Integral-type seminorms (Besov, Bergman) are reported as cumulative
quadrature values over a radius schedule; sup-type ones (Lipschitz, Bloch,
plain boundedness) as running maxima over probe shells. Verdicts come from
the shared trend classifier.
"""

import logging
import math
from typing import Any, Callable, Optional, Sequence

import numpy as np

from DiskRep.config import Config, validate_schedule
from DiskRep.errors import ConstraintError, DomainError
from DiskQuadrature.quadrature import DiskWeight, QuadratureScheme, integrate_disk_resolved
from MeasureModel.convergence import SeminormReport, make_report
from MeasureModel.functionals import probe_radii
from MeasureModel.measure import Measure
from .derivatives import radial_derivative
from .forelli_rudin import forelli_rudin_exact
from .functions import HolomorphicFunction, as_holomorphic

logger = logging.getLogger(__name__)


def besov_order(p: float) -> int:
    """Minimal k with p k > 1"""
    return int(math.floor(1.0 / p)) + 1


def lipschitz_order(t: float) -> int:
    """Minimal integer k > t"""
    return int(math.floor(t)) + 1


def bergman_order(p: float, alpha: float) -> int:
    """Minimal k >= 0 with p k + alpha > -1"""
    k = 0
    while p * k + alpha <= -1.0:
        k += 1
    return k


def _checked_order(k: Optional[int], minimal: int, admissible: Callable[[int], bool], what: str) -> int:
    if k is None:
        return minimal
    if int(k) != k or not admissible(int(k)):
        raise ConstraintError(f"Derivative order k={k} is not admissible for {what}")
    return int(k)


def _shell_points(radii: np.ndarray, focus: Sequence[float]) -> np.ndarray:
    theta = 2.0 * np.pi * np.arange(Config.SHELL_ANGLES) / Config.SHELL_ANGLES
    theta = np.concatenate([theta, np.asarray(focus, dtype=float)])
    return (radii[:, None] * np.exp(1j * theta)[None, :])


def _running_shell_sup(values: np.ndarray, radii: np.ndarray, schedule) -> list:
    shell_max = np.max(values, axis=1)
    return [float(np.max(shell_max[radii <= rho + 1e-15], initial=0.0)) for rho in schedule]


def _resolved_prefix(values: np.ndarray, resolved: int, schedule: Sequence[float], label: str):
    """
    Values and radii up to the last radius the quadrature resolved.

    Dropped radii go to the report extras as unresolved_rho.
    """
    schedule = [float(rho) for rho in schedule]
    values = np.asarray(values).real
    if resolved == len(schedule):
        return values, schedule, {}
    if resolved:
        logger.warning(f"{label}: quadrature resolved only up to rho={schedule[resolved - 1]:.12g}, "
                       f"classifying {resolved} of {len(schedule)} radii")
    else:
        logger.warning(f"{label}: quadrature resolved no radius of the schedule")
    return values[:resolved], schedule[:resolved], {'unresolved_rho': schedule[resolved:]}


def besov_seminorm(f: Any, p: float, rho_schedule: Optional[Sequence[float]] = None, k: Optional[int] = None,
                   scheme: Optional[QuadratureScheme] = None) -> SeminormReport:
    """
    Truncated int_{|z| <= rho} |(1 - |z|^2)^k f^(k)(z)|^p dlambda(z).

    k defaults to the minimal order with p k > 1.
    """
    p = float(p)
    if not 0.0 < p < math.inf:
        raise DomainError(f"Besov exponent must lie in (0, inf), got {p}")
    f = as_holomorphic(f)
    k = _checked_order(k, besov_order(p), lambda j: p * j > 1.0, f"B_{p:g}")
    schedule = validate_schedule(rho_schedule or Config.BESOV_SCHEDULE)
    label = f"{f.name}, p={p:g}, k={k}"
    values, resolved = integrate_disk_resolved(lambda z: np.abs(f.derivative(k, z)) ** p, schedule,
                                               weight=DiskWeight.power(p * k - 2.0), scheme=scheme,
                                               peak=f.peak_radius, focus=f.focus())
    values, rho, cut = _resolved_prefix(values, resolved, schedule, f"Besov {label}")
    return make_report(values, rho, 'besov', label=label, p=p, k=k, **cut)


def lipschitz_seminorm(f: Any, t: float, rho_schedule: Optional[Sequence[float]] = None,
                       k: Optional[int] = None) -> SeminormReport:
    """
    Running sup of (1 - |z|^2)^(k - t) |f^(k)(z)| over probe shells up to rho.

    Shells are spaced Config.SHELLS_PER_STEP per schedule step with
    Config.SHELL_ANGLES angles plus the directions of boundary singularities.
    """
    t = float(t)
    if t < 0.0:
        raise DomainError(f"Lipschitz exponent must be >= 0, got {t}")
    f = as_holomorphic(f)
    k = _checked_order(k, lipschitz_order(t), lambda j: j > t, f"Lambda_{t:g}")
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    radii = probe_radii(schedule)
    points = _shell_points(radii, f.focus())
    values = (1.0 - np.abs(points) ** 2) ** (k - t) * np.abs(f.derivative(k, points))
    sups = _running_shell_sup(values, radii, schedule)
    kind = 'bloch' if t == 0.0 else 'lipschitz'
    return make_report(sups, schedule, kind, label=f"{f.name}, t={t:g}, k={k}", t=t, k=k)


def bloch_seminorm(f: Any, rho_schedule: Optional[Sequence[float]] = None) -> SeminormReport:
    """Bloch space as Lambda_0"""
    return lipschitz_seminorm(f, 0.0, rho_schedule)


def bergman_norm(f: Any, p: float, alpha: float, rho_schedule: Optional[Sequence[float]] = None,
                 k: Optional[int] = None, scheme: Optional[QuadratureScheme] = None) -> SeminormReport:
    """
    Truncated int |(1 - |z|^2)^k R^k f|^p dA_alpha with R f = z f'.

    For alpha > -1 the measure is the normalized (alpha + 1)(1 - |z|^2)^alpha dA;
    otherwise the unnormalized power weight, which needs p k + alpha > -1.
    """
    p = float(p)
    alpha = float(alpha)
    if not 0.0 < p < math.inf:
        raise DomainError(f"Bergman exponent must lie in (0, inf), got {p}")
    f = as_holomorphic(f)
    k = _checked_order(k, bergman_order(p, alpha), lambda j: p * j + alpha > -1.0, f"A^{p:g}_{alpha:g}")
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    factor = alpha + 1.0 if alpha > -1.0 else 1.0
    weight = DiskWeight('bergman', alpha + p * k, factor)
    label = f"{f.name}, p={p:g}, alpha={alpha:g}, k={k}"
    values, resolved = integrate_disk_resolved(lambda z: np.abs(radial_derivative(f.derivative, z, k)) ** p,
                                               schedule, weight=weight, scheme=scheme,
                                               peak=f.peak_radius, focus=f.focus())
    values, rho, cut = _resolved_prefix(values, resolved, schedule, f"Bergman {label}")
    return make_report(values, rho, 'bergman', label=label, p=p, alpha=alpha, k=k, **cut)


def boundedness_scan(f: Any, rho_schedule: Optional[Sequence[float]] = None) -> SeminormReport:
    """Running sup |f| over probe shells; CONVERGED means bounded on the schedule"""
    f = as_holomorphic(f)
    schedule = validate_schedule(rho_schedule or Config.DEFAULT_SCHEDULE)
    radii = probe_radii(schedule)
    points = _shell_points(radii, f.focus())
    sups = _running_shell_sup(np.abs(f(points)), radii, schedule)
    return make_report(sups, schedule, 'sup', label=f.name)


def besov_holder_bound(mu: Measure, p: float, k: Optional[int] = None) -> float:
    """
    Termwise bound for the Besov integral of the Moebius synthesis of an
    atomic measure, valid for p <= 1:

        sum_n |k! w_n (1 - |a_n|^2) |a_n|^(k-1)|^p FR(p k - 2, p (k + 1), a_n).
    """
    p = float(p)
    if not 0.0 < p <= 1.0:
        raise DomainError(f"The termwise bound needs 0 < p <= 1, got {p}")
    if mu.densities:
        raise ConstraintError("The termwise bound applies to atomic measures")
    k = _checked_order(k, besov_order(p), lambda j: p * j > 1.0, f"B_{p:g}")
    if not mu.atom_count:
        return 0.0
    a = mu.locations
    coeff = math.factorial(k) * np.abs(mu.weights) * (1.0 - np.abs(a) ** 2) * np.abs(a) ** (k - 1)
    fr = np.asarray(forelli_rudin_exact(p * k - 2.0, p * (k + 1.0), a))
    return float(np.sum(coeff ** p * fr))

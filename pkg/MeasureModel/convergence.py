"""
Finite/infinite trend classification of truncated quantities.

Every truncated seminorm, mass or norm in the toolkit is reported as a
sequence of values over a schedule and classified here, so all modules
share one decision procedure and one set of tolerances.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence

import numpy as np

from DiskRep.config import Config

logger = logging.getLogger(__name__)


class Verdict(str, Enum):
    CONVERGED = 'CONVERGED'
    DIVERGENT = 'DIVERGENT'
    UNDECIDED = 'UNDECIDED'


@dataclass
class TrendFit:
    """Least-squares fit log(value) = exponent * x + intercept over the tail"""
    exponent: float
    intercept: float
    r_squared: float

    def to_dict(self) -> Dict[str, float]:
        return {'exponent': self.exponent, 'intercept': self.intercept, 'r_squared': self.r_squared}


@dataclass
class TrendResult:
    verdict: Verdict
    relative_growth: float
    fit: Optional[TrendFit] = None
    reason: str = ''

    @property
    def growth_exponent(self) -> Optional[float]:
        return None if self.fit is None else self.fit.exponent


@dataclass
class SeminormReport:
    """Truncated values over a schedule together with their verdict"""
    rho: List[float]
    values: List[float]
    verdict: Verdict
    growth_exponent: Optional[float] = None
    fit: Optional[TrendFit] = None
    relative_growth: float = 0.0
    kind: str = ''
    label: str = ''
    x_label: str = 'rho'
    reason: str = ''
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def last(self) -> float:
        return self.values[-1] if self.values else 0.0

    @property
    def converged(self) -> bool:
        return self.verdict == Verdict.CONVERGED

    @property
    def divergent(self) -> bool:
        return self.verdict == Verdict.DIVERGENT

    def rows(self) -> List[Dict[str, Any]]:
        """Flat rows for CSV output"""
        return [{'kind': self.kind, 'label': self.label, self.x_label: x, 'value': v}
                for x, v in zip(self.rho, self.values)]

    def to_dict(self) -> Dict[str, Any]:
        data = {
            'kind': self.kind,
            'label': self.label,
            self.x_label: list(self.rho),
            'values': list(self.values),
            'verdict': self.verdict.value,
            'growth_exponent': self.growth_exponent,
            'relative_growth': self.relative_growth,
            'reason': self.reason,
        }
        if self.fit is not None:
            data['fit'] = self.fit.to_dict()
        if self.extra:
            data['extra'] = dict(self.extra)
        return data


def boundary_coordinate(rho: Sequence[float]) -> np.ndarray:
    """x = log(1 / (1 - rho)), evenly spaced on decade schedules"""
    rho = np.asarray(rho, dtype=float)
    return -np.log1p(-rho)


def _fit_log_growth(x: np.ndarray, v: np.ndarray) -> Optional[TrendFit]:
    mask = v > 0.0
    if np.count_nonzero(mask) < 3:
        return None
    xs, ys = x[mask], np.log(v[mask])
    if np.ptp(xs) == 0.0:
        return None
    slope, intercept = np.polyfit(xs, ys, 1)
    residual = ys - (slope * xs + intercept)
    total = np.sum((ys - ys.mean()) ** 2)
    r2 = 1.0 - float(np.sum(residual ** 2)) / float(total) if total > 0.0 else 0.0
    return TrendFit(exponent=float(slope), intercept=float(intercept), r_squared=r2)


def classify_trend(values: Sequence[float], rho: Optional[Sequence[float]] = None,
                   x: Optional[Sequence[float]] = None,
                   rel_tol: float = Config.CONVERGENCE_REL_TOL,
                   window: int = Config.CONVERGENCE_WINDOW) -> TrendResult:
    """
    Classify a truncated sequence as converging, diverging or undecided.

    CONVERGED when the last ``window`` increments stay below
    rel_tol * |last value|, or when increments shrink geometrically fast
    enough that the extrapolated tail is below the same bound. DIVERGENT on
    non-finite values, on persistently non-decaying slopes per unit of x,
    or on a clean power law in x. Anything else is UNDECIDED.

    Args:
        values: Truncated values in schedule order
        rho: Radii; x defaults to log(1 / (1 - rho))
        x: Explicit abscissa (R for plane norms, log N for partial sums)
    """
    v = np.asarray(values, dtype=float)
    if x is None:
        if rho is None:
            x = np.arange(len(v), dtype=float)
        else:
            x = boundary_coordinate(rho)
    x = np.asarray(x, dtype=float)
    if len(x) != len(v):
        raise ValueError("values and abscissa lengths differ")

    if not np.all(np.isfinite(v)):
        return TrendResult(Verdict.DIVERGENT, float('inf'), reason='non-finite value')
    if len(v) < Config.MIN_TREND_POINTS:
        return TrendResult(Verdict.UNDECIDED, 0.0, reason='too few points')

    inc = np.diff(v)
    scale = max(abs(v[-1]), Config.CONVERGENCE_FLOOR)
    tail = inc[-window:]
    relative_growth = float((v[-1] - v[-1 - window]) / scale)
    fit = _fit_log_growth(x[-(window + 2):], v[-(window + 2):])

    if np.all(np.abs(tail) <= rel_tol * scale):
        return TrendResult(Verdict.CONVERGED, relative_growth, fit, 'increments below tolerance')

    if np.all(tail > 0.0):
        ratios = tail[1:] / tail[:-1]
        q = float(np.max(ratios))
        if q < Config.TAIL_RATIO_MAX and tail[-1] * q / (1.0 - q) <= rel_tol * scale:
            return TrendResult(Verdict.CONVERGED, relative_growth, fit, 'geometric tail below tolerance')

    slopes = inc / np.diff(x)
    tail_slopes = slopes[-window:]
    if (np.all(tail_slopes > rel_tol * scale) and
            np.all(tail_slopes[1:] >= Config.SLOPE_PERSISTENCE * tail_slopes[:-1])):
        return TrendResult(Verdict.DIVERGENT, relative_growth, fit, 'persistent growth per unit x')

    if (fit is not None and fit.exponent > Config.GROWTH_EXPONENT_MIN and
            fit.r_squared >= Config.GROWTH_FIT_R2 and inc[-1] > 0.0):
        return TrendResult(Verdict.DIVERGENT, relative_growth, fit, 'power-law growth')

    return TrendResult(Verdict.UNDECIDED, relative_growth, fit, 'no clear trend')


def make_report(values: Sequence[float], rho: Sequence[float], kind: str, label: str = '',
                x: Optional[Sequence[float]] = None, x_label: str = 'rho', **extra) -> SeminormReport:
    """Classify and package a truncated sequence"""
    values = [float(v) for v in values]
    trend = classify_trend(values, rho=rho, x=x)
    if trend.verdict != Verdict.CONVERGED:
        logger.debug(f"{kind} {label}: {trend.verdict.value} ({trend.reason})")
    return SeminormReport(
        rho=[float(r) for r in rho],
        values=values,
        verdict=trend.verdict,
        growth_exponent=trend.growth_exponent,
        fit=trend.fit,
        relative_growth=trend.relative_growth,
        kind=kind,
        label=label,
        x_label=x_label,
        reason=trend.reason,
        extra=dict(extra),
    )

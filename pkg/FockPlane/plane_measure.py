"""
Measures on the complex plane for the Fock-space constructions.
"""

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Dict, Optional, Sequence

import numpy as np

from DiskRep.config import Config
from DiskRep.errors import DomainError
from DiskQuadrature.quadrature import integrate_plane_schedule, plane_radial_rule
from MeasureModel.convergence import SeminormReport, make_report
from MeasureModel.density_factory import DensityFactory
from MeasureModel.measure import Measure

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PlaneMeasure(Measure):
    """
    Complex measure on C: atoms anywhere in the plane plus densities against
    Lebesgue area dv. Integrals over the densities are truncated at |w| <= R.
    """
    space: str = 'plane'
    R: float = Config.FOCK_DEFAULT_R

    def __post_init__(self):
        if self.space != 'plane':
            raise ValueError(f"PlaneMeasure lives on the plane, got space '{self.space}'")
        if not self.R > 0.0:
            raise DomainError(f"Truncation radius R must be positive, got {self.R}")
        super().__post_init__()
        object.__setattr__(self, 'R', float(self.R))

    @classmethod
    def gaussian(cls, alpha: float = 1.0, c: complex = 1.0, R: Optional[float] = None) -> 'PlaneMeasure':
        """c dlambda_alpha = c (alpha / pi) e^{-alpha |w|^2} dv"""
        density = DensityFactory.create('gaussian', alpha=alpha, c=c)
        return cls(densities=(density,), R=R if R is not None else default_radius(alpha))

    def _like(self, **changes) -> 'PlaneMeasure':
        changes.setdefault('R', self.R)
        return super()._like(**changes)

    def with_radius(self, R: float) -> 'PlaneMeasure':
        return self._like(R=R)

    def __add__(self, other: Measure) -> 'PlaneMeasure':
        result = super().__add__(other)
        if result is NotImplemented or not isinstance(other, PlaneMeasure):
            return result
        return result._like(R=max(self.R, other.R))

    @cached_property
    def finite_mass_report(self) -> SeminormReport:
        return plane_mass(self)

    def to_dict(self) -> Dict[str, Any]:
        data = super().to_dict()
        data['R'] = self.R
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'PlaneMeasure':
        space = data.get('space', 'plane')
        if space != 'plane':
            raise ValueError(f"Expected a plane measure, got space '{space}'")
        try:
            parsed = cls._parse(data)
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed measure specification: {e}") from e
        return cls(R=float(data.get('R', Config.FOCK_DEFAULT_R)), **parsed)

    def __repr__(self):
        return f"PlaneMeasure({self.describe()}, R={self.R:g})"


def default_radius(alpha: float) -> float:
    """R = 8 / sqrt(alpha): Gaussian tails e^{-alpha R^2} are far below double precision"""
    return Config.FOCK_DEFAULT_R / np.sqrt(float(alpha))


def radius_schedule(R: float, steps: int = 7) -> tuple:
    """Evenly spaced truncation radii ending at R"""
    return tuple(float(R) * (k + 1) / steps for k in range(steps))


def plane_mass(mu: PlaneMeasure, R_schedule: Optional[Sequence[float]] = None) -> SeminormReport:
    """Total variation |mu|({|w| <= R}) per R, classified against x = R"""
    schedule = sorted(float(R) for R in (R_schedule or radius_schedule(mu.R)))
    radii = np.abs(mu.locations)
    mags = np.abs(mu.weights)
    values = np.asarray([float(np.sum(mags[radii <= R])) for R in schedule])
    if mu.densities:
        probe = mu.abs_angular_mean(np.asarray([0.25]))
        if probe is not None:
            u, wu, panel, outputs = plane_radial_rule(1.0, schedule)
            cumulative = np.concatenate([[0.0], np.cumsum(np.bincount(panel, weights=wu * mu.abs_angular_mean(u)))])
            values = values + np.pi * cumulative[outputs]
        else:
            values = values + integrate_plane_schedule(mu.abs_density, 1.0, schedule).real
    return make_report(values, schedule, 'plane_mass', label=mu.describe(), x=schedule, x_label='R')

"""
Complex Borel measures: a finite atom list plus named densities against
normalized area measure.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from typing import Any, Dict, Iterable, List, Optional, Tuple

import numpy as np
from scipy.spatial import cKDTree

from DiskGeometry.geometry import as_point, as_points, check_in_disk
from .densities.base_density import BaseDensity, parse_coefficient
from .density_factory import DensityFactory

logger = logging.getLogger(__name__)

# Atom lists at least this long are searched through a KD-tree
KDTREE_MIN_ATOMS = 64


def _empty() -> np.ndarray:
    return np.zeros(0, dtype=complex)


@dataclass(frozen=True, eq=False)
class Measure:
    """
    Immutable complex measure sum_k w_k delta_{a_k} + (sum_j g_j) dA.

    Total variation uses |w_k| for atoms and |sum_j g_j| for the densities.
    """
    locations: np.ndarray = field(default_factory=_empty)
    weights: np.ndarray = field(default_factory=_empty)
    densities: Tuple[BaseDensity, ...] = ()
    space: str = 'disk'

    def __post_init__(self):
        locations = np.atleast_1d(as_points(self.locations)).ravel()
        weights = np.atleast_1d(np.asarray(self.weights, dtype=complex)).ravel()
        if len(locations) != len(weights):
            raise ValueError(f"{len(locations)} atom locations but {len(weights)} weights")
        if not np.all(np.isfinite(weights)):
            raise ValueError("Atom weights must be finite")
        if self.space == 'disk':
            check_in_disk(locations, 'atom')
        for density in self.densities:
            if density.space != self.space:
                raise ValueError(f"{density!r} lives on the {density.space}, measure on the {self.space}")
        object.__setattr__(self, 'locations', locations)
        object.__setattr__(self, 'weights', weights)
        object.__setattr__(self, 'densities', tuple(self.densities))

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------
    @classmethod
    def zero(cls) -> 'Measure':
        return cls()

    @classmethod
    def atom(cls, z: Any, weight: Any = 1.0) -> 'Measure':
        return cls(locations=np.asarray([as_point(z)]), weights=np.asarray([parse_coefficient(weight)]))

    @classmethod
    def atomic(cls, locations: Iterable, weights: Iterable) -> 'Measure':
        return cls(locations=np.asarray(list(locations), dtype=complex),
                   weights=np.asarray(list(weights), dtype=complex))

    @classmethod
    def from_density(cls, density: BaseDensity) -> 'Measure':
        return cls(densities=(density,))

    @classmethod
    def area(cls) -> 'Measure':
        """Normalized area measure"""
        return cls.from_density(DensityFactory.create('constant'))

    # ------------------------------------------------------------------
    # Algebra
    # ------------------------------------------------------------------
    def _like(self, **changes) -> 'Measure':
        data = {'locations': self.locations, 'weights': self.weights,
                'densities': self.densities, 'space': self.space}
        data.update(changes)
        return type(self)(**data)

    def __add__(self, other: 'Measure') -> 'Measure':
        if not isinstance(other, Measure):
            return NotImplemented
        if other.space != self.space:
            raise ValueError("Cannot add measures on different spaces")
        return self._like(locations=np.concatenate([self.locations, other.locations]),
                          weights=np.concatenate([self.weights, other.weights]),
                          densities=self.densities + other.densities)

    def scale(self, factor: complex) -> 'Measure':
        factor = complex(factor)
        return self._like(weights=self.weights * factor,
                          densities=tuple(d.scaled(factor) for d in self.densities))

    def __mul__(self, factor) -> 'Measure':
        if isinstance(factor, Measure):
            return NotImplemented
        return self.scale(factor)

    __rmul__ = __mul__

    def __neg__(self) -> 'Measure':
        return self.scale(-1.0)

    def __sub__(self, other: 'Measure') -> 'Measure':
        return self + (-other)

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------
    @property
    def atom_count(self) -> int:
        return len(self.locations)

    @property
    def has_density(self) -> bool:
        return bool(self.densities)

    @property
    def is_zero(self) -> bool:
        return not self.densities and not np.any(self.weights)

    def density_value(self, w: np.ndarray) -> np.ndarray:
        w = np.asarray(w, dtype=complex)
        total = np.zeros(w.shape, dtype=complex)
        for density in self.densities:
            total = total + density(w)
        return total

    def abs_density(self, w: np.ndarray) -> np.ndarray:
        if len(self.densities) == 1:
            return self.densities[0].abs_value(w)
        return np.abs(self.density_value(w))

    def atom_mass(self) -> float:
        return float(np.sum(np.abs(self.weights)))

    def abs_angular_mean(self, t: np.ndarray) -> Optional[np.ndarray]:
        """Angular mean of |density| in closed form, when available"""
        if not self.densities:
            return np.zeros_like(np.asarray(t, dtype=float))
        if len(self.densities) == 1:
            return self.densities[0].abs_angular_mean(t)
        if all(d.radial for d in self.densities):
            return np.abs(sum(d.profile(t) for d in self.densities))
        return None

    @property
    def variation_radial(self) -> bool:
        """|density| depends on |w| only"""
        if len(self.densities) <= 1:
            return all(d.radial_modulus for d in self.densities)
        return all(d.radial for d in self.densities)

    @property
    def rotation_invariant(self) -> bool:
        """Total variation is invariant under rotations (so localized values depend on |z| only)"""
        return self.variation_radial and not np.any(self.locations)

    def singular_directions(self) -> Tuple[float, ...]:
        directions = set()
        for density in self.densities:
            directions.update(density.singular_directions())
        return tuple(sorted(directions))

    def kink_points(self) -> Tuple[complex, ...]:
        points = set()
        for density in self.densities:
            points.update(density.kink_points())
        return tuple(sorted(points, key=lambda p: (p.real, p.imag)))

    @cached_property
    def atom_tree(self) -> Optional[cKDTree]:
        """KD-tree over atom locations for long atom lists"""
        if self.atom_count < KDTREE_MIN_ATOMS:
            return None
        return cKDTree(np.column_stack([self.locations.real, self.locations.imag]))

    @cached_property
    def finite_mass_report(self):
        """Total-variation mass over the default schedule with its verdict"""
        from .functionals import total_mass
        return total_mass(self)

    @property
    def has_finite_mass(self) -> bool:
        from .convergence import Verdict
        return self.finite_mass_report.verdict == Verdict.CONVERGED

    # ------------------------------------------------------------------
    # JSON
    # ------------------------------------------------------------------
    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            'atoms': [{'z': [float(z.real), float(z.imag)], 'w': [float(w.real), float(w.imag)]}
                      for z, w in zip(self.locations, self.weights)],
        }
        if len(self.densities) == 1:
            data['density'] = DensityFactory.to_dict(self.densities[0])
        elif self.densities:
            data['density'] = [DensityFactory.to_dict(d) for d in self.densities]
        if self.space != 'disk':
            data['space'] = self.space
        return data

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True)

    @classmethod
    def _parse(cls, data: Dict[str, Any]) -> Dict[str, Any]:
        atoms = data.get('atoms') or []
        locations = [as_point(atom['z']) for atom in atoms]
        weights = [parse_coefficient(atom.get('w', 1.0)) for atom in atoms]
        spec = data.get('density')
        if spec is None:
            densities: List[BaseDensity] = []
        elif isinstance(spec, list):
            densities = [DensityFactory.from_dict(item) for item in spec]
        else:
            densities = [DensityFactory.from_dict(spec)]
        return {'locations': np.asarray(locations, dtype=complex),
                'weights': np.asarray(weights, dtype=complex),
                'densities': tuple(densities)}

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Measure':
        """Parse the measure JSON schema; "space": "plane" yields a PlaneMeasure"""
        space = data.get('space', 'disk')
        if space == 'plane' and cls is Measure:
            from FockPlane.plane_measure import PlaneMeasure
            return PlaneMeasure.from_dict(data)
        if space != 'disk' and cls is Measure:
            raise ValueError(f"Unknown measure space '{space}'")
        try:
            return cls(**cls._parse(data))
        except (KeyError, TypeError) as e:
            raise ValueError(f"Malformed measure specification: {e}") from e

    @classmethod
    def load(cls, path: str) -> 'Measure':
        with open(path, 'r') as f:
            return cls.from_dict(json.load(f))

    def describe(self) -> str:
        parts = []
        if self.atom_count:
            parts.append(f"{self.atom_count} atoms (mass {self.atom_mass():.6g})")
        for density in self.densities:
            parts.append(repr(density))
        return ' + '.join(parts) if parts else 'zero measure'

    def __repr__(self):
        return f"Measure({self.describe()})"


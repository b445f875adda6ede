"""
Möbius maps, the pseudo-hyperbolic metric and pseudo-hyperbolic disks.

All functions accept Python scalars or numpy arrays of complex points and
broadcast like numpy ufuncs; scalar inputs give scalar outputs. Areas use
the normalized area measure (the unit disk has area 1).
"""

from dataclasses import dataclass
from typing import Any, Dict, Sequence, Union

import numpy as np

from DiskRep.config import Config
from DiskRep.errors import DomainError

PointLike = Union[complex, float, Sequence[float], np.ndarray]


def as_point(z: Any) -> complex:
    """Coerce a complex number or an [re, im] pair into a finite complex point"""
    if isinstance(z, (list, tuple)) and len(z) == 2:
        z = complex(float(z[0]), float(z[1]))
    try:
        value = complex(z)
    except (TypeError, ValueError) as e:
        raise DomainError(f"Cannot interpret {z!r} as a complex point") from e
    if not (np.isfinite(value.real) and np.isfinite(value.imag)):
        raise DomainError(f"Point {z!r} has non-finite components")
    return value


def as_points(z: Any) -> np.ndarray:
    """Coerce scalars, [re, im] lists or arrays into a complex ndarray"""
    arr = np.asarray(z)
    if arr.dtype.kind not in 'biufc':
        raise DomainError(f"Cannot interpret {z!r} as complex points")
    arr = arr.astype(complex)
    if not np.all(np.isfinite(arr)):
        raise DomainError("Points have non-finite components")
    return arr


def check_in_disk(z: Any, name: str = 'z') -> np.ndarray:
    """Reject points within Config.BOUNDARY_GUARD of the unit circle"""
    arr = as_points(z)
    if arr.size and np.max(np.abs(arr)) >= 1.0 - Config.BOUNDARY_GUARD:
        worst = arr.flat[int(np.argmax(np.abs(arr)))]
        raise DomainError(f"{name}={worst} is not inside the unit disk (|{name}|={abs(worst):.17g})")
    return arr


def check_radius(r: float) -> float:
    r = float(r)
    if not 0.0 < r < 1.0:
        raise DomainError(f"Pseudo-hyperbolic radius must lie in (0, 1), got {r}")
    return r


def _scalar_or_array(value: np.ndarray, *inputs):
    if all(np.ndim(x) == 0 for x in inputs):
        return value.item()
    return value


def mobius_map(a: PointLike, z: PointLike):
    """
    The involutive disk automorphism (a - z) / (1 - conj(a) z).

    Args:
        a: Center of the automorphism, |a| < 1
        z: Point(s) to map, |z| < 1

    Returns:
        Image point(s), inside the unit disk
    """
    a_arr = check_in_disk(a, 'a')
    z_arr = check_in_disk(z, 'z')
    result = (a_arr - z_arr) / (1.0 - np.conj(a_arr) * z_arr)
    return _scalar_or_array(result, a, z)


def _pseudo_distance_unchecked(z: np.ndarray, w: np.ndarray) -> np.ndarray:
    # |1 - z conj(w)|^2 = |z - w|^2 + (1 - |z|^2)(1 - |w|^2); this form is
    # exactly symmetric in floating point
    diff2 = np.abs(z - w) ** 2
    return np.sqrt(diff2 / (diff2 + (1.0 - np.abs(z) ** 2) * (1.0 - np.abs(w) ** 2)))


def pseudo_distance(z: PointLike, w: PointLike):
    """
    Pseudo-hyperbolic distance |z - w| / |1 - z conj(w)|.

    Returns:
        Value(s) in [0, 1); symmetric in (z, w), zero iff z == w
    """
    z_arr = check_in_disk(z, 'z')
    w_arr = check_in_disk(w, 'w')
    return _scalar_or_array(_pseudo_distance_unchecked(z_arr, w_arr), z, w)


def hyperbolic_distance(z: PointLike, w: PointLike):
    """Convenience conversion artanh(pseudo_distance(z, w))"""
    d = np.arctanh(np.asarray(pseudo_distance(z, w), dtype=float))
    return _scalar_or_array(d, z, w)


@dataclass(frozen=True)
class EuclideanDisk:
    """Euclidean realization of a pseudo-hyperbolic disk"""
    center: complex
    radius: float

    def __post_init__(self):
        if not self.radius > 0.0:
            raise DomainError(f"Disk radius must be positive, got {self.radius}")

    @property
    def area(self) -> float:
        """Normalized area (unit disk = 1)"""
        return self.radius ** 2

    def contains(self, w: PointLike):
        """Strict (open disk) membership"""
        w_arr = as_points(w)
        return _scalar_or_array(np.abs(w_arr - self.center) < self.radius, w)

    def boundary(self, count: int) -> np.ndarray:
        theta = 2.0 * np.pi * np.arange(count) / count
        return self.center + self.radius * np.exp(1j * theta)

    def to_dict(self) -> Dict[str, Any]:
        return {'center': [self.center.real, self.center.imag], 'radius': self.radius}


def pseudo_disk_parameters(z: np.ndarray, r: float):
    """Vectorized (center, radius) of D(z, r) without domain checks"""
    abs2 = np.abs(z) ** 2
    denom = 1.0 - r * r * abs2
    center = (1.0 - r * r) * z / denom
    radius = r * (1.0 - abs2) / denom
    return center, radius


def pseudo_disk(z: PointLike, r: float) -> EuclideanDisk:
    """
    Euclidean realization of D(z, r) = {w : pseudo_distance(z, w) < r}.

    The center is (1 - r^2) z / (1 - r^2 |z|^2) and the radius is
    r (1 - |z|^2) / (1 - r^2 |z|^2).
    """
    z = as_point(z)
    check_in_disk(z)
    r = check_radius(r)
    center, radius = pseudo_disk_parameters(np.asarray(z), r)
    return EuclideanDisk(center=complex(center), radius=float(radius))


def pseudo_disk_area(z: PointLike, r: float):
    """
    Normalized area of D(z, r): r^2 ((1 - |z|^2) / (1 - r^2 |z|^2))^2.

    Accepts arrays of centers; the value equals pseudo_disk(z, r).radius ** 2.
    """
    z_arr = check_in_disk(z)
    r = check_radius(r)
    _, radius = pseudo_disk_parameters(z_arr, r)
    return _scalar_or_array(radius ** 2, z)


def sample_disk(count: int, rho: float, rng: np.random.Generator) -> np.ndarray:
    """Uniform samples of {|z| <= rho} by the square-root radius rule"""
    radius = rho * np.sqrt(rng.random(count))
    theta = 2.0 * np.pi * rng.random(count)
    return radius * np.exp(1j * theta)

"""
Numerical derivatives of holomorphic black boxes.

Cauchy's formula on a circle about z, discretized by the trapezoid rule:
f^(k)(z) = k! / r^k * mean_j f(z + r e^{i theta_j}) e^{-i k theta_j}.
The rule is spectrally accurate for holomorphic f; the radius is a fixed
fraction of the distance to the unit circle so the contour stays in the disk.
"""

import math
from typing import Callable, Optional

import numpy as np
from scipy.special import stirling2

from DiskRep.config import Config


def contour_radius(z: np.ndarray, scale: Optional[np.ndarray] = None) -> np.ndarray:
    """Contour radius about z; ``scale`` defaults to 1 - |z|"""
    if scale is None:
        scale = 1.0 - np.abs(z)
    return Config.CAUCHY_RADIUS * np.asarray(scale, dtype=float)


def cauchy_derivative(f: Callable, z, k: int, radius=None, scale=None,
                      nodes: Optional[int] = None) -> np.ndarray:
    """
    k-th complex derivative of a holomorphic f.

    Args:
        f: Vectorized holomorphic function
        z: Point(s)
        k: Derivative order, k >= 1
        radius: Contour radius (or radii); defaults to contour_radius(z, scale)
        scale: Distance to the nearest singularity used for the default radius
        nodes: Trapezoid nodes on the contour, must exceed k
    """
    if k < 1:
        raise ValueError(f"Derivative order must be >= 1, got {k}")
    nodes = int(nodes or Config.CAUCHY_NODES)
    if nodes <= k:
        raise ValueError(f"Need more than {k} contour nodes, got {nodes}")
    z = np.asarray(z, dtype=complex)
    if radius is None:
        radius = contour_radius(z, scale)
    radius = np.asarray(radius, dtype=float)[..., None]
    unit = np.exp(2j * np.pi * np.arange(nodes) / nodes)
    values = np.asarray(f(z[..., None] + radius * unit), dtype=complex)
    coefficient = np.mean(values * unit ** (-k), axis=-1)
    return math.factorial(k) * coefficient / radius[..., 0] ** k


def radial_derivative(derivative: Callable[[int, np.ndarray], np.ndarray], z, k: int) -> np.ndarray:
    """
    R^k f with R f = z f'.

    R^k = sum_j S(k, j) z^j d^j/dz^j with Stirling numbers of the second kind.
    """
    z = np.asarray(z, dtype=complex)
    if k == 0:
        return derivative(0, z)
    total = np.zeros(z.shape, dtype=complex)
    for j in range(1, k + 1):
        total = total + float(stirling2(k, j, exact=True)) * z ** j * derivative(j, z)
    return total

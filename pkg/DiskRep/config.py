"""
Central numerical configuration.

Every tolerance, default schedule and resolution used across the toolkit is
declared here so that experiment reports can echo them in their headers.
"""

import math
from typing import Iterable, Tuple


class Config:
    # --- Geometry ---
    BOUNDARY_GUARD = 1e-14          # |z| >= 1 - guard is rejected, never clamped
    DEFAULT_LATTICE_RADIUS = 0.3
    RING_SLACK = 1e-9               # relative slack on the ring step so separation >= r/2 survives rounding

    # --- Quadrature ---
    RADIAL_NODES = 16               # Gauss-Legendre nodes per radial panel
    ANGULAR_NODES = 64
    MAX_ANGULAR_NODES = 8192
    QUAD_TOL = 1e-8
    DEFAULT_RHO = 1.0 - 1e-8
    SYNTH_RHO = 1.0 - 1e-12         # truncation radius for kernel synthesis against densities
    PSEUDO_DISK_NODES = 24          # radial nodes for the coarse pseudo-disk rule
    PSEUDO_DISK_ANGLES = 128
    PSEUDO_DISK_REFINEMENTS = 2
    ANGULAR_DECAY = 32.0            # trapezoid resolution factor 2*ceil(DECAY / gap)

    # --- Convergence classifier ---
    CONVERGENCE_REL_TOL = 1e-3
    CONVERGENCE_WINDOW = 3
    CONVERGENCE_FLOOR = 1e-12
    MIN_TREND_POINTS = 4
    SLOPE_PERSISTENCE = 0.8         # s_{i+1} >= 0.8 s_i counts as non-decaying growth
    GROWTH_EXPONENT_MIN = 0.1
    GROWTH_FIT_R2 = 0.9
    TAIL_RATIO_MAX = 0.8            # geometric tail extrapolation only when increments shrink faster

    # --- Schedules ---
    DEFAULT_SCHEDULE = tuple(1.0 - 10.0 ** (-k) for k in range(1, 9))
    BESOV_SCHEDULE = tuple(1.0 - 10.0 ** (-k) for k in range(1, 11))
    LATTICE_SCHEDULE = tuple(1.0 - 10.0 ** (-k / 2.0) for k in range(2, 7))
    CARLESON_SHELLS = tuple(1.0 - 2.0 ** (-k) for k in range(1, 15))
    CARLESON_ANGLES = 16
    SHELL_ANGLES = 256
    SHELLS_PER_STEP = 4

    # --- Derivatives (Cauchy contour trapezoid) ---
    CAUCHY_NODES = 64
    CAUCHY_RADIUS = 0.5             # fraction of 1 - |z|

    # --- Fock plane ---
    FOCK_RADIAL_NODES = 32
    FOCK_ANGULAR_NODES = 128
    FOCK_DEFAULT_R = 8.0
    FOCK_TAIL_TOL = 1e-12
    FOCK_R_SCHEDULE = (2.0, 3.0, 4.0, 5.0, 6.0, 7.0, 8.0)

    # --- Experiments ---
    DEFAULT_SEED = 20240611
    DEFAULT_WORKERS = 1
    REPORT_FLOAT_DIGITS = 12


def parse_rho_list(text: str) -> Tuple[float, ...]:
    """
    Parse a comma separated radius schedule.

    Accepts plain radii ("0.9,0.99") and boundary distances written as
    "1-1e-3". The result is sorted and validated to lie in (0, 1).
    """
    values = []
    for item in text.split(','):
        item = item.strip()
        if not item:
            continue
        if item.startswith('1-'):
            value = 1.0 - float(item[2:])
        else:
            value = float(item)
        if not 0.0 < value < 1.0:
            raise ValueError(f"Schedule radius {item} is outside (0, 1)")
        values.append(value)
    if not values:
        raise ValueError("Empty radius schedule")
    return tuple(sorted(set(values)))


def validate_schedule(schedule: Iterable[float]) -> Tuple[float, ...]:
    """Return the schedule as a sorted tuple after range checks"""
    values = tuple(sorted(float(s) for s in schedule))
    if not values:
        raise ValueError("Empty radius schedule")
    for value in values:
        if not 0.0 < value < 1.0 or math.isnan(value):
            raise ValueError(f"Schedule radius {value} is outside (0, 1)")
    return values

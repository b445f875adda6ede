"""
Fock-space machinery on the complex plane.
"""

from .plane_measure import PlaneMeasure, default_radius, plane_mass, radius_schedule
from .fock import (
    FockFunction,
    PlaneLattice,
    ReproduceResult,
    default_R_schedule,
    fock_atomic_measure,
    fock_localized_lp,
    fock_norm,
    fock_reproduce_check,
    lens_area,
    plane_lattice,
    plane_localized,
    reproduce_probes,
    synth_fock,
    weyl_shift,
)

__all__ = [
    'PlaneMeasure',
    'default_radius',
    'plane_mass',
    'radius_schedule',
    'FockFunction',
    'PlaneLattice',
    'ReproduceResult',
    'default_R_schedule',
    'fock_atomic_measure',
    'fock_localized_lp',
    'fock_norm',
    'fock_reproduce_check',
    'lens_area',
    'plane_lattice',
    'plane_localized',
    'reproduce_probes',
    'synth_fock',
    'weyl_shift',
]

from .geometry import (
    EuclideanDisk,
    as_point,
    as_points,
    check_in_disk,
    mobius_map,
    pseudo_distance,
    hyperbolic_distance,
    pseudo_disk,
    pseudo_disk_area,
    pseudo_disk_parameters,
    sample_disk,
)
from .lattice import Lattice, LatticeReport, build_lattice, cell_of, verify_lattice

__all__ = [
    'EuclideanDisk',
    'as_point',
    'as_points',
    'check_in_disk',
    'mobius_map',
    'pseudo_distance',
    'hyperbolic_distance',
    'pseudo_disk',
    'pseudo_disk_area',
    'pseudo_disk_parameters',
    'sample_disk',
    'Lattice',
    'LatticeReport',
    'build_lattice',
    'cell_of',
    'verify_lattice',
]

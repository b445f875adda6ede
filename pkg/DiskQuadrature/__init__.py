from .quadrature import (
    QuadratureScheme,
    DiskWeight,
    RadialRule,
    as_weight,
    angular_means,
    angular_nodes,
    gauss_legendre,
    gauss_jacobi,
    radial_rule,
    radial_integral,
    jacobi_end_rule,
    integrate_disk,
    integrate_disk_resolved,
    integrate_disk_schedule,
    integrate_pseudo_disk,
    integrate_pseudo_disks,
    integrate_plane_schedule,
    plane_radial_rule,
    moment,
    moment_exact,
)

__all__ = [
    'QuadratureScheme',
    'DiskWeight',
    'RadialRule',
    'as_weight',
    'angular_means',
    'angular_nodes',
    'gauss_legendre',
    'gauss_jacobi',
    'radial_rule',
    'radial_integral',
    'jacobi_end_rule',
    'integrate_disk',
    'integrate_disk_resolved',
    'integrate_disk_schedule',
    'integrate_pseudo_disk',
    'integrate_pseudo_disks',
    'integrate_plane_schedule',
    'plane_radial_rule',
    'moment',
    'moment_exact',
]

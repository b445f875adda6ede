"""
Functions built from measures: kernel syntheses, the explicit polynomial and
lattice measures, and the least-squares inverse.
"""

from .kernels.base_kernel import BaseKernel, KernelFunction, PowerKernel
from .kernel_factory import KernelFactory
from .constructions import (
    default_power,
    integrate_derivative,
    lattice_atomic_measure,
    polynomial_measure,
    polynomial_representation,
    synth_bergman,
    synth_lipschitz,
    synth_lipschitz_carleson,
    synth_mobius,
    synth_mobius_derivative,
)
from .decomposition import (
    DecompositionResult,
    DominationReport,
    decompose,
    domination_constant,
    fit_lattice_coefficients,
)

__all__ = [
    'BaseKernel',
    'KernelFunction',
    'PowerKernel',
    'KernelFactory',
    'default_power',
    'integrate_derivative',
    'lattice_atomic_measure',
    'polynomial_measure',
    'polynomial_representation',
    'synth_bergman',
    'synth_lipschitz',
    'synth_lipschitz_carleson',
    'synth_mobius',
    'synth_mobius_derivative',
    'DecompositionResult',
    'DominationReport',
    'decompose',
    'domination_constant',
    'fit_lattice_coefficients',
]

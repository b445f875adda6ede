"""
Representation operations: kernel syntheses and the explicit measures that
represent polynomials and lattice atom sums.
"""

import logging
import math
from typing import Any, Optional, Sequence

import numpy as np
from scipy.special import beta as beta_function

from DiskRep.errors import ConstraintError, DomainError
from DiskGeometry.lattice import Lattice
from DiskQuadrature.quadrature import QuadratureScheme, moment_exact
from MeasureModel.density_factory import DensityFactory
from MeasureModel.measure import Measure
from .kernel_factory import KernelFactory
from .kernels.base_kernel import BaseKernel
from .kernels.mobius_derivative_kernel import MobiusDerivativeKernel

logger = logging.getLogger(__name__)


def synth_mobius(mu: Measure, scheme: Optional[QuadratureScheme] = None) -> BaseKernel:
    """
    f(z) = int (z - w) / (1 - z conj(w)) dmu(w).

    Raises:
        InfiniteMassError: if the total variation of mu does not converge
    """
    return KernelFactory.build('mobius', mu, scheme)


def synth_mobius_derivative(mu: Measure, k: int, z: Any, scheme: Optional[QuadratureScheme] = None):
    """k-th derivative of the Moebius representation, k! int (1 - |w|^2) conj(w)^{k-1} / (1 - z conj(w))^{k+1} dmu"""
    if int(k) != k or k < 1:
        raise ConstraintError(f"Derivative order must be a positive integer, got {k}")
    values = synth_mobius(mu, scheme).derivative(int(k), z)
    return complex(values) if np.ndim(values) == 0 else values


def synth_bergman(mu: Measure, b: float, p: float, alpha: float,
                  scheme: Optional[QuadratureScheme] = None) -> BaseKernel:
    return KernelFactory.build('bergman', mu, scheme, b=b, p=p, alpha=alpha)


def synth_lipschitz(mu: Measure, b: float, t: float, scheme: Optional[QuadratureScheme] = None) -> BaseKernel:
    return KernelFactory.build('lipschitz', mu, scheme, b=b, t=t)


def synth_lipschitz_carleson(mu: Measure, t: float, alpha: float = 0.0,
                             scheme: Optional[QuadratureScheme] = None) -> BaseKernel:
    return KernelFactory.build('lipschitz_carleson', mu, scheme, t=t, alpha=alpha)


def default_power(p: Optional[float]) -> int:
    """N = ceil(2 / p) + 2 keeps |mu|_r in L^p(dlambda); N = 0 without a target p"""
    if p is None:
        return 0
    if not p > 0.0:
        raise ConstraintError(f"p must be positive, got {p}")
    return int(math.ceil(2.0 / p)) + 2


def polynomial_measure(m: int, N: Optional[int] = None, p: Optional[float] = None) -> Measure:
    """
    Measure whose Moebius representation is exactly z^m.

    For m >= 1 the density is c w^{m-1} (1 - |w|^2)^N with
    c = 1 / (moment(m-1, N) - moment(m, N)); for m = 0 it is
    c (|w| / w) (1 - |w|^2)^N with c = -1 / B(3/2, N + 1).
    """
    if int(m) != m or m < 0:
        raise ConstraintError(f"Polynomial degree must be a non-negative integer, got {m}")
    N = default_power(p) if N is None else N
    if int(N) != N or N < 0:
        raise ConstraintError(f"Weight power N must be a non-negative integer, got {N}")
    m, N = int(m), int(N)

    if m == 0:
        c = -1.0 / float(beta_function(1.5, N + 1))
        density = DensityFactory.create('phase_power', N=N, c=c)
    else:
        c = 1.0 / float(moment_exact(m - 1, N) - moment_exact(m, N))
        density = DensityFactory.create('monomial_power', m=m - 1, N=N, c=c)
    logger.debug(f"Polynomial measure for z^{m}: N={N}, c={c:.12g}")
    return Measure.from_density(density)


def polynomial_representation(coefficients: Sequence[complex], N: Optional[int] = None,
                              p: Optional[float] = None) -> Measure:
    """Measure representing sum_m a_m z^m through the Moebius kernel"""
    measure = Measure.zero()
    for m, a in enumerate(np.asarray(coefficients, dtype=complex)):
        if a != 0:
            measure = measure + polynomial_measure(m, N, p).scale(a)
    return measure


def lattice_atomic_measure(lat: Lattice, coeffs: Sequence[complex], k: int) -> Measure:
    """
    Atoms c_n / (k! conj(z_n)^{k-1}) at the lattice centers.

    The k-th derivative of the Moebius representation of this measure is
    sum_n c_n (1 - |z_n|^2) / (1 - z conj(z_n))^{k+1}.
    """
    if int(k) != k or k < 1:
        raise ConstraintError(f"Derivative order must be a positive integer, got {k}")
    centers = lat.centers[lat.active]
    coeffs = np.asarray(coeffs, dtype=complex).ravel()
    if len(coeffs) != len(centers):
        raise ConstraintError(f"{len(coeffs)} coefficients for {len(centers)} lattice centers")
    k = int(k)
    if k > 1 and np.any((centers == 0) & (coeffs != 0)):
        raise DomainError("A nonzero coefficient sits at a center z_n = 0, where conj(z_n)^(k-1) vanishes")
    nonzero = coeffs != 0
    z = centers[nonzero]
    weights = coeffs[nonzero] / (math.factorial(k) * np.conj(z) ** (k - 1))
    return Measure.atomic(z, weights)


def integrate_derivative(fprime: BaseKernel, constant_fix: Optional[Measure] = None,
                         value_at_zero: Optional[complex] = None,
                         scheme: Optional[QuadratureScheme] = None) -> BaseKernel:
    """
    Antiderivative of a derivative-kernel representation in Moebius form.

    int (1 - |w|^2) / (1 - z conj(w))^2 dmu is the derivative of
    int (z - w) / (1 - z conj(w)) dmu; the integration constant is adjusted
    by adding ``constant_fix`` or, given ``value_at_zero``, the polynomial
    measure of the constant that moves f(0) there.
    """
    if not isinstance(fprime, MobiusDerivativeKernel):
        raise ConstraintError(f"Expected a Moebius derivative representation, got {type(fprime).__name__}")
    measure = fprime.measure
    if constant_fix is not None:
        measure = measure + constant_fix
    f = synth_mobius(measure, scheme or fprime.scheme)
    if value_at_zero is not None:
        shift = complex(value_at_zero) - complex(f(0.0))
        if shift != 0:
            measure = measure + polynomial_measure(0).scale(shift)
            f = synth_mobius(measure, scheme or fprime.scheme)
    return f

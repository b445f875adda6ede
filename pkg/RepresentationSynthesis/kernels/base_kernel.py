from abc import abstractmethod
from typing import Any, Callable, Dict, List, Optional, Tuple
import logging
import math
import numpy as np
from scipy.special import poch

from DiskRep.config import Config
from DiskRep.errors import ConstraintError, InfiniteMassError
from DiskQuadrature.quadrature import QuadratureScheme, integrate_disk, radial_rule
from MeasureModel.measure import Measure
from SpaceMembership.functions import HolomorphicFunction

# Atom sums are evaluated in blocks of at most this many kernel values
_BLOCK_VALUES = 1 << 22

# Monomial term z^n with coefficient C
Term = Tuple[int, complex]


class BaseKernel(HolomorphicFunction):
    """
    Base class for the functions f(z) = int K(z, w) dmu(w).

    Atoms are summed directly. A density that separates as
    e^{i m theta} q(|w|^2) collapses to a single monomial, because only one
    Taylor coefficient of the kernel survives the angular integration; its
    coefficient is a one-dimensional radial integral computed once at
    construction. Other densities are integrated over the disk at every
    evaluation point, truncated at ``scheme.rho``.
    """

    # Class attribute that should be overridden by subclasses
    display_name = "Base Kernel"
    requires_finite_mass = False

    def __init__(self, measure: Measure, scheme: Optional[QuadratureScheme] = None, **params):
        self.logger = logging.getLogger(self.__class__.__name__)
        if measure.space != 'disk':
            raise ConstraintError(f"{self.__class__.__name__} needs a measure on the disk, got '{measure.space}'")
        self._set_params(**params)
        self.measure = measure
        self.scheme = scheme or QuadratureScheme(rho=Config.SYNTH_RHO)
        if self.requires_finite_mass and not measure.has_finite_mass:
            report = measure.finite_mass_report
            raise InfiniteMassError(
                f"{self.display_name} needs |mu|(D) < inf; total variation is {report.verdict.value} "
                f"(last partial mass {report.last:.6g})")

        self._terms: List[Term] = []
        self._quadrature_densities = []
        for density in measure.densities:
            if density.angular_order is None:
                self._quadrature_densities.append(density)
            else:
                self._terms.extend(self._separable_terms(density))
        self.name = f"{self.registry_name}[{measure.describe()}]"
        self.logger.debug(f"Built {self.name}: {len(self._terms)} monomial terms, "
                          f"{len(self._quadrature_densities)} densities by quadrature")

    # ------------------------------------------------------------------
    # Kernel definition - implemented by subclasses
    # ------------------------------------------------------------------
    @abstractmethod
    def _set_params(self, **params):
        """Validate and store kernel parameters; raise ConstraintError when inadmissible"""
        pass

    @abstractmethod
    def params(self) -> Dict[str, Any]:
        pass

    @abstractmethod
    def kernel(self, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        """K(z, w), broadcasting z against w"""
        pass

    @abstractmethod
    def kernel_derivative(self, k: int, z: np.ndarray, w: np.ndarray) -> np.ndarray:
        """d^k/dz^k K(z, w) for k >= 1"""
        pass

    @abstractmethod
    def monomial_term(self, m: int) -> Optional[Tuple[int, Callable[[np.ndarray, np.ndarray], np.ndarray]]]:
        """
        Surviving Taylor term against a density e^{i m theta} q(t).

        Returns (n, h) such that the density contributes z^n int_0^1 h(t, 1 - t) q(t) dt,
        or None when no term survives.
        """
        pass

    # ------------------------------------------------------------------
    # Evaluation
    # ------------------------------------------------------------------
    @property
    def registry_name(self) -> str:
        return getattr(self, 'registry_key', None) or self.__class__.__name__

    def _separable_terms(self, density) -> List[Term]:
        term = self.monomial_term(density.angular_order)
        if term is None:
            return []
        n, h = term
        rule = radial_rule([self.scheme.rho], self.scheme.radial_nodes)
        coefficient = complex(rule.integrate(h(rule.t, rule.s) * density.profile(rule.t))[-1])
        return [(n, coefficient)]

    def _atom_sum(self, z: np.ndarray, func: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> np.ndarray:
        flat = z.ravel()
        total = np.zeros(flat.shape, dtype=complex)
        a, w = self.measure.locations, self.measure.weights
        if not len(a):
            return total.reshape(z.shape)
        block = max(1, _BLOCK_VALUES // len(a))
        for start in range(0, len(flat), block):
            zb = flat[start:start + block]
            total[start:start + block] = func(zb[:, None], a[None, :]) @ w
        return total.reshape(z.shape)

    def _quadrature_sum(self, z: np.ndarray, func: Callable[[np.ndarray, np.ndarray], np.ndarray]) -> np.ndarray:
        flat = z.ravel()
        out = np.zeros(flat.shape, dtype=complex)
        focus = self.measure.singular_directions()
        for i, zi in enumerate(flat):
            def integrand(w, zi=zi):
                return func(zi, w) * sum(d(w) for d in self._quadrature_densities)
            out[i] = integrate_disk(integrand, scheme=self.scheme, peak=abs(zi), focus=focus)
        return out.reshape(z.shape)

    def _evaluate(self, z: np.ndarray, k: int) -> np.ndarray:
        if k == 0:
            func = self.kernel
        else:
            def func(zz, ww):
                return self.kernel_derivative(k, zz, ww)
        total = self._atom_sum(z, func)
        for n, c in self._terms:
            if n >= k:
                total = total + c * (math.factorial(n) / math.factorial(n - k)) * z ** (n - k)
        if self._quadrature_densities:
            total = total + self._quadrature_sum(z, func)
        return total

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        return self._evaluate(z, 0)

    def derivative(self, k: int, z):
        if int(k) != k or k < 0:
            raise ValueError(f"Derivative order must be a non-negative integer, got {k}")
        z = np.asarray(z, dtype=complex)
        return self._evaluate(z, int(k))

    @property
    def peak_radius(self) -> float:
        """Largest atom modulus: K(., a) is singular at 1 / conj(a)"""
        return float(np.max(np.abs(self.measure.locations))) if self.measure.atom_count else 0.0

    def focus(self) -> Tuple[float, ...]:
        if not self._quadrature_densities:
            return ()
        return self.measure.singular_directions()

    @property
    def monomial_terms(self) -> List[Term]:
        return list(self._terms)

    def to_dict(self) -> Dict[str, Any]:
        """Kernel spec JSON: {kernel, params, measure}"""
        return {'kernel': self.registry_name, 'params': self.params(), 'measure': self.measure.to_dict()}

    @classmethod
    def get_display_name(cls) -> str:
        return cls.display_name

    def get_info(self) -> Dict[str, Any]:
        return {
            "kernel_type": self.__class__.__name__,
            "display_name": self.__class__.display_name,
            "params": self.params(),
            "measure": self.measure.describe(),
            "monomial_terms": len(self._terms),
            "quadrature_densities": len(self._quadrature_densities),
            "scheme": self.scheme.to_dict(),
        }


# Name used by the representation operations
KernelFunction = BaseKernel


class PowerKernel(BaseKernel):
    """
    K(z, w) = (1 - |w|^2)^e / (1 - z conj(w))^b on the principal branch.

    Re(1 - z conj(w)) > 0 inside the disk, so the branch is single valued.
    """

    @property
    @abstractmethod
    def exponents(self) -> Tuple[float, float]:
        """(b, e)"""
        pass

    def kernel(self, z, w):
        b, e = self.exponents
        return (1.0 - np.abs(w) ** 2) ** e * (1.0 - z * np.conj(w)) ** (-b)

    def kernel_derivative(self, k, z, w):
        b, e = self.exponents
        wc = np.conj(w)
        return poch(b, k) * wc ** k * (1.0 - np.abs(w) ** 2) ** e * (1.0 - z * wc) ** (-b - k)

    def monomial_term(self, m):
        if m < 0:
            return None
        b, e = self.exponents
        scale = poch(b, m) / math.factorial(m)

        def h(t, s):
            return scale * t ** (0.5 * m) * s ** e
        return m, h


def check_pole_exponent(b: float, what: str):
    """b must be neither 0 nor a negative integer"""
    if b <= 0.0 and float(b).is_integer():
        raise ConstraintError(f"{what}: kernel exponent b={b:g} must be neither 0 nor a negative integer")

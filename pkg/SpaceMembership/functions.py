"""
Holomorphic test functions with exact derivatives.

Membership tests accept any HolomorphicFunction; plain callables are wrapped
in BlackBox and differentiated numerically, numpy polynomials use .deriv.
"""

import math
from abc import ABC, abstractmethod
from typing import Any, Callable, Optional, Sequence, Tuple

import numpy as np
from numpy.polynomial import Polynomial
from scipy.special import poch

from .derivatives import cauchy_derivative


class HolomorphicFunction(ABC):
    """Vectorized holomorphic function on the disk (or the plane)"""

    name = 'f'
    # Functions with boundary singularities list them here; the quadrature
    # clusters angular nodes toward their directions
    singular_points: Tuple[complex, ...] = ()

    @abstractmethod
    def __call__(self, z: np.ndarray) -> np.ndarray:
        pass

    def derivative(self, k: int, z) -> np.ndarray:
        """k-th derivative; numerical unless a subclass knows it"""
        z = np.asarray(z, dtype=complex)
        if k == 0:
            return np.asarray(self(z), dtype=complex)
        return cauchy_derivative(self, z, k)

    @property
    def peak_radius(self) -> float:
        """1 / |p| for the nearest singular point p strictly outside the closed disk"""
        outside = [abs(p) for p in self.singular_points if abs(p) > 1.0 + 1e-9]
        return 1.0 / min(outside) if outside else 0.0

    def focus(self) -> Tuple[float, ...]:
        """Angles of singular points on (or near) the unit circle"""
        return tuple(sorted(float(np.angle(p)) for p in self.singular_points if abs(p) < 1.0 + 1e-9))

    def log_abs(self, z: np.ndarray) -> np.ndarray:
        return np.log(np.abs(self(z)))

    def __repr__(self):
        return f"{self.__class__.__name__}({self.name})"


class Monomial(HolomorphicFunction):
    """c z^m"""

    def __init__(self, m: int, c: complex = 1.0):
        if int(m) != m or m < 0:
            raise ValueError(f"Monomial degree must be a non-negative integer, got {m}")
        self.m = int(m)
        self.c = complex(c)
        self.name = f"z^{self.m}"

    def __call__(self, z):
        return self.c * np.asarray(z, dtype=complex) ** self.m

    def derivative(self, k: int, z):
        z = np.asarray(z, dtype=complex)
        if k > self.m:
            return np.zeros(z.shape, dtype=complex)
        return self.c * (math.factorial(self.m) / math.factorial(self.m - k)) * z ** (self.m - k)


class PolynomialFunction(HolomorphicFunction):
    """Wrapper over numpy.polynomial.Polynomial with complex coefficients"""

    def __init__(self, coefficients: Any):
        if isinstance(coefficients, Polynomial):
            self.poly = Polynomial(np.asarray(coefficients.coef, dtype=complex))
        else:
            self.poly = Polynomial(np.asarray(coefficients, dtype=complex))
        self.name = f"poly(deg={self.poly.degree()})"

    @property
    def coefficients(self) -> np.ndarray:
        return self.poly.coef

    def __call__(self, z):
        return self.poly(np.asarray(z, dtype=complex))

    def derivative(self, k: int, z):
        z = np.asarray(z, dtype=complex)
        if k == 0:
            return self.poly(z)
        return self.poly.deriv(k)(z) if k <= self.poly.degree() else np.zeros(z.shape, dtype=complex)


class LogSingular(HolomorphicFunction):
    """log(1 / (1 - z / zeta)); zeta = 1 gives log(1 / (1 - z))"""

    def __init__(self, zeta: complex = 1.0):
        self.zeta = complex(zeta)
        self.singular_points = (self.zeta,)
        self.name = f"log(1/(1-z/{self.zeta:g}))"

    def __call__(self, z):
        return -np.log(1.0 - np.asarray(z, dtype=complex) / self.zeta)

    def derivative(self, k: int, z):
        z = np.asarray(z, dtype=complex)
        if k == 0:
            return self(z)
        return math.factorial(k - 1) / (self.zeta - z) ** k


class Pole(HolomorphicFunction):
    """(1 - z / zeta)^{-n}"""

    def __init__(self, zeta: complex = 1.0, n: float = 1.0):
        self.zeta = complex(zeta)
        self.n = float(n)
        self.singular_points = (self.zeta,)
        self.name = f"(1-z/{self.zeta:g})^-{self.n:g}"

    def __call__(self, z):
        return (1.0 - np.asarray(z, dtype=complex) / self.zeta) ** (-self.n)

    def derivative(self, k: int, z):
        z = np.asarray(z, dtype=complex)
        if k == 0:
            return self(z)
        return poch(self.n, k) * self.zeta ** (-k) * (1.0 - z / self.zeta) ** (-self.n - k)


class LogLog(HolomorphicFunction):
    """log(log(e / (1 - z))): unbounded yet slowly growing at z = 1"""

    singular_points = (1.0 + 0j,)
    name = 'loglog(e/(1-z))'

    def __call__(self, z):
        return np.log(1.0 - np.log(1.0 - np.asarray(z, dtype=complex)))

    def derivative(self, k: int, z):
        z = np.asarray(z, dtype=complex)
        if k == 1:
            return 1.0 / ((1.0 - z) * (1.0 - np.log(1.0 - z)))
        return super().derivative(k, z)


class Exponential(HolomorphicFunction):
    """c exp(a z^q), entire; log_abs avoids overflow"""

    def __init__(self, a: complex = 1.0, q: int = 1, c: complex = 1.0):
        self.a = complex(a)
        self.q = int(q)
        self.c = complex(c)
        self.name = f"exp({self.a:g} z^{self.q})"

    def __call__(self, z):
        return self.c * np.exp(self.a * np.asarray(z, dtype=complex) ** self.q)

    def log_abs(self, z):
        return np.log(abs(self.c)) + np.real(self.a * np.asarray(z, dtype=complex) ** self.q)


class BlackBox(HolomorphicFunction):
    """Arbitrary vectorized callable, differentiated on a Cauchy contour"""

    def __init__(self, func: Callable, name: str = 'f', singular_points: Sequence[complex] = ()):
        self.func = func
        self.name = name
        self.singular_points = tuple(complex(p) for p in singular_points)

    def __call__(self, z):
        return np.asarray(self.func(np.asarray(z, dtype=complex)), dtype=complex)


def as_holomorphic(f: Any, name: Optional[str] = None) -> HolomorphicFunction:
    """Coerce HolomorphicFunction, numpy Polynomial or a callable"""
    if isinstance(f, HolomorphicFunction):
        return f
    if isinstance(f, Polynomial):
        return PolynomialFunction(f)
    if callable(f):
        return BlackBox(f, name or getattr(f, '__name__', 'f'))
    raise TypeError(f"Cannot use {f!r} as a holomorphic function")

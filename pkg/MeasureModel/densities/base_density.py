from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple
import logging
import numpy as np


def parse_coefficient(c: Any) -> complex:
    """Accept numbers or [re, im] pairs"""
    if isinstance(c, (list, tuple)):
        if len(c) != 2:
            raise ValueError(f"Coefficient must be [re, im], got {c}")
        return complex(float(c[0]), float(c[1]))
    return complex(c)


class BaseDensity(ABC):
    """
    Base class for named density families g, integrated against area measure.

    A density is ``coefficient * _evaluate(w)``. Families that factor as
    g(w) = e^{i m theta} q(|w|^2) declare ``angular_order = m`` and implement
    ``_profile``; this is what lets kernel synthesis reduce the area integral
    to a one-dimensional radial integral.
    """

    # Class attribute that should be overridden by subclasses
    display_name = "Base Density"
    space = 'disk'
    radial = False              # g depends on |w| only
    radial_modulus = False      # |g| depends on |w| only

    def __init__(self, c: Any = 1.0, **kwargs):
        self.coefficient = parse_coefficient(c)
        self.logger = logging.getLogger(self.__class__.__name__)
        if kwargs:
            raise ValueError(f"Unknown parameters for {self.__class__.__name__}: {sorted(kwargs)}")

    def __call__(self, w: np.ndarray) -> np.ndarray:
        return self.coefficient * self._evaluate(np.asarray(w, dtype=complex))

    @abstractmethod
    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        """Density without the coefficient - must be implemented by subclasses"""
        pass

    @abstractmethod
    def params(self) -> Dict[str, Any]:
        """Family parameters (coefficient excluded)"""
        pass

    @property
    def angular_order(self) -> Optional[int]:
        """m with g = e^{i m theta} q(t), or None when g does not separate"""
        return None

    def _profile(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError(f"{self.__class__.__name__} does not separate")

    def profile(self, t: np.ndarray) -> Optional[np.ndarray]:
        """q(t) including the coefficient, for separable families"""
        if self.angular_order is None:
            return None
        return self.coefficient * self._profile(np.asarray(t, dtype=float))

    def abs_value(self, w: np.ndarray) -> np.ndarray:
        return np.abs(self(w))

    def abs_angular_mean(self, t: np.ndarray) -> Optional[np.ndarray]:
        """mean over theta of |g(sqrt(t) e^{i theta})|, when known in closed form"""
        if self.angular_order is None:
            return None
        return np.abs(self.profile(t))

    def singular_directions(self) -> Tuple[float, ...]:
        """Boundary angles where g blows up"""
        return ()

    def kink_points(self) -> Tuple[complex, ...]:
        """
        Interior points where g or |g| is not smooth.

        For g = e^{i m theta} q(|w|^2) with m odd, either the phase (m < 0) or
        the modulus |w|^m has a kink at the origin.
        """
        m = self.angular_order
        return (0j,) if m is not None and m % 2 else ()

    def scaled(self, factor: complex) -> 'BaseDensity':
        """Same family with the coefficient multiplied by factor"""
        return self.__class__(c=self.coefficient * complex(factor), **self.params())

    def to_dict(self, family: str) -> Dict[str, Any]:
        params = dict(self.params())
        params['c'] = [self.coefficient.real, self.coefficient.imag]
        return {'family': family, 'params': params}

    @classmethod
    def get_display_name(cls) -> str:
        return cls.display_name

    def get_info(self) -> Dict[str, Any]:
        return {
            "density_type": self.__class__.__name__,
            "display_name": self.__class__.display_name,
            "space": self.space,
            "coefficient": [self.coefficient.real, self.coefficient.imag],
            "params": self.params(),
        }

    def __repr__(self):
        return f"{self.__class__.__name__}(c={self.coefficient}, {self.params()})"

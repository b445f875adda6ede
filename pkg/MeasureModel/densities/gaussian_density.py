from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class GaussianDensity(BaseDensity):
    """Plane density g = c w^m (alpha / pi) e^{-alpha |w|^2}; m = 0 is dlambda_alpha"""

    display_name = "Gaussian (plane)"
    space = 'plane'
    radial_modulus = True

    def __init__(self, alpha: float = 1.0, m: int = 0, **kwargs):
        super().__init__(**kwargs)
        if not alpha > 0.0:
            raise ValueError(f"alpha must be positive, got {alpha}")
        if int(m) != m or m < 0:
            raise ValueError(f"m must be a non-negative integer, got {m}")
        self.alpha = float(alpha)
        self.m = int(m)
        self.radial = self.m == 0

    @property
    def angular_order(self):
        return self.m

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        return w ** self.m * (self.alpha / np.pi) * np.exp(-self.alpha * np.abs(w) ** 2)

    def _profile(self, t: np.ndarray) -> np.ndarray:
        return t ** (0.5 * self.m) * (self.alpha / np.pi) * np.exp(-self.alpha * t)

    def params(self) -> Dict[str, Any]:
        return {'alpha': self.alpha, 'm': self.m}

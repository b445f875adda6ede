from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class MonomialPowerDensity(BaseDensity):
    """g = c w^m (1 - |w|^2)^N, the building block of polynomial measures"""

    display_name = "Monomial times power"
    radial_modulus = True

    def __init__(self, m: int = 0, N: float = 0.0, **kwargs):
        super().__init__(**kwargs)
        if int(m) != m or m < 0:
            raise ValueError(f"m must be a non-negative integer, got {m}")
        self.m = int(m)
        self.N = float(N)
        self.radial = self.m == 0

    @property
    def angular_order(self):
        return self.m

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        return w ** self.m * (1.0 - np.abs(w) ** 2) ** self.N

    def _profile(self, t: np.ndarray) -> np.ndarray:
        return t ** (0.5 * self.m) * (1.0 - t) ** self.N

    def params(self) -> Dict[str, Any]:
        return {'m': self.m, 'N': self.N}

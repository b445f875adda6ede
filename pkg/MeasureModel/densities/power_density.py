from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class PowerDensity(BaseDensity):
    """g = c (1 - |w|^2)^a"""

    display_name = "Power of (1 - |w|^2)"
    radial = True
    radial_modulus = True

    def __init__(self, a: float = 0.0, **kwargs):
        super().__init__(**kwargs)
        self.a = float(a)

    @property
    def angular_order(self):
        return 0

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        return ((1.0 - np.abs(w) ** 2) ** self.a).astype(complex)

    def _profile(self, t: np.ndarray) -> np.ndarray:
        return (1.0 - t) ** self.a

    def params(self) -> Dict[str, Any]:
        return {'a': self.a}

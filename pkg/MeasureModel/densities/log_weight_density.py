from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class LogWeightDensity(BaseDensity):
    """g = c log(1 / (1 - |w|^2))^a (1 - |w|^2)^b"""

    display_name = "Logarithmic weight"
    radial = True
    radial_modulus = True

    def __init__(self, a: float = 1.0, b: float = 0.0, **kwargs):
        super().__init__(**kwargs)
        self.a = float(a)
        self.b = float(b)

    @property
    def angular_order(self):
        return 0

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        return self._profile(np.abs(w) ** 2).astype(complex)

    def _profile(self, t: np.ndarray) -> np.ndarray:
        return (-np.log1p(-t)) ** self.a * (1.0 - t) ** self.b

    def params(self) -> Dict[str, Any]:
        return {'a': self.a, 'b': self.b}

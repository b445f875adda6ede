from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class PhasePowerDensity(BaseDensity):
    """g = c (|w| / w) (1 - |w|^2)^N = c e^{-i theta} (1 - |w|^2)^N"""

    display_name = "Phase times power"
    radial_modulus = True

    def __init__(self, N: float = 0.0, **kwargs):
        super().__init__(**kwargs)
        self.N = float(N)

    @property
    def angular_order(self):
        return -1

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        modulus = np.abs(w)
        phase = np.divide(modulus, w, out=np.zeros(w.shape, dtype=complex), where=modulus > 0.0)
        return phase * (1.0 - modulus ** 2) ** self.N

    def _profile(self, t: np.ndarray) -> np.ndarray:
        return (1.0 - t) ** self.N

    def params(self) -> Dict[str, Any]:
        return {'N': self.N}

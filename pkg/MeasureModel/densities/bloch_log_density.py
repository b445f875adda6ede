from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class BlochLogDensity(BaseDensity):
    """
    g = c (1 - |w|^2) |f'(w)|^2 for the Bloch function f = log(1 / (1 - w)).

    |f'|^2 = 1 / |1 - w|^2, so the angular mean of (1 - t) |f'|^2 is the
    Poisson kernel mean, identically one.
    """

    display_name = "Bloch log density"

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        return ((1.0 - np.abs(w) ** 2) / np.abs(1.0 - w) ** 2).astype(complex)

    def abs_angular_mean(self, t: np.ndarray) -> np.ndarray:
        return np.full_like(np.asarray(t, dtype=float), abs(self.coefficient))

    def singular_directions(self):
        return (0.0,)

    def params(self) -> Dict[str, Any]:
        return {}

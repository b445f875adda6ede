from typing import Any, Dict
import numpy as np
from .base_density import BaseDensity


class ConstantDensity(BaseDensity):
    """g = c; with c = 1 this is the normalized area measure"""

    display_name = "Constant (area measure)"
    radial = True
    radial_modulus = True

    @property
    def angular_order(self):
        return 0

    def _evaluate(self, w: np.ndarray) -> np.ndarray:
        return np.ones(w.shape, dtype=complex)

    def _profile(self, t: np.ndarray) -> np.ndarray:
        return np.ones_like(t)

    def params(self) -> Dict[str, Any]:
        return {}

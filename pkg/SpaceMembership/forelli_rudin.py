"""
The integrals

    FR(a, b, w) = int (1 - |z|^2)^a / |1 - z conj(w)|^b dA(z),   a > -1,

computed by radial quadrature against the closed-form angular mean, plus the
closed form and the three-regime boundary asymptotics used as oracles.
"""

import logging
import math
from dataclasses import dataclass
from typing import Any, Dict

import numpy as np
from scipy.special import digamma, gammaln, hyp2f1

from DiskRep.config import Config
from DiskRep.errors import ConstraintError
from DiskGeometry.geometry import check_in_disk
from DiskQuadrature.quadrature import jacobi_end_rule

logger = logging.getLogger(__name__)

# Dyadic panels beyond the scale 1 - |w|^2 before the Jacobi end panel
_EXTRA_LEVELS = 12


def _check_a(a: float) -> float:
    a = float(a)
    if not a > -1.0:
        raise ConstraintError(f"Forelli-Rudin integrals need a > -1, got {a}")
    return a


def _shape_like(values: np.ndarray, w: Any):
    if np.ndim(w) == 0:
        return float(values.reshape(()))
    return values.reshape(np.shape(w))


def circle_mean(b: float, x: np.ndarray, one_minus_x: np.ndarray) -> np.ndarray:
    """
    mean over theta of |1 - sqrt(x) e^{i theta}|^{-b} = 2F1(b/2, b/2; 1; x).

    For b >= 1 the Euler form (1 - x)^{1-b} 2F1(1 - b/2, 1 - b/2; 1; x)
    keeps the hypergeometric factor bounded as x -> 1.
    """
    if b >= 1.0:
        return one_minus_x ** (1.0 - b) * hyp2f1(1.0 - 0.5 * b, 1.0 - 0.5 * b, 1.0, x)
    return hyp2f1(0.5 * b, 0.5 * b, 1.0, x)


def forelli_rudin(a: float, b: float, w: Any, nodes: int = Config.RADIAL_NODES):
    """
    Numerical FR(a, b, w); accepts arrays of w.

    The radial rule is graded down to about 12 dyadic levels below
    1 - |w|^2 and closes with a Gauss-Jacobi panel carrying (1 - t)^a.
    """
    a = _check_a(a)
    b = float(b)
    w_arr = check_in_disk(w, 'w')
    abs2 = np.abs(np.atleast_1d(w_arr).ravel()) ** 2
    gap = 1.0 - float(np.max(abs2, initial=0.0))
    levels = int(math.ceil(math.log2(1.0 / gap))) + _EXTRA_LEVELS
    rule = jacobi_end_rule(a, levels, nodes)

    x = abs2[:, None] * rule.t[None, :]
    # 1 - t |w|^2 = (1 - t) + t (1 - |w|^2) without cancellation
    one_minus_x = rule.s[None, :] + rule.t[None, :] * (1.0 - abs2)[:, None]
    values = circle_mean(b, x, one_minus_x) @ rule.w
    return _shape_like(np.asarray(values), w)


def forelli_rudin_exact(a: float, b: float, w: Any):
    """Closed form 2F1(b/2, b/2; a + 2; |w|^2) / (a + 1)"""
    a = _check_a(a)
    w_arr = check_in_disk(w, 'w')
    values = hyp2f1(0.5 * b, 0.5 * b, a + 2.0, np.abs(np.atleast_1d(w_arr)) ** 2) / (a + 1.0)
    return _shape_like(np.asarray(values, dtype=float), w)


@dataclass
class ForelliRudinAsymptotic:
    """Leading boundary behaviour of FR(a, b, w) as |w| -> 1"""
    a: float
    b: float
    regime: str             # bounded | logarithmic | growth
    exponent: float         # 2 + a - b
    constant: float
    log_shift: float = 0.0

    def leading(self, w: Any):
        """Leading-order value at w"""
        w_arr = check_in_disk(w, 'w')
        s = 1.0 - np.abs(np.asarray(w_arr)) ** 2
        if self.regime == 'bounded':
            values = np.full(np.shape(s), self.constant)
        elif self.regime == 'logarithmic':
            values = self.constant * (-np.log(s) + self.log_shift)
        else:
            values = self.constant * s ** self.exponent
        return _shape_like(np.asarray(values, dtype=float), w)

    def normalized(self, values: Any, w: Any):
        """values divided by the growth scale: 1, log(1/(1-|w|^2)) or (1-|w|^2)^(2+a-b)"""
        s = 1.0 - np.abs(np.asarray(check_in_disk(w, 'w'))) ** 2
        if self.regime == 'bounded':
            scale = np.ones(np.shape(s))
        elif self.regime == 'logarithmic':
            scale = -np.log(s)
        else:
            scale = s ** self.exponent
        return _shape_like(np.asarray(values, dtype=float) / scale, w)

    def to_dict(self) -> Dict[str, Any]:
        return {'a': self.a, 'b': self.b, 'regime': self.regime, 'exponent': self.exponent,
                'constant': self.constant, 'log_shift': self.log_shift}


def forelli_rudin_asymptotic(a: float, b: float) -> ForelliRudinAsymptotic:
    """
    Classify FR(a, b, .) at the boundary.

    bounded (b < 2 + a): limit G(a+2) G(a+2-b) / ((a+1) G(a+2-b/2)^2);
    logarithmic (b = 2 + a): C (log(1/(1-|w|^2)) + 2 psi(1) - 2 psi(b/2))
    with C = G(b) / ((a+1) G(b/2)^2);
    growth (b > 2 + a): G(a+2) G(b-a-2) / ((a+1) G(b/2)^2) (1-|w|^2)^(2+a-b).
    """
    a = _check_a(a)
    b = float(b)
    c = 2.0 + a - b
    if abs(c) < 1e-12:
        constant = math.exp(gammaln(b) - 2.0 * gammaln(0.5 * b)) / (a + 1.0)
        shift = 2.0 * float(digamma(1.0)) - 2.0 * float(digamma(0.5 * b))
        return ForelliRudinAsymptotic(a, b, 'logarithmic', c, constant, shift)
    if c > 0.0:
        constant = math.exp(gammaln(a + 2.0) + gammaln(c) - 2.0 * gammaln(a + 2.0 - 0.5 * b)) / (a + 1.0)
        return ForelliRudinAsymptotic(a, b, 'bounded', c, constant)
    constant = math.exp(gammaln(a + 2.0) + gammaln(-c) - 2.0 * gammaln(0.5 * b)) / (a + 1.0)
    return ForelliRudinAsymptotic(a, b, 'growth', c, constant)

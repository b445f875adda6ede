import math
import numpy as np
from .base_kernel import BaseKernel


class MobiusKernel(BaseKernel):
    """
    K(z, w) = (z - w) / (1 - z conj(w)) = -phi_w(z).

    |K| < 1 on the disk, so the representation is bounded by |mu|(D) and the
    measure must have finite total variation.
    """

    display_name = "Moebius kernel"
    registry_key = 'mobius'
    requires_finite_mass = True

    def _set_params(self):
        pass

    def params(self):
        return {}

    def kernel(self, z, w):
        return (z - w) / (1.0 - z * np.conj(w))

    def kernel_derivative(self, k, z, w):
        wc = np.conj(w)
        return math.factorial(k) * (1.0 - np.abs(w) ** 2) * wc ** (k - 1) / (1.0 - z * wc) ** (k + 1)

    def monomial_term(self, m):
        # (z - w) sum_n z^n conj(w)^n: the z^{m+1} coefficient pairs conj(w)^m
        # from the first sum with w conj(w)^{m+1} from the second
        if m < -1:
            return None

        def h(t, s):
            head = t ** (0.5 * m) if m >= 0 else np.zeros_like(t)
            return head - t ** (0.5 * (m + 2))
        return m + 1, h

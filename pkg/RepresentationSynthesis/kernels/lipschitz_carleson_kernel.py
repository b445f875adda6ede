from DiskRep.errors import ConstraintError
from .base_kernel import PowerKernel, check_pole_exponent


class LipschitzCarlesonKernel(PowerKernel):
    """
    1 / (1 - z conj(w))^{2 + alpha - t}.

    The Carleson-measure form of the Lipschitz representation: mu is meant to
    be (2 + alpha)-Carleson, e.g. g dA_alpha with g bounded.
    """

    display_name = "Lipschitz kernel (Carleson form)"
    registry_key = 'lipschitz_carleson'

    def _set_params(self, t: float = 1.0, alpha: float = 0.0):
        t, alpha = float(t), float(alpha)
        if t < 0.0:
            raise ConstraintError(f"Lipschitz kernel needs t >= 0, got {t}")
        if not alpha > -1.0:
            raise ConstraintError(f"Carleson form needs alpha > -1, got {alpha}")
        check_pole_exponent(2.0 + alpha - t, "Lipschitz kernel (Carleson form)")
        self.t, self.alpha = t, alpha

    def params(self):
        return {'t': self.t, 'alpha': self.alpha}

    @property
    def exponents(self):
        return 2.0 + self.alpha - self.t, 0.0

from DiskRep.errors import ConstraintError
from .base_kernel import PowerKernel, check_pole_exponent


class LipschitzKernel(PowerKernel):
    """(1 - |w|^2)^{b + t} / (1 - z conj(w))^b, representing Lambda_t from Carleson-type measures"""

    display_name = "Lipschitz kernel"
    registry_key = 'lipschitz'

    def _set_params(self, b: float = 2.0, t: float = 1.0):
        b, t = float(b), float(t)
        if t < 0.0:
            raise ConstraintError(f"Lipschitz kernel needs t >= 0, got {t}")
        if not b + t > 1.0:
            raise ConstraintError(f"Lipschitz kernel needs b + t > 1, got b={b:g}, t={t:g}")
        check_pole_exponent(b, "Lipschitz kernel")
        self.b, self.t = b, t

    def params(self):
        return {'b': self.b, 't': self.t}

    @property
    def exponents(self):
        return self.b, self.b + self.t

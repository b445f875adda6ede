from DiskRep.errors import ConstraintError
from .base_kernel import PowerKernel


class BergmanKernel(PowerKernel):
    """
    (1 - |w|^2)^{(pb - 2 - alpha) / p} / (1 - z conj(w))^b, representing A^p_alpha.

    Admissible when b > max(1, 1/p) + (alpha + 1) / p.
    """

    display_name = "Bergman kernel"
    registry_key = 'bergman'

    def _set_params(self, b: float = 3.0, p: float = 1.0, alpha: float = 0.0):
        b, p, alpha = float(b), float(p), float(alpha)
        if not p > 0.0:
            raise ConstraintError(f"Bergman kernel needs p > 0, got {p}")
        if not alpha > -1.0:
            raise ConstraintError(f"Bergman kernel needs alpha > -1, got {alpha}")
        bound = max(1.0, 1.0 / p) + (alpha + 1.0) / p
        if not b > bound:
            raise ConstraintError(f"Bergman kernel needs b > {bound:g} for p={p:g}, alpha={alpha:g}; got b={b:g}")
        self.b, self.p, self.alpha = b, p, alpha

    def params(self):
        return {'b': self.b, 'p': self.p, 'alpha': self.alpha}

    @property
    def exponents(self):
        return self.b, (self.p * self.b - 2.0 - self.alpha) / self.p

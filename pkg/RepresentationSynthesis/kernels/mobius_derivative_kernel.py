from .base_kernel import PowerKernel


class MobiusDerivativeKernel(PowerKernel):
    """(1 - |w|^2) / (1 - z conj(w))^2, the z-derivative of the Moebius kernel"""

    display_name = "Moebius derivative kernel"
    registry_key = 'mobius_derivative'
    requires_finite_mass = True

    def _set_params(self):
        pass

    def params(self):
        return {}

    @property
    def exponents(self):
        return 2.0, 1.0

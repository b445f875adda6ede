from .derivatives import cauchy_derivative, contour_radius, radial_derivative
from .functions import (
    HolomorphicFunction,
    Monomial,
    PolynomialFunction,
    LogSingular,
    LogLog,
    Pole,
    Exponential,
    BlackBox,
    as_holomorphic,
)
from .forelli_rudin import (
    ForelliRudinAsymptotic,
    circle_mean,
    forelli_rudin,
    forelli_rudin_exact,
    forelli_rudin_asymptotic,
)
from .seminorms import (
    besov_seminorm,
    lipschitz_seminorm,
    bloch_seminorm,
    bergman_norm,
    boundedness_scan,
    besov_holder_bound,
    besov_order,
    lipschitz_order,
    bergman_order,
)
from .spaces import SpaceSpec

__all__ = [
    'cauchy_derivative',
    'contour_radius',
    'radial_derivative',
    'HolomorphicFunction',
    'Monomial',
    'PolynomialFunction',
    'LogSingular',
    'LogLog',
    'Pole',
    'Exponential',
    'BlackBox',
    'as_holomorphic',
    'ForelliRudinAsymptotic',
    'circle_mean',
    'forelli_rudin',
    'forelli_rudin_exact',
    'forelli_rudin_asymptotic',
    'besov_seminorm',
    'lipschitz_seminorm',
    'bloch_seminorm',
    'bergman_norm',
    'boundedness_scan',
    'besov_holder_bound',
    'besov_order',
    'lipschitz_order',
    'bergman_order',
    'SpaceSpec',
]

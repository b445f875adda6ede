"""
Space specifications: family, parameters and an admissible derivative order.
"""

from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence

from DiskRep.errors import ConstraintError
from MeasureModel.convergence import SeminormReport
from .seminorms import (
    bergman_norm,
    bergman_order,
    besov_order,
    besov_seminorm,
    lipschitz_order,
    lipschitz_seminorm,
)

FAMILIES = ('besov', 'lipschitz', 'bergman', 'bloch')


@dataclass(frozen=True)
class SpaceSpec:
    """B_p, Lambda_t, A^p_alpha or the Bloch space with its derivative order"""
    family: str
    p: Optional[float] = None
    t: Optional[float] = None
    alpha: Optional[float] = None
    k: Optional[int] = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ConstraintError(f"Unknown space family '{self.family}'. Available: {', '.join(FAMILIES)}")
        if self.family == 'bloch':
            object.__setattr__(self, 't', 0.0)
        if self.family in ('besov', 'bergman') and (self.p is None or not self.p > 0.0):
            raise ConstraintError(f"{self.family} needs p > 0")
        if self.family == 'lipschitz' and (self.t is None or self.t < 0.0):
            raise ConstraintError("lipschitz needs t >= 0")
        if self.family == 'bergman' and self.alpha is None:
            object.__setattr__(self, 'alpha', 0.0)

        minimal = self.minimal_order
        if self.k is None:
            object.__setattr__(self, 'k', minimal)
        elif not self.admissible(self.k):
            raise ConstraintError(f"k={self.k} is not admissible for {self.label} (minimal {minimal})")

    @property
    def minimal_order(self) -> int:
        if self.family == 'besov':
            return besov_order(self.p)
        if self.family == 'bergman':
            return bergman_order(self.p, self.alpha)
        return lipschitz_order(self.t)

    def admissible(self, k: int) -> bool:
        if int(k) != k:
            return False
        if self.family == 'besov':
            return self.p * k > 1.0
        if self.family == 'bergman':
            return k >= 0 and self.p * k + self.alpha > -1.0
        return k > self.t

    @property
    def label(self) -> str:
        if self.family == 'besov':
            return f"B_{self.p:g}"
        if self.family == 'bergman':
            return f"A^{self.p:g}_{self.alpha:g}"
        if self.family == 'bloch':
            return "Bloch"
        return f"Lambda_{self.t:g}"

    def evaluate(self, f: Any, rho_schedule: Optional[Sequence[float]] = None) -> SeminormReport:
        """Run the matching seminorm with this order"""
        if self.family == 'besov':
            return besov_seminorm(f, self.p, rho_schedule, k=self.k)
        if self.family == 'bergman':
            return bergman_norm(f, self.p, self.alpha, rho_schedule, k=self.k)
        return lipschitz_seminorm(f, self.t, rho_schedule, k=self.k)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'SpaceSpec':
        return cls(family=data['family'], p=data.get('p'), t=data.get('t'),
                   alpha=data.get('alpha'), k=data.get('k'))

    def to_dict(self) -> Dict[str, Any]:
        return {'family': self.family, 'p': self.p, 't': self.t, 'alpha': self.alpha, 'k': self.k,
                'label': self.label}

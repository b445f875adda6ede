"""
Numerical companions of the atomic decomposition: the empirical constant of
the derivative domination chain and a least-squares inverse that fits
lattice atoms to a given function.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Sequence

import numpy as np

from DiskRep.config import Config
from DiskRep.errors import ConstraintError
from DiskGeometry.geometry import sample_disk
from DiskGeometry.lattice import Lattice
from MeasureModel.measure import Measure
from SpaceMembership.functions import as_holomorphic
from .constructions import lattice_atomic_measure, polynomial_representation, synth_mobius

logger = logging.getLogger(__name__)


@dataclass
class DominationReport:
    """max over probes of |f^(k)(z)| / sum |c_n| (1 - |z_n|^2) / |1 - z conj(z_n)|^{k+1}"""
    k: int
    constant: float
    probes: int
    worst_probe: complex

    def to_dict(self) -> Dict[str, Any]:
        return {'k': self.k, 'constant': self.constant, 'probes': self.probes,
                'worst_probe': [self.worst_probe.real, self.worst_probe.imag]}


def domination_constant(mu: Measure, k: int, probes: Sequence[complex]) -> DominationReport:
    """
    Empirical constant C in |f^(k)(z)| <= C sum_n |c_n| (1 - |z_n|^2) / |1 - z conj(z_n)|^{k+1}
    for f the Moebius representation of an atomic measure with c_n = k! w_n conj(z_n)^{k-1}.
    """
    if mu.densities:
        raise ConstraintError("The domination chain is stated for atomic measures")
    k = int(k)
    z = np.asarray(probes, dtype=complex).ravel()
    a = mu.locations
    c = math.factorial(k) * mu.weights * np.conj(a) ** (k - 1)
    f = synth_mobius(mu)
    lhs = np.abs(f.derivative(k, z))
    rhs = (np.abs(1.0 - z[:, None] * np.conj(a)[None, :]) ** (-(k + 1))) @ (np.abs(c) * (1.0 - np.abs(a) ** 2))
    ratio = np.divide(lhs, rhs, out=np.zeros_like(lhs), where=rhs > 0.0)
    worst = int(np.argmax(ratio)) if len(ratio) else 0
    return DominationReport(k=k, constant=float(ratio[worst]) if len(ratio) else 0.0,
                            probes=len(z), worst_probe=complex(z[worst]) if len(z) else 0j)


@dataclass
class DecompositionResult:
    """Least-squares lattice fit f ~ a_0 + a_1 z + sum_n w_n (z - z_n) / (1 - z conj(z_n))"""
    coefficients: np.ndarray            # c_n in the k = 1 normalization, equal to the atom weights
    polynomial: np.ndarray              # a_0, a_1
    max_residual: float
    rms_residual: float
    relative_residual: float
    rank: int
    probes: int
    lp_sum: Optional[float] = None
    measure: Measure = field(default=None, repr=False)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'atoms': len(self.coefficients),
            'polynomial': [[complex(a).real, complex(a).imag] for a in self.polynomial],
            'max_residual': self.max_residual,
            'rms_residual': self.rms_residual,
            'relative_residual': self.relative_residual,
            'rank': self.rank,
            'probes': self.probes,
            'lp_sum': self.lp_sum,
        }


def fit_lattice_coefficients(f: Any, lat: Lattice, p: Optional[float] = None, probes: Optional[Sequence] = None,
                             oversample: int = 4, seed: int = Config.DEFAULT_SEED,
                             rcond: Optional[float] = None) -> DecompositionResult:
    """
    Fit lattice atoms and a linear polynomial part to f by least squares.

    Probes default to ``oversample`` times the unknown count, sampled
    uniformly from the lattice disk {|z| <= rho_max}. The polynomial part is
    carried by polynomial measures so the returned measure represents the
    whole fit through the Moebius kernel.
    """
    f = as_holomorphic(f)
    centers = lat.centers[lat.active]
    unknowns = len(centers) + 2
    if probes is None:
        rng = np.random.default_rng(seed)
        z = sample_disk(oversample * unknowns, lat.rho_max, rng)
    else:
        z = np.asarray(probes, dtype=complex).ravel()
    if len(z) < unknowns:
        raise ConstraintError(f"{len(z)} probes cannot determine {unknowns} unknowns")

    atoms = (z[:, None] - centers[None, :]) / (1.0 - z[:, None] * np.conj(centers)[None, :])
    A = np.column_stack([np.ones_like(z), z, atoms])
    target = f(z)
    solution, _, rank, _ = np.linalg.lstsq(A, target, rcond=rcond)
    residual = np.abs(A @ solution - target)
    scale = float(np.max(np.abs(target))) or 1.0

    polynomial = solution[:2]
    weights = solution[2:]
    measure = lattice_atomic_measure(lat, weights, 1) + polynomial_representation(polynomial)
    result = DecompositionResult(
        coefficients=weights,
        polynomial=polynomial,
        max_residual=float(np.max(residual)),
        rms_residual=float(np.sqrt(np.mean(residual ** 2))),
        relative_residual=float(np.max(residual)) / scale,
        rank=int(rank),
        probes=len(z),
        lp_sum=float(np.sum(np.abs(weights) ** p)) if p is not None else None,
        measure=measure,
    )
    logger.info(f"Lattice fit of {f.name}: {len(centers)} atoms, rank {rank}, "
                f"relative residual {result.relative_residual:.3e}")
    return result


def decompose(f: Any, lat: Lattice, p: Optional[float] = None, **kwargs) -> Measure:
    """Measure whose Moebius representation is the least-squares lattice fit of f"""
    return fit_lattice_coefficients(f, lat, p, **kwargs).measure

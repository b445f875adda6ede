"""
Ring-based r-lattices of the unit disk.

Centers sit on concentric rings at hyperbolic steps of artanh(r/2); each
ring is filled with the largest number of equispaced centers whose mutual
pseudo-distance stays >= r/2. Cells are nearest-center (pseudo-hyperbolic)
Voronoi cells with an index tie-break, which gives

    D(z_n, r/4) ⊂ D_n ⊂ D(z_n, r)

on the truncated disk {|z| <= rho_max}.
"""

import json
import logging
from dataclasses import dataclass, field, replace
from typing import Any, Dict, List

import numpy as np

from DiskRep.config import Config
from DiskRep.errors import DomainError, LatticeConstructionError
from .geometry import (
    as_points,
    check_radius,
    pseudo_disk_parameters,
    sample_disk,
    _pseudo_distance_unchecked,
)

logger = logging.getLogger(__name__)

# Ring offsets searched around floor(artanh|z| / beta); the covering radius is
# below 2 beta so nearer rings always win
_RING_WINDOW = np.arange(-3, 3)


@dataclass(frozen=True, eq=False)
class Lattice:
    """Immutable truncated r-lattice; indices refer to positions in ``sites``"""
    r: float
    rho_max: float
    beta: float
    sites: np.ndarray
    ring_radii: np.ndarray
    ring_starts: np.ndarray
    ring_counts: np.ndarray
    ring_offsets: np.ndarray
    active: np.ndarray = field(default=None)

    def __post_init__(self):
        if self.active is None:
            object.__setattr__(self, 'active', np.ones(len(self.sites), dtype=bool))

    def __len__(self) -> int:
        return len(self.sites)

    @property
    def centers(self) -> np.ndarray:
        return self.sites

    @property
    def ring_index(self) -> np.ndarray:
        """Ring position of every site"""
        return np.repeat(np.arange(len(self.ring_counts)), self.ring_counts)

    # ------------------------------------------------------------------
    # Cell assignment
    # ------------------------------------------------------------------
    def _candidates(self, z: np.ndarray) -> np.ndarray:
        """Sorted candidate site indices per point, -1 for padding"""
        K = len(self.ring_radii)
        h = np.arctanh(np.abs(z))
        base = np.floor(h / self.beta).astype(int)
        rings = base[:, None] + _RING_WINDOW[None, :]          # ring positions (0-based)
        valid = (rings >= 0) & (rings < K)
        rings_c = np.clip(rings, 0, K - 1)

        counts = self.ring_counts[rings_c]
        starts = self.ring_starts[rings_c]
        offsets = self.ring_offsets[rings_c]
        theta = np.mod(np.angle(z)[:, None] - offsets, 2.0 * np.pi)
        slot0 = np.floor(theta * counts / (2.0 * np.pi)).astype(int) % counts
        slot1 = (slot0 + 1) % counts

        idx = np.concatenate([starts + slot0, starts + slot1], axis=1)
        mask = np.concatenate([valid, valid], axis=1)
        sentinel = np.iinfo(np.int64).max
        idx = np.where(mask, idx, sentinel)
        idx.sort(axis=1)
        return np.where(idx == sentinel, -1, idx)

    def _assign(self, z: np.ndarray):
        """
        Nearest generator per point.

        Returns:
            (nearest index, distance, exact-tie flag); the index refers to all
            generators, inactive ones included
        """
        cand = self._candidates(z)
        safe = np.where(cand >= 0, cand, 0)
        dist = _pseudo_distance_unchecked(z[:, None], self.sites[safe])
        dist = np.where(cand >= 0, dist, np.inf)
        # duplicated candidates (clipped rings) must not count as ties
        dup = np.zeros_like(cand, dtype=bool)
        dup[:, 1:] = cand[:, 1:] == cand[:, :-1]
        dist = np.where(dup, np.inf, dist)

        pos = np.argmin(dist, axis=1)
        rows = np.arange(len(z))
        nearest = cand[rows, pos]
        dmin = dist[rows, pos]
        rest = dist.copy()
        rest[rows, pos] = np.inf
        tie = np.min(rest, axis=1) == dmin
        return nearest, dmin, tie

    def cells_of(self, z) -> np.ndarray:
        """
        Vectorized cell assignment.

        Returns:
            Array of cell indices; -1 where the nearest generator was removed

        Raises:
            DomainError: if any |z| exceeds rho_max
        """
        z = np.atleast_1d(as_points(z)).ravel()
        if z.size and np.max(np.abs(z)) > self.rho_max:
            raise DomainError(f"Point beyond the lattice truncation radius {self.rho_max}")
        if not z.size:
            return np.zeros(0, dtype=int)
        nearest, _, _ = self._assign(z)
        return np.where(self.active[nearest], nearest, -1)

    def cell_of(self, z) -> int:
        """Index n with z in D_n"""
        index = int(self.cells_of(np.asarray([z]))[0])
        if index < 0:
            raise DomainError(f"Point {z} is not covered by any active cell")
        return index

    # ------------------------------------------------------------------
    # Properties and mutations
    # ------------------------------------------------------------------
    def separation(self) -> float:
        """Exact minimum pseudo-distance between neighbouring centers"""
        best = np.inf
        K = len(self.ring_counts)
        for q in range(K):
            start, count = self.ring_starts[q], self.ring_counts[q]
            ring = self.sites[start:start + count]
            if count > 1:
                best = min(best, float(_pseudo_distance_unchecked(ring[0], ring[1])))
            if q + 1 < K:
                outer = self.sites[self.ring_starts[q + 1]:self.ring_starts[q + 1] + self.ring_counts[q + 1]]
                m = len(outer)
                theta = np.mod(np.angle(ring) - self.ring_offsets[q + 1], 2.0 * np.pi)
                slot = np.floor(theta * m / (2.0 * np.pi)).astype(int) % m
                for s in (slot, (slot + 1) % m):
                    best = min(best, float(np.min(_pseudo_distance_unchecked(ring, outer[s]))))
        return best

    def with_radius(self, r: float) -> 'Lattice':
        """Same cells, different radius metadata"""
        return replace(self, r=check_radius(r), active=self.active.copy())

    def without_center(self, index: int) -> 'Lattice':
        """Copy with one generator removed; points of its cell become uncovered"""
        active = self.active.copy()
        active[index] = False
        return replace(self, active=active)

    def to_dict(self) -> Dict[str, Any]:
        centers = self.sites[self.active]
        return {
            'r': self.r,
            'rho_max': self.rho_max,
            'centers': [[float(c.real), float(c.imag)] for c in centers],
        }

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> 'Lattice':
        """Rebuild from exported JSON; the centers must match the ring construction"""
        lattice = build_lattice(float(data['r']), float(data['rho_max']))
        centers = np.asarray([complex(c[0], c[1]) for c in data.get('centers', [])])
        if len(centers) != len(lattice) or not np.allclose(centers, lattice.sites, atol=1e-12):
            raise LatticeConstructionError("Exported centers do not match the ring construction")
        return lattice


@dataclass
class LatticeReport:
    """Empirical check of the partition and containment properties"""
    samples: int
    coverage_violations: int
    disjointness_violations: int
    inner_containment_violations: int
    outer_containment_violations: int
    violated_cells: List[int]

    @property
    def ok(self) -> bool:
        return (self.coverage_violations == 0 and self.disjointness_violations == 0 and
                self.inner_containment_violations == 0 and self.outer_containment_violations == 0)

    def to_dict(self) -> Dict[str, Any]:
        return {
            'samples': self.samples,
            'coverage_violations': self.coverage_violations,
            'disjointness_violations': self.disjointness_violations,
            'inner_containment_violations': self.inner_containment_violations,
            'outer_containment_violations': self.outer_containment_violations,
            'violated_cells': list(self.violated_cells),
            'ok': self.ok,
        }


def _ring_count(rho: float, s: float) -> int:
    """Largest equispaced count on the circle |z| = rho with pseudo-spacing >= s"""
    x = s * (1.0 - rho * rho) / (2.0 * rho * np.sqrt(1.0 - s * s))
    if x >= 1.0:
        return 1
    delta_min = 2.0 * np.arcsin(x)
    return max(1, int(np.floor(2.0 * np.pi / delta_min)))


def build_lattice(r: float, rho_max: float) -> Lattice:
    """
    Build the ring lattice with radius r truncated at rho_max.

    Args:
        r: Lattice radius in (0, 1)
        rho_max: Truncation radius in (0, 1)

    Returns:
        Lattice whose centers avoid 0 and are ordered by increasing modulus

    Raises:
        DomainError: on invalid r or rho_max
        LatticeConstructionError: if a check point is farther than r from its center
    """
    r = check_radius(r)
    rho_max = float(rho_max)
    if not 0.0 < rho_max < 1.0 - Config.BOUNDARY_GUARD:
        raise DomainError(f"Truncation radius must lie in (0, 1), got {rho_max}")

    s = 0.5 * r * (1.0 + Config.RING_SLACK)
    beta = float(np.arctanh(s))
    if np.tanh(beta) > rho_max:
        raise LatticeConstructionError(
            f"rho_max={rho_max} is inside the first ring at {np.tanh(beta):.6f}; no center fits")

    radii, counts, offsets = [], [], []
    k = 1
    while True:
        rho = float(np.tanh(k * beta))
        if rho > rho_max:
            break
        m = _ring_count(rho, s)
        radii.append(rho)
        counts.append(m)
        offsets.append(np.pi / m if k % 2 == 0 else 0.0)
        k += 1

    ring_radii = np.asarray(radii)
    ring_counts = np.asarray(counts, dtype=int)
    ring_offsets = np.asarray(offsets)
    ring_starts = np.concatenate([[0], np.cumsum(ring_counts)[:-1]]).astype(int)

    sites = np.concatenate([
        rho * np.exp(1j * (off + 2.0 * np.pi * np.arange(m) / m))
        for rho, m, off in zip(ring_radii, ring_counts, ring_offsets)
    ])

    lattice = Lattice(r=r, rho_max=rho_max, beta=beta, sites=sites,
                      ring_radii=ring_radii, ring_starts=ring_starts,
                      ring_counts=ring_counts, ring_offsets=ring_offsets)
    _check_covering(lattice)
    logger.debug(f"Built lattice r={r} rho_max={rho_max}: {len(sites)} centers on {len(ring_radii)} rings")
    return lattice


def _check_covering(lattice: Lattice):
    """Probe the worst-case points (mid-gaps between and beyond rings) for outer containment"""
    probes = []
    for q, (m, off) in enumerate(zip(lattice.ring_counts, lattice.ring_offsets)):
        k = q + 1
        angles = off + 2.0 * np.pi * (np.arange(m) + 0.5) / m
        for step in (k - 0.5, k, k + 0.5, k + 1.0):
            rho = min(float(np.tanh(step * lattice.beta)), lattice.rho_max)
            probes.append(rho * np.exp(1j * angles))
    probes.append(np.asarray([0.0 + 0.0j]))
    points = np.concatenate(probes)
    nearest, dmin, _ = lattice._assign(points)
    bad = np.nonzero(dmin >= lattice.r)[0]
    if bad.size:
        cell = int(nearest[bad[0]])
        raise LatticeConstructionError(
            f"Cell {cell} is not contained in D(z_n, r): probe {points[bad[0]]} at distance {dmin[bad[0]]:.6f} >= r={lattice.r}",
            cell=cell)


def cell_of(lat: Lattice, z) -> int:
    """Deterministic index n with z in D_n"""
    return lat.cell_of(z)


def verify_lattice(lat: Lattice, samples: int = 100000, seed: int = Config.DEFAULT_SEED) -> LatticeReport:
    """
    Monte-Carlo check of coverage, disjointness and the two containments.

    Args:
        lat: Lattice to check
        samples: Number of uniform samples of {|z| <= rho_max}; the same
            number of points is drawn inside the r/4 disks of random centers
        seed: Seed for numpy.random.default_rng

    Returns:
        LatticeReport with all counts zero for a valid lattice
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = np.random.default_rng(seed)
    z = sample_disk(samples, lat.rho_max, rng)
    nearest, dmin, tie = lat._assign(z)
    covered = lat.active[nearest]

    coverage = int(np.count_nonzero(~covered))
    disjoint = int(np.count_nonzero(tie & covered))
    outer_bad = covered & (dmin >= lat.r)
    outer = int(np.count_nonzero(outer_bad))

    # points of D(z_n, r/4) must belong to cell n
    active_ids = np.nonzero(lat.active)[0]
    chosen = rng.choice(active_ids, size=samples)
    center, radius = pseudo_disk_parameters(lat.sites[chosen], lat.r / 4.0)
    w = center + radius * np.sqrt(rng.random(samples)) * np.exp(2j * np.pi * rng.random(samples))
    inside = np.abs(w) <= lat.rho_max
    inner_bad = np.zeros(samples, dtype=bool)
    if np.any(inside):
        cells = lat.cells_of(w[inside])
        inner_bad[inside] = cells != chosen[inside]
    inner = int(np.count_nonzero(inner_bad))

    violated = set(nearest[~covered].tolist()) | set(nearest[outer_bad].tolist()) | set(chosen[inner_bad].tolist())
    if violated:
        logger.warning(f"Lattice r={lat.r} rho_max={lat.rho_max}: {len(violated)} cells violate lattice properties")

    return LatticeReport(
        samples=samples,
        coverage_violations=coverage,
        disjointness_violations=disjoint,
        inner_containment_violations=inner,
        outer_containment_violations=outer,
        violated_cells=sorted(int(v) for v in violated)[:50],
    )

"""
Complex measures on the disk, their density families, the functionals
evaluated on them and the trend classifier that turns truncated values into
finite / infinite verdicts.
"""

from .convergence import (
    SeminormReport,
    TrendFit,
    TrendResult,
    Verdict,
    boundary_coordinate,
    classify_trend,
    make_report,
)
from .densities.base_density import BaseDensity, parse_coefficient
from .density_factory import DensityFactory
from .measure import Measure
from .functionals import (
    CarlesonProfile,
    SequenceResult,
    averaged,
    averaged_lp_norm,
    berezin,
    berezin_lp_norm,
    captured_area,
    carleson_constant,
    carleson_embedding_ratio,
    carleson_sequence_constant,
    localized,
    localized_lp_norm,
    log_moment,
    probe_radii,
    sequence_lp,
    total_mass,
)

__all__ = [
    'SeminormReport',
    'TrendFit',
    'TrendResult',
    'Verdict',
    'boundary_coordinate',
    'classify_trend',
    'make_report',
    'BaseDensity',
    'parse_coefficient',
    'DensityFactory',
    'Measure',
    'CarlesonProfile',
    'SequenceResult',
    'averaged',
    'averaged_lp_norm',
    'berezin',
    'berezin_lp_norm',
    'captured_area',
    'carleson_constant',
    'carleson_embedding_ratio',
    'carleson_sequence_constant',
    'localized',
    'localized_lp_norm',
    'log_moment',
    'probe_radii',
    'sequence_lp',
    'total_mass',
]

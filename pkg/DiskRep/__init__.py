"""
DiskRep shared infrastructure: version, configuration, errors, logging and
plugin discovery used by every toolkit package.
"""

from ._version import __version__
from .config import Config, parse_rho_list, validate_schedule
from .errors import (
    DiskRepError,
    DomainError,
    ConstraintError,
    QuadratureError,
    InfiniteMassError,
    LatticeConstructionError,
    TruncationError,
    ExperimentError,
)
from .log_manager import LogManager, MemoryLogHandler
from .plugin_factory import PluginFactory

__all__ = [
    '__version__',
    'Config',
    'parse_rho_list',
    'validate_schedule',
    'DiskRepError',
    'DomainError',
    'ConstraintError',
    'QuadratureError',
    'InfiniteMassError',
    'LatticeConstructionError',
    'TruncationError',
    'ExperimentError',
    'LogManager',
    'MemoryLogHandler',
    'PluginFactory',
]

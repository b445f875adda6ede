#!/usr/bin/env python3
"""
Density factory with automatic discovery of density families
"""

import logging
from typing import Any, Dict

from DiskRep.plugin_factory import PluginFactory
from .densities.base_density import BaseDensity

logger = logging.getLogger(__name__)


class DensityFactory(PluginFactory):
    """Factory for named density families in MeasureModel/densities"""

    _package = 'MeasureModel'
    _plugin_dir = 'densities'
    _base_class = BaseDensity
    _suffixes = ['Density']
    _kind = 'density'

    _types: Dict[str, type] = {}
    _display_names: Dict[str, str] = {}
    _discovery_complete = False

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> BaseDensity:
        """Build a density from its JSON form {"family": ..., "params": {...}}"""
        if 'family' not in data:
            raise ValueError(f"Density specification needs a 'family': {data}")
        params = dict(data.get('params') or {})
        try:
            return cls.create(data['family'], **params)
        except TypeError as e:
            raise ValueError(f"Invalid parameters for density '{data['family']}': {e}") from e

    @classmethod
    def to_dict(cls, density: BaseDensity) -> Dict[str, Any]:
        return density.to_dict(cls.key_for(density))

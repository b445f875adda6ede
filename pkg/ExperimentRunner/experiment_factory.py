#!/usr/bin/env python3
"""
Experiment factory with automatic discovery of registered experiments
"""

import logging
from typing import Dict, List

from DiskRep.errors import ExperimentError
from DiskRep.plugin_factory import PluginFactory
from .base_experiment import BaseExperiment

logger = logging.getLogger(__name__)


class ExperimentFactory(PluginFactory):
    """Factory for experiments in ExperimentRunner/experiments"""

    _package = 'ExperimentRunner'
    _plugin_dir = 'experiments'
    _base_class = BaseExperiment
    _suffixes = ['Experiment']
    _kind = 'experiment'

    _types: Dict[str, type] = {}
    _display_names: Dict[str, str] = {}
    _discovery_complete = False

    @classmethod
    def create(cls, plugin_type=None, **kwargs) -> BaseExperiment:
        if plugin_type is not None:
            plugin_type = cls.get_aliases().get(plugin_type, plugin_type)
        try:
            return super().create(plugin_type, **kwargs)
        except ValueError as e:
            raise ExperimentError(str(e)) from e

    @classmethod
    def get_claims(cls) -> Dict[str, str]:
        """Registered experiment keys with the claim each one checks"""
        cls._discover()
        return {key: cls._types[key].claim for key in sorted(cls._types)}

    @classmethod
    def get_aliases(cls) -> Dict[str, str]:
        """Alternative names -> registered experiment keys"""
        cls._discover()
        aliases = {}
        for key, experiment_class in cls._types.items():
            for alias in getattr(experiment_class, 'aliases', ()):
                if alias in cls._types or aliases.get(alias, key) != key:
                    raise ExperimentError(f"Experiment alias '{alias}' is ambiguous")
                aliases[alias] = key
        return aliases

    @classmethod
    def resolve(cls, names: List[str]) -> List[str]:
        """Expand 'all', map aliases to keys and reject unknown names"""
        available = cls.get_available_types()
        aliases = cls.get_aliases()
        resolved = []
        for name in names:
            if name == 'all':
                resolved.extend(available)
            elif name in available:
                resolved.append(name)
            elif name in aliases:
                resolved.append(aliases[name])
            else:
                raise ExperimentError(f"Unknown experiment: {name}. Available experiments: {', '.join(available)}")
        return list(dict.fromkeys(resolved))

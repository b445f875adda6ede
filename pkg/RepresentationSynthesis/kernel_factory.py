#!/usr/bin/env python3
"""
Kernel factory with automatic discovery of kernel families
"""

import json
import logging
from typing import Any, Dict, Optional

from DiskRep.plugin_factory import PluginFactory
from DiskQuadrature.quadrature import QuadratureScheme
from MeasureModel.measure import Measure
from .kernels.base_kernel import BaseKernel

logger = logging.getLogger(__name__)


class KernelFactory(PluginFactory):
    """Factory for kernel families in RepresentationSynthesis/kernels"""

    _package = 'RepresentationSynthesis'
    _plugin_dir = 'kernels'
    _base_class = BaseKernel
    _suffixes = ['Kernel']
    _kind = 'kernel'

    _types: Dict[str, type] = {}
    _display_names: Dict[str, str] = {}
    _discovery_complete = False

    @classmethod
    def build(cls, kernel_type: str, measure: Measure, scheme: Optional[QuadratureScheme] = None,
              **params) -> BaseKernel:
        """Instantiate a kernel function for ``measure``"""
        return cls.create(kernel_type, measure=measure, scheme=scheme, **params)

    @classmethod
    def from_dict(cls, data: Dict[str, Any], measure: Optional[Measure] = None) -> BaseKernel:
        """
        Build from {"kernel": ..., "params": {...}, "measure": <measure JSON or file path>}.

        An explicit ``measure`` argument wins over the embedded reference.
        """
        if 'kernel' not in data:
            raise ValueError(f"Kernel specification needs a 'kernel': {data}")
        if measure is None:
            ref = data.get('measure')
            if ref is None:
                raise ValueError("Kernel specification has no measure")
            measure = Measure.load(ref) if isinstance(ref, str) else Measure.from_dict(ref)
        params = dict(data.get('params') or {})
        try:
            return cls.build(data['kernel'], measure, **params)
        except TypeError as e:
            raise ValueError(f"Invalid parameters for kernel '{data['kernel']}': {e}") from e

    @classmethod
    def load(cls, path: str) -> BaseKernel:
        with open(path, 'r') as f:
            return cls.from_dict(json.load(f))

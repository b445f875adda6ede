"""
Experiment reports: parameters, tolerances, assertions and result tables.

Serialization is deterministic (sorted keys, fixed float formatting, no
timestamps) so re-running an experiment with the same seed reproduces the
report byte for byte.
"""

import csv
import io
import json
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, List, Optional

import numpy as np

from DiskRep.config import Config


def clean_value(value: Any) -> Any:
    """Convert numpy scalars, complex numbers and nested containers to JSON-ready values"""
    if isinstance(value, Enum):
        return value.value
    if hasattr(value, 'to_dict'):
        return clean_value(value.to_dict())
    if isinstance(value, dict):
        return {str(k): clean_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, np.ndarray)):
        return [clean_value(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return [clean_value(float(value.real)), clean_value(float(value.imag))]
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            return str(value)
        return float(f"{value:.{Config.REPORT_FLOAT_DIGITS}g}")
    return value


@dataclass
class Assertion:
    name: str
    passed: bool
    value: Any = None
    tolerance: Any = None
    detail: str = ''

    def to_dict(self) -> Dict[str, Any]:
        return {'name': self.name, 'passed': self.passed, 'value': clean_value(self.value),
                'tolerance': clean_value(self.tolerance), 'detail': self.detail}


@dataclass
class ExperimentReport:
    name: str
    display_name: str = ''
    claim: str = ''
    seed: Optional[int] = None
    parameters: Dict[str, Any] = field(default_factory=dict)
    tolerances: Dict[str, Any] = field(default_factory=dict)
    assertions: List[Assertion] = field(default_factory=list)
    results: Dict[str, Any] = field(default_factory=dict)
    tables: Dict[str, List[Dict[str, Any]]] = field(default_factory=dict)
    messages: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(a.passed for a in self.assertions)

    @property
    def failures(self) -> List[Assertion]:
        return [a for a in self.assertions if not a.passed]

    def assert_that(self, name: str, passed: bool, value: Any = None, tolerance: Any = None,
                    detail: str = '') -> bool:
        """Record an assertion; ``tolerance`` names a key of ``tolerances`` or is the bound itself"""
        if isinstance(tolerance, str) and tolerance in self.tolerances:
            tolerance = self.tolerances[tolerance]
        self.assertions.append(Assertion(name, bool(passed), value, tolerance, detail))
        return bool(passed)

    def add_result(self, key: str, value: Any):
        self.results[key] = value

    def add_rows(self, table: str, rows: List[Dict[str, Any]]):
        self.tables.setdefault(table, []).extend(rows)

    def to_dict(self) -> Dict[str, Any]:
        return clean_value({
            'name': self.name,
            'display_name': self.display_name,
            'claim': self.claim,
            'seed': self.seed,
            'passed': self.passed,
            'parameters': self.parameters,
            'tolerances': self.tolerances,
            'assertions': [a.to_dict() for a in self.assertions],
            'results': self.results,
            'tables': self.tables,
            'messages': self.messages,
        })

    def to_json(self, indent: int = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, sort_keys=True) + '\n'

    def to_csv(self) -> str:
        """Assertions and table rows flattened into one CSV with a ``table`` column"""
        rows = [dict(table='assertions', **{k: json.dumps(v) if isinstance(v, (list, dict)) else v
                                            for k, v in a.to_dict().items()})
                for a in self.assertions]
        for table in sorted(self.tables):
            for row in clean_value(self.tables[table]):
                rows.append(dict(table=table, **{k: json.dumps(v) if isinstance(v, (list, dict)) else v
                                                 for k, v in row.items()}))
        fieldnames = ['table'] + sorted({k for row in rows for k in row} - {'table'})
        buffer = io.StringIO()
        writer = csv.DictWriter(buffer, fieldnames=fieldnames, lineterminator='\n')
        writer.writeheader()
        writer.writerows(rows)
        return buffer.getvalue()

    def summary(self) -> str:
        status = 'PASS' if self.passed else 'FAIL'
        lines = [f"[{status}] {self.name}: {self.claim}"]
        for a in self.assertions:
            mark = 'ok  ' if a.passed else 'FAIL'
            value = clean_value(a.value)
            lines.append(f"    {mark} {a.name}" + (f" = {value}" if value is not None else '') +
                         (f" (tolerance {clean_value(a.tolerance)})" if a.tolerance is not None else ''))
        return '\n'.join(lines)

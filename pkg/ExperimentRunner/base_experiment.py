import logging
import threading
from abc import ABC, abstractmethod
from typing import Any, Dict, List, Optional, Tuple

from DiskRep.config import Config, parse_rho_list, validate_schedule
from DiskRep.errors import ExperimentError
from DiskRep.log_manager import MemoryLogHandler
from .report import ExperimentReport


class _ThreadFilter(logging.Filter):
    """Keeps records emitted by one thread, so parallel experiments capture only their own messages"""

    def __init__(self, thread_id: int):
        super().__init__()
        self.thread_id = thread_id

    def filter(self, record):
        return record.thread == self.thread_id


class BaseExperiment(ABC):
    """
    Base class for registered experiments.

    Subclasses declare their parameters in ``get_config_schema`` and their
    tolerances in ``tolerances``, and implement ``_run`` which fills the
    report with results and assertions. Exceptions inside ``_run`` are
    logged and recorded as a failed ``error`` assertion.
    """

    # Class attributes that should be overridden by subclasses
    display_name = "Base Experiment"
    claim = ""
    # Alternative command-line names
    aliases: Tuple[str, ...] = ()
    tolerances: Dict[str, float] = {}

    def __init__(self):
        self.type = self.__class__.__name__
        self.logger = logging.getLogger(self.__class__.__name__)
        self.params: Dict[str, Any] = {f['name']: f.get('default') for f in self.get_config_schema()['fields']}
        self.is_configured = False

    @classmethod
    def get_config_schema(cls) -> Dict[str, Any]:
        """
        Parameters of this experiment, in the field format used for CLI overrides.

        Subclasses extend ``fields`` with their own entries.
        """
        return {
            'fields': [
                {
                    'name': 'seed',
                    'label': 'Seed',
                    'type': 'integer',
                    'description': 'Seed for Monte-Carlo sampling',
                    'required': False,
                    'default': Config.DEFAULT_SEED,
                },
            ]
        }

    @classmethod
    def get_display_name(cls) -> str:
        return cls.display_name

    @staticmethod
    def _convert(field: Dict[str, Any], value: Any) -> Any:
        kind = field.get('type', 'number')
        if kind == 'integer':
            if int(value) != float(value):
                raise ExperimentError(f"Parameter '{field['name']}' must be an integer, got {value}")
            value = int(value)
        elif kind == 'number':
            value = float(value)
        elif kind == 'schedule':
            value = parse_rho_list(value) if isinstance(value, str) else validate_schedule(value)
        elif kind == 'list':
            if isinstance(value, (int, float)):
                value = (value,)
            value = tuple(float(v) for v in (value.split(',') if isinstance(value, str) else value))
        if 'min' in field and value < field['min']:
            raise ExperimentError(f"Parameter '{field['name']}'={value} is below {field['min']}")
        if 'max' in field and value > field['max']:
            raise ExperimentError(f"Parameter '{field['name']}'={value} is above {field['max']}")
        return value

    def configure(self, **overrides) -> 'BaseExperiment':
        """Validate and apply parameter overrides; None values keep the defaults"""
        fields = {f['name']: f for f in self.get_config_schema()['fields']}
        for name, value in overrides.items():
            if value is None:
                continue
            if name not in fields:
                raise ExperimentError(f"{self.display_name} has no parameter '{name}'. "
                                      f"Available: {', '.join(sorted(fields))}")
            try:
                self.params[name] = self._convert(fields[name], value)
            except (TypeError, ValueError) as e:
                raise ExperimentError(f"Invalid value for '{name}': {e}") from e
        self.is_configured = True
        return self

    def run(self, name: Optional[str] = None) -> ExperimentReport:
        """Run the experiment and return its report; never raises for numerical failures"""
        report = ExperimentReport(
            name=name or self.type,
            display_name=self.display_name,
            claim=self.claim,
            seed=self.params.get('seed'),
            parameters=dict(self.params),
            tolerances=dict(self.tolerances),
        )
        handler = MemoryLogHandler()
        handler.setLevel(logging.WARNING)
        handler.addFilter(_ThreadFilter(threading.get_ident()))
        root = logging.getLogger()
        root.addHandler(handler)
        try:
            self._run(report)
        except Exception as e:
            self.logger.error(f"Experiment {report.name} failed: {str(e)}")
            report.assert_that('error', False, detail=f"{type(e).__name__}: {e}")
        finally:
            root.removeHandler(handler)
            report.messages = handler.get_messages()
        return report

    @abstractmethod
    def _run(self, report: ExperimentReport):
        """Compute, record results and assertions - must be implemented by subclasses"""
        pass

    def __str__(self) -> str:
        return f"{self.type}(display_name={self.display_name}, params={self.params})"


def schema_with(*fields: Dict[str, Any]) -> Dict[str, Any]:
    """Base schema extended with experiment fields"""
    schema = BaseExperiment.get_config_schema()
    schema['fields'].extend(fields)
    return schema


def number_field(name: str, default: Any, description: str, kind: str = 'number', **extra) -> Dict[str, Any]:
    entry = {'name': name, 'label': name.replace('_', ' ').title(), 'type': kind,
             'description': description, 'required': False, 'default': default}
    entry.update(extra)
    return entry

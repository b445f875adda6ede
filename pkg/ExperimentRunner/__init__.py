from .base_experiment import BaseExperiment
from .experiment_factory import ExperimentFactory
from .report import Assertion, ExperimentReport, clean_value
from .report_writer import ReportWriter
from .runner import ExperimentRunner, ExperimentSpec, RunResult
from .commands import COMMANDS

# Experiments are not imported here - the factory discovers them in experiments/

__all__ = [
    'BaseExperiment',
    'ExperimentFactory',
    'Assertion',
    'ExperimentReport',
    'clean_value',
    'ReportWriter',
    'ExperimentRunner',
    'ExperimentSpec',
    'RunResult',
    'COMMANDS',
]

"""
Runs experiment specifications, optionally in parallel, and writes their reports.
"""

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from DiskRep.config import Config
from .experiment_factory import ExperimentFactory
from .report import ExperimentReport
from .report_writer import ReportWriter

logger = logging.getLogger(__name__)


@dataclass
class ExperimentSpec:
    """One experiment invocation: registered name, parameter overrides, output and seed"""
    name: str
    overrides: Dict[str, Any] = field(default_factory=dict)
    out_dir: Optional[str] = None
    formats: Tuple[str, ...] = ('json',)
    seed: Optional[int] = None
    # Overrides the experiment does not declare are an error when strict, skipped otherwise
    strict: bool = True


@dataclass
class RunResult:
    spec: ExperimentSpec
    report: ExperimentReport
    paths: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.report.passed


class ExperimentRunner:
    """Executes ExperimentSpecs on a thread pool; each report is written atomically"""

    def __init__(self, max_workers: int = Config.DEFAULT_WORKERS):
        self.logger = logging.getLogger(self.__class__.__name__)
        self.max_workers = max(1, int(max_workers))
        self._executor = ThreadPoolExecutor(max_workers=self.max_workers, thread_name_prefix="ExperimentRunner")

    def _build(self, spec: ExperimentSpec):
        experiment = ExperimentFactory.create(spec.name)
        declared = {f['name'] for f in experiment.get_config_schema()['fields']}
        overrides = dict(spec.overrides)
        if spec.seed is not None:
            overrides['seed'] = spec.seed
        if not spec.strict:
            skipped = sorted(k for k, v in overrides.items() if k not in declared and v is not None)
            if skipped:
                self.logger.info(f"{spec.name} ignores parameters: {', '.join(skipped)}")
            overrides = {k: v for k, v in overrides.items() if k in declared}
        return experiment.configure(**overrides)

    def run(self, spec: ExperimentSpec) -> RunResult:
        """Configure, run and write one experiment"""
        experiment = self._build(spec)
        self.logger.info(f"Running {spec.name} ({experiment.display_name})")
        report = experiment.run(spec.name)
        paths = ReportWriter(spec.out_dir, spec.formats).write(report) if spec.out_dir else []
        status = 'passed' if report.passed else f"failed ({len(report.failures)} assertions)"
        self.logger.info(f"{spec.name} {status}")
        return RunResult(spec=spec, report=report, paths=paths)

    def run_many(self, specs: Sequence[ExperimentSpec]) -> List[RunResult]:
        """Run independent specs concurrently; results keep the input order"""
        for spec in specs:
            # configuration errors surface before any work starts
            self._build(spec)
        futures = [self._executor.submit(self.run, spec) for spec in specs]
        return [future.result() for future in futures]

    @staticmethod
    def exit_status(results: Sequence[RunResult]) -> int:
        """0 iff every assertion of every report passed"""
        return 0 if all(r.passed for r in results) else 1

    def shutdown(self, wait: bool = True):
        self._executor.shutdown(wait=wait)

    def __enter__(self):
        return self

    def __exit__(self, exc_type, exc_val, exc_tb):
        self.shutdown()

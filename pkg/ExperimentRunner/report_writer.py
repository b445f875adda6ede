import logging
import os
import tempfile
from pathlib import Path
from typing import Callable, Dict, Iterable, List

from .report import ExperimentReport

FORMATS = ('json', 'csv')


class ReportWriter:
    """Writes <name>.json / <name>.csv into a folder, atomically"""

    def __init__(self, folder: str, formats: Iterable[str] = ('json',)):
        self.logger = logging.getLogger(self.__class__.__name__)
        self.formats = [f.lower().lstrip('.') for f in formats]
        for fmt in self.formats:
            if fmt not in FORMATS:
                raise ValueError(f"Unsupported report format: {fmt}. Available formats: {', '.join(FORMATS)}")
        self.folder = str(Path(os.path.normpath(folder)).resolve())
        os.makedirs(self.folder, exist_ok=True)
        self.logger.info(f"Report folder configured: {self.folder}")

    def _write_atomic(self, path: str, text: str):
        """Write to a temp file in the same folder, then replace, so readers never see partial reports"""
        fd, tmp_path = tempfile.mkstemp(dir=self.folder, prefix='.tmp_', suffix=os.path.basename(path))
        try:
            with os.fdopen(fd, 'w', newline='') as f:
                f.write(text)
            os.replace(tmp_path, path)
        except Exception:
            if os.path.exists(tmp_path):
                os.remove(tmp_path)
            raise

    def write(self, report: ExperimentReport) -> List[str]:
        paths = []
        renderers: Dict[str, Callable[[], str]] = {'json': report.to_json, 'csv': report.to_csv}
        for fmt in self.formats:
            path = os.path.join(self.folder, f"{report.name}.{fmt}")
            self._write_atomic(path, renderers[fmt]())
            self.logger.debug(f"Wrote report: {path}")
            paths.append(path)
        return paths

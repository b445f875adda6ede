"""
Logging setup for the command line and in-memory capture for reports.

Experiments attach the warnings raised while they ran to their report; the
memory handler keeps records without timestamps so reports stay
reproducible.
"""

import logging
import logging.handlers
import os
import threading
from collections import deque
from dataclasses import dataclass
from typing import List, Optional

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
FILE_LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(funcName)s:%(lineno)d - %(message)s'
LOG_FILE_NAME = 'diskrep.log'


@dataclass(frozen=True)
class LogEntry:
    level: str
    logger: str
    message: str


class MemoryLogHandler(logging.Handler):
    """Keeps the most recent records in a bounded buffer"""

    def __init__(self, max_logs: int = 1000):
        super().__init__()
        self.max_logs = max_logs
        self.logs = deque(maxlen=max_logs)
        self._lock = threading.RLock()

    def emit(self, record):
        try:
            entry = LogEntry(level=record.levelname, logger=record.name, message=record.getMessage())
            with self._lock:
                self.logs.append(entry)
        except Exception:
            self.handleError(record)

    def get_messages(self, min_level: int = logging.WARNING) -> List[str]:
        """'LEVEL: message' lines at or above min_level, oldest first"""
        with self._lock:
            entries = list(self.logs)
        return [f"{e.level}: {e.message}" for e in entries
                if logging.getLevelName(e.level) >= min_level]


class LogManager:
    """Installs console and optional rotating-file handlers on the root logger"""

    def __init__(self):
        self.file_handler: Optional[logging.Handler] = None
        self.log_level = logging.WARNING
        self.log_dir: Optional[str] = None
        self.max_log_size_mb = 10

    @staticmethod
    def _level(name: str) -> int:
        return getattr(logging, str(name).upper(), logging.WARNING)

    def setup_logging(self, log_level: str = 'WARNING',
                      enable_file_logging: bool = False,
                      log_dir: Optional[str] = None):
        self.log_level = self._level(log_level)
        root = logging.getLogger()
        root.setLevel(self.log_level)

        has_console = any(type(h) is logging.StreamHandler for h in root.handlers)
        if not has_console:
            console = logging.StreamHandler()
            console.setFormatter(logging.Formatter(LOG_FORMAT))
            root.addHandler(console)

        self.log_dir = log_dir
        if enable_file_logging:
            self._start_file_logging()

    def _start_file_logging(self):
        log_dir = self.log_dir or os.path.join(os.getcwd(), 'logs')
        try:
            os.makedirs(log_dir, exist_ok=True)
            handler = logging.handlers.RotatingFileHandler(
                os.path.join(log_dir, LOG_FILE_NAME),
                maxBytes=self.max_log_size_mb * 1024 * 1024,
                backupCount=5)
        except OSError as e:
            logging.getLogger(__name__).error(f"Failed to set up file logging in {log_dir}: {e}")
            return
        handler.setLevel(self.log_level)
        handler.setFormatter(logging.Formatter(FILE_LOG_FORMAT))
        logging.getLogger().addHandler(handler)
        self.file_handler = handler

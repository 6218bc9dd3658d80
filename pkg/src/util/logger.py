import logging
import sys
from pathlib import Path
from typing import Dict, Optional, Union

from src.config.app_config import AppConfig


class WorkbenchLogger:
    """Logger for workbench runs, writes to stderr so stdout stays for reports"""

    _instance: Optional["WorkbenchLogger"] = None

    def __new__(cls):
        """Singleton pattern"""
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __init__(self):
        """Initialize logger if not already initialized"""
        if not hasattr(self, "logger"):
            self.config = AppConfig()
            self.logger = logging.getLogger(self.config.LOG_NAME)
            self.handlers: Dict[str, logging.Handler] = {}
            self._setup_logger()

    def _setup_logger(self):
        """Setup logging configuration"""
        self.logger.setLevel(logging.DEBUG)
        self.logger.propagate = False
        self.formatter = logging.Formatter(
            self.config.LOG_FORMAT, datefmt=self.config.LOG_DATEFMT
        )

        # Console handler for immediate feedback
        console = logging.StreamHandler(sys.stderr)
        console.setLevel(self.config.LOG_LEVEL)
        console.setFormatter(self.formatter)
        self.handlers["console"] = console
        self.logger.addHandler(console)

    def set_level(self, level: Union[int, str]):
        """Change console verbosity"""
        if isinstance(level, str):
            level = logging.getLevelName(level.upper())
        self.handlers["console"].setLevel(level)

    def add_file_handler(self, path: Union[str, Path]):
        """Mirror every record, debug included, into a log file"""
        path = Path(path)
        path.parent.mkdir(parents=True, exist_ok=True)
        old = self.handlers.pop("file", None)
        if old is not None:
            self.logger.removeHandler(old)
            old.close()
        handler = logging.FileHandler(path, encoding="utf-8")
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(self.formatter)
        self.handlers["file"] = handler
        self.logger.addHandler(handler)

    def log_command(self, name: str, seed: Optional[int]):
        """Log start of a CLI command"""
        self.info(f"Running {name} (seed={seed})")

    def log_census(self, n: int, count: int, elapsed: float):
        """Log census outcome"""
        self.info(f"Census on {n} points: {count} structures in {elapsed:.2f}s")

    def log_search(self, kind: str, explored: int, budget: int):
        """Log how much of a search budget was used"""
        self.debug(f"{kind}: explored {explored} of budget {budget}")
        if explored > budget * 0.8:
            self.warning(f"{kind} used {explored}/{budget} of its budget")

    def log_budget_exceeded(self, kind: str, budget: int):
        """Log a search that ran out of budget"""
        self.warning(f"{kind} exceeded budget {budget}")

    def log_timing(self, name: str, elapsed: float):
        """Log elapsed wall time"""
        self.info(f"{name} finished in {elapsed:.3f}s")

    def debug(self, msg: str):
        """Log debug message"""
        self.logger.debug(msg)

    def info(self, msg: str):
        """Log info message"""
        self.logger.info(msg)

    def warning(self, msg: str):
        """Log warning message"""
        self.logger.warning(msg)

    def error(self, msg: str):
        """Log error message"""
        self.logger.error(msg)

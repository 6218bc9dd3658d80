import sys
from pathlib import Path
from typing import Optional, TextIO, Union

from src.model.report import RunReport
from src.model.structure import Structure
from src.util.codec import write_text
from src.util.logger import WorkbenchLogger
from src.view.view_interfaces import ReportViewInterface


class ReportView(ReportViewInterface):
    """Writes reports as canonical JSON to files or stdout, diagnostics to stderr"""

    def __init__(
        self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None
    ):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.logger = WorkbenchLogger()

    def show_report(self, report: RunReport, out: Optional[Union[str, Path]] = None):
        text = report.to_json()
        if out is None:
            self.stdout.write(text)
            self.stdout.flush()
        else:
            write_text(out, text)
            self.logger.info(f"Report written to {out}")

    def write_structure(self, structure: Structure, path: Union[str, Path]):
        write_text(path, structure.to_json())
        self.logger.info(f"Structure written to {path}")

    def write_dot(self, text: str, path: Union[str, Path]):
        write_text(path, text)
        self.logger.info(f"DOT digraph written to {path}")

    def show_error(self, message: str):
        self.logger.error(message)
        self.stderr.write(f"error: {message}\n")
        self.stderr.flush()

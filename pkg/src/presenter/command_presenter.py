import time
from pathlib import Path
from typing import Any, Dict, Optional

from src.config.constant import CatalogConstants, ExitCode
from src.model.class_spec import ClassSpec
from src.model.errors import BudgetExceededError, InvalidStructureError, WorkbenchError
from src.model.report import RunReport
from src.model.structure import Structure
from src.util.codec import digest, load_json
from src.util.logger import WorkbenchLogger


class CommandPresenter:
    """Base presenter.

    Loads inputs and records their digests. Failures become exit codes.
    """

    name = "command"

    def __init__(self, view):
        """Initialize the presenter

        Args:
            view: Report view receiving reports, files and errors
        """
        self.view = view
        self.logger = WorkbenchLogger()
        self.inputs: Dict[str, str] = {}

    def execute(self, args) -> int:
        """Run the command, turning failures into exit codes"""
        self.inputs = {}
        self.logger.log_command(self.name, getattr(args, "seed", None))
        start = time.perf_counter()
        try:
            return self.run(args)
        except BudgetExceededError as e:
            self.view.show_error(str(e))
            return ExitCode.BUDGET
        except (WorkbenchError, ValueError, OSError) as e:
            self.view.show_error(str(e))
            return ExitCode.USAGE
        finally:
            if getattr(args, "timing", False):
                self.logger.log_timing(self.name, time.perf_counter() - start)

    def run(self, args) -> int:
        raise NotImplementedError

    # Inputs

    def load_structure(self, path: Optional[str], key: str = "structure") -> Structure:
        if path is None:
            raise InvalidStructureError(f"{self.name} needs --in STRUCTURE")
        structure = Structure.from_dict(load_json(path))
        self.inputs[key] = digest(structure.to_dict())
        return structure

    def load_class(self, ref: Optional[str]) -> ClassSpec:
        """Class from a JSON file, or from the catalog by name"""
        if ref is None:
            raise InvalidStructureError(f"{self.name} needs --class FILE|NAME")
        if Path(ref).is_file():
            spec = ClassSpec.from_dict(load_json(ref))
        elif ref in CatalogConstants.CLASSES:
            spec = ClassSpec.from_catalog(ref)
        else:
            raise InvalidStructureError(f"no class file or catalog entry named '{ref}'")
        self.inputs["class"] = digest(spec.to_dict())
        return spec

    # Output

    def emit(
        self,
        args,
        command: Dict[str, Any],
        results: Dict[str, Any],
        seed=None,
        out=None,
    ):
        report = RunReport(
            {"name": self.name, **command}, dict(self.inputs), seed, results
        )
        self.view.show_report(
            report, out if out is not None else getattr(args, "out", None)
        )

from typing import Any, Dict, Optional

from src.config.constant import ExitCode, Guarantee
from src.model.class_spec import certificates, member
from src.model.errors import BudgetExceededError
from src.model.extremal import is_maximal, is_minimal
from src.model.morphism import (
    is_reversible,
    is_strongly_reversible,
    is_weakly_reversible,
)
from src.model.structure import Structure
from src.presenter.command_presenter import CommandPresenter


class CheckPresenter(CommandPresenter):
    """Presenter for membership and extremality checks of one structure"""

    name = "check"

    def run(self, args) -> int:
        structure = self.load_structure(args.input)
        spec = self.load_class(args.spec)
        is_member = member(structure, spec)
        results: Dict[str, Any] = {"member": is_member, "closure": certificates(spec)}
        passed = is_member
        inconclusive = False

        requested = [
            ("maximal", args.max, is_maximal),
            ("minimal", args.min, is_minimal),
        ]
        for label, wanted, check in requested:
            if not wanted:
                continue
            if not is_member:
                results[label] = None
                continue
            report = check(structure, spec, args.mode)
            results[label] = report.to_dict()
            passed = passed and report.certified
            inconclusive = inconclusive or report.guarantee == Guarantee.INCONCLUSIVE

        # Reported only, never part of the exit status
        results["reversibility"] = self._reversibility(structure)

        command = {"mode": args.mode, "max": args.max, "min": args.min}
        self.emit(args, command, results)
        if inconclusive:
            return ExitCode.BUDGET
        return ExitCode.OK if passed else ExitCode.FALSE

    def _reversibility(self, structure: Structure) -> Optional[Dict[str, bool]]:
        try:
            return {
                "reversible": is_reversible(structure),
                "strongly_reversible": is_strongly_reversible(structure),
                "weakly_reversible": is_weakly_reversible(structure),
            }
        except BudgetExceededError as e:
            self.logger.warning(f"Reversibility skipped: {e}")
            return None

import json
from typing import Any, Dict

from src.config.constant import ExitCode
from src.model.errors import InvalidStructureError
from src.model.formula_class import classify, transform_c, transform_neg
from src.model.formula_eval import evaluate
from src.model.formula_parser import parse, serialize
from src.presenter.command_presenter import CommandPresenter


class FormulaPresenter(CommandPresenter):
    """Presenter for parsing, classifying, transforming and evaluating formulas"""

    name = "formula"

    ACTIONS = ("parse", "classify", "c", "neg", "eval")

    def run(self, args) -> int:
        phi = parse(args.text)
        results: Dict[str, Any] = {"formula": serialize(phi)}
        code = ExitCode.OK
        if args.action == "classify":
            results["classes"] = classify(phi).to_dict()
        elif args.action == "c":
            results["transformed"] = serialize(transform_c(phi))
        elif args.action == "neg":
            results["transformed"] = serialize(transform_neg(phi))
        elif args.action == "eval":
            structure = self.load_structure(args.input)
            valuation = self._valuation(args.valuation)
            value = evaluate(phi, structure, valuation)
            results["valuation"] = {str(v): x for v, x in sorted(valuation.items())}
            results["value"] = value
            code = ExitCode.OK if value else ExitCode.FALSE
        self.emit(args, {"action": args.action}, results)
        return code

    @staticmethod
    def _valuation(text):
        """Valuation given as a JSON object {"0": 1, ...} or a list [x0, x1, ...]"""
        if not text:
            return {}
        try:
            data = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidStructureError(f"valuation is not JSON ({e})")
        if isinstance(data, list):
            data = dict(enumerate(data))
        if not isinstance(data, dict):
            raise InvalidStructureError("valuation must be a JSON object or list")
        try:
            return {int(v): int(x) for v, x in data.items()}
        except (TypeError, ValueError):
            raise InvalidStructureError(
                "valuation maps variable indices to domain points"
            )

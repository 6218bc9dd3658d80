from typing import Any, Dict

from src.config.constant import ExitCode
from src.model.condorder import (
    complement_antitone,
    cond_census,
    is_partial_order_quotient,
    is_preorder,
    respects_inclusion,
    to_dot,
    verify_antichain,
    verify_convexity,
)
from src.model.structure import Signature
from src.presenter.command_presenter import CommandPresenter


class CondOrderPresenter(CommandPresenter):
    """Presenter for the condensation-order census"""

    name = "condorder"

    def run(self, args) -> int:
        signature = Signature(tuple(args.signature))
        census = cond_census(
            args.n,
            signature,
            workers=args.workers,
            seed=args.seed,
            progress=args.progress,
        )
        results: Dict[str, Any] = {"census": census.to_dict()}
        passed = True
        if args.verify:
            checks = {
                "preorder": is_preorder(census),
                "partial_order_quotient": is_partial_order_quotient(census),
                "complement_antitone": complement_antitone(census),
            }
            if not census.sampled:
                checks["respects_inclusion"] = respects_inclusion(census)
                checks["convexity"] = verify_convexity(census)
                checks["antichain"] = verify_antichain(census)
            results["verification"] = checks
            passed = all(checks.values())
        if args.dot:
            self.view.write_dot(to_dot(census), args.dot)

        command = {"n": args.n, "signature": signature.to_list(), "verify": args.verify}
        self.emit(args, command, results, seed=census.seed)
        return ExitCode.OK if passed else ExitCode.FALSE

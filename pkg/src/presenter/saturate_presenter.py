from src.config.constant import Direction, ExitCode, Guarantee
from src.model.extremal import is_maximal, is_minimal, saturate
from src.presenter.command_presenter import CommandPresenter


class SaturatePresenter(CommandPresenter):
    """Presenter for greedy saturation inside a class"""

    name = "saturate"

    def run(self, args) -> int:
        structure = self.load_structure(args.input)
        spec = self.load_class(args.spec)
        tie_break = "lex" if args.seed is None else "random"
        result = saturate(structure, spec, args.dir, tie_break, args.seed)
        check = is_maximal if args.dir == Direction.UP else is_minimal
        report = check(result, spec, args.mode)

        if args.out:
            self.view.write_structure(result, args.out)
        results = {"structure": result.to_dict(), "extreme": report.to_dict()}
        command = {"dir": args.dir, "tie_break": tie_break, "mode": args.mode}
        self.emit(args, command, results, seed=args.seed, out=args.report)
        if report.guarantee == Guarantee.INCONCLUSIVE:
            return ExitCode.BUDGET
        return ExitCode.OK

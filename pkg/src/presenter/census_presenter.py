from src.config.constant import CensusWhat, ExitCode
from src.model.census import census
from src.presenter.command_presenter import CommandPresenter


class CensusPresenter(CommandPresenter):
    """Presenter for class censuses on a fixed domain"""

    name = "census"

    def run(self, args) -> int:
        spec = self.load_class(args.spec)
        what = CensusWhat.ALL
        if args.max:
            what = CensusWhat.MAX
        elif args.min:
            what = CensusWhat.MIN
        members = census(
            args.n,
            spec,
            what=what,
            up_to_iso=args.up_to_iso,
            workers=args.workers,
            progress=args.progress,
        )
        results = {"count": len(members), "structures": [s.to_dict() for s in members]}
        # workers is left out: the output does not depend on it
        command = {"n": args.n, "what": what, "up_to_iso": args.up_to_iso}
        self.emit(args, command, results)
        return ExitCode.OK

import argparse
import sys
from typing import List, Optional

from src.config.app_config import AppConfig
from src.config.constant import Direction, ExitCode, SearchMode
from src.presenter import (
    CensusPresenter,
    CheckPresenter,
    CondOrderPresenter,
    FormulaPresenter,
    GalleryPresenter,
    SaturatePresenter,
)
from src.util.logger import WorkbenchLogger
from src.view.report_view import ReportView

REPORT_HELP = "report file (default: stdout); --out gets the structure"


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        )


class App:
    """Command-line workbench for extremal interpretations of finite structures"""

    def __init__(self, view=None):
        """Initialize configuration, view, presenters and the argument parser"""
        self.config = AppConfig()
        self.logger = WorkbenchLogger()
        self.view = view or ReportView()
        self.presenters = self._setup_presenters()
        self.parser = self._setup_parser()

    def _setup_presenters(self):
        """Initialize all presenters"""
        return {
            "check": CheckPresenter(self.view),
            "saturate": SaturatePresenter(self.view),
            "census": CensusPresenter(self.view),
            "gallery": GalleryPresenter(self.view),
            "condorder": CondOrderPresenter(self.view),
            "formula": FormulaPresenter(self.view),
        }

    def _common_options(self) -> argparse.ArgumentParser:
        """Flags shared by every subcommand"""
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument("--out", help="output file (default: stdout)")
        common.add_argument("--seed", type=int, help="seed for randomized steps")
        common.add_argument(
            "--budget", type=int, help="search budget (nodes / candidates)"
        )
        common.add_argument("--log-file", help="mirror log records into this file")
        common.add_argument(
            "--progress", action="store_true", help="progress bars on stderr"
        )
        common.add_argument("--timing", action="store_true", help="log elapsed time")
        common.add_argument(
            "-v", "--verbose", action="store_true", help="debug logging"
        )
        return common

    def _setup_parser(self) -> argparse.ArgumentParser:
        common = self._common_options()
        parser = argparse.ArgumentParser(
            prog="extremal",
            description="Maximal and minimal interpretations of finite structures",
        )
        parser.add_argument(
            "--version", action="version", version=self.config.APP_VERSION
        )
        commands = parser.add_subparsers(dest="command", required=True)

        def add_command(name: str, summary: str) -> argparse.ArgumentParser:
            return commands.add_parser(name, parents=[common], help=summary)

        def add_class_options(sub, with_input: bool = True):
            if with_input:
                sub.add_argument("--in", dest="input", help="structure JSON file")
            sub.add_argument(
                "--class", dest="spec", help="class JSON file or catalog name"
            )

        def add_mode(sub):
            sub.add_argument(
                "--mode",
                choices=(SearchMode.LOCAL, SearchMode.EXACT),
                default=SearchMode.EXACT,
            )

        check = add_command("check", "membership and extremality")
        add_class_options(check)
        add_mode(check)
        check.add_argument("--max", action="store_true", help="require maximality")
        check.add_argument("--min", action="store_true", help="require minimality")

        saturate = add_command("saturate", "extend or shrink inside a class")
        add_class_options(saturate)
        add_mode(saturate)
        saturate.add_argument(
            "--dir", choices=(Direction.UP, Direction.DOWN), default=Direction.UP
        )
        saturate.add_argument("--report", help=REPORT_HELP)

        census = add_command("census", "enumerate class members")
        add_class_options(census, with_input=False)
        census.add_argument("--n", type=int, required=True, help="domain size")
        extreme = census.add_mutually_exclusive_group()
        extreme.add_argument("--max", action="store_true", help="maximal members only")
        extreme.add_argument("--min", action="store_true", help="minimal members only")
        census.add_argument(
            "--up-to-iso", action="store_true", help="one member per iso class"
        )
        census.add_argument(
            "--workers", type=int, default=1, help="worker processes (0: all CPUs)"
        )

        gallery = add_command("gallery", "named structures")
        gallery.add_argument("kind", choices=GalleryPresenter.KINDS)
        gallery.add_argument("--n", type=int, help="order (leaf count for star)")
        gallery.add_argument(
            "--sizes", type=_int_list, help="cloud / part sizes, e.g. 2,3"
        )
        gallery.add_argument(
            "--loops", type=_int_list, help="loop vertices for reflexivized"
        )
        gallery.add_argument("--in", dest="input", help="base graph for blowup")
        gallery.add_argument("--report", help=REPORT_HELP)

        condorder = add_command("condorder", "condensation order census")
        condorder.add_argument("--n", type=int, required=True, help="domain size")
        condorder.add_argument(
            "--signature",
            type=_int_list,
            default=[2],
            help="symbol arities, e.g. 2 or 1,2",
        )
        condorder.add_argument(
            "--workers", type=int, default=1, help="worker processes"
        )
        condorder.add_argument(
            "--verify", action="store_true", help="run the order checks"
        )
        condorder.add_argument("--dot", help="write the Hasse diagram as DOT")

        formula = add_command("formula", "formula tools")
        formula.add_argument("action", choices=FormulaPresenter.ACTIONS)
        formula.add_argument("text", help='formula text, e.g. "A v0 . ~R0(v0,v0)"')
        formula.add_argument("--in", dest="input", help="structure for eval")
        formula.add_argument(
            "--valuation", help='JSON valuation for eval, e.g. {"0": 1}'
        )
        return parser

    def _apply_globals(self, args):
        """Apply logging and budget flags"""
        self.config.reset()
        self.config.override(CENSUS_BUDGET=args.budget, EXACT_BUDGET=args.budget)
        if args.verbose:
            self.logger.set_level("DEBUG")
        else:
            self.logger.set_level(self.config.LOG_LEVEL)
        if args.log_file:
            self.logger.add_file_handler(args.log_file)

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Parse argv, run one command and return its exit code"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return ExitCode.OK if e.code in (0, None) else ExitCode.USAGE
        if args.budget is not None and args.budget < 1:
            self.view.show_error("--budget must be positive")
            return ExitCode.USAGE
        try:
            self._apply_globals(args)
        except ValueError as e:
            self.view.show_error(str(e))
            return ExitCode.USAGE
        return self.presenters[args.command].execute(args)


def main(argv: Optional[List[str]] = None) -> int:
    return App().run(argv)


if __name__ == "__main__":
    sys.exit(main())

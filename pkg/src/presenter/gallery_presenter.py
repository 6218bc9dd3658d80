from typing import Any, Dict

from src.config.constant import ExitCode
from src.model import gallery
from src.model.errors import PreconditionError
from src.model.structure import Structure
from src.presenter.command_presenter import CommandPresenter


class GalleryPresenter(CommandPresenter):
    """Presenter for the named-structure constructors"""

    name = "gallery"

    KINDS = (
        "cycle",
        "path",
        "complete",
        "empty",
        "star",
        "multipartite",
        "blowup",
        "tournament",
        "reflexivized",
    )

    def run(self, args) -> int:
        structure = self.build(args)
        if args.out:
            self.view.write_structure(structure, args.out)
        command: Dict[str, Any] = {"kind": args.kind, "n": args.n, "sizes": args.sizes}
        if args.kind == "reflexivized":
            command["loops"] = args.loops
        self.emit(
            args,
            command,
            {"structure": structure.to_dict()},
            seed=args.seed,
            out=args.report,
        )
        return ExitCode.OK

    def build(self, args) -> Structure:
        kind = args.kind
        if kind in ("multipartite", "blowup"):
            if not args.sizes:
                raise PreconditionError(f"gallery {kind} needs --sizes")
            if kind == "multipartite":
                return gallery.complete_multipartite(args.sizes)
            return gallery.blowup(self.load_structure(args.input), args.sizes)
        if args.n is None:
            raise PreconditionError(f"gallery {kind} needs --n")
        if kind == "tournament":
            if args.seed is None:
                return gallery.transitive_tournament(args.n)
            return gallery.random_tournament(args.n, args.seed)
        if kind == "reflexivized":
            return gallery.reflexivized_tournament(args.n, args.loops or [], args.seed)
        constructors = {
            "cycle": gallery.cycle,
            "path": gallery.path,
            "complete": gallery.complete,
            "empty": gallery.empty_graph,
            "star": gallery.star,
        }
        return constructors[kind](args.n)

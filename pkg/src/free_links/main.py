"""Main CLI entry point for free links."""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

from . import __version__
from .brackets import (
    bracket_curly,
    bracket_curly2,
    bracket_square,
    bracket_square_or,
    bracket_two_component,
    delta,
)
from .canonical import canonical_code
from .config import load_config
from .errors import DiagramParseError, FreeLinksError
from .gauss_code import emit_diagram, parse_diagram, read_diagram_file, relabel
from .invertibility import (
    KNOT_DELTA_THEOREM,
    LINK_THEOREM,
    LONG_THEOREM,
    beta_sequence,
    builtin_example_knot,
    builtin_example_link,
    check_link_theorem,
    check_long_theorem,
    knot_noninvertibility_via_delta,
    search_long_example,
)
from .logger import get_logger, setup_logging
from .models import Config as ConfigModel
from .models import Diagram, MoveKind, Parity, ParityKind, Report, Verdict
from .moves import bfs_equivalence, find_moves, is_irreducible_r2, reduce_r2
from .parity import default_parity_kind, parities
from .ui import (
    display_error,
    display_examples_table,
    display_info,
    display_success,
    print_report,
    set_quiet,
)

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2

BRACKETS: Dict[str, Callable] = {
    "curly": bracket_curly,
    "square": bracket_square,
    "square-or": bracket_square_or,
    "curly2": bracket_curly2,
    "curly2-plain": bracket_two_component,
}

Outcome = Tuple[Any, int]


def _read_diagram(args: argparse.Namespace, text: Optional[str] = None) -> Diagram:
    """Parse the diagram argument (or file) and renumber labels by first occurrence."""
    if text is None:
        text = getattr(args, "diagram", None)
    file = getattr(args, "file", None)
    if file is not None:
        return relabel(read_diagram_file(Path(file)))
    if not text:
        raise DiagramParseError("No diagram given (pass it as an argument or with --file)")
    return relabel(parse_diagram(text))


def run_canon(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    return canonical_code(diagram), EXIT_OK


def run_reduce(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    reduced = reduce_r2(diagram)
    return {
        "irreducible": is_irreducible_r2(diagram),
        "reduced": emit_diagram(reduced),
        "crossings_removed": diagram.crossing_count - reduced.crossing_count,
    }, EXIT_OK


def run_parity(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    kind = ParityKind(args.kind) if args.kind else default_parity_kind(diagram)
    table = parities(diagram, kind)
    return {
        "kind": kind.value,
        "parities": {str(x): p.value for x, p in table.items()},
    }, EXIT_OK


def run_moves(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    kinds = None
    if args.kinds:
        try:
            kinds = {MoveKind(k.strip()) for k in args.kinds.split(",") if k.strip()}
        except ValueError as e:
            raise FreeLinksError(f"Unknown move kind in {args.kinds!r}") from e
    return [m.to_json_dict() for m in find_moves(diagram, kinds)], EXIT_OK


def run_bfs(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    d1 = _read_diagram(args, args.diagram)
    d2 = relabel(parse_diagram(args.target))
    max_crossings = args.max_crossings if args.max_crossings is not None else config.bfs_max_crossings
    max_depth = args.max_depth if args.max_depth is not None else config.bfs_max_depth
    path = bfs_equivalence(d1, d2, max_crossings=max_crossings, max_depth=max_depth)
    if path is None:
        display_info(f"No path within {max_crossings} crossings and {max_depth} moves")
        return {"found": False, "path": None, "target": emit_diagram(d2)}, EXIT_OK
    return {
        "found": True,
        "length": len(path),
        "path": [step.to_json_dict() for step in path],
        "target": emit_diagram(d2),
    }, EXIT_OK


def run_bracket(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    value = BRACKETS[args.kind](diagram, max_crossings=config.max_smoothing_crossings)
    return value.to_json_dict(), EXIT_OK


def run_delta(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    parity = Parity(args.parity) if args.parity else None
    return delta(diagram, parity).to_json_dict(), EXIT_OK


def run_beta(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    return beta_sequence(diagram, swap=args.swap).to_json_dict(), EXIT_OK


def run_certify(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    diagram = _read_diagram(args)
    limit = config.max_smoothing_crossings
    if args.theorem == LONG_THEOREM:
        certificate = check_long_theorem(diagram, max_crossings=limit)
    elif args.theorem == LINK_THEOREM:
        certificate = check_link_theorem(diagram, max_crossings=limit)
    else:
        certificate = knot_noninvertibility_via_delta(diagram, max_crossings=limit)

    if certificate.verdict == Verdict.NON_INVERTIBLE:
        display_success(f"{args.theorem}: {certificate.verdict.value}")
        return certificate.to_json_dict(), EXIT_OK
    display_info(f"{args.theorem}: {certificate.verdict.value}")
    return certificate.to_json_dict(), EXIT_INCONCLUSIVE


def run_examples(args: argparse.Namespace, config: ConfigModel) -> Outcome:
    link = builtin_example_link()
    knot = builtin_example_knot()
    bound = args.max_crossings if args.max_crossings is not None else config.examples_search_crossings
    if bound > config.search_max_crossings:
        raise FreeLinksError(
            f"Search bound {bound} exceeds FREE_LINKS_SEARCH_MAX_CROSSINGS="
            f"{config.search_max_crossings}"
        )
    witness = search_long_example(bound)
    result = {
        "link": emit_diagram(link),
        "knot": emit_diagram(knot),
        "long_witness": emit_diagram(witness) if witness is not None else None,
    }
    display_examples_table(
        [
            {
                "name": "L",
                "code": result["link"],
                "note": "two-component link, first component oriented",
            },
            {"name": "K", "code": result["knot"], "note": "splitting at chord 1 gives L"},
            {
                "name": "long",
                "code": result["long_witness"],
                "note": f"searched up to {bound} crossings",
            },
        ]
    )
    return result, EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with one subcommand per operation."""
    common = argparse.ArgumentParser(add_help=False)
    # SUPPRESS keeps a subcommand from resetting a flag given before it
    common.add_argument(
        "--json-only",
        action="store_true",
        default=argparse.SUPPRESS,
        help="Suppress diagnostics on stderr",
    )

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument(
        "diagram", nargs="?", help="Gauss code, e.g. \"@ordered +1 2 3 ; 1 ; 2 ; 3\""
    )
    source.add_argument(
        "--file", "-f", help="Read the diagram from the first non-comment line of a file"
    )

    parser = argparse.ArgumentParser(
        prog="free-links",
        description="Free knots and links: moves, parity brackets and non-invertibility certificates",
        parents=[common],
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("canon", parents=[common, source], help="Canonical form")
    p.set_defaults(handler=run_canon)

    p = sub.add_parser("reduce", parents=[common, source], help="Reduce by decreasing second moves")
    p.set_defaults(handler=run_reduce)

    p = sub.add_parser("parity", parents=[common, source], help="Parity of every crossing")
    p.add_argument("--kind", choices=[k.value for k in ParityKind], help="Default: by component count")
    p.set_defaults(handler=run_parity)

    p = sub.add_parser("moves", parents=[common, source], help="Enumerate move instances")
    p.add_argument("--kinds", help="Comma-separated subset of " + ",".join(k.value for k in MoveKind))
    p.set_defaults(handler=run_moves)

    p = sub.add_parser("bfs", parents=[common], help="Search a move path between two diagrams")
    p.add_argument("diagram", help="Start diagram")
    p.add_argument("target", help="Target diagram")
    p.add_argument("--max-crossings", type=int, help="Crossing bound for intermediate diagrams")
    p.add_argument("--max-depth", type=int, help="Maximum number of moves")
    p.set_defaults(handler=run_bfs, file=None)

    p = sub.add_parser("bracket", parents=[common, source], help="Evaluate a bracket invariant")
    p.add_argument("--kind", choices=sorted(BRACKETS), default="curly")
    p.set_defaults(handler=run_bracket)

    p = sub.add_parser("delta", parents=[common, source], help="Splitting map of a knot")
    p.add_argument("--parity", choices=[p.value for p in Parity], help="Only crossings of this parity")
    p.set_defaults(handler=run_delta)

    p = sub.add_parser("beta", parents=[common, source], help="Distance sequence of a link")
    p.add_argument("--swap", action="store_true", help="Exchange the roles of the components")
    p.set_defaults(handler=run_beta)

    p = sub.add_parser("certify", parents=[common, source], help="Check a non-invertibility theorem")
    p.add_argument(
        "--theorem",
        choices=[LONG_THEOREM, LINK_THEOREM, KNOT_DELTA_THEOREM],
        required=True,
    )
    p.set_defaults(handler=run_certify)

    p = sub.add_parser("examples", parents=[common], help="Print the built-in examples")
    p.add_argument("--max-crossings", type=int, help="Bound for the long-knot search")
    p.set_defaults(handler=run_examples)

    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """
    Main CLI entry point for free links.

    Args:
        argv: Argument list; defaults to ``sys.argv[1:]``

    Returns:
        Exit code: 0 for success, 1 for errors, 2 for an inconclusive certificate
    """
    parser = build_parser()
    args = parser.parse_args(argv)
    json_only = getattr(args, "json_only", False)
    set_quiet(json_only)

    try:
        config = load_config()
    except (ValueError, FileNotFoundError) as e:
        display_error(f"Configuration error: {str(e)}")
        return EXIT_ERROR

    setup_logging(config.log_level if not json_only else "ERROR", config.log_file)

    try:
        started = time.perf_counter()
        result, code = args.handler(args, config)
        elapsed = time.perf_counter() - started

        report = Report(
            command=args.command, input=_input_text(args), result=result, elapsed_seconds=elapsed
        )
        print_report(report.to_json_dict())
        display_info(f"{args.command} finished in {elapsed:.3f}s")
        logger.debug(f"{args.command} exit code {code}")
        return code

    except FreeLinksError as e:
        display_error(str(e))
        logger.error(f"{args.command} failed: {e.message}")
        return EXIT_ERROR

    except FileNotFoundError as e:
        display_error(str(e))
        logger.error(f"{args.command} failed: {str(e)}")
        return EXIT_ERROR

    except KeyboardInterrupt:
        display_info("Interrupted by user. Exiting...")
        logger.info("Interrupted by user")
        return 130  # Standard exit code for SIGINT

    except Exception as e:
        display_error(f"Unexpected error: {str(e)}")
        logger.error(f"Unexpected error in {args.command}: {str(e)}", exc_info=True)
        return EXIT_ERROR


def _input_text(args: argparse.Namespace) -> Optional[str]:
    """Normalized echo of the input diagram, if the command took one."""
    if args.command == "examples":
        return None
    return emit_diagram(_read_diagram(args))


if __name__ == "__main__":
    sys.exit(main())

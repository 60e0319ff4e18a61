"""Command-line front end: ``fourmode simulate|design|detect|triples|optimize|serve``.

Couplings are angular frequencies (radians per unit time); times are in the
reciprocal unit. Payloads go to standard output (or ``--out``), logs to
standard error.

Exit codes: 0 success, 1 numerical failure, 2 usage or invalid input.
"""

import argparse
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from . import __version__
from .errors import FourModeError
from .schemas.triples import PythTriple
from .server import get_tool_server
from .utils.formatting import render_csv, render_json
from .utils.logging import get_logger, setup_logging

logger = get_logger("cli")

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

LOG_LEVELS = ["TRACE", "DEBUG", "INFO", "SUCCESS", "WARNING", "ERROR", "CRITICAL"]

# options whose values may start with "-"
SIGNED_VALUE_OPTIONS = ("--bounds",)


def _float_pair(text: str) -> Tuple[float, float]:
    try:
        lo, hi = (float(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected lo,hi, got {text!r}")
    return lo, hi


def _int_triple(text: str) -> Tuple[int, int, int]:
    try:
        a, b, c = (int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a,b,c, got {text!r}")
    return a, b, c


def _add_couplings(parser: argparse.ArgumentParser) -> None:
    group = parser.add_argument_group("couplings (radians per unit time)")
    group.add_argument("--v12", type=float, required=True)
    group.add_argument("--v23", type=float, required=True)
    group.add_argument("--v34", type=float, required=True)
    group.add_argument("--v14", type=float, default=0.0, help="0 for a ladder (default)")


def _couplings(args: argparse.Namespace) -> Dict[str, float]:
    return {"v12": args.v12, "v23": args.v23, "v34": args.v34, "v14": args.v14}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fourmode",
        description="Complete population transfer in four-mode nearest-neighbor systems.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument(
        "--log-level",
        type=str.upper,
        choices=LOG_LEVELS,
        default=None,
        help="loguru level for standard error",
    )

    output = argparse.ArgumentParser(add_help=False)
    output.add_argument("--out", type=Path, default=None, help="write to PATH instead of stdout")

    commands = parser.add_subparsers(dest="command", required=True, metavar="COMMAND")

    simulate = commands.add_parser(
        "simulate", parents=[output], help="populations and amplitudes over time"
    )
    _add_couplings(simulate)
    simulate.add_argument("--t-max", type=float, required=True)
    simulate.add_argument("--steps", type=int, default=None, help="grid intervals (default 2000)")
    simulate.add_argument("--format", choices=["csv", "json"], default="csv")
    simulate.add_argument("--initial-level", type=int, choices=[1, 2, 3, 4], default=1)
    simulate.add_argument(
        "--verify", action="store_true", help="check every point against the oracle"
    )

    design = commands.add_parser(
        "design", parents=[output], help="couplings for complete 1 -> 3 transfer"
    )
    source = design.add_mutually_exclusive_group(required=True)
    source.add_argument("--p", type=int, help="larger odd generator (with --q)")
    source.add_argument("--triple", type=_int_triple, metavar="A,B,C")
    design.add_argument("--q", type=int, help="smaller odd generator")
    design.add_argument("--tau", type=float, required=True, help="target transfer time")
    design.add_argument("--cone-tol", type=float, default=None)

    detect = commands.add_parser(
        "detect", parents=[output], help="Pythagorean transfer condition of a coupling set"
    )
    _add_couplings(detect)
    detect.add_argument("--tol", type=float, default=None, help="relative tolerance (1e-9)")

    triples = commands.add_parser(
        "triples", parents=[output], help="primitive Pythagorean triples, one per line"
    )
    triples.add_argument("--c-max", type=int, required=True)
    triples.add_argument(
        "--legs",
        choices=["canonical", "ascending"],
        default="canonical",
        help="canonical prints (even leg, odd leg, c)",
    )

    optimize = commands.add_parser(
        "optimize", parents=[output], help="multistart design search at a target time"
    )
    optimize.add_argument("--tau", type=float, required=True)
    optimize.add_argument(
        "--bounds",
        type=_float_pair,
        required=True,
        metavar="LO,HI",
        help="search interval for every coupling, e.g. 0,8 or -8,8",
    )
    optimize.add_argument("--seed", type=int, default=0)
    optimize.add_argument("--diamond", action="store_true", help="search v14 as well")
    optimize.add_argument("--starts", type=int, default=None)

    serve = commands.add_parser("serve", help="run the HTTP tool surface")
    serve.add_argument("--host", default=None)
    serve.add_argument("--port", type=int, default=None)

    return parser


def cmd_simulate(args: argparse.Namespace) -> str:
    result = get_tool_server().call_tool(
        "simulate",
        {
            "couplings": _couplings(args),
            "t_max": args.t_max,
            "steps": args.steps,
            "initial_level": args.initial_level,
            "verify": args.verify,
        },
    )
    if args.format == "csv":
        return render_csv(result.columns, result.rows)
    return render_json(result.model_dump(mode="json"))


def cmd_design(args: argparse.Namespace) -> str:
    payload = {"tau": args.tau, "cone_tolerance": args.cone_tol}
    if args.triple is not None:
        payload["triple"] = args.triple
        if args.q is not None:
            payload["q"] = args.q
    else:
        payload.update(p=args.p, q=args.q)
    result = get_tool_server().call_tool("design", payload)
    return render_json(result.model_dump(mode="json"))


def cmd_detect(args: argparse.Namespace) -> str:
    result = get_tool_server().call_tool("detect", {"couplings": _couplings(args), "tol": args.tol})
    data = result.model_dump(mode="json")
    return render_json(
        {
            "xi": result.xi,
            "frequencies": data["frequencies"],
            "reference_times": data["reference_times"],
            "match": data["match"],
        }
    )


def _legs(triple: PythTriple, order: str) -> List[int]:
    if order == "ascending":
        return sorted([triple.a, triple.b]) + [triple.c]
    return list(triple.as_tuple())


def cmd_triples(args: argparse.Namespace) -> str:
    result = get_tool_server().call_tool("triples", {"c_max": args.c_max})
    return "".join(
        " ".join(str(n) for n in _legs(triple, args.legs)) + "\n" for triple in result.triples
    )


def cmd_optimize(args: argparse.Namespace) -> str:
    lo, hi = args.bounds
    result = get_tool_server().call_tool(
        "optimize",
        {
            "tau": args.tau,
            "lo": lo,
            "hi": hi,
            "seed": args.seed,
            "diamond": args.diamond,
            "starts": args.starts,
        },
    )
    data = result.result.model_dump(mode="json")
    return render_json(
        {
            "couplings": data["couplings"],
            "infidelity": data["infidelity"],
            "oracle_infidelity": result.oracle_infidelity,
            "hopf": data["hopf"],
            "matched": data["matched"],
            "evaluations": data["evaluations"],
            "converged": data["converged"],
            "start_index": data["start_index"],
            "tau_target": data["tau_target"],
        }
    )


def cmd_serve(args: argparse.Namespace) -> None:
    from .app import create_app
    from .config import get_settings

    settings = get_settings()
    app = create_app()
    app.run(
        host=args.host or settings.host,
        port=args.port or settings.port,
        debug=settings.debug,
    )


COMMANDS: Dict[str, Callable[[argparse.Namespace], Optional[str]]] = {
    "simulate": cmd_simulate,
    "design": cmd_design,
    "detect": cmd_detect,
    "triples": cmd_triples,
    "optimize": cmd_optimize,
    "serve": cmd_serve,
}


def _emit(text: str, out: Optional[Path]) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8", newline="\n")


def _join_signed_values(argv: List[str]) -> List[str]:
    """Rewrite "--bounds -1,8" as "--bounds=-1,8"; argparse reads "-1,8" as a flag."""
    joined: List[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in SIGNED_VALUE_OPTIONS and i + 1 < len(argv):
            joined.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            joined.append(argv[i])
            i += 1
    return joined


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(_join_signed_values(sys.argv[1:] if argv is None else list(argv)))
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    setup_logging(args.log_level)

    try:
        text = COMMANDS[args.command](args)
        if text is not None:
            _emit(text, getattr(args, "out", None))
    except ValueError as e:
        print(f"fourmode {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except (FourModeError, OSError) as e:
        print(f"fourmode {args.command}: failed: {e}", file=sys.stderr)
        return EXIT_FAILURE

    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())

"""The command-line interface for LIEWB."""
import argparse
import csv
import io
import json
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import _globals
from ._exceptions import (
    BudgetExceeded,
    DomainError,
    IntegralityError,
    InvalidRep,
    LiewbError,
    NegativeCoords,
)
from ._globals import LOG_FORMATTER, LOGS_DIRECTORY, VERIFY_GRID
from ._version import __version__
from .Characters import (
    NATURAL,
    ghost_solve,
    lie_char,
    restricted_lie_char,
    verify_char0,
    verify_char_identities,
)
from .GreenRing import (
    METHODS,
    GreenElement,
    adams_green,
    explore_rho,
    lie_power_green,
    parse_green,
    phi_green,
    restricted_lie_power_green,
    rho_green,
    sym_power_green,
)
from .ModularLab import verify_green_identities
from .Report import FORMATS, Report, format_table
from .SymFunc import SymFunc, chi, eval_dim, to_basis
from .Utils import int_list

LOGGER_NAMES = ("liewb", "symfunc", "series", "characters", "modular")

liewb_logger = logging.getLogger("liewb")

SUITES = ("char", "char0", "factorisation", "ptypical", "green", "all")


def setup_logging(verbose: bool = False) -> None:
    """Attach a file handler per logger in LOGS_DIRECTORY and a stderr handler."""
    os.makedirs(LOGS_DIRECTORY, exist_ok=True)
    stream_handler = logging.StreamHandler(sys.stderr)
    stream_handler.setFormatter(LOG_FORMATTER)
    stream_handler.setLevel(logging.DEBUG if verbose else logging.WARNING)
    for name in LOGGER_NAMES:
        logger = logging.getLogger(name)
        if logger.handlers:
            continue
        logger.setLevel(logging.DEBUG)
        file_handler = logging.FileHandler(os.path.join(LOGS_DIRECTORY, "{}.log".format(name)))
        file_handler.setFormatter(LOG_FORMATTER)
        logger.addHandler(file_handler)
        logger.addHandler(stream_handler)


# ---------------------------------------------------------------------------
# Output
# ---------------------------------------------------------------------------


def render_record(record: Dict[str, Any], fmt: str) -> str:
    """Render one result record deterministically."""
    if fmt == "json":
        return json.dumps(record, sort_keys=True)
    rows = []
    for key in sorted(record):
        value = record[key]
        rows.append([key, value if isinstance(value, str) else json.dumps(value, sort_keys=True)])
    if fmt == "csv":
        buffer = io.StringIO()
        writer = csv.writer(buffer, lineterminator="\n")
        writer.writerow(["key", "value"])
        writer.writerows(rows)
        return buffer.getvalue().rstrip("\n")
    return format_table(["key", "value"], rows)


def read_character(text: Optional[str]) -> SymFunc:
    """A SymFunc from JSON text or a path to a JSON file; the natural character by default."""
    if not text:
        return NATURAL
    if os.path.isfile(text):
        with open(text, "r") as handle:
            text = handle.read()
    try:
        return SymFunc.from_json(text)
    except json.JSONDecodeError as e:
        raise DomainError("--input is not valid JSON: {}".format(e)) from e


def _dims(f: SymFunc, ns: Sequence[int]) -> Dict[str, str]:
    return {str(n): str(eval_dim(f, n)) for n in ns}


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def cmd_sym(args: argparse.Namespace) -> int:
    """Lie, restricted Lie, chi, conversion and dimension results for a character."""
    f = read_character(args.input)
    ns = args.n or [2]
    if args.action == "lie":
        result, basis = lie_char(f, args.r), args.basis or "s"
    elif args.action == "restricted":
        result, basis = restricted_lie_char(f, args.p, args.m, args.k), args.basis or "s"
    elif args.action == "chi":
        result, basis = chi(f, args.r), args.basis or "p"
    elif args.action == "convert":
        result, basis = f, args.basis or "s"
    else:
        result, basis = f, args.basis or "p"
    expressed = to_basis(result, basis)
    record = {
        "op": args.action,
        "character": expressed.to_json(),
        "pretty": str(expressed),
        "dims": _dims(result, ns),
    }
    if args.action in ("lie", "chi"):
        record["r"] = args.r
    if args.action == "restricted":
        record.update(p=args.p, m=args.m, k=args.k)
    print(render_record(record, args.format))
    return 0


def cmd_witt(args: argparse.Namespace) -> int:
    """Solve the ghost equations and report dimensions and Schur positivity."""
    f = read_character(args.input)
    solution = ghost_solve(f, args.p, args.k, args.m, args.n or [2])
    record = solution.to_json()
    print(render_record(record, args.format))
    return 0 if all(record["schur_positive"]) else 1


def cmd_modular(args: argparse.Namespace) -> int:
    """Green-ring computations for C_p."""
    p = args.p
    if args.action == "decompose":
        x = parse_green(args.expr or args.module, p)
        record = {"op": "decompose", "p": p, "result": x.to_json(), "pretty": str(x), "dim": str(x.dim)}
        print(render_record(record, args.format))
        return 0
    x = parse_green(args.module, p)
    if args.action == "explore":
        rows = explore_rho(x, args.m)
        record = {
            "op": "explore",
            "p": p,
            "input": str(x),
            "rho": {str(p**m): (None if value is None else str(value)) for m, value in rows},
        }
        print(render_record(record, args.format))
        return 0
    operations: Dict[str, Callable[[], GreenElement]] = {
        "psi": lambda: adams_green(x, args.r, args.D),
        "phi": lambda: phi_green(x, args.r, args.method or "recursive"),
        "rho": lambda: rho_green(x, args.r),
        "lie": lambda: lie_power_green(x, args.r, args.method or "direct"),
        "restricted": lambda: restricted_lie_power_green(x, args.r),
        "sympow": lambda: sym_power_green(x, args.r),
    }
    result = operations[args.action]()
    record = {
        "op": args.action,
        "p": p,
        "r": args.r,
        "input": str(x),
        "result": result.to_json(),
        "pretty": str(result),
    }
    print(render_record(record, args.format))
    return 0


def _grid(args: argparse.Namespace, suite: str) -> List[Dict[str, Any]]:
    keys = ("p", "a", "k", "m", "r", "s", "n", "D")
    given = {key: getattr(args, key) for key in keys if getattr(args, key, None) is not None}
    if "n" in given:
        return [dict(given, n=n) for n in given["n"]]
    if given:
        return [given]
    return [dict(point) for point in VERIFY_GRID.get(suite, [])]


def cmd_verify(args: argparse.Namespace) -> int:
    """Run verification suites and print one line per identity."""
    suites = ("char", "char0", "green") if args.suite == "all" else (args.suite,)
    report = Report()
    for suite in suites:
        if suite == "char0":
            report.extend(verify_char0(args.D or 10, args.seed, args.samples))
        elif suite == "char":
            for point in _grid(args, "char"):
                report.extend(verify_char_identities(dict(point, f=read_character(args.input))))
        elif suite == "green":
            for point in _grid(args, "green"):
                report.extend(verify_green_identities(point))
        else:
            only = (
                {"resolvent-factorisation"}
                if suite == "factorisation"
                else {"p-typical", "lie-star-sym-coefficients"}
            )
            for point in _grid(args, "green"):
                modules = [point["a"]] if "a" in point else range(1, point.get("p", 2) + 1)
                for a in modules:
                    report.extend(verify_green_identities(dict(point, a=a), only=only))
    print(report.render(args.format))
    liewb_logger.info("verify %s: %d checks, exit %d", args.suite, len(report.checks), report.exit_code())
    return report.exit_code()


# ---------------------------------------------------------------------------
# Parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="json", help="Output format")
    common.add_argument("--seed", type=int, default=_globals.DEFAULT_SEED, help="Seed for random checks")
    common.add_argument("--budget", type=int, default=None, help="Tensor-space dimension cap")
    common.add_argument("--verbose", action="store_true", help="Log debug messages to stderr")

    parser = argparse.ArgumentParser(
        prog="liewb",
        description="Exact workbench for Lie powers, Adams operations and Lie resolvents",
    )
    parser.add_argument("--version", action="version", version="%(prog)s {}".format(__version__))
    commands = parser.add_subparsers(dest="command", required=True)

    sym = commands.add_parser("sym", parents=[common], help="Formal characters")
    sym.add_argument("action", choices=("lie", "restricted", "chi", "convert", "dim"))
    sym.add_argument("--input", type=str, default=None, help="SymFunc JSON (default p[1])")
    sym.add_argument("--r", type=int, default=1)
    sym.add_argument("--p", type=int, default=2)
    sym.add_argument("--m", type=int, default=1)
    sym.add_argument("--k", type=int, default=1)
    sym.add_argument("--n", type=int_list, default=None, help="Numbers of variables, e.g. 2,3")
    sym.add_argument("--basis", choices=("p", "m", "h", "e", "s"), default=None)
    sym.set_defaults(handler=cmd_sym)

    witt = commands.add_parser("witt", parents=[common], help="Ghost-component solver")
    witt.add_argument("--input", type=str, default=None, help="SymFunc JSON (default p[1])")
    witt.add_argument("--p", type=int, default=2)
    witt.add_argument("--k", type=int, default=1)
    witt.add_argument("--m", type=int, default=1)
    witt.add_argument("--n", type=int_list, default=None)
    witt.set_defaults(handler=cmd_witt)

    modular = commands.add_parser("modular", parents=[common], help="Green ring of C_p")
    modular.add_argument(
        "action", choices=("decompose", "psi", "phi", "rho", "lie", "restricted", "sympow", "explore")
    )
    modular.add_argument("--p", type=int, default=2)
    modular.add_argument("--module", type=str, default="J2", help="Expression in J1..Jp")
    modular.add_argument("--expr", type=str, default=None, help="Expression to decompose")
    modular.add_argument("--r", type=int, default=1)
    modular.add_argument("--m", type=int, default=3, help="Largest m for explore")
    modular.add_argument("--D", type=int, default=None)
    modular.add_argument("--method", choices=METHODS, default=None)
    modular.set_defaults(handler=cmd_modular)

    verify = commands.add_parser("verify", parents=[common], help="Verification suites")
    verify.add_argument("--suite", choices=SUITES, default="all")
    verify.add_argument("--input", type=str, default=None, help="SymFunc JSON for the char suite")
    for flag in ("p", "a", "k", "m", "r", "s", "D"):
        verify.add_argument("--{}".format(flag), type=int, default=None)
    verify.add_argument("--n", type=int_list, default=None)
    verify.add_argument("--samples", type=int, default=3, help="Random samples per char0 identity")
    verify.set_defaults(handler=cmd_verify)
    return parser


def run(args: argparse.Namespace) -> int:
    """Dispatch a parsed command and map errors to exit codes."""
    previous = _globals.BUDGET, _globals.MAX_DEGREE
    try:
        _globals.load_environment()
        if args.budget is not None:
            _globals.BUDGET = args.budget
        return args.handler(args)
    except BudgetExceeded as e:
        liewb_logger.error(e)
        liewb_logger.debug(e, exc_info=True)
        print("budget exceeded: {}".format(e), file=sys.stderr)
        return 3
    except (DomainError, NegativeCoords, InvalidRep) as e:
        liewb_logger.error(e)
        liewb_logger.debug(e, exc_info=True)
        print("error: {}".format(e), file=sys.stderr)
        return 2
    except IntegralityError as e:
        liewb_logger.error(e)
        liewb_logger.debug(e, exc_info=True)
        print("integrality failure: {}".format(e), file=sys.stderr)
        return 1
    except LiewbError as e:
        liewb_logger.error(e)
        liewb_logger.debug(e, exc_info=True)
        print("error: {}".format(e), file=sys.stderr)
        return 1
    finally:
        _globals.BUDGET, _globals.MAX_DEGREE = previous


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Parse `argv` and run; argparse usage errors come back as exit code 2."""
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    return run(args)


def start() -> None:
    try:
        args = build_parser().parse_args()
    except SystemExit as e:
        sys.exit(e.code)
    setup_logging(args.verbose)
    try:
        sys.exit(run(args))
    except Exception as e:
        liewb_logger.error(e)
        liewb_logger.debug(e, exc_info=True)
        sys.exit(1)


if __name__ == "__main__":
    start()

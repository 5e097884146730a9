import argparse
import json
import logging
import sys
from collections.abc import Sequence
from pathlib import Path

from ctrace.shared import (
    DDClass,
    ExitCodes,
    SpaceFileParseError,
    UnsupportedCaseError,
    color_enabled,
    ctrace_logger,
)

from .commands import COMMANDS
from .report import Report


def _add_common_args(parser: argparse.ArgumentParser, algebra: bool) -> None:
    space = parser.add_mutually_exclusive_group(required=True)
    space.add_argument(
        "--builtin",
        nargs="+",
        metavar=("NAME", "PARAMS"),
        help="point | sphere K | cp M | torus D | product A B (factors as name:p)",
    )
    space.add_argument("--file", type=Path, help="Space description file (JSON)")
    if algebra:
        parser.add_argument(
            "-n", dest="n", type=int, default=1, help="Matrix size n >= 1"
        )
        parser.add_argument(
            "--dd",
            choices=[x.value for x in DDClass],
            default=DDClass.TRIVIAL.value,
            help="Dixmier-Douady class of the bundle",
        )
    parser.add_argument("--json", action="store_true", help="Emit canonical JSON")
    parser.add_argument("--output", type=Path, help="Also write the JSON report here")
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ctrace",
        description=(
            "Rational homotopy of unitary groups of continuous trace algebras "
            "and its image in Z+-graded rational K-theory"
        ),
    )
    subparsers = parser.add_subparsers(dest="command", required=True)
    for name, func in COMMANDS.items():
        sub = subparsers.add_parser(name, help=func.__doc__)
        _add_common_args(sub, algebra=name != "cohomology")
        if name == "endo":
            sub.add_argument("--endo", required=True, help="Endomorphism file (JSON)")
    return parser


def run(argv: Sequence[str] | None = None) -> tuple[ExitCodes, Report | None]:
    """Parses argv and builds the report, mapping errors to exit codes

    argparse itself exits with 2 on malformed command lines
    """

    args = build_parser().parse_args(argv)
    if args.verbose:
        ctrace_logger.setLevel(logging.DEBUG)

    try:
        report = COMMANDS[args.command](args)
    except (SpaceFileParseError, json.JSONDecodeError) as e:
        ctrace_logger.error(f"Parse error: {e}")
        return ExitCodes.PARSE_ERROR, None
    except UnsupportedCaseError as e:
        ctrace_logger.error(f"Unsupported case: {e}")
        return ExitCodes.UNSUPPORTED_CASE, None
    except ValueError as e:
        ctrace_logger.error(f"Validation error: {e}")
        return ExitCodes.VALIDATION_ERROR, None

    if args.output is not None:
        args.output.parent.mkdir(parents=True, exist_ok=True)
        args.output.write_text(report.render_json())
        ctrace_logger.info(f"Wrote report to {args.output}")

    if args.json:
        sys.stdout.write(report.render_json())
    else:
        color = color_enabled() and sys.stdout.isatty()
        sys.stdout.write(report.render_pretty(color=color))
    return ExitCodes.SUCCESS, report


def main(argv: Sequence[str] | None = None) -> int:
    exit_code, _report = run(argv)
    return int(exit_code)

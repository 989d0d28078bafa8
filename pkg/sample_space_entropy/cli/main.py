"""Argument parsing, logging setup and the `sample-space-entropy` entry point."""

from __future__ import annotations

import argparse
from collections.abc import Callable, Sequence
import contextlib
import logging
from pathlib import Path
import sys
from typing import TextIO

import colorlog

from sample_space_entropy.const import DOMAIN, LOGGER, VERSION
from sample_space_entropy.exceptions import SampleSpaceEntropyError

from .commands import cmd_contract, cmd_figures, cmd_fit, cmd_model, cmd_mrt, cmd_simulate
from .figures import FIGURE_IDS, OutputStyle

LOG_FORMAT = "%(log_color)s%(levelname)-8s%(reset)s %(name)s: %(message)s"

type Command = Callable[[argparse.Namespace, TextIO], int]


def _output_parent() -> argparse.ArgumentParser:
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--out", type=Path, help="write output to this file instead of standard output")
    return parent


def build_parser() -> argparse.ArgumentParser:
    """Build the argument parser with all subcommands."""
    parser = argparse.ArgumentParser(
        prog="sample-space-entropy",
        description="Probability and information entropy of exponentially expanding or contracting sample spaces.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log debug output to standard error")
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    subparsers = parser.add_subparsers(dest="command", required=True, metavar="command")
    output = _output_parent()

    fit = subparsers.add_parser("fit", parents=[output], help="fit a mono-exponential model to a CSV series")
    fit.add_argument("series_path", type=Path, help="CSV file with a header row")
    fit.add_argument("--time-column", default="year", help="name of the time column (default: year)")
    fit.add_argument("--value-column", default="value", help="name of the value column (default: value)")
    fit.add_argument("--origin", help="time taken as t = 0 (default: the earliest time in the file)")
    fit.add_argument(
        "--series", action="store_true", help="also emit observed and fitted values, p and H per observation"
    )
    fit.add_argument("--save-model", type=Path, help="write the fitted s0 and lambda to this model file")
    fit.set_defaults(handler=cmd_fit)

    model = subparsers.add_parser("model", parents=[output], help="evaluate a model file over a grid")
    model.add_argument("model_path", type=Path, help="model file")
    model.add_argument("--grid", help="evaluation grid start:end:step")
    model.add_argument("--tmax", type=float, help="add H(T) / H(T_max) for a multi-exponential model")
    model.set_defaults(handler=cmd_model)

    mrt = subparsers.add_parser("mrt", parents=[output], help="mean residence time of a multi-exponential model")
    mrt.add_argument("model_path", type=Path, help="model file with component lines")
    mrt.add_argument("--verify", action="store_true", help="cross-check the closed form by quadrature")
    mrt.set_defaults(handler=cmd_mrt)

    simulate = subparsers.add_parser("simulate", parents=[output], help="enumerate n doublings of the sample space")
    simulate.add_argument("n", type=int, help="number of doublings, 0 to 20")
    simulate.set_defaults(handler=cmd_simulate)

    contract = subparsers.add_parser("contract", parents=[output], help="trace a halving contraction")
    source = contract.add_mutually_exclusive_group(required=True)
    source.add_argument("s0", nargs="?", type=int, help="initial sample-space size, >= 2")
    source.add_argument("--model", type=Path, help="model file with a contract line")
    contract.add_argument(
        "--rate", type=float, action="append", help="halving rate of one simultaneous process (repeatable)"
    )
    contract.add_argument("--step", type=float, default=1.0, help="time between trajectory points (default: 1)")
    contract.add_argument("--verify", action="store_true", help="enumerate the halvings for comparison")
    contract.set_defaults(handler=cmd_contract)

    figures = subparsers.add_parser("figures", parents=[output], help="emit figure data or an SVG chart")
    figures.add_argument("figure_id", help=f"one of {', '.join(FIGURE_IDS)}")
    figures.add_argument("--grid", help="evaluation grid start:end:step (default: 201 points over the figure domain)")
    figures.add_argument("--style", choices=[style.value for style in OutputStyle], default=OutputStyle.DATA.value)
    figures.add_argument("--model", type=Path, help="model file replacing the figure's default model")
    figures.add_argument("--lambda", dest="rate", type=float, help="rate constant for figures 13 and 14")
    figures.add_argument("--tmax", type=float, help="normalization horizon T_max for figure 12 (default: 1000)")
    figures.set_defaults(handler=cmd_figures)

    return parser


def configure_logging(verbose: bool = False, stream: TextIO | None = None) -> logging.Handler:
    """
    Attach a coloured stderr handler to the package logger.

    Returns:
        The handler, so the caller can detach it again.

    """
    handler = colorlog.StreamHandler(stream or sys.stderr)
    handler.setFormatter(colorlog.ColoredFormatter(LOG_FORMAT))
    LOGGER.addHandler(handler)
    LOGGER.setLevel(logging.DEBUG if verbose else logging.WARNING)
    return handler


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the command line interface.

    Returns:
        0 on success, 1 if a command reported an error.

    """
    args = build_parser().parse_args(argv)
    handler = configure_logging(args.verbose)
    command: Command = args.handler
    try:
        with contextlib.ExitStack() as stack:
            out: TextIO = sys.stdout
            if args.out is not None:
                out = stack.enter_context(args.out.open("w", encoding="utf-8", newline="\n"))
            LOGGER.debug("%s %s: running %s", DOMAIN, VERSION, args.command)
            return command(args, out)
    except (SampleSpaceEntropyError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    finally:
        LOGGER.removeHandler(handler)

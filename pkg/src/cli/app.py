"""Command-line entry point: argument parsing, configuration and exit codes."""

import argparse
import logging
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional, Sequence

from cli.base_command import EXIT_BUDGET, EXIT_DISAGREEMENT, EXIT_INPUT_ERROR
from cli.factory import CommandFactory
from cli.registry import register_commands
from core.config_manager import ConfigManager
from core.exceptions import C1pLabError, EnumerationBudgetExceeded, NonIntegerResult, StructureViolation
from core.settings import DEFAULT_ENUMERATION_LIMIT, DEFAULT_FMO_ENGINE
from utils.logging_config import setup_logging

logger = logging.getLogger(__name__)

register_commands()


def positive_int(text: str) -> int:
    try:
        value = int(text.replace("_", ""))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer")
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} is not positive")
    return value


@dataclass
class CliConfig:
    """Resolved options for one invocation."""

    command: str
    action: Optional[str] = None
    inputs: List[str] = field(default_factory=list)
    engine: str = DEFAULT_FMO_ENGINE
    limit: int = DEFAULT_ENUMERATION_LIMIT
    output_format: str = "text"
    out: Optional[Path] = None
    method: str = "all"
    verbosity: int = 0

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> "CliConfig":
        """Fill unset options from the configuration file and environment."""
        inputs = getattr(args, "trees", None) or [
            getattr(args, name) for name in ("instance", "graph") if getattr(args, name, None)
        ]
        return cls(
            command=args.command,
            action=getattr(args, "action", None) or getattr(args, "route", None),
            inputs=list(inputs),
            engine=args.engine or ConfigManager.get_fmo_config().default_engine,
            limit=args.limit or ConfigManager.get_default_limit(),
            output_format=args.format,
            out=Path(args.out) if args.out else None,
            method=getattr(args, "method", "all"),
            verbosity=args.verbose,
        )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--engine", choices=["naive", "pruned"], help="FMO engine (default from config)")
    common.add_argument("--limit", type=positive_int, help="enumeration budget (default from config or C1P_LAB_LIMIT)")
    common.add_argument("--format", choices=["text", "json"], default="text", help="output format")
    common.add_argument("--out", help="directory for exported files")

    app = ConfigManager.get_app_config()
    parser = argparse.ArgumentParser(
        prog=app.get("name", "c1p-lab"),
        description="PQ-tree frontiers, full multiset orderings and Hamiltonian path reductions",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {app.get('version', '')}")
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG")
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in CommandFactory.commands():
        command.add_arguments(subparsers.add_parser(command.name, help=command.help, parents=[common]))
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run one command; returns the exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

    setup_logging(args.verbose)
    config = CliConfig.from_args(args)
    logger.debug(f"Running {config}")
    try:
        return CommandFactory.get_command(config.command).run(config)
    except EnumerationBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (StructureViolation, NonIntegerResult) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_DISAGREEMENT
    except (C1pLabError, ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INPUT_ERROR

"""
Command-line entry point: ``monopsono <subcommand> [options]``.

Exit status is 0 on success, 1 with a one-line diagnostic for parse,
domain, estimation and configuration failures, and 2 for usage errors.
"""

import argparse
import importlib
import sys
from pathlib import Path
from typing import Dict, List, Optional

from monopsono import __version__
from monopsono.common_conf import settings
from monopsono.core.exceptions import MonopsonoError
from monopsono.debug import StructuredLogger, configure_logging

from .base import BaseCommand
from .commands import COMMAND_MODULES
from .config import DIGIT_CHOICES, load_pipeline_config


def load_commands() -> Dict[str, BaseCommand]:
    commands = {}
    for module_name in COMMAND_MODULES:
        module = importlib.import_module(f"monopsono.cli.commands.{module_name}")
        command = module.Command()
        commands[command.name] = command
    return commands


def _common_arguments() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--config", type=Path, help="INI pipeline configuration file")
    parser.add_argument("--out", type=Path, help="Output directory")
    parser.add_argument("--seed", type=int, help="Random seed")
    parser.add_argument("--digits", type=int, choices=DIGIT_CHOICES, help="Industry code digits")
    parser.add_argument(
        "--object", choices=["employment", "hires"], help="Object counted in market shares"
    )
    parser.add_argument("--spec", help="Specification name (preset or [spec:NAME] section)")
    parser.add_argument("--threads", type=int, help="Worker threads")
    return parser


def build_parser(commands: Dict[str, BaseCommand]) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="monopsono",
        description="Labor-market concentration and minimum-wage pipeline.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    subparsers = parser.add_subparsers(dest="subcommand", metavar="subcommand")
    subparsers.required = True
    common = _common_arguments()
    for name, command in commands.items():
        sub = subparsers.add_parser(name, help=command.help, parents=[common])
        command.add_arguments(sub)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    commands = load_commands()
    options = build_parser(commands).parse_args(argv)
    configure_logging()
    logger = StructuredLogger("monopsono.cli")
    command = commands[options.subcommand]
    try:
        config = load_pipeline_config(
            options.config,
            {
                "out": options.out,
                "seed": options.seed,
                "digits": options.digits,
                "object": options.object,
                "spec": options.spec,
                "threads": options.threads,
            },
        )
        with settings.override_settings(THREADS=config.threads):
            command.run(config, options)
    except MonopsonoError as error:
        logger.log_error(error, {"subcommand": options.subcommand})
        message = " ".join(str(error).split())
        print(f"{error.label}: {message}", file=sys.stderr)
        return 1
    return 0


def main() -> None:
    sys.exit(run())

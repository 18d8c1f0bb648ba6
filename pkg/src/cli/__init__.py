# The MIT License (MIT)

# Copyright (c) 2024 Affinity Rectifier contributors

# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:

# The above copyright notice and this permission notice shall be included in
# all copies or substantial portions of the Software.

# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN
# THE SOFTWARE.
"""
__init__.py

Command line entry of the rectifier. Every subcommand shares the
flags of ``common_parser``; exit code is 0 on success and 1 on any
reported failure.
"""
import argparse
from ..utils.constants import get_name, get_version, get_description
from ..utils.trigger import set_log_level
from .base_command import BaseCommand
from .commands import (
    AffinityCommand,
    ThresholdsCommand,
    RectifyCommand,
    InjectNoiseCommand,
    EvaluateCommand,
)

COMMANDS: list[type[BaseCommand]] = [
    AffinityCommand,
    ThresholdsCommand,
    RectifyCommand,
    InjectNoiseCommand,
    EvaluateCommand,
]

LOG_LEVELS = ("trace", "debug", "info", "warning", "error", "critical")


def common_parser() -> argparse.ArgumentParser:
    """Flags understood by every subcommand"""
    parser = argparse.ArgumentParser(add_help=False)
    parser.add_argument("--manifest", help="dataset manifest (json)")
    parser.add_argument("--config", help="toml or json configuration file")
    parser.add_argument("--out", help="output folder")
    parser.add_argument("--seed", type=int, help="seed of every random draw")
    parser.add_argument("--threads", type=int, help="worker threads (default: 1)")
    parser.add_argument("--epoch", type=int, help="current training epoch, from 1")
    parser.add_argument(
        "--log-level",
        choices=LOG_LEVELS,
        help="log verbosity (default: LOGLEVEL env or info)",
    )
    return parser


def build_parser() -> argparse.ArgumentParser:
    """Top level parser with one subparser per command"""
    parser = argparse.ArgumentParser(prog=get_name(), description=get_description())
    parser.add_argument(
        "--version", action="version", version=f"%(prog)s {get_version()}"
    )

    common = common_parser()
    subparsers = parser.add_subparsers(dest="command", required=True)
    for command in COMMANDS:
        sub = subparsers.add_parser(
            command.name, help=command.help, parents=[common]
        )
        sub.set_defaults(command_class=command)
        command.add_arguments(sub)

    return parser


def main(argv: list[str] | None = None) -> int:
    """Parse ``argv`` and run the chosen subcommand"""
    args = build_parser().parse_args(argv)

    try:
        set_log_level(args.log_level)
    except ValueError as exc:
        print(exc)
        return 1

    command = args.command_class(args)
    return command.execute()

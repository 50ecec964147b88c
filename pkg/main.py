#!/usr/bin/env python3

# main.py
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU Lesser General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program  is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU Lesser General Public License for more details.
#
# You should have received a copy of the GNU Lesser General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

import argparse
import logging
import sys

from sl3cycles.enums import Command
from sl3cycles.settings import (
    DEFAULT_I_MAX,
    DEFAULT_N_MAX,
    DEFAULT_SAMPLES,
    DEFAULT_SEED,
    ConfigurationError,
)

log = logging.getLogger("main")

LOG_FORMAT = "%(asctime)s [%(threadName)-12.12s] [%(name)-10.10s] [%(levelname)-5.5s]  %(message)s"
LOG_DATE_FORMAT = "%H:%M:%S"


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", dest="json", help="print JSON")
    common.add_argument("--imax", type=int, default=DEFAULT_I_MAX, help="window radius i <= IMAX")
    common.add_argument("--nmax", type=int, default=DEFAULT_N_MAX, help="largest cycle index")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED, help="random seed")
    common.add_argument("--samples", type=int, default=DEFAULT_SAMPLES, help="samples per vertex")

    parser = argparse.ArgumentParser(prog="sl3cycles", description="SL3 sector checks")
    parser.add_argument("-d", "--debug", action="store_true", dest="debug")
    commands = parser.add_subparsers(dest="command", required=True)

    commands.add_parser(Command.VERIFY.value, parents=[common], help="run every verification suite")
    for command in (Command.STAB, Command.LINK):
        sub = commands.add_parser(command.value, parents=[common])
        sub.add_argument("--vertex", type=int, nargs=2, metavar=("I", "J"), required=True)
    commands.add_parser(Command.HEIGHTS.value, parents=[common], help="Morse heights of the window")
    commands.add_parser(Command.FLAT_EDGES.value, parents=[common], help="flat edges")
    cycle = commands.add_parser(Command.CYCLE.value, parents=[common], help="the n-th cycle")
    cycle.add_argument("--n", type=int, default=1, dest="n")
    commands.add_parser(Command.PAIRING.value, parents=[common], help="pairing matrix")
    render = commands.add_parser(Command.RENDER.value, parents=[common], help="draw as SVG")
    render.add_argument("--out", default=None, help="SVG file to write, stdout if omitted")
    return parser


def __on_command_line(argv: list[str]) -> argparse.Namespace:
    """
    Handle command line
    """
    args = build_parser().parse_args(argv)

    log_level = logging.DEBUG if args.debug else logging.INFO

    logging.basicConfig(
        level=log_level,
        format=LOG_FORMAT,
        datefmt=LOG_DATE_FORMAT,
        handlers=[logging.StreamHandler(sys.stderr)],
    )
    return args


def main(argv: list[str] | None = None) -> int:
    args = __on_command_line(sys.argv[1:] if argv is None else argv)

    from sl3cycles.app_controller import AppController
    from sl3cycles.application import EXIT_USAGE, Application

    try:
        AppController(args)
        return Application().run()
    except ConfigurationError as e:
        log.error(e)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

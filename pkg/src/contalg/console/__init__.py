# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Console commands of the contalg command line.

Every command module provides add_parser() to register its subcommand and a function with the
command name that runs it and exits with 0, 1, 2 or 3.
"""
import argparse
import logging

from contalg.settings import Limits
from contalg.support.conversions import as_int_list
from contalg.support.exit import InvalidParameterError
from contalg.support.log import start_logger


def int_list(text: str) -> list[int]:
    """Return the integers of a comma separated list such as "1,2" for argparse."""
    try:
        return as_int_list(text)
    except InvalidParameterError as error:
        raise argparse.ArgumentTypeError(str(error))


def add_common_arguments(parser: argparse.ArgumentParser) -> None:
    """Add the cap, seed, JSON and logging parameters every command accepts."""
    parser.add_argument("--json", dest="json_path", help="Write the JSON report to this file", metavar="PATH")
    parser.add_argument("--cap", type=int, help="Order and vertex cap, overrides CONTALG_CAP", metavar="N")
    parser.add_argument("--seed", type=int, help="Seed for sampled scans", metavar="N")
    parser.add_argument("--log-dir", dest="log_dir", help="Directory for the log files", metavar="DIR")
    parser.add_argument("-V", "--verbose", help="Verbose log mode", action="store_true")
    parser.add_argument("-D", "--debug", help="Debug mode", action="store_true")


def start_command(
    filename: str,
    verbose: bool = False,
    debug: bool = False,
    log_dir: str = None,
    cap: int = None,
    seed: int = None,
) -> Limits:
    """Start the logger for a command and return the limits of the run."""
    log_level = logging.INFO

    if debug:
        log_level = logging.DEBUG
    elif verbose:
        log_level = logging.VERBOSE

    start_logger(log_dir, log_level, filename, debug_log=log_dir is not None)
    return Limits.from_environment(cap, seed)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Console command that describes the structure of a finite commutative ring.

.. highlight:: none

Builds the ring and reports its zero-divisors, nilradical, minimal and associated primes,
Property (A), primality, zd(R), the diameter of its zero-divisor graph and the predicted diameter
of the zero-divisor graph of R[X].

Command Line Parameters
    expr            Ring expression, for example Z6, "Z2 x Z4" or "Z2[u,v]@3".
    --json          Path of the JSON report file.
    --pdf           Path of the PDF report file.
    --cap           Order and vertex cap, overrides the CONTALG_CAP environment variable.
    --seed          Seed for sampled scans.
    --log-dir       Directory for the log files, no log files without it.
    --verbose, -V   Flag for additional logging, verbose logging.
    --debug, -D     Flag for maximum logging for debugging.

**Return Value**

Returns 0 on success, 2 if the expression does not parse and 3 if a cap was reached.

**Example**

.. code-block:: python

   contalg analyze Z6
   contalg analyze "Z2 x Z4" --json z2xz4.json --pdf z2xz4.pdf
"""
import argparse
import sys

from contalg.console import add_common_arguments, start_command
from contalg.parser import build_ring
from contalg.report import RingReport, build_report, log_report, save_json
from contalg.support.exit import LIMIT_EXIT_CODE, SUCCESS_EXIT_CODE, exit_on_exception


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the analyze subcommand."""
    parser = subparsers.add_parser(
        "analyze",
        help="Describe the structure of a ring",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("expr", help="Ring expression, e.g. Z6")
    parser.add_argument("--pdf", dest="pdf_path", help="Write the PDF report to this file", metavar="PATH")
    add_common_arguments(parser)


def analyze(
    expr: str,
    json_path: str = None,
    pdf_path: str = None,
    cap: int = None,
    seed: int = None,
    log_dir: str = None,
    verbose: bool = False,
    debug: bool = False,
) -> None:
    """Report the structure of a ring and exit.

    Args:
        expr: Ring expression.
        json_path: Optional path of the JSON report.
        pdf_path: Optional path of the PDF report.
        cap: Optional order and vertex cap.
        seed: Optional sampling seed.
        log_dir: Optional directory for log files.
        verbose: Displays additional logging if True.
        debug: Displays all possible logging if True.
    """
    try:
        limits = start_command("analyze.log", verbose, debug, log_dir, cap, seed)

        ring = build_ring(expr, limits)
        document = build_report(ring, limits)
        log_report(document)

        if json_path is not None:
            save_json(document, json_path)
        if pdf_path is not None:
            RingReport(ring, document).save(pdf_path)

        sys.exit(LIMIT_EXIT_CODE if document["limits"]["reached"] else SUCCESS_EXIT_CODE)

    except Exception as e:
        exit_on_exception(e)

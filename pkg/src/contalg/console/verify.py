# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Console command that verifies content algebra and zero-divisor graph theorems on rings.

.. highlight:: none

Runs a verify suite, or all of them, on one ring or on every ring of the fixture list.  Each
suite checks its requirements over the polynomials of degree at most d and reports every outcome
as Verified, Refuted with a witness that replays the failure, or Inconclusive with the reason.

Suites: dm, mccoy, content, minprimes, ass, zdcover, regular, primeto, primal, nil, zpow, diam
and all.

Command Line Parameters
    suite           Suite name or all.
    expr            Ring expression, for example Z6.  Not used with --fixtures.
    --fixtures      Verify every ring of the fixture list.
    --degree        Truncation degree d, default 2.
    --degrees       Comma separated degrees of the diameter suite, default 1,2.
    --nmax          Largest Dedekind-Mertens exponent tried by the dm suite.
    --count         Number of sampled pairs of the dm suite.
    --ideal         Ideal of the primeto suite, for example "(2)".  Every proper principal
                    ideal without it.
    --json          Path of the JSON report file.
    --pdf           Path of the PDF report file.
    --results-dir   Directory for the check_result.json file of every check.
    --cap           Order and vertex cap, overrides the CONTALG_CAP environment variable.
    --seed          Seed for sampled scans.
    --log-dir       Directory for the log files, no log files without it.
    --verbose, -V   Flag for additional logging, verbose logging.
    --debug, -D     Flag for maximum logging for debugging.

**Return Value**

Returns 0 if every outcome is verified, 1 if any is refuted, 2 for invalid input and 3 if any is
inconclusive or a cap was reached.

**Example**

.. code-block:: python

   contalg verify diam "Z2 x Z2" --degrees 1,2
   contalg verify all --fixtures --json fixtures.json
"""
import argparse
import json
import os
import sys

from contalg import FIXTURES_FILE, suites
from contalg.check import CheckSuite
from contalg.console import add_common_arguments, int_list, start_command
from contalg.parser import build_ring, parse_ideal
from contalg.report import RingReport, build_report, log_report, save_json
from contalg.settings import DEFAULT_DEGREE, DEFAULT_DEGREES, DEFAULT_DM_SAMPLES, Limits
from contalg.support.exit import (
    LIMIT_EXIT_CODE,
    REFUTED_EXIT_CODE,
    SUCCESS_EXIT_CODE,
    InvalidParameterError,
    exit_on_exception,
)


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the verify subcommand."""
    parser = subparsers.add_parser(
        "verify",
        help="Verify theorems on a ring",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("suite", choices=suites.SUITE_NAMES, help="Suite to run")
    parser.add_argument("expr", nargs="?", help="Ring expression, e.g. Z6")
    parser.add_argument("--fixtures", help="Verify every fixture ring", action="store_true")
    parser.add_argument("--degree", type=int, default=DEFAULT_DEGREE, help="Truncation degree", metavar="D")
    parser.add_argument(
        "--degrees",
        type=int_list,
        default=list(DEFAULT_DEGREES),
        help="Degrees of the diameter suite",
        metavar="LIST",
    )
    parser.add_argument("--nmax", dest="n_max", type=int, help="Largest Dedekind-Mertens exponent", metavar="N")
    parser.add_argument("--count", type=int, default=DEFAULT_DM_SAMPLES, help="Pairs of the dm suite", metavar="N")
    parser.add_argument("--ideal", help="Ideal of the primeto suite, e.g. (2)", metavar="GENS")
    parser.add_argument("--pdf", dest="pdf_path", help="Write the PDF report to this file", metavar="PATH")
    parser.add_argument("--results-dir", dest="results_dir", help="Directory for check results", metavar="DIR")
    add_common_arguments(parser)


def fixture_rings(filepath: str = FIXTURES_FILE) -> list[str]:
    """Return the ring expressions of the fixture list."""
    with open(filepath, encoding="utf-8") as file_object:
        return json.load(file_object)["rings"]


def _numbered(filepath: str, number: int, total: int) -> str:
    if total == 1:
        return filepath
    stem, extension = os.path.splitext(filepath)
    return f"{stem}_{number}{extension}"


def verify_ring(
    suite_name: str,
    expr: str,
    limits: Limits,
    degree: int = DEFAULT_DEGREE,
    degrees: list[int] = DEFAULT_DEGREES,
    n_max: int = None,
    count: int = DEFAULT_DM_SAMPLES,
    ideal: str = None,
    results_dir: str = None,
) -> tuple[int, dict, object, list[dict]]:
    """Run the suites on one ring.

    Returns:
        Exit code of the suite run, report document, ring and check results.
    """
    ring = build_ring(expr, limits)
    directory = None
    if results_dir is not None:
        directory = os.path.join(results_dir, "".join(c if c.isalnum() else "_" for c in str(ring)))

    check_args = {
        "ring": ring,
        "directory": directory,
        "degree": degree,
        "degrees": degrees,
        "limits": limits,
        "n_max": n_max,
        "count": count,
        "ideal": None if ideal is None else parse_ideal(ideal, ring),
    }
    run = CheckSuite(f"{suite_name} on {ring}", f"Verify suite {suite_name}, degree {degree}", check_args)
    for module in suites.select(suite_name):
        run.run_check(module)
    code = run.end()

    document = build_report(ring, limits, run.results, degree, degrees)
    if document["limits"]["reached"] and code == SUCCESS_EXIT_CODE:
        code = LIMIT_EXIT_CODE
    return code, document, ring, run.results


def verify(
    suite: str,
    expr: str = None,
    fixtures: bool = False,
    degree: int = DEFAULT_DEGREE,
    degrees: list[int] = DEFAULT_DEGREES,
    n_max: int = None,
    count: int = DEFAULT_DM_SAMPLES,
    ideal: str = None,
    json_path: str = None,
    pdf_path: str = None,
    results_dir: str = None,
    cap: int = None,
    seed: int = None,
    log_dir: str = None,
    verbose: bool = False,
    debug: bool = False,
) -> None:
    """Verify suites on one ring or the fixture rings and exit.

    The JSON report is one document for a single ring and a list of documents with --fixtures.
    With more than one ring the PDF file name gets the ring number appended.

    Args:
        suite: Suite name or all.
        expr: Ring expression, required without fixtures.
        fixtures: Verify every fixture ring if True.
        degree: Truncation degree.
        degrees: Degrees of the diameter suite.
        n_max: Largest Dedekind-Mertens exponent.
        count: Number of pairs of the dm suite.
        ideal: Ideal of the primeto suite.
        json_path: Optional path of the JSON report.
        pdf_path: Optional path of the PDF report.
        results_dir: Optional directory for check results.
        cap: Optional order and vertex cap.
        seed: Optional sampling seed.
        log_dir: Optional directory for log files.
        verbose: Displays additional logging if True.
        debug: Displays all possible logging if True.
    """
    try:
        limits = start_command("verify.log", verbose, debug, log_dir, cap, seed)

        if fixtures == (expr is not None):
            raise InvalidParameterError("Give either a ring expression or --fixtures")
        if suite not in suites.SUITE_NAMES:
            raise InvalidParameterError(f"Unknown suite '{suite}', use one of {', '.join(suites.SUITE_NAMES)}")
        if degree < 0 or (n_max is not None and n_max < 1) or count < 1:
            raise InvalidParameterError("Degree must be at least 0, nmax and count at least 1")

        expressions = fixture_rings() if fixtures else [expr]
        codes, documents = [], []
        for number, this_expr in enumerate(expressions, start=1):
            code, document, ring, results = verify_ring(
                suite, this_expr, limits, degree, degrees, n_max, count, ideal, results_dir
            )
            log_report(document)
            codes.append(code)
            documents.append(document)
            if pdf_path is not None:
                RingReport(ring, document, results).save(_numbered(pdf_path, number, len(expressions)))

        if json_path is not None:
            save_json(documents if fixtures else documents[0], json_path)

        if REFUTED_EXIT_CODE in codes:
            sys.exit(REFUTED_EXIT_CODE)
        if LIMIT_EXIT_CODE in codes:
            sys.exit(LIMIT_EXIT_CODE)
        sys.exit(SUCCESS_EXIT_CODE)

    except Exception as e:
        exit_on_exception(e)

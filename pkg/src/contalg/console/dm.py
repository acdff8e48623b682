# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Console command that finds the Dedekind-Mertens exponent of two polynomials.

.. highlight:: none

Finds the least n with c(f)^n c(g) = c(f)^(n-1) c(fg) for polynomials f and g over the ring.
Coefficients are element names of the ring, parenthesized when they contain a comma or a
variable.  For every n that fails the report names an element in exactly one side.

Command Line Parameters
    expr            Ring expression, for example "Z2[u,v]@3".
    f               Polynomial literal, for example "(u)*X + (v)".
    g               Polynomial literal.
    --nmax          Largest exponent tried, default is the number of terms of g plus one.
    --json          Path of the JSON report file.
    --cap           Order and vertex cap, overrides the CONTALG_CAP environment variable.
    --seed          Seed for sampled scans.
    --log-dir       Directory for the log files, no log files without it.
    --verbose, -V   Flag for additional logging, verbose logging.
    --debug, -D     Flag for maximum logging for debugging.

**Return Value**

Returns 0 if an exponent is found, 1 if none exists up to the default bound, 2 for invalid
input and 3 if --nmax stopped the search below the default bound.

**Example**

.. code-block:: python

   contalg dm "Z2[u,v]@3" "(u)*X + (v)" "(u)*X + (v)"
"""
import argparse
import sys

from contalg.check import CheckOutcome, Verdict
from contalg.console import add_common_arguments, start_command
from contalg.content_theory import dm_exponent
from contalg.monoid_ring import MRElem
from contalg.parser import build_ring, parse_poly_literal
from contalg.report import build_report, log_report, save_json
from contalg.settings import RqmtId
from contalg.support.exit import LIMIT_EXIT_CODE, REFUTED_EXIT_CODE, SUCCESS_EXIT_CODE, exit_on_exception
from contalg.support.log import log

EXIT_CODES = {
    Verdict.VERIFIED: SUCCESS_EXIT_CODE,
    Verdict.REFUTED: REFUTED_EXIT_CODE,
    Verdict.INCONCLUSIVE: LIMIT_EXIT_CODE,
}


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the dm subcommand."""
    parser = subparsers.add_parser(
        "dm",
        help="Find the Dedekind-Mertens exponent of f and g",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("expr", help="Ring expression, e.g. Z4")
    parser.add_argument("f", help="Polynomial literal, e.g. 2*X + 1")
    parser.add_argument("g", help="Polynomial literal")
    parser.add_argument("--nmax", dest="n_max", type=int, help="Largest exponent tried", metavar="N")
    add_common_arguments(parser)


def dm_pair_outcome(f: MRElem, g: MRElem, n_max: int = None) -> CheckOutcome:
    """Return the outcome of the exponent search for one pair.

    A search stopped by an n_max below the default bound is inconclusive, a search that reaches
    the default bound without an exponent is refuted.
    """
    name = "Dedekind-Mertens exponent"
    bound = g.term_count + 1
    result = dm_exponent(f, g, n_max)
    parameters = {"f": str(f), "g": str(g), "nmax": result.n_max}
    if result.found:
        return CheckOutcome.verified(name, result.as_dict(), parameters)
    if result.n_max < bound:
        reason = f"no exponent up to {result.n_max}, below the bound {bound}"
        return CheckOutcome.inconclusive(name, reason, result.as_dict(), parameters)
    reason = f"no exponent up to {result.n_max}"
    return CheckOutcome.refuted(name, {"f": str(f), "g": str(g)}, reason, result.as_dict(), parameters)


def dm(
    expr: str,
    f: str,
    g: str,
    n_max: int = None,
    json_path: str = None,
    cap: int = None,
    seed: int = None,
    log_dir: str = None,
    verbose: bool = False,
    debug: bool = False,
) -> None:
    """Report the Dedekind-Mertens exponent of (f, g) and exit.

    Args:
        expr: Ring expression.
        f: First polynomial literal.
        g: Second polynomial literal.
        n_max: Optional largest exponent.
        json_path: Optional path of the JSON report.
        cap: Optional order and vertex cap.
        seed: Optional sampling seed.
        log_dir: Optional directory for log files.
        verbose: Displays additional logging if True.
        debug: Displays all possible logging if True.
    """
    try:
        limits = start_command("dm.log", verbose, debug, log_dir, cap, seed)

        ring = build_ring(expr, limits)
        first = parse_poly_literal(f, ring)
        second = parse_poly_literal(g, ring)
        outcome = dm_pair_outcome(first, second, n_max)

        log.header(f"DEDEKIND-MERTENS : {ring}", indent=False)
        log.info(f"f         : {first}")
        log.info(f"g         : {second}")
        for failure in outcome.stats["failures"]:
            log.info(f"n = {failure['n']:<6}: fails, witness {failure['witness']}")
        exponent = outcome.stats["exponent"]
        if exponent is None:
            log.info(f"Exponent  : not found up to {outcome.stats['notFoundUpTo']}")
        else:
            log.info(f"Exponent  : {exponent}")
        log.info("")

        results = [
            {
                "title": "Dedekind Mertens",
                "outcomes": [{"requirement": RqmtId.DM_EXPONENT_EXISTS, **outcome.as_dict()}],
            }
        ]
        document = build_report(ring, limits, results)
        log_report(document)
        if json_path is not None:
            save_json(document, json_path)

        sys.exit(EXIT_CODES[outcome.verdict])

    except Exception as e:
        exit_on_exception(e)

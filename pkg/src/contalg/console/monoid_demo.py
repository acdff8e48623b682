# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Console command that builds the zero product of a monoid that is not cancellative or not torsion-free.

.. highlight:: none

Over a monoid with torsion, ks = kt with s != t gives f = X^s - X^t and g the sum of
X^((k-i-1)s + it) for i < k.  Over a monoid that is not cancellative, s + t = s + u with t != u
gives f = X^s and g = X^t - X^u.  Either way fg = 0 while c(f) = c(g) = R, so unit content,
weak content and McCoy's property all fail over R[S].

The torsion demo uses the cyclic group of the given order.  The noncancellative demo uses the
three element monoid {e, a, z} with a + a = a + z = z + z = z.

Command Line Parameters
    kind            torsion or noncancellative.
    --ring          Coefficient ring expression, default Z2.
    --order         Order of the cyclic group of the torsion demo, default 2.
    --json          Path of the JSON report file.
    --cap           Order and vertex cap, overrides the CONTALG_CAP environment variable.
    --seed          Seed for sampled scans.
    --log-dir       Directory for the log files, no log files without it.
    --verbose, -V   Flag for additional logging, verbose logging.
    --debug, -D     Flag for maximum logging for debugging.

**Return Value**

Returns 0 when the construction gives fg = 0 with unit contents, 1 if it does not, 2 for invalid
input.

**Example**

.. code-block:: python

   contalg monoid-demo torsion --ring Z3 --order 2
   contalg monoid-demo noncancellative
"""  # noqa: E501
import argparse
import sys

from contalg.check import CheckOutcome
from contalg.console import add_common_arguments, start_command
from contalg.content_theory import defect_witness
from contalg.monoid_ring import Monoid, content
from contalg.parser import build_ring
from contalg.report import build_report, log_report, save_json
from contalg.ring import FiniteRing
from contalg.settings import RqmtId
from contalg.support.exit import REFUTED_EXIT_CODE, SUCCESS_EXIT_CODE, InvalidParameterError, exit_on_exception
from contalg.support.log import log

KINDS = ("torsion", "noncancellative")


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the monoid-demo subcommand."""
    parser = subparsers.add_parser(
        "monoid-demo",
        help="Build fg = 0 with unit contents over a bad monoid",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("kind", choices=KINDS, help="Monoid defect to demonstrate")
    parser.add_argument("--ring", dest="ring_expr", default="Z2", help="Coefficient ring", metavar="EXPR")
    parser.add_argument("--order", type=int, default=2, help="Order of the cyclic group", metavar="N")
    add_common_arguments(parser)


def demo_outcome(monoid: Monoid, ring: FiniteRing) -> CheckOutcome:
    """Return the unit content outcome over R[S] built from the monoid's own construction.

    Raises:
        InvalidParameterError: The monoid is cancellative and torsion-free or R is the zero ring.
    """
    name = f"unit content over {ring}[{monoid}]"
    construction = defect_witness(monoid, ring)
    if construction is None:
        raise InvalidParameterError(f"{monoid} over {ring} gives no construction, it needs a defect and R != 0")
    f, g = construction
    product = f * g
    witness = {
        "f": str(f),
        "g": str(g),
        "fg": str(product),
        "c(f)": str(content(f)),
        "c(g)": str(content(g)),
    }
    stats = {"fgZero": product.is_zero, "unitContents": content(f).is_whole and content(g).is_whole}
    if stats["fgZero"] and stats["unitContents"]:
        return CheckOutcome.refuted(name, witness, "fg = 0 with c(f) = c(g) = R", stats, {"monoid": str(monoid)})
    return CheckOutcome.verified(name, stats, {"monoid": str(monoid)}, reason="construction did not give fg = 0")


def monoid_demo(
    kind: str,
    ring_expr: str = "Z2",
    order: int = 2,
    json_path: str = None,
    cap: int = None,
    seed: int = None,
    log_dir: str = None,
    verbose: bool = False,
    debug: bool = False,
) -> None:
    """Build and report the zero product over a monoid with a defect and exit.

    Args:
        kind: torsion or noncancellative.
        ring_expr: Coefficient ring expression.
        order: Order of the cyclic group of the torsion demo.
        json_path: Optional path of the JSON report.
        cap: Optional order and vertex cap.
        seed: Optional sampling seed.
        log_dir: Optional directory for log files.
        verbose: Displays additional logging if True.
        debug: Displays all possible logging if True.
    """
    try:
        limits = start_command("monoid_demo.log", verbose, debug, log_dir, cap, seed)

        if kind not in KINDS:
            raise InvalidParameterError(f"Unknown demo '{kind}', use torsion or noncancellative")
        ring = build_ring(ring_expr, limits)
        monoid = Monoid.cyclic(order) if kind == "torsion" else Monoid.absorbing()
        outcome = demo_outcome(monoid, ring)

        log.header(f"MONOID DEMO : {ring}[{monoid}]", indent=False)
        for key, value in outcome.witness.items():
            log.info(f"{key:<10}: {value}")
        log.info("")

        results = [
            {
                "title": "Monoid Demo",
                "outcomes": [{"requirement": RqmtId.CONTENT_MONOID_AGREEMENT, **outcome.as_dict()}],
            }
        ]
        document = build_report(ring, limits, results)
        log_report(document)
        if json_path is not None:
            save_json(document, json_path)

        sys.exit(SUCCESS_EXIT_CODE if outcome.is_refuted else REFUTED_EXIT_CODE)

    except Exception as e:
        exit_on_exception(e)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Console command that builds a zero-divisor graph.

.. highlight:: none

Builds the zero-divisor graph of the ring, or with --degree the graph of the polynomials of
degree at most d, and reports its size and diameter.  The graph is written in Graphviz DOT format
to the --dot file, or to stdout after the text report when --dot is not given.

Command Line Parameters
    expr            Ring expression, for example Z6.
    --degree        Degree of the truncated polynomial graph, base ring graph without it.
    --dot           Path of the DOT file.
    --json          Path of the JSON report file.
    --cap           Order and vertex cap, overrides the CONTALG_CAP environment variable.
    --seed          Seed for sampled scans.
    --log-dir       Directory for the log files, no log files without it.
    --verbose, -V   Flag for additional logging, verbose logging.
    --debug, -D     Flag for maximum logging for debugging.

**Return Value**

Returns 0 on success, 2 if the expression does not parse and 3 if the graph exceeds the vertex
cap.

**Example**

.. code-block:: python

   contalg graph Z6 --dot z6.dot
   contalg graph Z4 --degree 1
"""
import argparse
import sys

from contalg.console import add_common_arguments, start_command
from contalg.parser import build_ring
from contalg.report import build_report, save_json
from contalg.support.exit import SUCCESS_EXIT_CODE, exit_on_exception
from contalg.support.log import log
from contalg.zdgraph import diameter, gamma_of_ring, gamma_poly_truncated, to_dot


def add_parser(subparsers: argparse._SubParsersAction) -> None:
    """Register the graph subcommand."""
    parser = subparsers.add_parser(
        "graph",
        help="Build a zero-divisor graph",
        description=__doc__,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("expr", help="Ring expression, e.g. Z6")
    parser.add_argument("--degree", type=int, help="Truncation degree of the polynomial graph", metavar="D")
    parser.add_argument("--dot", dest="dot_path", help="Write the DOT graph to this file", metavar="PATH")
    add_common_arguments(parser)


def graph(
    expr: str,
    degree: int = None,
    dot_path: str = None,
    json_path: str = None,
    cap: int = None,
    seed: int = None,
    log_dir: str = None,
    verbose: bool = False,
    debug: bool = False,
) -> None:
    """Build, report and export a zero-divisor graph and exit.

    Args:
        expr: Ring expression.
        degree: Optional truncation degree, the base ring graph if None.
        dot_path: Optional path of the DOT file, DOT goes to stdout if None.
        json_path: Optional path of the JSON report.
        cap: Optional order and vertex cap.
        seed: Optional sampling seed.
        log_dir: Optional directory for log files.
        verbose: Displays additional logging if True.
        debug: Displays all possible logging if True.
    """
    try:
        limits = start_command("graph.log", verbose, debug, log_dir, cap, seed)

        ring = build_ring(expr, limits)
        if degree is None:
            zd_graph = gamma_of_ring(ring)
        else:
            zd_graph = gamma_poly_truncated(ring, degree, limits)
        result = diameter(zd_graph)

        title = f"ZERO-DIVISOR GRAPH : {ring}" + ("" if degree is None else f"[X], degree <= {degree}")
        log.header(title, indent=False)
        log.info(f"Vertices  : {result.vertices:,}")
        log.info(f"Edges     : {len(zd_graph.edges()):,}")
        if result.empty:
            log.info("Diameter  : Empty")
        elif not result.connected:
            log.info("Diameter  : disconnected")
        else:
            log.info(f"Diameter  : {result.diameter}")
            log.info(f"Witness   : {result.witness[0]} -- {result.witness[1]}")
        log.info("")

        dot = to_dot(zd_graph)
        if dot_path is not None:
            with open(dot_path, "w", encoding="utf-8") as file_object:
                file_object.write(dot)
            log.verbose(f"Saved DOT graph: {dot_path}")
        else:
            sys.stdout.write(dot)
            sys.stdout.flush()

        if json_path is not None:
            save_json(build_report(ring, limits), json_path)

        sys.exit(SUCCESS_EXIT_CODE)

    except Exception as e:
        exit_on_exception(e)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""This module builds the ring report in text, JSON and PDF form.

The report document is a dictionary with these fields, in this order:

    ring, zeroDivisors, nil, minimalPrimes, associatedPrimes, propertyA, primal, zdDegree,
    gammaDiameter, predictedExtensionDiameter, checkOutcomes, witnesses, limits

Elements are written with their canonical names, ideals with their generators and polynomials
as literals, so every value in a report parses back.  The document holds no timestamps or
durations, two runs with the same configuration write identical JSON.

The RingReport class creates the PDF report with the reportlab package and draws the
zero-divisor graph with networkx and matplotlib.  More details here:

    `ReportLab site  <https://docs.reportlab.com/>`_

    `networkx site <https://networkx.org/>`_
"""
from __future__ import annotations

import copy
import json
import os

import matplotlib.pyplot as plt
import networkx
import numpy

from reportlab.platypus import PageBreak, Paragraph, Table

from contalg import suites
from contalg.ideals import associated_primes, has_property_A, is_primal, minimal_primes, nilradical
from contalg.ideals import primal_failure_witness, zd_degree
from contalg.ring import FiniteRing, zero_divisors
from contalg.settings import DEFAULT_DEGREE, DEFAULT_DEGREES, Limits
from contalg.support.custom_reportlab import (
    CheckResult,
    FAIL_TEXT_STYLE,
    Heading,
    SUBHEADING_STYLE,
    TABLE_ROW_GRAY_COLOR,
    TABLE_STYLE,
    TABLE_TEXT_STYLE,
    TEXT_STYLE,
    TitlePage,
    VERDICT_COLORS,
    VERTEX_COLOR,
    VerdictDonut,
    convert_plot_to_image,
    save_reportlab_report,
)
from contalg.support.exit import ResourceLimitError
from contalg.support.log import log
from contalg.zdgraph import ZDGraph, diameter, gamma_of_ring, predict_extension_diam

EMPTY = "Empty"
DRAW_VERTEX_LIMIT = 64


def _bounded(compute: object, reached: list[str]) -> object:
    """Return compute(), or None and a note in reached when a cap stops it."""
    try:
        return compute()
    except ResourceLimitError as e:
        reached.append(str(e))
        return None


def _outcomes(results: list[dict]) -> list[dict]:
    outcomes = []
    for result in results:
        for outcome in result["outcomes"]:
            outcomes.append({"check": result["title"], **outcome})
        if "consistency" in result:
            outcomes.append(
                {
                    "check": result["title"],
                    "requirement": None,
                    "name": result["title"],
                    "verdict": "Refuted",
                    "witness": {},
                    "reason": result["consistency"],
                    "stats": {},
                    "parameters": {},
                }
            )
        if "limit" in result:
            outcomes.append(
                {
                    "check": result["title"],
                    "requirement": None,
                    "name": result["title"],
                    "verdict": "Inconclusive",
                    "witness": {},
                    "reason": result["limit"],
                    "stats": {},
                    "parameters": {},
                }
            )
    return outcomes


def build_report(
    ring: FiniteRing,
    limits: Limits = None,
    results: list[dict] = (),
    degree: int = DEFAULT_DEGREE,
    degrees: list[int] = DEFAULT_DEGREES,
) -> dict:
    """Return the report document of a ring and the check results of a verify run.

    Facts that need a capped enumeration are None when the cap is reached, the cap message is
    listed under limits.reached.

    Args:
        ring: Ring to describe.
        limits: Caps and seed of the run.
        results: Check result dictionaries from CheckSuite.results.
        degree: Truncation degree of the run.
        degrees: Degree list of the diameter check.
    """
    limits = Limits() if limits is None else limits
    reached = []
    names = ring.names

    def ideal_list(ideals: list | None) -> list[str] | None:
        return None if ideals is None else [str(p) for p in ideals]

    graph_diameter = diameter(gamma_of_ring(ring))
    prediction = _bounded(lambda: predict_extension_diam(ring, limits), reached)
    degree_of_r = _bounded(lambda: zd_degree(ring, limits.ideal_cap), reached)

    primal = is_primal(ring)
    witnesses = []
    if not primal:
        pair = primal_failure_witness(ring)
        if pair is not None:
            a, b = pair
            witnesses.append({"check": "primal", "a": names[a], "b": names[b], "sum": names[ring.plus(a, b)]})

    outcomes = _outcomes(results)
    for outcome in outcomes:
        if outcome["verdict"] == "Refuted" and outcome["witness"]:
            entry = {"check": outcome["check"], "requirement": outcome["requirement"]}
            witnesses.append({**entry, **outcome["witness"]})

    if prediction is None:
        predicted = None
    else:
        predicted = EMPTY if prediction.diameter is None else prediction.diameter

    return {
        "ring": {"expression": str(ring), "order": ring.order},
        "zeroDivisors": [names[a] for a in sorted(zero_divisors(ring))],
        "nil": [names[a] for a in nilradical(ring).indices],
        "minimalPrimes": ideal_list(_bounded(lambda: minimal_primes(ring, limits.ideal_cap), reached)),
        "associatedPrimes": ideal_list(associated_primes(ring)),
        "propertyA": _bounded(lambda: has_property_A(ring, limits.ideal_cap), reached),
        "primal": primal,
        "zdDegree": None if degree_of_r is None else degree_of_r.n,
        "gammaDiameter": EMPTY if graph_diameter.empty else graph_diameter.diameter,
        "predictedExtensionDiameter": predicted,
        "checkOutcomes": outcomes,
        "witnesses": witnesses,
        "limits": {**limits.as_dict(), "degree": degree, "degrees": list(degrees), "reached": reached},
    }


def _json_default(value: object) -> object:
    if isinstance(value, numpy.generic):
        return value.item()
    if isinstance(value, (set, frozenset, tuple)):
        return sorted(value) if isinstance(value, (set, frozenset)) else list(value)
    raise TypeError(f"{type(value).__name__} is not JSON serializable")


def dumps(document: object) -> str:
    return json.dumps(document, ensure_ascii=False, indent=4, default=_json_default) + "\n"


def save_json(document: object, filepath: str) -> None:
    """Write a report document, or a list of them, as UTF-8 JSON."""
    directory = os.path.dirname(os.path.abspath(filepath))
    os.makedirs(directory, exist_ok=True)
    with open(filepath, "w", encoding="utf-8") as file_object:
        file_object.write(dumps(document))
    log.verbose(f"Saved JSON report: {filepath}")


def _text(value: object) -> str:
    if value is None:
        return "N/A (cap reached)"
    if isinstance(value, list):
        return "{" + ", ".join(str(v) for v in value) + "}"
    return str(value)


def log_report(report: dict) -> None:
    """Log the human-readable text report at INFO level."""
    log.header(f"RING REPORT : {report['ring']['expression']}", indent=False)
    rows = [
        ("Order", report["ring"]["order"]),
        ("Z(R)", report["zeroDivisors"]),
        ("Nil(R)", report["nil"]),
        ("Min(R)", report["minimalPrimes"]),
        ("Ass(R)", report["associatedPrimes"]),
        ("Property (A)", report["propertyA"]),
        ("Primal", report["primal"]),
        ("zd(R)", report["zdDegree"]),
        ("diam Gamma(R)", report["gammaDiameter"]),
        ("diam Gamma(R[X])", report["predictedExtensionDiameter"]),
    ]
    for label, value in rows:
        log.info(f"{label:<18}: {_text(value)}")

    if report["checkOutcomes"]:
        log.info("")
        log.info("Check outcomes")
        for outcome in report["checkOutcomes"]:
            line = f"  {outcome['verdict']:<13} {outcome['check']} / {outcome['name']}"
            if outcome["verdict"] != "Verified" and outcome["reason"]:
                line += f"  [{outcome['reason']}]"
            log.info(line)
    for witness in report["witnesses"]:
        details = ", ".join(f"{k} = {v}" for k, v in witness.items() if k not in ("check", "requirement"))
        log.info(f"Witness ({witness['check']}): {details}")
    for note in report["limits"]["reached"]:
        log.info(f"Cap reached: {note}")
    log.info("")


def draw_graph(graph: ZDGraph, seed: int) -> object:
    """Return a reportlab image of the graph drawn with a seeded spring layout."""
    fig, ax = plt.subplots(figsize=(6, 4))
    nx_graph = graph.to_networkx()
    layout = networkx.spring_layout(nx_graph, seed=seed)
    networkx.draw_networkx(
        nx_graph,
        layout,
        ax=ax,
        node_color=VERTEX_COLOR,
        node_size=220,
        font_size=6,
        font_color="white",
        edge_color="#707070",
    )
    ax.axis("off")
    image = convert_plot_to_image(fig, ax)
    plt.close(fig)
    return image


class RingReport:
    """Class to create the PDF report of a ring and its check results.

    Example:
        Build the report document, then the PDF::

            document = build_report(ring, limits, suite.results)
            report = RingReport(ring, document, suite.results)
            report.save("./z6.pdf")

    Attributes:
        filepath: Path to the PDF report file created.
    """

    _DEFAULT_REPORT_NAME = "contalg_report.pdf"
    _DEFAULT_TITLE = "Ring Report"

    def __init__(
        self, ring: FiniteRing, document: dict, results: list[dict] = (), title: str = "", description: str = ""
    ) -> None:
        """Initialize the report but don't create the file.

        Args:
            ring: The ring the document describes.
            document: Report document from build_report().
            results: Check result dictionaries shown one per page.
            title: Optional title for the report.
            description: Optional description for the title page.
        """
        self.filepath = os.path.join(".", RingReport._DEFAULT_REPORT_NAME)
        self._elements = []
        self._document = document
        self._results = list(results)
        self.ring_name = document["ring"]["expression"]

        if description == "":
            description = f"Structure of {self.ring_name} and its polynomial extension"
        self._elements.append(TitlePage(self.ring_name, title or RingReport._DEFAULT_TITLE, description))
        self._add_summary()
        self._add_graph(ring, document["limits"]["seed"])

        for result in self._results:
            self._add_check_heading(result)
            self._add_requirement_table(result)
            self._get_check_report(result)

        if self._results:
            self._add_requirement_results_appendix()

    def _add_summary(self) -> None:
        self.add_pagebreak()
        self.add_heading("Summary")
        document = self._document
        self.add_paragraph(
            f"""{self.ring_name} has order {document['ring']['order']} and
            {len(document['zeroDivisors'])} zero-divisors including 0.  The table lists the
            structure the checks depend on."""
        )
        rows = [
            ["PARAMETER", "VALUE"],
            ["Zero-divisors Z(R)", _text(document["zeroDivisors"])],
            ["Nilradical Nil(R)", _text(document["nil"])],
            ["Minimal primes", _text(document["minimalPrimes"])],
            ["Associated primes", _text(document["associatedPrimes"])],
            ["Property (A)", _text(document["propertyA"])],
            ["Primal", _text(document["primal"])],
            ["zd(R)", _text(document["zdDegree"])],
            ["Diameter of the zero-divisor graph", _text(document["gammaDiameter"])],
            ["Predicted diameter over R[X]", _text(document["predictedExtensionDiameter"])],
        ]
        rows = [rows[0]] + [[label, Paragraph(value, style=TABLE_TEXT_STYLE)] for label, value in rows[1:]]
        self.add_table(rows, [200, 300])

        if self._results:
            verified = sum(1 for r in self._results if r["result"] == "verified")
            refuted = sum(1 for r in self._results if r["result"] == "refuted")
            self.add_paragraph(f"A total of {len(self._results)} checks were run.")
            inconclusive = len(self._results) - verified - refuted
            self._elements.append(VerdictDonut(verified, refuted, inconclusive, 2).image)

    def _add_graph(self, ring: FiniteRing, seed: int) -> None:
        graph = gamma_of_ring(ring)
        self.add_subheading("ZERO-DIVISOR GRAPH")
        if len(graph) == 0:
            self.add_paragraph("The ring has no proper zero-divisors, the graph is empty.")
        elif len(graph) > DRAW_VERTEX_LIMIT:
            self.add_paragraph(f"The graph has {len(graph)} vertices, too many to draw.")
        else:
            self.add_paragraph(f"The graph has {len(graph)} vertices and {len(graph.edges())} edges.")
            self._elements.append(draw_graph(graph, seed))

    def _add_check_heading(self, result: dict) -> None:
        self.add_pagebreak()
        self.add_heading(result["name"])
        self._elements.append(CheckResult(result))

    def _add_requirement_table(self, result: dict) -> None:
        table_data = [["ID", "REQUIREMENT", "RESULT"]]
        for rqmt in sorted(result["requirements"]["condensed"]):
            counts = result["requirements"]["condensed"][rqmt]
            if counts["fail"] > 0:
                verdict = "REFUTED"
            elif counts["inconclusive"] > 0:
                verdict = "OPEN"
            else:
                verdict = "VERIFIED"
            table_data.append([rqmt, Paragraph(counts["name"], style=TABLE_TEXT_STYLE), verdict])
        self.add_table(table_data, [40, 380, 80], verdict_fmt=True)

    def _get_check_report(self, result: dict) -> None:
        module = suites.BY_ID.get(result["id"])
        if module is not None:
            module.report(self, result)

    def _add_requirement_results_appendix(self) -> None:
        self.add_pagebreak()
        self.add_heading("Appendix: Requirement Results")
        self.add_paragraph(
            """A requirement can be verified more than once within a check.  The table below lists
            the number of verified, refuted and inconclusive attempts for each requirement."""
        )
        totals = {}
        for result in self._results:
            for rqmt, counts in result["requirements"]["condensed"].items():
                entry = totals.setdefault(rqmt, {"name": counts["name"], "pass": 0, "fail": 0, "inconclusive": 0})
                for key in ("pass", "fail", "inconclusive"):
                    entry[key] += counts[key]

        req_table = [["ID", "NAME", "PASS", "FAIL", "OPEN"]]
        for rqmt in sorted(totals):
            entry = totals[rqmt]
            pstyle = TEXT_STYLE if entry["fail"] == 0 else FAIL_TEXT_STYLE
            req_table.append(
                [
                    Paragraph(rqmt, pstyle),
                    Paragraph(entry["name"], pstyle),
                    Paragraph(str(entry["pass"]), pstyle),
                    Paragraph(str(entry["fail"]), pstyle),
                    Paragraph(str(entry["inconclusive"]), pstyle),
                ]
            )
        self.add_table(req_table, [40, 310, 50, 50, 50])

    def add_check_result_intro(self, result: dict) -> None:
        """Add one paragraph saying whether the check verified its requirements."""
        self.add_subheading("RESULTS")
        if result["result"] == "aborted":
            self.add_paragraph("The check aborted with an unexpected error, see debug.log for details.")
        elif result["result"] == "refuted":
            self.add_paragraph("One or more requirements were refuted, the witnesses are listed below.")
        elif result["result"] == "inconclusive":
            reason = result.get("limit", "the truncation could not decide every requirement")
            self.add_paragraph(f"The check is inconclusive: {reason}.")
        else:
            self.add_paragraph("All requirements were verified at this truncation.")

    def add_outcome_table(self, result: dict) -> None:
        """Add a table with the verdict and witness or reason of every outcome."""
        rows = [["OUTCOME", "DETAILS", "VERDICT"]]
        for outcome in result["outcomes"]:
            if outcome["witness"]:
                details = ", ".join(f"{k} = {v}" for k, v in outcome["witness"].items())
            elif outcome["reason"]:
                details = outcome["reason"]
            else:
                details = ", ".join(f"{k} = {v}" for k, v in outcome["parameters"].items())
            rows.append(
                [
                    Paragraph(outcome["name"], style=TABLE_TEXT_STYLE),
                    Paragraph(details, style=TABLE_TEXT_STYLE),
                    outcome["verdict"].upper(),
                ]
            )
        self.add_table(rows, [170, 250, 80], verdict_fmt=True)

    def add_exception_report(self, error: Exception) -> None:
        """Add standard text when an exception occurs adding a check result to the report.

        The exception is logged but not reraised so the report can still be finished.

        Args:
           error (Exception):  The exception that occurred.
        """
        log.exception(error)
        self.add_paragraph(
            f"""A fatal error occurred creating the report for this check.  This most likely is
            caused by incomplete check data from an aborted check.
            <br/><br/>
            The error details are: {error}"""
        )

    def add_heading(self, text: str) -> None:
        self._elements.append(Heading(text))

    def add_pagebreak(self) -> None:
        self._elements.append(PageBreak())

    def add_paragraph(self, text: str) -> None:
        self._elements.append(Paragraph(text, style=TEXT_STYLE))

    def add_subheading(self, text: str) -> None:
        self._elements.append(Paragraph(text, style=SUBHEADING_STYLE))

    def add_table(self, rows: list[list], widths: list[int], verdict_fmt: bool = False) -> None:
        """Add generic table with a header row.

        Args:
           rows:  First element is the header row, first element in a row is column 0 data.
           widths:  First element is column 0 width, next is column 1 width, etc.
           verdict_fmt:  Color the last column by verdict if True.
        """
        if len(rows) == 0:
            return

        table_style = copy.deepcopy(TABLE_STYLE)
        for row_number, table_row in enumerate(rows[1:], start=1):
            if row_number % 2 == 0:
                table_style.add("BACKGROUND", (0, row_number), (-1, row_number), TABLE_ROW_GRAY_COLOR)
            if verdict_fmt:
                verdict = str(table_row[-1]).lower()
                color = VERDICT_COLORS.get(verdict, VERDICT_COLORS["inconclusive"])
                table_style.add("TEXTCOLOR", (-1, row_number), (-1, row_number), color)
                table_style.add("FONT", (-1, row_number), (-1, row_number), "Helvetica-Bold")

        self._elements.append(
            Table(rows, colWidths=widths, style=table_style, hAlign="LEFT", spaceBefore=12, spaceAfter=12)
        )

    def save(self, filepath: str = None) -> None:
        """Save the report as a PDF file with a header and footer.

        Args:
           filepath: Optional path to the file to create.
        """
        if filepath is not None:
            self.filepath = filepath
        log.verbose(f"Saving PDF report: {self.filepath}")
        save_reportlab_report(self.filepath, self._elements, ring_name=self.ring_name, add_header_footer=True)

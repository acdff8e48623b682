# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for zero-divisor graph diameters of R and R[X].

The base graph is searched breadth first and its diameter compared with the structural
classification.  The diameter of the graph of R[X] is predicted from the facts of R and
compared with the truncated graphs at each degree of --degrees.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import CheckOutcome, TheoremCheck
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, DEFAULT_DEGREES, Limits, RqmtId
from contalg.support.exit import ConsistencyError
from contalg.zdgraph import classify_gamma, diameter, gamma_of_ring, verify_diam

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.DIAMETER


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """The zero-divisor graph has the proper zero-divisors as vertices and an edge
            between distinct x and y with xy = 0.  It is connected with diameter at most 3.  This
            check compares the breadth first search diameter with the structural
            classification, then compares the predicted diameter over R[X] with the diameters
            of the truncated polynomial graphs."""
        )
        report.add_check_result_intro(check_result)

        data = check_result["data"]
        rows = [
            ["PARAMETER", "VALUE"],
            ["Base diameter", str(data.get("base", {}).get("diameter", "N/A"))],
            ["Classification", data.get("classification", "N/A")],
            ["Degrees", ", ".join(str(d) for d in data.get("degrees", []))],
        ]
        report.add_table(rows, [150, 350])
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def base_diameter_outcome(ring: FiniteRing) -> CheckOutcome:
    name = "base graph diameter"
    try:
        result = diameter(gamma_of_ring(ring))
    except ConsistencyError as error:
        return CheckOutcome.refuted(name, {}, str(error))
    return CheckOutcome.verified(name, result.as_dict())


def classification_outcome(ring: FiniteRing, limits: Limits = None) -> CheckOutcome:
    name = "structural classification"
    try:
        classification = classify_gamma(ring, limits)
    except ConsistencyError as error:
        return CheckOutcome.refuted(name, {"ring": str(ring)}, str(error))
    stats = {"diameter": "Empty" if classification.diameter is None else classification.diameter}
    return CheckOutcome.verified(name, stats, reason=classification.branch)


def test(
    ring: FiniteRing,
    directory: str = None,
    degree: int = DEFAULT_DEGREE,
    degrees: list[int] = DEFAULT_DEGREES,
    limits: Limits = None,
    **kwargs: any,
) -> dict:
    """Verifies base diameters, the classification and the predicted diameter over R[X].

    Args:
       ring: Coefficient ring.
       directory: Optional directory for the check results file.
       degree: Unused, the truncated graphs use degrees.
       degrees: Truncation degrees of the polynomial graphs.
       limits: Caps and seed.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Diameter",
        description="Verifies zero-divisor graph diameters of R and R[X]",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degrees": list(degrees)})

        base = base_diameter_outcome(ring)
        check.data["base"] = base.stats
        check.verify_outcome(
            RqmtId.BASE_DIAMETER,
            "The zero-divisor graph of R shall be connected with diameter at most 3",
            base,
        )
        classification = classification_outcome(ring, limits)
        check.data["classification"] = classification.reason or classification.verdict.value
        check.verify_outcome(
            RqmtId.CLASSIFICATION,
            "The structural classification shall match the searched diameter",
            classification,
        )
        check.verify_outcome(
            RqmtId.EXTENSION_DIAMETER,
            "Truncated graph diameters of R[X] shall equal the prediction",
            verify_diam(ring, degrees, limits),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

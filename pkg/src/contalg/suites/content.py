# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for the content laws of R[X]."""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import (
    content_intersection_check,
    content_law_check,
    unit_content_check,
    weak_content_check,
)
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.CONTENT


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check verifies R[X] is a content algebra inside the truncation window.  The
            content c(f) is the ideal generated by the coefficients of f.  Products of unit
            content polynomials shall have unit content, c(f)c(g) shall lie in the radical of
            c(fg), and content shall respect sums, products and scalars.  The content is also
            compared with the intersection of every ideal I with f in IR[X]."""
        )
        report.add_check_result_intro(check_result)
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies the unit content, weak content and content laws over R[X].

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Content",
        description="Verifies R[X] is a content algebra over R",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree})

        check.verify_outcome(
            RqmtId.UNIT_CONTENT,
            "c(f) = c(g) = R shall imply c(fg) = R",
            unit_content_check(ring, None, degree, limits),
        )
        check.verify_outcome(
            RqmtId.WEAK_CONTENT,
            "c(f)c(g) shall lie in rad(c(fg))",
            weak_content_check(ring, None, degree, limits),
        )
        check.verify_outcome(
            RqmtId.CONTENT_LAWS,
            "Content shall respect sums, products and scalar multiples",
            content_law_check(ring, None, degree, limits),
        )
        check.verify_outcome(
            RqmtId.CONTENT_INTERSECTION,
            "c(f) shall equal the intersection of all I with f in IB",
            content_intersection_check(ring, None, degree, limits),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for regular polynomials: f is regular iff c(f) is not inside Z(R)."""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import regular_content_check
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.REGULAR_CONTENT


def report(report: RingReport, check_result: dict) -> None:
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """A polynomial of R[X] is regular exactly when its content contains a regular
            element of R.  This check compares both sides for every polynomial of the window."""
        )
        report.add_check_result_intro(check_result)
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Regular Content",
        description="Verifies f is regular in B iff c(f) is not inside Z(R)",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree})
        check.verify_outcome(
            RqmtId.REGULAR_CONTENT,
            "f shall be regular in B iff c(f) is not inside Z(R)",
            regular_content_check(ring, degree, limits),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

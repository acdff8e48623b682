# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for elements not prime to an extended ideal.

A polynomial f is not prime to IR[X] when fg lies in IR[X] for some g outside it.  For a content
algebra this happens exactly when a single scalar r outside I already has rf in IR[X].  Without
an ideal from --ideal the check runs over every proper principal ideal of R.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import prime_to_check
from contalg.ideals import Ideal, principal
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.PRIME_TO


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """For each ideal I this check compares two ways of deciding that f is not prime to
            IR[X]: a search for g outside IR[X] with fg inside it, and a search for a scalar r
            outside I with rf inside it.  A disagreement at degree d is retried once at degree
            d+1 because the first search only sees the window."""
        )
        report.add_check_result_intro(check_result)
        report.add_paragraph(f"Ideals checked: {', '.join(check_result['data'].get('ideals', []))}")
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def proper_principal_ideals(ring: FiniteRing) -> list[Ideal]:
    """Return the distinct proper principal ideals in order of their generators."""
    ideals = []
    for r in range(ring.order):
        ideal = principal(ring, r)
        if not ideal.is_whole and ideal not in ideals:
            ideals.append(ideal)
    return ideals


def test(
    ring: FiniteRing,
    directory: str = None,
    degree: int = DEFAULT_DEGREE,
    limits: Limits = None,
    ideal: Ideal = None,
    **kwargs: any,
) -> dict:
    """Verifies the scalar criterion for elements not prime to IB.

    Args:
       ring: Coefficient ring.
       directory: Optional directory for the check results file.
       degree: Truncation degree.
       limits: Caps and seed.
       ideal: Optional ideal, default is every proper principal ideal.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Prime To",
        description="Verifies f is not prime to IB iff rf is in IB for some r outside I",
        directory=directory,
    )
    try:
        ideals = proper_principal_ideals(ring) if ideal is None else [ideal]
        check.data.update({"ring": str(ring), "degree": degree, "ideals": [str(i) for i in ideals]})

        for this_ideal in ideals:
            check.verify_outcome(
                RqmtId.PRIME_TO,
                "f shall be prime to IB iff no r outside I has rf in IB",
                prime_to_check(ring, this_ideal, degree, limits),
            )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for primal rings and their polynomial extension.

R is primal when Z(R) is an ideal.  A primal R with Property (A) has a primal extension with
Z(R[X]) = Z(R)R[X] and Property (A).  A ring that is not primal makes the extension requirement
inconclusive, not refuted, because its hypothesis is unmet.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import primal_extension_check, primal_zd_degree_check, tq_triviality_check
from contalg.ideals import is_primal
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.PRIMAL


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check verifies that a primal ring with Property (A) has a primal polynomial
            extension: the zero-divisors of the window are exactly Z(R)R[X], sums of
            zero-divisors are zero-divisors and finitely generated ideals inside Z(R[X]) have
            nonzero annihilators.  A primal ring shall also have zd(R) = 1.  Finally every
            regular element of a finite ring is a unit, so the total quotient ring is R."""
        )
        report.add_check_result_intro(check_result)
        if not check_result["data"].get("primal", True):
            report.add_paragraph("The ring is not primal, the extension requirements do not apply.")
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies primal transfer, the zd degree of primal rings and the total quotient ring.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Primal",
        description="Verifies a primal R with Property (A) has a primal extension",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree, "primal": is_primal(ring)})

        check.verify_outcome(
            RqmtId.PRIMAL_EXTENSION,
            "Z(B) shall equal Z(R)B and B shall be primal with Property (A)",
            primal_extension_check(ring, degree, limits),
        )
        check.verify_outcome(
            RqmtId.PRIMAL_ZD_DEGREE,
            "A primal ring shall have zd(R) = 1",
            primal_zd_degree_check(ring, limits),
        )
        check.verify_outcome(
            RqmtId.TQ_TRIVIALITY,
            "Every regular element of R shall be a unit",
            tq_triviality_check(ring),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

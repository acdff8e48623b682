# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for the nilradical of R[X] and the zero-divisor sandwich."""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import nil_extension_check, zd_sandwich_check
from contalg.ideals import nilradical
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.NIL


def report(report: RingReport, check_result: dict) -> None:
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """A polynomial is nilpotent exactly when all its coefficients are nilpotent, so
            Nil(R[X]) = Nil(R)R[X].  The zero-divisors of R stay zero-divisors in R[X] and every
            zero-divisor of R[X] has its coefficients in Z(R)."""
        )
        report.add_check_result_intro(check_result)
        report.add_paragraph(f"Nil(R) = {check_result['data'].get('nilradical', 'N/A')}")
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies Nil(B) = Nil(R)B and Z(R) inside Z(B) inside Z(R)B.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Nil",
        description="Verifies the nilradical and zero-divisors of the extension",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree, "nilradical": str(nilradical(ring))})

        check.verify_outcome(
            RqmtId.NIL_EXTENSION,
            "Nil(B) shall equal Nil(R)B",
            nil_extension_check(ring, degree, limits),
        )
        check.verify_outcome(
            RqmtId.ZD_SANDWICH,
            "Z(R) shall lie in Z(B) and Z(B) in Z(R)B",
            zd_sandwich_check(ring, degree, limits),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

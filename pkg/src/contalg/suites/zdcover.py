# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for the zero-divisors of R[X] as a union of extended primes.

Z(R[X]) is the union of pR[X] over Ass(R).  When Z(R) is a union of minimal primes the same
holds for their extensions, and with Property (A) the number of maximal primes in Z(R) carries
over to R[X].
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import CheckOutcome, TheoremCheck
from contalg.content_theory import zd_cover_check
from contalg.ideals import has_property_A
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.ZD_COVER


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check compares the zero-divisors of the truncation window with the union of
            the extended associated primes and with the union of the extended minimal primes.
            Inclusions between the extensions shall match inclusions between the primes.  When
            R has Property (A) the zero-divisors of the window shall be covered by exactly zd(R)
            incomparable extended primes."""
        )
        report.add_check_result_intro(check_result)
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def property_a_outcome(ring: FiniteRing, limits: Limits = None) -> CheckOutcome:
    name = "Property (A)"
    limits = Limits() if limits is None else limits
    if has_property_A(ring, limits.ideal_cap):
        return CheckOutcome.verified(name)
    return CheckOutcome.refuted(name, {}, "an ideal inside Z(R) has zero annihilator")


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies the zero-divisor covers by Ass(R) and Min(R).

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="ZD Cover",
        description="Verifies Z(B) is the union of the extended primes",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree})

        check.verify_outcome(
            RqmtId.PROPERTY_A,
            "Every ideal inside Z(R) shall have a nonzero annihilator",
            property_a_outcome(ring, limits),
        )
        check.verify_outcome(
            RqmtId.ZD_COVER_ASS,
            "Z(B) shall be the union of pB over Ass(R)",
            zd_cover_check(ring, degree, limits, mode="ass"),
        )
        check.verify_outcome(
            RqmtId.ZD_COVER_MIN,
            "Z(B) shall be covered by Min(R)B iff Z(R) is covered by Min(R)",
            zd_cover_check(ring, degree, limits, mode="min"),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

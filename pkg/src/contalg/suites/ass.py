# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for associated primes of R[X]."""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import CheckOutcome, TheoremCheck
from contalg.content_theory import ass_extension_check
from contalg.ideals import associated_primes, very_few_zd
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.ASS_PRIMES


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """For every associated prime p = Ann(x) of R this check verifies the polynomials
            killed by x are exactly pR[X] and that pR[X] is prime, so Ass(R) extends into the
            associated primes of R[X].  A finite ring has very few zero-divisors: Z(R) is the
            union of its associated primes."""
        )
        report.add_check_result_intro(check_result)
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def very_few_zd_outcome(ring: FiniteRing) -> CheckOutcome:
    name = "very few zero-divisors"
    stats = {"associatedPrimes": [str(p) for p in associated_primes(ring)]}
    if very_few_zd(ring):
        return CheckOutcome.verified(name, stats)
    return CheckOutcome.refuted(name, {}, "Z(R) is not the union of Ass(R)", stats)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies associated primes extend and R has very few zero-divisors.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Ass Primes",
        description="Verifies Ann(x)B = {f : xf = 0} is prime for Ann(x) in Ass(R)",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree})

        check.verify_outcome(
            RqmtId.ASS_EXTENSION,
            "pB shall be an associated prime of B for every p in Ass(R)",
            ass_extension_check(ring, degree, limits),
        )
        check.verify_outcome(
            RqmtId.VERY_FEW_ZD,
            "Z(R) shall be the union of Ass(R)",
            very_few_zd_outcome(ring),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for powers of the zero-divisors of R[X].

When Z(R)^n = 0 for a least n, every product of n zero-divisors of R[X] vanishes and some product
of n-1 does not.  Rings without such an n, for example reduced rings with two minimal primes,
give an inconclusive outcome.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import zpow_check
from contalg.ideals import zero_divisor_power_index
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.ZPOW


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check multiplies zero-divisors of the truncation window level by level.
            Products of n zero-divisors shall all vanish and some product of n-1 shall not,
            where n is the least exponent with Z(R)<super>n</super> = 0.  Levels larger than
            the case cap are replaced by a seeded sample."""
        )
        report.add_check_result_intro(check_result)
        index = check_result["data"].get("n")
        report.add_paragraph(f"Least n with Z(R)^n = 0: {'none' if index is None else index}")
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies Z(B)^n = 0 and Z(B)^(n-1) != 0.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="ZD Power",
        description="Verifies the nilpotency index of Z(B) equals that of Z(R)",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree, "n": zero_divisor_power_index(ring)})

        check.verify_outcome(
            RqmtId.ZPOW,
            "Z(B)^n shall be 0 and Z(B)^(n-1) shall not",
            zpow_check(ring, degree, limits),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for prime extension and the minimal prime correspondence.

Every prime p of R extends to a prime pR[X] that contracts back to p, and p -> pR[X] maps the
minimal primes of R injectively onto minimal primes of the extension.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import contraction_check, min_prime_bijection_check, prime_extension_check
from contalg.ideals import prime_ideals
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.MIN_PRIMES


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check extends every prime ideal p of R to pR[X] and verifies the extension
            is prime inside the truncation window and contracts back to p.  It then verifies the
            minimal primes of R extend to distinct, pairwise incomparable primes.  Surjectivity
            onto the minimal primes of R[X] is not checked because they cannot be enumerated."""
        )
        report.add_check_result_intro(check_result)
        report.add_paragraph(f"Prime ideals of R: {', '.join(check_result['data'].get('primes', []))}")
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies prime extension, contraction and the minimal prime correspondence.

    Returns:
       returns results dictionary from TheoremCheck
    """
    limits = Limits() if limits is None else limits
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Min Primes",
        description="Verifies primes extend to primes and Min(R) maps onto minimal primes",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree})

        primes = prime_ideals(ring, limits.ideal_cap)
        check.data["primes"] = [str(p) for p in primes]
        for p in primes:
            check.verify_outcome(
                RqmtId.PRIME_EXTENSION,
                "pB shall be prime for every prime p of R",
                prime_extension_check(p, ring, degree, limits),
            )
            check.verify_outcome(
                RqmtId.CONTRACTION,
                "pB shall contract to p for every prime p of R",
                contraction_check(p, ring, degree, limits),
            )
        check.verify_outcome(
            RqmtId.MIN_PRIME_BIJECTION,
            "p -> pB shall map Min(R) injectively to minimal primes",
            min_prime_bijection_check(ring, degree, limits),
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

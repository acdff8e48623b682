# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for McCoy's property and its agreement with the monoid properties.

Over R[X] a polynomial is a zero-divisor exactly when a single nonzero scalar kills it.  Over
R[S] for a general monoid S the unit content, weak content and McCoy properties hold together
exactly when S is cancellative and torsion-free.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import default_monoids, mccoy_equiv_check, theorem3_matrix
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.MCCOY


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check verifies McCoy's property over R[X] by comparing a zero-divisor search
            inside the truncation window with the scalar annihilator criterion.  It then repeats
            the unit content, weak content and McCoy checks over five monoids.  All three shall
            hold exactly when the monoid is cancellative and torsion-free; otherwise the
            monoid's own construction gives fg = 0 with c(f) = c(g) = R."""
        )
        report.add_check_result_intro(check_result)

        rows = [["MONOID", "EXPECTED", "UNIT", "WEAK", "MCCOY"]]
        for monoid, verdicts in check_result["data"].get("monoids", {}).items():
            rows.append(
                [
                    monoid,
                    "holds" if verdicts["expected"] else "fails",
                    verdicts.get("unit content", "-"),
                    verdicts.get("weak content formula", "-"),
                    verdicts.get("McCoy equivalence", "-"),
                ]
            )
        report.add_table(rows, [100, 70, 110, 110, 110])
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing, directory: str = None, degree: int = DEFAULT_DEGREE, limits: Limits = None, **kwargs: any
) -> dict:
    """Verifies McCoy's property and the monoid equivalence matrix.

    Returns:
       returns results dictionary from TheoremCheck
    """
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="McCoy",
        description="Verifies McCoy's property and its monoid conditions",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree})

        check.verify_outcome(
            RqmtId.MCCOY_EQUIVALENCE,
            "f shall be a zero-divisor of R[X] iff rf = 0 for some nonzero r",
            mccoy_equiv_check(ring, None, degree, limits),
        )
        matrix = theorem3_matrix(ring, default_monoids(), degree, limits)
        check.data["monoids"] = matrix.stats
        check.verify_outcome(
            RqmtId.CONTENT_MONOID_AGREEMENT,
            "Content properties of R[S] shall hold iff S is cancellative and torsion-free",
            matrix,
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

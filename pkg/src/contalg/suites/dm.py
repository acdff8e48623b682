# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Check and report for the Dedekind-Mertens content formula over R[X].

For seeded pseudo-random pairs (f, g) of polynomials of degree at most d the check finds the
least n with c(f)^n c(g) = c(f)^(n-1) c(fg).  The search stops at the number of terms of g plus
one unless --nmax is given.
"""
# Allows type checking for the report function, else circular imports.

from __future__ import annotations

from typing import TYPE_CHECKING

from contalg.check import TheoremCheck
from contalg.content_theory import dm_sweep
from contalg.ring import FiniteRing
from contalg.settings import CheckId, DEFAULT_DEGREE, DEFAULT_DM_SAMPLES, Limits, RqmtId

if TYPE_CHECKING:
    from contalg.report import RingReport

CHECK_ID = CheckId.DEDEKIND_MERTENS


def report(report: RingReport, check_result: dict) -> None:
    """Create pages for pdf report provided.

    Args:
       check_result (dict): Dictionary with check results.
    """
    try:
        report.add_subheading("DESCRIPTION")
        report.add_paragraph(
            """This check verifies the Dedekind-Mertens content formula: for every pair of
            polynomials f and g there is an n with c(f)<super>n</super>c(g) =
            c(f)<super>n-1</super>c(fg).  Pairs are drawn with a seeded generator so the run
            can be repeated.  The table shows how often each least exponent occurred."""
        )
        report.add_check_result_intro(check_result)

        data = check_result["data"]
        rows = [["EXPONENT", "PAIRS"]]
        for exponent, count in data.get("exponents", {}).items():
            rows.append([exponent, f"{count:,}"])
        report.add_table(rows, [100, 100])
        report.add_outcome_table(check_result)

    except Exception as error:
        report.add_exception_report(error)


def test(
    ring: FiniteRing,
    directory: str = None,
    degree: int = DEFAULT_DEGREE,
    limits: Limits = None,
    n_max: int = None,
    count: int = DEFAULT_DM_SAMPLES,
    **kwargs: any,
) -> dict:
    """Verifies a Dedekind-Mertens exponent exists for sampled pairs in R[X].

    Args:
       ring: Coefficient ring.
       directory: Optional directory for the check results file.
       degree: Largest degree of f and g.
       limits: Caps and seed.
       n_max: Largest exponent tried, default is the number of terms of g plus one.
       count: Number of pairs.

    Returns:
       returns results dictionary from TheoremCheck
    """
    limits = Limits() if limits is None else limits
    check = TheoremCheck(
        check_id=CHECK_ID,
        name="Dedekind Mertens",
        description="Verifies c(f)^n c(g) = c(f)^(n-1) c(fg) for sampled pairs",
        directory=directory,
    )
    try:
        check.data.update({"ring": str(ring), "degree": degree, "count": count, "seed": limits.seed})

        outcome = dm_sweep(ring, degree, count, limits.seed, n_max)
        check.data["exponents"] = outcome.stats.get("exponents", {})
        check.verify_outcome(
            RqmtId.DM_EXPONENT_EXISTS,
            "A Dedekind-Mertens exponent shall exist for every pair",
            outcome,
        )
        return check.end()

    except Exception as error:
        return check.abort_on_exception(error)

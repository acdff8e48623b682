# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the check.py module."""

import json
import logging
import os

import pytest

from contalg import suites
from contalg.check import (
    CHECK_RESULTS_FILE,
    CheckOutcome,
    CheckSuite,
    TheoremCheck,
    Verdict,
    merge_outcomes,
    verify_requirement,
)
from contalg.ring import make_zn
from contalg.support.exit import ConsistencyError, ResourceLimitError
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
base_directory = os.path.join(top_directory, "__results__", "check")
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_check.py")


# ---------------------------------------------------------------------------
def test_outcomes():
    log.info("\n *** Testing check outcomes ***\n")
    verified = CheckOutcome.verified("scan", {"cases": 4}, {"degree": 2})
    assert verified.is_verified and not verified.is_refuted and not verified.is_inconclusive
    assert verified.as_dict() == {
        "name": "scan",
        "verdict": "Verified",
        "witness": {},
        "reason": "",
        "stats": {"cases": 4},
        "parameters": {"degree": 2},
    }

    refuted = CheckOutcome.refuted("scan", {"f": "2*X + 2"}, "fg = 0")
    assert refuted.verdict is Verdict.REFUTED
    assert refuted.as_dict()["witness"] == {"f": "2*X + 2"}

    inconclusive = CheckOutcome.inconclusive("scan", "window sampled")
    assert inconclusive.as_dict()["verdict"] == "Inconclusive"


# ---------------------------------------------------------------------------
def test_merge_outcomes():
    log.info("\n *** Testing merged outcome priority ***\n")
    verified = CheckOutcome.verified("a", {"cases": 1})
    inconclusive = CheckOutcome.inconclusive("b", "cap")
    refuted = CheckOutcome.refuted("c", {"f": "X"}, "bad")

    merged = merge_outcomes("all", [verified, inconclusive, refuted])
    assert merged.is_refuted
    assert merged.witness == {"f": "X"}
    assert merged.reason == "c: bad"
    assert set(merged.stats) == {"a", "b", "c"}

    merged = merge_outcomes("all", [verified, inconclusive])
    assert merged.is_inconclusive
    assert merged.reason == "b: cap"

    assert merge_outcomes("all", [verified], {"degree": 1}).parameters == {"degree": 1}
    assert merge_outcomes("none", []).is_verified


# ---------------------------------------------------------------------------
def test_theorem_check_results_file():
    log.info("\n *** Testing theorem check writes its results ***\n")
    check = TheoremCheck(99, "Sample check", "Checks the result file", base_directory)
    assert os.path.basename(check.directory) == "99_sample_check"

    assert check.verify_outcome("900", "first", CheckOutcome.verified("first")) == 0
    assert check.verify_outcome("901", "second", CheckOutcome.inconclusive("second", "cap")) == 3
    check.data["ring"] = "Z6"
    result = check.end()

    assert result["result"] == "inconclusive"
    assert result["return code"] == 3
    assert result["requirements"]["verified requirements"] == 1
    assert result["requirements"]["inconclusive requirements"] == 1
    assert [o["requirement"] for o in result["outcomes"]] == ["900", "901"]

    with open(os.path.join(check.directory, CHECK_RESULTS_FILE), encoding="utf-8") as file_object:
        saved = json.load(file_object)
    assert saved["data"] == {"ring": "Z6"}
    assert saved["name"] == "CHECK 99: Sample check"


# ---------------------------------------------------------------------------
def test_theorem_check_refuted():
    log.info("\n *** Testing refuted requirement ***\n")
    check = TheoremCheck(98, "Refuted check", "One refuted requirement")
    assert check.directory is None
    outcome = CheckOutcome.refuted("scan", {"f": "2*X", "g": "2"}, "fg = 0")
    assert check.verify_outcome("902", "refuted", outcome) == 1
    result = check.end()
    assert result["result"] == "refuted"
    assert result["return code"] == 1
    assert result["requirements"]["trace"][0]["value"] == "f = 2*X, g = 2"


# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "error, code, key",
    [
        (ResourceLimitError("ring order", 5000, 4096), 3, "limit"),
        (ConsistencyError("diameter 4"), 1, "consistency"),
    ],
)
def test_abort_on_exception(error, code, key):
    log.info(f"\n *** Testing abort on {type(error).__name__} ***\n")
    check = TheoremCheck(97, "Aborted check", "Stops on an exception")
    result = check.abort_on_exception(error)
    assert result["return code"] == code
    assert result[key] == str(error)
    assert not check.aborted


# ---------------------------------------------------------------------------
def test_abort_on_unknown_exception():
    log.info("\n *** Testing abort on unexpected exception ***\n")
    check = TheoremCheck(96, "Unknown error", "Stops on an unknown exception")
    try:
        raise ValueError("unexpected")
    except ValueError as error:
        result = check.abort_on_exception(error)
    assert check.aborted
    assert result["result"] == "aborted"
    assert result["return code"] == 3


# ---------------------------------------------------------------------------
def test_verify_requirement():
    log.info("\n *** Testing verify requirement ***\n")
    assert verify_requirement("903", "passes", "Verified", "Verified", True) == 0
    assert verify_requirement("904", "fails", "Verified", "f = X", False) == 1
    assert verify_requirement("905", "open", "Verified", "cap", True, inconclusive=True) == 3

    check = TheoremCheck(95, "Counted", "Counts requirements")
    verify_requirement("906", "repeat", "Verified", "Verified", True, check)
    verify_requirement("906", "repeat", "Verified", "Verified", True, check)
    condensed = check.end()["requirements"]["condensed"]
    assert condensed["906"]["pass"] == 2


# ---------------------------------------------------------------------------
def test_check_suite():
    log.info("\n *** Testing check suite ***\n")
    directory = os.path.join(base_directory, "suite")
    suite = CheckSuite("Verify Z4", "Diameter suite", {"ring": make_zn(4), "directory": directory})
    result = suite.run_check(suites.diam)
    assert result["return code"] == 0
    assert os.path.isfile(os.path.join(directory, result["directory name"], CHECK_RESULTS_FILE))
    assert suite.end() == 0
    assert suite.verified_checks == 1


# ---------------------------------------------------------------------------
def test_empty_suite_is_inconclusive():
    log.info("\n *** Testing suite without checks ***\n")
    suite = CheckSuite("Empty", "No checks", {})
    assert suite.end() == 3

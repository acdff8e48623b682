# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the report.py module."""

import json
import logging
import os

import pytest

from contalg import suites
from contalg.check import CheckSuite
from contalg.parser import build_ring
from contalg.report import EMPTY, RingReport, build_report, dumps, log_report, save_json
from contalg.ring import make_zn
from contalg.settings import Limits
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
base_directory = os.path.join(top_directory, "__results__", "report")
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_report.py")

FIELDS = [
    "ring",
    "zeroDivisors",
    "nil",
    "minimalPrimes",
    "associatedPrimes",
    "propertyA",
    "primal",
    "zdDegree",
    "gammaDiameter",
    "predictedExtensionDiameter",
    "checkOutcomes",
    "witnesses",
    "limits",
]


# ---------------------------------------------------------------------------
def test_report_z6():
    log.info("\n *** Testing report of Z6 ***\n")
    report = build_report(make_zn(6))
    assert list(report) == FIELDS
    assert report["ring"] == {"expression": "Z6", "order": 6}
    assert report["zeroDivisors"] == ["0", "2", "3", "4"]
    assert report["nil"] == ["0"]
    assert set(report["minimalPrimes"]) == {"(2)", "(3)"}
    assert report["propertyA"] is True
    assert report["primal"] is False
    assert report["zdDegree"] == 2
    assert report["gammaDiameter"] == 2
    assert report["predictedExtensionDiameter"] == 2
    assert report["witnesses"] == [{"check": "primal", "a": "2", "b": "3", "sum": "5"}]
    assert report["limits"]["reached"] == []
    assert report["limits"]["degrees"] == [1, 2]
    log_report(report)


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z5", "Z2", "Z2[y]/(y^2+y+1)"])
def test_report_without_zero_divisors(expr):
    log.info(f"\n *** Testing report of {expr} with an empty graph ***\n")
    report = build_report(build_ring(expr))
    assert report["zeroDivisors"] == ["0"]
    assert report["gammaDiameter"] == EMPTY
    assert report["predictedExtensionDiameter"] == EMPTY
    assert report["primal"] is True


# ---------------------------------------------------------------------------
def test_report_cap_reached():
    log.info("\n *** Testing report facts beyond the ideal cap ***\n")
    report = build_report(make_zn(6), Limits(ideal_cap=4))
    assert report["zdDegree"] is None
    assert report["minimalPrimes"] is None
    assert report["predictedExtensionDiameter"] is None
    assert len(report["limits"]["reached"]) > 0
    assert report["gammaDiameter"] == 2
    log_report(report)


# ---------------------------------------------------------------------------
def test_report_with_check_results():
    log.info("\n *** Testing report with check outcomes ***\n")
    ring = build_ring("Z2 x Z2")
    suite = CheckSuite("Verify Z2 x Z2", "Diameter suite", {"ring": ring})
    suite.run_check(suites.diam)
    suite.end()

    report = build_report(ring, results=suite.results)
    assert len(report["checkOutcomes"]) == 3
    assert {o["check"] for o in report["checkOutcomes"]} == {"Diameter"}
    assert all(o["verdict"] == "Verified" for o in report["checkOutcomes"])
    assert report["witnesses"] == [{"check": "primal", "a": "(0,1)", "b": "(1,0)", "sum": "(1,1)"}]


# ---------------------------------------------------------------------------
def test_json_is_deterministic():
    log.info("\n *** Testing JSON report is byte identical across runs ***\n")
    first = dumps(build_report(make_zn(8)))
    second = dumps(build_report(make_zn(8)))
    assert first == second
    assert first.endswith("}\n")
    assert json.loads(first)["nil"] == ["0", "2", "4", "6"]

    filepath = os.path.join(base_directory, "z8.json")
    save_json([json.loads(first)], filepath)
    with open(filepath, encoding="utf-8") as file_object:
        assert json.load(file_object)[0]["ring"]["expression"] == "Z8"


# ---------------------------------------------------------------------------
def test_pdf_report(tmp_path):
    log.info("\n *** Testing PDF report ***\n")
    ring = make_zn(8)
    suite = CheckSuite("Verify Z8", "Diameter suite", {"ring": ring})
    suite.run_check(suites.diam)
    suite.end()

    filepath = os.path.join(tmp_path, "z8.pdf")
    RingReport(ring, build_report(ring, results=suite.results), suite.results).save(filepath)
    assert os.path.getsize(filepath) > 0

    empty = make_zn(5)
    filepath = os.path.join(tmp_path, "z5.pdf")
    RingReport(empty, build_report(empty)).save(filepath)
    assert os.path.isfile(filepath)

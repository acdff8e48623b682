# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""This module provides classes to create theorem checks and check suites.

A theorem check verifies one or more requirements on a ring, each requirement backed by the
CheckOutcome of a truncated scan.  The suite runner collects the checks of a verify command and
derives the process exit code:

    0   every outcome verified
    1   some outcome refuted
    3   some outcome inconclusive or a resource cap was reached

Results contain no timestamps so reports of two identical runs are byte identical.
"""
from __future__ import annotations

import copy
import dataclasses
import enum
import json
import os
import time
import types

from contalg.support.exit import (
    LIMIT_EXIT_CODE,
    REFUTED_EXIT_CODE,
    SUCCESS_EXIT_CODE,
    ConsistencyError,
    ResourceLimitError,
)
from contalg.support.log import log

CHECK_RESULTS_FILE = "check_result.json"
RUN_WIDTH = 90


class Verdict(enum.Enum):
    VERIFIED = "Verified"
    REFUTED = "Refuted"
    INCONCLUSIVE = "Inconclusive"


@dataclasses.dataclass
class CheckOutcome:
    """Outcome of one truncated scan.

    Attributes:
        name: Name of the scan.
        verdict: Verified, Refuted or Inconclusive.
        witness: Literal strings that replay a refutation, e.g. {"f": "2*X + 2", "g": "3"}.
        reason: Why the outcome is inconclusive, or what a refutation violates.
        stats: Counts of cases examined and sampling details.
        parameters: Degree and search bounds used.
    """

    name: str
    verdict: Verdict
    witness: dict = dataclasses.field(default_factory=dict)
    reason: str = ""
    stats: dict = dataclasses.field(default_factory=dict)
    parameters: dict = dataclasses.field(default_factory=dict)

    @classmethod
    def verified(cls, name: str, stats: dict = None, parameters: dict = None, reason: str = "") -> CheckOutcome:
        return cls(name, Verdict.VERIFIED, {}, reason, stats or {}, parameters or {})

    @classmethod
    def refuted(
        cls, name: str, witness: dict, reason: str, stats: dict = None, parameters: dict = None
    ) -> CheckOutcome:
        return cls(name, Verdict.REFUTED, witness, reason, stats or {}, parameters or {})

    @classmethod
    def inconclusive(cls, name: str, reason: str, stats: dict = None, parameters: dict = None) -> CheckOutcome:
        return cls(name, Verdict.INCONCLUSIVE, {}, reason, stats or {}, parameters or {})

    @property
    def is_verified(self) -> bool:
        return self.verdict is Verdict.VERIFIED

    @property
    def is_refuted(self) -> bool:
        return self.verdict is Verdict.REFUTED

    @property
    def is_inconclusive(self) -> bool:
        return self.verdict is Verdict.INCONCLUSIVE

    def as_dict(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict.value,
            "witness": self.witness,
            "reason": self.reason,
            "stats": self.stats,
            "parameters": self.parameters,
        }


def merge_outcomes(name: str, outcomes: list[CheckOutcome], parameters: dict = None) -> CheckOutcome:
    """Combine outcomes: any refuted wins with its witness, then any inconclusive, else verified."""
    stats = {outcome.name: outcome.stats for outcome in outcomes}
    for outcome in outcomes:
        if outcome.is_refuted:
            reason = f"{outcome.name}: {outcome.reason}"
            return CheckOutcome.refuted(name, outcome.witness, reason, stats, parameters)
    for outcome in outcomes:
        if outcome.is_inconclusive:
            return CheckOutcome.inconclusive(name, f"{outcome.name}: {outcome.reason}", stats, parameters)
    return CheckOutcome.verified(name, stats, parameters)


class TheoremCheck:
    """Class for a theorem check that verifies one or more requirements."""

    def __init__(self, check_id: int, name: str, description: str, directory: str = None) -> None:
        """Class to create an instance of a theorem check.

        Args:
           check_id:  Unique integer check ID.
           name: Unique check name.
           description: Short description for the check.
           directory:  Optional directory to write check_result.json into.

        With a directory the class creates a subdirectory based on the check_id and name.  For
        example, check_id = 20 and name = min primes creates:

            20_min_primes

        The check.end() is called to end the check.  This method returns a dictionary with the
        check results.

        Attributes:
            data: Dictionary of data parameters
            directory: Directory for the check results, None if results are not written
            aborted: Check was aborted
            error_count: Number of refuted requirements
            inconclusive_count: Number of inconclusive requirements
        """
        self._start_counter = time.perf_counter()
        self.data = {}

        self.error_count = 0
        self.inconclusive_count = 0
        self.aborted = False

        dir_name = f"{check_id}_{name.replace(' ','_').lower()}"
        self.directory = None
        if directory is not None:
            self.directory = os.path.join(directory, dir_name)
            os.makedirs(self.directory, exist_ok=True)

        # this dictionary holds all results and is returned at end of check

        self._result = {
            "name": f"CHECK {check_id}: {name}",
            "id": check_id,
            "title": name,
            "description": description,
            "result": "inconclusive",
            "return code": LIMIT_EXIT_CODE,
            "directory name": dir_name,
            "requirements": {},
            "outcomes": [],
        }
        self._result["requirements"]["trace"] = []
        self._result["requirements"]["condensed"] = {}

        log.header(self._result["name"], 45)
        log.info(f"Description : {self._result['description']}")
        if self.directory is not None:
            log.info(f"Directory   : {self.directory}")
        log.info("")

    @property
    def outcomes(self) -> list[dict]:
        return self._result["outcomes"]

    def abort_on_exception(self, e: Exception = None) -> dict:
        """Abort check when exception occurs.

        A ResourceLimitError makes the check inconclusive, a ConsistencyError refutes it and any other
        exception is logged with its traceback.

        Args:
            e: Optional exception to log

        Returns:
           check results as a dictionary
        """
        if isinstance(e, ResourceLimitError):
            log.info(f"Inconclusive: {e}")
            self._result["limit"] = str(e)
            self.inconclusive_count += 1
        elif isinstance(e, ConsistencyError):
            log.info(f"----> REFUTED: {e}", indent=False)
            self._result["consistency"] = str(e)
            self.error_count += 1
            log.info("")
            return self.end(REFUTED_EXIT_CODE)
        else:
            self.aborted = True
            log.exception("\n    Unknown error occurred in check, send logs to developer \n\n")
        log.info("")
        return self.end(LIMIT_EXIT_CODE)

    def verify_outcome(self, rqmt_id: str, name: str, outcome: CheckOutcome) -> int:
        """Verify a requirement backed by a check outcome and record the outcome.

        Returns:
            Returns 0 if verified, 1 if refuted and 3 if inconclusive.
        """
        self._result["outcomes"].append({"requirement": rqmt_id, **outcome.as_dict()})

        if outcome.is_refuted:
            value = ", ".join(f"{k} = {v}" for k, v in outcome.witness.items()) or outcome.reason
        elif outcome.is_inconclusive:
            value = outcome.reason
        else:
            value = outcome.verdict.value
        return verify_requirement(
            rqmt_id,
            name,
            "Verified",
            value,
            not outcome.is_refuted,
            self,
            inconclusive=outcome.is_inconclusive,
        )

    def end(self, return_code: int = None) -> dict:
        """End check by logging final details.

        Args:
           return_code: Optional return code. Default is derived from the requirements.

        Returns:
           check results as a dictionary
        """
        if return_code is not None:
            self.return_code = return_code
        elif self.error_count > 0:
            self.return_code = REFUTED_EXIT_CODE
        elif self.inconclusive_count > 0:
            self.return_code = LIMIT_EXIT_CODE
        else:
            self.return_code = SUCCESS_EXIT_CODE

        if self.aborted:
            self._result["result"] = "aborted"
        elif self.error_count > 0:
            self._result["result"] = "refuted"
        elif self.return_code == SUCCESS_EXIT_CODE:
            self._result["result"] = "verified"
        else:
            self._result["result"] = "inconclusive"

        condensed = self._result["requirements"]["condensed"]
        verified_rqmt = sum(1 for r in condensed.values() if r["fail"] == 0 and r["inconclusive"] == 0)
        refuted_rqmt = sum(1 for r in condensed.values() if r["fail"] > 0)
        inconclusive_rqmt = len(condensed) - verified_rqmt - refuted_rqmt

        self._result["requirements"]["total requirements"] = len(condensed)
        self._result["requirements"]["refuted requirements"] = refuted_rqmt
        self._result["requirements"]["verified requirements"] = verified_rqmt
        self._result["requirements"]["inconclusive requirements"] = inconclusive_rqmt
        self._result["return code"] = self.return_code
        self._result["data"] = self.data

        duration = time.perf_counter() - self._start_counter
        log.info("")
        log.verbose(f"Duration    : {duration:.3f} seconds")
        log.info(
            f"Requirements: {verified_rqmt} verified, {refuted_rqmt} refuted, {inconclusive_rqmt} inconclusive"
        )
        log.info("")
        if self.return_code == SUCCESS_EXIT_CODE:
            log.info("CHECK VERIFIED")
        elif self._result["result"] == "refuted":
            log.info("----> CHECK REFUTED", indent=False)
        else:
            log.info("----> CHECK INCONCLUSIVE", indent=False)
        log.info("")

        if self.directory is not None:
            json_results_file = os.path.join(self.directory, CHECK_RESULTS_FILE)
            with open(json_results_file, "w", encoding="utf-8") as f:
                json.dump(self._result, f, ensure_ascii=False, indent=4)

        log.debug(f"Check returning {self.return_code}")
        return self._result


class CheckSuite:
    """Class to run a group of theorem checks on one ring."""

    def __init__(self, title: str, description: str, check_args: dict) -> None:
        """Class to run a suite of theorem checks.

        Args:
            title: Suite title.
            description: Short description of the suite.
            check_args: Keyword arguments passed to every check module's test() function.

        The run_check input parameter is a module that contains a test() function returning the
        check result dictionary.  This example is taken from the verify console command:

        .. code-block::

            suite = CheckSuite("Verify Z6", "Content algebra checks", {"ring": ring, "degree": 2})
            suite.run_check(minprimes)
            suite.run_check(diam)
            suite.end()

        Attributes:
            return_code: 0 all verified, 1 any refuted, 3 any inconclusive
            results: Check result dictionaries in run order
        """
        self.return_code = LIMIT_EXIT_CODE
        self.results = []
        self._requirements = {}

        self.verified_checks = 0
        self.refuted_checks = 0
        self.inconclusive_checks = 0

        self.title = title
        self.description = description
        self.check_args = check_args
        self._start_counter = time.perf_counter()

        log.info(" " + "-" * RUN_WIDTH, indent=False)
        log.info(f" CHECK RUN : {title}", indent=False)
        log.info(" " + "-" * RUN_WIDTH, indent=False)
        log.info(f" Description : {description}", indent=False)
        log.info("")

    def run_check(self, check_module: types.ModuleType) -> dict:
        """Run an individual theorem check.

        Args:
            check_module: Module name that contains the test() function to run.
        """
        result = check_module.test(**self.check_args)
        if not isinstance(result, dict):
            raise TypeError("CheckSuite run_check received illegal value")
        self.results.append(result)

        for rqmt, counts in result["requirements"]["condensed"].items():
            if rqmt not in self._requirements:
                self._requirements[rqmt] = copy.copy(counts)
            else:
                for key in ("pass", "fail", "inconclusive"):
                    self._requirements[rqmt][key] += counts[key]

        if result["return code"] == SUCCESS_EXIT_CODE:
            self.verified_checks += 1
        elif result["return code"] == REFUTED_EXIT_CODE:
            self.refuted_checks += 1
        else:
            self.inconclusive_checks += 1
        return result

    def end(self) -> int:
        """End the suite, log the final results and return the exit code."""
        if self.refuted_checks > 0:
            self.return_code = REFUTED_EXIT_CODE
        elif self.inconclusive_checks > 0 or len(self.results) == 0:
            self.return_code = LIMIT_EXIT_CODE
        else:
            self.return_code = SUCCESS_EXIT_CODE

        duration = time.perf_counter() - self._start_counter
        log.verbose(f" Duration     : {duration:.3f} seconds", indent=False)
        log.info(
            f" Checks       : {len(self.results)} ({self.verified_checks} verified, "
            + f"{self.refuted_checks} refuted, {self.inconclusive_checks} inconclusive)",
            indent=False,
        )
        failed = sum(1 for r in self._requirements.values() if r["fail"] > 0)
        log.info(
            f" Requirements : {len(self._requirements)} ({len(self._requirements) - failed} not refuted, "
            + f"{failed} refuted)",
            indent=False,
        )
        log.info(" " + "-" * RUN_WIDTH, indent=False)
        if self.return_code == SUCCESS_EXIT_CODE:
            log.info(" CHECK RUN VERIFIED", indent=False)
        elif self.return_code == REFUTED_EXIT_CODE:
            log.info(" CHECK RUN REFUTED", indent=False)
        else:
            log.info(" CHECK RUN INCONCLUSIVE", indent=False)
        log.info(" " + "-" * RUN_WIDTH, indent=False)
        return self.return_code


def verify_requirement(
    rqmt_id: str,
    name: str,
    limit: str,
    value: str,
    passed: bool,
    check: TheoremCheck = None,
    inconclusive: bool = False,
) -> int:
    """Verify the requirement and add to check result.

    Args:
       rqmt_id:  Unique requirement ID.
       name: Requirement name.
       limit: Limit for requirement verification.
       value:  Requirement value to verify.
       passed: Requirement passed verification if True.
       check: Optional check instance to update with the result.
       inconclusive: Requirement could not be decided at this truncation.

    Returns:
        Returns 0 if verify passes, 1 if verify failed and 3 if inconclusive.
    """
    if check is not None:
        check._result["requirements"]["trace"].append(
            {
                "id": rqmt_id,
                "name": name,
                "limit": limit,
                "value": value,
                "passed": bool(passed),
                "inconclusive": bool(inconclusive),
            }
        )
        condensed = check._result["requirements"]["condensed"]
        if rqmt_id not in condensed:
            condensed[rqmt_id] = {"id": rqmt_id, "pass": 0, "fail": 0, "inconclusive": 0, "name": name}
        if not passed:
            condensed[rqmt_id]["fail"] += 1
            check.error_count += 1
        elif inconclusive:
            condensed[rqmt_id]["inconclusive"] += 1
            check.inconclusive_count += 1
        else:
            condensed[rqmt_id]["pass"] += 1

    if not passed:
        log.info(f"----> FAIL :  Requirement {rqmt_id}. {name}   [value: {value}]", indent=False)
        return REFUTED_EXIT_CODE
    if inconclusive:
        log.info(f"----> INCONCLUSIVE :  Requirement {rqmt_id}. {name}   [value: {value}]", indent=False)
        return LIMIT_EXIT_CODE
    log.verbose(f"PASS :  Requirement {rqmt_id}. {name}   [value: {value}]")
    return SUCCESS_EXIT_CODE

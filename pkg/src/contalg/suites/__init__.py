# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Verify suites.

Each module verifies a group of requirements on one ring.  It provides a test() function that
returns the check result dictionary and a report() function that adds its pages to the PDF
report.
"""
from contalg.suites import ass, content, diam, dm, mccoy, minprimes, nil, primal, primeto, regular, zdcover, zpow

# Suites in run order, keyed by their name on the command line
SUITES = {
    "dm": dm,
    "mccoy": mccoy,
    "content": content,
    "minprimes": minprimes,
    "ass": ass,
    "zdcover": zdcover,
    "regular": regular,
    "primeto": primeto,
    "primal": primal,
    "nil": nil,
    "zpow": zpow,
    "diam": diam,
}
BY_ID = {module.CHECK_ID: module for module in SUITES.values()}
SUITE_NAMES = list(SUITES) + ["all"]


def select(name: str) -> list:
    """Return the suite modules for a suite name, "all" returns every suite in run order."""
    if name == "all":
        return list(SUITES.values())
    return [SUITES[name]]

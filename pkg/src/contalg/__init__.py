# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Explore content algebras and zero-divisor graphs over finite commutative rings.

The package builds finite rings as exact operation tables and uses them to check, at a bounded
polynomial degree, how ring properties carry over to polynomial and monoid rings.  It also
builds zero-divisor graphs and predicts their diameters.

This package uses the following:

   - black formatter with wider line length defined in pyproject.toml
   - flake8 linter with custom settings defined in pyproject.toml
   - pytest unit tests defined in tests folder, hypothesis for the property tests
   - The Google Docstring format.  Style Guide:  http://google.github.io/styleguide/pyguide.html
   - Sphinx extension: https://sphinxcontrib-napoleon.readthedocs.io/en/latest/example_google.html
"""
import importlib.metadata
import os

__copyright__ = "Copyright (C) 2022 Joe Jones"
__brandname__ = "contalg content algebra workbench"
__website__ = "www.epicutils.com"

try:
    metadata = importlib.metadata.metadata("contalg")
    __version__ = metadata["version"]
    __package_name__ = metadata["name"]
except Exception:
    __version__ = "N/A"
    __package_name__ = "N/A"


PACKAGE_DIRECTORY = os.path.dirname(__file__)
SRC_DIRECTORY = os.path.split(PACKAGE_DIRECTORY)[0]
TOP_DIRECTORY = os.path.split(SRC_DIRECTORY)[0]
RESOURCE_DIRECTORY = os.path.join(SRC_DIRECTORY, "contalg", "resources")
FIXTURES_FILE = os.path.join(RESOURCE_DIRECTORY, "fixtures.json")

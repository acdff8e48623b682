# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Define user settings that can be set based on specific use cases."""

# fmt: off
# flake8: noqa

import dataclasses
import os

ORDER_CAP = 4096                  # Largest ring order a constructor will build
IDEAL_ENUM_CAP = 256              # Largest ring order for full ideal lattice enumeration
POLY_CAP = 20000                  # Largest exhaustive polynomial window, larger windows are sampled
VERTEX_CAP = 20000                # Largest truncated zero-divisor graph
PAIR_CAP = 1000000                # Largest exhaustive pair scan, larger scans use a sampled window
ZPOW_CASE_CAP = 1000000           # Largest exhaustive n-fold product scan in the Z(B)^n check

DEFAULT_DEGREE = 2                # Default truncation degree d
DEFAULT_DEGREES = (1, 2)          # Default degree list for the diameter check
DEFAULT_SEED = 20100              # Seed for every sampled scan, recorded in reports
DEFAULT_DM_SAMPLES = 100          # Random (f,g) pairs per ring in the Dedekind-Mertens sweep

CAP_ENVIRONMENT_VARIABLE = "CONTALG_CAP"


@dataclasses.dataclass(frozen=True)
class Limits:
    """Caps and seed shared by every check of a run."""

    order_cap: int = ORDER_CAP
    ideal_cap: int = IDEAL_ENUM_CAP
    poly_cap: int = POLY_CAP
    vertex_cap: int = VERTEX_CAP
    pair_cap: int = PAIR_CAP
    zpow_cap: int = ZPOW_CASE_CAP
    seed: int = DEFAULT_SEED

    @classmethod
    def from_environment(cls, cap: int = None, seed: int = None) -> "Limits":
        """Return limits with CONTALG_CAP applied, an explicit cap wins over the environment.

        Args:
            cap: Optional order and vertex cap from the command line.
            seed: Optional sampling seed from the command line.
        """
        order_cap = ORDER_CAP
        vertex_cap = VERTEX_CAP

        env_cap = os.environ.get(CAP_ENVIRONMENT_VARIABLE)
        if env_cap is not None and env_cap.strip().isdigit():
            order_cap = vertex_cap = int(env_cap)
        if cap is not None:
            order_cap = vertex_cap = cap

        return cls(
            order_cap=order_cap,
            vertex_cap=vertex_cap,
            seed=DEFAULT_SEED if seed is None else seed,
        )

    def as_dict(self) -> dict:
        return dataclasses.asdict(self)


# --------------------------------------------------------------------------------------
# Check ID.  Keeping the check ID in this class makes it easier to ensure they are all
# unique and in the order the verify suites will be run
# --------------------------------------------------------------------------------------
class CheckId:

    DEDEKIND_MERTENS = 10
    MCCOY = 11
    CONTENT = 12

    MIN_PRIMES = 20
    ASS_PRIMES = 21

    ZD_COVER = 30
    REGULAR_CONTENT = 31
    PRIME_TO = 32
    PRIMAL = 33

    NIL = 40
    ZPOW = 41

    DIAMETER = 50


# --------------------------------------------------------------------------------------
# Requirement ID.  Keeping the requirement ID in this class makes it easier to ensure
# they are all unique and to group them into categories
# --------------------------------------------------------------------------------------
class RqmtId:

    DM_EXPONENT_EXISTS = "101"

    UNIT_CONTENT = "110"
    WEAK_CONTENT = "111"
    MCCOY_EQUIVALENCE = "112"
    CONTENT_MONOID_AGREEMENT = "113"
    CONTENT_INTERSECTION = "114"
    CONTENT_LAWS = "115"

    PRIME_EXTENSION = "200"
    CONTRACTION = "201"
    MIN_PRIME_BIJECTION = "202"
    ASS_EXTENSION = "210"
    VERY_FEW_ZD = "211"

    ZD_COVER_ASS = "300"
    ZD_COVER_MIN = "301"
    PROPERTY_A = "303"
    REGULAR_CONTENT = "310"
    PRIME_TO = "320"
    PRIMAL_EXTENSION = "330"
    PRIMAL_ZD_DEGREE = "331"
    TQ_TRIVIALITY = "332"

    NIL_EXTENSION = "400"
    ZD_SANDWICH = "401"
    ZPOW = "410"

    BASE_DIAMETER = "500"
    CLASSIFICATION = "501"
    EXTENSION_DIAMETER = "502"

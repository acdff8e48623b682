# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the content_theory.py module."""

import logging
import os

import pytest

from contalg.content_theory import (
    ass_extension_check,
    content_intersection_check,
    content_law_check,
    contraction_check,
    defect_witness,
    dm_exponent,
    dm_sweep,
    in_extended_ideal,
    mccoy_equiv_check,
    mccoy_witness,
    min_prime_bijection_check,
    nil_extension_check,
    primal_extension_check,
    primal_zd_degree_check,
    prime_extension_check,
    prime_to_check,
    regular_content_check,
    theorem3_matrix,
    tq_triviality_check,
    unit_content_check,
    weak_content_check,
    zd_cover_check,
    zd_sandwich_check,
    zero_divisor_oracle,
    zpow_check,
)
from contalg.ideals import principal, zero_ideal
from contalg.monoid_ring import Monoid, PolySpace
from contalg.parser import build_ring, parse_poly_literal
from contalg.ring import make_zn
from contalg.support.exit import InvalidParameterError
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_content_theory.py")


# ---------------------------------------------------------------------------
def test_dm_exponent_local_ring():
    log.info("\n *** Testing Dedekind-Mertens exponent over Z2[u,v]@3 ***\n")
    ring = build_ring("Z2[u,v]@3")
    f = parse_poly_literal("(u)*X + (v)", ring)
    result = dm_exponent(f, f)
    assert result.found
    assert result.exponent == 2
    assert result.failures == ((1, "uv"),)
    assert result.as_dict() == {"exponent": 2, "notFoundUpTo": None, "failures": [{"n": 1, "witness": "uv"}]}


# ---------------------------------------------------------------------------
def test_dm_exponent_bounds():
    log.info("\n *** Testing Dedekind-Mertens search bounds ***\n")
    ring = make_zn(4)
    f = parse_poly_literal("2*X + 1", ring)
    g = parse_poly_literal("2*X + 2", ring)
    assert dm_exponent(f, g).exponent == 1

    local = build_ring("Z2[u,v]@3")
    h = parse_poly_literal("(u)*X + (v)", local)
    stopped = dm_exponent(h, h, n_max=1)
    assert not stopped.found
    assert stopped.as_dict()["notFoundUpTo"] == 1

    with pytest.raises(InvalidParameterError):
        dm_exponent(f, g, n_max=0)


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z4", "Z6", "Z2[y]/(y^2)"])
def test_dm_sweep(expr):
    log.info(f"\n *** Testing Dedekind-Mertens sweep over {expr} ***\n")
    outcome = dm_sweep(build_ring(expr), degree=2, count=25, seed=7)
    assert outcome.is_verified
    assert sum(outcome.stats["exponents"].values()) == 25
    assert dm_sweep(build_ring(expr), degree=2, count=25, seed=7).stats == outcome.stats


# ---------------------------------------------------------------------------
def test_mccoy_witness():
    log.info("\n *** Testing McCoy scalar annihilator ***\n")
    ring = make_zn(4)
    assert mccoy_witness(parse_poly_literal("2*X + 2", ring)) == 2
    assert mccoy_witness(parse_poly_literal("2*X + 1", ring)) is None

    space = PolySpace.window(ring, degree=1)
    assert str(zero_divisor_oracle(parse_poly_literal("2*X", ring), space)) == "2"
    assert zero_divisor_oracle(parse_poly_literal("X + 2", ring), space) is None


# ---------------------------------------------------------------------------
def test_in_extended_ideal():
    log.info("\n *** Testing membership in IB ***\n")
    ring = make_zn(6)
    ideal = principal(ring, 2)
    assert in_extended_ideal(parse_poly_literal("2*X + 4", ring), ideal)
    assert not in_extended_ideal(parse_poly_literal("2*X + 3", ring), ideal)


# ---------------------------------------------------------------------------
def test_defect_witness():
    log.info("\n *** Testing monoid constructions ***\n")
    ring = make_zn(2)
    assert defect_witness(Monoid.free(1), ring) is None
    assert defect_witness(Monoid.cyclic(2), make_zn(1)) is None

    for monoid in (Monoid.cyclic(2), Monoid.cyclic(3), Monoid.absorbing()):
        f, g = defect_witness(monoid, ring)
        assert (f * g).is_zero
        assert not f.is_zero and not g.is_zero


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z2", "Z4", "Z6"])
def test_polynomial_content_formulas(expr):
    log.info(f"\n *** Testing content formulas over {expr}[X] ***\n")
    ring = build_ring(expr)
    assert unit_content_check(ring, degree=2).is_verified
    assert weak_content_check(ring, degree=2).is_verified
    assert mccoy_equiv_check(ring, degree=2).is_verified


# ---------------------------------------------------------------------------
def test_bad_monoids_refute():
    log.info("\n *** Testing content formulas fail over bad monoids ***\n")
    ring = make_zn(3)
    outcome = unit_content_check(ring, Monoid.cyclic(2))
    assert outcome.is_refuted
    assert outcome.witness == {"f": "X^1 + 2*X^0", "g": "X^1 + X^0"}
    assert outcome.reason == "monoid construction"

    assert weak_content_check(ring, Monoid.cyclic(2)).is_refuted
    outcome = mccoy_equiv_check(make_zn(2), Monoid.absorbing())
    assert outcome.is_refuted
    assert set(outcome.witness) == {"f", "h"}


# ---------------------------------------------------------------------------
def test_monoid_matrix():
    log.info("\n *** Testing monoid equivalence matrix ***\n")
    outcome = theorem3_matrix(make_zn(2), degree=1)
    assert outcome.is_verified, outcome.reason
    assert theorem3_matrix(make_zn(3), degree=1).is_verified
    assert outcome.stats["N"]["expected"] is True
    assert outcome.stats["C2"]["expected"] is False
    assert outcome.stats["eaz"]["unit content"] == "Refuted"

    assert theorem3_matrix(make_zn(1), degree=1).is_inconclusive


# ---------------------------------------------------------------------------
def test_content_laws():
    log.info("\n *** Testing content laws ***\n")
    assert content_law_check(make_zn(4), degree=1).is_verified
    assert content_law_check(build_ring("Z2 x Z2"), degree=1).is_verified
    assert content_intersection_check(make_zn(6), degree=1).is_verified
    assert content_intersection_check(make_zn(8), degree=2).is_verified


# ---------------------------------------------------------------------------
def test_prime_extension():
    log.info("\n *** Testing prime extension and contraction ***\n")
    ring = make_zn(6)
    two = principal(ring, 2)
    assert prime_extension_check(two, ring, degree=1).is_verified
    assert contraction_check(two, ring).is_verified

    z4 = make_zn(4)
    outcome = prime_extension_check(zero_ideal(z4), z4, degree=1)
    assert outcome.is_refuted
    f = parse_poly_literal(outcome.witness["f"], z4)
    g = parse_poly_literal(outcome.witness["g"], z4)
    assert (f * g).is_zero


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z6", "Z8", "Z2 x Z4"])
def test_prime_families(expr):
    log.info(f"\n *** Testing minimal and associated primes of {expr}[X] ***\n")
    ring = build_ring(expr)
    assert min_prime_bijection_check(ring, degree=1).is_verified
    assert ass_extension_check(ring, degree=1).is_verified
    assert zd_cover_check(ring, degree=1, mode="ass").is_verified
    assert zd_cover_check(ring, degree=1, mode="min").is_verified


# ---------------------------------------------------------------------------
def test_zd_cover_mode():
    log.info("\n *** Testing zero-divisor cover mode ***\n")
    with pytest.raises(InvalidParameterError):
        zd_cover_check(make_zn(6), degree=1, mode="max")


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z4", "Z6", "Z8", "Z2[y]/(y^2)"])
def test_extension_zero_divisors(expr):
    log.info(f"\n *** Testing regular content, nilradical and sandwich over {expr}[X] ***\n")
    ring = build_ring(expr)
    assert regular_content_check(ring, degree=2).is_verified
    assert nil_extension_check(ring, degree=1).is_verified
    assert zd_sandwich_check(ring, degree=2).is_verified


# ---------------------------------------------------------------------------
def test_zero_divisor_power():
    log.info("\n *** Testing Z(B)^n = 0 ***\n")
    outcome = zpow_check(make_zn(4), degree=2)
    assert outcome.is_verified
    assert outcome.parameters["n"] == 2

    outcome = zpow_check(make_zn(8), degree=1)
    assert outcome.is_verified
    assert outcome.parameters["n"] == 3
    assert "nonzeroBelow" in outcome.stats

    assert zpow_check(make_zn(6), degree=1).is_inconclusive


# ---------------------------------------------------------------------------
def test_prime_to():
    log.info("\n *** Testing elements prime to IB ***\n")
    ring = make_zn(6)
    assert prime_to_check(ring, principal(ring, 2), degree=1).is_verified
    z4 = make_zn(4)
    assert prime_to_check(z4, principal(z4, 2), degree=1).is_verified
    assert prime_to_check(ring, principal(ring, 3), degree=2).is_verified


# ---------------------------------------------------------------------------
def test_primal_checks():
    log.info("\n *** Testing primal extension checks ***\n")
    outcome = primal_extension_check(make_zn(6), degree=1)
    assert outcome.is_inconclusive
    assert outcome.stats["notPrimal"] == ["2", "3"]

    assert primal_extension_check(make_zn(8), degree=1).is_verified
    assert primal_extension_check(build_ring("Z2[y]/(y^2)"), degree=2).is_verified
    assert primal_zd_degree_check(make_zn(9)).is_verified
    assert primal_zd_degree_check(make_zn(6)).is_inconclusive
    assert tq_triviality_check(make_zn(12)).is_verified


# ---------------------------------------------------------------------------
def test_zd_cover_locates_contents():
    log.info("\n *** Testing zero-divisor contents fall in a covering prime ***\n")
    outcome = zd_cover_check(make_zn(6), degree=1, mode="min")
    assert outcome.is_verified
    assert set(outcome.stats["primes"]) == {"(2)", "(3)"}
    assert all(count > 0 for count in outcome.stats["located"])

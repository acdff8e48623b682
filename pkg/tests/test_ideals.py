# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the ideals.py module."""

import logging
import os

import pytest

from contalg.ideals import (
    annihilator,
    associated_primes,
    enumerate_ideals,
    has_property_A,
    ideal_arith,
    ideal_generated,
    is_maximal,
    is_prime,
    is_primal,
    is_reduced,
    minimal_primes,
    nilradical,
    primal_failure_witness,
    prime_cover_locate,
    prime_ideals,
    principal,
    s_of_ideal,
    very_few_zd,
    whole_ring,
    zd_degree,
    zero_divisor_power_index,
    zero_ideal,
)
from contalg.parser import build_ring
from contalg.ring import make_zn
from contalg.support.exit import InvalidParameterError, ResourceLimitError
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_ideals.py")


# ---------------------------------------------------------------------------
def test_principal_ideal():
    log.info("\n *** Testing principal ideals ***\n")
    ring = make_zn(6)
    ideal = principal(ring, 2)
    assert ideal.elements() == ["0", "2", "4"]
    assert str(ideal) == "(2)"
    assert 4 in ideal and 3 not in ideal
    assert len(ideal) == 3
    assert str(zero_ideal(ring)) == "(0)"
    assert zero_ideal(ring).is_zero
    assert principal(ring, 5).is_whole
    assert principal(ring, 4) == ideal


# ---------------------------------------------------------------------------
def test_generated_ideal():
    log.info("\n *** Testing ideals generated by several elements ***\n")
    ring = make_zn(12)
    assert ideal_generated(ring, [4, 6]) == principal(ring, 2)

    product = build_ring("Z2 x Z2")
    gens = [product.element("(1,0)"), product.element("(0,1)")]
    assert ideal_generated(product, gens).is_whole

    with pytest.raises(InvalidParameterError):
        ideal_generated(ring, [12])


# ---------------------------------------------------------------------------
def test_ideal_arithmetic():
    log.info("\n *** Testing ideal arithmetic ***\n")
    ring = make_zn(12)
    two, three = principal(ring, 2), principal(ring, 3)

    assert ideal_arith("sum", two, three).is_whole
    assert ideal_arith("product", two, three) == principal(ring, 6)
    assert ideal_arith("intersection", two, three) == principal(ring, 6)
    assert ideal_arith("power", two, 2) == principal(ring, 4)
    assert ideal_arith("power", two, 0).is_whole
    assert ideal_arith("colon", principal(ring, 4), two) == two
    assert ideal_arith("colon_elem", principal(ring, 6), 4) == principal(ring, 3)
    assert ideal_arith("annihilator", principal(ring, 4)) == three
    assert ideal_arith("radical", principal(ring, 4)) == two

    with pytest.raises(InvalidParameterError):
        ideal_arith("quotient", two, three)
    with pytest.raises(InvalidParameterError):
        ideal_arith("sum", two, principal(make_zn(6), 2))


# ---------------------------------------------------------------------------
def test_lattice():
    log.info("\n *** Testing the ideal lattice ***\n")
    assert len(enumerate_ideals(make_zn(6))) == 4
    assert len(enumerate_ideals(make_zn(8))) == 4
    assert len(enumerate_ideals(make_zn(12))) == 6
    assert len(enumerate_ideals(build_ring("Z2 x Z2"))) == 4

    with pytest.raises(ResourceLimitError):
        enumerate_ideals(make_zn(300))


# ---------------------------------------------------------------------------
def test_primes():
    log.info("\n *** Testing prime, minimal and associated primes ***\n")
    ring = make_zn(6)
    assert {str(p) for p in prime_ideals(ring)} == {"(2)", "(3)"}
    assert {str(p) for p in minimal_primes(ring)} == {"(2)", "(3)"}
    assert {str(p) for p in associated_primes(ring)} == {"(2)", "(3)"}
    assert all(is_maximal(p) for p in prime_ideals(ring))
    assert not is_prime(whole_ring(ring))

    local = make_zn(8)
    assert [str(p) for p in minimal_primes(local)] == ["(2)"]
    assert [str(p) for p in associated_primes(local)] == ["(2)"]
    assert not is_prime(zero_ideal(local))

    domain = make_zn(5)
    assert [str(p) for p in minimal_primes(domain)] == ["(0)"]


# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "expr, expected",
    [("Z4", 1), ("Z8", 1), ("Z6", 2), ("Z2 x Z2", 2), ("Z2 x Z2 x Z2", 3), ("Z4 x Z6", 3)],
)
def test_zd_degree(expr, expected):
    log.info(f"\n *** Testing zd degree of {expr} ***\n")
    result = zd_degree(build_ring(expr))
    assert result.few
    assert result.n == expected
    assert len(result.maximal_primes) == expected


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z2", "Z4", "Z6", "Z8", "Z9", "Z2 x Z4", "Z2[u,v]@3"])
def test_finite_rings_have_few_zero_divisors(expr):
    log.info(f"\n *** Testing Property (A) and very few zero-divisors of {expr} ***\n")
    ring = build_ring(expr)
    assert has_property_A(ring)
    assert very_few_zd(ring)


# ---------------------------------------------------------------------------
def test_primal():
    log.info("\n *** Testing primal rings ***\n")
    z6 = make_zn(6)
    assert not is_primal(z6)
    assert primal_failure_witness(z6) == (2, 3)

    z8 = make_zn(8)
    assert is_primal(z8)
    assert primal_failure_witness(z8) is None
    assert s_of_ideal(zero_ideal(z8)) == frozenset({0, 2, 4, 6})


# ---------------------------------------------------------------------------
def test_nilradical():
    log.info("\n *** Testing nilradical ***\n")
    assert nilradical(make_zn(8)).elements() == ["0", "2", "4", "6"]
    z12 = make_zn(12)
    assert nilradical(z12) == principal(z12, 6)
    assert is_reduced(make_zn(6))
    assert not is_reduced(make_zn(9))

    ring = build_ring("Z2[y]/(y^2)")
    assert nilradical(ring).elements() == ["0", "y"]


# ---------------------------------------------------------------------------
def test_zero_divisor_power_index():
    log.info("\n *** Testing Z(R)^n = 0 index ***\n")
    assert zero_divisor_power_index(make_zn(4)) == 2
    assert zero_divisor_power_index(make_zn(8)) == 3
    assert zero_divisor_power_index(make_zn(6)) is None
    assert zero_divisor_power_index(build_ring("Z2[u,v]@3")) == 3


# ---------------------------------------------------------------------------
def test_annihilator():
    log.info("\n *** Testing annihilators ***\n")
    ring = make_zn(8)
    assert annihilator(principal(ring, 4)) == principal(ring, 2)
    assert annihilator(whole_ring(ring)).is_zero
    assert annihilator(zero_ideal(ring)).is_whole


# ---------------------------------------------------------------------------
def test_prime_cover_locate():
    log.info("\n *** Testing the first prime containing an ideal ***\n")
    ring = make_zn(6)
    primes = [principal(ring, 2), principal(ring, 3)]
    assert prime_cover_locate(principal(ring, 2), primes) == 0
    assert prime_cover_locate(principal(ring, 3), primes) == 1
    assert prime_cover_locate(zero_ideal(ring), primes) == 0
    assert prime_cover_locate(whole_ring(ring), primes) is None
    assert prime_cover_locate(zero_ideal(ring), []) is None

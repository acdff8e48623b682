# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the ring.py module."""

import logging
import os

import numpy
import pytest

from contalg.parser import build_ring
from contalg.ring import (
    FiniteRing,
    check_axioms,
    make_product,
    make_trunc_local,
    make_univariate_quotient,
    make_zn,
    units_and_regulars,
    zero_divisors,
)
from contalg.support.exit import InvalidParameterError, ResourceLimitError
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_ring.py")

FIXTURES = [
    "Z1",
    "Z2",
    "Z6",
    "Z8",
    "Z9",
    "Z2 x Z2",
    "Z2 x Z4",
    "Z2[y]/(y^2)",
    "Z2[y]/(y^2+y+1)",
    "Z3[y]/(y^2+1)",
    "Z2[u,v]@3",
    "Z2[a,b,c]@2",
    "Z2[u,v]@3/(uv)",
]


# ---------------------------------------------------------------------------
def test_zn_tables():
    log.info("\n *** Testing Zn tables ***\n")
    ring = make_zn(6)
    assert ring.order == 6
    assert ring.names == ("0", "1", "2", "3", "4", "5")
    assert ring.plus(4, 5) == 3
    assert ring.times(4, 5) == 2
    assert ring.negate(2) == 4
    assert ring.minus(1, 3) == 4
    assert ring.power(2, 3) == 2
    assert str(ring) == "Z6"


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", FIXTURES)
def test_axioms_hold(expr):
    log.info(f"\n *** Testing ring axioms of {expr} ***\n")
    report = check_axioms(build_ring(expr))
    assert report.passed, report.describe()


# ---------------------------------------------------------------------------
def test_axiom_failure_reported():
    log.info("\n *** Testing a broken table is reported ***\n")
    good = make_zn(3)
    mul = numpy.array(good.mul)
    mul[1, 2] = 0
    broken = FiniteRing(good.add, mul, 0, 1, ["0", "1", "2"])

    report = check_axioms(broken)
    assert not report.passed
    axioms = [failure.axiom for failure in report.failures]
    assert "multiplicative commutativity" in axioms
    assert any("fails at" in line for line in report.describe())


# ---------------------------------------------------------------------------
def test_bad_tables_rejected():
    log.info("\n *** Testing malformed tables are rejected ***\n")
    ring = make_zn(2)
    with pytest.raises(InvalidParameterError):
        FiniteRing(ring.add, ring.mul, 0, 1, ["0", "1", "2"])
    with pytest.raises(InvalidParameterError):
        FiniteRing(ring.add, ring.mul, 0, 1, ["0", "0"])
    with pytest.raises(InvalidParameterError):
        FiniteRing([[0, 5], [1, 0]], ring.mul, 0, 1, ["0", "1"])


# ---------------------------------------------------------------------------
def test_element_names():
    log.info("\n *** Testing canonical element names ***\n")
    field = make_univariate_quotient(2, [1, 1, 1])
    assert field.names == ("0", "1", "y", "y+1")
    assert str(field) == "Z2[y]/(y^2+y+1)"

    local = make_trunc_local(2, 2, 3)
    assert local.order == 64
    assert local.times(local.element("u"), local.element("v")) == local.element("uv")
    assert local.times(local.element("uv"), local.element("u")) == local.zero
    assert local.element("u^2+uv+v^2") > 0

    product = make_product(make_zn(2), make_zn(4))
    assert product.order == 8
    assert product.names[:4] == ("(0,0)", "(0,1)", "(0,2)", "(0,3)")
    assert product.one == product.element("(1,1)")
    assert str(product) == "Z2 x Z4"


# ---------------------------------------------------------------------------
def test_extra_relations():
    log.info("\n *** Testing truncated ring with extra monomials ***\n")
    ring = make_trunc_local(2, 2, 3, [(1, 1)])
    assert ring.order == 2**5
    assert ring.times(ring.element("u"), ring.element("v")) == ring.zero
    assert str(ring) == "Z2[u,v]@3/(uv)"


# ---------------------------------------------------------------------------
def test_invalid_constructors():
    log.info("\n *** Testing constructor parameter errors ***\n")
    with pytest.raises(InvalidParameterError):
        make_zn(0)
    with pytest.raises(InvalidParameterError):
        make_univariate_quotient(4, [1, 0, 2])
    with pytest.raises(InvalidParameterError):
        make_univariate_quotient(2, [1])
    with pytest.raises(InvalidParameterError):
        make_trunc_local(2, 2, 0)
    with pytest.raises(InvalidParameterError):
        make_trunc_local(2, 2, 3, [(0, 0)])
    with pytest.raises(InvalidParameterError):
        make_zn(2).element("7")


# ---------------------------------------------------------------------------
def test_order_cap():
    log.info("\n *** Testing order cap ***\n")
    with pytest.raises(ResourceLimitError) as error:
        make_zn(5000)
    assert error.value.code == 3
    with pytest.raises(ResourceLimitError):
        make_product(make_zn(8), make_zn(8), order_cap=50)
    with pytest.raises(ResourceLimitError):
        make_trunc_local(3, 3, 3, order_cap=1000)


# ---------------------------------------------------------------------------
def test_zero_divisors():
    log.info("\n *** Testing zero-divisors ***\n")
    assert zero_divisors(make_zn(6)) == frozenset({0, 2, 3, 4})
    assert zero_divisors(make_zn(7)) == frozenset({0})
    assert zero_divisors(make_zn(1)) == frozenset()

    ring = build_ring("Z2 x Z2")
    names = {ring.names[i] for i in zero_divisors(ring)}
    assert names == {"(0,0)", "(0,1)", "(1,0)"}


# ---------------------------------------------------------------------------
def test_units_are_regular():
    log.info("\n *** Testing units equal regular elements ***\n")
    units, regulars = units_and_regulars(make_zn(8))
    assert units == regulars == frozenset({1, 3, 5, 7})

    ring = build_ring("Z2[u,v]@3")
    units, _ = units_and_regulars(ring)
    assert len(units) == ring.order // 2

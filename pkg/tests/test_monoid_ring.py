# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the monoid_ring.py module."""

import logging
import os

import pytest

from contalg.ideals import principal
from contalg.monoid_ring import (
    Monoid,
    MRElem,
    PolySpace,
    content,
    content_by_intersection,
    counterexample_noncancellative,
    counterexample_torsion,
    enumerate_polys,
    is_cancellative,
    is_torsion_free,
    monoid_make,
    mr_arith,
)
from contalg.parser import parse_poly_literal
from contalg.ring import make_zn
from contalg.settings import Limits
from contalg.support.exit import InvalidParameterError, ResourceLimitError
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_monoid_ring.py")


# ---------------------------------------------------------------------------
def test_enumerate_polys():
    log.info("\n *** Testing polynomial enumeration ***\n")
    assert [str(f) for f in enumerate_polys(make_zn(2), 1)] == ["1", "X", "X + 1"]
    assert len(list(enumerate_polys(make_zn(4), 1))) == 15
    assert len(list(enumerate_polys(make_zn(6), 2))) == 215
    assert len(list(enumerate_polys(make_zn(2), 1, include_zero=True))) == 4

    with pytest.raises(ResourceLimitError):
        list(enumerate_polys(make_zn(6), 2, cap=100))


# ---------------------------------------------------------------------------
def test_polynomial_arithmetic():
    log.info("\n *** Testing polynomial arithmetic ***\n")
    ring = make_zn(2)
    f = parse_poly_literal("X + 1", ring)
    assert str(f * f) == "X^2 + 1"
    assert (f + f).is_zero
    assert str(f - parse_poly_literal("1", ring)) == "X"
    assert str(mr_arith("scalar_mul", f, r=0)) == "0"

    z4 = make_zn(4)
    g = parse_poly_literal("2*X^2 + 3", z4)
    assert g.degree == 2
    assert g.term_count == 2
    assert str(-g) == "2*X^2 + 1"
    assert str(mr_arith("mul", g, g)) == "1"
    assert str(mr_arith("add", g, g)) == "2"
    assert str(mr_arith("neg", g)) == "2*X^2 + 1"

    with pytest.raises(InvalidParameterError):
        mr_arith("mul", g)
    with pytest.raises(InvalidParameterError):
        f + g


# ---------------------------------------------------------------------------
def test_content():
    log.info("\n *** Testing content of a polynomial ***\n")
    ring = make_zn(6)
    f = parse_poly_literal("2*X + 4", ring)
    assert content(f) == principal(ring, 2)
    assert content_by_intersection(f) == content(f)

    zero = MRElem(ring, Monoid.free(1), {})
    assert content(zero).is_zero
    assert content_by_intersection(zero).is_zero


# ---------------------------------------------------------------------------
def test_monoid_properties():
    log.info("\n *** Testing cancellative and torsion-free monoids ***\n")
    assert is_cancellative(Monoid.free(2)) == (True, None)
    assert is_torsion_free(Monoid.free(1)) == (True, None)

    cyclic = Monoid.cyclic(3)
    assert is_cancellative(cyclic)[0]
    torsion_free, witness = is_torsion_free(cyclic)
    assert not torsion_free
    n, s, t = witness
    assert cyclic.multiple(n, s) == cyclic.multiple(n, t) and s != t

    absorbing = Monoid.absorbing()
    cancellative, witness = is_cancellative(absorbing)
    assert not cancellative
    assert witness == (1, 1, 2)


# ---------------------------------------------------------------------------
def test_monoid_tables():
    log.info("\n *** Testing monoid table validation ***\n")
    monoid = monoid_make("table", [[0, 1], [1, 1]], 0, ["e", "a"], "idem")
    assert monoid.size == 2
    assert str(monoid) == "idem"

    with pytest.raises(InvalidParameterError):
        monoid_make("table", [[0, 1], [0, 1]], 0, ["e", "a"])
    with pytest.raises(InvalidParameterError):
        monoid_make("table", [[0, 1], [1, 0]], 1, ["e", "a"])
    with pytest.raises(InvalidParameterError):
        monoid_make("group", 3)
    with pytest.raises(InvalidParameterError):
        Monoid.free(0)


# ---------------------------------------------------------------------------
def test_torsion_counterexample():
    log.info("\n *** Testing torsion counterexample over Z3[C2] ***\n")
    ring = make_zn(3)
    f, g, k = counterexample_torsion(Monoid.cyclic(2), ring, 1, 0)
    assert k == 2
    assert str(f) == "X^1 + 2*X^0"
    assert str(g) == "X^1 + X^0"
    assert (f * g).is_zero
    assert content(f).is_whole and content(g).is_whole

    with pytest.raises(InvalidParameterError):
        counterexample_torsion(Monoid.cyclic(2), ring, 1, 1)


# ---------------------------------------------------------------------------
def test_noncancellative_counterexample():
    log.info("\n *** Testing noncancellative counterexample ***\n")
    ring = make_zn(2)
    monoid = Monoid.absorbing()
    f, g = counterexample_noncancellative(monoid, ring, 1, 1, 2)
    assert (f * g).is_zero
    assert not g.is_zero
    assert content(f).is_whole and content(g).is_whole

    with pytest.raises(InvalidParameterError):
        counterexample_noncancellative(monoid, ring, 0, 1, 2)


# ---------------------------------------------------------------------------
def test_poly_space():
    log.info("\n *** Testing truncation windows ***\n")
    space = PolySpace.window(make_zn(2), degree=1)
    assert len(space) == 3
    assert not space.sampled
    assert [str(space.element(i)) for i in range(len(space))] == ["1", "X", "X + 1"]

    z4 = make_zn(4)
    space = PolySpace.window(z4, degree=1)
    f = parse_poly_literal("2*X + 2", z4)
    products = space.multiply_by(space.row_of(f))
    zero_rows = space.is_zero_rows(products)
    assert {str(space.element(i)) for i in range(len(space)) if zero_rows[i]} == {"2", "2*X", "2*X + 2"}
    assert int(space.zero_divisor_mask().sum()) == 3

    with pytest.raises(InvalidParameterError):
        space.row_of(parse_poly_literal("X^2", z4))


# ---------------------------------------------------------------------------
def test_poly_space_sampling():
    log.info("\n *** Testing sampled windows are seeded ***\n")
    limits = Limits(poly_cap=40)
    first = PolySpace.window(make_zn(3), degree=3, limits=limits)
    second = PolySpace.window(make_zn(3), degree=3, limits=limits)
    assert first.sampled
    assert first.total == 80
    assert (first.rows == second.rows).all()
    assert first.stats["seed"] == limits.seed

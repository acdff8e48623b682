# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the parser.py module."""

import logging
import os

import pytest

from contalg.expr import Product, TruncLocal, UnivarQuot, Zn
from contalg.ideals import principal
from contalg.monoid_ring import Monoid
from contalg.parser import (
    ParseError,
    build_ring,
    parse_element,
    parse_ideal,
    parse_monoid,
    parse_poly_literal,
    parse_ring_expr,
)
from contalg.ring import make_zn
from contalg.settings import Limits
from contalg.support.exit import InvalidParameterError, ResourceLimitError
from contalg.support.log import start_logger

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_parser.py")


# ---------------------------------------------------------------------------
def test_ring_expressions():
    log.info("\n *** Testing ring expression syntax trees ***\n")
    assert parse_ring_expr("Z6") == Zn(6)
    assert parse_ring_expr("Z2[y]/(y^2+y+1)") == UnivarQuot(2, "y", (1, 1, 1))
    assert parse_ring_expr("Z2[u,v]@3 x Z4") == Product(TruncLocal(2, ("u", "v"), 3, ()), Zn(4))
    assert parse_ring_expr(" Z2 × Z3 ") == Product(Zn(2), Zn(3))
    assert parse_ring_expr("Z2[u,v]@3/(uv, v^2)") == TruncLocal(2, ("u", "v"), 3, ((1, 1), (0, 2)))
    assert parse_ring_expr("Z2 x (Z2 x Z2)") == Product(Zn(2), Product(Zn(2), Zn(2)))


# ---------------------------------------------------------------------------
@pytest.mark.parametrize(
    "text",
    ["Z6", "Z2[y]/(y^2+y+1)", "Z2[u,v]@3 x Z4", "Z2 x (Z2 x Z2)", "Z2 x Z2 x Z2", "Z2[u,v]@3/(uv)"],
)
def test_ring_expression_printing(text):
    log.info(f"\n *** Testing {text} prints as it parses ***\n")
    assert str(parse_ring_expr(text)) == text
    assert str(build_ring(text)) == text


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("text", ["", "Z", "Q6", "Z2[y]", "Z2[u,v]/(u)", "Z6 x", "Z6 Z6", "Z2[y]/(y^2"])
def test_syntax_errors(text):
    log.info(f"\n *** Testing syntax error in '{text}' ***\n")
    with pytest.raises(ParseError) as error:
        parse_ring_expr(text)
    assert error.value.code == 2
    assert 0 <= error.value.position <= len(text)
    assert error.value.expected


# ---------------------------------------------------------------------------
def test_semantic_errors():
    log.info("\n *** Testing well formed expressions that name no ring ***\n")
    with pytest.raises(InvalidParameterError):
        build_ring("Z4[y]/(2y^2+1)")
    with pytest.raises(InvalidParameterError):
        build_ring("Z0")
    with pytest.raises(InvalidParameterError):
        build_ring("Z2[u,u]@2")
    with pytest.raises(ResourceLimitError):
        build_ring("Z2 x Z8", Limits(order_cap=10))


# ---------------------------------------------------------------------------
def test_elements():
    log.info("\n *** Testing element names ***\n")
    ring = build_ring("Z2[y]/(y^2+y+1)")
    assert parse_element("y+1", ring) == 3
    assert parse_element("(y + 1)", ring) == 3

    product = build_ring("Z2 x Z4")
    assert product.names[parse_element("(1, 3)", product)] == "(1,3)"

    with pytest.raises(ParseError):
        parse_element("y^2", ring)


# ---------------------------------------------------------------------------
def test_poly_literals():
    log.info("\n *** Testing polynomial literals ***\n")
    ring = make_zn(4)
    assert str(parse_poly_literal("2*X^1 + 2", ring)) == "2*X + 2"
    assert str(parse_poly_literal("X - 1", ring)) == "X + 3"
    assert str(parse_poly_literal("X^2 + X^2 + X^2 + X^2", ring)) == "0"
    assert parse_poly_literal("3", ring).degree == 0

    local = build_ring("Z2[u,v]@3")
    f = parse_poly_literal("(u)*X + (v)", local)
    assert str(f) == "(u)*X + (v)"
    assert str(f * f) == "(u^2)*X^2 + (v^2)"

    product = build_ring("Z2 x Z2")
    g = parse_poly_literal("(1,0)*X + (0,1)", product)
    assert str(g) == "(1,0)*X + (0,1)"

    for bad in ("5*X", "2*Y", "X^", "2*X +", "2**X"):
        with pytest.raises(ParseError):
            parse_poly_literal(bad, ring)


# ---------------------------------------------------------------------------
def test_monoid_literals():
    log.info("\n *** Testing polynomial literals over monoids ***\n")
    ring = make_zn(3)
    f = parse_poly_literal("X^1 + 2*X^0", ring, Monoid.cyclic(2))
    assert str(f) == "X^1 + 2*X^0"

    g = parse_poly_literal("X^(1,0) + X^(0,1)", ring, Monoid.free(2))
    assert g.term_count == 2
    assert g.degree == 1

    with pytest.raises(ParseError):
        parse_poly_literal("X", ring, Monoid.cyclic(2))
    with pytest.raises(ParseError):
        parse_poly_literal("X^2", ring, Monoid.cyclic(2))


# ---------------------------------------------------------------------------
def test_monoids():
    log.info("\n *** Testing monoid names ***\n")
    assert parse_monoid("N") == Monoid.free(1)
    assert parse_monoid("N^2") == Monoid.free(2)
    assert parse_monoid("C3") == Monoid.cyclic(3)
    assert parse_monoid("C<4>") == Monoid.cyclic(4)
    assert parse_monoid("eaz") == Monoid.absorbing()
    with pytest.raises(ParseError):
        parse_monoid("Q")


# ---------------------------------------------------------------------------
def test_ideals():
    log.info("\n *** Testing ideal literals ***\n")
    ring = make_zn(6)
    assert parse_ideal("(2)", ring) == principal(ring, 2)
    assert parse_ideal("4", ring) == principal(ring, 2)
    assert parse_ideal("(2, 3)", ring).is_whole

    product = build_ring("Z2 x Z2")
    assert parse_ideal("((1,0),(0,1))", product).is_whole
    assert parse_ideal("((1,0))", product).elements() == ["(0,0)", "(1,0)"]

    with pytest.raises(ParseError):
        parse_ideal("(7)", ring)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Tests the zdgraph.py module."""

import logging
import os

import networkx
import pytest

from contalg.parser import build_ring
from contalg.ring import make_zn
from contalg.settings import Limits
from contalg.support.exit import ConsistencyError, ResourceLimitError
from contalg.support.log import start_logger
from contalg.zdgraph import (
    TRUNCATED_POLY,
    RingFacts,
    ZDGraph,
    classify_gamma,
    diameter,
    gamma_of_ring,
    gamma_poly_truncated,
    predict_extension_diam,
    predict_from_facts,
    to_dot,
    verify_diam,
)

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_zdgraph.py")

DIAMETERS = [
    ("Z4", 0, 1),
    ("Z2[y]/(y^2)", 0, 1),
    ("Z9", 1, 1),
    ("Z2 x Z2", 1, 2),
    ("Z6", 2, 2),
    ("Z8", 2, 2),
    ("Z2 x Z4", 3, 3),
]


# ---------------------------------------------------------------------------
def test_gamma_z6():
    log.info("\n *** Testing zero-divisor graph of Z6 ***\n")
    graph = gamma_of_ring(make_zn(6))
    assert graph.labels == ["2", "3", "4"]
    assert graph.edges() == [(0, 1), (1, 2)]

    result = diameter(graph)
    assert result.diameter == 2
    assert result.witness == ("2", "4")
    assert result.connected
    assert result.as_dict() == {"diameter": 2, "witness": ["2", "4"], "connected": True, "vertices": 3}


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr, base, predicted", DIAMETERS)
def test_diameters(expr, base, predicted):
    log.info(f"\n *** Testing diameters of {expr} ***\n")
    ring = build_ring(expr)
    graph = gamma_of_ring(ring)
    result = diameter(graph)
    assert result.diameter == base
    assert networkx.diameter(graph.to_networkx()) == base
    assert predict_extension_diam(ring).diameter == predicted


# ---------------------------------------------------------------------------
def test_diameter_three_witness():
    log.info("\n *** Testing diameter 3 witness of Z2 x Z4 ***\n")
    result = diameter(gamma_of_ring(build_ring("Z2 x Z4")))
    assert result.diameter == 3
    assert set(result.witness) == {"(0,1)", "(1,2)"}


# ---------------------------------------------------------------------------
def test_empty_graph():
    log.info("\n *** Testing rings without proper zero-divisors ***\n")
    ring = make_zn(5)
    result = diameter(gamma_of_ring(ring))
    assert result.empty
    assert result.diameter is None
    assert result.as_dict()["diameter"] == "Empty"
    assert predict_extension_diam(ring).diameter is None
    assert to_dot(gamma_of_ring(ring)) == "graph G {\n}\n"


# ---------------------------------------------------------------------------
def test_disconnected_base_graph():
    log.info("\n *** Testing a disconnected base graph is inconsistent ***\n")
    graph = ZDGraph(["a", "b"], [0, 0])
    with pytest.raises(ConsistencyError):
        diameter(graph)

    truncated = ZDGraph(["a", "b"], [0, 0], TRUNCATED_POLY, 1)
    result = diameter(truncated)
    assert not result.connected
    assert result.diameter is None


# ---------------------------------------------------------------------------
def test_classification():
    log.info("\n *** Testing structural classification ***\n")
    assert "every pair" in classify_gamma(make_zn(9)).branch
    assert classify_gamma(make_zn(9)).diameter == 1
    assert "two minimal primes" in classify_gamma(make_zn(6)).branch
    assert "nonzero square" in classify_gamma(make_zn(8)).branch
    assert classify_gamma(build_ring("Z2 x Z4")).diameter == 3
    assert classify_gamma(make_zn(4)).branch == "single vertex"


# ---------------------------------------------------------------------------
def test_prediction_branches():
    log.info("\n *** Testing prediction without Property (A) ***\n")
    facts = RingFacts(
        vertices=5,
        base_diameter=2,
        reduced=False,
        minimal_primes=1,
        primal=True,
        z_squared_zero=False,
        property_a=False,
        nilpotency_index=None,
    )
    prediction = predict_from_facts(facts)
    assert prediction.diameter == 3
    assert "without Property (A)" in prediction.branch

    unmatched = RingFacts(
        vertices=3,
        base_diameter=1,
        reduced=True,
        minimal_primes=3,
        primal=False,
        z_squared_zero=False,
        property_a=True,
        nilpotency_index=None,
    )
    with pytest.raises(ConsistencyError):
        predict_from_facts(unmatched)


# ---------------------------------------------------------------------------
def test_truncated_graph_z4():
    log.info("\n *** Testing truncated graph of Z4[X] ***\n")
    graph = gamma_poly_truncated(make_zn(4), 1)
    assert set(graph.labels) == {"2", "2*X", "2*X + 2"}
    assert len(graph.edges()) == 3
    assert diameter(graph).diameter == 1

    base = gamma_poly_truncated(make_zn(4), 0)
    assert base.labels == ["2"]
    assert base.kind == TRUNCATED_POLY


# ---------------------------------------------------------------------------
def test_truncated_graph_z2xz2():
    log.info("\n *** Testing truncated graph of (Z2 x Z2)[X] ***\n")
    graph = gamma_poly_truncated(build_ring("Z2 x Z2"), 1)
    assert len(graph) == 6
    assert len(graph.edges()) == 9
    assert diameter(graph).diameter == 2
    assert networkx.diameter(graph.to_networkx()) == 2


# ---------------------------------------------------------------------------
def test_truncated_graph_cap():
    log.info("\n *** Testing truncated graph vertex cap ***\n")
    with pytest.raises(ResourceLimitError):
        gamma_poly_truncated(make_zn(6), 2, Limits(poly_cap=10, vertex_cap=10))
    with pytest.raises(ResourceLimitError):
        gamma_poly_truncated(make_zn(4), 2, Limits(vertex_cap=5))


# ---------------------------------------------------------------------------
@pytest.mark.parametrize("expr", ["Z4", "Z2 x Z2", "Z9"])
def test_verify_diam(expr):
    log.info(f"\n *** Testing extension diameter check of {expr} ***\n")
    outcome = verify_diam(build_ring(expr), [1, 2])
    assert outcome.is_verified, outcome.reason
    assert set(outcome.stats["truncated"]) == {"1", "2"}


# ---------------------------------------------------------------------------
def test_verify_diam_cap():
    log.info("\n *** Testing extension diameter check at the vertex cap ***\n")
    outcome = verify_diam(make_zn(4), [1, 2], Limits(vertex_cap=5))
    assert outcome.is_inconclusive
    assert "exceeds the cap" in outcome.reason


# ---------------------------------------------------------------------------
def test_dot():
    log.info("\n *** Testing DOT export ***\n")
    dot = to_dot(gamma_of_ring(make_zn(6)))
    expected = 'graph G {\n  "2";\n  "3";\n  "4";\n  "2" -- "3";\n  "3" -- "4";\n}\n'
    assert dot == expected


# ---------------------------------------------------------------------------
def test_classification_agrees_with_search():
    log.info("\n *** Testing classification against breadth first search ***\n")
    expressions = [f"Z{n}" for n in range(2, 51)]
    expressions += [f"Z{p}[y]/(y^2+{b}y+{c})" for p in (2, 3) for b in range(1, p) for c in range(1, p)]
    expressions += ["Z2[y]/(y^2)", "Z3[y]/(y^2)", "Z2[y]/(y^2+1)", "Z3[y]/(y^2+1)", "Z2[y]/(y^2+y)"]
    expressions += [f"Z{m} x Z{n}" for m in range(2, 9) for n in range(m, 9) if m * n <= 64]
    for expr in expressions:
        ring = build_ring(expr)
        searched = diameter(gamma_of_ring(ring)).diameter
        assert classify_gamma(ring).diameter == searched, expr

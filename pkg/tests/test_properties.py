# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Property based tests of ring, ideal, content and graph invariants."""

import logging
import math
import os

import networkx
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from contalg.content_theory import dm_exponent, mccoy_witness
from contalg.ideals import ideal_intersection, ideal_product, ideal_sum, principal
from contalg.monoid_ring import Monoid, MRElem, content
from contalg.ring import check_axioms, make_product, make_zn, zero_divisors
from contalg.support.log import start_logger
from contalg.zdgraph import diameter, gamma_of_ring

top_directory = os.path.split(os.path.dirname(__file__))[0]
log_directory = os.path.join(top_directory, "__results__")

log = start_logger(log_directory, logging.DEBUG, "pytest.log")

log.info("Running test_properties.py")

N = Monoid.free(1)
moduli = st.integers(min_value=2, max_value=30)
coefficient_lists = st.lists(st.integers(min_value=0, max_value=35), min_size=1, max_size=3)


def poly(ring, coefficients):
    return MRElem(ring, N, {(i,): c % ring.order for i, c in enumerate(coefficients)})


# ---------------------------------------------------------------------------
@settings(max_examples=20, deadline=None)
@given(n=moduli)
def test_zn_zero_divisors(n):
    ring = make_zn(n)
    assert check_axioms(ring).passed
    assert zero_divisors(ring) == frozenset(a for a in range(n) if math.gcd(a, n) != 1)


# ---------------------------------------------------------------------------
@settings(max_examples=15, deadline=None)
@given(m=st.integers(min_value=2, max_value=6), n=st.integers(min_value=2, max_value=6))
def test_product_graph_diameter(m, n):
    ring = make_product(make_zn(m), make_zn(n))
    assert check_axioms(ring).passed
    graph = gamma_of_ring(ring)
    result = diameter(graph)
    assert result.connected
    assert result.diameter <= 3
    assert result.diameter == networkx.diameter(graph.to_networkx())


# ---------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(n=moduli, a=st.integers(min_value=0, max_value=29), b=st.integers(min_value=0, max_value=29))
def test_principal_ideal_laws(n, a, b):
    ring = make_zn(n)
    a, b = a % n, b % n
    first, second = principal(ring, a), principal(ring, b)
    da, db = math.gcd(a, n), math.gcd(b, n)
    assert ideal_sum(first, second) == principal(ring, math.gcd(da, db) % n)
    assert ideal_intersection(first, second) == principal(ring, math.lcm(da, db) % n)
    assert ideal_product(first, second) == principal(ring, (a * b) % n)


# ---------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([4, 6, 8, 9, 12]), f=coefficient_lists, g=coefficient_lists)
def test_content_laws(n, f, g):
    ring = make_zn(n)
    first, second = poly(ring, f), poly(ring, g)
    assert content(first * second) <= ideal_product(content(first), content(second))
    assert content(first + second) <= ideal_sum(content(first), content(second))


# ---------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([4, 6, 8, 12]), f=coefficient_lists, g=coefficient_lists)
def test_dedekind_mertens_bound(n, f, g):
    ring = make_zn(n)
    first, second = poly(ring, f), poly(ring, g)
    assume(not second.is_zero)
    result = dm_exponent(first, second)
    assert result.found
    assert result.exponent <= second.term_count + 1


# ---------------------------------------------------------------------------
@settings(max_examples=40, deadline=None)
@given(n=st.sampled_from([4, 6, 8, 9, 12]), f=coefficient_lists, g=coefficient_lists, data=st.data())
def test_mccoy(n, f, g, data):
    ring = make_zn(n)
    d = data.draw(st.sampled_from([d for d in range(2, n) if n % d == 0]))
    first = poly(ring, [d * c for c in f])
    second = poly(ring, [(n // d) * c for c in g])
    assume(not first.is_zero and not second.is_zero)
    assert (first * second).is_zero

    r = mccoy_witness(first)
    assert r is not None
    assert poly(ring, [r * c for _, c in first.terms]).is_zero

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Zero-divisor graphs of finite rings and of truncated polynomial rings.

The vertices of a zero-divisor graph are the nonzero zero-divisors, two distinct vertices are
adjacent when their product is zero.  Adjacency is stored as one Python int bitset per vertex so
breadth first search advances a whole frontier with a few integer ORs.

The truncated graph of R[X] uses the polynomials of degree at most d as its vertex pool.  Its
distances over-approximate those of the infinite graph, so its diameter is an upper bound that
the predicted extension diameter must reach.
"""
from __future__ import annotations

import dataclasses
import itertools

import networkx
import numpy

from contalg.check import CheckOutcome
from contalg.ideals import (
    has_property_A,
    is_primal,
    is_reduced,
    minimal_primes,
    zero_divisor_power_index,
)
from contalg.monoid_ring import PolySpace
from contalg.ring import FiniteRing, zero_divisor_mask
from contalg.settings import DEFAULT_DEGREES, Limits
from contalg.support.conversions import as_bitset, iter_bits
from contalg.support.exit import ConsistencyError, ResourceLimitError
from contalg.support.log import log

BASE_RING = "base ring"
TRUNCATED_POLY = "truncated polynomial"


@dataclasses.dataclass
class ZDGraph:
    """Zero-divisor graph with bitset adjacency rows.

    Attributes:
        labels: Vertex labels, ring element names or polynomial literals.
        adjacency: Bitset of neighbours for every vertex.
        kind: BASE_RING or TRUNCATED_POLY.
        degree: Truncation degree for TRUNCATED_POLY graphs.
    """

    labels: list[str]
    adjacency: list[int]
    kind: str = BASE_RING
    degree: int | None = None

    def __len__(self) -> int:
        return len(self.labels)

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self.adjacency) for j in iter_bits(row) if i < j]

    def to_networkx(self) -> networkx.Graph:
        graph = networkx.Graph()
        graph.add_nodes_from(self.labels)
        graph.add_edges_from((self.labels[i], self.labels[j]) for i, j in self.edges())
        return graph


def _adjacency(zero: numpy.ndarray) -> list[int]:
    zero = zero.copy()
    numpy.fill_diagonal(zero, False)
    return [as_bitset(row) for row in zero]


def gamma_of_ring(ring: FiniteRing) -> ZDGraph:
    """Return the zero-divisor graph of R with vertices in element index order."""
    mask = zero_divisor_mask(ring)
    mask[ring.zero] = False
    vertices = numpy.flatnonzero(mask)
    adjacency = _adjacency(ring.zero_products[numpy.ix_(vertices, vertices)])
    return ZDGraph([ring.names[v] for v in vertices], adjacency, BASE_RING)


def gamma_poly_truncated(ring: FiniteRing, degree: int, limits: Limits = None) -> ZDGraph:
    """Return the zero-divisor graph of the polynomials of R[X] with degree at most d.

    Vertices are the nonzero polynomials with a nonzero scalar annihilator.  Edges come from the
    exact products.  At d = 0 the graph is the base ring graph.

    Raises:
        ResourceLimitError: The window or the vertex set exceeds the vertex cap.
    """
    limits = Limits() if limits is None else limits
    if degree == 0:
        graph = gamma_of_ring(ring)
        return ZDGraph(graph.labels, graph.adjacency, TRUNCATED_POLY, 0)

    window_cap = max(limits.poly_cap, limits.vertex_cap)
    space = PolySpace.window(ring, None, degree, dataclasses.replace(limits, poly_cap=window_cap))
    if space.sampled:
        raise ResourceLimitError(f"degree {degree} window over {ring}", space.total, window_cap)

    vertices = numpy.flatnonzero(space.zero_divisor_mask())
    if len(vertices) > limits.vertex_cap:
        raise ResourceLimitError(
            f"degree {degree} zero-divisor graph over {ring}", len(vertices), limits.vertex_cap
        )

    rows = space.rows[vertices]
    zero = numpy.array([space.is_zero_rows(space.multiply_by(row, rows)) for row in rows], dtype=bool)
    log.debug(f"Truncated graph of {ring}[X] at d={degree}: {len(vertices)} vertices")
    labels = [str(space.element(v)) for v in vertices]
    return ZDGraph(labels, _adjacency(zero.reshape(len(rows), len(rows))), TRUNCATED_POLY, degree)


@dataclasses.dataclass(frozen=True)
class DiamResult:
    """Diameter of a zero-divisor graph.

    Attributes:
        diameter: Largest distance, None for an empty or disconnected graph.
        witness: First vertex pair in index order at the largest distance.
        connected: True when every pair of vertices is joined by a path.
        vertices: Number of vertices.
    """

    diameter: int | None
    witness: tuple[str, str] | None
    connected: bool
    vertices: int

    @property
    def empty(self) -> bool:
        return self.vertices == 0

    def as_dict(self) -> dict:
        return {
            "diameter": "Empty" if self.empty else self.diameter,
            "witness": None if self.witness is None else list(self.witness),
            "connected": self.connected,
            "vertices": self.vertices,
        }


def diameter(graph: ZDGraph) -> DiamResult:
    """Return the diameter by breadth first search from every vertex.

    Raises:
        ConsistencyError: A base ring graph is disconnected or has diameter above 3.
    """
    size = len(graph)
    if size == 0:
        return DiamResult(None, None, True, 0)

    everything = (1 << size) - 1
    best, witness = 0, (graph.labels[0], graph.labels[0])
    connected = True
    for source in range(size):
        visited = frontier = 1 << source
        distance = 0
        while True:
            reached = 0
            for v in iter_bits(frontier):
                reached |= graph.adjacency[v]
            frontier = reached & ~visited
            if frontier == 0:
                break
            visited |= frontier
            distance += 1
            last = frontier
        if visited != everything:
            connected = False
            break
        if distance > best:
            best = distance
            witness = (graph.labels[source], graph.labels[(last & -last).bit_length() - 1])

    if graph.kind == BASE_RING and (not connected or best > 3):
        raise ConsistencyError(f"Zero-divisor graph is disconnected or has diameter {best} above 3")
    if not connected:
        return DiamResult(None, None, False, size)
    return DiamResult(best, witness, True, size)


@dataclasses.dataclass(frozen=True)
class RingFacts:
    """Structural facts that decide the zero-divisor graph diameters."""

    vertices: int
    base_diameter: int | None
    reduced: bool
    minimal_primes: int
    primal: bool
    z_squared_zero: bool
    property_a: bool
    nilpotency_index: int | None

    def as_dict(self) -> dict:
        return {
            "vertices": self.vertices,
            "baseDiameter": self.base_diameter,
            "reduced": self.reduced,
            "minimalPrimes": self.minimal_primes,
            "primal": self.primal,
            "zSquaredZero": self.z_squared_zero,
            "propertyA": self.property_a,
            "nilpotencyIndex": self.nilpotency_index,
        }


def ring_facts(ring: FiniteRing, limits: Limits = None) -> RingFacts:
    """Collect the facts for classification and prediction.

    Raises:
        ResourceLimitError: The ring is too large to enumerate its ideals.
    """
    limits = Limits() if limits is None else limits
    graph = gamma_of_ring(ring)
    index = zero_divisor_power_index(ring)
    return RingFacts(
        vertices=len(graph),
        base_diameter=diameter(graph).diameter,
        reduced=is_reduced(ring),
        minimal_primes=len(minimal_primes(ring, limits.ideal_cap)),
        primal=is_primal(ring),
        z_squared_zero=index is not None and index <= 2,
        property_a=has_property_A(ring, limits.ideal_cap),
        nilpotency_index=index,
    )


@dataclasses.dataclass(frozen=True)
class Classification:
    diameter: int | None
    branch: str


def classify_facts(ring: FiniteRing, facts: RingFacts) -> Classification:
    """Return the diameter of the base graph from structure alone."""
    if facts.vertices == 0:
        return Classification(None, "no proper zero-divisors")
    if facts.vertices == 1:
        return Classification(0, "single vertex")

    mask = zero_divisor_mask(ring)
    mask[ring.zero] = False
    vertices = numpy.flatnonzero(mask)
    products = ring.zero_products[numpy.ix_(vertices, vertices)]
    if (products | numpy.eye(len(vertices), dtype=bool)).all():
        return Classification(1, "xy = 0 for every pair of distinct zero-divisors")
    if facts.reduced and facts.minimal_primes == 2 and facts.vertices >= 3:
        return Classification(2, "reduced with exactly two minimal primes")
    if facts.primal and not facts.z_squared_zero and facts.property_a:
        return Classification(2, "Z(R) is an ideal with nonzero square")
    return Classification(3, "no diameter 0, 1 or 2 criterion holds")


def classify_gamma(ring: FiniteRing, limits: Limits = None) -> Classification:
    """Classify the base graph diameter structurally and compare with breadth first search.

    Raises:
        ConsistencyError: Structure and search disagree.
    """
    facts = ring_facts(ring, limits)
    classification = classify_facts(ring, facts)
    if classification.diameter != facts.base_diameter:
        raise ConsistencyError(
            f"{ring}: '{classification.branch}' gives diameter {classification.diameter}, "
            f"search gives {facts.base_diameter}"
        )
    return classification


@dataclasses.dataclass(frozen=True)
class Prediction:
    diameter: int | None
    branch: str


def predict_from_facts(facts: RingFacts) -> Prediction:
    """Predict the zero-divisor graph diameter of R[X] from the facts of R.

    Raises:
        ConsistencyError: No branch applies, or the nilpotency index disagrees with the branch.
    """
    base = facts.base_diameter
    if facts.vertices == 0:
        prediction = Prediction(None, "R has no proper zero-divisors, R[X] is a domain")
    elif base == 0:
        prediction = Prediction(1, "single vertex, R is Z4 or Z2[y]/(y^2)")
    elif base == 1 and not facts.reduced and facts.z_squared_zero:
        prediction = Prediction(1, "nonreduced with Z(R)^2 = 0")
    elif base == 1 and facts.reduced and facts.vertices == 2:
        prediction = Prediction(2, "R is Z2 x Z2")
    elif base == 2 and facts.reduced and facts.minimal_primes == 2 and facts.vertices >= 3:
        prediction = Prediction(2, "reduced with exactly two minimal primes")
    elif base == 2 and facts.primal and not facts.z_squared_zero and facts.property_a:
        prediction = Prediction(2, "primal with Z(R)^2 != 0 and Property (A)")
    elif base == 2 and facts.primal and not facts.z_squared_zero:
        prediction = Prediction(3, "primal without Property (A)")
    elif base == 3:
        prediction = Prediction(3, "base diameter is already 3")
    else:
        raise ConsistencyError(f"No prediction branch applies to {facts.as_dict()}")

    index = facts.nilpotency_index
    if facts.vertices > 0 and index is not None and index >= 2:
        expected = 1 if index == 2 else 2
        if prediction.diameter != expected:
            raise ConsistencyError(
                f"Nilpotency index {index} gives diameter {expected} but '{prediction.branch}' gives "
                f"{prediction.diameter}"
            )
    return prediction


def predict_extension_diam(ring: FiniteRing, limits: Limits = None) -> Prediction:
    return predict_from_facts(ring_facts(ring, limits))


def _order(value: int | None) -> int:
    return -1 if value is None else value


def verify_diam(ring: FiniteRing, degrees: list[int] = DEFAULT_DEGREES, limits: Limits = None) -> CheckOutcome:
    """Check the truncated graph diameters against the predicted extension diameter.

    The check is inconclusive when the truncated diameters change across the degrees.
    """
    name = "extension diameter"
    limits = Limits() if limits is None else limits
    degrees = sorted(degrees)
    base = diameter(gamma_of_ring(ring))
    prediction = predict_extension_diam(ring, limits)
    parameters = {"degrees": degrees}
    stats = {"base": base.as_dict(), "predicted": prediction.diameter, "branch": prediction.branch}

    results = {}
    for d in degrees:
        try:
            results[d] = diameter(gamma_poly_truncated(ring, d, limits))
        except ResourceLimitError as e:
            return CheckOutcome.inconclusive(name, str(e), stats, parameters)
    stats["truncated"] = {str(d): r.as_dict() for d, r in results.items()}

    for d, result in results.items():
        if not result.connected:
            return CheckOutcome.inconclusive(
                name, f"truncated graph at degree {d} is disconnected", stats, parameters
            )
        if _order(result.diameter) < _order(base.diameter):
            witness = {"degree": str(d), "diameter": str(result.diameter)}
            return CheckOutcome.refuted(name, witness, "truncated diameter below base diameter", stats, parameters)

    values = [_order(results[d].diameter) for d in degrees]
    if any(later != earlier for earlier, later in itertools.pairwise(values)):
        return CheckOutcome.inconclusive(
            name, "truncated diameters are not stable across degrees", stats, parameters
        )

    final = results[degrees[-1]]
    if final.diameter != prediction.diameter:
        witness = {
            "degree": str(degrees[-1]),
            "diameter": str(final.diameter),
            "predicted": str(prediction.diameter),
        }
        if final.witness is not None:
            witness.update({"u": final.witness[0], "v": final.witness[1]})
        return CheckOutcome.refuted(name, witness, "truncated diameter differs from prediction", stats, parameters)
    return CheckOutcome.verified(name, stats, parameters)


def _quoted(label: str) -> str:
    return '"' + label.replace('"', '\\"') + '"'


def to_dot(graph: ZDGraph) -> str:
    """Return the graph in Graphviz DOT, vertices then edges in index order."""
    lines = ["graph G {"]
    lines.extend(f"  {_quoted(label)};" for label in graph.labels)
    lines.extend(f"  {_quoted(graph.labels[i])} -- {_quoted(graph.labels[j])};" for i, j in graph.edges())
    lines.append("}")
    return "\n".join(lines) + "\n"

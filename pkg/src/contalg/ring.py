# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Finite commutative rings with identity stored as exact operation tables.

A ring element is an index into the tables of its ring.  Rings are immutable after construction
and every operation in this package is a pure function of its inputs.

The constructors cover the rings needed to exercise content algebra results at desk scale:

    make_zn                      integers mod n
    make_univariate_quotient     Z_n[y]/(f) for a monic f
    make_trunc_local             Z_n[y_1..y_k] modulo all monomials of degree m and extra monomials
    make_product                 componentwise product of two rings

Example:
    Build Z6 and look for its zero-divisors::

        ring = make_zn(6)
        zero_divisors(ring)        # frozenset({0, 2, 3, 4})
"""

from __future__ import annotations

import dataclasses
import functools
import itertools
import string

import numpy

from contalg.expr import Product, RingExpr, TruncLocal, UnivarQuot, Zn, polynomial_text
from contalg.settings import ORDER_CAP
from contalg.support.exit import ConsistencyError, InvalidParameterError, ResourceLimitError
from contalg.support.log import log

TABLE_DTYPE = numpy.int32


class FiniteRing:
    """Finite commutative ring with identity given by its addition and multiplication tables.

    Attributes:
        order: Number of elements.
        add: order x order table of element indices, read only.
        mul: order x order table of element indices, read only.
        zero: Index of the additive identity.
        one: Index of the multiplicative identity.
        names: Canonical display name of each element.
        construction: Ring expression the ring was built from, None for hand-built tables.
    """

    def __init__(
        self,
        add: numpy.ndarray,
        mul: numpy.ndarray,
        zero: int,
        one: int,
        names: list[str],
        construction: RingExpr = None,
    ) -> None:
        """Wrap operation tables as a ring.

        The tables are only checked for shape, range and unique names here.  Use check_axioms()
        for the exhaustive ring axiom scan.

        Args:
            add: Addition table.
            mul: Multiplication table.
            zero: Additive identity.
            one: Multiplicative identity.
            names: One unique display name per element.
            construction: Optional ring expression recorded for reports.

        Raises:
            InvalidParameterError: Tables or names do not describe a ring of a single order.
        """
        add = numpy.array(add, dtype=TABLE_DTYPE)
        mul = numpy.array(mul, dtype=TABLE_DTYPE)
        order = len(names)

        if order < 1 or add.shape != (order, order) or mul.shape != (order, order):
            raise InvalidParameterError(f"Tables must be {order}x{order} to match {order} element names")
        if add.min() < 0 or add.max() >= order or mul.min() < 0 or mul.max() >= order:
            raise InvalidParameterError("Table entries must be element indices")
        if not (0 <= zero < order and 0 <= one < order):
            raise InvalidParameterError("Zero and one must be element indices")
        if len(set(names)) != order:
            raise InvalidParameterError("Element names must be unique")

        add.setflags(write=False)
        mul.setflags(write=False)

        self.order = order
        self.add = add
        self.mul = mul
        self.zero = int(zero)
        self.one = int(one)
        self.names = tuple(names)
        self.construction = construction
        self._index = {name: i for i, name in enumerate(names)}

    def __len__(self) -> int:
        return self.order

    def __repr__(self) -> str:
        return f"FiniteRing({self}, order={self.order})"

    def __str__(self) -> str:
        return "custom" if self.construction is None else str(self.construction)

    @functools.cached_property
    def neg(self) -> numpy.ndarray:
        """Additive inverse of every element."""
        negatives = numpy.argmax(self.add == self.zero, axis=1).astype(TABLE_DTYPE)
        negatives.setflags(write=False)
        return negatives

    @functools.cached_property
    def nonzero(self) -> numpy.ndarray:
        return numpy.array([i for i in range(self.order) if i != self.zero], dtype=TABLE_DTYPE)

    @functools.cached_property
    def zero_products(self) -> numpy.ndarray:
        """Boolean table with [a, b] True when a*b = 0."""
        table = self.mul == self.zero
        table.setflags(write=False)
        return table

    def element(self, name: str) -> int:
        """Return the index of the element with the given canonical name.

        Raises:
            InvalidParameterError: No element has that name.
        """
        try:
            return self._index[name]
        except KeyError:
            raise InvalidParameterError(f"Unknown element '{name}' in ring {self}")

    def name(self, a: int) -> str:
        return self.names[a]

    def plus(self, a: int, b: int) -> int:
        return int(self.add[a, b])

    def times(self, a: int, b: int) -> int:
        return int(self.mul[a, b])

    def negate(self, a: int) -> int:
        return int(self.neg[a])

    def minus(self, a: int, b: int) -> int:
        return int(self.add[a, self.neg[b]])

    def power(self, a: int, k: int) -> int:
        result = self.one
        for _ in range(k):
            result = int(self.mul[result, a])
        return result


@dataclasses.dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    witness: tuple[int, ...]


@dataclasses.dataclass
class AxiomReport:
    """Result of the exhaustive ring axiom scan, one entry per failed axiom."""

    ring: FiniteRing
    failures: list[AxiomFailure] = dataclasses.field(default_factory=list)

    @property
    def passed(self) -> bool:
        return len(self.failures) == 0

    def describe(self) -> list[str]:
        lines = []
        for failure in self.failures:
            witness = ", ".join(self.ring.names[i] for i in failure.witness)
            lines.append(f"{failure.axiom} fails at ({witness})")
        return lines


# --------------------------------------------------------------------------------------
# Constructors
# --------------------------------------------------------------------------------------


def _check_order(order: int, order_cap: int) -> None:
    if order > order_cap:
        raise ResourceLimitError("ring order", order, order_cap)


def make_zn(n: int, order_cap: int = ORDER_CAP) -> FiniteRing:
    """Return the ring of integers mod n with element names "0".."n-1".

    Raises:
        InvalidParameterError: n is less than 1.
        ResourceLimitError: n exceeds the order cap.
    """
    if n < 1:
        raise InvalidParameterError(f"Z{n} is not a ring, n must be at least 1")
    _check_order(n, order_cap)

    a = numpy.arange(n, dtype=numpy.int64)
    add = (a[:, None] + a[None, :]) % n
    mul = (a[:, None] * a[None, :]) % n

    log.debug(f"Built Z{n}")
    return FiniteRing(add, mul, 0, 1 % n, [str(i) for i in range(n)], Zn(n))


def _free_algebra(
    n: int,
    structure: numpy.ndarray,
    names: list[str],
    construction: RingExpr,
) -> FiniteRing:
    """Build the tables of a free Z_n-algebra from its basis structure constants.

    Element i has coefficient vector given by the base-n digits of i, least significant digit on
    the first basis element.  structure[i, j, k] is the coefficient of basis k in basis_i * basis_j.
    """
    size = structure.shape[0]
    order = n**size
    radix = n ** numpy.arange(size, dtype=numpy.int64)
    coefficients = (numpy.arange(order, dtype=numpy.int64)[:, None] // radix) % n

    add = numpy.empty((order, order), dtype=TABLE_DTYPE)
    mul = numpy.empty((order, order), dtype=TABLE_DTYPE)
    for a in range(order):
        add[a] = ((coefficients[a] + coefficients) % n) @ radix
        row_structure = numpy.tensordot(coefficients[a], structure, axes=1)
        mul[a] = ((coefficients @ row_structure) % n) @ radix

    return FiniteRing(add, mul, 0, 1 % n if order > 1 else 0, names, construction)


def _element_names(n: int, basis: list[tuple[int, ...]], variables: tuple[str, ...]) -> list[str]:
    """Canonical names: terms in descending total degree, basis order within one degree."""
    size = len(basis)
    display_order = sorted(range(size), key=lambda i: (-sum(basis[i]), i))
    names = []
    for index in range(n**size):
        digits = [(index // n**i) % n for i in range(size)]
        terms = [(digits[i], basis[i]) for i in display_order if digits[i] != 0]
        names.append(polynomial_text(terms, variables))
    return names


def make_univariate_quotient(
    n: int, modulus: list[int], var: str = "y", order_cap: int = ORDER_CAP
) -> FiniteRing:
    """Return Z_n[var]/(f) where f is given by its ascending coefficient list.

    Args:
        n: Characteristic, at least 2.
        modulus: Coefficients c_0..c_d of a monic f of degree d >= 1.
        var: Single lowercase variable name used for element names.
        order_cap: Largest order allowed.

    Raises:
        InvalidParameterError: n < 2, f is not monic or has degree 0.
        ResourceLimitError: n^d exceeds the order cap.
    """
    if n < 2:
        raise InvalidParameterError(f"Quotients need n >= 2, got {n}")

    coefficients = [c % n for c in modulus]
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    degree = len(coefficients) - 1
    if degree < 1 or coefficients[-1] != 1:
        raise InvalidParameterError(f"Modulus {modulus} must be monic of degree at least 1 over Z{n}")

    _check_order(n**degree, order_cap)

    # y^k reduced mod f for k < 2d-1, each a coefficient vector on 1, y, .., y^(d-1)
    powers = [numpy.eye(degree, dtype=numpy.int64)[k] for k in range(degree)]
    top = numpy.array([(-c) % n for c in coefficients[:-1]], dtype=numpy.int64)
    for _ in range(degree, 2 * degree - 1):
        previous = powers[-1]
        shifted = numpy.concatenate(([0], previous[:-1]))
        powers.append((shifted + previous[-1] * top) % n)

    structure = numpy.zeros((degree, degree, degree), dtype=numpy.int64)
    for i, j in itertools.product(range(degree), repeat=2):
        structure[i, j] = powers[i + j]

    basis = [(k,) for k in range(degree)]
    names = _element_names(n, basis, (var,))
    construction = UnivarQuot(n, var, tuple(coefficients))

    log.debug(f"Built {construction} with order {n**degree}")
    return _free_algebra(n, structure, names, construction)


def default_variables(k: int) -> tuple[str, ...]:
    if k == 1:
        return ("y",)
    if k == 2:
        return ("u", "v")
    letters = [c for c in string.ascii_lowercase if c != "x"]
    return tuple(letters[:k])


def make_trunc_local(
    n: int,
    k: int,
    m: int,
    extra: list[tuple[int, ...]] = (),
    variables: tuple[str, ...] = None,
    order_cap: int = ORDER_CAP,
) -> FiniteRing:
    """Return Z_n[y_1..y_k] modulo every monomial of total degree m and the extra monomials.

    The basis is the set of monomials of total degree below m that no extra monomial divides.  A
    product of basis monomials is either another basis monomial or zero.

    Args:
        n: Characteristic, at least 2.
        k: Number of variables, at least 1.
        m: Truncation degree, at least 1.
        extra: Exponent vectors of additional monomial relations.
        variables: Optional single letter variable names, defaults to y / u,v / a,b,c..
        order_cap: Largest order allowed.

    Raises:
        InvalidParameterError: Parameters out of range or malformed relations.
        ResourceLimitError: The order n^(basis size) exceeds the order cap.
    """
    if n < 2 or k < 1 or m < 1:
        raise InvalidParameterError(f"Truncated rings need n >= 2, k >= 1, m >= 1, got {n}, {k}, {m}")

    variables = default_variables(k) if variables is None else tuple(variables)
    if len(variables) != k or len(set(variables)) != k:
        raise InvalidParameterError(f"Need {k} distinct variable names, got {variables}")

    relations = [tuple(int(e) for e in r) for r in extra]
    for relation in relations:
        if len(relation) != k or min(relation) < 0 or sum(relation) == 0:
            raise InvalidParameterError(f"Relation {relation} is not a nonconstant monomial in {k} variables")

    def killed(exponents: tuple[int, ...]) -> bool:
        if sum(exponents) >= m:
            return True
        return any(all(e >= r for e, r in zip(exponents, relation)) for relation in relations)

    candidates = [e for e in itertools.product(range(m), repeat=k) if sum(e) < m]
    basis = sorted((e for e in candidates if not killed(e)), key=lambda e: (sum(e), tuple(-x for x in e)))

    _check_order(n ** len(basis), order_cap)

    position = {e: i for i, e in enumerate(basis)}
    size = len(basis)
    structure = numpy.zeros((size, size, size), dtype=numpy.int64)
    for i, j in itertools.product(range(size), repeat=2):
        total = tuple(a + b for a, b in zip(basis[i], basis[j]))
        if total in position:
            structure[i, j, position[total]] = 1

    names = _element_names(n, basis, variables)
    construction = TruncLocal(n, variables, m, tuple(relations))

    log.debug(f"Built {construction} with basis {basis}")
    return _free_algebra(n, structure, names, construction)


def make_product(left: FiniteRing, right: FiniteRing, order_cap: int = ORDER_CAP) -> FiniteRing:
    """Return the componentwise product with element names "(a,b)".

    Raises:
        ResourceLimitError: |left|*|right| exceeds the order cap.
    """
    order = left.order * right.order
    _check_order(order, order_cap)

    first = numpy.repeat(numpy.arange(left.order), right.order)
    second = numpy.tile(numpy.arange(right.order), left.order)

    def combine(table1: numpy.ndarray, table2: numpy.ndarray) -> numpy.ndarray:
        outer = table1[first[:, None], first[None, :]].astype(numpy.int64) * right.order
        return outer + table2[second[:, None], second[None, :]]

    names = [f"({left.names[a]},{right.names[b]})" for a, b in zip(first, second)]
    return FiniteRing(
        combine(left.add, right.add),
        combine(left.mul, right.mul),
        left.zero * right.order + right.zero,
        left.one * right.order + right.one,
        names,
        Product(left.construction, right.construction),
    )


# --------------------------------------------------------------------------------------
# Validation and element classes
# --------------------------------------------------------------------------------------


def _first(mask: numpy.ndarray) -> tuple[int, ...] | None:
    hits = numpy.argwhere(mask)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def check_axioms(ring: FiniteRing) -> AxiomReport:
    """Exhaustively check every commutative ring axiom and the element naming round trip.

    Associativity and distributivity are O(order^3).  Each failed axiom is reported once, with the
    first witness in index order.

    Args:
        ring: The ring to check.

    Returns:
        AxiomReport listing each failed axiom and its witness.
    """
    from contalg.parser import parse_element  # noqa: circular, parser builds rings

    report = AxiomReport(ring)
    add, mul, order = ring.add, ring.mul, ring.order
    everything = numpy.arange(order)

    def record(axiom: str, witness: tuple[int, ...] | None) -> None:
        if witness is not None:
            report.failures.append(AxiomFailure(axiom, witness))

    record("additive identity", _first(add[ring.zero] != everything))
    record("additive inverse", _first(~(add == ring.zero).any(axis=1)))
    record("addition is a group operation", _first((numpy.sort(add, axis=1) != everything).any(axis=1)))
    record("additive commutativity", _first(add != add.T))
    record("multiplicative identity", _first(mul[ring.one] != everything))
    record("multiplicative commutativity", _first(mul != mul.T))
    if order > 1 and ring.zero == ring.one:
        record("zero differs from one", (ring.zero,))

    pending = {"additive associativity", "multiplicative associativity", "distributivity"}
    for a in range(order):
        if not pending:
            break
        if "additive associativity" in pending:
            witness = _first(add[add[a]] != add[a][add])
            if witness is not None:
                record("additive associativity", (a, *witness))
                pending.discard("additive associativity")
        if "multiplicative associativity" in pending:
            witness = _first(mul[mul[a]] != mul[a][mul])
            if witness is not None:
                record("multiplicative associativity", (a, *witness))
                pending.discard("multiplicative associativity")
        if "distributivity" in pending:
            witness = _first(mul[a][add] != add[numpy.ix_(mul[a], mul[a])])
            if witness is not None:
                record("distributivity", (a, *witness))
                pending.discard("distributivity")

    if ring.construction is not None:
        for a, name in enumerate(ring.names):
            try:
                parsed = parse_element(name, ring)
            except Exception:
                parsed = None
            if parsed != a:
                record("element name round trip", (a,))
                break

    log.debug(f"Axiom scan of {ring}: {len(report.failures)} failures")
    return report


def zero_divisor_mask(ring: FiniteRing) -> numpy.ndarray:
    """Boolean mask of Z(R) = {r : r*s = 0 for some s != 0}."""
    products = ring.zero_products.copy()
    products[:, ring.zero] = False
    return products.any(axis=1)


def zero_divisors(ring: FiniteRing) -> frozenset[int]:
    """Return Z(R) as element indices, including zero whenever the ring is nonzero."""
    return frozenset(int(i) for i in numpy.flatnonzero(zero_divisor_mask(ring)))


def units_and_regulars(ring: FiniteRing) -> tuple[frozenset[int], frozenset[int]]:
    """Return (units, regular elements).

    Raises:
        ConsistencyError: The sets differ, impossible for a finite ring.
    """
    units = frozenset(int(i) for i in numpy.flatnonzero((ring.mul == ring.one).any(axis=1)))
    regulars = frozenset(int(i) for i in numpy.flatnonzero(~zero_divisor_mask(ring)))
    if units != regulars:
        raise ConsistencyError(f"Units and regular elements of {ring} differ")
    return units, regulars

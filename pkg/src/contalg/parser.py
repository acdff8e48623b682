# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Recursive descent parsers for ring expressions, element names and polynomial literals.

Ring expressions::

    ringexpr := atom { ("x" | "×") atom }
    atom     := "Z" nat
              | "Z" nat "[" var "]" "/(" upoly ")"
              | "Z" nat "[" var { "," var } "]@" nat [ "/(" monomial { "," monomial } ")" ]
              | "(" ringexpr ")"

Polynomial literals over R[S]::

    poly  := term { ("+" | "-") term }
    term  := coeff [ "*X" [ "^" exponent ] ] | "X" [ "^" exponent ]
    coeff := element name, parenthesized when it contains "," or a variable

Whitespace is ignored everywhere.  Syntax errors raise ParseError with the position and the
set of tokens that would have been accepted.  Semantic errors such as a non-monic modulus are
raised later by the ring constructors as InvalidParameterError.
"""

from __future__ import annotations

from contalg.expr import Product, RingExpr, TruncLocal, UnivarQuot, Zn
from contalg.ideals import Ideal, ideal_generated, principal
from contalg.monoid_ring import MRElem, Monoid
from contalg.ring import FiniteRing, make_product, make_trunc_local, make_univariate_quotient, make_zn
from contalg.settings import Limits
from contalg.support.exit import USAGE_EXIT_CODE, InvalidParameterError


class ParseError(Exception):
    """Custom exception for text that does not match a grammar."""

    def __init__(self, text: str, position: int, expected: set[str]) -> None:
        """Add error code and indicate custom exception then propagate."""
        self.code = USAGE_EXIT_CODE
        self.contalg = True
        self.text = text
        self.position = position
        self.expected = frozenset(expected)
        choices = ", ".join(f"'{e}'" for e in sorted(self.expected))
        super().__init__(f"Cannot parse '{text}' at position {position}, expected {choices}")


class _Cursor:
    """Character cursor that skips whitespace and remembers what it was looking for."""

    def __init__(self, text: str) -> None:
        self.text = text
        self.position = 0
        self.expected: set[str] = set()
        self._furthest = 0

    def _skip(self) -> None:
        while self.position < len(self.text) and self.text[self.position].isspace():
            self.position += 1

    def peek(self) -> str:
        self._skip()
        return self.text[self.position] if self.position < len(self.text) else ""

    def at_end(self) -> bool:
        return self.peek() == ""

    def _want(self, token: str) -> None:
        if self.position > self._furthest:
            self._furthest = self.position
            self.expected = set()
        if self.position == self._furthest:
            self.expected.add(token)

    def accept(self, token: str) -> bool:
        self._skip()
        if self.text.startswith(token, self.position):
            self.position += len(token)
            return True
        self._want(token)
        return False

    def expect(self, token: str) -> None:
        if not self.accept(token):
            self.fail()

    def nat(self) -> int:
        self._skip()
        start = self.position
        while self.position < len(self.text) and self.text[self.position].isdigit():
            self.position += 1
        if start == self.position:
            self._want("natural number")
            self.fail()
        return int(self.text[start : self.position])

    def var(self, allowed: tuple[str, ...] = None) -> str:
        c = self.peek()
        if c.isalpha() and c.islower() and (allowed is None or c in allowed):
            self.position += 1
            return c
        self._want("variable" if allowed is None else " or ".join(allowed))
        self.fail()

    def fail(self) -> None:
        raise ParseError(self.text, self._furthest, self.expected or {"end of input"})

    def finish(self) -> None:
        if not self.at_end():
            self._want("end of input")
            self.fail()


# --------------------------------------------------------------------------------------
# Ring expressions
# --------------------------------------------------------------------------------------


def _monomial(cursor: _Cursor, variables: tuple[str, ...]) -> tuple[int, ...]:
    exponents = [0] * len(variables)
    if cursor.peek() not in variables:
        cursor.var(variables)
    while (c := cursor.peek()) in variables:
        cursor.position += 1
        exponents[variables.index(c)] += cursor.nat() if cursor.accept("^") else 1
    return tuple(exponents)


def _upoly(cursor: _Cursor, var: str) -> tuple[int, ...]:
    """Return ascending coefficients of a "+" separated univariate polynomial."""
    coefficients: dict[int, int] = {}
    while True:
        coefficient = cursor.nat() if cursor.peek().isdigit() else None
        if cursor.peek() == var:
            cursor.position += 1
            exponent = cursor.nat() if cursor.accept("^") else 1
        elif coefficient is None:
            cursor.var((var,))
        else:
            exponent = 0
        coefficients[exponent] = coefficients.get(exponent, 0) + (1 if coefficient is None else coefficient)
        if not cursor.accept("+"):
            break
    size = max(coefficients) + 1
    return tuple(coefficients.get(e, 0) for e in range(size))


def _atom(cursor: _Cursor) -> RingExpr:
    if cursor.accept("("):
        expr = _ring_expr(cursor)
        cursor.expect(")")
        return expr

    cursor.expect("Z")
    n = cursor.nat()
    if not cursor.accept("["):
        return Zn(n)

    variables = [cursor.var()]
    while cursor.accept(","):
        variables.append(cursor.var())
    cursor.expect("]")
    if len(set(variables)) != len(variables):
        raise InvalidParameterError(f"Repeated variable in {variables}")
    variables = tuple(variables)

    if cursor.accept("@"):
        m = cursor.nat()
        extra = []
        if cursor.accept("/"):
            cursor.expect("(")
            extra.append(_monomial(cursor, variables))
            while cursor.accept(","):
                extra.append(_monomial(cursor, variables))
            cursor.expect(")")
        return TruncLocal(n, variables, m, tuple(extra))

    if len(variables) != 1:
        cursor.expect("@")
    cursor.expect("/")
    cursor.expect("(")
    modulus = _upoly(cursor, variables[0])
    cursor.expect(")")
    return UnivarQuot(n, variables[0], modulus)


def _ring_expr(cursor: _Cursor) -> RingExpr:
    expr = _atom(cursor)
    while cursor.accept("x") or cursor.accept("×"):
        expr = Product(expr, _atom(cursor))
    return expr


def parse_ring_expr(text: str) -> RingExpr:
    """Return the syntax tree of a ring expression such as "Z2[u,v]@3 x Z4".

    Raises:
        ParseError: The text does not match the ring expression grammar.
    """
    cursor = _Cursor(text)
    expr = _ring_expr(cursor)
    cursor.finish()
    return expr


def build_ring(expr: RingExpr | str, limits: Limits = None) -> FiniteRing:
    """Construct the ring an expression describes.

    Raises:
        ParseError: expr is text that does not parse.
        InvalidParameterError: The expression is well formed but names no ring.
        ResourceLimitError: The ring order exceeds the order cap.
    """
    limits = Limits() if limits is None else limits
    if isinstance(expr, str):
        expr = parse_ring_expr(expr)

    cap = limits.order_cap
    if isinstance(expr, Zn):
        return make_zn(expr.n, cap)
    if isinstance(expr, UnivarQuot):
        return make_univariate_quotient(expr.n, list(expr.modulus), expr.var, cap)
    if isinstance(expr, TruncLocal):
        return make_trunc_local(expr.n, len(expr.variables), expr.m, list(expr.extra), expr.variables, cap)
    return make_product(build_ring(expr.left, limits), build_ring(expr.right, limits), cap)


# --------------------------------------------------------------------------------------
# Elements and polynomial literals
# --------------------------------------------------------------------------------------


def parse_element(name: str, ring: FiniteRing) -> int:
    """Return the index of the element with the given name, optionally parenthesized.

    Raises:
        ParseError: No element of the ring has this name.
    """
    text = "".join(name.split())
    while True:
        try:
            return ring.element(text)
        except InvalidParameterError:
            if not (text.startswith("(") and text.endswith(")")):
                raise ParseError(name, 0, {f"element of {ring}"})
            text = text[1:-1]


def _balanced(cursor: _Cursor) -> str:
    start = cursor.position
    depth = 0
    while cursor.position < len(cursor.text):
        c = cursor.text[cursor.position]
        cursor.position += 1
        depth += {"(": 1, ")": -1}.get(c, 0)
        if depth == 0:
            return cursor.text[start : cursor.position]
    cursor.position = len(cursor.text)
    cursor._want(")")
    cursor.fail()


def _coefficient(cursor: _Cursor, ring: FiniteRing) -> int:
    cursor._skip()
    start = cursor.position
    if cursor.peek() == "(":
        text = _balanced(cursor)
    else:
        while cursor.position < len(cursor.text) and cursor.text[cursor.position] not in "+-*^ \t":
            cursor.position += 1
        text = cursor.text[start : cursor.position]
    if text == "":
        cursor._want("coefficient")
        cursor.fail()
    try:
        return parse_element(text, ring)
    except ParseError:
        raise ParseError(cursor.text, start, {f"element of {ring}"})


def _exponent(cursor: _Cursor, monoid: Monoid) -> object:
    cursor._skip()
    start = cursor.position
    if cursor.peek() == "(":
        text = _balanced(cursor)
    else:
        while cursor.position < len(cursor.text) and cursor.text[cursor.position].isalnum():
            cursor.position += 1
        text = cursor.text[start : cursor.position]
    try:
        return monoid.element(text)
    except InvalidParameterError:
        raise ParseError(cursor.text, start, {f"element of {monoid}"})


def _monomial_part(cursor: _Cursor, monoid: Monoid) -> object:
    """Parse the rest of "X[^exponent]" after the X."""
    start = cursor.position
    if cursor.accept("^"):
        return _exponent(cursor, monoid)
    if monoid.is_free and monoid.arity == 1:
        return (1,)
    raise ParseError(cursor.text, start, {"^"})


def parse_poly_literal(text: str, ring: FiniteRing, monoid: Monoid = None) -> MRElem:
    """Return the element of R[S] written as a polynomial literal, zero terms dropped.

    Args:
        text: Literal such as "2*X^1 + 2" or "(u)*X + (v)".
        ring: Coefficient ring whose element names are the coefficients.
        monoid: Exponent monoid, defaults to N so literals are polynomials in X.

    Raises:
        ParseError: Malformed term, unknown coefficient or exponent.
    """
    monoid = Monoid.free(1) if monoid is None else monoid
    cursor = _Cursor(text)
    terms: dict[object, int] = {}
    negate = False
    while True:
        if cursor.accept("X"):
            coefficient = ring.one
            exponent = _monomial_part(cursor, monoid)
        else:
            coefficient = _coefficient(cursor, ring)
            if cursor.accept("*"):
                cursor.expect("X")
                exponent = _monomial_part(cursor, monoid)
            else:
                exponent = monoid.identity
        if negate:
            coefficient = ring.negate(coefficient)
        terms[exponent] = ring.plus(terms.get(exponent, ring.zero), coefficient)

        if cursor.accept("+"):
            negate = False
        elif cursor.accept("-"):
            negate = True
        else:
            break
    cursor.finish()
    return MRElem(ring, monoid, terms)


def parse_monoid(text: str) -> Monoid:
    """Return the monoid named "N", "N^k", "C<n>" or "eaz".

    Raises:
        ParseError: Unknown monoid name.
    """
    cursor = _Cursor(text)
    if cursor.accept("eaz"):
        monoid = Monoid.absorbing()
    elif cursor.accept("N"):
        monoid = Monoid.free(cursor.nat() if cursor.accept("^") else 1)
    elif cursor.accept("C"):
        bracketed = cursor.accept("<")
        n = cursor.nat()
        if bracketed:
            cursor.expect(">")
        monoid = Monoid.cyclic(n)
    else:
        cursor.fail()
    cursor.finish()
    return monoid


def _split_top_level(text: str) -> list[str]:
    parts, depth, start = [], 0, 0
    for i, c in enumerate(text):
        depth += {"(": 1, ")": -1}.get(c, 0)
        if c == "," and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_ideal(text: str, ring: FiniteRing) -> Ideal:
    """Return the ideal generated by "2", "(2)" or "((1,0),(0,1))".

    A text that names a single element, optionally parenthesized, is a principal ideal.
    Otherwise the outer parentheses hold comma separated generators.

    Raises:
        ParseError: A generator is not an element name of the ring.
    """
    compact = "".join(text.split())
    try:
        return principal(ring, parse_element(compact, ring))
    except ParseError:
        if not (compact.startswith("(") and compact.endswith(")")):
            raise
    gens = [parse_element(part, ring) for part in _split_top_level(compact[1:-1])]
    return ideal_generated(ring, gens)

# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Ring expressions: the syntax tree shared by the parser and the ring constructors.

Each ring records the expression it was built from so reports can print a ring in a form the
parser reads back.  Printing is canonical: parse(str(expr)) == expr.
"""

from __future__ import annotations

import dataclasses


def monomial_text(exponents: tuple[int, ...], variables: tuple[str, ...]) -> str:
    """Return a monomial such as "u^2v", or "1" for the empty monomial."""
    text = ""
    for var, e in zip(variables, exponents):
        if e == 1:
            text += var
        elif e > 1:
            text += f"{var}^{e}"
    return text if text else "1"


def polynomial_text(terms: list[tuple[int, tuple[int, ...]]], variables: tuple[str, ...]) -> str:
    """Return "+" joined terms, coefficient written before the monomial without "*".

    Args:
        terms: (coefficient, exponents) pairs with nonzero integer coefficients, already in
            display order.
        variables: Variable names matching the exponent positions.
    """
    if len(terms) == 0:
        return "0"
    parts = []
    for coefficient, exponents in terms:
        monomial = monomial_text(exponents, variables)
        if monomial == "1":
            parts.append(str(coefficient))
        elif coefficient == 1:
            parts.append(monomial)
        else:
            parts.append(f"{coefficient}{monomial}")
    return "+".join(parts)


@dataclasses.dataclass(frozen=True)
class Zn:
    n: int

    def __str__(self) -> str:
        return f"Z{self.n}"


@dataclasses.dataclass(frozen=True)
class UnivarQuot:
    """Z_n[var]/(modulus) with the modulus given as ascending coefficients."""

    n: int
    var: str
    modulus: tuple[int, ...]

    def __str__(self) -> str:
        terms = [(c, (e,)) for e, c in reversed(list(enumerate(self.modulus))) if c != 0]
        return f"Z{self.n}[{self.var}]/({polynomial_text(terms, (self.var,))})"


@dataclasses.dataclass(frozen=True)
class TruncLocal:
    """Z_n[vars] modulo all monomials of total degree m and the extra monomials."""

    n: int
    variables: tuple[str, ...]
    m: int
    extra: tuple[tuple[int, ...], ...] = ()

    def __str__(self) -> str:
        text = f"Z{self.n}[{','.join(self.variables)}]@{self.m}"
        if self.extra:
            text += "/(" + ",".join(monomial_text(e, self.variables) for e in self.extra) + ")"
        return text


@dataclasses.dataclass(frozen=True)
class Product:
    left: RingExpr
    right: RingExpr

    def __str__(self) -> str:
        right = f"({self.right})" if isinstance(self.right, Product) else str(self.right)
        return f"{self.left} x {right}"


RingExpr = Zn | UnivarQuot | TruncLocal | Product

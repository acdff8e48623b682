# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Commutative monoids, the monoid ring R[S] and truncation windows onto it.

Two kinds of monoid are supported: the free commutative monoid N^k, whose elements are exponent
tuples, and finite monoids given by a Cayley table, whose elements are indices.  Polynomial rings
are R[N], so R[X] is MRElem over Monoid.free(1).

Exhaustive checks do not loop over MRElem objects.  A PolySpace holds every polynomial of a
truncation window as a row of coefficient indices, so products, contents and annihilators are
computed for many polynomials at once with table lookups.

Example:
    Build the torsion counterexample over Z3 with the cyclic group of order 2::

        ring = make_zn(3)
        f, g, k = counterexample_torsion(Monoid.cyclic(2), ring, 1, 0)
        str(f)        # "X^1 + 2*X^0"
        (f * g).is_zero
"""

from __future__ import annotations

import functools
import itertools
import math
import re

import numpy

from contalg.ideals import Ideal, enumerate_ideals, ideal_generated
from contalg.ring import FiniteRing
from contalg.settings import Limits, POLY_CAP
from contalg.support.exit import ConsistencyError, InvalidParameterError, ResourceLimitError
from contalg.support.log import log

MONOID_NAME = re.compile(r"^[A-Za-z0-9_]+$")


class Monoid:
    """Commutative monoid, either free N^k or finite with a Cayley table.

    Attributes:
        arity: k for N^k, 0 for finite monoids.
        table: Cayley table of a finite monoid, None for N^k.
        identity: Identity element, the zero tuple for N^k.
        names: Element names of a finite monoid.
        label: Short display label such as "N", "N^2", "C3".
    """

    def __init__(
        self,
        arity: int = 0,
        table: numpy.ndarray = None,
        identity: int = 0,
        names: list[str] = None,
        label: str = "",
    ) -> None:
        self.arity = arity
        self.table = table
        self.names = tuple(names) if names is not None else ()
        self.label = label
        self.identity = (0,) * arity if table is None else int(identity)
        self._index = {name: i for i, name in enumerate(self.names)}

    @classmethod
    def free(cls, k: int = 1) -> Monoid:
        if k < 1:
            raise InvalidParameterError(f"Free monoid needs k >= 1, got {k}")
        return cls(arity=k, label="N" if k == 1 else f"N^{k}")

    @classmethod
    def cyclic(cls, n: int) -> Monoid:
        """Return the cyclic group of order n as the addition table of Z_n."""
        if n < 1:
            raise InvalidParameterError(f"Cyclic monoid needs n >= 1, got {n}")
        a = numpy.arange(n)
        return cls.from_table((a[:, None] + a[None, :]) % n, 0, [str(i) for i in range(n)], f"C{n}")

    @classmethod
    def absorbing(cls) -> Monoid:
        """Return {e, a, z} with a+a = a+z = z+z = z, commutative but not cancellative."""
        table = [[0, 1, 2], [1, 2, 2], [2, 2, 2]]
        return cls.from_table(table, 0, ["e", "a", "z"], "eaz")

    @classmethod
    def from_table(cls, table: object, identity: int, names: list[str], label: str = "table") -> Monoid:
        """Validate a Cayley table and return the finite monoid it defines.

        Raises:
            InvalidParameterError: The table is malformed, not commutative, not associative or
                the identity is wrong.  The message names the first violating elements.
        """
        table = numpy.array(table, dtype=numpy.int64)
        size = len(names)
        if size < 1 or table.shape != (size, size):
            raise InvalidParameterError(f"Monoid table must be {size}x{size} to match its names")
        if table.min() < 0 or table.max() >= size:
            raise InvalidParameterError("Monoid table entries must be element indices")
        if len(set(names)) != size or not all(MONOID_NAME.match(name) for name in names):
            raise InvalidParameterError(f"Monoid element names {names} must be unique identifiers")
        if not 0 <= identity < size:
            raise InvalidParameterError(f"Identity {identity} is not an element index")

        def first(mask: numpy.ndarray) -> str | None:
            hits = numpy.argwhere(mask)
            return None if len(hits) == 0 else ", ".join(names[int(i)] for i in hits[0])

        everything = numpy.arange(size)
        if (witness := first(table[identity] != everything)) is not None:
            raise InvalidParameterError(f"{names[identity]} is not an identity, fails at ({witness})")
        if (witness := first(table != table.T)) is not None:
            raise InvalidParameterError(f"Monoid table is not commutative at ({witness})")
        for s in range(size):
            if (witness := first(table[table[s]] != table[s][table])) is not None:
                raise InvalidParameterError(f"Monoid table is not associative at ({names[s]}, {witness})")

        table.setflags(write=False)
        return cls(table=table, identity=identity, names=names, label=label)

    @property
    def is_free(self) -> bool:
        return self.table is None

    @property
    def size(self) -> int | None:
        return None if self.is_free else len(self.names)

    def _key(self) -> tuple:
        table = None if self.table is None else self.table.tobytes()
        return (self.arity, table, self.identity, self.names)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Monoid):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    def __repr__(self) -> str:
        return f"Monoid({self})"

    def __str__(self) -> str:
        return self.label

    def op(self, s: object, t: object) -> object:
        if self.is_free:
            return tuple(a + b for a, b in zip(s, t))
        return int(self.table[s, t])

    def multiple(self, n: int, s: object) -> object:
        result = self.identity
        for _ in range(n):
            result = self.op(result, s)
        return result

    def sort_key(self, s: object) -> tuple:
        return (sum(s), s) if self.is_free else (s,)

    def element(self, name: str) -> object:
        """Return the monoid element written as an exponent in a polynomial literal.

        Raises:
            InvalidParameterError: Not an element of this monoid.
        """
        if not self.is_free:
            if name not in self._index:
                raise InvalidParameterError(f"Unknown element '{name}' of monoid {self}")
            return self._index[name]
        try:
            values = tuple(int(v) for v in name.strip("()").split(","))
        except ValueError:
            raise InvalidParameterError(f"Exponent '{name}' is not an element of {self}")
        if len(values) != self.arity or min(values) < 0:
            raise InvalidParameterError(f"Exponent '{name}' is not an element of {self}")
        return values

    def exponent_text(self, s: object) -> str:
        if not self.is_free:
            return self.names[s]
        if self.arity == 1:
            return str(s[0])
        return "(" + ",".join(str(e) for e in s) + ")"

    def monomial_text(self, s: object) -> str:
        """Return "X^s", or "" for the free identity and "X" for the free generator of N."""
        if self.is_free:
            if s == self.identity:
                return ""
            if self.arity == 1 and s == (1,):
                return "X"
        return f"X^{self.exponent_text(s)}"

    @functools.cached_property
    def cancellation_witness(self) -> tuple | None:
        if self.is_free:
            return None
        for s in range(self.size):
            row = self.table[s]
            for t in range(self.size):
                later = numpy.flatnonzero(row[t + 1 :] == row[t])
                if len(later):
                    return (s, t, t + 1 + int(later[0]))
        return None

    def torsion_witness(self, bound: int = None) -> tuple | None:
        if self.is_free:
            return None
        bound = self.size**2 if bound is None else bound
        return _torsion_witness(self, bound)


@functools.lru_cache(maxsize=64)
def _torsion_witness(monoid: Monoid, bound: int) -> tuple | None:
    everything = numpy.arange(monoid.size)
    multiples = everything.copy()
    for n in range(1, bound + 1):
        if n > 1:
            multiples = monoid.table[multiples, everything]
        for s in range(1, monoid.size):
            earlier = numpy.flatnonzero(multiples[:s] == multiples[s])
            if len(earlier):
                return (n, s, int(earlier[0]))
    return None


def monoid_make(kind: str, *args: object) -> Monoid:
    """Return a monoid from its kind: "free" (k), "cyclic" (n) or "table" (table, identity, names).

    Raises:
        InvalidParameterError: Unknown kind or the table fails the monoid axioms.
    """
    makers = {"free": Monoid.free, "cyclic": Monoid.cyclic, "table": Monoid.from_table}
    if kind not in makers:
        raise InvalidParameterError(f"Unknown monoid kind '{kind}', use free, cyclic or table")
    return makers[kind](*args)


def is_cancellative(monoid: Monoid) -> tuple[bool, tuple | None]:
    """Return (cancellative, witness) with witness the first (s, t, u) with s+t = s+u, t != u."""
    witness = monoid.cancellation_witness
    return witness is None, witness


def is_torsion_free(monoid: Monoid, bound: int = None) -> tuple[bool, tuple | None]:
    """Return (torsion free, witness) with witness the first (n, s, t) with ns = nt, s != t.

    Args:
        monoid: Monoid to scan, N^k answers analytically.
        bound: Largest n scanned, defaults to |M|^2.
    """
    witness = monoid.torsion_witness(bound)
    return witness is None, witness


# --------------------------------------------------------------------------------------
# Monoid ring elements
# --------------------------------------------------------------------------------------


def _coefficient_text(name: str) -> str:
    if name.startswith("(") and name.endswith(")"):
        return name
    if any(c.isalpha() or c == "+" for c in name):
        return f"({name})"
    return name


class MRElem:
    """Element of R[S] stored as sorted (monoid element, coefficient index) pairs.

    Zero coefficients are never stored, so equality is equality of the term tuples.
    """

    __slots__ = ("ring", "monoid", "terms")

    def __init__(self, ring: FiniteRing, monoid: Monoid, terms: dict) -> None:
        self.ring = ring
        self.monoid = monoid
        nonzero = ((s, int(c)) for s, c in terms.items() if c != ring.zero)
        self.terms = tuple(sorted(nonzero, key=_term_key(monoid)))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MRElem):
            return NotImplemented
        return self.ring is other.ring and self.monoid == other.monoid and self.terms == other.terms

    def __hash__(self) -> int:
        return hash((id(self.ring), self.terms))

    def __repr__(self) -> str:
        return f"MRElem({self})"

    def __str__(self) -> str:
        if not self.terms:
            return self.ring.names[self.ring.zero]
        parts = []
        for s, c in reversed(self.terms):
            monomial = self.monoid.monomial_text(s)
            coefficient = _coefficient_text(self.ring.names[c])
            if monomial == "":
                parts.append(coefficient)
            elif c == self.ring.one:
                parts.append(monomial)
            else:
                parts.append(f"{coefficient}*{monomial}")
        return " + ".join(parts)

    def __add__(self, other: MRElem) -> MRElem:
        return mr_add(self, other)

    def __sub__(self, other: MRElem) -> MRElem:
        return mr_add(self, mr_neg(other))

    def __neg__(self) -> MRElem:
        return mr_neg(self)

    def __mul__(self, other: MRElem) -> MRElem:
        return mr_mul(self, other)

    @property
    def is_zero(self) -> bool:
        return len(self.terms) == 0

    @property
    def term_count(self) -> int:
        return len(self.terms)

    @property
    def degree(self) -> int:
        """Total degree for N^k, -1 for the zero polynomial."""
        if not self.monoid.is_free:
            raise InvalidParameterError(f"Degree is not defined over the monoid {self.monoid}")
        return max((sum(s) for s, _ in self.terms), default=-1)

    def coefficients(self) -> list[int]:
        return [c for _, c in self.terms]

    def coefficient(self, s: object) -> int:
        return dict(self.terms).get(s, self.ring.zero)

    def support(self) -> list:
        return [s for s, _ in self.terms]


def _term_key(monoid: Monoid) -> object:
    return lambda term: monoid.sort_key(term[0])


def _same_ambient(f: MRElem, g: MRElem) -> None:
    if f.ring is not g.ring or f.monoid != g.monoid:
        raise InvalidParameterError(f"{f} and {g} belong to different monoid rings")


def monomial(ring: FiniteRing, monoid: Monoid, s: object, coefficient: int = None) -> MRElem:
    return MRElem(ring, monoid, {s: ring.one if coefficient is None else coefficient})


def constant(ring: FiniteRing, monoid: Monoid, r: int) -> MRElem:
    return MRElem(ring, monoid, {monoid.identity: r})


def mr_add(f: MRElem, g: MRElem) -> MRElem:
    _same_ambient(f, g)
    terms = dict(f.terms)
    for s, c in g.terms:
        terms[s] = f.ring.plus(terms.get(s, f.ring.zero), c)
    return MRElem(f.ring, f.monoid, terms)


def mr_neg(f: MRElem) -> MRElem:
    return MRElem(f.ring, f.monoid, {s: f.ring.negate(c) for s, c in f.terms})


def mr_scalar_mul(r: int, f: MRElem) -> MRElem:
    return MRElem(f.ring, f.monoid, {s: f.ring.times(r, c) for s, c in f.terms})


def mr_mul(f: MRElem, g: MRElem) -> MRElem:
    """Convolution product: the coefficient of w is the sum of f(u)g(v) over u + v = w."""
    _same_ambient(f, g)
    ring = f.ring
    terms = {}
    for (s, a), (t, b) in itertools.product(f.terms, g.terms):
        w = f.monoid.op(s, t)
        terms[w] = ring.plus(terms.get(w, ring.zero), ring.times(a, b))
    return MRElem(ring, f.monoid, terms)


def mr_arith(op: str, f: MRElem, g: MRElem = None, r: int = None) -> MRElem:
    """Apply add, mul, neg or scalar_mul.

    Raises:
        InvalidParameterError: Unknown operation, missing operand or mixed ambient rings.
    """
    if op == "add" and g is not None:
        return mr_add(f, g)
    if op == "mul" and g is not None:
        return mr_mul(f, g)
    if op == "neg":
        return mr_neg(f)
    if op == "scalar_mul" and r is not None:
        return mr_scalar_mul(r, f)
    raise InvalidParameterError(f"Monoid ring operation '{op}' is unknown or missing an operand")


def content(f: MRElem) -> Ideal:
    """Return c(f), the ideal generated by the coefficients, with c(0) = (0)."""
    return ideal_generated(f.ring, f.coefficients())


def content_by_intersection(f: MRElem, ideals: list[Ideal] = None) -> Ideal:
    """Return the intersection of all ideals I with f in IB.

    f is in IB exactly when every coefficient lies in I because B is free over R.

    Raises:
        ResourceLimitError: Ring too large to enumerate its ideals.
    """
    ideals = enumerate_ideals(f.ring) if ideals is None else ideals
    members = (1 << f.ring.order) - 1
    for ideal in ideals:
        if all(c in ideal for c in f.coefficients()):
            members &= ideal.members
    return Ideal(f.ring, members)


def enumerate_polys(ring: FiniteRing, degree: int, include_zero: bool = False, cap: int = POLY_CAP):
    """Yield every polynomial of R[X] with degree at most d in mixed radix order.

    The constant coefficient varies fastest, so over Z2 with d = 1 the order is 1, X, X + 1.

    Raises:
        ResourceLimitError: More than cap polynomials.
    """
    count = ring.order ** (degree + 1) - (0 if include_zero else 1)
    if count > cap:
        raise ResourceLimitError(f"polynomials of degree {degree} over {ring}", count, cap)
    monoid = Monoid.free(1)
    for index in range(ring.order ** (degree + 1)):
        digits = [(index // ring.order**i) % ring.order for i in range(degree + 1)]
        f = MRElem(ring, monoid, {(i,): c for i, c in enumerate(digits)})
        if include_zero or not f.is_zero:
            yield f


# --------------------------------------------------------------------------------------
# Counterexample constructors
# --------------------------------------------------------------------------------------


def counterexample_noncancellative(monoid: Monoid, ring: FiniteRing, s: object, t: object, u: object):
    """Return f = X^s and g = X^t - X^u with fg = 0 from s + t = s + u, t != u.

    Raises:
        InvalidParameterError: (s, t, u) does not violate cancellation.
        ConsistencyError: The product is not zero.
    """
    if t == u or monoid.op(s, t) != monoid.op(s, u):
        raise InvalidParameterError(f"({s}, {t}, {u}) does not violate cancellation in {monoid}")
    f = monomial(ring, monoid, s)
    g = monomial(ring, monoid, t) - monomial(ring, monoid, u)
    if not (f * g).is_zero:
        raise ConsistencyError(f"({f})*({g}) is not zero over {ring}[{monoid}]")
    return f, g


def counterexample_torsion(monoid: Monoid, ring: FiniteRing, s: object, t: object):
    """Return f = X^s - X^t, g = sum of X^((k-i-1)s + it) for i < k, and k with fg = 0.

    k is the least natural number with ks = kt.  The exponents of g are distinct, so g is nonzero.

    Raises:
        InvalidParameterError: s = t, no k up to |M|^2 exists or the exponents of g coincide.
        ConsistencyError: The product is not zero.
    """
    if s == t:
        raise InvalidParameterError("Torsion counterexample needs s != t")
    bound = (monoid.size or 1) ** 2
    k = next((k for k in range(1, bound + 1) if monoid.multiple(k, s) == monoid.multiple(k, t)), None)
    if k is None:
        raise InvalidParameterError(f"No k <= {bound} with k*{s} = k*{t} in {monoid}")

    exponents = [monoid.op(monoid.multiple(k - i - 1, s), monoid.multiple(i, t)) for i in range(k)]
    if len(set(exponents)) != k:
        raise InvalidParameterError(f"Exponents {exponents} of the torsion factor are not distinct in {monoid}")

    f = monomial(ring, monoid, s) - monomial(ring, monoid, t)
    g = MRElem(ring, monoid, {e: ring.one for e in exponents})
    if not (f * g).is_zero:
        raise ConsistencyError(f"({f})*({g}) is not zero over {ring}[{monoid}]")
    return f, g, k


# --------------------------------------------------------------------------------------
# Vectorised row arithmetic
# --------------------------------------------------------------------------------------


def truncated_support(monoid: Monoid, degree: int) -> list:
    """Return the monomials of a truncation window in (total degree, lex) or index order."""
    if not monoid.is_free:
        return list(range(monoid.size))
    exponents = (e for e in itertools.product(range(degree + 1), repeat=monoid.arity) if sum(e) <= degree)
    return sorted(exponents, key=monoid.sort_key)


def support_sums(monoid: Monoid, left: list, right: list) -> tuple[list, numpy.ndarray]:
    """Return the support of products and the index table of left[u] + right[v] in it."""
    sums = {monoid.op(s, t) for s in left for t in right}
    support = sorted(sums, key=monoid.sort_key)
    position = {s: i for i, s in enumerate(support)}
    index = numpy.array([[position[monoid.op(s, t)] for t in right] for s in left], dtype=numpy.int64)
    return support, index.reshape(len(left), len(right))


def convolve(ring: FiniteRing, index: numpy.ndarray, size: int, rows: numpy.ndarray, factor: numpy.ndarray):
    """Multiply every row by one polynomial.

    Args:
        ring: Coefficient ring.
        index: Table from support_sums(left, right).
        size: Length of the product support.
        rows: N x len(left) coefficient rows.
        factor: len(right) coefficients.

    Returns:
        N x size coefficient rows of the products.
    """
    out = numpy.full((len(rows), size), ring.zero, dtype=rows.dtype)
    for v, c in enumerate(factor):
        if c == ring.zero:
            continue
        scaled = ring.mul[c][rows]
        for u in range(rows.shape[1]):
            w = index[u, v]
            out[:, w] = ring.add[out[:, w], scaled[:, u]]
    return out


def multiply_pairs(ring: FiniteRing, index: numpy.ndarray, size: int, left: numpy.ndarray, right: numpy.ndarray):
    """Multiply left[i] by right[i] for every i."""
    out = numpy.full((len(left), size), ring.zero, dtype=left.dtype)
    for u, v in numpy.ndindex(index.shape):
        w = index[u, v]
        out[:, w] = ring.add[out[:, w], ring.mul[left[:, u], right[:, v]]]
    return out


def coefficient_sets(ring: FiniteRing, rows: numpy.ndarray) -> tuple[numpy.ndarray, numpy.ndarray]:
    """Return the distinct nonzero coefficient sets as masks and the set of each row."""
    mask = numpy.zeros((len(rows), ring.order), dtype=bool)
    mask[numpy.arange(len(rows))[:, None], rows] = True
    mask[:, ring.zero] = False
    if len(rows) == 0:
        return mask, numpy.zeros(0, dtype=numpy.int64)
    unique, inverse = numpy.unique(mask, axis=0, return_inverse=True)
    return unique, inverse.reshape(-1)


def row_contents(ring: FiniteRing, rows: numpy.ndarray) -> tuple[list[Ideal], numpy.ndarray]:
    """Return the distinct contents of the rows and the content of each row as an index."""
    unique, inverse = coefficient_sets(ring, rows)
    return [ideal_generated(ring, numpy.flatnonzero(mask)) for mask in unique], inverse


def scalar_annihilators(ring: FiniteRing, rows: numpy.ndarray) -> numpy.ndarray:
    """Return the least nonzero r with r*f = 0 for every row f, or -1 when none exists."""
    unique, inverse = coefficient_sets(ring, rows)
    least = numpy.full(len(unique), -1, dtype=numpy.int64)
    for i, mask in enumerate(unique):
        annihilate = ring.zero_products[numpy.flatnonzero(mask)].all(axis=0)
        annihilate[ring.zero] = False
        hits = numpy.flatnonzero(annihilate)
        if len(hits):
            least[i] = hits[0]
    return least[inverse]


def _mixed_radix(indices: numpy.ndarray, order: int, size: int) -> numpy.ndarray:
    radix = order ** numpy.arange(size, dtype=numpy.int64)
    return ((indices[:, None] // radix) % order).astype(numpy.int32)


class PolySpace:
    """Truncation window of R[S]: every polynomial over a finite support, one row each.

    The support is all monomials of total degree at most d for N^k and the whole monoid for a
    finite monoid.  Windows larger than the caps hold a seeded sample stratified by the highest
    nonzero support position, which keeps high-degree polynomials represented.

    Attributes:
        ring: Coefficient ring.
        monoid: Exponent monoid.
        degree: Truncation degree, ignored for finite monoids.
        support: Monomials of the window.
        rows: Coefficient indices, one polynomial per row, zero polynomial excluded.
        total: Number of nonzero polynomials in the full window.
        sampled: True when rows is a sample of the window.
        seed: Seed of the sample.
    """

    def __init__(
        self,
        ring: FiniteRing,
        monoid: Monoid,
        degree: int,
        support: list,
        rows: numpy.ndarray,
        total: int,
        sampled: bool,
        seed: int,
    ) -> None:
        self.ring = ring
        self.monoid = monoid
        self.degree = degree
        self.support = support
        self.rows = rows
        self.total = total
        self.sampled = sampled
        self.seed = seed
        self.product_support, self.sum_index = support_sums(monoid, support, support)
        self._contents = None

    def __len__(self) -> int:
        return len(self.rows)

    def __repr__(self) -> str:
        return f"PolySpace({self.ring}[{self.monoid}], d={self.degree}, rows={len(self)}, sampled={self.sampled})"

    @classmethod
    def window(
        cls,
        ring: FiniteRing,
        monoid: Monoid = None,
        degree: int = 2,
        limits: Limits = None,
        pairwise: bool = False,
    ) -> PolySpace:
        """Return the window of polynomials with support in the truncation.

        Args:
            ring: Coefficient ring.
            monoid: Exponent monoid, defaults to N so the window is R[X] up to degree d.
            degree: Truncation degree.
            limits: Caps and seed.
            pairwise: The caller scans pairs, so N^2 must also fit the pair cap.
        """
        monoid = Monoid.free(1) if monoid is None else monoid
        limits = Limits() if limits is None else limits
        support = truncated_support(monoid, degree)
        size = len(support)
        total = ring.order**size - 1

        fits = total <= limits.poly_cap and (not pairwise or total * total <= limits.pair_cap)
        if fits:
            rows = _mixed_radix(numpy.arange(total + 1, dtype=numpy.int64), ring.order, size)
            rows = rows[(rows != ring.zero).any(axis=1)]
            return cls(ring, monoid, degree, support, rows, total, False, limits.seed)

        target = limits.poly_cap if not pairwise else min(limits.poly_cap, math.isqrt(limits.pair_cap))
        rows = cls._stratified_sample(ring, size, target, limits.seed)
        log.verbose(f"Sampled {len(rows)} of {total:,} polynomials over {ring}[{monoid}] d={degree}")
        return cls(ring, monoid, degree, support, rows, total, True, limits.seed)

    @staticmethod
    def _stratified_sample(ring: FiniteRing, size: int, target: int, seed: int) -> numpy.ndarray:
        rng = numpy.random.default_rng(seed)
        nonzero = numpy.array(ring.nonzero, dtype=numpy.int32)
        quota = max(1, target // size)
        strata = []
        for top in range(size):
            lower = ring.order**top
            stratum_size = len(nonzero) * lower
            rows = numpy.full((min(quota, stratum_size), size), ring.zero, dtype=numpy.int32)
            if stratum_size <= quota:
                indices = numpy.arange(stratum_size, dtype=numpy.int64)
                rows[:, :top] = _mixed_radix(indices % lower, ring.order, top)
                rows[:, top] = nonzero[indices // lower]
            else:
                rows[:, :top] = rng.integers(0, ring.order, size=(quota, top))
                rows[:, top] = rng.choice(nonzero, size=quota)
            strata.append(rows)
        rows = numpy.unique(numpy.concatenate(strata), axis=0)
        return rows[numpy.lexsort(rows.T)]

    @property
    def stats(self) -> dict:
        return {"polynomials": len(self), "window": self.total, "sampled": self.sampled, "seed": self.seed}

    def element(self, i: int) -> MRElem:
        return self.as_element(self.rows[i])

    def as_element(self, row: numpy.ndarray, support: list = None) -> MRElem:
        support = self.support if support is None else support
        return MRElem(self.ring, self.monoid, {s: int(c) for s, c in zip(support, row)})

    def row_of(self, f: MRElem) -> numpy.ndarray:
        """Return the coefficient row of f.

        Raises:
            InvalidParameterError: f has a term outside the window support.
        """
        position = {s: i for i, s in enumerate(self.support)}
        row = numpy.full(len(self.support), self.ring.zero, dtype=numpy.int32)
        for s, c in f.terms:
            if s not in position:
                raise InvalidParameterError(f"{f} is outside the truncation window")
            row[position[s]] = c
        return row

    def multiply_by(self, row: numpy.ndarray, rows: numpy.ndarray = None) -> numpy.ndarray:
        """Return the exact products of one window row with rows, over the product support."""
        rows = self.rows if rows is None else rows
        return convolve(self.ring, self.sum_index, len(self.product_support), rows, row)

    def is_zero_rows(self, rows: numpy.ndarray) -> numpy.ndarray:
        return (rows == self.ring.zero).all(axis=1)

    def contents(self) -> tuple[list[Ideal], numpy.ndarray]:
        if self._contents is None:
            self._contents = row_contents(self.ring, self.rows)
        return self._contents

    def in_ideal_mask(self, ideal: Ideal, rows: numpy.ndarray = None) -> numpy.ndarray:
        """Return which rows lie in IB, that is c(f) inside I."""
        rows = self.rows if rows is None else rows
        return ideal.mask[rows].all(axis=1)

    def scalar_annihilators(self, rows: numpy.ndarray = None) -> numpy.ndarray:
        return scalar_annihilators(self.ring, self.rows if rows is None else rows)

    def zero_divisor_mask(self, rows: numpy.ndarray = None) -> numpy.ndarray:
        """Return which rows have a nonzero scalar annihilator, McCoy's criterion in R[X]."""
        return self.scalar_annihilators(rows) >= 0


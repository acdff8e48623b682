# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Ideal arithmetic and the prime ideal lattice of a finite ring.

Ideals are bitsets over the element indices of their ring, so membership, containment and
equality are integer operations.  Every ideal of a finite ring is finitely generated, so the
quantifiers "each finitely generated ideal" in Property (A) become exhaustive loops over
enumerate_ideals().

Enumerations are ordered by (cardinality, bitset value) so reports and witnesses are
reproducible.
"""

from __future__ import annotations

import dataclasses
import functools

import numpy

from contalg.ring import FiniteRing, zero_divisor_mask
from contalg.settings import IDEAL_ENUM_CAP
from contalg.support.conversions import as_bitset, as_mask, from_indices, iter_bits
from contalg.support.exit import ConsistencyError, InvalidParameterError, ResourceLimitError
from contalg.support.log import log

CACHE_SIZE = 65536


class Ideal:
    """Ideal of a finite ring stored as a bitset of element indices."""

    __slots__ = ("ring", "members", "_mask")

    def __init__(self, ring: FiniteRing, members: int) -> None:
        self.ring = ring
        self.members = members
        self._mask = None

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Ideal):
            return NotImplemented
        return self.ring is other.ring and self.members == other.members

    def __hash__(self) -> int:
        return hash((id(self.ring), self.members))

    def __contains__(self, a: int) -> bool:
        return bool(self.members >> int(a) & 1)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __le__(self, other: Ideal) -> bool:
        return self.members & ~other.members == 0

    def __lt__(self, other: Ideal) -> bool:
        return self <= other and self.members != other.members

    def __repr__(self) -> str:
        return f"Ideal{self}"

    def __str__(self) -> str:
        names = [self.ring.names[g] for g in self.generators()]
        return "(" + ",".join(names if names else [self.ring.names[self.ring.zero]]) + ")"

    @property
    def mask(self) -> numpy.ndarray:
        if self._mask is None:
            self._mask = as_mask(self.members, self.ring.order)
            self._mask.setflags(write=False)
        return self._mask

    @property
    def indices(self) -> numpy.ndarray:
        return numpy.flatnonzero(self.mask)

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.ring.zero

    @property
    def is_whole(self) -> bool:
        return self.members == (1 << self.ring.order) - 1

    def elements(self) -> list[str]:
        return [self.ring.names[i] for i in iter_bits(self.members)]

    def generators(self) -> list[int]:
        """Greedy generating set: scan elements in index order, keep those not yet generated."""
        gens = []
        current = zero_ideal(self.ring)
        for a in iter_bits(self.members):
            if a not in current:
                gens.append(a)
                current = ideal_generated(self.ring, gens)
                if current == self:
                    break
        return gens


def _same_ring(*ideals: Ideal) -> FiniteRing:
    ring = ideals[0].ring
    if any(ideal.ring is not ring for ideal in ideals[1:]):
        raise InvalidParameterError("Ideal operands belong to different rings")
    return ring


# --------------------------------------------------------------------------------------
# Generation and arithmetic
# --------------------------------------------------------------------------------------


@functools.lru_cache(maxsize=CACHE_SIZE)
def _generated(ring: FiniteRing, gens: int) -> int:
    members = numpy.union1d(ring.mul[:, list(iter_bits(gens))].ravel(), [ring.zero])
    while True:
        sums = numpy.unique(ring.add[numpy.ix_(members, members)])
        if len(sums) == len(members):
            return from_indices(members)
        members = sums


def ideal_generated(ring: FiniteRing, gens: object) -> Ideal:
    """Return the least ideal containing gens.

    The ideal is the additive closure of all multiples r*g, computed as a fixpoint.

    Args:
        ring: Ambient ring.
        gens: Iterable of element indices.

    Raises:
        InvalidParameterError: A generator is not an element of the ring.
    """
    bits = 0
    for g in gens:
        if not 0 <= int(g) < ring.order:
            raise InvalidParameterError(f"{g} is not an element index of {ring}")
        bits |= 1 << int(g)
    return Ideal(ring, _generated(ring, bits))


def zero_ideal(ring: FiniteRing) -> Ideal:
    return Ideal(ring, 1 << ring.zero)


def whole_ring(ring: FiniteRing) -> Ideal:
    return Ideal(ring, (1 << ring.order) - 1)


def principal(ring: FiniteRing, a: int) -> Ideal:
    return ideal_generated(ring, [a])


def is_ideal_set(ring: FiniteRing, mask: numpy.ndarray) -> bool:
    """Return True if the boolean mask is an ideal: contains zero, closed under + and R*."""
    if not mask[ring.zero]:
        return False
    members = numpy.flatnonzero(mask)
    return bool(mask[ring.add[numpy.ix_(members, members)]].all() and mask[ring.mul[:, members]].all())


@functools.lru_cache(maxsize=CACHE_SIZE)
def _sum(ring: FiniteRing, a: int, b: int) -> int:
    first = list(iter_bits(a))
    second = list(iter_bits(b))
    return from_indices(numpy.unique(ring.add[numpy.ix_(first, second)]))


def ideal_sum(first: Ideal, second: Ideal) -> Ideal:
    ring = _same_ring(first, second)
    return Ideal(ring, _sum(ring, first.members, second.members))


@functools.lru_cache(maxsize=CACHE_SIZE)
def _product(ring: FiniteRing, a: int, b: int) -> int:
    products = numpy.unique(ring.mul[numpy.ix_(list(iter_bits(a)), list(iter_bits(b)))])
    return _generated(ring, from_indices(products))


def ideal_product(first: Ideal, second: Ideal) -> Ideal:
    ring = _same_ring(first, second)
    return Ideal(ring, _product(ring, first.members, second.members))


def ideal_power(ideal: Ideal, k: int) -> Ideal:
    """Return I^k with I^0 the whole ring."""
    result = whole_ring(ideal.ring)
    for _ in range(k):
        result = ideal_product(result, ideal)
    return result


def ideal_intersection(first: Ideal, second: Ideal) -> Ideal:
    ring = _same_ring(first, second)
    return Ideal(ring, first.members & second.members)


def ideal_colon(first: Ideal, second: Ideal) -> Ideal:
    """Return I : J = {r : rJ contained in I}."""
    ring = _same_ring(first, second)
    inside = first.mask[ring.mul[:, second.indices]].all(axis=1)
    return Ideal(ring, as_bitset(inside))


def colon_element(ideal: Ideal, r: int) -> Ideal:
    """Return I : (r) = {c : cr in I}."""
    ring = ideal.ring
    return Ideal(ring, as_bitset(ideal.mask[ring.mul[:, r]]))


def annihilator(ideal: Ideal) -> Ideal:
    return ideal_colon(zero_ideal(ideal.ring), ideal)


@functools.lru_cache(maxsize=CACHE_SIZE)
def _radical(ring: FiniteRing, bits: int) -> int:
    mask = as_mask(bits, ring.order)
    everything = numpy.arange(ring.order)
    power = everything.copy()
    hit = mask[power]
    for _ in range(ring.order - 1):
        power = ring.mul[power, everything]
        hit |= mask[power]
    return as_bitset(hit)


def radical(ideal: Ideal) -> Ideal:
    """Return {r : r^t in I for some 1 <= t <= |R|}."""
    return Ideal(ideal.ring, _radical(ideal.ring, ideal.members))


_ARITHMETIC = {
    "sum": ideal_sum,
    "product": ideal_product,
    "power": ideal_power,
    "intersection": ideal_intersection,
    "colon": ideal_colon,
    "colon_elem": colon_element,
    "annihilator": annihilator,
    "radical": radical,
}


def ideal_arith(op: str, ideal: Ideal, *args: object) -> Ideal:
    """Apply the named ideal operation.

    Args:
        op: One of sum, product, power, intersection, colon, colon_elem, annihilator, radical.
        ideal: First operand.
        args: Second ideal, exponent k or element r as the operation needs.

    Raises:
        InvalidParameterError: Unknown operation or operands from different rings.
    """
    if op not in _ARITHMETIC:
        raise InvalidParameterError(f"Unknown ideal operation '{op}'")
    return _ARITHMETIC[op](ideal, *args)


def nilradical(ring: FiniteRing) -> Ideal:
    return radical(zero_ideal(ring))


def is_reduced(ring: FiniteRing) -> bool:
    return nilradical(ring).is_zero


# --------------------------------------------------------------------------------------
# Lattice
# --------------------------------------------------------------------------------------


@functools.lru_cache(maxsize=256)
def _all_ideals(ring: FiniteRing) -> tuple[int, ...]:
    known = {_generated(ring, 1 << a) for a in range(ring.order)}
    frontier = list(known)
    while frontier:
        snapshot = list(known)
        found = []
        for a in frontier:
            for b in snapshot:
                s = _sum(ring, a, b)
                if s not in known:
                    known.add(s)
                    found.append(s)
        frontier = found
    log.debug(f"Enumerated {len(known)} ideals of {ring}")
    return tuple(sorted(known, key=lambda bits: (bits.bit_count(), bits)))


def enumerate_ideals(ring: FiniteRing, cap: int = IDEAL_ENUM_CAP) -> list[Ideal]:
    """Return every ideal, closing the principal ideals under pairwise sums.

    Raises:
        ResourceLimitError: The ring order exceeds the enumeration cap.
    """
    if ring.order > cap:
        raise ResourceLimitError("ideal enumeration ring order", ring.order, cap)
    return [Ideal(ring, bits) for bits in _all_ideals(ring)]


def is_prime(ideal: Ideal) -> bool:
    """Return True if I is proper and a*b not in I for all a, b outside I."""
    if ideal.is_whole:
        return False
    outside = numpy.flatnonzero(~ideal.mask)
    return not ideal.mask[ideal.ring.mul[numpy.ix_(outside, outside)]].any()


def is_maximal(ideal: Ideal) -> bool:
    """Return True if I is proper and I + (a) = R for every a outside I."""
    if ideal.is_whole:
        return False
    ring = ideal.ring
    outside = numpy.flatnonzero(~ideal.mask)
    one_minus_ra = ring.add[ring.one][ring.neg[ring.mul[:, outside]]]
    return bool(ideal.mask[one_minus_ra].any(axis=0).all())


def prime_ideals(ring: FiniteRing, cap: int = IDEAL_ENUM_CAP) -> list[Ideal]:
    return [ideal for ideal in enumerate_ideals(ring, cap) if is_prime(ideal)]


def _minimal(ideals: list[Ideal]) -> list[Ideal]:
    return [p for p in ideals if not any(q < p for q in ideals)]


def _maximal(ideals: list[Ideal]) -> list[Ideal]:
    return [p for p in ideals if not any(p < q for q in ideals)]


def minimal_primes(ring: FiniteRing, cap: int = IDEAL_ENUM_CAP) -> list[Ideal]:
    """Return Min(R), the inclusion minimal prime ideals.

    Raises:
        ResourceLimitError: The ring order exceeds the enumeration cap.
    """
    return _minimal(prime_ideals(ring, cap))


def associated_primes(ring: FiniteRing) -> list[Ideal]:
    """Return Ass(R) = {Ann(x) : x != 0 and Ann(x) prime}, without enumerating the lattice."""
    annihilators = {as_bitset(ring.zero_products[:, x]) for x in ring.nonzero}
    primes = [Ideal(ring, bits) for bits in annihilators if is_prime(Ideal(ring, bits))]
    return sorted(primes, key=lambda p: (len(p), p.members))


def has_property_A(ring: FiniteRing, cap: int = IDEAL_ENUM_CAP) -> bool:  # noqa: N802
    """Return True if every ideal inside Z(R) has a nonzero annihilator.

    Raises:
        ResourceLimitError: The ring order exceeds the enumeration cap.
    """
    zd = as_bitset(zero_divisor_mask(ring))
    for ideal in enumerate_ideals(ring, cap):
        if ideal.members & ~zd == 0 and annihilator(ideal).is_zero:
            log.debug(f"Property (A) fails at {ideal}")
            return False
    return True


@dataclasses.dataclass(frozen=True)
class ZdDegree:
    """Degree of few zero-divisors: Z(R) as a union of n incomparable primes.

    Attributes:
        n: Number of maximal primes inside Z(R), None when they do not cover Z(R).
        maximal_primes: The inclusion maximal primes contained in Z(R).
    """

    n: int | None
    maximal_primes: tuple[Ideal, ...]

    @property
    def few(self) -> bool:
        return self.n is not None


def zd_degree(ring: FiniteRing, cap: int = IDEAL_ENUM_CAP) -> ZdDegree:
    """Return zd(R) and the maximal primes inside Z(R).

    Raises:
        ResourceLimitError: The ring order exceeds the enumeration cap.
    """
    zd = as_bitset(zero_divisor_mask(ring))
    inside = [p for p in prime_ideals(ring, cap) if p.members & ~zd == 0]
    maximal = _maximal(inside)
    union = 0
    for p in maximal:
        union |= p.members
    if union != zd:
        log.debug(f"Z({ring}) is not covered by its primes")
        return ZdDegree(None, tuple(maximal))
    return ZdDegree(len(maximal), tuple(maximal))


def very_few_zd(ring: FiniteRing) -> bool:
    """Return True if Z(R) is the union of the associated primes."""
    union = 0
    for p in associated_primes(ring):
        union |= p.members
    return union == as_bitset(zero_divisor_mask(ring))


def s_of_ideal(ideal: Ideal) -> frozenset[int]:
    """Return S(I) = {r : I : (r) != I}, the elements not prime to I."""
    ring = ideal.ring
    colons = ideal.mask[ring.mul]
    differs = (colons != ideal.mask[:, None]).any(axis=0)
    return frozenset(int(i) for i in numpy.flatnonzero(differs))


def is_primal_ideal(ideal: Ideal) -> bool:
    """Return True if S(I) is an ideal.

    Raises:
        ConsistencyError: S(I) is an ideal that is not prime.
    """
    ring = ideal.ring
    mask = numpy.zeros(ring.order, dtype=bool)
    mask[list(s_of_ideal(ideal))] = True
    if not is_ideal_set(ring, mask):
        return False
    if not is_prime(Ideal(ring, as_bitset(mask))):
        raise ConsistencyError(f"S({ideal}) is an ideal of {ring} but not prime")
    return True


def is_primal(ring: FiniteRing) -> bool:
    """Return True if Z(R) = S((0)) is an ideal."""
    return is_primal_ideal(zero_ideal(ring))


def primal_failure_witness(ring: FiniteRing) -> tuple[int, int] | None:
    """Return the least zero-divisors (a, b) with a + b not a zero-divisor, or None."""
    mask = zero_divisor_mask(ring)
    members = numpy.flatnonzero(mask)
    outside = ~mask[ring.add[numpy.ix_(members, members)]]
    hits = numpy.argwhere(outside)
    if len(hits) == 0:
        return None
    i, j = hits[0]
    return int(members[i]), int(members[j])


def zero_divisor_power_index(ring: FiniteRing) -> int | None:
    """Return the least n with every product of n zero-divisors equal to 0, or None."""
    mask = zero_divisor_mask(ring)
    divisors = numpy.flatnonzero(mask)
    products = divisors
    seen = set()
    for n in range(1, ring.order + 1):
        if numpy.all(products == ring.zero):
            return n
        key = products.tobytes()
        if key in seen:
            return None
        seen.add(key)
        products = numpy.unique(ring.mul[numpy.ix_(products, divisors)])
    return None


def prime_cover_locate(ideal: Ideal, primes: list[Ideal]) -> int | None:
    """Return the least index i with I contained in primes[i], or None."""
    for i, p in enumerate(primes):
        if ideal <= p:
            return i
    return None

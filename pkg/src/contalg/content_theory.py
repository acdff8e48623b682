# --------------------------------------------------------------------------------------
# Copyright(c) 2022 Joseph Jones,  MIT License @  https://opensource.org/licenses/MIT
# --------------------------------------------------------------------------------------
"""Content algebra checks over truncation windows of R[X] and R[S].

Every check replaces a quantifier over the infinite algebra B = R[S] by a quantifier over the
polynomials of a PolySpace window.  Products are computed exactly over the product support, so
a Verified outcome is a true statement about a finite fragment of B and a Refuted outcome always
carries polynomial literals that replay the violation.

Zero-divisors of R[X] are found with the scalar annihilator criterion.  The direct oracle, a
search for h with fh = 0, is only used by mccoy_equiv_check where the criterion itself is tested.
"""
from __future__ import annotations

import dataclasses
import itertools

import numpy

from contalg.check import CheckOutcome, merge_outcomes
from contalg.ideals import (
    Ideal,
    annihilator,
    associated_primes,
    enumerate_ideals,
    has_property_A,
    ideal_generated,
    ideal_product,
    ideal_sum,
    is_primal,
    minimal_primes,
    nilradical,
    primal_failure_witness,
    prime_cover_locate,
    principal,
    radical,
    whole_ring,
    zd_degree,
    zero_divisor_power_index,
)
from contalg.monoid_ring import (
    Monoid,
    MRElem,
    PolySpace,
    constant,
    content,
    content_by_intersection,
    convolve,
    coefficient_sets,
    counterexample_noncancellative,
    counterexample_torsion,
    is_cancellative,
    is_torsion_free,
    multiply_pairs,
    row_contents,
    scalar_annihilators,
    support_sums,
)
from contalg.ring import FiniteRing, units_and_regulars, zero_divisor_mask
from contalg.settings import DEFAULT_DEGREE, DEFAULT_DM_SAMPLES, Limits
from contalg.support.conversions import as_bitset
from contalg.support.exit import ConsistencyError, InvalidParameterError
from contalg.support.log import log


def _parameters(space: PolySpace, **extra: object) -> dict:
    return {"degree": space.degree, "monoid": str(space.monoid), **extra}


def _literals(space: PolySpace, **rows: int) -> dict:
    return {key: str(space.element(i)) for key, i in rows.items()}


def _subset(first: numpy.ndarray, second: numpy.ndarray) -> bool:
    return bool((~first | second).all())


# --------------------------------------------------------------------------------------
# Dedekind-Mertens
# --------------------------------------------------------------------------------------


@dataclasses.dataclass(frozen=True)
class DMResult:
    """Least n with c(f)^n c(g) = c(f)^(n-1) c(fg), or None when not found up to n_max.

    Attributes:
        exponent: The exponent, None when no n <= n_max works.
        n_max: Largest n tried.
        failures: (n, element) pairs, the element is in exactly one side of the equality at n.
    """

    exponent: int | None
    n_max: int
    failures: tuple = ()

    @property
    def found(self) -> bool:
        return self.exponent is not None

    def as_dict(self) -> dict:
        return {
            "exponent": self.exponent,
            "notFoundUpTo": None if self.found else self.n_max,
            "failures": [{"n": n, "witness": w} for n, w in self.failures],
        }


def dm_exponent(f: MRElem, g: MRElem, n_max: int = None) -> DMResult:
    """Return the least Dedekind-Mertens exponent of (f, g).

    Args:
        f: First polynomial.
        g: Second polynomial, same monoid ring as f.
        n_max: Largest exponent tried, defaults to the number of terms of g plus one.

    Raises:
        InvalidParameterError: n_max < 1 or f, g from different monoid rings.
    """
    n_max = g.term_count + 1 if n_max is None else n_max
    if n_max < 1:
        raise InvalidParameterError(f"nmax must be at least 1, got {n_max}")

    ring = f.ring
    cf, cg, cfg = content(f), content(g), content(f * g)
    power = whole_ring(ring)
    failures = []
    for n in range(1, n_max + 1):
        lhs = ideal_product(ideal_product(power, cf), cg)
        rhs = ideal_product(power, cfg)
        if lhs == rhs:
            return DMResult(n, n_max, tuple(failures))
        difference = lhs.members ^ rhs.members
        failures.append((n, ring.names[(difference & -difference).bit_length() - 1]))
        power = ideal_product(power, cf)

    log.debug(f"No Dedekind-Mertens exponent up to {n_max} for ({f}, {g})")
    return DMResult(None, n_max, tuple(failures))


def dm_sweep(
    ring: FiniteRing,
    degree: int = DEFAULT_DEGREE,
    count: int = DEFAULT_DM_SAMPLES,
    seed: int = None,
    n_max: int = None,
) -> CheckOutcome:
    """Check the Dedekind-Mertens exponent exists for seeded pseudo-random pairs in R[X]."""
    seed = Limits().seed if seed is None else seed
    name = "Dedekind-Mertens exponent"
    parameters = {"degree": degree, "count": count, "seed": seed, "nmax": n_max}
    rng = numpy.random.default_rng(seed)
    monoid = Monoid.free(1)

    histogram = {}
    coefficients = rng.integers(0, ring.order, size=(count, 2, degree + 1))
    for first, second in coefficients:
        f = MRElem(ring, monoid, {(i,): int(c) for i, c in enumerate(first)})
        g = MRElem(ring, monoid, {(i,): int(c) for i, c in enumerate(second)})
        result = dm_exponent(f, g, n_max)
        if not result.found:
            stats = {"pairs": sum(histogram.values()) + 1}
            reason = f"no exponent up to {result.n_max}"
            return CheckOutcome.refuted(name, {"f": str(f), "g": str(g)}, reason, stats, parameters)
        histogram[result.exponent] = histogram.get(result.exponent, 0) + 1

    stats = {"pairs": count, "exponents": {str(n): histogram[n] for n in sorted(histogram)}}
    return CheckOutcome.verified(name, stats, parameters)


# --------------------------------------------------------------------------------------
# Monoid ring equivalences
# --------------------------------------------------------------------------------------


def defect_witness(monoid: Monoid, ring: FiniteRing) -> tuple[MRElem, MRElem] | None:
    """Return the proof construction (f, g) with fg = 0 and c(f) = c(g) = R, or None.

    A non-cancellative monoid gives f = X^s, g = X^t - X^u.  A torsion monoid gives
    f = X^s - X^t and g the telescoping sum.
    """
    if ring.order == 1:
        return None
    cancellative, witness = is_cancellative(monoid)
    if not cancellative:
        return counterexample_noncancellative(monoid, ring, *witness)
    torsion_free, witness = is_torsion_free(monoid)
    if not torsion_free:
        _, s, t = witness
        try:
            f, g, _ = counterexample_torsion(monoid, ring, s, t)
        except InvalidParameterError:
            return None
        return f, g
    return None


def _content_violation(space: PolySpace, violates: object, left: numpy.ndarray, right: numpy.ndarray):
    """Return the first (i, j) with violates(c(f_i), c(f_j), c(f_i f_j)) and the pairs examined."""
    ideals, inverse = space.contents()
    cases = 0
    for i in left:
        products = space.multiply_by(space.rows[i], space.rows[right])
        product_ideals, product_inverse = row_contents(space.ring, products)
        width = len(product_ideals)
        keys = inverse[right] * width + product_inverse
        cf = ideals[inverse[i]]
        bad = [k for k in numpy.unique(keys) if violates(cf, ideals[k // width], product_ideals[k % width])]
        cases += len(right)
        if bad:
            return (int(i), int(right[numpy.flatnonzero(numpy.isin(keys, bad))[0]])), cases
    return None, cases


def _theorem3_outcome(name: str, space: PolySpace, found: tuple, cases: int, replays: object) -> CheckOutcome:
    stats = {**space.stats, "pairs": cases}
    parameters = _parameters(space)
    construction = defect_witness(space.monoid, space.ring)
    if found is not None:
        stats["scanWitness"] = _literals(space, f=found[0], g=found[1])
    if construction is not None and replays(*construction):
        f, g = construction
        return CheckOutcome.refuted(name, {"f": str(f), "g": str(g)}, "monoid construction", stats, parameters)
    if found is not None:
        return CheckOutcome.refuted(name, stats["scanWitness"], "exhaustive scan", stats, parameters)
    return CheckOutcome.verified(name, stats, parameters)


def _weak_fails(cf: Ideal, cg: Ideal, cfg: Ideal) -> bool:
    return not ideal_product(cf, cg) <= radical(cfg)


def _unit_fails(cf: Ideal, cg: Ideal, cfg: Ideal) -> bool:
    return cf.is_whole and cg.is_whole and not cfg.is_whole


def weak_content_check(
    ring: FiniteRing, monoid: Monoid = None, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check c(f)c(g) inside rad(c(fg)) for all pairs of the window."""
    space = PolySpace.window(ring, monoid, degree, limits, pairwise=True)
    everything = numpy.arange(len(space))
    found, cases = _content_violation(space, _weak_fails, everything, everything)
    return _theorem3_outcome(
        "weak content formula",
        space,
        found,
        cases,
        lambda f, g: _weak_fails(content(f), content(g), content(f * g)),
    )


def unit_content_check(
    ring: FiniteRing, monoid: Monoid = None, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check c(f) = c(g) = R implies c(fg) = R for all pairs of the window."""
    space = PolySpace.window(ring, monoid, degree, limits, pairwise=True)
    ideals, inverse = space.contents()
    whole = numpy.array([ideal.is_whole for ideal in ideals], dtype=bool)[inverse] if len(space) else []
    unit_rows = numpy.flatnonzero(whole)
    found, cases = _content_violation(space, _unit_fails, unit_rows, unit_rows)
    return _theorem3_outcome(
        "unit content",
        space,
        found,
        cases,
        lambda f, g: _unit_fails(content(f), content(g), content(f * g)),
    )


def mccoy_witness(f: MRElem) -> int | None:
    """Return the least nonzero r with rf = 0, or None."""
    rows = numpy.array([f.coefficients()], dtype=numpy.int64).reshape(1, -1)
    least = int(scalar_annihilators(f.ring, rows)[0])
    return None if least < 0 else least


def zero_divisor_oracle(f: MRElem, space: PolySpace) -> MRElem | None:
    """Return the first nonzero h of the window with fh = 0, or None."""
    products = space.multiply_by(space.row_of(f))
    hits = numpy.flatnonzero(space.is_zero_rows(products))
    return None if len(hits) == 0 else space.element(hits[0])


def mccoy_equiv_check(
    ring: FiniteRing, monoid: Monoid = None, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check f is a zero-divisor of the window iff a nonzero scalar annihilates f."""
    name = "McCoy equivalence"
    space = PolySpace.window(ring, monoid, degree, limits, pairwise=True)
    scalars = space.scalar_annihilators()
    found = None
    for i, row in enumerate(space.rows):
        hits = numpy.flatnonzero(space.is_zero_rows(space.multiply_by(row)))
        if (len(hits) > 0) != (scalars[i] >= 0):
            found = _literals(space, f=i, h=hits[0]) if len(hits) else {"f": str(space.element(i))}
            if not len(hits):
                found["r"] = ring.names[scalars[i]]
            break

    stats = {**space.stats, "pairs": len(space) ** 2}
    parameters = _parameters(space)
    construction = defect_witness(space.monoid, ring)
    if found is not None:
        stats["scanWitness"] = found
    if construction is not None:
        f, g = construction
        if (f * g).is_zero and mccoy_witness(g) is None:
            witness = {"f": str(g), "h": str(f)}
            return CheckOutcome.refuted(
                name, witness, "zero-divisor without scalar annihilator", stats, parameters
            )
    if found is not None:
        return CheckOutcome.refuted(name, found, "oracle and scalar criterion disagree", stats, parameters)
    return CheckOutcome.verified(name, stats, parameters)


def default_monoids() -> list[Monoid]:
    return [Monoid.free(1), Monoid.free(2), Monoid.cyclic(2), Monoid.cyclic(3), Monoid.absorbing()]


def theorem3_matrix(
    ring: FiniteRing, monoids: list[Monoid] = None, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check unit content, weak content and McCoy all hold iff the monoid is cancellative and torsion free."""
    name = "monoid equivalence matrix"
    monoids = default_monoids() if monoids is None else monoids
    stats = {}
    inconsistent = None
    inconclusive = None
    for monoid in monoids:
        expected = is_cancellative(monoid)[0] and is_torsion_free(monoid)[0]
        outcomes = [
            unit_content_check(ring, monoid, degree, limits),
            weak_content_check(ring, monoid, degree, limits),
            mccoy_equiv_check(ring, monoid, degree, limits),
        ]
        stats[str(monoid)] = {"expected": expected, **{o.name: o.verdict.value for o in outcomes}}
        if any(o.is_inconclusive for o in outcomes):
            inconclusive = inconclusive or str(monoid)
        elif not all(o.is_verified == expected and o.is_refuted != expected for o in outcomes):
            inconsistent = inconsistent or (monoid, outcomes)
        log.verbose(f"{ring}[{monoid}]: {stats[str(monoid)]}")

    parameters = {"degree": degree, "monoids": [str(m) for m in monoids]}
    if ring.order == 1:
        return CheckOutcome.inconclusive(name, "the zero ring has no proper constructions", stats, parameters)
    if inconsistent is not None:
        monoid, outcomes = inconsistent
        witness = {"monoid": str(monoid)}
        for outcome in outcomes:
            witness.update({f"{outcome.name}: {k}": v for k, v in outcome.witness.items()})
        return CheckOutcome.refuted(
            name, witness, "verdicts disagree with the monoid properties", stats, parameters
        )
    if inconclusive is not None:
        return CheckOutcome.inconclusive(name, f"inconclusive over {inconclusive}", stats, parameters)
    return CheckOutcome.verified(name, stats, parameters)


# --------------------------------------------------------------------------------------
# Content laws
# --------------------------------------------------------------------------------------


def content_law_check(
    ring: FiniteRing, monoid: Monoid = None, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check c(f+g) in c(f)+c(g), c(fg) in c(f)c(g) and c(rf) = (r)c(f) over the window."""
    name = "content laws"
    space = PolySpace.window(ring, monoid, degree, limits, pairwise=True)
    ideals, inverse = space.contents()
    parameters = _parameters(space)

    for i, row in enumerate(space.rows):
        cf = ideals[inverse[i]]
        for r in range(ring.order):
            scaled = ideal_generated(ring, numpy.unique(ring.mul[r][row]))
            if scaled != ideal_product(principal(ring, r), cf):
                witness = {"f": str(space.element(i)), "r": ring.names[r]}
                return CheckOutcome.refuted(name, witness, "c(rf) differs from (r)c(f)", space.stats, parameters)

        sums = ring.add[row[None, :], space.rows]
        products = space.multiply_by(row)
        for label, rows, bound in (("sum", sums, ideal_sum), ("product", products, ideal_product)):
            result_ideals, result_inverse = row_contents(ring, rows)
            width = len(result_ideals)
            keys = inverse * width + result_inverse
            for key in numpy.unique(keys):
                if not result_ideals[key % width] <= bound(cf, ideals[key // width]):
                    j = int(numpy.flatnonzero(keys == key)[0])
                    witness = _literals(space, f=i, g=j)
                    reason = f"content of the {label} is not inside the {label} of contents"
                    return CheckOutcome.refuted(name, witness, reason, space.stats, parameters)

    return CheckOutcome.verified(name, {**space.stats, "pairs": len(space) ** 2}, parameters)


def content_intersection_check(
    ring: FiniteRing, monoid: Monoid = None, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check the coefficient ideal equals the intersection of all I with f in IB."""
    name = "content as intersection"
    limits = Limits() if limits is None else limits
    space = PolySpace.window(ring, monoid, degree, limits)
    ideals = enumerate_ideals(ring, limits.ideal_cap)
    unique, inverse = coefficient_sets(ring, space.rows)
    for k, mask in enumerate(unique):
        i = int(numpy.flatnonzero(inverse == k)[0])
        f = space.element(i)
        if content(f) != content_by_intersection(f, ideals):
            witness = {"f": str(f)}
            return CheckOutcome.refuted(name, witness, "contents differ", space.stats, _parameters(space))
    return CheckOutcome.verified(name, {**space.stats, "coefficientSets": len(unique)}, _parameters(space))


def in_extended_ideal(f: MRElem, ideal: Ideal) -> bool:
    """Return True if f lies in IB, that is c(f) is inside I."""
    return content(f) <= ideal


# --------------------------------------------------------------------------------------
# Prime extensions
# --------------------------------------------------------------------------------------


def prime_extension_check(
    ideal: Ideal, ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check f, g outside IB implies fg outside IB for all pairs of the window."""
    name = f"{ideal} extends to a prime"
    space = PolySpace.window(ring, None, degree, limits, pairwise=True)
    outside = numpy.flatnonzero(~space.in_ideal_mask(ideal))
    parameters = _parameters(space, ideal=str(ideal))
    for i in outside:
        inside = space.in_ideal_mask(ideal, space.multiply_by(space.rows[i], space.rows[outside]))
        if inside.any():
            witness = _literals(space, f=i, g=outside[numpy.argmax(inside)])
            return CheckOutcome.refuted(name, witness, f"fg lies in {ideal}B", space.stats, parameters)
    return CheckOutcome.verified(name, {**space.stats, "pairs": len(outside) ** 2}, parameters)


def contraction_check(
    ideal: Ideal, ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check a constant r lies in IB exactly when r lies in I."""
    name = f"{ideal}B contracts to {ideal}"
    monoid = Monoid.free(1)
    for r in range(ring.order):
        if in_extended_ideal(constant(ring, monoid, r), ideal) != (r in ideal):
            witness = {"r": ring.names[r]}
            return CheckOutcome.refuted(name, witness, "constant membership differs", {}, {"ideal": str(ideal)})
    return CheckOutcome.verified(name, {"constants": ring.order}, {"degree": degree, "ideal": str(ideal)})


def min_prime_bijection_check(
    ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check p -> pB on Min(R): primality, contraction, injectivity and restricted minimality.

    Surjectivity onto Min(B) quantifies over the primes of the infinite algebra and is not checked.
    """
    name = "minimal prime bijection"
    limits = Limits() if limits is None else limits
    primes = minimal_primes(ring, limits.ideal_cap)
    outcomes = []
    for p in primes:
        outcomes.append(prime_extension_check(p, ring, degree, limits))
        outcomes.append(contraction_check(p, ring, degree, limits))

    space = PolySpace.window(ring, None, degree, limits)
    masks = [space.in_ideal_mask(p) for p in primes]
    parameters = _parameters(space)
    for a, b in itertools.permutations(range(len(primes)), 2):
        if not (masks[a] != masks[b]).any():
            witness = {"p": str(primes[a]), "q": str(primes[b])}
            return CheckOutcome.refuted(name, witness, "distinct primes extend to the same set", {}, parameters)
        if _subset(masks[a], masks[b]):
            witness = {"p": str(primes[a]), "q": str(primes[b])}
            return CheckOutcome.refuted(
                name, witness, "extension of a minimal prime is not minimal", {}, parameters
            )

    merged = merge_outcomes(name, outcomes, parameters)
    merged.stats["minimalPrimes"] = [str(p) for p in primes]
    merged.stats["surjectivity"] = "not checked, Min(B) cannot be enumerated"
    merged.stats.update(space.stats)
    return merged


def ass_extension_check(ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None) -> CheckOutcome:
    """Check {f : xf = 0} = Ann(x)B and that Ann(x)B is prime for every Ann(x) in Ass(R)."""
    name = "associated prime extension"
    space = PolySpace.window(ring, None, degree, limits)
    parameters = _parameters(space)
    outcomes = []
    for p in associated_primes(ring):
        x = next(int(x) for x in ring.nonzero if as_bitset(ring.zero_products[:, x]) == p.members)
        annihilated = ring.zero_products[x][space.rows].all(axis=1)
        extended = space.in_ideal_mask(p)
        mismatch = numpy.flatnonzero(annihilated != extended)
        if len(mismatch):
            witness = {"x": ring.names[x], **_literals(space, f=mismatch[0])}
            reason = f"annihilator of {ring.names[x]} differs from {p}B"
            return CheckOutcome.refuted(name, witness, reason, space.stats, parameters)
        outcomes.append(prime_extension_check(p, ring, degree, limits))

    merged = merge_outcomes(name, outcomes, parameters)
    merged.stats["associatedPrimes"] = [str(p) for p in associated_primes(ring)]
    merged.stats.update(space.stats)
    return merged


# --------------------------------------------------------------------------------------
# Zero-divisors of the extension
# --------------------------------------------------------------------------------------


def zd_cover_check(
    ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None, mode: str = "ass"
) -> CheckOutcome:
    """Check Z(B) is the union of the extended primes and that zd(B) = zd(R) under Property (A).

    Args:
        ring: Coefficient ring.
        degree: Truncation degree.
        limits: Caps and seed.
        mode: "ass" covers with Ass(R), "min" covers with Min(R).

    Raises:
        InvalidParameterError: Unknown mode.
    """
    limits = Limits() if limits is None else limits
    if mode not in ("ass", "min"):
        raise InvalidParameterError(f"Unknown cover mode '{mode}', use ass or min")
    name = f"zero-divisor cover by {mode} primes"
    family = associated_primes(ring) if mode == "ass" else minimal_primes(ring, limits.ideal_cap)

    space = PolySpace.window(ring, None, degree, limits)
    parameters = _parameters(space, mode=mode)
    zd = space.zero_divisor_mask()
    masks = [space.in_ideal_mask(p) for p in family]
    cover = numpy.logical_or.reduce(masks) if masks else numpy.zeros(len(space), dtype=bool)

    union = 0
    for p in family:
        union |= p.members
    covered = union == as_bitset(zero_divisor_mask(ring))
    stats = {**space.stats, "primes": [str(p) for p in family], "covered": covered, "zeroDivisors": int(zd.sum())}

    if covered:
        mismatch = numpy.flatnonzero(zd != cover)
        if len(mismatch):
            witness = _literals(space, f=mismatch[0])
            return CheckOutcome.refuted(
                name, witness, "zero-divisor and cover membership differ", stats, parameters
            )
        ideals, inverse = space.contents()
        located = [0] * len(family)
        for k in numpy.unique(inverse[zd]):
            index = prime_cover_locate(ideals[k], family)
            if index is None:
                witness = {"content": str(ideals[k])}
                return CheckOutcome.refuted(name, witness, "content avoids every prime", stats, parameters)
            located[index] += 1
        stats["located"] = located
    elif (zd == cover).all():
        return CheckOutcome.refuted(name, {}, "Z(R) is not covered but the truncated Z(B) is", stats, parameters)

    for a, b in itertools.permutations(range(len(family)), 2):
        if _subset(masks[a], masks[b]) != (family[a] <= family[b]):
            witness = {"p": str(family[a]), "q": str(family[b])}
            return CheckOutcome.refuted(name, witness, "inclusion of extensions differs", stats, parameters)

    if has_property_A(ring, limits.ideal_cap):
        degree_of_r = zd_degree(ring, limits.ideal_cap)
        if degree_of_r.few:
            extended = [space.in_ideal_mask(p) for p in degree_of_r.maximal_primes]
            union_mask = numpy.logical_or.reduce(extended) if extended else numpy.zeros(len(space), dtype=bool)
            pairs = itertools.permutations(range(len(extended)), 2)
            incomparable = all(not _subset(extended[a], extended[b]) for a, b in pairs)
            if not (union_mask == zd).all() or not incomparable:
                witness = {"zd": str(degree_of_r.n)}
                return CheckOutcome.refuted(name, witness, "zd(B) differs from zd(R)", stats, parameters)
            stats["zdDegree"] = degree_of_r.n
    return CheckOutcome.verified(name, stats, parameters)


def regular_content_check(ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None) -> CheckOutcome:
    """Check f is regular in B iff c(f) is not inside Z(R)."""
    name = "regular content"
    space = PolySpace.window(ring, None, degree, limits)
    regular = ~space.zero_divisor_mask()
    ideals, inverse = space.contents()
    z_bits = as_bitset(zero_divisor_mask(ring))
    outside = numpy.array([ideal.members & ~z_bits != 0 for ideal in ideals], dtype=bool)
    content_regular = outside[inverse] if len(space) else numpy.zeros(0, dtype=bool)
    mismatch = numpy.flatnonzero(regular != content_regular)
    if len(mismatch):
        witness = _literals(space, f=mismatch[0])
        return CheckOutcome.refuted(
            name, witness, "regularity and content disagree", space.stats, _parameters(space)
        )
    return CheckOutcome.verified(name, {**space.stats, "regular": int(regular.sum())}, _parameters(space))


def nilpotent_mask(space: PolySpace) -> numpy.ndarray:
    """Return which rows are nilpotent by squaring until the exponent reaches |R|."""
    rows, support = space.rows, space.support
    squarings = 0
    while 2**squarings < space.ring.order:
        support_next, index = support_sums(space.monoid, support, support)
        rows = multiply_pairs(space.ring, index, len(support_next), rows, rows)
        support = support_next
        squarings += 1
    return space.is_zero_rows(rows)


def nil_extension_check(ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None) -> CheckOutcome:
    """Check Nil(B) = Nil(R)B over the window."""
    name = "nilradical extension"
    space = PolySpace.window(ring, None, degree, limits)
    nil = nilradical(ring)
    nilpotent = nilpotent_mask(space)
    mismatch = numpy.flatnonzero(nilpotent != space.in_ideal_mask(nil))
    stats = {**space.stats, "nilpotent": int(nilpotent.sum()), "nilradical": str(nil)}
    if len(mismatch):
        witness = _literals(space, f=mismatch[0])
        return CheckOutcome.refuted(
            name, witness, f"nilpotency differs from membership in {nil}B", stats, _parameters(space)
        )
    return CheckOutcome.verified(name, stats, _parameters(space))


def zd_sandwich_check(ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None) -> CheckOutcome:
    """Check Z(R) inside Z(B) inside Z(R)B over the window."""
    name = "zero-divisor sandwich"
    space = PolySpace.window(ring, None, degree, limits)
    zd = space.zero_divisor_mask()
    z_mask = zero_divisor_mask(ring)
    constants = (space.rows[:, 1:] == ring.zero).all(axis=1)
    missing = numpy.flatnonzero(constants & z_mask[space.rows[:, 0]] & ~zd)
    if len(missing):
        witness = _literals(space, r=missing[0])
        return CheckOutcome.refuted(
            name, witness, "zero-divisor of R is regular in B", space.stats, _parameters(space)
        )
    outside = numpy.flatnonzero(zd & ~z_mask[space.rows].all(axis=1))
    if len(outside):
        witness = _literals(space, f=outside[0])
        return CheckOutcome.refuted(
            name, witness, "zero-divisor of B outside Z(R)B", space.stats, _parameters(space)
        )
    return CheckOutcome.verified(name, space.stats, _parameters(space))


def zpow_check(ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None) -> CheckOutcome:
    """Check Z(B)^n = 0 and Z(B)^(n-1) != 0 for the least n with Z(R)^n = 0.

    Products of k zero-divisors are built level by level from distinct products of k-1
    zero-divisors.  A level too large for the case cap is replaced by a seeded sample.
    """
    name = "zero-divisor power"
    limits = Limits() if limits is None else limits
    n = zero_divisor_power_index(ring)
    if n is None:
        return CheckOutcome.inconclusive(name, "no n with Z(R)^n = (0)", {}, {"degree": degree})

    space = PolySpace.window(ring, None, degree, limits)
    parameters = _parameters(space, n=n)
    divisors = numpy.flatnonzero(space.zero_divisor_mask())
    rng = numpy.random.default_rng(limits.seed)

    level, support, factors = space.rows[divisors], space.support, [[int(i)] for i in divisors]
    sampled = space.sampled
    witness_below = None
    products_examined = 0
    for k in range(1, n + 1):
        if k > 1:
            if len(level) * len(divisors) > limits.zpow_cap:
                quota = max(1, limits.zpow_cap // len(divisors))
                keep = numpy.sort(rng.choice(len(level), size=quota, replace=False))
                level, factors = level[keep], [factors[i] for i in keep]
                sampled = True
            support_next, index = support_sums(space.monoid, support, space.support)
            blocks = [convolve(ring, index, len(support_next), level, space.rows[j]) for j in divisors]
            empty = numpy.zeros((0, len(support_next)), dtype=level.dtype)
            stacked = numpy.concatenate(blocks) if blocks else empty
            provenance = [factors[i] + [int(j)] for j in divisors for i in range(len(level))]
            products_examined += len(stacked)
            level, first = numpy.unique(stacked, axis=0, return_index=True) if len(stacked) else (stacked, [])
            factors = [provenance[i] for i in first]
            support = support_next

        nonzero = numpy.flatnonzero(~space.is_zero_rows(level)) if len(level) else []
        if k == n - 1:
            if len(nonzero) == 0:
                reason = f"every product of {n - 1} zero-divisors vanishes"
                stats = {**space.stats, "products": products_examined, "sampled": sampled}
                return CheckOutcome.refuted(name, {}, reason, stats, parameters)
            witness_below = {f"f{m + 1}": str(space.element(i)) for m, i in enumerate(factors[nonzero[0]])}
        if k == n and len(nonzero):
            witness = {f"f{m + 1}": str(space.element(i)) for m, i in enumerate(factors[nonzero[0]])}
            product = space.as_element(level[nonzero[0]], support)
            witness["product"] = str(product)
            stats = {**space.stats, "products": products_examined, "sampled": sampled}
            return CheckOutcome.refuted(
                name, witness, f"a product of {n} zero-divisors is not zero", stats, parameters
            )

    stats = {**space.stats, "products": products_examined, "sampled": sampled, "zeroDivisors": len(divisors)}
    if witness_below is not None:
        stats["nonzeroBelow"] = witness_below
    return CheckOutcome.verified(name, stats, parameters)


def _prime_to_mismatch(space: PolySpace, ideal: Ideal) -> tuple[int, bool] | None:
    ring = space.ring
    in_extension = space.in_ideal_mask(ideal)
    outside = numpy.flatnonzero(~in_extension)
    outside_r = [r for r in range(ring.order) if r not in ideal]
    if outside_r:
        scaled = ring.mul[numpy.array(outside_r)][:, space.rows]
        rhs = ideal.mask[scaled].all(axis=2).any(axis=0)
    else:
        rhs = numpy.zeros(len(space), dtype=bool)

    for i, row in enumerate(space.rows):
        products = space.multiply_by(row, space.rows[outside])
        lhs = bool(len(outside)) and bool(space.in_ideal_mask(ideal, products).any())
        if lhs != rhs[i]:
            return i, lhs
    return None


def prime_to_check(
    ring: FiniteRing, ideal: Ideal, degree: int = DEFAULT_DEGREE, limits: Limits = None
) -> CheckOutcome:
    """Check f is not prime to IB iff rf lies in IB for some r outside I.

    The left side only searches the window, so a mismatch is retried once at degree d+1.
    """
    name = f"prime to {ideal}B"
    space = PolySpace.window(ring, None, degree, limits, pairwise=True)
    parameters = _parameters(space, ideal=str(ideal))
    mismatch = _prime_to_mismatch(space, ideal)
    stats = {**space.stats, "escalated": False}
    if mismatch is not None:
        log.verbose(f"Prime to mismatch at degree {degree}, retrying at {degree + 1}")
        space = PolySpace.window(ring, None, degree + 1, limits, pairwise=True)
        mismatch = _prime_to_mismatch(space, ideal)
        stats = {**space.stats, "escalated": True}
        parameters["degree"] = degree + 1
    if mismatch is not None:
        i, lhs = mismatch
        if lhs:
            reason = "window finds g with fg in IB but no scalar works"
        else:
            reason = "scalar works but no g in the window"
        return CheckOutcome.refuted(name, _literals(space, f=i), reason, stats, parameters)
    return CheckOutcome.verified(name, stats, parameters)


def primal_extension_check(ring: FiniteRing, degree: int = DEFAULT_DEGREE, limits: Limits = None) -> CheckOutcome:
    """Check Z(B) = Z(R)B, Z(B) additively closed and Property (A) of B for primal R with Property (A)."""
    name = "primal extension"
    limits = Limits() if limits is None else limits
    if not is_primal(ring):
        witness = primal_failure_witness(ring)
        stats = {} if witness is None else {"notPrimal": [ring.names[a] for a in witness]}
        return CheckOutcome.inconclusive(name, "hypothesis unmet: not primal", stats, {"degree": degree})
    if not has_property_A(ring, limits.ideal_cap):
        return CheckOutcome.inconclusive(name, "hypothesis unmet: no Property (A)", {}, {"degree": degree})

    z_ideal = Ideal(ring, as_bitset(zero_divisor_mask(ring)))
    space = PolySpace.window(ring, None, degree, limits, pairwise=True)
    parameters = _parameters(space)
    zd = space.zero_divisor_mask()
    mismatch = numpy.flatnonzero(zd != space.in_ideal_mask(z_ideal))
    if len(mismatch):
        witness = _literals(space, f=mismatch[0])
        return CheckOutcome.refuted(name, witness, f"Z(B) differs from {z_ideal}B", space.stats, parameters)

    divisors = numpy.flatnonzero(zd)
    for i in divisors:
        sums = ring.add[space.rows[i][None, :], space.rows[divisors]]
        regular = numpy.flatnonzero(~space.zero_divisor_mask(sums))
        if len(regular):
            witness = _literals(space, f=i, g=divisors[regular[0]])
            return CheckOutcome.refuted(name, witness, "sum of zero-divisors is regular", space.stats, parameters)

    ideals, inverse = space.contents()
    used = sorted(set(int(k) for k in inverse[divisors]))
    for a, b in itertools.combinations_with_replacement(used, 2):
        if annihilator(ideal_sum(ideals[a], ideals[b])).is_zero:
            i = int(divisors[numpy.flatnonzero(inverse[divisors] == a)[0]])
            j = int(divisors[numpy.flatnonzero(inverse[divisors] == b)[0]])
            return CheckOutcome.refuted(
                name, _literals(space, f=i, g=j), "Property (A) fails in B", space.stats, parameters
            )

    stats = {**space.stats, "zeroDivisors": len(divisors), "zeroDivisorIdeal": str(z_ideal)}
    return CheckOutcome.verified(name, stats, parameters)


def primal_zd_degree_check(ring: FiniteRing, limits: Limits = None) -> CheckOutcome:
    """Check a primal ring has zd(R) = 1."""
    name = "primal zd degree"
    limits = Limits() if limits is None else limits
    if not is_primal(ring):
        return CheckOutcome.inconclusive(name, "hypothesis unmet: not primal")
    degree_of_r = zd_degree(ring, limits.ideal_cap)
    if degree_of_r.n != 1:
        return CheckOutcome.refuted(name, {"zd": str(degree_of_r.n)}, "primal ring with zd(R) != 1")
    return CheckOutcome.verified(name, {"zdDegree": 1})


def tq_triviality_check(ring: FiniteRing) -> CheckOutcome:
    """Check every regular element is a unit, so the total quotient ring is R itself."""
    name = "total quotient ring"
    try:
        units, _ = units_and_regulars(ring)
    except ConsistencyError as e:
        return CheckOutcome.refuted(name, {}, str(e))
    return CheckOutcome.verified(name, {"degenerate": True, "units": len(units)})

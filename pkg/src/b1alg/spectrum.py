"""Classification of ideals: primes, primaries, spectra, associated primes.

All predicates are decided by definitional scans over element pairs; at
the orders the enumeration bound admits, brute force is the most
trustworthy oracle.  Lists come back in the canonical enumeration order
(cardinality, then mask value), so reports are diffable.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .algebra import Algebra
from .ideals import (
    annihilator,
    bourne_congruence,
    enumerate_ideals,
    enumerate_saturated_ideals,
    full_mask,
    preimage_ideal,
    quotient,
    radical,
)


def is_prime(algebra: Algebra, mask: int) -> bool:
    """Proper, and u*v in I forces u in I or v in I."""
    if mask == full_mask(algebra):
        return False
    mul = algebra.mul
    outside = [a for a in algebra.elements() if not mask >> a & 1]
    for u in outside:
        row = mul[u]
        for v in outside:
            if mask >> row[v] & 1:
                return False
    return True


def is_primary(algebra: Algebra, mask: int) -> bool:
    """Proper, and x*y in Q forces x in Q or some power of y in Q.

    The power condition on y is exactly membership in the radical, so one
    radical computation replaces the per-pair exponent search.
    """
    if mask == full_mask(algebra):
        return False
    rad = radical(algebra, mask)
    mul = algebra.mul
    for x in algebra.elements():
        if mask >> x & 1:
            continue
        row = mul[x]
        for y in algebra.elements():
            if mask >> row[y] & 1 and not rad >> y & 1:
                return False
    return True


def primes(algebra: Algebra) -> tuple[int, ...]:
    return tuple(m for m in enumerate_ideals(algebra) if is_prime(algebra, m))


def saturated_primes(algebra: Algebra) -> tuple[int, ...]:
    return tuple(
        m for m in enumerate_saturated_ideals(algebra) if is_prime(algebra, m)
    )


def _minimal(family) -> tuple[int, ...]:
    fam = list(family)
    return tuple(
        m for m in fam if not any(o != m and o & m == o for o in fam)
    )


def _maximal(family) -> tuple[int, ...]:
    fam = list(family)
    return tuple(
        m for m in fam if not any(o != m and o & m == m for o in fam)
    )


def min_primes(algebra: Algebra) -> tuple[int, ...]:
    return _minimal(primes(algebra))


def min_saturated_primes(algebra: Algebra) -> tuple[int, ...]:
    return _minimal(saturated_primes(algebra))


def max_saturated(algebra: Algebra) -> tuple[int, ...]:
    """Maximal elements among the proper saturated ideals."""
    full = full_mask(algebra)
    proper = [m for m in enumerate_saturated_ideals(algebra) if m != full]
    return _maximal(proper)


def zero_divisors(algebra: Algebra) -> int:
    """Mask of nonzero elements that kill some nonzero element."""
    mul = algebra.mul
    out = 0
    for a in range(1, algebra.order):
        row = mul[a]
        if any(row[b] == 0 for b in range(1, algebra.order)):
            out |= 1 << a
    return out


def divisor_set(algebra: Algebra, mask: int) -> int:
    """D(I) = {x : x*y in I for some y outside I}.

    Contains I whenever I is proper, and D({0}) is the zero divisors plus
    zero for any nontrivial algebra.
    """
    mul = algebra.mul
    outside = [y for y in algebra.elements() if not mask >> y & 1]
    out = 0
    for x in algebra.elements():
        row = mul[x]
        if any(mask >> row[y] & 1 for y in outside):
            out |= 1 << x
    return out


def nilradical(algebra: Algebra) -> int:
    return radical(algebra, 1)


def associated_primes(algebra: Algebra) -> tuple[tuple[int, int], ...]:
    """Pairs (witness x, prime) where the prime pulls back from a minimal
    prime of the quotient by the Bourne congruence of Ann(x).

    One witness is kept per distinct prime, the smallest element index;
    x = 1 always contributes, so the minimal primes are always present.
    """
    found: dict[int, int] = {}
    for x in range(1, algebra.order):
        qmap = quotient(algebra, bourne_congruence(algebra, annihilator(algebra, x)))
        for q in min_primes(qmap.target):
            pulled = preimage_ideal(qmap, q)
            found.setdefault(pulled, x)
    return tuple(
        (found[p], p) for p in sorted(found, key=lambda m: (m.bit_count(), m))
    )


def is_standard(algebra: Algebra) -> tuple[bool, tuple[int, ...]]:
    """Whether the zero divisors plus zero are a union of saturated primes.

    Returns the verdict and a minimum-size witnessing cover (searched over
    the saturated primes contained in the target, smallest combinations
    first, in canonical order).
    """
    target = divisor_set(algebra, 1)
    candidates = [p for p in saturated_primes(algebra) if not p & ~target]
    union = 0
    for p in candidates:
        union |= p
    if union != target:
        return False, ()
    for k in range(len(candidates) + 1):
        for combo in combinations(candidates, k):
            m = 0
            for p in combo:
                m |= p
            if m == target:
                return True, combo
    return False, ()  # pragma: no cover - the full candidate union covers


@dataclass(frozen=True)
class SpectrumResult:
    """One-shot classification of an algebra's ideal spectrum."""

    algebra: Algebra
    primes: tuple[int, ...]
    saturated_primes: tuple[int, ...]
    min_primes: tuple[int, ...]
    min_saturated_primes: tuple[int, ...]
    max_saturated: tuple[int, ...]
    associated: tuple[tuple[int, int], ...]
    nilradical: int
    zero_divisors: int
    standard: bool
    standard_cover: tuple[int, ...]


def spectrum(algebra: Algebra) -> SpectrumResult:
    standard, cover = is_standard(algebra)
    return SpectrumResult(
        algebra=algebra,
        primes=primes(algebra),
        saturated_primes=saturated_primes(algebra),
        min_primes=min_primes(algebra),
        min_saturated_primes=min_saturated_primes(algebra),
        max_saturated=max_saturated(algebra),
        associated=associated_primes(algebra),
        nilradical=nilradical(algebra),
        zero_divisors=zero_divisors(algebra),
        standard=standard,
        standard_cover=cover,
    )

"""Ideal arithmetic over finite B1-algebras.

Ideals are plain int bitmasks: bit i set means element i belongs to the
ideal, with element 0 (zero) as the least significant bit.  Every proper
ideal result here is a mask over the algebra passed alongside it; masks are
hashable and cheap, so enumerations memoize per algebra.

The operations mirror the classical ones: generated ideals, the saturation
closure I-bar = {a : a + i = i for some i in I}, radicals, annihilators,
conductors, ideal sums / intersections / products, the single-witness
Bourne congruence (a ~ b iff a + w = b + w for some w in I) and its
quotient algebra.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from .algebra import (
    ENUMERATION_BOUND_ENV,
    Algebra,
    AlgebraError,
    AxiomError,
    EnumerationBoundError,
    _certified,
    enumeration_bound,
)


def bits(mask: int):
    """Yield the set bit positions of mask in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(elements) -> int:
    out = 0
    for e in elements:
        out |= 1 << e
    return out


def full_mask(algebra: Algebra) -> int:
    return (1 << algebra.order) - 1


def member_labels(algebra: Algebra, mask: int) -> tuple[str, ...]:
    """Labels of the mask's members in element-index order (zero first)."""
    return tuple(algebra.names[i] for i in bits(mask))


def is_ideal(algebra: Algebra, mask: int) -> bool:
    return ideal_violation(algebra, mask) is None


def ideal_violation(algebra: Algebra, mask: int) -> tuple[str, tuple[int, ...]] | None:
    """First failed ideal condition as (description, witness), else None."""
    if mask & ~full_mask(algebra):
        stray = next(i for i in bits(mask) if i >= algebra.order)
        return ("contains an out-of-range element", (stray,))
    if not mask & 1:
        return ("does not contain zero", (0,))
    add, mul = algebra.add, algebra.mul
    members = list(bits(mask))
    for i in members:
        for j in members:
            if not mask >> add[i][j] & 1:
                return ("is not closed under addition", (i, j))
    for a in algebra.elements():
        row = mul[a]
        for i in members:
            if not mask >> row[i] & 1:
                return ("is not closed under multiplication by the algebra", (a, i))
    return None


def _additive_closure(algebra: Algebra, mask: int) -> int:
    add = algebra.add
    changed = True
    while changed:
        changed = False
        members = list(bits(mask))
        for i in members:
            row = add[i]
            for j in members:
                b = 1 << row[j]
                if not mask & b:
                    mask |= b
                    changed = True
    return mask


def generated_ideal(algebra: Algebra, elements) -> int:
    """Smallest ideal containing the given elements.

    Multiples a*s are collected first; closing that set under addition is
    enough, since distributivity keeps sums of multiples stable under
    further multiplication.
    """
    mul = algebra.mul
    mask = 1
    for s in elements:
        for a in algebra.elements():
            mask |= 1 << mul[a][s]
    return _additive_closure(algebra, mask)


def saturation(algebra: Algebra, mask: int) -> int:
    """Closure I-bar = {a : a + i = i for some i in I}."""
    add = algebra.add
    members = list(bits(mask))
    out = mask
    for a in algebra.elements():
        if out >> a & 1:
            continue
        row = add[a]
        if any(row[i] == i for i in members):
            out |= 1 << a
    return out


def is_saturated(algebra: Algebra, mask: int) -> bool:
    return saturation(algebra, mask) == mask


def radical(algebra: Algebra, mask: int) -> int:
    """r(I) = {a : a**n in I for some n >= 1}.

    Exponents up to the order suffice: the power sequence of any element
    cycles within order steps, so it visits no new values afterwards.
    """
    mul = algebra.mul
    out = 0
    for a in algebra.elements():
        p = a
        for _ in range(algebra.order):
            if mask >> p & 1:
                out |= 1 << a
                break
            p = mul[p][a]
    return out


def ideal_sum(algebra: Algebra, left: int, right: int) -> int:
    # The union of two ideals is already closed under external
    # multiplication, so only the additive closure is missing.
    return _additive_closure(algebra, left | right)


def ideal_intersect(algebra: Algebra, left: int, right: int) -> int:
    return left & right


def ideal_product(algebra: Algebra, left: int, right: int) -> int:
    mul = algebra.mul
    mask = 1
    for i in bits(left):
        row = mul[i]
        for j in bits(right):
            mask |= 1 << row[j]
    return _additive_closure(algebra, mask)


def annihilator(algebra: Algebra, s: int) -> int:
    """Ann(s) = {x : s*x = 0}; always a saturated ideal."""
    row = algebra.mul[s]
    out = 0
    for x in algebra.elements():
        if row[x] == 0:
            out |= 1 << x
    return out


def annihilator_set(algebra: Algebra, elements) -> int:
    out = full_mask(algebra)
    for s in elements:
        out &= annihilator(algebra, s)
    return out


def conductor(algebra: Algebra, x: int, mask: int) -> int:
    """C_x(J) = {y : x*y in J}; saturated whenever J is."""
    row = algebra.mul[x]
    out = 0
    for y in algebra.elements():
        if mask >> row[y] & 1:
            out |= 1 << y
    return out


# ---------------------------------------------------------------------------
# Exhaustive enumeration

_ideal_cache: dict[Algebra, tuple[int, ...]] = {}


def _scan_ideals(algebra: Algebra, start: int, stop: int) -> list[int]:
    # Candidates are masks containing bit 0; candidate t encodes 1 | t << 1.
    add, mul = algebra.add, algebra.mul
    n = algebra.order
    mult_row = [0] * n
    for i in range(n):
        m = 0
        for a in range(n):
            m |= 1 << mul[a][i]
        mult_row[i] = m
    found = []
    for t in range(start, stop):
        mask = 1 | t << 1
        members = list(bits(mask))
        ok = True
        for i in members:
            if mult_row[i] & ~mask:
                ok = False
                break
        if not ok:
            continue
        for i in members:
            row = add[i]
            for j in members:
                if not mask >> row[j] & 1:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            found.append(mask)
    return found


def enumerate_ideals(algebra: Algebra, jobs: int = 1) -> tuple[int, ...]:
    """All ideals, sorted by cardinality then by mask value.

    Exhaustive over the 2**(order-1) subsets containing zero; refuses
    algebras above the enumeration bound instead of sampling.  ``jobs``
    partitions the scan across threads; the merged output is identical for
    every worker count.
    """
    bound = enumeration_bound()
    if algebra.order > bound:
        raise EnumerationBoundError(
            f"order {algebra.order} exceeds the enumeration bound {bound}; "
            f"raise it via {ENUMERATION_BOUND_ENV} if you have the patience"
        )
    cached = _ideal_cache.get(algebra)
    if cached is not None:
        return cached
    total = 1 << (algebra.order - 1)
    if jobs <= 1 or total < 1024:
        found = _scan_ideals(algebra, 0, total)
    else:
        step = -(-total // jobs)
        ranges = [(k, min(k + step, total)) for k in range(0, total, step)]
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = pool.map(lambda r: _scan_ideals(algebra, *r), ranges)
        found = [m for chunk in chunks for m in chunk]
    found.sort(key=lambda m: (m.bit_count(), m))
    result = tuple(found)
    _ideal_cache[algebra] = result
    return result


def enumerate_saturated_ideals(algebra: Algebra, jobs: int = 1) -> tuple[int, ...]:
    return tuple(
        m for m in enumerate_ideals(algebra, jobs) if is_saturated(algebra, m)
    )


# ---------------------------------------------------------------------------
# Congruences and quotients


@dataclass(frozen=True)
class Congruence:
    """Partition of an algebra compatible with both operations.

    ``class_of[a]`` is the class index of element a; ``classes[k]`` is the
    member mask of class k.  Classes are numbered by smallest member, so
    the class of zero is always class 0.
    """

    algebra: Algebra
    class_of: tuple[int, ...]
    classes: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.classes)

    def zero_class(self) -> int:
        return self.classes[0]


@dataclass(frozen=True)
class QuotientMap:
    """Surjection onto a quotient algebra with preimage bookkeeping."""

    source: Algebra
    target: Algebra
    projection: tuple[int, ...]


def congruence_violation(
    algebra: Algebra, class_of: tuple[int, ...]
) -> tuple[str, tuple[int, ...]] | None:
    """First compatibility failure of the partition, or None if valid."""
    add, mul = algebra.add, algebra.mul
    for a in algebra.elements():
        for b in algebra.elements():
            if class_of[a] != class_of[b]:
                continue
            for c in algebra.elements():
                if class_of[add[a][c]] != class_of[add[b][c]]:
                    return ("addition not compatible", (a, b, c))
                if class_of[mul[a][c]] != class_of[mul[b][c]]:
                    return ("multiplication not compatible", (a, b, c))
    return None


def bourne_congruence(algebra: Algebra, mask: int) -> Congruence:
    """Congruence of an ideal: a ~ b iff a + w = b + w for some w in I.

    A single shared witness suffices because witnesses add, which is what
    makes the relation transitive.  The class of zero is exactly the
    saturation of I.
    """
    add = algebra.add
    members = list(bits(mask))
    n = algebra.order
    class_of = [-1] * n
    classes: list[int] = []
    for a in range(n):
        if class_of[a] != -1:
            continue
        k = len(classes)
        cls = 1 << a
        class_of[a] = k
        row_a = add[a]
        for b in range(a + 1, n):
            if class_of[b] == -1:
                row_b = add[b]
                if any(row_a[w] == row_b[w] for w in members):
                    class_of[b] = k
                    cls |= 1 << b
        classes.append(cls)
    return Congruence(algebra, tuple(class_of), tuple(classes))


def quotient(algebra: Algebra, congruence: Congruence) -> QuotientMap:
    """Quotient algebra on the classes, with the canonical projection.

    Compatibility is re-verified before the induced tables are trusted;
    a failure here is an engine bug, not a user error.
    """
    if congruence.class_of[0] != 0:
        raise AlgebraError("congruence classes must number the class of zero first")
    bad = congruence_violation(algebra, congruence.class_of)
    if bad is not None:
        raise RuntimeError(
            f"congruence re-check failed: {bad[0]} at {bad[1]} (engine bug)"
        )
    class_of = congruence.class_of
    k = len(congruence.classes)
    reps = [next(bits(c)) for c in congruence.classes]
    names = tuple(f"[{algebra.names[r]}]" for r in reps)
    add = tuple(
        tuple(class_of[algebra.add[reps[i]][reps[j]]] for j in range(k))
        for i in range(k)
    )
    mul = tuple(
        tuple(class_of[algebra.mul[reps[i]][reps[j]]] for j in range(k))
        for i in range(k)
    )
    try:
        target = _certified(names, add, mul, class_of[algebra.one])
    except AxiomError as exc:  # pragma: no cover - guarded by the re-check
        raise RuntimeError(f"quotient tables failed validation: {exc}") from exc
    return QuotientMap(algebra, target, class_of)


def preimage_ideal(qmap: QuotientMap, mask: int) -> int:
    """Pull an ideal of the quotient back along the projection."""
    if not is_ideal(qmap.target, mask):
        raise AlgebraError("preimage_ideal expects an ideal of the target")
    out = 0
    for a in qmap.source.elements():
        if mask >> qmap.projection[a] & 1:
            out |= 1 << a
    return out

"""Decompositions, laskerian verdicts, Evans reports, and the law audit.

The central algorithm turns the existence proof for weak primary
decomposition into a terminating procedure: a saturated radical ideal that
is not prime admits a witness pair (u, v) outside it with u*v inside, and
splitting along the saturations of J + Au and J + Av, then recursing on
their radicals, yields finitely many saturated primes intersecting exactly
to J.  Taking radicals before recursing is what restores the precondition
at every node; the intersection identity survives because a power landing
in both branches lands, after one more squaring, in J itself.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .algebra import Algebra, AlgebraError, check_axioms
from .ideals import (
    annihilator,
    bits,
    bourne_congruence,
    conductor,
    enumerate_ideals,
    enumerate_saturated_ideals,
    full_mask,
    generated_ideal,
    ideal_sum,
    is_ideal,
    is_saturated,
    member_labels,
    radical,
    saturation,
)
from .spectrum import (
    associated_primes,
    divisor_set,
    is_primary,
    is_prime,
    is_standard,
    max_saturated,
    min_primes,
    min_saturated_primes,
    saturated_primes,
    zero_divisors,
)


@dataclass(frozen=True)
class DecompositionResult:
    algebra: Algebra
    input: int
    components: tuple[int, ...]
    irredundant: bool
    split_trace: tuple[tuple[int, tuple[int, int]], ...]

    def intersection(self) -> int:
        out = full_mask(self.algebra)
        for c in self.components:
            out &= c
        return out


@dataclass(frozen=True)
class EvansReport:
    algebra: Algebra
    ideal: int
    maximal_conductors: tuple[tuple[int, int], ...]  # (witness y, conductor)
    all_prime: bool
    all_saturated: bool
    union_equals_divisor_set: bool
    passed: bool


@dataclass(frozen=True)
class LaskerianReport:
    algebra: Algebra
    laskerian: bool
    witness: int | None
    table: tuple[tuple[int, tuple[int, ...]], ...]  # ideal -> primary components
    saturated_primaries: tuple[int, ...]
    primaries: tuple[int, ...]


@dataclass(frozen=True)
class AuditCheck:
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class AuditResult:
    algebra: Algebra
    checks: tuple[AuditCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _require_saturated_proper(algebra: Algebra, mask: int, op: str) -> None:
    if mask == full_mask(algebra):
        raise AlgebraError(f"{op} requires a proper ideal")
    if not is_saturated(algebra, mask):
        missing = next(bits(saturation(algebra, mask) & ~mask))
        raise AlgebraError(
            f"{op} requires a saturated ideal; element "
            f"{algebra.names[missing]!r} is absorbed but missing"
        )


def weak_decompose(algebra: Algebra, mask: int) -> DecompositionResult:
    """Split a saturated radical proper ideal into saturated primes.

    The witness pair at each node is the lexicographically smallest
    (u, v) in element-index order, so traces are reproducible.  The
    returned components always intersect exactly to the input.
    """
    _require_saturated_proper(algebra, mask, "weak_decompose")
    rad = radical(algebra, mask)
    if rad != mask:
        culprit = next(bits(rad & ~mask))
        raise AlgebraError(
            "weak_decompose requires a radical ideal; a power of "
            f"{algebra.names[culprit]!r} lies inside"
        )

    mul = algebra.mul
    full = full_mask(algebra)
    components: list[int] = []
    trace: list[tuple[int, tuple[int, int]]] = []

    def split(j: int) -> None:
        if is_prime(algebra, j):
            if j not in components:
                components.append(j)
            return
        witness = None
        for u in algebra.elements():
            if j >> u & 1:
                continue
            row = mul[u]
            for v in algebra.elements():
                if not j >> v & 1 and j >> row[v] & 1:
                    witness = (u, v)
                    break
            if witness:
                break
        assert witness is not None, "non-prime proper ideal without witness pair"
        trace.append((j, witness))
        u, v = witness
        for w in (u, v):
            arm = radical(
                algebra, saturation(algebra, ideal_sum(algebra, j, generated_ideal(algebra, (w,))))
            )
            assert arm != full and arm != j, "split arm failed to grow properly"
            split(arm)

    split(mask)
    components.sort(key=lambda m: (m.bit_count(), m))
    result = DecompositionResult(
        algebra=algebra,
        input=mask,
        components=tuple(components),
        irredundant=False,
        split_trace=tuple(trace),
    )
    assert result.intersection() == mask, "decomposition lost its intersection"
    return result


def radical_decomposition(algebra: Algebra, mask: int) -> DecompositionResult:
    """Decompose the radical of a saturated ideal into saturated primes.

    The radical of a saturated ideal is itself saturated, so this reduces
    to weak_decompose; the components intersect to r(I).
    """
    _require_saturated_proper(algebra, mask, "radical_decomposition")
    rad = radical(algebra, mask)
    inner = weak_decompose(algebra, rad)
    return replace(inner, input=mask)


def minimalize(result: DecompositionResult) -> DecompositionResult:
    """Drop components containing the intersection of the others.

    The intersection is preserved; removal scans in canonical order until
    no component is redundant.
    """
    comps = list(result.components)
    full = full_mask(result.algebra)
    changed = True
    while changed and len(comps) > 1:
        changed = False
        for idx, c in enumerate(comps):
            rest = full
            for j, o in enumerate(comps):
                if j != idx:
                    rest &= o
            if rest & ~c == 0:
                del comps[idx]
                changed = True
                break
    return replace(result, components=tuple(comps), irredundant=True)


def laskerian_check(algebra: Algebra) -> LaskerianReport:
    """Can every proper saturated ideal be cut out by saturated primaries?

    The family of proper saturated primary ideals is closed under pairwise
    intersection to a meet-closed family with tracked components; the
    algebra is laskerian iff every proper saturated ideal shows up.  The
    improper ideal is the empty intersection by convention.  Both primary
    families (saturated and not) are reported; only the saturated one
    decides the verdict.
    """
    full = full_mask(algebra)
    saturated = enumerate_saturated_ideals(algebra)
    proper_saturated = [m for m in saturated if m != full]
    primaries = tuple(
        m for m in enumerate_ideals(algebra) if is_primary(algebra, m)
    )
    sat_primaries = tuple(m for m in primaries if is_saturated(algebra, m))

    reachable: dict[int, tuple[int, ...]] = {q: (q,) for q in sat_primaries}
    frontier = list(sat_primaries)
    while frontier:
        fresh: dict[int, tuple[int, ...]] = {}
        known = sorted(reachable, key=lambda m: (m.bit_count(), m))
        for a in frontier:
            for b in known:
                c = a & b
                if c not in reachable and c not in fresh:
                    parts = tuple(sorted(
                        set(reachable[a]) | set(reachable[b]),
                        key=lambda m: (m.bit_count(), m),
                    ))
                    fresh[c] = parts
        reachable.update(fresh)
        frontier = sorted(fresh, key=lambda m: (m.bit_count(), m))

    witness = None
    for m in proper_saturated:
        if m not in reachable:
            witness = m
            break
    table = tuple(
        (m, reachable[m]) for m in proper_saturated if m in reachable
    )
    return LaskerianReport(
        algebra=algebra,
        laskerian=witness is None,
        witness=witness,
        table=table,
        saturated_primaries=sat_primaries,
        primaries=primaries,
    )


def evans_report(algebra: Algebra, mask: int) -> EvansReport:
    """Check that D(I) is the union of the maximal I-conductors.

    Conductors C_y(I) for y outside I are collected, the maximal ones kept
    (smallest witness y per distinct conductor), and each is required to
    be prime and saturated with their union equal to D(I).
    """
    _require_saturated_proper(algebra, mask, "evans_report")
    conductors: dict[int, int] = {}
    for y in algebra.elements():
        if not mask >> y & 1:
            conductors.setdefault(conductor(algebra, y, mask), y)
    maximal = [
        c for c in conductors
        if not any(o != c and o & c == c for o in conductors)
    ]
    maximal.sort(key=lambda m: (m.bit_count(), m))
    entries = tuple((conductors[c], c) for c in maximal)
    all_prime = all(is_prime(algebra, c) for c in maximal)
    all_saturated = all(is_saturated(algebra, c) for c in maximal)
    union = 0
    for c in maximal:
        union |= c
    union_ok = union == divisor_set(algebra, mask)
    return EvansReport(
        algebra=algebra,
        ideal=mask,
        maximal_conductors=entries,
        all_prime=all_prime,
        all_saturated=all_saturated,
        union_equals_divisor_set=union_ok,
        passed=all_prime and all_saturated and union_ok,
    )


# ---------------------------------------------------------------------------
# The audit: every law the engine relies on, checked exhaustively.


def _labels(algebra: Algebra, mask: int) -> str:
    return "{" + ",".join(member_labels(algebra, mask)) + "}"


def audit(algebra: Algebra) -> AuditResult:
    """Run the full invariant suite against one finite algebra.

    A finite algebra satisfies both chain conditions vacuously, so every
    check must pass; any failure is an engine defect, and the witness in
    the detail string says where to look.
    """
    checks: list[AuditCheck] = []
    full = full_mask(algebra)
    ideals = enumerate_ideals(algebra)
    saturated = enumerate_saturated_ideals(algebra)
    proper_saturated = [m for m in saturated if m != full]

    def run(name: str):
        def wrap(fn):
            failure = fn()
            if failure is None:
                checks.append(AuditCheck(name, True, "ok"))
            else:
                checks.append(AuditCheck(name, False, failure))
            return fn

        return wrap

    @run("axioms")
    def _axioms():
        report = check_axioms(algebra.add, algebra.mul, algebra.one)
        if not report.valid:
            v = report.violations[0]
            return f"{v.axiom} at {v.witness}"
        return None

    @run("natural-order")
    def _order():
        for a in algebra.elements():
            if not algebra.leq(0, a):
                return f"zero not below {algebra.names[a]}"
            for b in algebra.elements():
                if algebra.leq(a, b) and algebra.leq(b, a) and a != b:
                    return f"antisymmetry fails at ({algebra.names[a]}, {algebra.names[b]})"
                for c in algebra.elements():
                    if algebra.leq(a, b) and algebra.leq(b, c) and not algebra.leq(a, c):
                        return "transitivity fails"
        return None

    @run("saturation-closure")
    def _sat_closure():
        for i in ideals:
            s = saturation(algebra, i)
            if i & ~s:
                return f"not extensive at {_labels(algebra, i)}"
            if saturation(algebra, s) != s:
                return f"not idempotent at {_labels(algebra, i)}"
            if not is_ideal(algebra, s):
                return f"saturation of {_labels(algebra, i)} is not an ideal"
            for j in ideals:
                if i & ~j == 0 and saturation(algebra, i) & ~saturation(algebra, j):
                    return f"not monotone at {_labels(algebra, i)} <= {_labels(algebra, j)}"
        return None

    @run("radical-closure")
    def _rad_closure():
        for i in ideals:
            r = radical(algebra, i)
            if i & ~r or radical(algebra, r) != r or not is_ideal(algebra, r):
                return f"radical misbehaves at {_labels(algebra, i)}"
        return None

    @run("radical-saturation-intersection")
    def _rad_sat_intersect():
        for i in ideals:
            for j in ideals:
                lhs = radical(algebra, saturation(algebra, i & j))
                mid = radical(algebra, saturation(algebra, i) & saturation(algebra, j))
                rhs = radical(algebra, saturation(algebra, i)) & radical(
                    algebra, saturation(algebra, j)
                )
                if not lhs == mid == rhs:
                    return f"identity fails at ({_labels(algebra, i)}, {_labels(algebra, j)})"
        return None

    @run("annihilators-saturated")
    def _ann_sat():
        for s in algebra.elements():
            if not is_saturated(algebra, annihilator(algebra, s)):
                return f"Ann({algebra.names[s]}) is not saturated"
        return None

    @run("conductors-saturated")
    def _cond_sat():
        for x in algebra.elements():
            for j in saturated:
                if not is_saturated(algebra, conductor(algebra, x, j)):
                    return f"C_{algebra.names[x]}({_labels(algebra, j)}) not saturated"
        return None

    @run("bourne-zero-class")
    def _bourne_zero():
        for i in ideals:
            cong = bourne_congruence(algebra, i)
            if cong.zero_class() != saturation(algebra, i):
                return f"zero class wrong for {_labels(algebra, i)}"
        return None

    @run("generated-roundtrip")
    def _roundtrip():
        for i in ideals:
            if generated_ideal(algebra, bits(i)) != i:
                return f"regenerating {_labels(algebra, i)} changed it"
        return None

    @run("maximal-saturated-are-prime")
    def _max_sat_prime():
        sat_primes = set(saturated_primes(algebra))
        for m in max_saturated(algebra):
            if m not in sat_primes:
                return f"{_labels(algebra, m)} is maximal saturated but not prime"
        return None

    @run("minimal-primes-are-zero-divisors")
    def _min_prime_zerodiv():
        divisors = zero_divisors(algebra)
        for p in set(min_primes(algebra)) | set(min_saturated_primes(algebra)):
            for a in bits(p & ~1):
                if not divisors >> a & 1:
                    return f"{algebra.names[a]} in {_labels(algebra, p)} is no zero divisor"
        return None

    @run("minimal-primes-equal-minimal-saturated")
    def _minpr_equal():
        if min_primes(algebra) != min_saturated_primes(algebra):
            return "the two minimal families differ"
        return None

    @run("associated-primes-are-annihilators")
    def _assoc_ann():
        annihilators = {annihilator(algebra, u) for u in range(1, algebra.order)}
        for x, p in associated_primes(algebra):
            if not is_prime(algebra, p):
                return f"associated {_labels(algebra, p)} is not prime"
            if not is_saturated(algebra, p):
                return f"associated {_labels(algebra, p)} is not saturated"
            if p not in annihilators:
                return f"associated {_labels(algebra, p)} is no annihilator"
        return None

    @run("primary-radical-is-prime")
    def _primary_rad():
        for q in ideals:
            if is_primary(algebra, q) and not is_prime(algebra, radical(algebra, q)):
                return f"r({_labels(algebra, q)}) is not prime"
        return None

    @run("primary-intersections-stay-primary")
    def _primary_meet():
        by_radical: dict[int, list[int]] = {}
        for q in ideals:
            if is_primary(algebra, q):
                by_radical.setdefault(radical(algebra, q), []).append(q)
        for p, group in by_radical.items():
            meet_all = full
            for q in group:
                meet_all &= q
            for a in group:
                for b in group:
                    c = a & b
                    if not is_primary(algebra, c) or radical(algebra, c) != p:
                        return (
                            f"{_labels(algebra, a)} meet {_labels(algebra, b)} "
                            "is not primary for the same prime"
                        )
            if not is_primary(algebra, meet_all) or radical(algebra, meet_all) != p:
                return f"whole family meet fails for {_labels(algebra, p)}"
        return None

    @run("weak-decomposition-exact")
    def _weak_dec():
        for j in proper_saturated:
            if radical(algebra, j) != j:
                continue
            result = weak_decompose(algebra, j)
            for c in result.components:
                if not is_prime(algebra, c) or not is_saturated(algebra, c):
                    return f"component {_labels(algebra, c)} of {_labels(algebra, j)}"
            if result.intersection() != j:
                return f"intersection drifted for {_labels(algebra, j)}"
            slim = minimalize(result)
            if slim.intersection() != j:
                return f"minimalize broke {_labels(algebra, j)}"
            for node, (u, v) in result.split_trace:
                if node >> u & 1 or node >> v & 1 or not node >> algebra.mul[u][v] & 1:
                    return f"bad split witness at {_labels(algebra, node)}"
        return None

    @run("radical-decomposition-matches-minimal-primes")
    def _rad_dec_minpr():
        if algebra.is_trivial:
            return None
        result = radical_decomposition(algebra, 1)
        comps = set(result.components)
        minimal = min_primes(algebra)
        if not set(minimal) <= comps:
            return "a minimal prime is missing from the components"
        slim = minimalize(result)
        if tuple(sorted(slim.components, key=lambda m: (m.bit_count(), m))) != minimal:
            return "minimalized components differ from the minimal primes"
        return None

    @run("evans-property")
    def _evans():
        for i in proper_saturated:
            report = evans_report(algebra, i)
            if not report.passed:
                return f"evans fails at {_labels(algebra, i)}"
        return None

    @run("laskerian-implies-evans")
    def _lask_evans():
        report = laskerian_check(algebra)
        if not report.laskerian:
            return None
        for i in proper_saturated:
            if not evans_report(algebra, i).passed:
                return f"laskerian algebra fails evans at {_labels(algebra, i)}"
        return None

    @run("divisor-sets")
    def _divisors():
        for i in ideals:
            if i == full:
                continue
            if i & ~divisor_set(algebra, i):
                return f"D({_labels(algebra, i)}) does not contain the ideal"
        if not algebra.is_trivial:
            if divisor_set(algebra, 1) != zero_divisors(algebra) | 1:
                return "D({0}) differs from the zero divisors plus zero"
        return None

    @run("standard")
    def _standard():
        ok, _cover = is_standard(algebra)
        if not ok:
            return "zero divisors are not a union of saturated primes"
        return None

    return AuditResult(algebra=algebra, checks=tuple(checks))

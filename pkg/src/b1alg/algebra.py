"""Finite characteristic-one semirings given by validated Cayley tables.

A B1-algebra is a commutative unitary semiring whose addition is idempotent
(equivalently, 1 + 1 = 1).  Algebras here are finite: a tuple of element
labels plus addition and multiplication tables indexed by element position.
Element 0 is always the additive identity; the position of the
multiplicative identity is stored explicitly.

Everything downstream (ideals, spectra, decompositions) assumes the axioms
hold, so construction goes through an exhaustive checker that either returns
an immutable algebra or reports every violated axiom with a concrete
witness.
"""

from __future__ import annotations

import os
import warnings
from dataclasses import dataclass

DEFAULT_ENUMERATION_BOUND = 20
ENUMERATION_BOUND_ENV = "B1ALG_ENUM_BOUND"

# Labels travel through files and comma-separated CLI flags.
_FORBIDDEN_IN_LABEL = ("#", ",")


def enumeration_bound() -> int:
    """Largest algebra order for which exhaustive subset search is allowed."""
    raw = os.environ.get(ENUMERATION_BOUND_ENV)
    if raw is None:
        return DEFAULT_ENUMERATION_BOUND
    try:
        value = int(raw)
    except ValueError:
        raise AlgebraError(
            f"{ENUMERATION_BOUND_ENV} must be an integer, got {raw!r}"
        ) from None
    if value < 1:
        raise AlgebraError(f"{ENUMERATION_BOUND_ENV} must be positive, got {value}")
    return value


class AlgebraError(ValueError):
    """Invalid input: bad tables, bad labels, or a broken precondition."""


class EnumerationBoundError(AlgebraError):
    """The algebra is too large for exhaustive subset enumeration."""


class EnumerationBoundWarning(UserWarning):
    """A construction produced an algebra larger than the enumeration bound."""


@dataclass(frozen=True)
class Violation:
    """One failed axiom with the elements (as indices) that witness it."""

    axiom: str
    witness: tuple[int, ...]


@dataclass(frozen=True)
class AxiomReport:
    valid: bool
    violations: tuple[Violation, ...]


class AxiomError(AlgebraError):
    """Raised when tables fail the axioms; carries the full report."""

    def __init__(self, report: AxiomReport):
        self.report = report
        first = report.violations[0]
        extra = len(report.violations) - 1
        msg = f"axiom {first.axiom} violated at {first.witness}"
        if extra:
            msg += f" (and {extra} further violation{'s' if extra > 1 else ''})"
        super().__init__(msg)


class Algebra:
    """Immutable finite B1-algebra.

    ``add`` and ``mul`` are tuples of tuples of element indices;
    ``add[a][b]`` is the index of a + b.  ``zero`` is always 0.
    Instances compare and hash structurally, so equal tables built twice
    share memoized enumeration results.
    """

    __slots__ = ("names", "add", "mul", "zero", "one", "index", "_hash")

    def __init__(
        self,
        names: tuple[str, ...],
        add: tuple[tuple[int, ...], ...],
        mul: tuple[tuple[int, ...], ...],
        one: int,
    ):
        self.names = tuple(names)
        self.add = tuple(tuple(row) for row in add)
        self.mul = tuple(tuple(row) for row in mul)
        self.zero = 0
        self.one = one
        self.index = {name: i for i, name in enumerate(self.names)}
        self._hash = hash((self.names, self.add, self.mul, one))

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def is_trivial(self) -> bool:
        """True for the one-element algebra, where zero and one coincide."""
        return len(self.names) == 1

    def elements(self) -> range:
        return range(len(self.names))

    def plus(self, a: int, b: int) -> int:
        return self.add[a][b]

    def times(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def leq(self, a: int, b: int) -> bool:
        """Natural order: a <= b iff a + b = b.  Zero is the minimum."""
        return self.add[a][b] == b

    def power(self, a: int, k: int) -> int:
        """a**k for k >= 1 (k = 0 is deliberately unsupported)."""
        if k < 1:
            raise AlgebraError(f"exponent must be >= 1, got {k}")
        acc = a
        for _ in range(k - 1):
            acc = self.mul[acc][a]
        return acc

    def label(self, a: int) -> str:
        return self.names[a]

    def element(self, label: str) -> int:
        try:
            return self.index[label]
        except KeyError:
            raise AlgebraError(f"unknown label {label!r}") from None

    def __eq__(self, other) -> bool:
        if not isinstance(other, Algebra):
            return NotImplemented
        return (
            self.names == other.names
            and self.add == other.add
            and self.mul == other.mul
            and self.one == other.one
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Algebra(order={self.order}, names={self.names!r})"


def check_axioms(
    add: tuple[tuple[int, ...], ...],
    mul: tuple[tuple[int, ...], ...],
    one: int,
) -> AxiomReport:
    """Exhaustively test the B1-algebra axioms on index tables.

    Returns the complete list of violations; every witness is a tuple of
    element indices in the order the axiom quantifies them.  Zero is
    position 0 by convention.
    """
    n = len(add)
    rng = range(n)
    out: list[Violation] = []

    for a in rng:
        if add[a][a] != a:
            out.append(Violation("add-idempotent", (a,)))
        if add[0][a] != a or add[a][0] != a:
            out.append(Violation("add-identity", (a,)))
        if mul[one][a] != a or mul[a][one] != a:
            out.append(Violation("mul-identity", (a,)))
        if mul[0][a] != 0 or mul[a][0] != 0:
            out.append(Violation("mul-zero-absorbs", (a,)))
    for a in rng:
        for b in rng:
            if add[a][b] != add[b][a]:
                out.append(Violation("add-commutative", (a, b)))
            if mul[a][b] != mul[b][a]:
                out.append(Violation("mul-commutative", (a, b)))
    for a in rng:
        for b in rng:
            for c in rng:
                if add[add[a][b]][c] != add[a][add[b][c]]:
                    out.append(Violation("add-associative", (a, b, c)))
                if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
                    out.append(Violation("mul-associative", (a, b, c)))
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
                    out.append(Violation("left-distributive", (a, b, c)))
                if mul[add[b][c]][a] != add[mul[b][a]][mul[c][a]]:
                    out.append(Violation("right-distributive", (a, b, c)))
    # Implied by idempotency but checked on its own so a broken table
    # names the defining axiom directly.
    if add[one][one] != one:
        out.append(Violation("characteristic-one", (one,)))
    if n > 1 and one == 0:
        out.append(Violation("zero-is-not-one", (0,)))

    return AxiomReport(valid=not out, violations=tuple(out))


def build_algebra(
    names: list[str] | tuple[str, ...],
    add: list[list[str]],
    mul: list[list[str]],
    zero: str,
    one: str,
) -> Algebra:
    """Validate label tables and return the algebra they define.

    The zero label must be listed first (bitmask conventions downstream
    rely on it).  Dimension or label problems raise AlgebraError; axiom
    failures raise AxiomError carrying the complete violation report.
    """
    names = tuple(str(n) for n in names)
    if len(set(names)) != len(names):
        dup = next(n for i, n in enumerate(names) if n in names[:i])
        raise AlgebraError(f"duplicate label {dup!r}")
    for name in names:
        if not name or any(ch in name for ch in _FORBIDDEN_IN_LABEL) or name.split() != [name]:
            raise AlgebraError(
                f"bad label {name!r}: labels are non-empty and contain no "
                "whitespace, '#' or ','"
            )
    n = len(names)
    index = {name: i for i, name in enumerate(names)}
    if zero not in index:
        raise AlgebraError(f"unknown zero label {zero!r}")
    if one not in index:
        raise AlgebraError(f"unknown one label {one!r}")
    if index[zero] != 0:
        raise AlgebraError(f"zero element {zero!r} must be listed first")

    def to_indices(table, what: str):
        if len(table) != n:
            raise AlgebraError(f"{what} table has {len(table)} rows, expected {n}")
        rows = []
        for i, row in enumerate(table):
            if len(row) != n:
                raise AlgebraError(
                    f"{what} table row {i + 1} ({names[i]!r}) has "
                    f"{len(row)} entries, expected {n}"
                )
            try:
                rows.append(tuple(index[str(entry)] for entry in row))
            except KeyError as exc:
                raise AlgebraError(
                    f"{what} table row {i + 1}: unknown label {exc.args[0]!r}"
                ) from None
        return tuple(rows)

    add_idx = to_indices(add, "add")
    mul_idx = to_indices(mul, "mul")
    report = check_axioms(add_idx, mul_idx, index[one])
    if not report.valid:
        raise AxiomError(report)
    return Algebra(names, add_idx, mul_idx, index[one])


def _certified(
    names: tuple[str, ...],
    add: tuple[tuple[int, ...], ...],
    mul: tuple[tuple[int, ...], ...],
    one: int,
) -> Algebra:
    # Internal constructors are valid by construction; the checker still
    # runs so a bug here cannot leak an invalid algebra.
    report = check_axioms(add, mul, one)
    if not report.valid:
        raise AxiomError(report)
    return Algebra(names, add, mul, one)


def direct_product(a: Algebra, b: Algebra) -> Algebra:
    """Componentwise product; element (i, j) gets the label 'i.j'."""
    na, nb = a.order, b.order
    names = tuple(f"{a.names[i]}.{b.names[j]}" for i in range(na) for j in range(nb))

    def table(ta, tb):
        return tuple(
            tuple(ta[i][k] * nb + tb[j][l] for k in range(na) for l in range(nb))
            for i in range(na)
            for j in range(nb)
        )

    order = na * nb
    if order > enumeration_bound():
        warnings.warn(
            f"product algebra of order {order} exceeds the enumeration "
            f"bound {enumeration_bound()}; subset enumeration will refuse it",
            EnumerationBoundWarning,
            stacklevel=2,
        )
    return _certified(names, table(a.add, b.add), table(a.mul, b.mul), a.one * nb + b.one)


def chain_algebra(n: int) -> Algebra:
    """Total order 0 < c1 < ... < 1 with add = max and mul = min.

    Every ideal of a chain is a down-set, and every proper ideal is prime;
    chains are the simplest saturated-spectrum test family.
    """
    if n < 2:
        raise AlgebraError(f"chain algebra needs order >= 2, got {n}")
    names = ("0",) + tuple(f"c{i}" for i in range(1, n - 1)) + ("1",)
    add = tuple(tuple(max(i, j) for j in range(n)) for i in range(n))
    mul = tuple(tuple(min(i, j) for j in range(n)) for i in range(n))
    return _certified(names, add, mul, n - 1)


def _b1() -> Algebra:
    return chain_algebra(2)


def _trivial() -> Algebra:
    return _certified(("0",), ((0,),), ((0,),), 0)


# The six-element builtin "example-6-2": ordering (0, z, x, y, u, 1) with
# z + x = x, z + y = y, x + y = u, u + 1 = 1, z**2 = 0, x and y orthogonal
# idempotents (xy = 0), u = x + y.  All remaining entries are forced by
# associativity and distributivity; _certified re-verifies that completion
# on every construction.  Its zero ideal is not an intersection of
# saturated primary ideals, which makes it the stock counterexample for
# decomposition questions.
_EX62_NAMES = ("0", "z", "x", "y", "u", "1")
_EX62_ADD = (
    (0, 1, 2, 3, 4, 5),
    (1, 1, 2, 3, 4, 5),
    (2, 2, 2, 4, 4, 5),
    (3, 3, 4, 3, 4, 5),
    (4, 4, 4, 4, 4, 5),
    (5, 5, 5, 5, 5, 5),
)
_EX62_MUL = (
    (0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1),
    (0, 0, 2, 0, 2, 2),
    (0, 0, 0, 3, 3, 3),
    (0, 0, 2, 3, 4, 4),
    (0, 1, 2, 3, 4, 5),
)


def _example_6_2() -> Algebra:
    return _certified(_EX62_NAMES, _EX62_ADD, _EX62_MUL, 5)


def _bool_algebra(k: int) -> Algebra:
    if k < 1:
        raise AlgebraError(f"bool algebra needs k >= 1, got {k}")
    out = _b1()
    for _ in range(k - 1):
        out = direct_product(out, _b1())
    return out


BUILTIN_NAMES = ("b1", "trivial", "example-6-2", "chain-N", "bool-K")


def builtin(name: str) -> Algebra:
    """Return a named builtin algebra.

    Fixed names: b1, trivial, example-6-2.  Parameterized families:
    chain-N (N >= 2) and bool-K (K-fold product of b1, K >= 1).
    """
    if name == "b1":
        return _b1()
    if name == "trivial":
        return _trivial()
    if name == "example-6-2":
        return _example_6_2()
    for prefix, make in (("chain-", chain_algebra), ("bool-", _bool_algebra)):
        if name.startswith(prefix):
            try:
                param = int(name[len(prefix):])
            except ValueError:
                raise AlgebraError(f"bad parameter in builtin name {name!r}") from None
            return make(param)
    raise AlgebraError(
        f"unknown builtin {name!r}; available: {', '.join(BUILTIN_NAMES)}"
    )

"""Shared fixtures-behind-the-fixtures: fleets, random algebras, mask helpers."""

from __future__ import annotations

import random
import warnings

import b1alg as b


def msk(algebra: b.Algebra, labels: str) -> int:
    """Mask from a comma-joined label string ('' means the zero ideal)."""
    out = 1
    for token in labels.split(","):
        if token:
            out |= 1 << algebra.index[token]
    return out


def lbl(algebra: b.Algebra, mask: int) -> str:
    return ",".join(b.member_labels(algebra, mask))


def named_base_fleet() -> dict[str, b.Algebra]:
    """b1, the six-element builtin, chains 2..6, and their pairwise products
    up to order 12."""
    named: dict[str, b.Algebra] = {
        "b1": b.builtin("b1"),
        "example-6-2": b.builtin("example-6-2"),
    }
    for n in range(2, 7):
        named[f"chain-{n}"] = b.chain_algebra(n)
    items = list(named.items())
    fleet = dict(named)
    for i, (ni, ai) in enumerate(items):
        for nj, aj in items[i:]:
            if ai.order * aj.order <= 12:
                fleet[f"{ni}*{nj}"] = b.direct_product(ai, aj)
    return fleet


def _product_pool() -> list[b.Algebra]:
    seeds = [
        b.builtin("b1"),
        b.builtin("example-6-2"),
        b.chain_algebra(3),
        b.chain_algebra(4),
        b.chain_algebra(5),
    ]
    pool = list(seeds)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", b.EnumerationBoundWarning)
        for i in range(len(seeds)):
            for j in range(i, len(seeds)):
                pool.append(b.direct_product(seeds[i], seeds[j]))
    return pool


def _random_subalgebra(rng: random.Random, base: b.Algebra, max_order: int):
    gens = rng.sample(range(base.order), k=rng.randint(1, min(3, base.order)))
    closure = {0, base.one, *gens}
    changed = True
    while changed and len(closure) <= max_order:
        changed = False
        for x in list(closure):
            for y in list(closure):
                for v in (base.add[x][y], base.mul[x][y]):
                    if v not in closure:
                        closure.add(v)
                        changed = True
    if len(closure) > max_order:
        return None
    members = sorted(closure)
    names = [base.names[m] for m in members]
    add = [[base.names[base.add[x][y]] for y in members] for x in members]
    mul = [[base.names[base.mul[x][y]] for y in members] for x in members]
    return b.build_algebra(names, add, mul, names[0], base.names[base.one])


def _random_quotient(rng: random.Random, base: b.Algebra, max_order: int):
    gens = rng.sample(range(base.order), k=rng.randint(0, 2))
    ideal = b.generated_ideal(base, gens)
    qmap = b.quotient(base, b.bourne_congruence(base, ideal))
    if qmap.target.order > max_order:
        return None
    return qmap.target


def random_fleet(count: int = 200, seed: int = 20120901, max_order: int = 6):
    """Deterministic rejection-sampled fleet of valid algebras.

    Candidates are random generated subalgebras and random Bourne quotients
    of products of the seed algebras; anything that closes over the size
    cap is rejected.  Every survivor passes the axiom checker on the way
    out of build_algebra / quotient.
    """
    rng = random.Random(seed)
    pool = _product_pool()
    fleet: list[b.Algebra] = []
    while len(fleet) < count:
        base = pool[rng.randrange(len(pool))]
        if rng.random() < 0.5:
            made = _random_subalgebra(rng, base, max_order)
        else:
            made = _random_quotient(rng, base, max_order)
        if made is not None:
            fleet.append(made)
    return fleet

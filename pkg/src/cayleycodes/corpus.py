"""The small-group corpus used by the verification suites and tests."""

from __future__ import annotations

import itertools

from .groups import FiniteGroup, from_table, make_abelian, make_cyclic, make_dihedral


def symmetric_group(n: int) -> FiniteGroup:
    """S_n as a composition table over itertools.permutations order.

    The identity permutation sorts first, so it sits at index 0.
    (p * q)(x) = p(q(x)).
    """
    perms = list(itertools.permutations(range(n)))
    pos = {p: i for i, p in enumerate(perms)}
    table = [
        [pos[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms
    ]
    g = from_table(table)
    labels = tuple(str(p) for p in perms)
    return FiniteGroup(g.order, g.mult, g.identity, g.inv, labels, "table")


def quaternion_group() -> FiniteGroup:
    """Q8 with elements 1, -1, i, -i, j, -j, k, -k at indices 0..7."""
    units = ["1", "i", "j", "k"]

    def mul(a, b):
        # returns (sign, unit) for unit quaternion product
        (sa, ua), (sb, ub) = a, b
        if ua == "1":
            return sa * sb, ub
        if ub == "1":
            return sa * sb, ua
        if ua == ub:
            return -sa * sb, "1"
        order = "ijk"
        ia, ib = order.index(ua), order.index(ub)
        uc = order[3 - ia - ib]
        sign = 1 if (ib - ia) % 3 == 1 else -1
        return sa * sb * sign, uc

    elems = [(s, u) for u in units for s in (1, -1)]
    pos = {e: i for i, e in enumerate(elems)}
    table = [[pos[mul(a, b)] for b in elems] for a in elems]
    g = from_table(table)
    labels = tuple(("" if s == 1 else "-") + u for s, u in elems)
    return FiniteGroup(g.order, g.mult, g.identity, g.inv, labels, "table")


def abelian_types(order: int):
    """Canonical prime-power factor multisets for the abelian groups of a
    given order, excluding the cyclic type (all factors coprime)."""
    factors = {}
    n, p = order, 2
    while p * p <= n:
        while n % p == 0:
            factors[p] = factors.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    per_prime = []
    for p, k in sorted(factors.items()):
        per_prime.append([[p**part for part in pt] for pt in _partitions(k)])
    out = []
    for combo in itertools.product(*per_prime):
        flat = tuple(sorted(x for group in combo for x in group))
        if all(len(group) == 1 for group in combo):
            continue  # cyclic
        out.append(flat)
    return sorted(set(out))


def _partitions(k: int):
    if k == 0:
        yield []
        return
    for first in range(k, 0, -1):
        for rest in _partitions(k - first):
            if not rest or rest[0] <= first:
                yield [first] + rest


def corpus_groups(max_order: int = 24, include_specials: bool = True):
    """The acceptance corpus: every cyclic, dihedral and (non-cyclic)
    abelian-product group of order <= max_order, plus S3, Q8 and the
    order-32 group Z2 x Z4 x Z4 when specials are requested.

    Returns a list of (spec_string, group) pairs.
    """
    out = []
    for n in range(1, max_order + 1):
        out.append((f"cyclic:{n}", make_cyclic(n)))
    for n in range(3, max_order // 2 + 1):
        out.append((f"dihedral:{n}", make_dihedral(n)))
    for n in range(4, max_order + 1):
        for typ in abelian_types(n):
            spec = "abelian:" + ",".join(str(m) for m in typ)
            out.append((spec, make_abelian(typ)))
    if include_specials:
        out.append(("table:S3", symmetric_group(3)))
        out.append(("table:Q8", quaternion_group()))
        out.append(("abelian:2,4,4", make_abelian((2, 4, 4))))
    return out

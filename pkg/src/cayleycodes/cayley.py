"""Cayley graphs and the three equivalent (total) perfect code checks.

x and y are adjacent in Cay(G, S) iff y x^-1 in S, so the neighbourhood of
a vertex x is S x.  The module provides the definitional ball check, the
group-ring product check, the transversal check for subgroups, and a
brute-force exact-cover enumeration of all (total) perfect codes.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BoundExceededError, CayleyCodesError
from .groups import FiniteGroup, Subgroup, left_cosets

DEFAULT_ENUMERATION_BOUND = 24


@dataclass(frozen=True)
class ConnectionSet:
    """An inverse-closed, identity-free subset of a group."""

    group: FiniteGroup
    elements: frozenset[int]

    def __post_init__(self):
        g = self.group
        if g.identity in self.elements:
            raise CayleyCodesError("identity in connection set")
        for s in self.elements:
            if g.inv[s] not in self.elements:
                raise CayleyCodesError(
                    f"connection set not inverse-closed: {s} without {g.inv[s]}"
                )

    def __len__(self):
        return len(self.elements)

    def sorted(self) -> tuple[int, ...]:
        return tuple(sorted(self.elements))


@dataclass(frozen=True)
class CayleyGraph:
    group: FiniteGroup
    conn: ConnectionSet

    def neighbours(self, v: int) -> frozenset[int]:
        g = self.group
        return frozenset(g.mult[s][v] for s in self.conn.elements)

    def closed_ball(self, v: int) -> frozenset[int]:
        return self.neighbours(v) | {v}

    @property
    def degree(self) -> int:
        return len(self.conn.elements)


def connection_set(g: FiniteGroup, elements) -> ConnectionSet:
    return ConnectionSet(g, frozenset(elements))


def build_cayley(g: FiniteGroup, s) -> CayleyGraph:
    if not isinstance(s, ConnectionSet):
        s = connection_set(g, s)
    elif s.group is not g and s.group != g:
        raise CayleyCodesError("connection set belongs to a different group")
    return CayleyGraph(g, s)


def is_perfect_code(graph: CayleyGraph, code) -> bool:
    """Do the closed balls around the code vertices partition the graph?"""
    n = graph.group.order
    count = [0] * n
    for c in code:
        for v in graph.closed_ball(c):
            count[v] += 1
    return all(k == 1 for k in count)


def is_total_perfect_code(graph: CayleyGraph, code) -> bool:
    """Does every vertex have exactly one neighbour in the code?"""
    n = graph.group.order
    count = [0] * n
    for c in code:
        for v in graph.neighbours(c):
            count[v] += 1
    return all(k == 1 for k in count)


# ---------------------------------------------------------------------------
# group-ring form


def group_ring_indicator(g: FiniteGroup, subset) -> list[int]:
    coeffs = [0] * g.order
    for x in subset:
        coeffs[x] = 1
    return coeffs


def group_ring_product(g: FiniteGroup, u, v) -> list[int]:
    """Convolution over the group: coefficient of x is sum_h u(h) v(h^-1 x)."""
    out = [0] * g.order
    mult = g.mult
    for h, uh in enumerate(u):
        if uh == 0:
            continue
        row = mult[h]
        for k, vk in enumerate(v):
            if vk:
                out[row[k]] += uh * vk
    return out


def group_ring_check_perfect(g: FiniteGroup, s, code) -> bool:
    """True iff indicator(S u {e}) * indicator(C) is the all-ones vector."""
    if isinstance(s, ConnectionSet):
        s = s.elements
    u = group_ring_indicator(g, set(s) | {g.identity})
    v = group_ring_indicator(g, code)
    return group_ring_product(g, u, v) == [1] * g.order


def group_ring_check_total(g: FiniteGroup, s, code) -> bool:
    """True iff indicator(S) * indicator(C) is the all-ones vector."""
    if isinstance(s, ConnectionSet):
        s = s.elements
    u = group_ring_indicator(g, s)
    v = group_ring_indicator(g, code)
    return group_ring_product(g, u, v) == [1] * g.order


# ---------------------------------------------------------------------------
# transversal form (for subgroup codes)


def is_left_transversal(g: FiniteGroup, h: Subgroup, subset) -> bool:
    """Does the subset contain exactly one element of each left coset xH?"""
    subset = set(subset)
    blocks = left_cosets(g, h)
    if len(subset) != len(blocks):
        return False
    return all(len(subset.intersection(b)) == 1 for b in blocks)


def subgroup_code_transversal_check(
    g: FiniteGroup, h: Subgroup, s, total: bool = False
) -> bool:
    """H is a perfect code in Cay(G,S) iff S u {e} is a left transversal of
    H in G; a total perfect code iff S itself is."""
    if isinstance(s, ConnectionSet):
        s = s.elements
    probe = set(s) if total else set(s) | {g.identity}
    return is_left_transversal(g, h, probe)


# ---------------------------------------------------------------------------
# brute-force enumeration (the universal oracle)


def enumerate_perfect_codes(
    graph: CayleyGraph,
    total: bool = False,
    max_order: int = DEFAULT_ENUMERATION_BOUND,
):
    """All (total) perfect codes, by exact cover over closed (open) balls.

    Backtracking branches on the uncovered vertex with the fewest usable
    ball centres; no randomization, so the output order is stable.  Output
    is sorted lexicographically as tuples.
    """
    n = graph.group.order
    if n > max_order:
        raise BoundExceededError(
            f"enumerate_perfect_codes bound exceeded: |G|={n} > {max_order}"
        )
    balls = [
        graph.neighbours(v) if total else graph.closed_ball(v) for v in range(n)
    ]
    full = frozenset(range(n))
    solutions = []

    def search(covered, chosen):
        if covered == full:
            solutions.append(tuple(sorted(chosen)))
            return
        best_v, best_cands = None, None
        for v in range(n):
            if v in covered:
                continue
            cands = [
                c
                for c in range(n)
                if v in balls[c] and balls[c].isdisjoint(covered)
            ]
            if best_cands is None or len(cands) < len(best_cands):
                best_v, best_cands = v, cands
                if not cands:
                    return
        for c in best_cands:
            search(covered | balls[c], chosen + [c])

    if total and graph.degree == 0:
        return [] if n > 0 else [()]
    search(frozenset(), [])
    solutions.sort()
    return solutions


def code_report(
    g: FiniteGroup,
    spec: str,
    s,
    code,
    subgroup: Subgroup | None = None,
    total: bool = False,
) -> dict:
    """The code-report JSON object for one (group, S, C) triple.

    The "checks" sub-object carries the three equivalent tests for the
    requested mode (perfect by default, total when ``total`` is set); the
    transversal entry is null unless C is presented as a subgroup.
    """
    conn = s if isinstance(s, ConnectionSet) else connection_set(g, s)
    graph = build_cayley(g, conn)
    code = sorted(set(code))
    definition_perfect = is_perfect_code(graph, code)
    definition_total = is_total_perfect_code(graph, code)
    if total:
        definition = definition_total
        ring = group_ring_check_total(g, conn, code)
    else:
        definition = definition_perfect
        ring = group_ring_check_perfect(g, conn, code)
    transversal = None
    if subgroup is not None:
        transversal = subgroup_code_transversal_check(g, subgroup, conn, total)
    return {
        "group": spec,
        "connection_set": list(conn.sorted()),
        "code": list(code),
        "perfect": definition_perfect,
        "total_perfect": definition_total,
        "checks": {
            "definition": definition,
            "group_ring": ring,
            "transversal": transversal,
        },
    }

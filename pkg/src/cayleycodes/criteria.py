"""Subgroup (total) perfect code criteria and explicit constructions.

Implements the key property for normal subgroups -- for every g with
g^2 in H there is h in H with (gh)^2 = e -- together with the parity
shortcut, the cyclic and dihedral classifications, the abelian Sylow-2
reduction and projection criterion, the constructive connection sets, and
a generic backtracking search for an inverse-closed transversal that works
for arbitrary subgroups.
"""

from __future__ import annotations

from dataclasses import dataclass

from .basis import abelian_basis
from .cayley import ConnectionSet, connection_set
from .errors import BoundExceededError, CayleyCodesError
from .groups import (
    FiniteGroup,
    Subgroup,
    is_normal,
    left_cosets,
    make_dihedral,
    subgroup_generated,
    sylow_two_subgroup,
)

DEFAULT_GENERIC_INDEX_BOUND = 16
DEFAULT_GENERIC_ORDER_BOUND = 32


@dataclass(frozen=True)
class CriterionVerdict:
    """Outcome of a subgroup-code decision.

    ``witness`` is None, or {"type": "failing_g", "value": g}, or
    {"type": "connection_set", "value": [indices]}.
    """

    perfect: bool
    total: bool
    method: str
    witness: dict | None = None

    def to_json(self, spec: str, h: Subgroup) -> dict:
        w = self.witness or {"type": "none", "value": None}
        return {
            "group": spec,
            "subgroup": list(h.elements),
            "perfect": self.perfect,
            "total_perfect": self.total,
            "method": self.method,
            "witness": w,
        }


@dataclass(frozen=True)
class AbelianTwoGroupBasis:
    """An independent generating family of an abelian 2-group, with the
    exponent tuple of every element over those generators."""

    generators: tuple[int, ...]
    orders: tuple[int, ...]
    exponents: dict

    def projects_onto(self, subset, i: int) -> bool:
        """Does the subset project onto the full i-th cyclic factor?

        The projection of h is a_i^(e_i); it generates <a_i> iff some
        element of the subset has an odd i-th exponent.
        """
        return any(self.exponents[h][i] % 2 == 1 for h in subset)


# ---------------------------------------------------------------------------
# the key property and normal-subgroup criterion


def property_one_holds(g: FiniteGroup, h: Subgroup):
    """For every x with x^2 in H, is there k in H with (xk)^2 = e?

    Returns (True, None) or (False, least failing x).
    """
    hs = h.element_set()
    e = g.identity
    for x in range(g.order):
        if g.mult[x][x] not in hs:
            continue
        if not any(g.mult[g.mult[x][k]][g.mult[x][k]] == e for k in hs):
            return False, x
    return True, None


def normal_subgroup_code(g: FiniteGroup, h: Subgroup) -> CriterionVerdict:
    """Perfect iff the key property holds; total additionally needs |H| even."""
    if not is_normal(g, h):
        raise CayleyCodesError("normal_subgroup_code requires a normal subgroup")
    ok, bad = property_one_holds(g, h)
    witness = None if ok else {"type": "failing_g", "value": bad}
    return CriterionVerdict(
        perfect=ok, total=ok and h.order % 2 == 0, method="property1", witness=witness
    )


def parity_criterion(g: FiniteGroup, h: Subgroup) -> CriterionVerdict | None:
    """Sufficient-only shortcut: odd |H| or odd index settles the question.

    Returns None when both |H| and [G:H] are even (the full criterion must
    decide).  Odd |H| forces total=False since total perfect codes have
    even size.
    """
    if not is_normal(g, h):
        raise CayleyCodesError("parity_criterion requires a normal subgroup")
    index = g.order // h.order
    if h.order % 2 == 1:
        return CriterionVerdict(perfect=True, total=False, method="parity")
    if index % 2 == 1:
        return CriterionVerdict(perfect=True, total=True, method="parity")
    return None


# ---------------------------------------------------------------------------
# constructive connection sets (normal case)


def construct_connection_set_normal(
    g: FiniteGroup, h: Subgroup, total: bool = False
) -> ConnectionSet:
    """Build S (or R) realizing a normal subgroup as a (total) perfect code.

    Quotient cosets whose square is H contribute one involution y_i = x_i h_i
    with (x_i h_i)^2 = e; the remaining cosets are paired with their inverse
    cosets and contribute {g_j, g_j^-1}.  The total case appends an
    involution g_0 from H.  Representatives and fixers are least-index, so
    the output is deterministic.
    """
    if not is_normal(g, h):
        raise CayleyCodesError("construction requires a normal subgroup")
    ok, bad = property_one_holds(g, h)
    if not ok:
        raise CayleyCodesError(f"key property fails at g={bad}; no construction")
    hs = sorted(h.element_set())
    hset = h.element_set()
    blocks = left_cosets(g, h)
    block_of = {}
    for bi, block in enumerate(blocks):
        for x in block:
            block_of[x] = bi
    e_block = block_of[g.identity]
    e = g.identity
    out = []
    done = {e_block}
    for bi, block in enumerate(blocks):
        if bi in done:
            continue
        rep = block[0]
        if g.mult[rep][rep] in hset:
            # involution in G/H: replace the representative by x_i h_i
            fixer = next(
                k for k in hs if g.mult[g.mult[rep][k]][g.mult[rep][k]] == e
            )
            out.append(g.mult[rep][fixer])
            done.add(bi)
        else:
            rinv = g.inv[rep]
            out.extend([rep, rinv])
            done.add(bi)
            done.add(block_of[rinv])
    if total:
        involutions = [k for k in hs if k != e and g.mult[k][k] == e]
        if not involutions:
            raise CayleyCodesError("total construction requires |H| even")
        out.append(involutions[0])
    return connection_set(g, out)


# ---------------------------------------------------------------------------
# cyclic, abelian and dihedral specializations


def _is_cyclic(g: FiniteGroup) -> bool:
    return g.order in g.element_orders


def cyclic_criterion(g: FiniteGroup, h: Subgroup) -> CriterionVerdict:
    """Pure arithmetic on |H| and [G:H] for cyclic G."""
    if not _is_cyclic(g):
        raise CayleyCodesError("cyclic_criterion requires a cyclic group")
    index = g.order // h.order
    perfect = h.order % 2 == 1 or index % 2 == 1
    total = h.order % 2 == 0 and index % 2 == 1
    return CriterionVerdict(perfect=perfect, total=total, method="cyclic")


def abelian_sylow_reduction(g: FiniteGroup, h: Subgroup):
    """Return (P, H n P): criteria may run inside the Sylow 2-subgroup."""
    if not g.is_abelian:
        raise CayleyCodesError("Sylow reduction requires an abelian group")
    p = sylow_two_subgroup(g)
    inter = tuple(sorted(h.element_set() & p.element_set()))
    return p, subgroup_generated(g, inter)


def two_group_basis(
    g: FiniteGroup, p: Subgroup, scan_key=None
) -> AbelianTwoGroupBasis:
    """Primary decomposition of an abelian 2-group given as a subgroup."""
    for x in p.elements:
        o = g.element_orders[x]
        if o & (o - 1):
            raise CayleyCodesError("two_group_basis requires a 2-group")
    gens, orders, exponents = abelian_basis(g, p.elements, scan_key)
    return AbelianTwoGroupBasis(gens, orders, exponents)


def abelian_criterion(
    g: FiniteGroup, h: Subgroup, basis: AbelianTwoGroupBasis | None = None
) -> CriterionVerdict:
    """Projection criterion for abelian G with cyclic H n P.

    Perfect iff H n P is trivial or projects onto some cyclic factor of P;
    total iff the projection condition holds (it forces |H| even).
    """
    p, hp = abelian_sylow_reduction(g, h)
    span = g.cyclic_span(min(hp.elements, key=lambda x: -g.element_orders[x]))
    if frozenset(hp.elements) != span:
        raise CayleyCodesError(
            "abelian_criterion requires H n P cyclic; use normal_subgroup_code"
        )
    if basis is None:
        basis = two_group_basis(g, p)
    projects = any(
        basis.projects_onto(hp.elements, i) for i in range(len(basis.generators))
    )
    perfect = hp.order == 1 or projects
    return CriterionVerdict(
        perfect=perfect, total=projects, method="abelian-projection"
    )


def dihedral_cyclic_criterion(n: int, t: int) -> CriterionVerdict:
    """Rotation subgroup <a^t> of the order-2n dihedral group, t | n."""
    if n < 3 or t < 1 or n % t != 0:
        raise CayleyCodesError("need t dividing n, n >= 3")
    perfect = t % 2 == 1 or (n // t) % 2 == 1
    total = t % 2 == 1 and (n // t) % 2 == 0
    return CriterionVerdict(perfect=perfect, total=total, method="dihedral")


def dihedral_criterion(n: int, h: Subgroup) -> CriterionVerdict:
    """Classify a proper subgroup of the order-2n dihedral group.

    Subgroups not inside the rotation subgroup <a> are always both perfect
    and total perfect; rotation subgroups delegate to the arithmetic
    criterion.  Uses the rotations-then-reflections element indexing.
    """
    if h.order >= 2 * n:
        raise CayleyCodesError("dihedral_criterion requires a proper subgroup")
    inside_rotations = all(x < n for x in h.elements)
    if not inside_rotations:
        return CriterionVerdict(perfect=True, total=True, method="dihedral")
    return dihedral_cyclic_criterion(n, n // h.order)


def dihedral_construct_sets(n: int, t: int, s: int):
    """The explicit reflection connection sets for H = <a^t, a^s b>.

    R = {b, ba, ..., ba^(t-1)} makes H a total perfect code; the size-(t-1)
    set {a^(s-1)b, ..., a^(s-t+1)b} makes H a perfect code.  Every element
    is a reflection, hence an involution, so both sets are inverse-closed.
    Returns (R, S) as connection sets of make_dihedral(n).
    """
    if n < 3 or t <= 1 or n % t != 0 or not 0 <= s <= t - 1:
        raise CayleyCodesError("need t | n with t > 1 and 0 <= s <= t-1")
    g = make_dihedral(n)
    b = n  # index of the reflection b
    r_set = []
    for i in range(t):
        r_set.append(g.mult[b][g.power(1, i)])  # b a^i
    s_set = []
    for j in range(1, t):
        s_set.append(g.mult[g.power(1, (s - j) % n)][b])  # a^(s-j) b
    return connection_set(g, r_set), connection_set(g, s_set)


# ---------------------------------------------------------------------------
# generic backtracking decision


def _search_inverse_closed_transversal(g: FiniteGroup, h: Subgroup, total: bool):
    """Find an inverse-closed left transversal of H: containing e for the
    perfect case, identity-free for the total case.  Returns the transversal
    as a sorted tuple, or None.

    Inverse-closure is enforced on elements, not cosets: choosing x for a
    coset forces x^-1 on the coset that contains it (for non-normal H the
    inverse of a left coset need not be a left coset).
    """
    blocks = left_cosets(g, h)
    block_of = {}
    for bi, block in enumerate(blocks):
        for x in block:
            block_of[x] = bi
    k = len(blocks)
    chosen: list[int | None] = [None] * k
    e_block = block_of[g.identity]
    if not total:
        chosen[e_block] = g.identity

    def backtrack():
        bi = next((i for i in range(k) if chosen[i] is None), None)
        if bi is None:
            return True
        for x in blocks[bi]:
            if not total and x == g.identity:
                continue  # e already represents its own coset
            if total and x == g.identity:
                continue
            xi = g.inv[x]
            bj = block_of[xi]
            if bj == bi:
                if xi != x:
                    continue
                chosen[bi] = x
                if backtrack():
                    return True
                chosen[bi] = None
            else:
                if chosen[bj] is not None:
                    if chosen[bj] != xi:
                        continue
                    chosen[bi] = x
                    if backtrack():
                        return True
                    chosen[bi] = None
                else:
                    chosen[bi] = x
                    chosen[bj] = xi
                    if backtrack():
                        return True
                    chosen[bi] = None
                    chosen[bj] = None
        return False

    if backtrack():
        return tuple(sorted(x for x in chosen))
    return None


def generic_subgroup_code_decision(
    g: FiniteGroup,
    h: Subgroup,
    total: bool = False,
    max_index: int = DEFAULT_GENERIC_INDEX_BOUND,
    max_order: int = DEFAULT_GENERIC_ORDER_BOUND,
) -> CriterionVerdict:
    """Decide both modes by exhaustive transversal search; the witness
    connection set stored is the one for the requested mode."""
    index = g.order // h.order
    if index > max_index and g.order > max_order:
        raise BoundExceededError(
            f"generic search bound exceeded: index={index}, |G|={g.order}"
        )
    perfect_l = _search_inverse_closed_transversal(g, h, total=False)
    total_l = _search_inverse_closed_transversal(g, h, total=True)
    witness = None
    if total and total_l is not None:
        witness = {"type": "connection_set", "value": list(total_l)}
    elif not total and perfect_l is not None:
        s = [x for x in perfect_l if x != g.identity]
        witness = {"type": "connection_set", "value": s}
    return CriterionVerdict(
        perfect=perfect_l is not None,
        total=total_l is not None,
        method="generic-search",
        witness=witness,
    )


# ---------------------------------------------------------------------------
# dispatcher


def decide_subgroup_code(g: FiniteGroup, h: Subgroup) -> CriterionVerdict:
    """Fastest-first dispatch: parity shortcut, then the specialized
    criterion for cyclic/abelian/dihedral groups, then the normal-subgroup
    criterion, then generic search."""
    if _is_cyclic(g):
        return cyclic_criterion(g, h)
    normal = is_normal(g, h)
    if normal:
        verdict = parity_criterion(g, h)
        if verdict is not None:
            return verdict
    if g.is_abelian:
        p, hp = abelian_sylow_reduction(g, h)
        span = g.cyclic_span(max(hp.elements, key=lambda x: g.element_orders[x]))
        if frozenset(hp.elements) == span:
            return abelian_criterion(g, h)
        return normal_subgroup_code(g, h)
    if g.kind == "dihedral" and h.order < g.order:
        return dihedral_criterion(g.order // 2, h)
    if normal:
        return normal_subgroup_code(g, h)
    return generic_subgroup_code_decision(g, h)

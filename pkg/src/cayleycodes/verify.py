"""Named verification suites, shared by the CLI and the acceptance tests.

Each suite cross-checks one cluster of results over the small-group
corpus and returns a SuiteResult with a check count and a (hopefully
empty) list of failure descriptions.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field

from .cayley import (
    build_cayley,
    connection_set,
    enumerate_perfect_codes,
    group_ring_check_perfect,
    is_perfect_code,
    is_total_perfect_code,
)
from .corpus import abelian_types, corpus_groups, symmetric_group
from .criteria import (
    abelian_criterion,
    abelian_sylow_reduction,
    construct_connection_set_normal,
    cyclic_criterion,
    dihedral_construct_sets,
    dihedral_criterion,
    generic_subgroup_code_decision,
    normal_subgroup_code,
    parity_criterion,
    property_one_holds,
    two_group_basis,
)
from .errors import CayleyCodesError
from .groups import (
    all_subgroups,
    inner_automorphism,
    is_normal,
    is_power_automorphism,
    make_abelian,
    make_cyclic,
    make_dihedral,
    subgroup_generated,
)
from .pcp import (
    all_connection_sets,
    all_power_automorphisms,
    prop3_witness,
    verify_trivial_centre_corollary,
)
from .specparse import parse_element_expr
from .spectral import verify_lemma_equivalence


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, message: str):
        self.checks += 1
        if not ok:
            self.failures.append(message)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "checks": self.checks,
            "failures": list(self.failures),
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
        }


def _timed(fn):
    def wrapper(*args, **kwargs) -> SuiteResult:
        start = time.perf_counter()
        result = fn(*args, **kwargs)
        result.elapsed = time.perf_counter() - start
        return result

    return wrapper


@_timed
def suite_theorem3(max_order: int = 24, seed: int = 0) -> SuiteResult:
    """Normal-subgroup criterion vs generic search on the whole corpus,
    plus verification of the constructive connection sets."""
    res = SuiteResult("theorem3")
    for spec, g in corpus_groups(max_order):
        for h in all_subgroups(g, max_order=max(g.order, 32)):
            if not is_normal(g, h):
                continue
            verdict = normal_subgroup_code(g, h)
            search = generic_subgroup_code_decision(g, h)
            res.check(
                verdict.perfect == search.perfect and verdict.total == search.total,
                f"{spec} H={h.elements}: criterion {verdict.perfect}/{verdict.total}"
                f" != search {search.perfect}/{search.total}",
            )
            shortcut = parity_criterion(g, h)
            if shortcut is not None:
                res.check(
                    (shortcut.perfect, shortcut.total)
                    == (verdict.perfect, verdict.total),
                    f"{spec} H={h.elements}: parity shortcut disagrees",
                )
            if verdict.perfect:
                s = construct_connection_set_normal(g, h)
                res.check(
                    is_perfect_code(build_cayley(g, s), h.elements),
                    f"{spec} H={h.elements}: constructed S fails verification",
                )
            if verdict.perfect and h.order % 2 == 0:
                r = construct_connection_set_normal(g, h, total=True)
                res.check(
                    is_total_perfect_code(build_cayley(g, r), h.elements),
                    f"{spec} H={h.elements}: constructed R fails verification",
                )
                hs = h.element_set()
                res.check(
                    any(
                        x in hs and g.mult[x][x] == g.identity
                        for x in r.elements
                    ),
                    f"{spec} H={h.elements}: R lacks an involution from H",
                )
    return res


@_timed
def suite_cor3(max_order: int = 60, seed: int = 0) -> SuiteResult:
    """Cyclic parity formula vs the key-property criterion (and, at small
    orders, generic search) for every subgroup of every cyclic group."""
    res = SuiteResult("cor3")
    for n in range(1, max_order + 1):
        g = make_cyclic(n)
        for d in sorted(k for k in range(1, n + 1) if n % k == 0):
            h = subgroup_generated(g, {n // d} if d > 1 else set())
            arith = cyclic_criterion(g, h)
            full = normal_subgroup_code(g, h)
            res.check(
                (arith.perfect, arith.total) == (full.perfect, full.total),
                f"Z{n} |H|={d}: parity formula {arith.perfect}/{arith.total}"
                f" != criterion {full.perfect}/{full.total}",
            )
            if n <= 24:
                search = generic_subgroup_code_decision(g, h)
                res.check(
                    (arith.perfect, arith.total) == (search.perfect, search.total),
                    f"Z{n} |H|={d}: formula disagrees with search",
                )
    return res


@_timed
def suite_dihedral(max_order: int = 12, seed: int = 0) -> SuiteResult:
    """Dihedral classification for n = 3..max_order, with every explicit
    connection-set construction verified definitionally."""
    res = SuiteResult("dihedral")
    for n in range(3, max_order + 1):
        g = make_dihedral(n)
        for h in all_subgroups(g):
            if h.order == g.order:
                continue
            verdict = dihedral_criterion(n, h)
            search = generic_subgroup_code_decision(g, h)
            res.check(
                (verdict.perfect, verdict.total) == (search.perfect, search.total),
                f"D{2 * n} H={h.elements}: criterion disagrees with search",
            )
            if any(x >= n for x in h.elements):
                res.check(
                    verdict.perfect and verdict.total,
                    f"D{2 * n} H={h.elements}: reflection subgroup not both codes",
                )
        for t in [d for d in range(2, n + 1) if n % d == 0]:
            for s in range(t):
                r_set, s_set = dihedral_construct_sets(n, t, s)
                h = subgroup_generated(g, {t % n, n + s})
                res.check(
                    is_total_perfect_code(build_cayley(g, r_set), h.elements),
                    f"D{2 * n} t={t} s={s}: R set fails total verification",
                )
                res.check(
                    is_perfect_code(build_cayley(g, s_set), h.elements),
                    f"D{2 * n} t={t} s={s}: S set fails perfect verification",
                )
    return res


@_timed
def suite_abelian(max_order: int = 32, seed: int = 0) -> SuiteResult:
    """Projection criterion vs key property on abelian 2-groups with cyclic
    subgroups, basis-independence, and the order-32 counterexample."""
    res = SuiteResult("abelian")
    types = [(2**k,) for k in range(1, 6) if 2**k <= max_order]
    for total_exp in range(1, 6):
        if 2**total_exp > max_order:
            break
        for typ in abelian_types(2**total_exp):
            types.append(typ)
    for typ in types:
        g = make_cyclic(typ[0]) if len(typ) == 1 else make_abelian(typ)
        p, _ = abelian_sylow_reduction(g, subgroup_generated(g, set()))
        basis_a = two_group_basis(g, p)
        basis_b = two_group_basis(g, p, scan_key=lambda x: -x)
        seen = set()
        for x in range(g.order):
            h = subgroup_generated(g, {x})
            if h.elements in seen:
                continue
            seen.add(h.elements)
            proj = abelian_criterion(g, h, basis_a)
            proj_b = abelian_criterion(g, h, basis_b)
            prop = normal_subgroup_code(g, h)
            res.check(
                (proj.perfect, proj.total) == (prop.perfect, prop.total),
                f"{typ} H={h.elements}: projection {proj.perfect}/{proj.total}"
                f" != property {prop.perfect}/{prop.total}",
            )
            res.check(
                (proj.perfect, proj.total) == (proj_b.perfect, proj_b.total),
                f"{typ} H={h.elements}: verdict depends on the basis",
            )
    # the order-32 counterexample: H = <a1*a2^2, a1*a3^2>
    g = make_abelian((2, 4, 4))
    gens = [parse_element_expr(g, "a1*a2^2"), parse_element_expr(g, "a1*a3^2")]
    h = subgroup_generated(g, gens)
    ok, witness = property_one_holds(g, h)
    res.check(not ok, "counterexample subgroup satisfies the key property")
    res.check(
        witness == parse_element_expr(g, "a2*a3"),
        f"counterexample witness is {witness}, expected a2*a3",
    )
    search = generic_subgroup_code_decision(g, h)
    res.check(
        not search.perfect,
        "exhaustive search found an inverse-closed transversal",
    )
    return res


@_timed
def suite_lemma_equivalence(max_order: int = 24, seed: int = 0) -> SuiteResult:
    """Spectral tiling check == group-ring check: exhaustive for |G| <= 8,
    500 seeded random pairs per abelian group of order 9..max_order."""
    res = SuiteResult("lemma-equivalence")
    small = [make_cyclic(n) for n in range(1, 9)]
    small += [make_abelian(t) for n in range(4, 9) for t in abelian_types(n)]
    rng0 = random.Random(seed)
    for g in small:
        by_size = [[] for _ in range(g.order + 1)]
        for bits in range(1 << g.order):
            sub = [x for x in range(g.order) if bits >> x & 1]
            by_size[len(sub)].append(sub)
        # Pairs with |A||B| != |G| cannot disagree: both tests require the
        # size identity before anything else.  Run the full dual check on
        # every size-compatible pair, and sample the rest.
        for ka in range(g.order + 1):
            for kb in range(g.order + 1):
                if ka * kb != g.order:
                    continue
                for a in by_size[ka]:
                    for b in by_size[kb]:
                        try:
                            verify_lemma_equivalence(g, a, b)
                            res.checks += 1
                        except CayleyCodesError as exc:
                            res.check(False, str(exc))
        for _ in range(50):
            a = [x for x in range(g.order) if rng0.random() < 0.5]
            b = [x for x in range(g.order) if rng0.random() < 0.5]
            try:
                verify_lemma_equivalence(g, a, b)
                res.checks += 1
            except CayleyCodesError as exc:
                res.check(False, str(exc))
    rng = random.Random(seed)
    larger = [make_cyclic(n) for n in range(9, max_order + 1)]
    larger += [
        make_abelian(t) for n in range(9, max_order + 1) for t in abelian_types(n)
    ]
    for g in larger:
        for _ in range(500):
            a = [x for x in range(g.order) if rng.random() < 0.5]
            b = [x for x in range(g.order) if rng.random() < 0.5]
            try:
                verify_lemma_equivalence(g, a, b)
                res.checks += 1
            except CayleyCodesError as exc:
                res.check(False, str(exc))
    return res


@_timed
def suite_thm4a(max_order: int = 12, seed: int = 0) -> SuiteResult:
    """Every power automorphism maps every enumerated (total) perfect code
    of every Cayley graph of every abelian group of order <= max_order to
    another code of the same graph."""
    res = SuiteResult("thm4a")
    groups = [make_cyclic(n) for n in range(1, max_order + 1)]
    groups += [
        make_abelian(t)
        for n in range(4, max_order + 1)
        for t in abelian_types(n)
    ]
    for g in groups:
        sigmas = all_power_automorphisms(g)
        for s in all_connection_sets(g):
            graph = build_cayley(g, connection_set(g, s))
            for total in (False, True):
                codes = enumerate_perfect_codes(graph, total=total, max_order=g.order)
                known = set(codes)
                for c in codes:
                    for sigma in sigmas:
                        image = tuple(sorted(sigma.map[x] for x in c))
                        res.check(
                            image in known,
                            f"|G|={g.order} S={s} C={c}: image {image} lost"
                            f" under {sigma.map} (total={total})",
                        )
    return res


@_timed
def suite_prop3(max_order: int = 0, seed: int = 0) -> SuiteResult:
    """Constructed witnesses for non-power inner automorphisms of S3, D8,
    D10 and D12, confirmed by both the definitional and group-ring checks."""
    res = SuiteResult("prop3")
    groups = [
        ("S3", symmetric_group(3)),
        ("D8", make_dihedral(4)),
        ("D10", make_dihedral(5)),
        ("D12", make_dihedral(6)),
    ]
    for name, g in groups:
        for x in range(g.order):
            sigma = inner_automorphism(g, x)
            if is_power_automorphism(g, sigma):
                continue
            witness = prop3_witness(g, x)
            res.check(witness is not None, f"{name} g={x}: no witness produced")
            if witness is None:
                continue
            s, code = witness
            graph = build_cayley(g, s)
            image = tuple(sorted(sigma.map[c] for c in code))
            res.check(
                is_perfect_code(graph, code)
                and group_ring_check_perfect(g, s, code),
                f"{name} g={x}: witness code is not a perfect code",
            )
            res.check(
                not is_perfect_code(graph, image)
                and not group_ring_check_perfect(g, s, image),
                f"{name} g={x}: sigma-image is still a perfect code",
            )
    return res


@_timed
def suite_trivial_centre(max_order: int = 0, seed: int = 0) -> SuiteResult:
    """Only the identity inner automorphism of a centre-trivial group
    preserves perfect codes: S3, D10 and S4."""
    res = SuiteResult("trivial-centre")
    for name, g in [
        ("S3", symmetric_group(3)),
        ("D10", make_dihedral(5)),
        ("S4", symmetric_group(4)),
    ]:
        res.check(
            verify_trivial_centre_corollary(g),
            f"{name}: a non-identity inner automorphism preserves codes",
        )
    return res


SUITES = {
    "theorem3": suite_theorem3,
    "cor3": suite_cor3,
    "dihedral": suite_dihedral,
    "abelian": suite_abelian,
    "lemma-equivalence": suite_lemma_equivalence,
    "thm4a": suite_thm4a,
    "prop3": suite_prop3,
    "trivial-centre": suite_trivial_centre,
}


def run_suite(name: str, max_order: int | None = None, seed: int = 0) -> SuiteResult:
    if name not in SUITES:
        raise CayleyCodesError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
    fn = SUITES[name]
    if max_order is None:
        return fn(seed=seed)
    return fn(max_order=max_order, seed=seed)

"""Subgroup code criteria, explicit constructions, and the dispatcher."""

from __future__ import annotations

import pytest

from cayleycodes import (
    BoundExceededError,
    CayleyCodesError,
    abelian_criterion,
    abelian_sylow_reduction,
    build_cayley,
    construct_connection_set_normal,
    cyclic_criterion,
    decide_subgroup_code,
    dihedral_construct_sets,
    dihedral_criterion,
    dihedral_cyclic_criterion,
    generic_subgroup_code_decision,
    is_perfect_code,
    is_total_perfect_code,
    make_abelian,
    make_cyclic,
    make_dihedral,
    normal_subgroup_code,
    parity_criterion,
    property_one_holds,
    subgroup_generated,
    two_group_basis,
)
from cayleycodes.corpus import corpus_groups, symmetric_group
from cayleycodes.groups import all_subgroups, is_normal
from cayleycodes.specparse import parse_element_expr


class TestPropertyOne:
    def test_whole_group(self):
        g = symmetric_group(3)
        h = subgroup_generated(g, {1, 3})
        assert h.order == 6
        assert property_one_holds(g, h) == (True, None)

    def test_z12_index3(self):
        g = make_cyclic(12)
        assert property_one_holds(g, subgroup_generated(g, {3})) == (True, None)

    def test_counterexample_witness(self):
        g = make_abelian((2, 4, 4))
        gens = [parse_element_expr(g, "a1*a2^2"), parse_element_expr(g, "a1*a3^2")]
        h = subgroup_generated(g, gens)
        ok, witness = property_one_holds(g, h)
        assert not ok
        assert witness == parse_element_expr(g, "a2*a3")

    def test_agrees_with_brute_force_definition(self):
        # oracle: literal double loop over the quantifiers
        g = make_abelian((4, 2))
        for h in all_subgroups(g):
            hs = h.element_set()
            expected = all(
                any(g.mul(g.mul(x, k), g.mul(x, k)) == 0 for k in hs)
                for x in range(g.order)
                if g.mul(x, x) in hs
            )
            assert property_one_holds(g, h)[0] == expected


class TestNormalCriterion:
    def test_z12_verdicts(self):
        g = make_cyclic(12)
        cases = {
            6: (False, False),  # |H|=2, index 6
            4: (True, False),  # |H|=3
            3: (True, True),  # |H|=4
            2: (False, False),  # |H|=6
            1: (True, True),  # H=G
        }
        for gen, (perfect, total) in cases.items():
            v = normal_subgroup_code(g, subgroup_generated(g, {gen}))
            assert (v.perfect, v.total) == (perfect, total), gen

    def test_requires_normal(self):
        g = symmetric_group(3)
        with pytest.raises(CayleyCodesError):
            normal_subgroup_code(g, subgroup_generated(g, {2}))

    def test_parity_shortcut(self):
        g = make_cyclic(12)
        assert parity_criterion(g, subgroup_generated(g, {2})) is None
        v = parity_criterion(g, subgroup_generated(g, {3}))
        assert (v.perfect, v.total) == (True, True)
        v = parity_criterion(g, subgroup_generated(g, {4}))
        assert (v.perfect, v.total) == (True, False)

    def test_odd_order_group(self):
        g = make_cyclic(15)
        for h in all_subgroups(g):
            v = parity_criterion(g, h)
            assert v is not None and v.perfect and not v.total


class TestConstruction:
    def test_z9_perfect(self):
        g = make_cyclic(9)
        h = subgroup_generated(g, {3})
        s = construct_connection_set_normal(g, h)
        assert len(s) == 2
        assert is_perfect_code(build_cayley(g, s), h.elements)

    def test_z12_total_includes_involution(self):
        g = make_cyclic(12)
        h = subgroup_generated(g, {3})
        r = construct_connection_set_normal(g, h, total=True)
        assert len(r) == 3
        assert 6 in r.elements
        assert is_total_perfect_code(build_cayley(g, r), h.elements)

    def test_whole_group_empty_set(self):
        g = make_cyclic(7)
        h = subgroup_generated(g, {1})
        assert construct_connection_set_normal(g, h).sorted() == ()

    def test_failure_reports_witness(self):
        g = make_cyclic(12)
        with pytest.raises(CayleyCodesError):
            construct_connection_set_normal(g, subgroup_generated(g, {2}))


class TestCyclic:
    def test_z12_formula(self):
        g = make_cyclic(12)
        for d, expected in {2: (False, False), 3: (True, False), 4: (True, True)}.items():
            h = subgroup_generated(g, {12 // d})
            v = cyclic_criterion(g, h)
            assert (v.perfect, v.total) == expected

    def test_rejects_noncyclic(self):
        g = make_abelian((2, 2))
        with pytest.raises(CayleyCodesError):
            cyclic_criterion(g, subgroup_generated(g, set()))


class TestAbelian:
    def test_sylow_reduction(self):
        g = make_cyclic(12)
        p, hp = abelian_sylow_reduction(g, subgroup_generated(g, {3}))
        assert p.elements == (0, 3, 6, 9)
        assert hp.elements == (0, 3, 6, 9)
        g = make_cyclic(9)
        p, hp = abelian_sylow_reduction(g, subgroup_generated(g, {3}))
        assert p.elements == (0,) and hp.elements == (0,)

    def test_basis_orders(self):
        g = make_abelian((2, 4, 4))
        p, _ = abelian_sylow_reduction(g, subgroup_generated(g, set()))
        basis = two_group_basis(g, p)
        assert sorted(basis.orders) == [2, 4, 4]
        g8 = make_cyclic(8)
        p8, _ = abelian_sylow_reduction(g8, subgroup_generated(g8, set()))
        assert two_group_basis(g8, p8).orders == (8,)

    def test_trivial_intersection_is_perfect(self):
        g = make_cyclic(12)
        h = subgroup_generated(g, {4})  # order 3, H n P trivial
        v = abelian_criterion(g, h)
        assert v.perfect and not v.total

    def test_projecting_subgroup(self):
        g = make_abelian((4, 2))
        h = subgroup_generated(g, {3})  # (1,1), order 4, projects onto Z4
        assert h.order == 4
        v = abelian_criterion(g, h)
        assert v.perfect and v.total

    def test_non_projecting_subgroup(self):
        g = make_abelian((4, 4))
        h = subgroup_generated(g, {10})  # (2,2), projects onto neither
        v = abelian_criterion(g, h)
        assert not v.perfect
        ok, witness = property_one_holds(g, h)
        assert not ok and witness == 5  # (1,1)

    def test_requires_cyclic_intersection(self):
        g = make_abelian((2, 2))
        h = subgroup_generated(g, {1, 2})
        with pytest.raises(CayleyCodesError):
            abelian_criterion(g, h)


class TestDihedral:
    def test_rotation_formula(self):
        v = dihedral_cyclic_criterion(6, 2)
        assert (v.perfect, v.total) == (True, False)
        v = dihedral_cyclic_criterion(6, 3)
        assert (v.perfect, v.total) == (True, True)
        v = dihedral_cyclic_criterion(4, 2)
        assert (v.perfect, v.total) == (False, False)

    def test_subgroup_classification(self):
        g = make_dihedral(6)
        for gens, expected in [
            ({2, 6}, (True, True)),  # <a^2, b>
            ({6}, (True, True)),  # <b>
            ({3}, (True, True)),  # <a^3>: t=3 odd, n/t=2 even
        ]:
            h = subgroup_generated(g, gens)
            v = dihedral_criterion(6, h)
            assert (v.perfect, v.total) == expected, gens

    def test_construct_sets_small(self):
        r_set, s_set = dihedral_construct_sets(6, 2, 0)
        assert r_set.sorted() == (6, 11)  # {b, ba}
        assert s_set.sorted() == (11,)  # {a^5 b}
        r_set, s_set = dihedral_construct_sets(6, 3, 1)
        assert len(r_set) == 3 and len(s_set) == 2

    def test_construct_sets_verify(self):
        for n in (3, 4, 5, 6):
            g = make_dihedral(n)
            for t in (d for d in range(2, n + 1) if n % d == 0):
                for s in range(t):
                    r_set, s_set = dihedral_construct_sets(n, t, s)
                    h = subgroup_generated(g, {t % n, n + s})
                    assert is_total_perfect_code(build_cayley(g, r_set), h.elements)
                    assert is_perfect_code(build_cayley(g, s_set), h.elements)


class TestGeneric:
    def test_s3_odd_subgroup(self):
        g = symmetric_group(3)
        h = subgroup_generated(g, {3})  # the 3-cycle subgroup
        v = generic_subgroup_code_decision(g, h)
        assert v.perfect and not v.total

    def test_whole_group(self):
        for n in (4, 5, 6):
            g = make_cyclic(n)
            h = subgroup_generated(g, {1})
            v = generic_subgroup_code_decision(g, h)
            assert v.perfect
            assert v.total == (n % 2 == 0)

    def test_counterexample_no_transversal(self):
        g = make_abelian((2, 4, 4))
        gens = [parse_element_expr(g, "a1*a2^2"), parse_element_expr(g, "a1*a3^2")]
        h = subgroup_generated(g, gens)
        v = generic_subgroup_code_decision(g, h)
        assert not v.perfect

    def test_witness_connection_set_verifies(self):
        g = make_dihedral(5)
        for h in all_subgroups(g):
            for total in (False, True):
                v = generic_subgroup_code_decision(g, h, total=total)
                wanted = v.total if total else v.perfect
                if not wanted:
                    continue
                s = v.witness["value"]
                graph = build_cayley(g, s)
                if total:
                    assert is_total_perfect_code(graph, h.elements)
                else:
                    assert is_perfect_code(graph, h.elements)

    def test_bound(self):
        g = make_abelian((2,) * 6)  # order 64, trivial subgroup: index 64
        h = subgroup_generated(g, set())
        with pytest.raises(BoundExceededError):
            generic_subgroup_code_decision(g, h)


class TestDispatcher:
    def test_methods(self):
        z12 = make_cyclic(12)
        assert decide_subgroup_code(z12, subgroup_generated(z12, {3})).method == "cyclic"
        d12 = make_dihedral(6)
        assert (
            decide_subgroup_code(d12, subgroup_generated(d12, {6})).method
            == "dihedral"
        )

    def test_oracle_agreement_small_corpus(self):
        # every specialized verdict must match the exhaustive search
        for spec, g in corpus_groups(max_order=16, include_specials=False):
            for h in all_subgroups(g):
                v = decide_subgroup_code(g, h)
                s = generic_subgroup_code_decision(g, h)
                assert (v.perfect, v.total) == (s.perfect, s.total), (
                    spec,
                    h.elements,
                    v.method,
                )

    def test_specials_agreement(self):
        from cayleycodes.corpus import quaternion_group

        g = quaternion_group()
        for h in all_subgroups(g):
            v = decide_subgroup_code(g, h)
            s = generic_subgroup_code_decision(g, h)
            assert (v.perfect, v.total) == (s.perfect, s.total)
            if is_normal(g, h):
                n = normal_subgroup_code(g, h)
                assert (v.perfect, v.total) == (n.perfect, n.total)

"""Groupoid validation, constructors, and the structural results."""

from __future__ import annotations

import copy

import pytest
from hypothesis import given, strategies as st

import gburnside as gb
from gburnside.errors import (
    DomCodMismatch,
    EmptyObjectSet,
    MissingIdentity,
    MissingInverse,
    NotAGroup,
    NotConnected,
    NotSubgroupoid,
    NotWide,
    UnknownObject,
)
from gburnside.groupoid import (
    SENTINEL,
    FiniteGroupoid,
    SubgroupoidSpec,
    compose_functors,
    identity_functor,
)

from conftest import cyclic_table, s3_table


class TestValidateGroupoid:
    def test_c2_cayley_table(self):
        g = gb.from_group(cyclic_table(2))
        assert g.n_objects == 1
        assert g.n_morphisms == 2

    def test_dropped_compose_entry(self, c2):
        bad = copy.deepcopy(c2)
        bad.compose_table[1][1] = SENTINEL
        with pytest.raises(DomCodMismatch):
            gb.validate_groupoid(bad)

    def test_corrupted_inverse_in_pair_groupoid(self):
        g = gb.pair_groupoid(3)
        bad = copy.deepcopy(g)
        # (0,1) has inverse (1,0); point it at a loop instead
        bad.inverse[1] = 0
        with pytest.raises(MissingInverse):
            gb.validate_groupoid(bad)

    def test_wrong_identity(self, c2):
        bad = copy.deepcopy(c2)
        bad.identity[0] = 1
        with pytest.raises(MissingIdentity):
            gb.validate_groupoid(bad)

    def test_nonassociative_table(self):
        # corrupt one compose entry of S3 so a triple fails before the
        # unit/inverse checks would notice
        g = gb.from_group(s3_table())
        bad = copy.deepcopy(g)
        bad.compose_table[4][5] = (bad.compose_table[4][5] + 1) % 6
        with pytest.raises(gb.errors.GBError):
            gb.validate_groupoid(bad)

    def test_empty_rejected(self):
        with pytest.raises(EmptyObjectSet):
            gb.validate_groupoid(FiniteGroupoid(0, [], [], [], [], []))


class TestFromGroup:
    def test_trivial(self):
        g = gb.from_group(cyclic_table(1))
        assert (g.n_objects, g.n_morphisms) == (1, 1)

    def test_s3(self):
        assert gb.from_group(s3_table()).n_morphisms == 6

    def test_semilattice_rejected(self):
        with pytest.raises(NotAGroup):
            gb.from_group([[0, 1], [1, 1]])

    def test_perm_gens_closure(self):
        table = gb.group_table_from_perm_gens([[1, 2, 3, 0]])
        assert len(table) == 4
        g = gb.from_group(table)
        assert g.n_morphisms == 4


class TestPairGroupoid:
    def test_single_object_is_trivial_group(self):
        g = gb.pair_groupoid(1)
        assert (g.n_objects, g.n_morphisms) == (1, 1)

    def test_three_objects(self):
        g = gb.pair_groupoid(3)
        assert (g.n_objects, g.n_morphisms) == (3, 9)

    def test_trivial_isotropy(self):
        g = gb.pair_groupoid(2)
        for x in g.objects:
            assert g.loops(x) == [g.identity[x]]

    def test_zero_rejected(self):
        with pytest.raises(EmptyObjectSet):
            gb.pair_groupoid(0)

    @given(st.integers(min_value=1, max_value=5), st.data())
    def test_isotropy_always_trivial(self, n, data):
        g = gb.pair_groupoid(n)
        x = data.draw(st.integers(min_value=0, max_value=n - 1))
        iso, _ = gb.isotropy_group(g, x)
        assert iso.n_morphisms == 1


class TestDisjointUnion:
    def test_c2_plus_s3(self, c2, s3):
        u, injections = gb.disjoint_union([c2, s3])
        assert (u.n_objects, u.n_morphisms) == (2, 8)
        assert gb.connected_components(u).count == 2
        assert len(injections) == 2

    def test_single_part_identity_reindexing(self, c2):
        u, (inj,) = gb.disjoint_union([c2])
        assert u == c2
        assert inj.morphism_map == [0, 1]

    def test_pair2_twice(self):
        u, _ = gb.disjoint_union([gb.pair_groupoid(2), gb.pair_groupoid(2)])
        assert (u.n_objects, u.n_morphisms) == (4, 8)
        assert gb.connected_components(u).count == 2

    def test_empty_rejected(self):
        with pytest.raises(EmptyObjectSet):
            gb.disjoint_union([])

    def test_component_count_additivity(self, corpus):
        parts = [corpus["C2+S3"], corpus["Pair(3)"], corpus["C3"]]
        expected = sum(gb.connected_components(p).count for p in parts)
        union, _ = gb.disjoint_union(parts)
        assert gb.connected_components(union).count == expected


class TestDirectProduct:
    def test_c2_times_pair2(self, c2):
        p = gb.direct_product(c2, gb.pair_groupoid(2))
        assert (p.n_objects, p.n_morphisms) == (2, 8)
        assert gb.is_connected(p)

    def test_pair1_is_unit(self, s3):
        p = gb.direct_product(s3, gb.pair_groupoid(1))
        assert (p.n_objects, p.n_morphisms) == (1, 6)
        assert p.compose_table == s3.compose_table

    def test_trivial_square(self):
        t = gb.from_group(cyclic_table(1))
        p = gb.direct_product(t, t)
        assert (p.n_objects, p.n_morphisms) == (1, 1)


class TestComponents:
    def test_pair5_connected(self):
        assert gb.connected_components(gb.pair_groupoid(5)).count == 1

    def test_union_two(self, corpus):
        comps = gb.connected_components(corpus["C2+S3"])
        assert comps.count == 2
        assert comps.representatives == [0, 1]

    def test_one_object(self, s3):
        assert gb.connected_components(s3).count == 1


class TestIsotropy:
    def test_pair3_trivial(self):
        g = gb.pair_groupoid(3)
        for x in g.objects:
            iso, inc = gb.isotropy_group(g, x)
            assert iso.n_morphisms == 1
            assert inc.morphism_map == [g.identity[x]]

    def test_c2_pair2_gives_c2(self, corpus):
        g = corpus["C2xPair(2)"]
        for x in g.objects:
            iso, _ = gb.isotropy_group(g, x)
            assert iso.n_morphisms == 2

    def test_s3_is_its_own_isotropy(self, s3):
        iso, _ = gb.isotropy_group(s3, 0)
        assert iso.compose_table == s3.compose_table

    def test_unknown_object(self, s3):
        with pytest.raises(UnknownObject):
            gb.isotropy_group(s3, 5)


class TestStructureIso:
    @pytest.mark.parametrize("name,x", [("Pair(3)", 0), ("C2xPair(2)", 0), ("S3", 0)])
    def test_bijective_functor(self, corpus, name, x):
        g = corpus[name]
        phi = gb.connected_structure_iso(g, x)
        assert phi.is_isomorphism()
        assert phi.target.n_morphisms == g.n_morphisms

    def test_idempotent_shape(self, corpus):
        g = corpus["C2xPair(2)"]
        phi = gb.connected_structure_iso(g, 0)
        # target is (isotropy) x Pair(2): same shape as g itself
        assert (phi.target.n_objects, phi.target.n_morphisms) == (2, 8)

    def test_not_connected(self, corpus):
        with pytest.raises(NotConnected):
            gb.connected_structure_iso(corpus["C2+S3"], 0)


class TestInclusionEquivalence:
    def test_one_object_group(self, s3):
        eq = gb.inclusion_equivalence(s3, 0)
        assert eq.retraction.morphism_map == list(s3.morphisms)
        assert eq.eta == [s3.identity[0]]
        assert eq.epsilon == [0]

    def test_pair2_collapse(self):
        g = gb.pair_groupoid(2)
        eq = gb.inclusion_equivalence(g, 0)
        assert eq.retraction.object_map == [0, 0]
        # eta components are the transports 0 -> y
        assert eq.eta[0] == g.identity[0]
        assert g.dom[eq.eta[1]] == 0 and g.cod[eq.eta[1]] == 1

    def test_c2_pair2(self, corpus):
        g = corpus["C2xPair(2)"]
        eq = gb.inclusion_equivalence(g, 0)
        assert sorted(set(eq.retraction.morphism_map)) == [0, 1]

    def test_not_connected(self, corpus):
        with pytest.raises(NotConnected):
            gb.inclusion_equivalence(corpus["C2+S3"], 0)


class TestNormalSubgroupoid:
    def test_identity_only_wide_subgroupoid(self, corpus):
        for name in ("S3", "Pair(3)", "C2+S3"):
            g = corpus[name]
            sub = SubgroupoidSpec(g, frozenset(g.identity))
            assert gb.is_normal_subgroupoid(g, sub) is True

    def test_a3_inside_s3(self, s3, s3_perms):
        a3 = frozenset(
            k for k, p in enumerate(s3_perms) if _parity(p) == 0
        )
        assert len(a3) == 3
        assert gb.is_normal_subgroupoid(s3, SubgroupoidSpec(s3, a3)) is True

    def test_c2_inside_s3_not_normal(self, s3, s3_perms):
        transposition = next(
            k for k, p in enumerate(s3_perms) if _parity(p) == 1 and _order(s3, k) == 2
        )
        sub = frozenset({s3.identity[0], transposition})
        assert gb.is_normal_subgroupoid(s3, SubgroupoidSpec(s3, sub)) is False

    def test_not_wide(self, corpus):
        g = corpus["C2+S3"]
        sub = SubgroupoidSpec(g, frozenset({g.identity[0]}))
        with pytest.raises(NotWide):
            gb.is_normal_subgroupoid(g, sub)

    def test_not_closed(self, s3):
        three_cycle = next(m for m in s3.morphisms if _order(s3, m) == 3)
        sub = SubgroupoidSpec(s3, frozenset({s3.identity[0], three_cycle}))
        with pytest.raises(NotSubgroupoid):
            sub.validate()


def _parity(perm: tuple[int, ...]) -> int:
    inversions = sum(
        1
        for i in range(len(perm))
        for j in range(i + 1, len(perm))
        if perm[i] > perm[j]
    )
    return inversions % 2


def _order(g: gb.FiniteGroupoid, m: int) -> int:
    e = g.identity[g.dom[m]]
    k, acc = 1, m
    while acc != e:
        acc = g.compose_table[m][acc]
        k += 1
    return k


class TestFunctors:
    def test_identity_and_composition(self, c2, s3):
        u, (inj1, inj2) = gb.disjoint_union([c2, s3])
        ident = identity_functor(u)
        again = compose_functors(ident, inj2)
        assert again.morphism_map == inj2.morphism_map

    def test_broken_functor_rejected(self, c2):
        f = identity_functor(c2)
        f.morphism_map = [1, 0]  # swaps identity and sigma
        with pytest.raises(gb.errors.GBError):
            f.validate()

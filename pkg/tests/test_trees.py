import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from oracles import compatible_split_systems, double_factorial
from tropical_hurwitz.trees import (
    LeafBipartition,
    LeafLabeledTree,
    TreeError,
    canonical_key,
    degenerate,
    enumerate_trivalent_types,
    find_cherry,
    leaf_bipartition,
    parse_bipartition,
    star,
    tree_from_splits,
)


def split(text, n):
    return parse_bipartition(text, n)


def caterpillar4():
    return tree_from_splits(4, [split("12|34", 4)])


class TestBipartition:
    def test_normalised_to_side_without_leaf_one(self):
        a = LeafBipartition.of(4, {1, 2})
        assert a.side == frozenset({3, 4})
        assert a == LeafBipartition.of(4, {3, 4})
        assert str(a) == "12|34"

    def test_empty_side_rejected(self):
        with pytest.raises(TreeError):
            LeafBipartition.of(4, set())
        with pytest.raises(TreeError):
            LeafBipartition.of(4, {1, 2, 3, 4})

    def test_parse_round_trip(self):
        for text in ["12|34", "13|245", "1,2,10|3,4,5,6,7,8,9"]:
            n = 10 if "," in text else len(text) - 1
            s = parse_bipartition(text, n)
            assert parse_bipartition(str(s), n) == s

    def test_malformed(self):
        for bad in ["1234", "12|3", "12|23"]:
            with pytest.raises(TreeError):
                parse_bipartition(bad, 4)


class TestLeafBipartition:
    def test_tripod_leaf_edge(self):
        t = star(3)
        assert leaf_bipartition(t, t.unbounded_edge(1)) == LeafBipartition.of(3, {2, 3})

    def test_cherry_edge(self):
        t = caterpillar4()
        (e,) = t.bounded_edges
        assert str(leaf_bipartition(t, e)) == "12|34"

    def test_missing_edge(self):
        with pytest.raises(TreeError):
            leaf_bipartition(caterpillar4(), (1, 2))

    @pytest.mark.parametrize("n", range(3, 8))
    def test_distinct_edges_distinct_splits(self, n):
        for t in enumerate_trivalent_types(n):
            splits = [t.split(e) for e in t.edges]
            assert len(set(splits)) == len(splits)
            for e in t.bounded_edges:
                s = t.split(e)
                assert len(s.side) >= 2 and len(s.other) >= 2


class TestEnumeration:
    def test_small(self):
        assert len(enumerate_trivalent_types(3)) == 1
        assert [str(t) for t in enumerate_trivalent_types(4)] == ["12|34", "13|24", "14|23"]
        assert len(enumerate_trivalent_types(5)) == 15

    @pytest.mark.parametrize("n", range(3, 9))
    def test_count_and_distinct_keys(self, n):
        trees = enumerate_trivalent_types(n)
        assert len(trees) == double_factorial(2 * n - 5)
        assert len({t.canonical_key for t in trees}) == len(trees)

    @pytest.mark.parametrize("n", range(3, 8))
    def test_trivalent_with_n_minus_3_bounded_edges(self, n):
        for t in enumerate_trivalent_types(n):
            assert t.is_trivalent()
            assert len(t.bounded_edges) == n - 3

    def test_deterministic(self):
        assert enumerate_trivalent_types(6) == enumerate_trivalent_types(6)

    def test_guard(self):
        with pytest.raises(TreeError):
            enumerate_trivalent_types(2)
        with pytest.raises(TreeError):
            enumerate_trivalent_types(11)

    def test_enumeration_hits_every_maximal_split_system(self):
        # maximal compatible systems of nontrivial splits are the trivalent trees
        for n in range(4, 7):
            systems = compatible_split_systems(n)
            maximal = {frozenset(s) for s in systems if len(s) == n - 3}
            found = {frozenset(s.side for s in t.canonical_key) for t in enumerate_trivalent_types(n)}
            assert found == maximal


class TestCanonicalKey:
    def test_tripod(self):
        assert canonical_key(star(3)) == ()

    def test_n4_keys(self):
        keys = [canonical_key(t) for t in enumerate_trivalent_types(4)]
        assert [tuple(map(str, k)) for k in keys] == [("12|34",), ("13|24",), ("14|23",)]

    @settings(max_examples=50, deadline=None)
    @given(st.integers(4, 7), st.randoms(use_true_random=False))
    def test_invariant_under_relabelling_internal_vertices(self, n, rnd):
        tree = rnd.choice(enumerate_trivalent_types(n))
        internal = list(tree.internal_vertices)
        fresh = rnd.sample(range(-1000, -1), len(internal))
        rename = dict(zip(internal, fresh))
        edges = [(rename.get(u, u), rename.get(v, v)) for u, v in tree.edges]
        rnd.shuffle(edges)
        other = LeafLabeledTree(n, frozenset(edges))
        assert canonical_key(other) == canonical_key(tree)

    def test_rebuild_from_splits(self):
        for t in enumerate_trivalent_types(6):
            assert canonical_key(tree_from_splits(6, t.canonical_key)) == t.canonical_key


class TestValidation:
    def test_degree_two_vertex_rejected(self):
        with pytest.raises(TreeError):
            LeafLabeledTree(3, frozenset({(1, 10), (2, 10), (10, 11), (3, 11)}))

    def test_cycle_rejected(self):
        with pytest.raises(TreeError):
            LeafLabeledTree(3, frozenset({(1, 10), (2, 11), (3, 12), (10, 11), (11, 12), (10, 12)}))

    def test_incompatible_splits(self):
        with pytest.raises(TreeError):
            tree_from_splits(4, [split("12|34", 4), split("13|24", 4)])


class TestDegenerate:
    def test_single_contraction(self):
        t = caterpillar4()
        s = degenerate(t, t.bounded_edges)
        assert s.canonical_key == () and len(s.internal_vertices) == 1
        assert len(s.adjacency[s.internal_vertices[0]]) == 4

    def test_empty(self):
        t = caterpillar4()
        assert degenerate(t, []) is t

    def test_unbounded_rejected(self):
        t = caterpillar4()
        with pytest.raises(TreeError):
            degenerate(t, [t.unbounded_edge(1)])

    @pytest.mark.parametrize("n", range(5, 8))
    def test_order_does_not_matter(self, n):
        rng = random.Random(n)
        for t in enumerate_trivalent_types(n):
            a, b = rng.sample(t.bounded_edges, 2)
            one = degenerate(degenerate(t, [a]), [t.split(b)])
            two = degenerate(degenerate(t, [b]), [t.split(a)])
            both = degenerate(t, [a, b])
            assert one.canonical_key == two.canonical_key == both.canonical_key
            assert set(both.canonical_key) == set(t.canonical_key) - {t.split(a), t.split(b)}

    @pytest.mark.parametrize("n", range(3, 8))
    def test_full_contraction_is_star(self, n):
        for t in enumerate_trivalent_types(n):
            s = degenerate(t, t.bounded_edges)
            assert s.canonical_key == () and len(s.internal_vertices) == 1

    def test_stability_preserved(self):
        for t in enumerate_trivalent_types(6):
            for k in range(4):
                for subset in itertools.combinations(t.bounded_edges, k):
                    d = degenerate(t, subset)
                    assert all(len(d.adjacency[v]) >= 3 for v in d.internal_vertices)


class TestCherry:
    def test_tripod(self):
        t = star(3)
        v, (a, b), third = find_cherry(t)
        assert {a, b} == {t.unbounded_edge(1), t.unbounded_edge(2)}
        assert third == t.unbounded_edge(3)

    def test_caterpillar(self):
        t = caterpillar4()
        v, (a, b), third = find_cherry(t)
        assert a == t.unbounded_edge(1) and b == t.unbounded_edge(2)
        assert third == t.bounded_edges[0]

    @pytest.mark.parametrize("n", range(3, 8))
    def test_every_type_has_a_cherry(self, n):
        for t in enumerate_trivalent_types(n):
            v, (a, b), third = find_cherry(t)
            assert not t.is_bounded(a) and not t.is_bounded(b)
            assert set(t.adjacency[v]) >= {x for e in (a, b, third) for x in e} - {v}

from fractions import Fraction

import pytest
from hypothesis import given

from conftest import graphs, graphs_with_subset
from oracles import transitive_by_triples
from pretopo import graph_core as gc
from pretopo.errors import InputError, SizeError
from pretopo.graph_core import Graph, VertexFunction, VertexSet

K2, K3, K4 = gc.complete_graph(2), gc.complete_graph(3), gc.complete_graph(4)
P3, P4 = gc.path_graph(3), gc.path_graph(4)
C4 = gc.cycle_graph(4)
K2K3 = gc.disjoint_union(K2, K3)


class TestVertexSet:
    def test_iteration_sorted(self):
        assert list(VertexSet([5, 1, 3])) == [1, 3, 5]

    def test_set_semantics(self):
        a = VertexSet([0, 2])
        assert len(a) == 2 and 2 in a and 1 not in a
        assert a | VertexSet([1]) == {0, 1, 2}
        assert (a & VertexSet([2, 3])) == {2}
        assert a.issubset(VertexSet([0, 1, 2]))

    def test_negative_rejected(self):
        with pytest.raises(InputError):
            VertexSet([-1])


class TestGraph:
    def test_rejects_loops(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 0)])

    def test_rejects_out_of_range(self):
        with pytest.raises(InputError):
            Graph.from_edges(2, [(0, 2)])

    def test_rejects_asymmetric(self):
        with pytest.raises(InputError):
            Graph(2, (0b10, 0))


class TestClosedNeighborhood:
    def test_k3(self):
        assert gc.closed_neighborhood(K3, 0) == {0, 1, 2}

    def test_p3_middle(self):
        assert gc.closed_neighborhood(P3, 1) == {0, 1, 2}

    def test_isolated(self):
        assert gc.closed_neighborhood(gc.empty_graph(3), 2) == {2}

    def test_out_of_range(self):
        with pytest.raises(InputError):
            gc.closed_neighborhood(P3, 3)


class TestNeighborhoodOfSet:
    def test_examples(self):
        assert gc.neighborhood_of_set(P4, VertexSet([0])) == {0, 1}
        assert gc.neighborhood_of_set(P4, VertexSet()) == set()
        assert gc.neighborhood_of_set(P4, VertexSet([1, 2])) == {0, 1, 2, 3}

    @given(graphs_with_subset())
    def test_union_of_closed_neighborhoods(self, gu):
        g, u = gu
        expect = VertexSet()
        for v in VertexSet.from_mask(u):
            expect |= gc.closed_neighborhood(g, v)
        assert gc.neighborhood_of_set(g, u) == expect

    @given(graphs_with_subset())
    def test_monotone(self, gu):
        g, u = gu
        for v in range(g.n):
            assert gc.neighborhood_of_set(g, u).issubset(gc.neighborhood_of_set(g, u | 1 << v))

    @given(graphs(min_n=1))
    def test_self_membership(self, g):
        assert all(v in gc.closed_neighborhood(g, v) for v in range(g.n))


class TestTensorProduct:
    def test_k2_k2_perfect_matching(self):
        p = gc.tensor_product(K2, K2)
        assert p.n == 4 and p.edges() == [(0, 3), (1, 2)]

    def test_edgeless_factor(self):
        p = gc.tensor_product(K3, gc.empty_graph(2))
        assert p.n == 6 and p.num_edges == 0

    def test_k2_k3_is_six_cycle(self):
        p = gc.tensor_product(K2, K3)
        assert p.n == 6 and p.num_edges == 6
        assert all(p.degree(v) == 2 for v in range(6)) and gc.is_connected(p)

    def test_row_major_index(self):
        p = gc.tensor_product(K2, K3)
        # (0,1) ~ (1,2): indices 1 and 5
        assert p.has_edge(1, 5)

    def test_size_cap(self, monkeypatch):
        monkeypatch.setattr(gc, "MAX_PRODUCT_VERTICES", 5)
        with pytest.raises(SizeError):
            gc.tensor_product(K3, K2)

    def test_projections_are_homomorphisms(self):
        p = gc.tensor_product(K3, C4)
        left = VertexFunction(p.n, 3, tuple(x // 4 for x in range(p.n)))
        right = VertexFunction(p.n, 4, tuple(x % 4 for x in range(p.n)))
        assert gc.is_homomorphism(left, p, K3) and gc.is_homomorphism(right, p, C4)


class TestInducedSubgraph:
    def test_c4_adjacent(self):
        sub, index = gc.induced_subgraph(C4, VertexSet([0, 1]))
        assert sub.edges() == [(0, 1)] and index == {0: 0, 1: 1}

    def test_c4_opposite(self):
        sub, index = gc.induced_subgraph(C4, VertexSet([1, 3]))
        assert sub.n == 2 and sub.num_edges == 0 and index == {1: 0, 3: 1}

    @given(graphs())
    def test_whole_set_is_copy(self, g):
        sub, _ = gc.induced_subgraph(g, (1 << g.n) - 1)
        assert sub == g

    @given(graphs_with_subset(max_n=6))
    def test_neighborhood_identity(self, gw):
        g, w = gw
        sub, index = gc.induced_subgraph(g, w)
        back = {new: old for old, new in index.items()}
        for old, new in index.items():
            lifted = VertexSet(back[x] for x in gc.closed_neighborhood(sub, new))
            assert lifted == gc.closed_neighborhood(g, old) & w


class TestHomomorphism:
    def test_identity(self):
        assert gc.is_homomorphism(VertexFunction(3, 3, (0, 1, 2)), K3, K3)

    def test_constant_collapses_edge(self):
        assert not gc.is_homomorphism(VertexFunction(2, 3, (0, 0)), gc.path_graph(2), K3)

    def test_p3_to_k2(self):
        assert gc.is_homomorphism(VertexFunction(3, 2, (0, 1, 0)), P3, K2)

    def test_dimension_mismatch(self):
        with pytest.raises(InputError):
            gc.is_homomorphism(VertexFunction(2, 2, (0, 1)), P3, K2)


class TestComponents:
    def test_examples(self):
        assert gc.connected_components(P3) == [{0, 1, 2}]
        assert gc.connected_components(gc.empty_graph(3)) == [{0}, {1}, {2}]
        assert gc.connected_components(K2K3) == [{0, 1}, {2, 3, 4}]

    def test_connected_requires_a_vertex(self):
        assert not gc.is_connected(gc.empty_graph(0))
        assert gc.is_connected(gc.empty_graph(1))

    @given(graphs())
    def test_partition(self, g):
        blocks = gc.connected_components(g)
        assert sum(len(b) for b in blocks) == g.n
        assert [b.min() for b in blocks] == sorted(b.min() for b in blocks)
        for u, v in g.edges():
            assert any(u in b and v in b for b in blocks)


class TestSpanning:
    def test_examples(self):
        assert gc.is_spanning_subgraph(gc.empty_graph(3), K3)
        assert not gc.is_spanning_subgraph(K3, P3)
        assert gc.is_spanning_subgraph(P3, P3)


class TestTransitivity:
    def test_examples(self):
        assert gc.is_transitive(K4)
        assert not gc.is_transitive(P3)
        assert gc.transitivity_violation(P3) == (0, 1, 2)
        assert gc.is_transitive(K2K3)

    @given(graphs(max_n=6))
    def test_matches_triples(self, g):
        assert gc.is_transitive(g) == transitive_by_triples(g)

    @given(graphs(max_n=6))
    def test_witness_is_least(self, g):
        w = gc.transitivity_violation(g)
        if w is None:
            return
        x, y, z = w
        assert g.has_edge(x, y) and g.has_edge(y, z) and x != z and not g.has_edge(x, z)


class TestEnumeration:
    def test_counts(self):
        assert len(list(gc.enumerate_graphs(0))) == 1
        assert len(list(gc.enumerate_graphs(2))) == 2
        assert len(list(gc.enumerate_graphs(4))) == 64

    def test_distinct(self):
        assert len(set(gc.enumerate_graphs(4))) == 64

    def test_bound(self):
        with pytest.raises(SizeError):
            list(gc.enumerate_graphs(8))


class TestFindPath:
    def test_p3(self):
        p = gc.find_path(P3, 0, 2)
        assert p.pieces == (0, 1, 2)
        assert p.breakpoints == (Fraction(1, 3), Fraction(2, 3))
        assert p.at(0) == 0 and p.at(Fraction(1, 2)) == 1 and p.at(1) == 2

    def test_constant(self):
        p = gc.find_path(P3, 1, 1)
        assert p.pieces == (1,) and p.breakpoints == ()

    def test_disconnected(self):
        assert gc.find_path(gc.disjoint_union(K2, K2), 0, 2) is None

    @given(graphs(min_n=1))
    def test_found_iff_same_component(self, g):
        block = {v: i for i, b in enumerate(gc.connected_components(g)) for v in b}
        for v in range(g.n):
            p = gc.find_path(g, 0, v)
            assert (p is not None) == (block[0] == block[v])
            if p is not None:
                assert p.is_valid_in(g) and len(set(p.pieces)) == len(p.pieces)
                assert p.pieces[0] == 0 and p.pieces[-1] == v

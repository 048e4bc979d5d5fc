import pytest

from closedbetti.closed import CutPointError, NotClosedError, from_mu, mu_vector
from closedbetti.enumeration import enumerate_glued, enumerate_mu_vectors
from closedbetti.graphs import BipartiteGraph, LabeledGraph, connected_components, is_connected
from closedbetti.initial import (
    InitialClosedGraph,
    block_mu,
    initial_closed_graph,
    initial_graph,
    recognize_initial_closed,
    shifted_initial_graph,
    split_at_cut_points,
    trimmed_initial_graph,
)

TRIANGLE = LabeledGraph.on(3, [(1, 2), (1, 3), (2, 3)])
EDGE = LabeledGraph.on(2, [(1, 2)])
TWO_TRIANGLES = LabeledGraph.on(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])


class TestInitialGraph:
    def test_single_edge(self):
        Hp = initial_graph(EDGE)
        assert Hp.sorted_edges() == [(1, 2)]

    def test_triangle(self):
        assert initial_graph(TRIANGLE).sorted_edges() == [(1, 2), (1, 3), (2, 3)]

    def test_six_block(self, six_block):
        H = initial_closed_graph(six_block)
        assert H.mu.values == (3, 1, 0, 0, 0)

    def test_rejects_non_closed(self):
        with pytest.raises(NotClosedError):
            initial_graph(LabeledGraph.on(4, [(1, 2), (1, 3), (1, 4)]))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_degrees_and_isolated_vertices(self, n):
        for G in enumerate_glued(n):
            Hp = initial_graph(G)
            for i in G.vertices:
                assert len(G.upper_neighbors(i)) == len(Hp.x_neighbors(i))
                assert len(G.lower_neighbors(i)) == len(Hp.y_neighbors(i))
            assert not Hp.x_neighbors(n) and not Hp.y_neighbors(1)
            trimmed = trimmed_initial_graph(G)
            assert all(trimmed.x_neighbors(i) for i in trimmed.x_labels)
            assert all(trimmed.y_neighbors(j) for j in trimmed.y_labels)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_component_bipartitions(self, n):
        for G in enumerate_glued(n):
            Hp = initial_graph(G)
            for comp in connected_components(Hp):
                if len(comp) == 1:
                    continue
                xs = sorted(i for side, i in comp if side == "x")
                ys = sorted(j for side, j in comp if side == "y")
                idx = sorted(set(xs) | set(ys))
                assert xs == idx[:-1] and ys == idx[1:]


class TestInitialClosedGraph:
    def test_single_edge(self):
        H = initial_closed_graph(EDGE)
        assert H.bipartite.sorted_edges() == [(1, 1)]
        assert H.mu.values == (0,)

    def test_triangle(self):
        H = initial_closed_graph(TRIANGLE)
        assert H.bipartite.sorted_edges() == [(1, 1), (1, 2), (2, 2)]
        assert H.mu.values == (0, 0)

    def test_six_block_edges(self, six_block):
        H = initial_closed_graph(six_block)
        expected = {(i, j) for i in range(1, 6) for j in range(i, 6 - (3, 1, 0, 0, 0)[i - 1])}
        assert H.bipartite.edges == expected
        assert H == InitialClosedGraph.from_mu((3, 1, 0, 0, 0), n=6)

    def test_label_maps_point_back(self, six_block):
        H = initial_closed_graph(six_block)
        assert H.original_generators() == sorted(six_block.edges)
        assert H.generators()[0] == (1, 1)

    def test_cut_point_rejected(self):
        with pytest.raises(CutPointError):
            initial_closed_graph(LabeledGraph.on(3, [(1, 2), (2, 3)]))

    def test_shifted_graph_allows_cut_points(self):
        H = shifted_initial_graph(LabeledGraph.on(3, [(1, 2), (2, 3)]))
        assert H.sorted_edges() == [(1, 1), (2, 2)]

    @pytest.mark.parametrize("n", range(2, 9))
    def test_invariants(self, n):
        for mu in enumerate_mu_vectors(n):
            H = InitialClosedGraph.from_mu(mu)
            B = H.bipartite
            assert H.mu.values == mu.values[:-1]
            assert all((i, i) in B.edges for i in range(1, n))
            assert all(i <= j for i, j in B.edges)
            assert B.edges == {(i, j) for i in range(1, n) for j in range(i, n - mu[i])}
            assert is_connected(B)
            assert H == initial_closed_graph(from_mu(mu))

    def test_length_conventions(self):
        assert block_mu((3, 1, 0, 0, 0), n=6) == block_mu((3, 1, 0, 0, 0, 0))
        with pytest.raises(ValueError):
            block_mu((3, 1, 0, 0, 0), n=8)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_deleting_a_diagonal_edge_leaves_initial_closed_components(self, n):
        for mu in enumerate_mu_vectors(n):
            B = InitialClosedGraph.from_mu(mu).bipartite
            for i in range(1, n):
                rest = B.remove([("x", i), ("y", i)])
                for comp in connected_components(rest):
                    xs = [v for side, v in comp if side == "x"]
                    ys = [v for side, v in comp if side == "y"]
                    assert recognize_initial_closed(rest.induced(xs, ys)) is not None, (mu, i, comp)


class TestRecognize:
    def test_accepts_initial_closed(self):
        B = InitialClosedGraph.from_mu((2, 1, 0, 0, 0)).bipartite
        assert recognize_initial_closed(B).values == (2, 1, 0, 0)

    def test_rejects_others(self):
        assert recognize_initial_closed(BipartiteGraph((1, 2), (1, 2), frozenset({(1, 2), (2, 1)}))) is None
        assert recognize_initial_closed(BipartiteGraph((1,), (1, 2), frozenset({(1, 1)}))) is None


class TestSplit:
    def test_block_gives_one_graph(self, six_block):
        assert len(split_at_cut_points(six_block)) == 1

    def test_path(self):
        parts = split_at_cut_points(LabeledGraph.on(3, [(1, 2), (2, 3)]))
        assert [p.bipartite.sorted_edges() for p in parts] == [[(1, 1)], [(1, 1)]]

    def test_two_triangles(self):
        parts = split_at_cut_points(TWO_TRIANGLES)
        assert [p.mu.values for p in parts] == [(0, 0), (0, 0)]
        assert all(p.bipartite.sorted_edges() == [(1, 1), (1, 2), (2, 2)] for p in parts)

    @pytest.mark.parametrize("n", range(2, 8))
    def test_union_is_trimmed_initial_graph(self, n):
        for G in enumerate_glued(n):
            parts = split_at_cut_points(G)
            union = sorted(e for p in parts for e in p.original_generators())
            assert union == trimmed_initial_graph(G).sorted_edges()
            assert len(connected_components(trimmed_initial_graph(G))) == len(parts)
            shift = {v: v - 1 for v in G.vertices[1:]}
            same = {v: v for v in G.vertices[:-1]}
            assert shifted_initial_graph(G) == trimmed_initial_graph(G).relabel(same, shift)

from itertools import combinations

import pytest

from closedbetti.closed import (
    CutPointError,
    MuVector,
    MuVectorError,
    NotClosedError,
    chain_decompose,
    check_closed,
    from_mu,
    glue_blocks,
    mu_vector,
)
from closedbetti.enumeration import enumerate_glued, enumerate_mu_vectors
from closedbetti.graphs import DisconnectedGraphError, GraphError, LabeledGraph, cut_points, is_connected
from closedbetti.initial import trimmed_initial_graph


def all_labeled_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield LabeledGraph.on(n, [p for k, p in enumerate(pairs) if mask >> k & 1])


def closed_connected_by_brute_force(n):
    return {G for G in all_labeled_graphs(n) if is_connected(G) and check_closed(G)}


SIX_BLOCK_EDGES = {(1, 2), (1, 3), (2, 3), (2, 4), (2, 5), (3, 4), (3, 5), (3, 6), (4, 5), (4, 6), (5, 6)}


class TestCheckClosed:
    def test_path(self):
        assert check_closed(LabeledGraph.on(3, [(1, 2), (2, 3)]))

    def test_star_is_not_closed(self):
        assert not check_closed(LabeledGraph.on(4, [(1, 2), (1, 3), (1, 4)]))

    def test_six_block(self, six_block):
        assert six_block.edges == SIX_BLOCK_EDGES
        assert check_closed(six_block)

    def test_labeling_matters(self):
        # the path 2-1-3 is a relabeled closed graph but fails in this labeling
        assert not check_closed(LabeledGraph.on(3, [(1, 2), (1, 3)]))


class TestMuVector:
    @pytest.mark.parametrize("n", [2, 3, 5, 8])
    def test_complete_graph(self, n):
        K = LabeledGraph.on(n, combinations(range(1, n + 1), 2))
        assert mu_vector(K).values == (0,) * n

    def test_path(self):
        assert mu_vector(LabeledGraph.on(3, [(1, 2), (2, 3)])).values == (1, 0, 0)

    def test_six_block(self, six_block):
        mu = mu_vector(six_block)
        assert mu.values == (3, 1, 0, 0, 0, 0)
        assert mu.s == 2
        assert mu[1] == 3 and mu[6] == 0

    def test_errors(self):
        with pytest.raises(NotClosedError):
            mu_vector(LabeledGraph.on(4, [(1, 2), (1, 3), (1, 4)]))
        with pytest.raises(DisconnectedGraphError):
            mu_vector(LabeledGraph.on(3, [(1, 2)]))
        with pytest.raises(GraphError):
            mu_vector(LabeledGraph.on(1))

    def test_single_edge(self):
        assert mu_vector(LabeledGraph.on(2, [(1, 2)])).values == (0, 0)

    @pytest.mark.parametrize("bad", [(0, 1, 0), (1, 0), (-1, 0, 0), (2, 0, 0), ()])
    def test_invalid_vectors_rejected(self, bad):
        with pytest.raises(MuVectorError):
            MuVector(bad)

    def test_block_flavor(self):
        assert MuVector((1, 0, 0, 0)).is_block()
        assert not MuVector((1, 0, 0)).is_block()
        with pytest.raises(MuVectorError):
            MuVector((1, 0, 0)).require_block()


class TestFromMu:
    def test_triangle(self):
        assert from_mu((0, 0, 0)).edges == {(1, 2), (1, 3), (2, 3)}

    def test_six_block(self):
        assert from_mu((3, 1, 0, 0, 0, 0)).edges == SIX_BLOCK_EDGES

    def test_hand_expansion(self):
        G = from_mu((1, 0, 0, 0))
        assert G.edges == {(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)}
        assert mu_vector(G).values == (1, 0, 0, 0)

    def test_block_flag_rejects_cut_point_vectors(self):
        with pytest.raises(MuVectorError):
            from_mu((1, 0, 0), block=True)

    @pytest.mark.parametrize("n", range(2, 9))
    def test_round_trip_on_all_blocks(self, n):
        for mu in enumerate_mu_vectors(n):
            G = from_mu(mu)
            assert mu_vector(G) == mu
            assert not cut_points(G)


@pytest.mark.parametrize("n", range(2, 7))
def test_closed_connected_graphs_are_exactly_chains_of_blocks(n):
    brute = closed_connected_by_brute_force(n)
    assert brute == set(enumerate_glued(n))
    for G in brute:
        assert from_mu(mu_vector(G)) == G


@pytest.mark.parametrize("n", range(2, 8))
def test_upper_neighborhoods_are_interval_cliques(n):
    for G in enumerate_glued(n):
        for i in G.vertices:
            up = G.upper_neighbors(i)
            assert up == list(range(i + 1, i + 1 + len(up)))
            assert all(G.has_edge(a, b) for a, b in combinations(up, 2))
        mu = mu_vector(G).values
        assert list(mu) == sorted(mu, reverse=True) and mu[-2:] == (0, 0)


@pytest.mark.parametrize("n", range(2, 8))
def test_no_cut_point_iff_trimmed_initial_graph_connected(n):
    for G in enumerate_glued(n):
        assert (not cut_points(G)) == is_connected(trimmed_initial_graph(G))


class TestChainDecompose:
    def test_block_is_single(self, six_block):
        chain = chain_decompose(six_block)
        assert len(chain) == 1 and chain.cut_points == ()
        assert chain.blocks[0].mu.values == (3, 1, 0, 0, 0, 0)

    def test_path(self):
        chain = chain_decompose(LabeledGraph.on(4, [(1, 2), (2, 3), (3, 4)]))
        assert [b.vertices for b in chain.blocks] == [(1, 2), (2, 3), (3, 4)]
        assert chain.cut_points == (2, 3)
        assert chain.single_edge_blocks == [0, 1, 2]
        assert all(b.mu.values == (0, 0) for b in chain.blocks)

    def test_two_triangles(self):
        G = LabeledGraph.on(5, [(1, 2), (1, 3), (2, 3), (3, 4), (3, 5), (4, 5)])
        chain = chain_decompose(G)
        assert [b.vertices for b in chain.blocks] == [(1, 2, 3), (3, 4, 5)]
        assert chain.cut_points == (3,)
        assert chain.single_edge_blocks == []

    def test_propagates_closedness_errors(self):
        with pytest.raises(NotClosedError):
            chain_decompose(LabeledGraph.on(4, [(1, 2), (1, 3), (1, 4)]))

    @pytest.mark.parametrize("n", range(2, 8))
    def test_blocks_are_cut_point_free(self, n):
        for G in enumerate_glued(n):
            chain = chain_decompose(G)
            assert set(chain.cut_points) == cut_points(G)
            for b in chain.blocks:
                assert b.mu.is_block()
                assert not cut_points(G.induced(b.vertices))
            for a, b in zip(chain.blocks, chain.blocks[1:]):
                assert len(set(a.vertices) & set(b.vertices)) == 1

    def test_glue_round_trip(self):
        specs = [MuVector((1, 0, 0, 0)), MuVector((0, 0)), MuVector((0, 0, 0))]
        chain = chain_decompose(glue_blocks(specs))
        assert [b.mu for b in chain.blocks] == specs

    def test_cut_point_error_is_graph_error(self):
        assert issubclass(CutPointError, GraphError)

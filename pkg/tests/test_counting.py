import random
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from spantree import (
    Graph,
    complete,
    contract_edge,
    cycle,
    delete_edge,
    det_fraction_free,
    identify,
    laplacian,
    path,
    tau,
    tau_bruteforce,
)

from oracles import det_cofactor, random_multigraph


class TestLaplacian:
    def test_rows_sum_to_zero(self):
        rng = random.Random(3)
        for _ in range(50):
            g = random_multigraph(rng)
            assert all(sum(row) == 0 for row in laplacian(g))

    def test_multiplicities_counted(self):
        lap = laplacian(Graph(2, ((0, 1, 3),)))
        assert lap == [[3, -3], [-3, 3]]


class TestDeterminant:
    def test_empty_matrix_is_one(self):
        assert det_fraction_free([]) == 1

    def test_against_cofactor_expansion(self):
        rng = random.Random(11)
        for _ in range(300):
            k = rng.randint(1, 6)
            mat = [[rng.randint(-5, 5) for _ in range(k)] for _ in range(k)]
            assert det_fraction_free(mat) == det_cofactor(mat)

    def test_singular(self):
        assert det_fraction_free([[1, 2], [2, 4]]) == 0

    def test_needs_row_swap(self):
        assert det_fraction_free([[0, 1], [1, 0]]) == -1

    def test_input_not_mutated(self):
        mat = [[2, 1], [1, 2]]
        det_fraction_free(mat)
        assert mat == [[2, 1], [1, 2]]


class TestTau:
    def test_conventions(self):
        assert tau(Graph(0)) == 0
        assert tau(Graph(1)) == 1
        assert tau(Graph(2)) == 0  # disconnected

    def test_trees_have_one(self):
        assert tau(path(7)) == 1

    def test_cycle_length(self):
        for k in range(3, 9):
            assert tau(cycle(k)) == k

    def test_cayley(self):
        for n in range(3, 13):
            assert tau(complete(n)) == n ** (n - 2)

    def test_parallel_edges(self):
        assert tau(Graph(2, ((0, 1, 5),))) == 5

    def test_theta_graph(self):
        # two vertices joined by paths of lengths 1, 2, 2: count by hand
        g = Graph(4, ((0, 1), (0, 2), (2, 1), (0, 3), (3, 1)))
        assert tau(g) == tau_bruteforce(g) == 8

    def test_disconnected_is_zero(self):
        g = Graph(6, tuple(cycle(3).edges) + ((3, 4), (4, 5), (3, 5)))
        assert tau(g) == 0

    def test_block_multiplicativity(self):
        rng = random.Random(23)
        for _ in range(30):
            a = random_multigraph(rng, max_vertices=5, max_edges=6)
            b = random_multigraph(rng, max_vertices=5, max_edges=6)
            u = rng.randrange(a.n_vertices)
            v = rng.randrange(b.n_vertices)
            assert tau(identify(a, u, b, v)) == tau(a) * tau(b)


class TestBruteForce:
    def test_matches_tau_on_k4_subsets(self):
        pairs = list(combinations(range(4), 2))
        for mask in range(1 << 6):
            edges = tuple(p for i, p in enumerate(pairs) if mask >> i & 1)
            g = Graph(4, edges)
            assert tau(g) == tau_bruteforce(g)

    def test_random_multigraphs(self):
        rng = random.Random(5)
        for _ in range(100):
            g = random_multigraph(rng)
            assert tau(g) == tau_bruteforce(g)

    def test_budget_refusal(self):
        with pytest.raises(ValueError, match="budget"):
            tau_bruteforce(complete(9), budget=10)

    def test_too_few_edges(self):
        assert tau_bruteforce(Graph(3, ((0, 1),))) == 0


@settings(max_examples=60, deadline=None)
@given(mask=st.integers(0, 2**10 - 1), edge_index=st.integers(0, 9))
def test_deletion_contraction(mask, edge_index):
    """tau(G) = tau(G - e) + tau(G / e) for any edge e."""
    pairs = list(combinations(range(5), 2))
    g = Graph(5, tuple(p for i, p in enumerate(pairs) if mask >> i & 1))
    if not g.edges:
        return
    e = g.edges[edge_index % len(g.edges)][:2]
    assert tau(g) == tau(delete_edge(g, e)) + tau(contract_edge(g, e))

"""Pure-Python and compiled kernels must be interchangeable."""

import random

import pytest

from cliquefold import _backend
from cliquefold import _kernels_py as pure
from cliquefold.graphs import Graph, canonical_graph, complete, cycle, graph_from_code

compiled = _backend._compiled
needs_compiled = pytest.mark.skipif(
    compiled is None, reason="compiled kernels not built"
)


def _random_adj(rng, n, density):
    adj = [0] * n
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return adj


def test_backend_reports_which_kernels_run():
    assert _backend.BACKEND in ("compiled", "python")


@needs_compiled
def test_canonical_code_parity():
    rng = random.Random(9001)
    for _ in range(150):
        n = rng.randint(0, 9)
        adj = _random_adj(rng, n, rng.random())
        assert pure.canonical_code(n, adj) == compiled.canonical_code(n, adj)


@needs_compiled
def test_clique_count_vector_parity():
    rng = random.Random(9002)
    for _ in range(150):
        n = rng.randint(0, 9)
        adj = _random_adj(rng, n, rng.random())
        assert pure.clique_count_vector(n, adj) == compiled.clique_count_vector(n, adj)


@needs_compiled
def test_labeled_class_count_parity():
    for n in range(7):
        assert pure.labeled_class_count(n) == compiled.labeled_class_count(n)


def test_canonical_code_minimizes_over_labelings():
    # the canonical code is <= the code of the graph as labeled, and equals
    # it exactly on the canonical labeling
    rng = random.Random(9003)
    for _ in range(80):
        n = rng.randint(1, 8)
        adj = _random_adj(rng, n, rng.random())
        code = _backend.canonical_code(n, adj)
        g = Graph(n, adj)
        ident = 0
        k = 0
        for j in range(1, n):
            for i in range(j):
                ident = (ident << 1) | ((adj[i] >> j) & 1)
                k += 1
        assert code <= ident
        cg = canonical_graph(g)
        assert _backend.canonical_code(cg.n, cg.adj) == code
        assert graph_from_code(n, code) == cg


def test_canonical_code_many_matches_single():
    graphs = [complete(5), cycle(5), canonical_graph(Graph.from_edges(5, [(0, 3)]))]
    many = _backend.canonical_code_many(5, [g.adj for g in graphs])
    assert many == [_backend.canonical_code(5, g.adj) for g in graphs]


def test_labeled_class_counts_known():
    # isomorphism classes of simple graphs on 0..6 vertices
    expect = [1, 1, 2, 4, 11, 34, 156]
    for n, v in enumerate(expect):
        assert _backend.labeled_class_count(n) == v


def test_clique_count_vector_shapes():
    # index t holds the t-clique count; slot 0 is always 0 (no empty clique)
    n, adj = 4, [0b1110, 0b1101, 0b1011, 0b0111]  # K_4
    assert _backend.clique_count_vector(n, adj) == [0, 4, 6, 4, 1]
    assert _backend.clique_count_vector(0, []) == [0]

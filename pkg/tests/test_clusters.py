"""Tight edges, cluster detection, folding, discharging, reduction."""

from fractions import Fraction
from math import comb

import pytest

from cliquefold import (
    Cluster,
    DomainError,
    Graph,
    are_isomorphic,
    complete,
    cycle,
    discharge_audit,
    disjoint_union,
    edgeless,
    find_clusters,
    fold,
    is_dischargeable,
    is_foldable,
    mu,
    reduce_graph,
    star,
    tight_edges,
    triangle_count,
)
from cliquefold.search import SearchSpace, enumerate_graphs

from oracles import cluster_gadget, gadget_bound


# ---------------------------------------------------------------------------
# tight edges
# ---------------------------------------------------------------------------


def test_tight_edges_in_complete_graph():
    # every edge of K_{r+1} lies in r-1 triangles
    for r in range(1, 6):
        assert len(tight_edges(complete(r + 1), r)) == comb(r + 1, 2)


def test_tight_edges_examples():
    assert tight_edges(cycle(5), 2) == []  # all weights 0
    assert tight_edges(complete(3), 2) == [(0, 1), (0, 2), (1, 2)]
    # K_4 at bound 4: weight 2, not 3 -> nothing is tight
    assert tight_edges(complete(4), 4) == []
    with pytest.raises(DomainError):
        tight_edges(complete(5), 3)  # degree 4 over the bound


# ---------------------------------------------------------------------------
# cluster detection
# ---------------------------------------------------------------------------


def test_cluster_of_complete_component():
    g = disjoint_union(complete(4), complete(3))
    clusters = find_clusters(g, 3)
    assert len(clusters) == 1  # K_3 vertices have degree 2: no tight pair at bound 3
    c = clusters[0]
    assert c.core == (0, 1, 2, 3)
    assert c.shared == ()
    assert c.missing == edgeless(0)


def test_cluster_with_shared_set():
    # vertices 0,1 are a tight pair; 2,3 shared; missing graph is one edge
    g = Graph.from_edges(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 4), (3, 4)])
    (c,) = find_clusters(g, 3)
    assert (c.core, c.shared) == ((0, 1), (2, 3))
    assert c.missing.num_edges == 1
    assert c.core_size == 2 and c.shared_size == 2
    assert is_foldable(c)        # 2 * 1 >= mu(K_2) = 0
    assert not is_dischargeable(c)  # 2 * 1 < 2 + 2 - 1


def test_clusters_are_vertex_disjoint_and_ordered():
    g = disjoint_union(complete(4), complete(4))
    clusters = find_clusters(g, 3)
    assert [c.core for c in clusters] == [(0, 1, 2, 3), (4, 5, 6, 7)]
    cores = [v for c in clusters for v in c.core]
    assert len(cores) == len(set(cores))


def test_gadget_cluster_structure():
    for p in range(1, 4):
        for q in range(0, 3):
            for t in range(1, 4):
                g = cluster_gadget(t, p, q)
                r = gadget_bound(t, p, q)
                if t == 1:
                    # a lone vertex is not a tight component; no cluster reported
                    assert find_clusters(g, r) == []
                    continue
                (c,) = find_clusters(g, r)
                assert c.core_size == t
                assert c.shared_size == 1 + p + 2 * q
                assert are_isomorphic(
                    c.missing, disjoint_union(star(p), *[complete(2)] * q)
                )


def test_gadget_dichotomy_split():
    # with missing graph K_{1,p} u q.K_2: dischargeable iff t <= p,
    # and foldable whenever t > p
    for p in range(1, 5):
        for q in range(0, 3):
            for t in range(2, 6):
                if t + 1 + p + 2 * q > 12:
                    continue
                (c,) = find_clusters(cluster_gadget(t, p, q), gadget_bound(t, p, q))
                assert is_dischargeable(c) == (t <= p)
                if t > p:
                    assert is_foldable(c)
                assert is_foldable(c) or is_dischargeable(c)


def test_no_clusters_without_tight_edges():
    assert find_clusters(cycle(6), 2) == []
    assert find_clusters(edgeless(4), 0) == []
    assert find_clusters(star(3), 3) == []


# ---------------------------------------------------------------------------
# folding
# ---------------------------------------------------------------------------


def test_fold_completes_and_severs():
    g = cluster_gadget(2, 1, 0)  # core {0,1}, shared of size 2, missing = K_2
    r = gadget_bound(2, 1, 0)
    (c,) = find_clusters(g, r)
    folded = fold(g, c)
    block = set(c.core) | set(c.shared)
    for u in block:
        for v in block:
            if u != v:
                assert folded.has_edge(u, v)
        for w in range(folded.n):
            if w not in block:
                assert not folded.has_edge(u, w)
    assert folded.max_degree() <= r
    gain = triangle_count(folded) - triangle_count(g)
    assert gain == 2  # t * e(R) - mu(R) = 2*1 - 0, met with equality here


def test_fold_gain_meets_bound_on_gadgets():
    for p in range(1, 4):
        for q in range(0, 3):
            for t in range(2, 5):
                if t + 1 + p + 2 * q > 11:
                    continue
                g = cluster_gadget(t, p, q)
                r = gadget_bound(t, p, q)
                (c,) = find_clusters(g, r)
                folded = fold(g, c)
                gain = triangle_count(folded) - triangle_count(g)
                assert gain >= t * c.missing.num_edges - mu(c.missing)
                assert folded.max_degree() <= r


def test_fold_rejects_stale_cluster():
    g = cluster_gadget(2, 1, 1)
    r = gadget_bound(2, 1, 1)
    (c,) = find_clusters(g, r)
    folded = fold(g, c)
    with pytest.raises(DomainError):
        fold(folded, c)  # cluster no longer matches the graph


def test_fold_rejects_fabricated_cluster():
    g = cycle(6)
    bogus = Cluster(core=(0, 1), shared=(2, 5), missing=complete(2), bound=2)
    with pytest.raises(DomainError):
        fold(g, bogus)


# ---------------------------------------------------------------------------
# discharging
# ---------------------------------------------------------------------------


def test_discharge_benefit_formula_exact():
    # post-transfer cluster benefit must be -C(t,2) + (t/2)(2 e(R) - s), exactly
    for p in range(1, 5):
        for q in range(0, 3):
            for t in range(2, 5):
                if t + 1 + p + 2 * q > 11:
                    continue
                g = cluster_gadget(t, p, q)
                r = gadget_bound(t, p, q)
                audit = discharge_audit(g, r)
                (ca,) = audit.clusters
                s = 1 + p + 2 * q
                e_r = p + q
                expected = -Fraction(comb(t, 2)) + Fraction(t, 2) * (2 * e_r - s)
                assert ca.benefit == expected
                assert (ca.benefit >= 0) == ca.dischargeable == (t <= p)


def test_discharge_edge_classes_partition():
    g = cluster_gadget(3, 2, 1)  # shared set has 1 + 2 + 2 = 5 vertices
    audit = discharge_audit(g, gadget_bound(3, 2, 1))
    assert audit.cluster_edges + audit.associated_edges + audit.other_edges == g.num_edges
    assert audit.cluster_edges == comb(3, 2)
    assert audit.associated_edges == 3 * 5  # every core-to-shared pair is an edge


def test_discharge_total_is_plain_benefit_sum():
    g = cluster_gadget(2, 3, 1)
    r = gadget_bound(2, 3, 1)
    audit = discharge_audit(g, r)
    total = sum(Fraction(r - 2 - (g.adj[u] & g.adj[v]).bit_count())
                for u, v in g.edges())
    assert audit.total_benefit == total
    assert (
        audit.cluster_benefit + audit.associated_benefit + audit.other_benefit
        == audit.total_benefit
    )


def test_discharge_average_weight_bound_when_dischargeable():
    # t <= p: the lone cluster is dischargeable, so average weight <= r - 2
    g = cluster_gadget(2, 3, 0)
    r = gadget_bound(2, 3, 0)
    audit = discharge_audit(g, r)
    assert audit.all_dischargeable
    assert audit.total_benefit >= 0
    assert audit.average_weight <= r - 2


def test_discharge_complete_component_is_not_dischargeable():
    audit = discharge_audit(complete(4), 3)
    assert not audit.all_dischargeable  # s = 0: nothing to transfer from
    assert audit.average_weight == 2  # every weight is r - 1


def test_discharge_without_edges():
    audit = discharge_audit(edgeless(3), 2)
    assert audit.average_weight is None
    assert audit.total_benefit == 0
    assert audit.clusters == ()


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------


def test_reduce_peels_complete_components():
    res = reduce_graph(disjoint_union(complete(4), complete(4)), 3)
    assert res.blocks == 2
    assert res.remainder.n == 0
    assert res.folds == ()


def test_reduce_folds_then_peels():
    g = cluster_gadget(2, 1, 0)  # 4 vertices; folding completes the whole graph
    res = reduce_graph(g, 3)
    assert res.blocks == 1
    assert res.remainder.n == 0
    assert len(res.folds) == 1
    step = res.folds[0]
    assert step.gain >= step.gain_bound == 2


def test_reduce_keeps_isolated_vertices_except_at_bound_zero():
    res = reduce_graph(disjoint_union(complete(2), edgeless(1)), 1)
    assert res.blocks == 1
    assert res.remainder == edgeless(1)
    # at bound 0 the blocks are single vertices, so everything peels
    res0 = reduce_graph(edgeless(5), 0)
    assert res0.blocks == 5 and res0.remainder.n == 0


def test_reduce_leaves_unfoldable_graphs_alone():
    res = reduce_graph(cycle(5), 2)
    assert res.blocks == 0 and res.folds == ()
    assert res.remainder == cycle(5)
    assert not res.remainder_within_threshold  # 27*25 > 4*4*9


def test_reduce_invariants_exhaustive():
    for n, r in [(6, 2), (6, 3), (7, 3)]:
        for g in enumerate_graphs(SearchSpace(n, max_degree=r)):
            res = reduce_graph(g, r)
            assert res.blocks * (r + 1) + res.remainder.n == n
            assert not any(is_foldable(c) for c in find_clusters(res.remainder, r))
            for step in res.folds:
                assert step.gain >= step.gain_bound
            # no complete block survives in the remainder
            again = reduce_graph(res.remainder, r)
            assert again.blocks == 0 and again.folds == ()


def test_reduce_rejects_overdegree_input():
    with pytest.raises(DomainError):
        reduce_graph(complete(5), 3)

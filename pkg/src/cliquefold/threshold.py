"""Threshold graphs, lex graphs, star-plus-matching, and compression.

A threshold graph on n vertices is encoded by a bit string of length n - 1:
vertex u is adjacent to every later vertex exactly when bit u is '1'.  Under
this encoding the edge count is the sum of n - 1 - u over the set bit
positions u, each edge counted once at its lower endpoint.

The *lex graph* on n vertices with m edges takes the first m pairs in
lexicographic order; it is a threshold graph, with code 1^a 0...0 1 0...0
(a full rows plus one partial row), and it maximizes mu = 2*triangles +
cherries among all graphs with the same n and m.

At the sparse end (n/2 <= m < n - 1), the *star-plus-matching*
K_{1,p} u q.K_2 with p = 2m - n + 1 and q = n - m - 1 maximizes mu among
graphs with n vertices, m edges, and minimum degree >= 1; its mu is
C(p, 2), all of it the star's cherries.  So mu <= C(2m - n + 1, 2) on that
whole family, which is what keeps sparse missing-edge graphs foldable.

*Compression* from a source vertex toward a target vertex re-homes every
neighbor of the source outside the target's closed neighborhood, replacing
each such edge source-w with target-w.  It preserves the vertex and edge
counts and never decreases mu; iterating it drives any graph toward a
threshold graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import DomainError, Graph, disjoint_union, star


# ---------------------------------------------------------------------------
# threshold codes
# ---------------------------------------------------------------------------


def _check_code(code: str) -> None:
    if any(c not in "01" for c in code):
        raise ValueError(f"threshold code must be over 0/1, got {code!r}")


def threshold_from_code(code: str) -> Graph:
    """Graph on len(code) + 1 vertices; bit u = '1' joins u to all later vertices."""
    _check_code(code)
    n = len(code) + 1
    adj = [0] * n
    for u, c in enumerate(code):
        if c == "1":
            later = ((1 << n) - 1) >> (u + 1) << (u + 1)
            adj[u] |= later
            for v in range(u + 1, n):
                adj[v] |= 1 << u
    return Graph(n, adj, _validate=False)


def threshold_edge_count(code: str) -> int:
    """Edge count straight from the code: sum of n - 1 - u over set bits u."""
    _check_code(code)
    n = len(code) + 1
    return sum(n - 1 - u for u, c in enumerate(code) if c == "1")


# ---------------------------------------------------------------------------
# lex graphs
# ---------------------------------------------------------------------------


def lex_code(n: int, m: int) -> str:
    """Threshold code of the lex graph: a full rows, then one partial row.

    a is the largest number of saturated initial vertices whose edges
    a(2n - a - 1)/2 fit inside m; the leftover edges form one star row whose
    bit sits at position n - 1 - leftover so that it contributes exactly
    leftover edges.
    """
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if not 0 <= m <= comb(n, 2):
        raise DomainError(f"edge count {m} out of range for n={n}")
    a = 0
    while a < n - 1 and (a + 1) * (2 * n - a - 2) // 2 <= m:
        a += 1
    leftover = m - a * (2 * n - a - 1) // 2
    bits = ["1"] * a + ["0"] * (n - 1 - a)
    if leftover:
        bits[n - 1 - leftover] = "1"
    return "".join(bits)


def lex_graph(n: int, m: int) -> Graph:
    """First m edges in lexicographic pair order, as a threshold graph."""
    if n < 1:
        raise ValueError(f"need at least one vertex, got n={n}")
    if not 0 <= m <= comb(n, 2):
        raise DomainError(f"edge count {m} out of range for n={n}")
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if len(edges) == m:
                return Graph.from_edges(n, edges)
            edges.append((u, v))
    return Graph.from_edges(n, edges)


# ---------------------------------------------------------------------------
# star plus matching
# ---------------------------------------------------------------------------


def _star_matching_parts(n: int, m: int) -> tuple[int, int]:
    if 2 * m < n or m >= n - 1:
        raise DomainError(
            f"star-plus-matching needs n/2 <= m < n-1, got n={n} m={m}"
        )
    return 2 * m - n + 1, n - m - 1


def star_matching_graph(n: int, m: int) -> Graph:
    """K_{1,2m-n+1} plus n-m-1 disjoint edges: n vertices, m edges, min degree 1."""
    p, q = _star_matching_parts(n, m)
    pieces = [star(p)]
    pieces.extend(Graph.from_edges(2, [(0, 1)]) for _ in range(q))
    return disjoint_union(*pieces)


def mu_bound_min_degree_one(n: int, m: int) -> int:
    """Largest mu any n-vertex, m-edge graph with min degree >= 1 can reach.

    Equals mu of the star-plus-matching: C(2m-n+1, 2).
    """
    p, _ = _star_matching_parts(n, m)
    return comb(p, 2)


# ---------------------------------------------------------------------------
# compression
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CompressionSplit:
    """How a source/target pair partitions the source's and target's neighbors.

    moved  -- neighbors of source outside the target's closed neighborhood;
              compression re-homes exactly these
    shared -- common neighbors of source and target
    kept   -- neighbors of target (other than source) not adjacent to source
    adjacent -- whether source and target are themselves adjacent
    """

    moved: tuple[int, ...]
    shared: tuple[int, ...]
    kept: tuple[int, ...]
    adjacent: bool


def compression_split(g: Graph, source: int, target: int) -> CompressionSplit:
    if not (0 <= source < g.n and 0 <= target < g.n):
        raise ValueError(f"vertex out of range: ({source}, {target})")
    if source == target:
        raise DomainError("source and target must differ")
    closed_t = g.adj[target] | (1 << target)
    moved = g.adj[source] & ~closed_t
    shared = g.adj[source] & g.adj[target]
    kept = g.adj[target] & ~g.adj[source] & ~(1 << source)
    return CompressionSplit(
        moved=tuple(_bits(moved)),
        shared=tuple(_bits(shared)),
        kept=tuple(_bits(kept)),
        adjacent=g.has_edge(source, target),
    )


def compress(g: Graph, source: int, target: int) -> Graph:
    """Re-home the source's private neighbors onto the target.

    Each edge source-w with w outside the target's closed neighborhood
    becomes target-w.  Vertex and edge counts are preserved; mu never
    decreases.
    """
    split = compression_split(g, source, target)
    adj = list(g.adj)
    for w in split.moved:
        adj[source] &= ~(1 << w)
        adj[w] &= ~(1 << source)
        adj[target] |= 1 << w
        adj[w] |= 1 << target
    return Graph(g.n, adj, _validate=False)


def _bits(mask: int):
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield v

"""Graph data model and counting primitives.

Graphs are immutable, simple, undirected, on at most 64 vertices, stored as
one neighbor bitmask per vertex (bit v of adj[u] set iff uv is an edge).
That representation makes the quantities this package cares about cheap:

  * clique counts via recursive candidate-set intersection,
  * the weight of an edge xy = number of common neighbors of x and y
    (equivalently, the number of triangles through xy),
  * the census of 3-vertex induced subgraphs (triangle / cherry / one-edge /
    empty), and mu = 2*triangles + cherries,
  * an exact canonical form for isomorphism tests and deduplication.

Counting never includes the empty set: count_all_cliques sums sizes >= 1.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import _backend

MAX_VERTICES = 64


class CapacityError(ValueError):
    """Graph exceeds the fixed 64-vertex capacity of the bitmask layout."""


class DomainError(ValueError):
    """Arguments are structurally valid but violate an operation's premise."""


class InvariantViolation(RuntimeError):
    """A consistency check that should be unbreakable failed; a bug, not bad input."""


# ---------------------------------------------------------------------------
# data model
# ---------------------------------------------------------------------------


class Graph:
    """Immutable simple graph on vertices 0..n-1 with bitmask adjacency."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Iterable[int], _validate: bool = True):
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        masks = tuple(adj)
        if _validate:
            if len(masks) != n:
                raise ValueError(f"expected {n} adjacency masks, got {len(masks)}")
            full = (1 << n) - 1
            for u, m in enumerate(masks):
                if m & ~full:
                    raise ValueError(f"adjacency mask of vertex {u} references vertices >= {n}")
                if (m >> u) & 1:
                    raise ValueError(f"self-loop at vertex {u}")
            for u, m in enumerate(masks):
                mm = m
                while mm:
                    v = (mm & -mm).bit_length() - 1
                    mm &= mm - 1
                    if not (masks[v] >> u) & 1:
                        raise ValueError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", masks)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build from an edge list; duplicate edges are merged."""
        if n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {n}")
        if n > MAX_VERTICES:
            raise CapacityError(f"at most {MAX_VERTICES} vertices supported, got {n}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, _validate=False)

    # -- queries ------------------------------------------------------------

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self.adj)

    def max_degree(self) -> int:
        return max((m.bit_count() for m in self.adj), default=0)

    def min_degree(self) -> int:
        return min((m.bit_count() for m in self.adj), default=0)

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool((self.adj[u] >> v) & 1)

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            m = self.adj[u] >> (u + 1)
            base = u + 1
            while m:
                v = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((u, base + v))
        return out

    # -- derived graphs -----------------------------------------------------

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        return Graph(
            self.n,
            (full & ~m & ~(1 << v) for v, m in enumerate(self.adj)),
            _validate=False,
        )

    def subgraph(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, relabeled 0..k-1 following sorted vertex order."""
        vs = sorted(set(vertices))
        for v in vs:
            if not 0 <= v < self.n:
                raise ValueError(f"vertex {v} out of range")
        index = {v: i for i, v in enumerate(vs)}
        adj = [0] * len(vs)
        for v in vs:
            m = self.adj[v]
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                if w in index:
                    adj[index[v]] |= 1 << index[w]
        return Graph(len(vs), adj, _validate=False)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Image under the permutation mapping old vertex v to perm[v]."""
        p = tuple(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("not a permutation of the vertex set")
        adj = [0] * self.n
        for v, m in enumerate(self.adj):
            while m:
                w = (m & -m).bit_length() - 1
                m &= m - 1
                adj[p[v]] |= 1 << p[w]
        return Graph(self.n, adj, _validate=False)

    # -- plumbing -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        es = self.edges()
        shown = ", ".join(f"{u}-{v}" for u, v in es[:12])
        if len(es) > 12:
            shown += ", ..."
        return f"Graph(n={self.n}, m={len(es)}: {shown})"


def _bits(mask: int) -> Iterator[int]:
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        yield v


# ---------------------------------------------------------------------------
# standard constructions
# ---------------------------------------------------------------------------


def edgeless(n: int) -> Graph:
    return Graph(n, [0] * n, _validate=False)


def complete(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, (full & ~(1 << v) for v in range(n)), _validate=False)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)]) if n else edgeless(0)


def complete_bipartite(p: int, q: int) -> Graph:
    if p < 0 or q < 0:
        raise ValueError("part sizes must be nonnegative")
    return Graph.from_edges(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def star(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 is the center."""
    return complete_bipartite(1, leaves)


def disjoint_union(*graphs: Graph) -> Graph:
    n = sum(g.n for g in graphs)
    if n > MAX_VERTICES:
        raise CapacityError(f"union has {n} vertices; capacity is {MAX_VERTICES}")
    adj: list[int] = []
    offset = 0
    for g in graphs:
        adj.extend(m << offset for m in g.adj)
        offset += g.n
    return Graph(n, adj, _validate=False)


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union plus all edges between the two sides."""
    n = g.n + h.n
    if n > MAX_VERTICES:
        raise CapacityError(f"join has {n} vertices; capacity is {MAX_VERTICES}")
    h_mask = ((1 << h.n) - 1) << g.n
    g_mask = (1 << g.n) - 1
    adj = [m | h_mask for m in g.adj]
    adj.extend((m << g.n) | g_mask for m in h.adj)
    return Graph(n, adj, _validate=False)


# ---------------------------------------------------------------------------
# clique counting
# ---------------------------------------------------------------------------


def clique_counts(g: Graph) -> tuple[int, ...]:
    """counts[t] = number of cliques on exactly t vertices; counts[0] == 0."""
    return tuple(_backend.clique_count_vector(g.n, g.adj))


def count_cliques_of_size(g: Graph, t: int) -> int:
    if t < 1:
        raise ValueError(f"clique size must be >= 1, got {t}")
    if t > g.n:
        return 0
    return _backend.clique_count_vector(g.n, g.adj)[t]


def count_all_cliques(g: Graph) -> int:
    """Total number of complete subgraphs on >= 1 vertices."""
    return sum(_backend.clique_count_vector(g.n, g.adj)[1:])


def triangle_count(g: Graph) -> int:
    """Triangles via common-neighbor popcounts over edges; a second route
    alongside the recursive counter, kept deliberately independent."""
    total = 0
    for u in range(g.n):
        m = g.adj[u] >> (u + 1)
        base = u + 1
        while m:
            v = (m & -m).bit_length() - 1 + base
            m &= m - 1
            total += (g.adj[u] & g.adj[v]).bit_count()
    return total // 3


# ---------------------------------------------------------------------------
# edge weights
# ---------------------------------------------------------------------------


def edge_weight(g: Graph, x: int, y: int) -> int:
    """Number of common neighbors of the adjacent pair x, y."""
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise ValueError(f"vertex out of range: ({x}, {y})")
    if x == y or not g.has_edge(x, y):
        raise DomainError(f"({x}, {y}) is not an edge")
    return (g.adj[x] & g.adj[y]).bit_count()


def edge_benefit(g: Graph, x: int, y: int, bound: int) -> int:
    """bound - 2 - weight(xy): slack of edge xy against average weight bound-2.

    Requires max degree <= bound.  A tight edge (weight bound-1) has
    benefit -1; every other edge has benefit >= 0.
    """
    if g.max_degree() > bound:
        raise DomainError(f"max degree {g.max_degree()} exceeds bound {bound}")
    return bound - 2 - edge_weight(g, x, y)


def weight_sum(g: Graph) -> int:
    """Sum of edge weights; always 3 * (number of triangles)."""
    return sum(edge_weight(g, u, v) for u, v in g.edges())


# ---------------------------------------------------------------------------
# triple census and mu
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TripleCensus:
    """Counts of 3-vertex induced subgraphs by number of edges (3, 2, 1, 0)."""

    triangles: int
    cherries: int
    one_edge: int
    empty: int

    @property
    def total(self) -> int:
        return self.triangles + self.cherries + self.one_edge + self.empty

    @property
    def mu(self) -> int:
        return 2 * self.triangles + self.cherries


def triple_census(g: Graph) -> TripleCensus:
    """Classify every vertex triple by its induced edge count.

    Counted directly (not derived from degree identities) so the degree and
    edge-count identities stay meaningful as independent cross-checks.
    """
    tri = cher = one = empty = 0
    adj = g.adj
    for i in range(g.n):
        ai = adj[i]
        for j in range(i + 1, g.n):
            ij = (ai >> j) & 1
            aj = adj[j]
            for k in range(j + 1, g.n):
                e = ij + ((ai >> k) & 1) + ((aj >> k) & 1)
                if e == 3:
                    tri += 1
                elif e == 2:
                    cher += 1
                elif e == 1:
                    one += 1
                else:
                    empty += 1
    return TripleCensus(tri, cher, one, empty)


def mu(g: Graph) -> int:
    """2*(triangles) + (cherries): the potential governing foldability."""
    c = triple_census(g)
    return 2 * c.triangles + c.cherries


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def canonical_form(g: Graph) -> bytes:
    """Exact isomorphism key: vertex count byte + minimal triangle code.

    Two graphs get equal keys iff they are isomorphic.  The code is the
    minimum over all orderings of the upper adjacency triangle read column by
    column, packed big-endian.  Exact search; practical at enumeration scale
    (n around 12 or below), cost grows with the automorphism count above that.
    """
    code = _backend.canonical_code(g.n, g.adj)
    nbytes = (g.n * (g.n - 1) // 2 + 7) // 8
    return bytes([g.n]) + code.to_bytes(nbytes, "big")


def canonical_graph(g: Graph) -> Graph:
    """The canonically labeled representative of g's isomorphism class."""
    code = _backend.canonical_code(g.n, g.adj)
    return graph_from_code(g.n, code)


def graph_from_code(n: int, code: int) -> Graph:
    """Rebuild a graph from a column-major upper-triangle bit code."""
    total = n * (n - 1) // 2
    adj = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if (code >> (total - 1 - k)) & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            k += 1
    return Graph(n, adj, _validate=False)


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and canonical_form(g) == canonical_form(h)

"""Tight edges, clusters, folding, and discharging.

Fix a degree bound r and a graph G with max degree <= r.  An edge xy is
*tight* when it lies in r-1 triangles, the most an edge can manage under the
bound; equivalently x and y have degree r and identical closed neighborhoods.
A *cluster* is a connected component of the tight-edge graph.  Each cluster
is a clique T whose members all see the same outside set S (their common
neighborhood), with |T| + |S| = r + 1.  Writing R for the graph of *missing*
edges inside S (the complement of the induced subgraph on S), two exact
quantities decide everything:

  foldable:       |T| * e(R) >= mu(R)
  dischargeable:  2 * e(R)  >= |S| + |T| - 1

*Folding* completes S into a clique and cuts S off from the rest of the
graph, turning T u S into a complete component on r+1 vertices without
raising the max degree; when the cluster is foldable the triangle count
never drops (it gains at least |T|*e(R) - mu(R)).  *Discharging* spreads
each cluster-to-S edge's benefit (r - 2 - weight, always d_R(v) - 1 for
these edges) half to each incident cluster; a cluster is dischargeable
exactly when its edges end up with nonnegative total benefit, and if every
cluster is dischargeable the average edge weight of G is at most r - 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import (
    DomainError,
    Graph,
    InvariantViolation,
    edge_weight,
    mu,
    triangle_count,
)


def _require_bound(g: Graph, bound: int) -> None:
    if bound < 0:
        raise ValueError(f"degree bound must be nonnegative, got {bound}")
    d = g.max_degree()
    if d > bound:
        raise DomainError(f"max degree {d} exceeds bound {bound}")


def tight_edges(g: Graph, bound: int) -> list[tuple[int, int]]:
    """Edges whose weight (common-neighbor count) is exactly bound - 1."""
    _require_bound(g, bound)
    out = []
    for u, v in g.edges():
        if (g.adj[u] & g.adj[v]).bit_count() == bound - 1:
            out.append((u, v))
    return out


# ---------------------------------------------------------------------------
# clusters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cluster:
    """A maximal tight clique, its common neighborhood, and missing edges.

    core    -- vertices of the tight clique (sorted)
    shared  -- common neighborhood of the core (sorted)
    missing -- graph on the shared set whose edges are the pairs *not*
               adjacent in the host graph; vertex i of missing is shared[i]
    bound   -- the degree bound the cluster was found under
    """

    core: tuple[int, ...]
    shared: tuple[int, ...]
    missing: Graph
    bound: int

    @property
    def core_size(self) -> int:
        return len(self.core)

    @property
    def shared_size(self) -> int:
        return len(self.shared)


def is_foldable(c: Cluster) -> bool:
    """core_size * e(missing) >= mu(missing): folding cannot lose triangles."""
    return c.core_size * c.missing.num_edges >= mu(c.missing)


def is_dischargeable(c: Cluster) -> bool:
    """2 e(missing) >= shared_size + core_size - 1: transfers repay the core."""
    return 2 * c.missing.num_edges >= c.shared_size + c.core_size - 1


def _common_neighborhood(g: Graph, core_mask: int) -> int:
    inter = (1 << g.n) - 1
    m = core_mask
    while m:
        v = (m & -m).bit_length() - 1
        m &= m - 1
        inter &= g.adj[v]
    return inter & ~core_mask


def _mask_vertices(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        v = (mask & -mask).bit_length() - 1
        mask &= mask - 1
        out.append(v)
    return tuple(out)


def _build_cluster(g: Graph, bound: int, core_mask: int) -> Cluster:
    """Assemble a Cluster from a tight-edge component, checking every
    structural invariant; failures are internal errors, not bad input."""
    core = _mask_vertices(core_mask)
    t = len(core)
    for x in core:
        if g.degree(x) != bound:
            raise InvariantViolation(
                f"tight-component vertex {x} has degree {g.degree(x)}, expected {bound}"
            )
    closed = {g.adj[x] | (1 << x) for x in core}
    if len(closed) != 1:
        raise InvariantViolation(f"core {core} members disagree on closed neighborhood")
    for x, y in _pairs(core):
        if not g.has_edge(x, y):
            raise InvariantViolation(f"tight component {core} is not a clique ({x},{y} missing)")
        if (g.adj[x] & g.adj[y]).bit_count() != bound - 1:
            raise InvariantViolation(f"core pair ({x},{y}) is not tight")
    shared_mask = _common_neighborhood(g, core_mask)
    if closed.pop() != core_mask | shared_mask:
        raise InvariantViolation(f"closed neighborhood of core {core} is not core + shared")
    shared = _mask_vertices(shared_mask)
    if t + len(shared) != bound + 1:
        raise InvariantViolation(
            f"cluster sizes {t} + {len(shared)} != bound + 1 = {bound + 1}"
        )
    missing = g.subgraph(shared).complement()
    if shared and missing.min_degree() < 1:
        raise InvariantViolation(
            f"core {core} is not maximal: a shared vertex is adjacent to all others"
        )
    return Cluster(core=core, shared=shared, missing=missing, bound=bound)


def _pairs(seq):
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            yield seq[i], seq[j]


def find_clusters(g: Graph, bound: int) -> list[Cluster]:
    """Connected components of the tight-edge graph, validated and ordered
    by least core vertex.  Distinct clusters have disjoint cores."""
    edges = tight_edges(g, bound)
    tight_adj = [0] * g.n
    for u, v in edges:
        tight_adj[u] |= 1 << v
        tight_adj[v] |= 1 << u
    seen = 0
    clusters = []
    for v in range(g.n):
        if not tight_adj[v] or (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = tight_adj[u] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        clusters.append(_build_cluster(g, bound, comp))
    return clusters


# ---------------------------------------------------------------------------
# folding
# ---------------------------------------------------------------------------


def _validate_cluster(g: Graph, c: Cluster) -> None:
    try:
        rebuilt = _build_cluster(g, c.bound, _mask_of(c.core))
    except InvariantViolation as exc:
        raise DomainError(f"not a valid cluster of this graph: {exc}") from exc
    if rebuilt.shared != c.shared or rebuilt.missing != c.missing:
        raise DomainError("cluster does not match this graph (stale shared set)")
    _require_bound(g, c.bound)


def _mask_of(vertices) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def fold(g: Graph, c: Cluster) -> Graph:
    """Complete the shared set and sever it from the rest of the graph.

    Leaves core + shared as a complete component on bound+1 vertices.  The
    max degree never rises, and for a foldable cluster the triangle count
    gains at least core_size * e(missing) - mu(missing).
    """
    _validate_cluster(g, c)
    core_mask = _mask_of(c.core)
    shared_mask = _mask_of(c.shared)
    inside = core_mask | shared_mask
    adj = list(g.adj)
    for v in c.shared:
        adj[v] = (adj[v] | shared_mask | core_mask) & ~(1 << v) & inside
    outside = ((1 << g.n) - 1) & ~inside
    m = outside
    while m:
        w = (m & -m).bit_length() - 1
        m &= m - 1
        adj[w] &= ~shared_mask
    return Graph(g.n, adj, _validate=False)


@dataclass(frozen=True)
class FoldStep:
    """Audit record of one executed fold (labels are at fold time)."""

    core: tuple[int, ...]
    shared: tuple[int, ...]
    missing_edges: int
    missing_mu: int
    triangles_before: int
    triangles_after: int

    @property
    def gain(self) -> int:
        return self.triangles_after - self.triangles_before

    @property
    def gain_bound(self) -> int:
        return len(self.core) * self.missing_edges - self.missing_mu


# ---------------------------------------------------------------------------
# discharging
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ClusterAudit:
    core: tuple[int, ...]
    dischargeable: bool
    benefit: Fraction


@dataclass(frozen=True)
class DischargeAudit:
    """Edge-benefit ledger after half-transfers from cluster-to-shared edges.

    Each edge's benefit is bound - 2 - weight.  Edges inside a core count as
    cluster edges; edges with an endpoint in some core are associated and
    give half their benefit to each incident cluster; the rest keep theirs.
    Transfers only move value, so total_benefit is the plain sum over edges,
    and average_weight <= bound - 2 exactly when total_benefit >= 0.
    """

    bound: int
    clusters: tuple[ClusterAudit, ...]
    cluster_edges: int
    associated_edges: int
    other_edges: int
    cluster_benefit: Fraction
    associated_benefit: Fraction
    other_benefit: Fraction
    total_benefit: Fraction
    average_weight: Fraction | None

    @property
    def all_dischargeable(self) -> bool:
        return all(c.dischargeable for c in self.clusters)


def discharge_audit(g: Graph, bound: int) -> DischargeAudit:
    _require_bound(g, bound)
    clusters = find_clusters(g, bound)
    core_index: dict[int, int] = {}
    shared_sets = []
    for i, c in enumerate(clusters):
        for v in c.core:
            core_index[v] = i
        shared_sets.append(set(c.shared))

    received = [Fraction(0)] * len(clusters)
    core_edge_benefit = [Fraction(0)] * len(clusters)
    n_cluster = n_assoc = n_other = 0
    assoc_kept = Fraction(0)
    other_total = Fraction(0)
    total = Fraction(0)
    wsum = 0
    edges = g.edges()
    for u, v in edges:
        w = edge_weight(g, u, v)
        wsum += w
        ben = Fraction(bound - 2 - w)
        total += ben
        iu = core_index.get(u)
        iv = core_index.get(v)
        if iu is not None and iu == iv:
            n_cluster += 1
            core_edge_benefit[iu] += ben
            continue
        touches = []
        if iu is not None:
            if v not in shared_sets[iu]:
                raise InvariantViolation(
                    f"edge ({u},{v}) leaves core of cluster {clusters[iu].core} "
                    "but not into its shared set"
                )
            touches.append(iu)
        if iv is not None:
            if u not in shared_sets[iv]:
                raise InvariantViolation(
                    f"edge ({u},{v}) leaves core of cluster {clusters[iv].core} "
                    "but not into its shared set"
                )
            touches.append(iv)
        if touches:
            n_assoc += 1
            for i in touches:
                received[i] += ben / 2
            assoc_kept += ben * (2 - len(touches)) / 2
        else:
            n_other += 1
            other_total += ben

    audits = tuple(
        ClusterAudit(
            core=c.core,
            dischargeable=is_dischargeable(c),
            benefit=core_edge_benefit[i] + received[i],
        )
        for i, c in enumerate(clusters)
    )
    cluster_total = sum((a.benefit for a in audits), Fraction(0))
    avg = Fraction(wsum, len(edges)) if edges else None
    return DischargeAudit(
        bound=bound,
        clusters=audits,
        cluster_edges=n_cluster,
        associated_edges=n_assoc,
        other_edges=n_other,
        cluster_benefit=cluster_total,
        associated_benefit=assoc_kept,
        other_benefit=other_total,
        total_benefit=total,
        average_weight=avg,
    )


# ---------------------------------------------------------------------------
# reduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReduceResult:
    """Outcome of repeatedly folding and peeling complete components.

    blocks counts the complete components on bound+1 vertices peeled off;
    remainder is what is left (isolated vertices retained, no foldable
    cluster, no complete bound+1 component).  Vertex count is conserved:
    n(input) = blocks * (bound + 1) + remainder.n.
    """

    bound: int
    blocks: int
    remainder: Graph
    folds: tuple[FoldStep, ...]

    @property
    def remainder_order(self) -> int:
        return self.remainder.n

    @property
    def remainder_within_threshold(self) -> bool:
        """Whether 27 * remainder_order^2 <= 4 bound^2 (bound+1)^2.

        Reported for information only: the reduction itself makes no promise
        about the remainder's size, it just stops when nothing folds.
        """
        r = self.bound
        return 27 * self.remainder.n ** 2 <= 4 * r * r * (r + 1) * (r + 1)


def _complete_component_mask(g: Graph, size: int) -> int:
    """Union of all connected components that are complete graphs on `size`
    vertices."""
    seen = 0
    out = 0
    for v in range(g.n):
        if (seen >> v) & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            u = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = g.adj[u] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        k = comp.bit_count()
        if k == size and all(
            (g.adj[u] | (1 << u)) & comp == comp for u in _mask_vertices(comp)
        ):
            out |= comp
    return out


def reduce_graph(g: Graph, bound: int) -> ReduceResult:
    """Peel complete bound+1 components and fold foldable clusters to a fixpoint.

    Folds are taken least core vertex first and each one is certified on the
    spot: recounted triangle gain >= core_size * e(missing) - mu(missing),
    max degree still <= bound, and the folded cluster really became a
    complete component.  Certification failure raises InvariantViolation.
    """
    _require_bound(g, bound)
    blocks = 0
    folds: list[FoldStep] = []
    work = g
    while True:
        peel = _complete_component_mask(work, bound + 1)
        if peel:
            blocks += peel.bit_count() // (bound + 1)
            keep = [v for v in range(work.n) if not (peel >> v) & 1]
            work = work.subgraph(keep)
        foldable = [c for c in find_clusters(work, bound) if is_foldable(c)]
        if not foldable:
            break
        c = foldable[0]  # find_clusters orders by least core vertex
        before = triangle_count(work)
        folded = fold(work, c)
        after = triangle_count(folded)
        step = FoldStep(
            core=c.core,
            shared=c.shared,
            missing_edges=c.missing.num_edges,
            missing_mu=mu(c.missing),
            triangles_before=before,
            triangles_after=after,
        )
        if step.gain < step.gain_bound:
            raise InvariantViolation(
                f"fold of cluster {c.core} gained {step.gain} triangles, "
                f"below the guaranteed {step.gain_bound}"
            )
        if folded.max_degree() > bound:
            raise InvariantViolation(
                f"fold of cluster {c.core} pushed max degree to {folded.max_degree()}"
            )
        inside = _mask_of(c.core) | _mask_of(c.shared)
        if _complete_component_mask(folded, bound + 1) & inside != inside:
            raise InvariantViolation(
                f"fold of cluster {c.core} did not leave a complete component"
            )
        folds.append(step)
        work = folded
    return ReduceResult(bound=bound, blocks=blocks, remainder=work, folds=tuple(folds))

"""Pure-Python kernels: canonical codes, clique counting, labeled census.

This module is the reference implementation.  The compiled module
(cliquefold._kernels, built from _kernels.pyx) mirrors it operation for
operation and must produce identical outputs; only speed differs.  Graphs
arrive here as (n, adj) where adj is a sequence of per-vertex neighbor
bitmasks (bit v of adj[u] set iff uv is an edge).

The canonical code of a graph is the minimum, over all vertex orderings, of
the upper triangle of the permuted adjacency matrix read column by column
(the same bit order graph6 uses).  Column j contributes j bits, so a greedy
column-at-a-time search with branch-and-bound on the best code found so far
is exact.  Ties are pruned by twin detection: two candidate vertices with
equal neighborhoods (or equal closed neighborhoods) are swappable by an
automorphism, so only one branch needs exploring.
"""

from __future__ import annotations


def canonical_code(n: int, adj) -> int:
    """Minimum column-major upper-triangle code over all vertex orderings."""
    if n <= 1:
        return 0
    total_bits = n * (n - 1) // 2
    adj = tuple(adj)
    best = None

    def extend(code: int, bits: int, used: int, depth: int, cols) -> None:
        nonlocal best
        if depth == n:
            if best is None or code < best:
                best = code
            return
        cand = sorted((cols[v], v) for v in range(n) if not (used >> v) & 1)
        new_bits = bits + depth
        tried = []
        for col, v in cand:
            new_code = (code << depth) | col
            if best is not None and new_code > (best >> (total_bits - new_bits)):
                break  # candidates are sorted by column, so the rest are worse
            av = adj[v]
            skip = False
            for cu, u in tried:
                if cu != col:
                    continue
                au = adj[u]
                if au == av or (au | (1 << u)) == (av | (1 << v)):
                    skip = True  # twin of an explored branch
                    break
            tried.append((col, v))
            if skip:
                continue
            new_cols = list(cols)
            for w in range(n):
                if not (used >> w) & 1 and w != v:
                    new_cols[w] = (new_cols[w] << 1) | ((adj[w] >> v) & 1)
            extend(new_code, new_bits, used | (1 << v), depth + 1, new_cols)

    extend(0, 0, 0, 0, [0] * n)
    return best


def canonical_code_many(n: int, adjs) -> list:
    return [canonical_code(n, adj) for adj in adjs]


def _degeneracy_order(n: int, adj) -> list:
    """Vertices in smallest-last removal order (ties by index)."""
    alive = (1 << n) - 1
    deg = [(adj[v] & alive).bit_count() for v in range(n)]
    order = []
    for _ in range(n):
        v = min((u for u in range(n) if (alive >> u) & 1), key=lambda u: (deg[u], u))
        order.append(v)
        alive &= ~(1 << v)
        m = adj[v] & alive
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            deg[w] -= 1
    return order


def clique_count_vector(n: int, adj) -> list:
    """counts[t] = number of t-vertex cliques, t = 1..n (counts[0] = 0).

    Recursive candidate-set intersection over a degeneracy order: each clique
    is visited exactly once, as its increasing sequence of order positions.
    """
    counts = [0] * (n + 1)
    if n == 0:
        return counts
    order = _degeneracy_order(n, adj)
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    # later[p] = positions q > p whose vertices are adjacent to order[p]
    later = [0] * n
    for p, v in enumerate(order):
        m = adj[v]
        while m:
            w = (m & -m).bit_length() - 1
            m &= m - 1
            if pos[w] > p:
                later[p] |= 1 << pos[w]

    def expand(cand: int, size: int) -> None:
        m = cand
        while m:
            p = (m & -m).bit_length() - 1
            m &= m - 1
            counts[size + 1] += 1
            nxt = cand & later[p]
            if nxt:
                expand(nxt, size + 1)

    expand((1 << n) - 1, 0)
    return counts


def labeled_class_count(n: int) -> int:
    """Isomorphism classes on n vertices, by brute force over all labeled graphs.

    Iterates every one of the 2^C(n,2) edge subsets and buckets by canonical
    code.  Deliberately independent of the incremental enumerator, so the two
    can cross-check each other.  Practical for n <= 7.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    if n > 8:
        raise ValueError("labeled census is a brute-force check; n > 8 not supported")
    pairs = [(i, j) for j in range(1, n) for i in range(j)]
    k = len(pairs)
    seen = set()
    for mask in range(1 << k):
        adj = [0] * n
        m = mask
        while m:
            b = (m & -m).bit_length() - 1
            m &= m - 1
            i, j = pairs[b]
            adj[i] |= 1 << j
            adj[j] |= 1 << i
        seen.add(canonical_code(n, adj))
    return len(seen)

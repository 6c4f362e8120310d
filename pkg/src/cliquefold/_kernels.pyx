# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: canonical codes, clique counting, labeled census.

Mirror of cliquefold._kernels_py (the pure-Python reference); outputs must be
identical.  Masks are uint64, so n <= 64 throughout, and the canonical-code
search additionally needs the full code to fit in 64 bits, i.e. n <= 11.
Callers (cliquefold._backend) route anything larger to the pure module.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport calloc, free
from libc.string cimport memset

cdef extern from *:
    int __builtin_ctzll(unsigned long long) nogil
    int __builtin_popcountll(unsigned long long) nogil


# ---------------------------------------------------------------- canonical

cdef struct CanonCtx:
    int n
    int total_bits
    uint64_t adj[16]
    uint64_t best
    bint have_best


cdef void _canon_extend(CanonCtx* ctx, uint64_t code, int bits, uint64_t used,
                        int depth, uint64_t* cols) noexcept nogil:
    cdef int n = ctx.n
    cdef int i, j, v, u, w, cand_n, tried_n, new_bits
    cdef bint skip
    cdef uint64_t col, new_code, av, au
    cdef int cand_v[16]
    cdef uint64_t cand_c[16]
    cdef int tried_v[16]
    cdef uint64_t tried_c[16]
    cdef uint64_t new_cols[16]

    if depth == n:
        if not ctx.have_best or code < ctx.best:
            ctx.best = code
            ctx.have_best = True
        return

    cand_n = 0
    for v in range(n):
        if (used >> v) & 1:
            continue
        cand_v[cand_n] = v
        cand_c[cand_n] = cols[v]
        cand_n += 1
    # insertion sort by (column, vertex); vertex order only for determinism
    for i in range(1, cand_n):
        col = cand_c[i]
        v = cand_v[i]
        j = i - 1
        while j >= 0 and (cand_c[j] > col or (cand_c[j] == col and cand_v[j] > v)):
            cand_c[j + 1] = cand_c[j]
            cand_v[j + 1] = cand_v[j]
            j -= 1
        cand_c[j + 1] = col
        cand_v[j + 1] = v

    new_bits = bits + depth
    tried_n = 0
    for i in range(cand_n):
        col = cand_c[i]
        v = cand_v[i]
        new_code = (code << depth) | col
        if ctx.have_best and new_code > (ctx.best >> (ctx.total_bits - new_bits)):
            break
        av = ctx.adj[v]
        skip = False
        for j in range(tried_n):
            if tried_c[j] != col:
                continue
            u = tried_v[j]
            au = ctx.adj[u]
            if au == av or (au | (<uint64_t>1 << u)) == (av | (<uint64_t>1 << v)):
                skip = True
                break
        tried_v[tried_n] = v
        tried_c[tried_n] = col
        tried_n += 1
        if skip:
            continue
        for w in range(n):
            if not ((used >> w) & 1) and w != v:
                new_cols[w] = (cols[w] << 1) | ((ctx.adj[w] >> v) & 1)
            else:
                new_cols[w] = cols[w]
        _canon_extend(ctx, new_code, new_bits, used | (<uint64_t>1 << v),
                      depth + 1, new_cols)


cdef uint64_t _canon_run(CanonCtx* ctx) noexcept nogil:
    cdef uint64_t cols[16]
    memset(cols, 0, sizeof(cols))
    ctx.best = 0
    ctx.have_best = False
    _canon_extend(ctx, 0, 0, 0, 0, cols)
    return ctx.best


def canonical_code(int n, adj):
    """Minimum column-major upper-triangle code over all vertex orderings."""
    if n <= 1:
        return 0
    if n > 11:
        raise ValueError("compiled canonical code supports n <= 11")
    cdef CanonCtx ctx
    ctx.n = n
    ctx.total_bits = n * (n - 1) // 2
    cdef int v
    for v in range(n):
        ctx.adj[v] = adj[v]
    cdef uint64_t best
    with nogil:
        best = _canon_run(&ctx)
    return best


def canonical_code_many(int n, adjs):
    return [canonical_code(n, adj) for adj in adjs]


# ------------------------------------------------------------ clique counts

cdef void _cliques(uint64_t cand, int size, uint64_t* later,
                   unsigned long long* counts) noexcept nogil:
    cdef uint64_t m = cand, nxt
    cdef int p
    while m:
        p = __builtin_ctzll(m)
        m &= m - 1
        counts[size + 1] += 1
        nxt = cand & later[p]
        if nxt:
            _cliques(nxt, size + 1, later, counts)


def clique_count_vector(int n, adj):
    """counts[t] = number of t-vertex cliques, t = 1..n (counts[0] = 0)."""
    if n > 64 or n < 0:
        raise ValueError("n must be in 0..64")
    counts = [0] * (n + 1)
    if n == 0:
        return counts
    cdef uint64_t cadj[64]
    cdef uint64_t later[64]
    cdef unsigned long long ccounts[65]
    cdef int pos[64]
    cdef int order[64]
    cdef int deg[64]
    cdef int v, u, p, q, best_v
    cdef uint64_t alive, m, full
    full = <uint64_t>0 - 1 if n == 64 else (<uint64_t>1 << n) - 1
    for v in range(n):
        cadj[v] = adj[v]
    for v in range(n + 1):
        ccounts[v] = 0
    # smallest-last (degeneracy) order, ties by index
    alive = full
    for v in range(n):
        deg[v] = __builtin_popcountll(cadj[v] & alive)
    for p in range(n):
        best_v = -1
        for v in range(n):
            if (alive >> v) & 1:
                if best_v < 0 or deg[v] < deg[best_v]:
                    best_v = v
        order[p] = best_v
        pos[best_v] = p
        alive &= ~(<uint64_t>1 << best_v)
        m = cadj[best_v] & alive
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            deg[u] -= 1
    for p in range(n):
        later[p] = 0
        v = order[p]
        m = cadj[v]
        while m:
            u = __builtin_ctzll(m)
            m &= m - 1
            q = pos[u]
            if q > p:
                later[p] |= <uint64_t>1 << q
    with nogil:
        _cliques(full, 0, later, ccounts)
    for v in range(n + 1):
        counts[v] = ccounts[v]
    return counts


# ------------------------------------------------------------ labeled census

def labeled_class_count(int n):
    """Isomorphism classes on n vertices via brute force over labeled graphs.

    Marks each canonical code in a flat bitmap (codes are < 2^C(n,2)), so the
    scan is allocation-free after setup.  Compiled path supports n <= 7.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= 1:
        return 1
    if n > 7:
        raise ValueError("compiled labeled census supports n <= 7")
    cdef int k = n * (n - 1) // 2
    cdef int pi[32]
    cdef int pj[32]
    cdef int b = 0
    cdef int i, j, e
    for j in range(1, n):
        for i in range(j):
            pi[b] = i
            pj[b] = j
            b += 1
    cdef size_t nbytes = ((<size_t>1 << k) + 7) // 8
    cdef unsigned char* bm = <unsigned char*>calloc(nbytes, 1)
    if bm == NULL:
        raise MemoryError()
    cdef CanonCtx ctx
    ctx.n = n
    ctx.total_bits = k
    cdef uint64_t mask, mm, code, total
    cdef long long count = 0
    total = <uint64_t>1 << k
    try:
        with nogil:
            mask = 0
            while mask < total:
                for i in range(n):
                    ctx.adj[i] = 0
                mm = mask
                while mm:
                    e = __builtin_ctzll(mm)
                    mm &= mm - 1
                    ctx.adj[pi[e]] |= <uint64_t>1 << pj[e]
                    ctx.adj[pj[e]] |= <uint64_t>1 << pi[e]
                code = _canon_run(&ctx)
                if not (bm[code >> 3] >> (code & 7)) & 1:
                    bm[code >> 3] |= <unsigned char>(1 << (code & 7))
                    count += 1
                mask += 1
    finally:
        free(bm)
    return count

"""Exhaustive enumeration of small graphs and theorem-level verifiers.

Enumeration walks isomorphism classes in breadth-first levels by edge count:
level 0 is the edgeless graph, and each level is the canonically-deduplicated
set of single-edge extensions of the previous one (skipping additions that
would break the degree cap).  Removing any edge of a valid graph lands in the
previous level, so the walk is complete; levels are sorted tuples of integer
canonical codes, which makes results deterministic and independent of worker
count.  Exhaustive capacity: 10 vertices with a real degree cap, 7 without.

On top of that sit the verifiers.  Each one returns a VerifyReport whose
violations list is empty exactly when the claim checked out, with enough
detail in every violation to reproduce it.  Graph searches compare an
exhaustive extremum against the value of a constructed extremal graph;
arithmetic sweeps check exact integer inequalities cell by cell.  No
floating point is used anywhere in a verification path.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from math import comb
from typing import Iterator

from . import _backend
from .clusters import (
    discharge_audit,
    find_clusters,
    is_dischargeable,
    is_foldable,
    reduce_graph,
)
from .graph6 import write_graph6
from .graphs import (
    CapacityError,
    DomainError,
    Graph,
    InvariantViolation,
    canonical_form,
    canonical_graph,
    complete,
    count_all_cliques,
    count_cliques_of_size,
    cycle,
    disjoint_union,
    graph_from_code,
    mu,
)
from .threshold import lex_graph, mu_bound_min_degree_one, star_matching_graph

_BOUNDED_CAP = 10
_UNRESTRICTED_CAP = 7

WORKERS_ENV = "CLIQUEFOLD_WORKERS"


def resolve_workers(workers: int | None = None) -> int:
    """Explicit argument, else CLIQUEFOLD_WORKERS, else available parallelism."""
    if workers is None:
        env = os.environ.get(WORKERS_ENV)
        if env:
            workers = int(env)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


# ---------------------------------------------------------------------------
# search spaces and enumeration
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SearchSpace:
    """All graphs on n vertices meeting the given constraints, one per class.

    max_degree = None (or any bound >= n-1) means unrestricted, which lowers
    the exhaustive capacity from 10 vertices to 7.  min_degree and edge_count
    filter the output; they do not shrink the underlying walk.
    """

    n: int
    max_degree: int | None = None
    min_degree: int | None = None
    edge_count: int | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be nonnegative, got {self.n}")
        for name in ("max_degree", "min_degree", "edge_count"):
            v = getattr(self, name)
            if v is not None and v < 0:
                raise ValueError(f"{name} must be nonnegative, got {v}")
        cap = _BOUNDED_CAP if self.is_degree_bounded else _UNRESTRICTED_CAP
        if self.n > cap:
            kind = "degree-bounded" if self.is_degree_bounded else "unrestricted"
            raise CapacityError(
                f"exhaustive {kind} enumeration caps at n={cap}, got n={self.n}"
            )
        if self.edge_count is not None and self.edge_count > comb(self.n, 2):
            raise DomainError(
                f"edge count {self.edge_count} impossible on {self.n} vertices"
            )

    @property
    def is_degree_bounded(self) -> bool:
        return self.max_degree is not None and self.max_degree < max(self.n - 1, 0)

    @property
    def effective_cap(self) -> int:
        return self.max_degree if self.is_degree_bounded else max(self.n - 1, 0)

    def describe(self) -> str:
        parts = [f"n={self.n}"]
        if self.max_degree is not None:
            parts.append(f"max_degree<={self.max_degree}")
        if self.min_degree is not None:
            parts.append(f"min_degree>={self.min_degree}")
        if self.edge_count is not None:
            parts.append(f"edges={self.edge_count}")
        return ", ".join(parts)


_LEVEL_CACHE: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}


def _expand_chunk(n: int, cap: int, codes) -> set:
    found = set()
    canon = _backend.canonical_code
    for code in codes:
        adj = list(graph_from_code(n, code).adj)
        degs = [a.bit_count() for a in adj]
        for u in range(n):
            if degs[u] >= cap:
                continue
            au = adj[u]
            for v in range(u + 1, n):
                if degs[v] >= cap or (au >> v) & 1:
                    continue
                child = adj.copy()
                child[u] = au | (1 << v)
                child[v] |= 1 << u
                found.add(canon(n, child))
    return found


def _expand_level(n: int, cap: int, codes, nworkers: int) -> tuple[int, ...]:
    if nworkers > 1 and len(codes) >= 4 * nworkers:
        chunk = (len(codes) + 4 * nworkers - 1) // (4 * nworkers)
        pieces = [codes[i : i + chunk] for i in range(0, len(codes), chunk)]
        found: set = set()
        with ThreadPoolExecutor(max_workers=nworkers) as pool:
            for part in pool.map(lambda p: _expand_chunk(n, cap, p), pieces):
                found |= part
    else:
        found = _expand_chunk(n, cap, codes)
    return tuple(sorted(found))


def _levels(n: int, cap: int, workers: int | None = None) -> tuple[tuple[int, ...], ...]:
    """All enumeration levels for (n, degree cap), cached; level m holds the
    sorted canonical codes of every class with exactly m edges."""
    key = (n, cap)
    cached = _LEVEL_CACHE.get(key)
    if cached is not None:
        return cached
    nworkers = resolve_workers(workers)
    levels = [(0,)]
    while True:
        children = _expand_level(n, cap, levels[-1], nworkers)
        if not children:
            break
        levels.append(children)
    result = tuple(levels)
    _LEVEL_CACHE[key] = result
    return result


def enumerate_graphs(space: SearchSpace, workers: int | None = None) -> Iterator[Graph]:
    """One canonically-labeled representative per isomorphism class in the space.

    Deterministic order: by edge count, then by canonical code.
    """
    levels = _levels(space.n, space.effective_cap, workers)
    for m, level in enumerate(levels):
        if space.edge_count is not None and m != space.edge_count:
            continue
        for code in level:
            g = graph_from_code(space.n, code)
            if space.min_degree is not None and g.min_degree() < space.min_degree:
                continue
            yield g


def count_classes(space: SearchSpace, workers: int | None = None) -> int:
    return sum(1 for _ in enumerate_graphs(space, workers))


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Witness:
    """A witness graph: canonical key (hex) plus its graph6 representative."""

    canonical: str
    graph6: str

    @classmethod
    def of(cls, g: Graph) -> "Witness":
        return cls(canonical_form(g).hex(), write_graph6(canonical_graph(g)))


def _witnesses(graphs) -> tuple[Witness, ...]:
    seen = {}
    for g in graphs:
        w = Witness.of(g)
        seen[w.canonical] = w
    return tuple(seen[k] for k in sorted(seen))


@dataclass(frozen=True)
class VerifyReport:
    """Outcome of one verification target.

    violations is empty exactly when the target passed; it is never
    truncated.  extremal_value / conjectured_value are None for targets
    that are sweeps rather than single extremal comparisons.
    """

    target: str
    space: str
    examined: int
    extremal_value: int | None
    conjectured_value: int | None
    witnesses: tuple[Witness, ...]
    violations: tuple[dict, ...]
    millis: float

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "target": self.target,
            "space": self.space,
            "examined": self.examined,
            "extremal_value": self.extremal_value,
            "conjectured_value": self.conjectured_value,
            "witnesses": [
                {"canonical": w.canonical, "graph6": w.graph6} for w in self.witnesses
            ],
            "violations": list(self.violations),
            "millis": self.millis,
        }


def _ms(start: float) -> float:
    return round((time.perf_counter() - start) * 1000, 3)


# ---------------------------------------------------------------------------
# extremal graphs
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExtremalParams:
    """n split as a(r+1) + b with 0 <= b <= r: a full blocks plus one rest."""

    n: int
    r: int
    a: int
    b: int

    @classmethod
    def from_n_r(cls, n: int, r: int) -> "ExtremalParams":
        if n < 0 or r < 0:
            raise ValueError(f"need n, r >= 0, got n={n} r={r}")
        return cls(n=n, r=r, a=n // (r + 1), b=n % (r + 1))

    def graph(self) -> Graph:
        """a disjoint copies of K_{r+1} plus one K_b."""
        return disjoint_union(*([complete(self.r + 1)] * self.a), complete(self.b))


def extremal_weight_sum(a: int, r: int, b: int) -> int:
    """Total edge weight of a.K_{r+1} u K_b: a C(r+1,2)(r-1) + C(b,2)(b-2)."""
    if a < 0 or b < 0 or r < 0 or b > r:
        raise ValueError(f"need a, r >= 0 and 0 <= b <= r, got a={a} r={r} b={b}")
    return a * comb(r + 1, 2) * (r - 1) + comb(b, 2) * (b - 2)


def avgwt_condition_holds(a: int, r: int) -> bool:
    """Exact form of a >= 2r/(3*sqrt(3)): 27a^2 >= 4r^2.

    Equality never occurs for positive integers (sqrt(3) is irrational), so
    squaring loses nothing.
    """
    if a < 0 or r < 0:
        raise ValueError(f"need a, r >= 0, got a={a} r={r}")
    return 27 * a * a >= 4 * r * r


# ---------------------------------------------------------------------------
# verifiers: extremal clique counts
# ---------------------------------------------------------------------------


def extremal_clique_search(
    n: int, r: int, t: int, workers: int | None = None
) -> VerifyReport:
    """Exhaustive max of t-clique counts over degree-capped graphs vs a.K_{r+1} u K_b.

    Passes when the exhaustive maximum equals the block construction's count;
    witnesses are every maximizer.
    """
    start = time.perf_counter()
    if t < 3:
        raise DomainError(f"clique size must be >= 3, got t={t}")
    params = ExtremalParams.from_n_r(n, r)
    target_graph = params.graph()
    conjectured = count_cliques_of_size(target_graph, t) if t <= n else 0
    space = SearchSpace(n, max_degree=r)

    best = -1
    maximizers: list[Graph] = []
    examined = 0
    for g in enumerate_graphs(space, workers):
        examined += 1
        k = count_cliques_of_size(g, t) if t <= n else 0
        if k > best:
            best = k
            maximizers = [g]
        elif k == best:
            maximizers.append(g)

    violations = []
    if best != conjectured:
        violations.append(
            {
                "n": n,
                "r": r,
                "t": t,
                "detail": f"exhaustive maximum {best} != block-construction value {conjectured}",
                "maximizers": [Witness.of(g).graph6 for g in maximizers],
            }
        )
    return VerifyReport(
        target=f"max {t}-clique count at degree <= {r}",
        space=space.describe(),
        examined=examined,
        extremal_value=best,
        conjectured_value=conjectured,
        witnesses=_witnesses(maximizers),
        violations=tuple(violations),
        millis=_ms(start),
    )


def _exceptional_maximizers(params: ExtremalParams) -> list[Graph]:
    """The two extra total-clique maximizer families, existing only at r = 2:
    (a-1) triangles plus a 4-cycle (b = 1) or a 5-cycle (b = 2)."""
    if params.r != 2 or params.a < 1:
        return []
    if params.b == 1:
        return [disjoint_union(*([complete(3)] * (params.a - 1)), cycle(4))]
    if params.b == 2:
        return [disjoint_union(*([complete(3)] * (params.a - 1)), cycle(5))]
    return []


def extremal_total_clique_search(n: int, r: int, workers: int | None = None) -> VerifyReport:
    """Exhaustive max of total clique counts, with the full maximizer set checked.

    The expected maximizers are the block construction plus, at r = 2 with
    rest size 1 or 2, the triangles-plus-C_4 / triangles-plus-C_5 graphs.
    A pass means both the value and the exact maximizer set match.
    """
    start = time.perf_counter()
    params = ExtremalParams.from_n_r(n, r)
    target_graph = params.graph()
    conjectured = count_all_cliques(target_graph)
    expected = [target_graph] + _exceptional_maximizers(params)
    expected_keys = {canonical_form(g).hex() for g in expected}
    space = SearchSpace(n, max_degree=r)

    best = -1
    maximizers: list[Graph] = []
    examined = 0
    for g in enumerate_graphs(space, workers):
        examined += 1
        k = count_all_cliques(g)
        if k > best:
            best = k
            maximizers = [g]
        elif k == best:
            maximizers.append(g)

    violations = []
    if best != conjectured:
        violations.append(
            {
                "n": n,
                "r": r,
                "detail": f"exhaustive maximum {best} != block-construction value {conjectured}",
            }
        )
    found_keys = {canonical_form(g).hex() for g in maximizers}
    if found_keys != expected_keys:
        violations.append(
            {
                "n": n,
                "r": r,
                "detail": "maximizer set differs from the predicted equality cases",
                "found": sorted(found_keys),
                "expected": sorted(expected_keys),
            }
        )
    return VerifyReport(
        target=f"max total clique count at degree <= {r}, with equality cases",
        space=space.describe(),
        examined=examined,
        extremal_value=best,
        conjectured_value=conjectured,
        witnesses=_witnesses(maximizers),
        violations=tuple(violations),
        millis=_ms(start),
    )


# ---------------------------------------------------------------------------
# verifiers: mu extremality
# ---------------------------------------------------------------------------


def verify_lex_mu(n: int, workers: int | None = None) -> VerifyReport:
    """For every edge count m, the lex graph attains the maximum of mu."""
    start = time.perf_counter()
    space = SearchSpace(n)
    levels = _levels(n, space.effective_cap, workers)
    examined = 0
    violations = []
    lex_graphs = []
    for m, level in enumerate(levels):
        lexg = lex_graph(n, m)
        lex_graphs.append(lexg)
        lex_mu = mu(lexg)
        lex_code_int = _backend.canonical_code(lexg.n, lexg.adj)
        if lex_code_int not in level:
            raise InvariantViolation(
                f"lex graph for n={n}, m={m} missing from enumeration level"
            )
        level_best = -1
        over = []
        for code in level:
            g = graph_from_code(n, code)
            examined += 1
            v = mu(g)
            level_best = max(level_best, v)
            if v > lex_mu:
                over.append((v, g))
        if level_best != lex_mu:
            violations.append(
                {
                    "n": n,
                    "m": m,
                    "detail": f"max mu {level_best} exceeds lex graph's {lex_mu}",
                    "exceeders": [
                        {"mu": v, "graph6": Witness.of(g).graph6} for v, g in over
                    ],
                }
            )
    if len(levels) != comb(n, 2) + 1:
        raise InvariantViolation(
            f"expected levels for every m up to {comb(n, 2)}, got {len(levels)}"
        )
    return VerifyReport(
        target="lex graph maximizes mu at every edge count",
        space=f"n={n}, all m in 0..{comb(n, 2)}",
        examined=examined,
        extremal_value=None,
        conjectured_value=None,
        witnesses=_witnesses(lex_graphs),
        violations=tuple(violations),
        millis=_ms(start),
    )


def verify_star_matching(n: int, workers: int | None = None) -> VerifyReport:
    """For n/2 <= m < n-1, the star-plus-matching attains max mu at min degree 1."""
    start = time.perf_counter()
    examined = 0
    violations = []
    extremals = []
    m_lo = (n + 1) // 2
    for m in range(m_lo, n - 1):
        smg = star_matching_graph(n, m)
        conj = mu_bound_min_degree_one(n, m)
        if mu(smg) != conj:
            raise InvariantViolation(
                f"star-plus-matching mu {mu(smg)} != C(2m-n+1,2) = {conj}"
            )
        extremals.append(smg)
        space = SearchSpace(n, min_degree=1, edge_count=m)
        best = -1
        over = []
        for g in enumerate_graphs(space, workers):
            examined += 1
            v = mu(g)
            best = max(best, v)
            if v > conj:
                over.append((v, g))
        if best != conj:
            violations.append(
                {
                    "n": n,
                    "m": m,
                    "detail": f"max mu {best} over min-degree-1 graphs != C(2m-n+1,2) = {conj}",
                    "exceeders": [
                        {"mu": v, "graph6": Witness.of(g).graph6} for v, g in over
                    ],
                }
            )
    return VerifyReport(
        target="star-plus-matching maximizes mu at min degree >= 1",
        space=f"n={n}, m in {m_lo}..{n - 2}, min_degree>=1",
        examined=examined,
        extremal_value=None,
        conjectured_value=None,
        witnesses=_witnesses(extremals),
        violations=tuple(violations),
        millis=_ms(start),
    )


# ---------------------------------------------------------------------------
# verifiers: cluster structure
# ---------------------------------------------------------------------------


def verify_cluster_dichotomy(n: int, r: int, workers: int | None = None) -> VerifyReport:
    """Every cluster with a nonempty shared set is foldable or dischargeable.

    Witnesses are one representative graph per observed cluster signature
    (core size, shared size, missing edges, missing mu, which predicates hold).
    """
    start = time.perf_counter()
    space = SearchSpace(n, max_degree=r)
    examined = 0
    violations = []
    signature_reps: dict[tuple, Graph] = {}
    for g in enumerate_graphs(space, workers):
        examined += 1
        for c in find_clusters(g, r):
            if c.shared_size < 1:
                continue
            f, d = is_foldable(c), is_dischargeable(c)
            sig = (c.core_size, c.shared_size, c.missing.num_edges, mu(c.missing), f, d)
            signature_reps.setdefault(sig, g)
            if not (f or d):
                violations.append(
                    {
                        "n": n,
                        "r": r,
                        "graph6": Witness.of(g).graph6,
                        "core": list(c.core),
                        "shared": list(c.shared),
                        "missing_edges": c.missing.num_edges,
                        "missing_mu": mu(c.missing),
                        "detail": "cluster is neither foldable nor dischargeable",
                    }
                )
    return VerifyReport(
        target="every cluster is foldable or dischargeable",
        space=space.describe(),
        examined=examined,
        extremal_value=None,
        conjectured_value=None,
        witnesses=_witnesses(signature_reps.values()),
        violations=tuple(violations),
        millis=_ms(start),
    )


def verify_main_pipeline(n: int, r: int, workers: int | None = None) -> VerifyReport:
    """Reduce every degree-capped graph and certify the whole chain.

    Checks per graph: triangle count never drops across reduction, the
    remainder has no foldable cluster, and (when the remainder has edges)
    every remainder cluster is dischargeable with average edge weight at most
    r - 2.  Finally cross-checks the exhaustive triangle maximum against
    extremal_clique_search.
    """
    start = time.perf_counter()
    space = SearchSpace(n, max_degree=r)
    block_triangles = comb(r + 1, 3)
    examined = 0
    violations = []
    best = -1
    remainder_reps: dict[bytes, Graph] = {}
    for g in enumerate_graphs(space, workers):
        examined += 1
        k3 = count_cliques_of_size(g, 3) if n >= 3 else 0
        best = max(best, k3)
        try:
            res = reduce_graph(g, r)
        except InvariantViolation as exc:
            violations.append(
                {"graph6": Witness.of(g).graph6, "detail": f"fold certificate: {exc}"}
            )
            continue
        if res.blocks * (r + 1) + res.remainder.n != n:
            violations.append(
                {"graph6": Witness.of(g).graph6, "detail": "vertex count not conserved"}
            )
        reduced_k3 = res.blocks * block_triangles + (
            count_cliques_of_size(res.remainder, 3) if res.remainder.n >= 3 else 0
        )
        if reduced_k3 < k3:
            violations.append(
                {
                    "graph6": Witness.of(g).graph6,
                    "detail": f"reduction lost triangles: {k3} -> {reduced_k3}",
                }
            )
        rem_clusters = find_clusters(res.remainder, r)
        if any(is_foldable(c) for c in rem_clusters):
            violations.append(
                {
                    "graph6": Witness.of(g).graph6,
                    "detail": "remainder still has a foldable cluster",
                }
            )
        if res.remainder.num_edges:
            audit = discharge_audit(res.remainder, r)
            if not audit.all_dischargeable:
                violations.append(
                    {
                        "graph6": Witness.of(g).graph6,
                        "detail": "remainder cluster not dischargeable",
                    }
                )
            if audit.average_weight is not None and audit.average_weight > r - 2:
                violations.append(
                    {
                        "graph6": Witness.of(g).graph6,
                        "detail": (
                            "remainder average edge weight "
                            f"{audit.average_weight} exceeds {r - 2}"
                        ),
                    }
                )
        remainder_reps.setdefault(canonical_form(res.remainder), res.remainder)

    cross = extremal_clique_search(n, r, 3, workers)
    if cross.extremal_value != best:
        violations.append(
            {
                "detail": (
                    f"pipeline maximum {best} != extremal search value "
                    f"{cross.extremal_value}"
                )
            }
        )
    return VerifyReport(
        target="fold/peel reduction certified end to end",
        space=space.describe(),
        examined=examined,
        extremal_value=best,
        conjectured_value=cross.conjectured_value,
        witnesses=cross.witnesses,
        violations=tuple(violations),
        millis=_ms(start),
    )


# ---------------------------------------------------------------------------
# verifiers: arithmetic sweeps
# ---------------------------------------------------------------------------


def verify_avgwt_lemma(r_max: int) -> VerifyReport:
    """Weight-sum inequality sweep: for 1 <= r <= r_max, b <= r, and every a
    with 27a^2 >= 4r^2 up to a = 2r, check in exact integers that

        2 * [a C(r+1,2)(r-1) + C(b,2)(b-2)] > (r-2) * r * (a(r+1) + b).

    r = 0 is excluded: its only cell is a = b = 0, the empty graph, where
    both sides vanish and the strict inequality is vacuously about nothing.
    Beyond a = 2r the left side grows linearly faster in a, so the cap just
    bounds the sweep, it does not weaken the claim.
    """
    start = time.perf_counter()
    if r_max > 12:
        raise DomainError(f"sweep capped at r_max <= 12, got {r_max}")
    examined = 0
    violations = []
    for r in range(1, r_max + 1):
        for b in range(r + 1):
            for a in range(2 * r + 1):
                if not avgwt_condition_holds(a, r):
                    continue
                examined += 1
                lhs = 2 * extremal_weight_sum(a, r, b)
                rhs = (r - 2) * r * (a * (r + 1) + b)
                if not lhs > rhs:
                    violations.append(
                        {"r": r, "a": a, "b": b, "lhs": lhs, "rhs": rhs,
                         "detail": "weight-sum inequality failed"}
                    )
    return VerifyReport(
        target="extremal weight sum beats the average-weight demand",
        space=f"r in 1..{r_max}, b <= r, a with 27a^2 >= 4r^2 up to 2r",
        examined=examined,
        extremal_value=None,
        conjectured_value=None,
        witnesses=(),
        violations=tuple(violations),
        millis=_ms(start),
    )


def finite_calculation_window(r: int) -> range:
    """The vertex counts the finite calculation must cover for this r.

    Starts at the least n with 27n^2 >= 4r^2(r+1)^2 (where the averaging
    lemma takes over) and extends r further (the rest-size slack b <= r).
    """
    if not 3 <= r <= 6:
        raise DomainError(f"finite calculation is for 3 <= r <= 6, got r={r}")
    n_lo = 1
    while 27 * n_lo * n_lo < 4 * r * r * (r + 1) * (r + 1):
        n_lo += 1
    return range(n_lo, n_lo + r + 1)


def verify_finite_calculation(r: int) -> VerifyReport:
    """Check (r-2) r n <= 6 [a C(r+1,3) + C(b,3)] over the whole window for r.

    Exact integers throughout; the window is finite_calculation_window(r).
    """
    start = time.perf_counter()
    window = finite_calculation_window(r)
    examined = 0
    violations = []
    for n in window:
        params = ExtremalParams.from_n_r(n, r)
        examined += 1
        lhs = (r - 2) * r * n
        rhs = 6 * (params.a * comb(r + 1, 3) + comb(params.b, 3))
        if not lhs <= rhs:
            violations.append(
                {"r": r, "n": n, "a": params.a, "b": params.b,
                 "lhs": lhs, "rhs": rhs,
                 "detail": "finite-calculation inequality failed"}
            )
    return VerifyReport(
        target="block construction meets the triangle demand on the window",
        space=f"r={r}, n in {window.start}..{window.stop - 1}",
        examined=examined,
        extremal_value=None,
        conjectured_value=None,
        witnesses=(),
        violations=tuple(violations),
        millis=_ms(start),
    )

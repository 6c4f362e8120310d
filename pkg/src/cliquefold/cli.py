"""Command-line interface.

One subcommand per operation: inspection (count, clusters, fold, reduce,
enumerate) and verification (verify-*).  Graphs travel as graph6, one per
line; reports are JSON on stdout (or --out), with --pretty switching to a
human-readable layout.  Exit status: 0 = pass / done, 1 = a verifier found
violations, 2 = usage or precondition error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import search
from .clusters import (
    FoldStep,
    find_clusters,
    fold,
    is_dischargeable,
    is_foldable,
    reduce_graph,
)
from .graph6 import Graph6ParseError, read_graph6, write_graph6
from .graphs import (
    CapacityError,
    DomainError,
    Graph,
    clique_counts,
    count_all_cliques,
    count_cliques_of_size,
    mu,
    triple_census,
)
from .search import SearchSpace, VerifyReport, enumerate_graphs


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="cliquefold",
        description=(
            "Clique counting in bounded-degree graphs: folding, discharging, "
            "and exhaustive small-scale verification."
        ),
    )
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, help_, *flags):
        sp = sub.add_parser(name, help=help_)
        for flag in flags:
            if flag == "n":
                sp.add_argument("--n", type=int, required=True, help="vertex count")
            elif flag == "n_opt":
                sp.add_argument("--n", type=int, default=None, help="vertex count")
            elif flag == "r":
                sp.add_argument("--r", type=int, required=True, help="degree bound")
            elif flag == "r_opt":
                sp.add_argument("--r", type=int, default=None, help="degree bound")
            elif flag == "t_opt":
                sp.add_argument("--t", type=int, default=None, help="clique size")
            elif flag == "m_opt":
                sp.add_argument("--m", type=int, default=None, help="edge count")
            elif flag == "in":
                sp.add_argument("--in", dest="infile", required=True,
                                help="graph6 input file, one graph per line")
            elif flag == "out":
                sp.add_argument("--out", default=None,
                                help="write output here instead of stdout")
        sp.add_argument("--workers", type=int, default=None,
                        help="parallel workers (default: CLIQUEFOLD_WORKERS or all cores)")
        sp.add_argument("--pretty", action="store_true",
                        help="human-readable output instead of JSON")
        sp.add_argument("--witness-out", default=None,
                        help="also write witness graphs as graph6 lines to this file")
        return sp

    add("count", "clique counts, mu, and triple census of input graphs",
        "in", "t_opt", "out")
    add("clusters", "list clusters and their predicates", "in", "r", "out")
    add("fold", "fold the first foldable cluster of each input graph",
        "in", "r", "out")
    add("reduce", "peel and fold each input graph to a fixpoint", "in", "r", "out")
    add("enumerate", "emit one graph6 line per isomorphism class",
        "n", "r_opt", "m_opt", "out")
    add("verify-gls", "exhaustive t-clique maximum vs the block construction",
        "n", "r", "t_opt", "out")
    add("verify-total", "total clique maximum with exact equality cases",
        "n", "r", "out")
    add("verify-lex-mu", "lex graph maximizes mu at every edge count", "n", "out")
    add("verify-star-matching", "star-plus-matching maximizes mu at min degree 1",
        "n", "out")
    add("verify-dichotomy", "every cluster is foldable or dischargeable",
        "n", "r", "out")
    sp = add("verify-avgwt", "exact weight-sum inequality sweep", "out")
    sp.add_argument("--r", type=int, default=12, help="sweep r from 1 to this (<= 12)")
    add("verify-finite-calc", "finite-calculation window for one r (3..6)",
        "r", "out")
    add("verify-pipeline", "reduce every graph and certify the chain",
        "n", "r", "out")
    return p


# ---------------------------------------------------------------------------
# helpers
# ---------------------------------------------------------------------------


def _read_graphs(path: str) -> list[Graph]:
    with open(path, "r", encoding="ascii") as fh:
        lines = [ln for ln in fh.read().splitlines() if ln.strip()]
    return [read_graph6(ln) for ln in lines]


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text)


def _fold_step_json(step: FoldStep) -> dict:
    return {
        "core": list(step.core),
        "shared": list(step.shared),
        "missing_edges": step.missing_edges,
        "missing_mu": step.missing_mu,
        "triangles_before": step.triangles_before,
        "triangles_after": step.triangles_after,
        "gain": step.gain,
        "gain_bound": step.gain_bound,
    }


def _report_pretty(rep: VerifyReport) -> str:
    lines = [
        f"target:      {rep.target}",
        f"space:       {rep.space}",
        f"examined:    {rep.examined}",
    ]
    if rep.extremal_value is not None or rep.conjectured_value is not None:
        lines.append(
            f"extremal:    {rep.extremal_value}    conjectured: {rep.conjectured_value}"
        )
    shown = ", ".join(w.graph6 for w in rep.witnesses[:6])
    more = "" if len(rep.witnesses) <= 6 else f" (+{len(rep.witnesses) - 6} more)"
    lines.append(f"witnesses:   {len(rep.witnesses)}  {shown}{more}")
    if rep.violations:
        lines.append(f"violations:  {len(rep.violations)}")
        for v in rep.violations:
            lines.append(f"  - {json.dumps(v, default=str)}")
    else:
        lines.append("violations:  none")
    lines.append(f"status:      {'PASS' if rep.passed else 'FAIL'}")
    lines.append(f"millis:      {rep.millis}")
    return "\n".join(lines)


def _finish_report(rep: VerifyReport, args) -> int:
    text = _report_pretty(rep) if args.pretty else json.dumps(rep.to_json(), default=str)
    _emit(text, args.out)
    if args.witness_out:
        with open(args.witness_out, "w", encoding="ascii") as fh:
            for w in rep.witnesses:
                fh.write(w.graph6 + "\n")
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# inspection subcommands
# ---------------------------------------------------------------------------


def _cmd_count(args) -> int:
    rows = []
    for g in _read_graphs(args.infile):
        census = triple_census(g)
        row = {
            "graph6": write_graph6(g),
            "n": g.n,
            "edges": g.num_edges,
            "max_degree": g.max_degree(),
            "clique_counts": list(clique_counts(g)),
            "total_cliques": count_all_cliques(g),
            "mu": mu(g),
            "census": {
                "triangles": census.triangles,
                "cherries": census.cherries,
                "one_edge": census.one_edge,
                "empty": census.empty,
            },
        }
        if args.t is not None:
            row["cliques_of_size"] = {str(args.t): count_cliques_of_size(g, args.t)}
        rows.append(row)
    if args.pretty:
        lines = []
        for row in rows:
            lines.append(f"{row['graph6']}  n={row['n']} m={row['edges']}")
            lines.append(f"  clique counts: {row['clique_counts']}")
            lines.append(f"  total cliques: {row['total_cliques']}   mu: {row['mu']}")
            if args.t is not None:
                k = row["cliques_of_size"][str(args.t)]
                lines.append(f"  cliques of size {args.t}: {k}")
        _emit("\n".join(lines), args.out)
    else:
        _emit(json.dumps({"graphs": rows}), args.out)
    return 0


def _cmd_clusters(args) -> int:
    rows = []
    for g in _read_graphs(args.infile):
        cs = find_clusters(g, args.r)
        rows.append(
            {
                "graph6": write_graph6(g),
                "clusters": [
                    {
                        "core": list(c.core),
                        "shared": list(c.shared),
                        "missing_edges": c.missing.num_edges,
                        "missing_mu": mu(c.missing),
                        "foldable": is_foldable(c),
                        "dischargeable": is_dischargeable(c),
                    }
                    for c in cs
                ],
            }
        )
    if args.pretty:
        lines = []
        for row in rows:
            lines.append(f"{row['graph6']}: {len(row['clusters'])} cluster(s)")
            for c in row["clusters"]:
                tags = [t for t, on in (("foldable", c["foldable"]),
                                        ("dischargeable", c["dischargeable"])) if on]
                lines.append(
                    f"  core {c['core']} shared {c['shared']} "
                    f"e(missing)={c['missing_edges']} mu(missing)={c['missing_mu']} "
                    f"[{', '.join(tags) or 'neither'}]"
                )
        _emit("\n".join(lines), args.out)
    else:
        _emit(json.dumps({"bound": args.r, "graphs": rows}), args.out)
    return 0


def _cmd_fold(args) -> int:
    rows = []
    for g in _read_graphs(args.infile):
        foldable = [c for c in find_clusters(g, args.r) if is_foldable(c)]
        if not foldable:
            rows.append({"graph6": write_graph6(g), "folded": False})
            continue
        c = foldable[0]
        before = count_cliques_of_size(g, 3) if g.n >= 3 else 0
        folded = fold(g, c)
        after = count_cliques_of_size(folded, 3) if folded.n >= 3 else 0
        step = FoldStep(
            core=c.core,
            shared=c.shared,
            missing_edges=c.missing.num_edges,
            missing_mu=mu(c.missing),
            triangles_before=before,
            triangles_after=after,
        )
        rows.append(
            {
                "graph6": write_graph6(g),
                "folded": True,
                "result": write_graph6(folded),
                "certificate": _fold_step_json(step),
            }
        )
    _emit(json.dumps({"bound": args.r, "graphs": rows}), args.out)
    return 0


def _cmd_reduce(args) -> int:
    rows = []
    for g in _read_graphs(args.infile):
        res = reduce_graph(g, args.r)
        rows.append(
            {
                "graph6": write_graph6(g),
                "blocks": res.blocks,
                "remainder": write_graph6(res.remainder),
                "remainder_order": res.remainder_order,
                "remainder_within_threshold": res.remainder_within_threshold,
                "folds": [_fold_step_json(s) for s in res.folds],
            }
        )
    _emit(json.dumps({"bound": args.r, "graphs": rows}), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    space = SearchSpace(n=args.n, max_degree=args.r, edge_count=args.m)
    lines = [write_graph6(g) for g in enumerate_graphs(space, args.workers)]
    _emit("\n".join(lines) if lines else "", args.out)
    return 0


# ---------------------------------------------------------------------------
# entry
# ---------------------------------------------------------------------------


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "clusters":
            return _cmd_clusters(args)
        if args.command == "fold":
            return _cmd_fold(args)
        if args.command == "reduce":
            return _cmd_reduce(args)
        if args.command == "enumerate":
            return _cmd_enumerate(args)
        if args.command == "verify-gls":
            t = 3 if args.t is None else args.t
            rep = search.extremal_clique_search(args.n, args.r, t, args.workers)
        elif args.command == "verify-total":
            rep = search.extremal_total_clique_search(args.n, args.r, args.workers)
        elif args.command == "verify-lex-mu":
            rep = search.verify_lex_mu(args.n, args.workers)
        elif args.command == "verify-star-matching":
            rep = search.verify_star_matching(args.n, args.workers)
        elif args.command == "verify-dichotomy":
            rep = search.verify_cluster_dichotomy(args.n, args.r, args.workers)
        elif args.command == "verify-avgwt":
            rep = search.verify_avgwt_lemma(args.r)
        elif args.command == "verify-finite-calc":
            rep = search.verify_finite_calculation(args.r)
        elif args.command == "verify-pipeline":
            rep = search.verify_main_pipeline(args.n, args.r, args.workers)
        else:  # pragma: no cover - argparse enforces the choices
            raise AssertionError(args.command)
        return _finish_report(rep, args)
    except (DomainError, CapacityError, Graph6ParseError, ValueError, OSError) as exc:
        print(f"cliquefold: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    """Console-script entry point."""
    sys.exit(main())

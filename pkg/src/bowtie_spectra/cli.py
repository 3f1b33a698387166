"""Command line entry point: ``bowtie-spectra <subcommand> ...``.

JSON goes to stdout, diagnostics to stderr.  Exit codes: 0 success/pass,
1 a check failed (or, for ``contains``, no embedding), 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import dataclass
from typing import Sequence

from . import families as fam
from .equitable import PartitionError, check_equitable, divisibility_witness
from .graph import Graph, Graph6Error, GraphError, from_graph6, to_graph6
from .search import SearchError, extremal_search, theorem_report
from .spectral import DEFAULT_TOL, char_poly_exact, adjacency_char_poly, spectral_radius
from .subgraph import contains_subgraph
from .verify import (
    VerifyError,
    check_case2_identities,
    check_ew_bound,
    check_lemma_gmt,
    check_lemma_k4m,
    check_pendant_lemma,
    check_triangle_free_bound,
    verify_eigenequations,
)

SCHEMA_VERSION = "v1"
JOBS_ENV = "BOWTIE_SPECTRA_JOBS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse with a one-line error report (exit status 2)."""

    def error(self, message: str):
        self.exit(2, f"{self.prog}: error: {message}\n")


@dataclass
class RunConfig:
    subcommand: str
    tolerance: float
    jobs: int
    cache: str | None
    output: str

    def __post_init__(self) -> None:
        if not self.tolerance > 0:
            raise UsageError("tolerance must be positive")
        if self.jobs < 1:
            raise UsageError("jobs must be at least 1")


def _need(args, *names):
    for n in names:
        if getattr(args, n) is None:
            raise UsageError(f"--{n.replace('_', '-')} is required for this family")
    return [getattr(args, n) for n in names]


def build_graph(token: str, args) -> tuple[Graph, fam.BlockLabeling | None]:
    """Family token with parameter flags, or a graph6 string."""
    t = token.lower()
    if t == "book":
        return fam.make_book(*_need(args, "m"))
    if t == "gmt":
        return fam.make_gmt(*_need(args, "m", "t"))
    if t == "k4m":
        return fam.make_k4m(*_need(args, "m"))
    if t == "case2h":
        return fam.make_case2_H(*_need(args, "m", "t"))
    if t == "case2h2":
        return fam.make_case2_H2(*_need(args, "m"))
    if t == "h33":
        return fam.make_h_cycle_triangle(3), None
    if t == "h43":
        return fam.make_h_cycle_triangle(4), None
    if t == "hcycle":
        return fam.make_h_cycle_triangle(*_need(args, "l")), None
    if t == "fk":
        return fam.make_friendship(*_need(args, "k")), None
    if t == "cycle":
        return fam.make_cycle(*_need(args, "n")), None
    if t == "star":
        return fam.make_star(*_need(args, "m")), None
    if t == "complete":
        return fam.make_complete(*_need(args, "n")), None
    if t == "path":
        return fam.make_path(*_need(args, "n")), None
    if t == "splitstar":
        return fam.make_split_star(*_need(args, "n", "k")), None
    return from_graph6(token), None


def _family_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--m", type=int, help="size (edge count)")
    p.add_argument("--t", type=int, help="pendant / page parameter")
    p.add_argument("--n", type=int, help="order")
    p.add_argument("--k", type=int, help="clique size or triangle count")
    p.add_argument("--l", type=int, help="cycle length for hcycle")


def make_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bowtie-spectra", description=__doc__.splitlines()[0])
    parser.add_argument("--tol", type=float, default=None, help="numeric tolerance")
    parser.add_argument("--format", choices=("json", "plain"), default="json")
    sub = parser.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("construct", help="build a named graph")
    p.add_argument("family")
    p.add_argument("--sidecar", help="write the block labeling JSON here")
    _family_flags(p)

    p = sub.add_parser("rho", help="spectral radius by power iteration")
    p.add_argument("graph")
    _family_flags(p)

    p = sub.add_parser("charpoly", help="exact characteristic polynomial")
    p.add_argument("graph", nargs="?")
    p.add_argument("--matrix", help="JSON integer matrix instead of a graph")
    _family_flags(p)

    p = sub.add_parser("contains", help="subgraph containment")
    p.add_argument("host")
    p.add_argument("pattern")
    p.add_argument("--induced", action="store_true")
    _family_flags(p)

    p = sub.add_parser("quotient", help="equitable partition quotient")
    p.add_argument("graph")
    p.add_argument("--partition", help="JSON list of vertex lists (defaults to the family's blocks)")
    _family_flags(p)

    p = sub.add_parser("verify", help="lemma checks")
    p.add_argument("--lemma", required=True,
                   choices=("gmt", "k4m", "case2", "nosal", "ew", "pendant", "eigen"))
    p.add_argument("--graph", help="graph token or graph6 for graph-level lemmas")
    _family_flags(p)

    for name in ("search", "report"):
        p = sub.add_parser(name, help="exhaustive extremal search" if name == "search"
                           else "search plus structural annotations of the winners")
        p.add_argument("--edges", type=int, required=True)
        p.add_argument("--forbid", default="h33,h43")
        p.add_argument("--induced", action="store_true")
        p.add_argument("--max-n", type=int)
        p.add_argument("--jobs", type=int)
        p.add_argument("--cache")
        p.add_argument("--limit", type=int, default=13)
    return parser


def _int_rows(obj) -> bool:
    return isinstance(obj, list) and all(
        isinstance(row, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in row)
        for row in obj
    )


def _emit(obj: dict, cfg: RunConfig, plain: str | None = None) -> None:
    if cfg.output == "plain" and plain is not None:
        print(plain)
    else:
        print(json.dumps(obj, sort_keys=True))


def _cmd_construct(args, cfg):
    g, lab = build_graph(args.family, args)
    blocks = lab.to_json() if lab is not None else None
    if args.sidecar and blocks is not None:
        with open(args.sidecar, "w") as fh:
            json.dump(blocks, fh, sort_keys=True)
    out = {"schema": f"construct/{SCHEMA_VERSION}", "family": args.family, "graph6": to_graph6(g),
           "n": g.n, "m": g.m, "blocks": blocks}
    _emit(out, cfg, to_graph6(g))
    return 0


def _cmd_rho(args, cfg):
    g, _ = build_graph(args.graph, args)
    r = spectral_radius(g, tol=cfg.tolerance)
    out = {"schema": f"rho/{SCHEMA_VERSION}", "graph6": to_graph6(g), "rho": r.rho,
           "residual": r.residual, "iterations": r.iterations, "converged": r.converged}
    _emit(out, cfg, repr(r.rho))
    return 0 if r.converged else 1


def _cmd_charpoly(args, cfg):
    if args.matrix is not None:
        try:
            matrix = json.loads(args.matrix)
        except json.JSONDecodeError as e:
            raise UsageError(f"--matrix is not valid JSON: {e.msg}") from None
        if not _int_rows(matrix):
            raise UsageError("--matrix must be a list of integer rows")
        p = char_poly_exact(matrix)
    elif args.graph is not None:
        g, _ = build_graph(args.graph, args)
        p = adjacency_char_poly(g)
    else:
        raise UsageError("give a graph or --matrix")
    out = {"schema": f"charpoly/{SCHEMA_VERSION}", "degree": p.degree, "coefficients": p.to_strings(),
           "text": str(p)}
    _emit(out, cfg, str(p))
    return 0


def _cmd_contains(args, cfg):
    host, _ = build_graph(args.host, args)
    pat = fam.PATTERNS[args.pattern]() if args.pattern in fam.PATTERNS else from_graph6(args.pattern)
    emb = contains_subgraph(host, pat, induced=args.induced)
    out = {"schema": f"contains/{SCHEMA_VERSION}", "host": to_graph6(host), "pattern": to_graph6(pat),
           "induced": args.induced, "contains": emb is not None,
           "embedding": None if emb is None else {str(k): v for k, v in sorted(emb.items())}}
    _emit(out, cfg, "yes" if emb is not None else "no")
    return 0 if emb is not None else 1


def _cmd_quotient(args, cfg):
    g, lab = build_graph(args.graph, args)
    if args.partition is not None:
        try:
            blocks = json.loads(args.partition)
        except json.JSONDecodeError as e:
            raise UsageError(f"--partition is not valid JSON: {e.msg}") from None
        if not _int_rows(blocks):
            raise UsageError("--partition must be a list of vertex lists")
    elif lab is not None:
        blocks = lab.partition()
    else:
        raise UsageError("--partition is required for graphs without a built-in labeling")
    res = check_equitable(g, blocks)
    out = {"schema": f"quotient/{SCHEMA_VERSION}", "graph6": to_graph6(g), "partition": blocks,
           "equitable": bool(res), "quotient": res.matrix,
           "violation": None if res else {"vertex": res.violation[0], "block": res.violation[1]},
           "divisible": None, "quotient_poly": None}
    if res:
        q, _, rem = divisibility_witness(g, blocks)
        out["divisible"] = rem.is_zero()
        out["quotient_poly"] = q.to_strings()
    _emit(out, cfg)
    return 0 if res and out["divisible"] else 1


def _cmd_verify(args, cfg):
    tol = cfg.tolerance
    lemma = args.lemma
    if lemma in ("gmt", "k4m", "case2"):
        if lemma == "gmt":
            rep = check_lemma_gmt(*_need(args, "m", "t"), tol=tol)
        elif lemma == "k4m":
            rep = check_lemma_k4m(*_need(args, "m"), tol=tol)
        else:
            rep = check_case2_identities(*_need(args, "m", "t"), tol=tol)
    else:
        if args.graph is None:
            raise UsageError(f"--graph is required for --lemma {lemma}")
        g, _ = build_graph(args.graph, args)
        rep = {
            "nosal": lambda: check_triangle_free_bound(g, tol),
            "ew": lambda: check_ew_bound(g, tol),
            "pendant": lambda: check_pendant_lemma(g),
            "eigen": lambda: verify_eigenequations(g, tol),
        }[lemma]()
    out = {"schema": f"verify/{SCHEMA_VERSION}", "reports": [rep.to_json()], "passed": rep.verdict != "fail"}
    _emit(out, cfg, rep.verdict)
    return 0 if rep.verdict != "fail" else 1


def _cmd_search(args, cfg, annotate: bool):
    patterns = [p for p in args.forbid.split(",") if p]
    for p in patterns:
        if p not in fam.PATTERNS:
            raise UsageError(f"unknown pattern {p!r}; choose from {', '.join(sorted(fam.PATTERNS))}")
    t0 = time.perf_counter()
    kwargs = dict(induced=args.induced, max_n=args.max_n, jobs=cfg.jobs, cache_dir=cfg.cache,
                  limit=args.limit)
    if annotate:
        if sorted(patterns) != ["h33", "h43"]:
            raise UsageError("report always uses --forbid h33,h43")
        rep = theorem_report(args.edges, **kwargs)
    else:
        rep = extremal_search(args.edges, patterns, **kwargs)
    print(f"search finished in {time.perf_counter() - t0:.2f}s", file=sys.stderr)
    out = {"schema": f"{'report' if annotate else 'search'}/{SCHEMA_VERSION}", **rep.to_json()}
    _emit(out, cfg)
    return 0


def run(argv: Sequence[str] | None = None) -> int:
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else 0
    try:
        jobs = getattr(args, "jobs", None)
        if jobs is None:
            jobs = int(os.environ.get(JOBS_ENV, "1"))
        tol = args.tol if args.tol is not None else (1e-8 if args.cmd == "verify" else DEFAULT_TOL)
        cfg = RunConfig(args.cmd, tol, jobs, getattr(args, "cache", None), args.format)
        handlers = {
            "construct": _cmd_construct, "rho": _cmd_rho, "charpoly": _cmd_charpoly,
            "contains": _cmd_contains, "quotient": _cmd_quotient, "verify": _cmd_verify,
            "search": lambda a, c: _cmd_search(a, c, False),
            "report": lambda a, c: _cmd_search(a, c, True),
        }
        return handlers[args.cmd](args, cfg)
    except (UsageError, GraphError, Graph6Error, fam.FamilyError, PartitionError, VerifyError,
            SearchError, OSError, ValueError) as e:
        print(f"bowtie-spectra: error: {e}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

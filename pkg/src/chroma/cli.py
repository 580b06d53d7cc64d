"""Command-line front end.

Exit codes: 0 success (or ISOMORPHIC for ``compare``), 1 SEPARATED or a failed
suite, 2 unreadable input or bad arguments, 3 size guard exceeded,
4 ``compare`` could not decide.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import comb
from dataclasses import dataclass
from pathlib import Path

from . import formats
from .compare import ISOMORPHIC, SEPARATED, as_weighted, compare_objects
from .errors import ChromaError, InvalidHostError, SizeLimitError
from .graphs import generate_corpus
from .invariants import HostSpec, build_host, chromatic_function, default_truncation, power_sum_expansion
from .polynomials import render, to_json
from .suites import SUITES, run_suite, thread_count

EXIT_OK, EXIT_SEPARATED, EXIT_PARSE, EXIT_SIZE, EXIT_UNDECIDED = 0, 1, 2, 3, 4


@dataclass
class RunConfig:
    seed: int = 0
    threads: int = 1
    host: str | None = None
    max_vertices: int = 10
    max_total_weight: int = 40
    max_host_vertices: int = 500


def _guard_graph(g, cfg: RunConfig) -> None:
    if g.n > cfg.max_vertices:
        raise SizeLimitError(f"{g.n} vertices exceeds the limit of {cfg.max_vertices}")
    if g.total_weight > cfg.max_total_weight:
        raise SizeLimitError(f"total weight {g.total_weight} exceeds the limit of {cfg.max_total_weight}")


def _guard_host(spec: HostSpec, cfg: RunConfig) -> None:
    size = spec.graph.n if spec.kind == "explicit" else comb(spec.m, spec.k) if spec.m >= spec.k else 0
    if size > cfg.max_host_vertices:
        raise SizeLimitError(f"host has {size} vertices, limit is {cfg.max_host_vertices}")


def cmd_compute(args, cfg: RunConfig) -> int:
    obj = formats.read_object(args.input, args.kind)
    g = as_weighted(obj, args.kind)
    _guard_graph(g, cfg)
    host = formats.parse_host(args.host) if args.host else HostSpec.complete(default_truncation(g, 1))
    _guard_host(host, cfg)
    build_host(host)
    poly = chromatic_function(g, host)
    if args.format == "json":
        print(json.dumps(to_json(poly)))
    else:
        print(render(poly))
    return EXIT_OK


def cmd_expand(args, cfg: RunConfig) -> int:
    g = formats.read_object(args.input, "graph")
    _guard_graph(g, cfg)
    if args.k < 1:
        raise InvalidHostError("--k must be at least 1")
    expr = power_sum_expansion(g, args.k)
    if args.format == "json":
        print(json.dumps(expr.to_json()))
    else:
        print(expr.render())
    return EXIT_OK


def cmd_compare(args, cfg: RunConfig) -> int:
    a = formats.read_object(args.a, args.kind)
    b = formats.read_object(args.b, args.kind)
    for obj in (a, b):
        _guard_graph(as_weighted(obj, args.kind), cfg)
    hosts = [formats.parse_host(h) for h in args.host] if args.host else None
    for h in hosts or ():
        _guard_host(h, cfg)
    result = compare_objects(a, b, args.kind, args.strategy, hosts)
    print("\n".join(result.lines()))
    if result.verdict == ISOMORPHIC:
        return EXIT_OK
    if result.verdict == SEPARATED:
        return EXIT_SEPARATED
    return EXIT_UNDECIDED


def cmd_verify(args, cfg: RunConfig) -> int:
    report = run_suite(args.suite, args.trials, args.seed, cfg.threads)
    print(f"suite: {report.name} seed: {report.seed}")
    print(report.summary())
    for failure in report.failures:
        print(json.dumps(failure, sort_keys=True))
    return EXIT_OK if report.ok else EXIT_SEPARATED


def cmd_gen(args, cfg: RunConfig) -> int:
    corpus = generate_corpus(args.n, args.weight_bound)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for i, g in enumerate(corpus):
        name = out / f"n{args.n}_w{args.weight_bound}_{i:04d}.json"
        name.write_text(json.dumps(formats.weighted_graph_to_json(g)) + "\n")
    print(f"wrote {len(corpus)} files to {out}")
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_PARSE)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="chroma", description=__doc__.splitlines()[0])
    parser.add_argument("--threads", type=int, default=None, help="worker processes (default: $CHROMA_THREADS or 1)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("compute", help="weighted H-chromatic function of a graph, DAG or poset")
    p.add_argument("input")
    p.add_argument("--kind", choices=("graph", "dag", "poset"), default="graph")
    p.add_argument("--host", help="complete:M | kneser:M,K | file:PATH")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("expand", help="signed p-basis expansion")
    p.add_argument("input")
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("compare", help="decide isomorphism with a certificate")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--kind", choices=("graph", "dag", "poset"), default="graph")
    p.add_argument("--strategy", choices=("hom-count", "host-grid"), default="hom-count")
    p.add_argument("--host", action="append", help="host for host-grid (repeatable)")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", choices=SUITES, required=True)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write one JSON file per weighted-graph class")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--weight-bound", type=int, default=1)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    cfg = RunConfig(
        seed=getattr(args, "seed", 0),
        threads=args.threads if args.threads else thread_count(),
        host=getattr(args, "host", None) if isinstance(getattr(args, "host", None), str) else None,
    )
    try:
        return args.func(args, cfg)
    except SizeLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ChromaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())

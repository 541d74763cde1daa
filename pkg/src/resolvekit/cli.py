"""Command-line front door.

Exit codes: 0 computed / verified resolving, 1 verified not-resolving,
2 usage or format error, 3 budget exceeded. ``-`` means stdin/stdout in any
file slot. All machine output is JSON; ``--pretty`` indents it.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .constructions import (
    FactorInputError,
    bound_report,
    product_partition_from_partitions,
    product_partition_from_set,
)
from .families import (
    complete,
    cycle,
    grid,
    paper_unicyclic_example,
    path,
    star,
)
from .graph import DisconnectedGraphError, all_pairs_distances, cartesian_product
from .io import (
    FormatError,
    format_dot,
    format_edge_list,
    format_partition,
    format_vertex_set,
    parse_edge_list,
    parse_partition,
    parse_vertex_set,
)
from .resolvability import is_resolving_partition, is_resolving_set
from .solvers import DeskScaleError, metric_dimension, partition_dimension

EXIT_OK = 0
EXIT_NOT_RESOLVING = 1
EXIT_USAGE = 2
EXIT_BUDGET = 3


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _write(path: str | None, text: str) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


class Run:
    """Collects manifest data (inputs, outputs, timing) for one invocation."""

    def __init__(self, argv: list[str]):
        self.argv = argv
        self.started = time.perf_counter()
        self.inputs: dict[str, str] = {}
        self.outputs: list[str] = []

    def read(self, path: str) -> str:
        text = _read(path)
        if path != "-":
            self.inputs[path] = hashlib.sha256(text.encode()).hexdigest()
        return text

    def write(self, path: str | None, text: str) -> None:
        _write(path, text)
        if path and path != "-":
            self.outputs.append(path)

    def emit_json(self, obj, path: str | None, pretty: bool) -> None:
        if pretty:
            text = json.dumps(obj, indent=2) + "\n"
        else:
            text = json.dumps(obj, separators=(",", ":")) + "\n"
        self.write(path, text)

    def wall_ms(self) -> float:
        return round((time.perf_counter() - self.started) * 1000.0, 3)

    def manifest(self, path: str | None) -> None:
        if not path:
            return
        doc = {
            "argv": self.argv,
            "version": __version__,
            "inputs": self.inputs,
            "outputs": self.outputs,
            "wall_ms": self.wall_ms(),
        }
        _write(path, json.dumps(doc, indent=2) + "\n")


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("-o", "--output", default=None, help="output file ('-' = stdout)")
    p.add_argument("--pretty", action="store_true", help="indent JSON output")
    p.add_argument("--manifest", default=None, help="write a run manifest JSON here")


def cmd_gen(args, run: Run) -> int:
    kind = args.kind
    p = args.params
    builders = {
        "complete": (1, lambda: complete(p[0])),
        "path": (1, lambda: path(p[0])),
        "cycle": (1, lambda: cycle(p[0])),
        "star": (1, lambda: star(p[0])),
        "grid": (2, lambda: grid(p[0], p[1])),
        "paper-example": (0, lambda: paper_unicyclic_example()[0]),
    }
    if kind not in builders:
        raise ValueError(f"unknown family {kind!r}")
    arity, build = builders[kind]
    if len(p) != arity:
        raise ValueError(f"{kind} takes {arity} parameter(s), got {len(p)}")
    g = build()
    run.write(args.output, format_edge_list(g))
    if kind == "paper-example":
        _, pi, s = paper_unicyclic_example()
        if args.partition_out:
            run.write(args.partition_out, format_partition(pi))
        if args.set_out:
            run.write(args.set_out, format_vertex_set(s))
    elif args.partition_out or args.set_out:
        raise ValueError("--partition-out/--set-out only apply to 'gen paper-example'")
    run.manifest(args.manifest)
    return EXIT_OK


def _cmd_solver(args, run: Run, which: str) -> int:
    g = parse_edge_list(run.read(args.graph))
    kwargs = {"limit": args.limit, "threads": args.threads}
    if args.max_n is not None:
        kwargs["max_vertices"] = args.max_n
    if which == "dim":
        res = metric_dimension(g, **kwargs)
        witness = list(res.witness.vertices) if res.witness else None
    else:
        res = partition_dimension(g, **kwargs)
        witness = [list(c) for c in res.witness.classes] if res.witness else None
    doc = {
        "value": res.value,
        "witness": witness,
        "examined": res.examined,
        "wall_ms": run.wall_ms(),
    }
    run.emit_json(doc, args.output, args.pretty)
    if args.witness_out and res.witness is not None:
        if which == "dim":
            run.write(args.witness_out, format_vertex_set(res.witness))
        else:
            run.write(args.witness_out, format_partition(res.witness))
    run.manifest(args.manifest)
    return EXIT_OK if res.value is not None else EXIT_BUDGET


def cmd_verify_set(args, run: Run) -> int:
    g = parse_edge_list(run.read(args.graph))
    s = parse_vertex_set(run.read(args.set))
    cert = is_resolving_set(all_pairs_distances(g), s)
    run.emit_json(cert.to_dict(), args.output, args.pretty)
    run.manifest(args.manifest)
    return EXIT_OK if cert.resolving else EXIT_NOT_RESOLVING


def cmd_verify_partition(args, run: Run) -> int:
    g = parse_edge_list(run.read(args.graph))
    pi = parse_partition(run.read(args.partition))
    cert = is_resolving_partition(all_pairs_distances(g), pi)
    run.emit_json(cert.to_dict(), args.output, args.pretty)
    run.manifest(args.manifest)
    return EXIT_OK if cert.resolving else EXIT_NOT_RESOLVING


def cmd_product(args, run: Run) -> int:
    g1 = parse_edge_list(run.read(args.g1))
    g2 = parse_edge_list(run.read(args.g2))
    prod, _codec = cartesian_product(g1, g2)
    run.write(args.output, format_edge_list(prod))
    if args.dot:
        run.write(args.dot, format_dot(prod))
    run.manifest(args.manifest)
    return EXIT_OK


def cmd_construct(args, run: Run) -> int:
    g1 = parse_edge_list(run.read(args.g1))
    pi1 = parse_partition(run.read(args.pi1))
    g2 = parse_edge_list(run.read(args.g2))
    if args.theorem == 1:
        if args.pi2 is None:
            raise ValueError("--theorem 1 requires --pi2")
        pi2 = parse_partition(run.read(args.pi2))
        plan = product_partition_from_partitions(g1, pi1, g2, pi2)
    else:
        if args.set is None:
            raise ValueError("--theorem 2 requires --set")
        s = parse_vertex_set(run.read(args.set))
        plan = product_partition_from_set(g1, pi1, g2, s)
    doc = {
        "source": plan.source,
        "classes": plan.classes.t,
        "bound": plan.bound,
        "labels": list(plan.class_labels),
        "partition": [list(c) for c in plan.classes.classes],
        "certificate": plan.certificate.to_dict(),
        "product": {"n": plan.product.n, "m": plan.product.m},
        "wall_ms": run.wall_ms(),
    }
    if args.out_prefix:
        run.write(args.out_prefix + ".edges", format_edge_list(plan.product))
        run.write(args.out_prefix + ".partition", format_partition(plan.classes))
        run.write(args.out_prefix + ".labels", "\n".join(plan.class_labels) + "\n")
        run.write(
            args.out_prefix + ".cert.json",
            json.dumps(plan.certificate.to_dict(), indent=2) + "\n",
        )
    run.emit_json(doc, args.output, args.pretty)
    run.manifest(args.manifest)
    return EXIT_OK


def cmd_bounds(args, run: Run) -> int:
    g1 = parse_edge_list(run.read(args.g1))
    g2 = parse_edge_list(run.read(args.g2))
    report = bound_report(
        g1,
        g2,
        limit=args.limit,
        threads=args.threads,
        exact_product=args.exact_product,
        product_max_vertices=args.product_max_n,
    )
    doc = report.to_dict()
    doc["wall_ms"] = run.wall_ms()
    run.emit_json(doc, args.output, args.pretty)
    run.manifest(args.manifest)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="resolvekit",
        description="Exact metric/partition dimension and certified product partitions.",
    )
    parser.add_argument("--version", action="version", version=f"resolvekit {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a named family as an edge list")
    p.add_argument("kind", help="complete|path|cycle|star|grid|paper-example")
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--partition-out", default=None)
    p.add_argument("--set-out", default=None)
    _add_common(p)
    p.set_defaults(func=cmd_gen)

    for name in ("dim", "pd"):
        p = sub.add_parser(name, help=f"exact {name} of a connected graph")
        p.add_argument("graph", help="edge-list file ('-' = stdin)")
        p.add_argument("--limit", type=int, default=None)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--witness-out", default=None)
        p.add_argument("--max-n", type=int, default=None, help="override the desk-scale cap")
        _add_common(p)
        p.set_defaults(func=lambda a, r, w=name: _cmd_solver(a, r, w))

    p = sub.add_parser("verify-set", help="certify a vertex sequence as (not) resolving")
    p.add_argument("graph")
    p.add_argument("set")
    _add_common(p)
    p.set_defaults(func=cmd_verify_set)

    p = sub.add_parser("verify-partition", help="certify an ordered partition")
    p.add_argument("graph")
    p.add_argument("partition")
    _add_common(p)
    p.set_defaults(func=cmd_verify_partition)

    p = sub.add_parser("product", help="Cartesian product of two edge lists")
    p.add_argument("g1")
    p.add_argument("g2")
    p.add_argument("--dot", default=None, help="also write a DOT rendering here")
    _add_common(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("construct", help="build a certified product partition")
    p.add_argument("--theorem", type=int, choices=(1, 2), required=True,
                   help="1 = partition+partition, 2 = partition+set")
    p.add_argument("--g1", required=True)
    p.add_argument("--pi1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--pi2", default=None)
    p.add_argument("--set", default=None)
    p.add_argument("--out-prefix", default=None,
                   help="write PREFIX.edges/.partition/.labels/.cert.json")
    _add_common(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bounds", help="evaluate every applicable pd bound for a product")
    p.add_argument("--g1", required=True)
    p.add_argument("--g2", required=True)
    p.add_argument("--exact-product", action="store_true")
    p.add_argument("--limit", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    p.add_argument("--product-max-n", type=int, default=16)
    _add_common(p)
    p.set_defaults(func=cmd_bounds)

    return parser


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    run = Run(argv)
    try:
        return args.func(args, run)
    except FactorInputError as exc:
        if exc.certificate is not None:
            run.emit_json(exc.certificate.to_dict(), None, True)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NOT_RESOLVING
    except FormatError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DeskScaleError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ValueError, DisconnectedGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()

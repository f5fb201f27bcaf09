"""Command-line front end.

Subcommands: convert, check, product, mix, ptrace, separability, kraus,
psd-pure.  Results go to --out or stdout in the text file formats; short
human-readable reports go to stderr.  Exit codes: 0 success, 1 domain error,
2 usage error.  Vertex indices on the command line are 1-based.
"""

from __future__ import annotations

import argparse
import sys

import numpy as np

from . import fileio, kraus, products, psd, separability, spectra, states
from .errors import GraphStateError
from .graphs import Convention, WeightedGraph
from .separability import BipartiteShape


def _parse_weight(text: str) -> float:
    if "/" in text:
        num, den = text.split("/", 1)
        return float(num) / float(den)
    return float(text)


def _parse_int_pair(text: str, flag: str) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise UsageError(f"{flag} expects two comma-separated integers, got {text!r}")
    return int(parts[0]), int(parts[1])


class UsageError(Exception):
    pass


def _as_graph(doc, convention: Convention) -> WeightedGraph:
    if isinstance(doc, WeightedGraph):
        return doc
    return states.extract_graph(doc, convention)


def _as_density(doc) -> states.DensityMatrix:
    if isinstance(doc, WeightedGraph):
        return states.density_from_graph(doc)
    return states.DensityMatrix.from_matrix(doc)


def _emit_graph_or_matrix(g: WeightedGraph, to: str) -> str:
    if to == "matrix":
        return fileio.dump_matrix(states.density_from_graph(g).mat)
    return fileio.dump_graph(g)


def _cmd_convert(args) -> str:
    doc = fileio.load_document(args.input)
    convention = Convention(args.convention)
    if args.to == "graph":
        if isinstance(doc, WeightedGraph):
            return fileio.dump_graph(doc)
        return fileio.dump_graph(states.extract_graph(doc, convention))
    if isinstance(doc, WeightedGraph):
        return fileio.dump_matrix(states.observable_from_graph(doc))
    return fileio.dump_matrix(doc)


def _cmd_check(args) -> str:
    doc = fileio.load_document(args.input)
    lines = []
    if not (args.psd or args.pure or args.entropy or args.graphical):
        raise UsageError("check needs at least one of --psd --pure --entropy --graphical")
    if args.psd:
        target = doc.laplacian() if isinstance(doc, WeightedGraph) else np.asarray(doc)
        lines.append("psd" if spectra.is_psd(target) else "not-psd")
    if args.pure:
        if isinstance(doc, WeightedGraph):
            pure = states.is_pure(doc)
        else:
            pure = abs(_as_density(doc).purity() - 1.0) <= 1e-9
        lines.append("pure" if pure else "mixed")
    if args.entropy:
        bits = states.entropy(_as_density(doc))
        lines.append(f"{bits:.6f} bits")
    if args.graphical:
        g = _as_graph(doc, Convention(args.convention))
        verdict = psd.graphical_psd_check(g)
        lines.append(fileio.dump_psd_verdict(verdict).rstrip("\n"))
        rule = verdict.rule or "no rule applies"
        print(f"graphical check: {verdict.verdict} ({rule})", file=sys.stderr)
    return "\n".join(lines) + "\n"


def _cmd_product(args) -> str:
    g = fileio.load_graph(args.first)
    h = fileio.load_graph(args.second)
    fn = {
        "tensor": products.tensor,
        "modified": products.modified_tensor,
        "cartesian": products.cartesian,
    }[args.kind]
    return _emit_graph_or_matrix(fn(g, h), args.to)


def _cmd_mix(args) -> str:
    weights = [_parse_weight(w) for w in args.weights.split(",")]
    graphs = [fileio.load_graph(p) for p in args.inputs]
    if len(weights) != len(graphs):
        raise UsageError(f"{len(weights)} weights for {len(graphs)} graphs")
    return _emit_graph_or_matrix(products.mix(list(zip(weights, graphs))), args.to)


def _cmd_ptrace(args) -> str:
    g = fileio.load_graph(args.input)
    p, q = _parse_int_pair(args.dims, "--dims")
    return _emit_graph_or_matrix(states.partial_trace(g, (p, q), args.keep), args.to)


def _cmd_separability(args) -> str:
    p, q = _parse_int_pair(args.shape, "--shape")
    shape = BipartiteShape(p, q)
    doc = fileio.load_document(args.input)
    if args.method == "degree":
        verdict = separability.degree_criterion(_as_graph(doc, Convention.REAL_SIGNED), shape)
    elif args.method == "ppt":
        verdict = separability.ppt_oracle(_as_density(doc), shape)
    else:  # lemma417, the paired-cross-edge sufficient condition
        verdict = separability.paired_cross_edges(_as_graph(doc, Convention.REAL_SIGNED), shape)
    print(
        f"separability ({args.method}): {verdict.verdict} [{verdict.witness_kind}]",
        file=sys.stderr,
    )
    return fileio.dump_separability(verdict)


def _parse_edit(text: str) -> tuple[str, list]:
    if ":" not in text:
        raise UsageError(f"--edit expects kind:args, got {text!r}")
    kind, raw = text.split(":", 1)
    parts = raw.split(",")
    try:
        if kind == "del-edge":
            (u, v) = int(parts[0]), int(parts[1])
            return kind, [u - 1, v - 1]
        if kind == "add-edge":
            return kind, [int(parts[0]) - 1, int(parts[1]) - 1, _parse_weight(parts[2])]
        if kind == "del-loop":
            return kind, [int(parts[0]) - 1]
        if kind == "add-loop":
            return kind, [int(parts[0]) - 1, _parse_weight(parts[1])]
        if kind == "del-vertex":
            return kind, [int(parts[0]) - 1]
    except (ValueError, IndexError) as exc:
        raise UsageError(f"bad --edit arguments {raw!r}: {exc}") from exc
    raise UsageError(f"unknown edit kind {kind!r}")


def _cmd_kraus(args) -> str:
    g = fileio.load_graph(args.input)
    kind, params = _parse_edit(args.edit)
    bundle = None
    if kind == "del-edge":
        bundle, result = kraus.kraus_delete_edge(g, *params)
    elif kind == "add-edge":
        bundle, result = kraus.kraus_add_edge(g, *params)
    elif kind == "del-loop":
        bundle, result = kraus.kraus_delete_loop(g, *params)
    elif kind == "add-loop":
        bundle, result = kraus.kraus_add_loop(g, *params)
    else:
        result = kraus.delete_vertex(g, *params)
    if bundle is not None:
        print(
            f"kraus {kind}: {len(bundle.positive)} positive / {len(bundle.negative)} "
            f"negative operators, completeness defect {bundle.completeness_defect():.3e}",
            file=sys.stderr,
        )
        if args.kraus_out:
            fileio.write_text(fileio.dump_kraus(bundle), args.kraus_out, sys.stdout)
    return fileio.dump_matrix(states.density_from_graph(result).mat)


def _cmd_psd_pure(args) -> str:
    g = psd.signed_complete_pure(args.n_exponent)
    print(
        f"signed complete graph on {g.n} vertices, "
        f"{sum(1 for w in g.edges.values() if w.real < 0)} negative edges",
        file=sys.stderr,
    )
    return fileio.dump_graph(g)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="graphstate",
        description="weighted graphs as quantum states: conversions and analyses",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("convert", help="convert between graph and matrix files")
    p.add_argument("input")
    p.add_argument("--to", choices=["graph", "matrix"], required=True)
    p.add_argument("--convention", choices=["real", "complex"], default="complex")
    p.set_defaults(run=_cmd_convert)

    p = sub.add_parser("check", help="state checks: psd, purity, entropy, graphical rules")
    p.add_argument("input")
    p.add_argument("--psd", action="store_true")
    p.add_argument("--pure", action="store_true")
    p.add_argument("--entropy", action="store_true")
    p.add_argument("--graphical", action="store_true")
    p.add_argument("--convention", choices=["real", "complex"], default="complex")
    p.set_defaults(run=_cmd_check)

    p = sub.add_parser("product", help="graph products")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--kind", choices=["tensor", "modified", "cartesian"], required=True)
    p.add_argument("--to", choices=["graph", "matrix"], default="graph")
    p.set_defaults(run=_cmd_product)

    p = sub.add_parser("mix", help="convex mixture of state graphs")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--weights", required=True, help="comma-separated, fractions allowed")
    p.add_argument("--to", choices=["graph", "matrix"], default="graph")
    p.set_defaults(run=_cmd_mix)

    p = sub.add_parser("ptrace", help="partial trace of a bipartite state graph")
    p.add_argument("input")
    p.add_argument("--dims", required=True, help="p,q")
    p.add_argument("--keep", choices=["first", "second"], default="first")
    p.add_argument("--to", choices=["graph", "matrix"], default="graph")
    p.set_defaults(run=_cmd_ptrace)

    p = sub.add_parser("separability", help="bipartite separability tests")
    p.add_argument("input")
    p.add_argument("--shape", required=True, help="p,q")
    p.add_argument("--method", choices=["degree", "ppt", "lemma417"], required=True)
    p.set_defaults(run=_cmd_separability)

    p = sub.add_parser("kraus", help="graph edits as Kraus-operator maps")
    p.add_argument("input")
    p.add_argument(
        "--edit",
        required=True,
        help="del-edge:u,v | add-edge:u,v,w | del-loop:v | add-loop:v,w | del-vertex:v",
    )
    p.add_argument("--kraus-out", help="path for the Kraus bundle file")
    p.set_defaults(run=_cmd_kraus)

    p = sub.add_parser("psd-pure", help="signed complete graph of a pure product state")
    p.add_argument("--n-exponent", type=int, required=True)
    p.set_defaults(run=_cmd_psd_pure)

    for name, sp in sub.choices.items():
        sp.add_argument("--out", help="output path (default: stdout)")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        text = args.run(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    except GraphStateError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    fileio.write_text(text, args.out, sys.stdout)
    return 0


if __name__ == "__main__":
    sys.exit(main())

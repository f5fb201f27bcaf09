"""Text file formats: graphs, matrices, Kraus bundles, and verdict records.

All numbers serialize with 12 significant digits and lowercase exponents, and
writers emit keys in a fixed order, so identical inputs produce identical
bytes.  Vertex indices are 1-based on disk and in the CLI, 0-based in memory.
"""

from __future__ import annotations

import json
from typing import IO

import numpy as np

from .errors import FileFormatError
from .graphs import Convention, WeightedGraph
from .kraus import KrausSet
from .psd import PsdVerdict
from .separability import SeparabilityVerdict


def format_number(x: float) -> str:
    x = float(x) + 0.0  # normalize -0.0
    return format(x, ".11e")


def _pair(z: complex) -> str:
    return f"[{format_number(z.real)}, {format_number(z.imag)}]"


# -- graph files ----------------------------------------------------------------


def dump_graph(g: WeightedGraph) -> str:
    lines = ["{", f'  "convention": "{g.convention.value}",', f'  "n": {g.n},']
    edge_rows = [
        f'    {{"u": {u + 1}, "v": {v + 1}, "w": {_pair(w)}}}'
        for (u, v), w in sorted(g.edges.items())
    ]
    loop_rows = [
        f'    {{"v": {v + 1}, "w": {format_number(lw)}}}'
        for v, lw in sorted(g.loops.items())
    ]
    lines.append('  "edges": [' + ("\n" + ",\n".join(edge_rows) + "\n  ]" if edge_rows else "]") + ",")
    lines.append('  "loops": [' + ("\n" + ",\n".join(loop_rows) + "\n  ]" if loop_rows else "]"))
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> WeightedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"not a valid graph document: {exc}") from exc
    try:
        convention = Convention(doc["convention"])
        n = int(doc["n"])
        raw_edges = doc.get("edges", [])
        raw_loops = doc.get("loops", [])
    except (KeyError, ValueError, TypeError) as exc:
        raise FileFormatError(f"malformed graph document: {exc}") from exc
    edges = {}
    for row in raw_edges:
        u, v = int(row["u"]), int(row["v"])
        if not 1 <= u < v <= n:
            raise FileFormatError(f"edge pair ({u}, {v}) must satisfy 1 <= u < v <= n")
        key = (u - 1, v - 1)
        if key in edges:
            raise FileFormatError(f"duplicate edge pair ({u}, {v})")
        re, im = row["w"]
        edges[key] = complex(float(re), float(im))
    loops = {}
    for row in raw_loops:
        v = int(row["v"])
        if not 1 <= v <= n:
            raise FileFormatError(f"loop vertex {v} out of range")
        if v - 1 in loops:
            raise FileFormatError(f"duplicate loop on vertex {v}")
        loops[v - 1] = float(row["w"])
    return WeightedGraph(convention, n, edges, loops)


# -- matrix files -----------------------------------------------------------------


def dump_matrix(a: np.ndarray) -> str:
    a = np.asarray(a, dtype=complex)
    n = a.shape[0]
    lines = ["{", f'  "n": {n},', '  "entries": [']
    rows = []
    for i in range(n):
        rows.append("    [" + ", ".join(_pair(a[i, j]) for j in range(n)) + "]")
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_matrix(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
        n = int(doc["n"])
        entries = doc["entries"]
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise FileFormatError(f"malformed matrix document: {exc}") from exc
    if len(entries) != n or any(len(row) != n for row in entries):
        raise FileFormatError(f"entries are not an {n}x{n} grid")
    out = np.zeros((n, n), dtype=complex)
    for i, row in enumerate(entries):
        for j, (re, im) in enumerate(row):
            out[i, j] = complex(float(re), float(im))
    return out


# -- kraus bundles ------------------------------------------------------------------


def dump_kraus(ks: KrausSet) -> str:
    lines = ["{", f'  "target_dim": {ks.target_dim},', '  "operators": [']
    rows = []
    for sign, family in (("positive", ks.positive), ("negative", ks.negative)):
        for op in family:
            entries = ",\n".join(
                "      [" + ", ".join(_pair(op[i, j]) for j in range(ks.target_dim)) + "]"
                for i in range(ks.target_dim)
            )
            rows.append(f'    {{"sign": "{sign}", "entries": [\n{entries}\n    ]}}')
    lines.append(",\n".join(rows))
    lines.append("  ]")
    lines.append("}")
    return "\n".join(lines) + "\n"


def parse_kraus(text: str) -> KrausSet:
    try:
        doc = json.loads(text)
        dim = int(doc["target_dim"])
        ops = doc["operators"]
    except (json.JSONDecodeError, KeyError, ValueError, TypeError) as exc:
        raise FileFormatError(f"malformed kraus document: {exc}") from exc
    positive, negative = [], []
    for row in ops:
        mat = np.array(
            [[complex(float(re), float(im)) for re, im in r] for r in row["entries"]]
        )
        if row["sign"] == "positive":
            positive.append(mat)
        elif row["sign"] == "negative":
            negative.append(mat)
        else:
            raise FileFormatError(f"unknown sign tag {row['sign']!r}")
    return KrausSet(tuple(positive), tuple(negative), dim)


# -- verdict records -----------------------------------------------------------------


def _witness_text(value) -> str:
    if isinstance(value, (tuple, list)):
        return "[" + ", ".join(_witness_text(v) for v in value) + "]"
    if isinstance(value, float):
        return format_number(value)
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    return json.dumps(str(value))


def dump_separability(v: SeparabilityVerdict) -> str:
    return (
        "{"
        f'"verdict": "{v.verdict}", '
        f'"witness_kind": "{v.witness_kind}", '
        f'"witness": {_witness_text(v.witness)}, '
        f'"shape": [{v.shape.p}, {v.shape.q}]'
        "}\n"
    )


def dump_psd_verdict(v: PsdVerdict) -> str:
    rule = json.dumps(v.rule) if v.rule is not None else "null"
    return (
        "{"
        f'"verdict": "{v.verdict}", '
        f'"rule": {rule}, '
        f'"witness": {_witness_text(v.witness)}'
        "}\n"
    )


# -- path helpers ---------------------------------------------------------------------


def load_graph(path: str) -> WeightedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def load_matrix(path: str) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def load_document(path: str) -> WeightedGraph | np.ndarray:
    """Graph or matrix file, decided by the document's fields."""
    with open(path, "r", encoding="utf-8") as fh:
        text = fh.read()
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{path}: not a graphstate document: {exc}") from exc
    if isinstance(doc, dict) and "entries" in doc:
        return parse_matrix(text)
    return parse_graph(text)


def write_text(text: str, out: str | None, stream: IO[str]) -> None:
    if out is None:
        stream.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)

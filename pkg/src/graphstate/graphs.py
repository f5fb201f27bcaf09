"""Weighted graphs under the two weight conventions and their matrices.

A weighted graph stores each undirected edge once with canonical orientation
u < v; the reverse direction is implicitly the complex conjugate, so
hermiticity of the adjacency matrix is structural rather than checked.
Loop weights are real in both conventions.

The two conventions differ in the vertex degree and in the sign layout of the
generalized Laplacian Q:

* ``real`` (real-signed weights): degree is the signed sum of incident
  weights plus the loop weight; Q = Delta - M + Delta0.
* ``complex`` (hermitian weights): degree is the modulus sum over incident
  non-loop edges plus the loop weight; Q = Delta + M - Delta0.
"""

from __future__ import annotations

import cmath
import enum
import math
import warnings
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Iterable, Mapping, NamedTuple

import numpy as np

from .errors import (
    BadWeights,
    ConventionMismatch,
    DegreeAdditivityWarning,
    DimensionMismatch,
    InvalidPermutation,
)

EdgeKey = tuple[int, int]


class Convention(enum.Enum):
    """Weight convention tag; the value doubles as the file-format spelling."""

    REAL_SIGNED = "real"
    COMPLEX_HERMITIAN = "complex"


class GraphMatrices(NamedTuple):
    adjacency: np.ndarray
    degree: np.ndarray
    loop: np.ndarray
    laplacian: np.ndarray


def _check_finite(z: complex, what: str) -> None:
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise BadWeights(f"{what} must be finite, got {z!r}")


@dataclass(frozen=True)
class WeightedGraph:
    """Immutable weighted graph: vertex count, edge map {u<v: weight}, loop map."""

    convention: Convention
    n: int
    edges: Mapping[EdgeKey, complex] = field(default_factory=dict)
    loops: Mapping[int, float] = field(default_factory=dict)

    def __post_init__(self):
        if self.n < 1:
            raise DimensionMismatch(f"graph needs at least one vertex, got n={self.n}")
        edges: dict[EdgeKey, complex] = {}
        for (u, v), w in sorted(self.edges.items()):
            w = complex(w)
            if not (0 <= u < v < self.n):
                raise BadWeights(f"edge key ({u}, {v}) must satisfy 0 <= u < v < n")
            _check_finite(w, f"edge ({u}, {v}) weight")
            if w == 0:
                raise BadWeights(f"edge ({u}, {v}) carries zero weight")
            if self.convention is Convention.REAL_SIGNED and w.imag != 0.0:
                raise ConventionMismatch(
                    f"real-signed graph cannot hold complex weight {w!r} on ({u}, {v})"
                )
            edges[(u, v)] = w
        loops: dict[int, float] = {}
        for v, lw in sorted(self.loops.items()):
            lw = float(lw)
            if not 0 <= v < self.n:
                raise BadWeights(f"loop vertex {v} out of range")
            _check_finite(complex(lw), f"loop ({v}) weight")
            if lw == 0.0:
                raise BadWeights(f"loop on {v} carries zero weight")
            loops[v] = lw
        object.__setattr__(self, "edges", MappingProxyType(edges))
        object.__setattr__(self, "loops", MappingProxyType(loops))

    # -- basic queries ----------------------------------------------------

    @property
    def is_real(self) -> bool:
        return self.convention is Convention.REAL_SIGNED

    def weight(self, u: int, v: int) -> complex:
        """Weight of the ordered pair (u, v); conjugated on reverse lookup."""
        if u == v:
            return complex(self.loops.get(u, 0.0))
        if u < v:
            return self.edges.get((u, v), 0j)
        return self.edges.get((v, u), 0j).conjugate()

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def incident_edges(self, v: int) -> list[tuple[EdgeKey, complex]]:
        return [(key, w) for key, w in self.edges.items() if v in key]

    def is_loop_free(self) -> bool:
        return not self.loops

    def degree(self, v: int) -> float:
        if not 0 <= v < self.n:
            raise DimensionMismatch(f"vertex {v} out of range for n={self.n}")
        d = 0.0
        for key, w in self.edges.items():
            if v in key:
                d += w.real if self.is_real else abs(w)
        return d + self.loops.get(v, 0.0)

    def degrees(self) -> np.ndarray:
        d = np.zeros(self.n)
        for (u, v), w in self.edges.items():
            c = w.real if self.is_real else abs(w)
            d[u] += c
            d[v] += c
        for v, lw in self.loops.items():
            d[v] += lw
        return d

    def degree_sum(self) -> float:
        return float(self.degrees().sum())

    # -- matrices ----------------------------------------------------------

    def adjacency(self) -> np.ndarray:
        m = np.zeros((self.n, self.n), dtype=complex)
        for (u, v), w in self.edges.items():
            m[u, v] = w
            m[v, u] = w.conjugate()
        for v, lw in self.loops.items():
            m[v, v] = lw
        return m

    def matrices(self) -> GraphMatrices:
        """(adjacency M, degree Delta, loop Delta0, generalized Laplacian Q)."""
        m = self.adjacency()
        delta = np.diag(self.degrees()).astype(complex)
        delta0 = np.zeros((self.n, self.n), dtype=complex)
        for v, lw in self.loops.items():
            delta0[v, v] = lw
        if self.is_real:
            q = delta - m + delta0
        else:
            q = delta + m - delta0
        return GraphMatrices(m, delta, delta0, q)

    def laplacian(self) -> np.ndarray:
        return self.matrices().laplacian

    # -- rebuilding helpers --------------------------------------------------

    def replace(self, *, edges=None, loops=None, n=None) -> "WeightedGraph":
        return WeightedGraph(
            self.convention,
            self.n if n is None else n,
            dict(self.edges) if edges is None else edges,
            dict(self.loops) if loops is None else loops,
        )

    def scaled(self, c: float) -> "WeightedGraph":
        """Graph with every edge and loop weight multiplied by the real number c."""
        if c == 0:
            return WeightedGraph(self.convention, self.n)
        return self.replace(
            edges={k: c * w for k, w in self.edges.items()},
            loops={v: c * lw for v, lw in self.loops.items()},
        )


def empty_graph(convention: Convention, n: int) -> WeightedGraph:
    return WeightedGraph(convention, n)


def build_graph(
    convention: Convention,
    n: int,
    edges: Mapping[EdgeKey, complex] | Iterable[tuple[int, int, complex]] = (),
    loops: Mapping[int, float] | Iterable[tuple[int, float]] = (),
) -> WeightedGraph:
    """Convenience constructor accepting (u, v, w) triples; zero weights dropped."""
    edge_map = dict(edges) if isinstance(edges, Mapping) else {
        (min(u, v), max(u, v)): complex(w) for u, v, w in edges
    }
    loop_map = dict(loops) if isinstance(loops, Mapping) else {v: float(w) for v, w in loops}
    edge_map = {k: w for k, w in edge_map.items() if w != 0}
    loop_map = {v: w for v, w in loop_map.items() if w != 0.0}
    return WeightedGraph(convention, n, edge_map, loop_map)


def _require_compatible(g1: WeightedGraph, g2: WeightedGraph) -> None:
    if g1.n != g2.n:
        raise DimensionMismatch(f"vertex counts differ: {g1.n} vs {g2.n}")
    if g1.convention is not g2.convention:
        raise ConventionMismatch(
            f"conventions differ: {g1.convention.value} vs {g2.convention.value}"
        )


def edge_union(g1: WeightedGraph, g2: WeightedGraph) -> WeightedGraph:
    """Union of edge sets; weights add on shared edges/loops, exact zeros drop.

    In complex mode a shared edge whose summands are not nonnegative multiples
    of each other breaks modulus-degree additivity; that is surfaced as a
    DegreeAdditivityWarning rather than hidden.
    """
    _require_compatible(g1, g2)
    edges = dict(g1.edges)
    for key, w in g2.edges.items():
        if key in edges:
            w1 = edges[key]
            total = w1 + w
            if not g1.is_real:
                if abs(total) < abs(w1) + abs(w) - 1e-12 * (abs(w1) + abs(w)):
                    warnings.warn(
                        f"edge {key}: modulus degrees are not additive under this union",
                        DegreeAdditivityWarning,
                        stacklevel=2,
                    )
            if total == 0:
                del edges[key]
            else:
                edges[key] = total
        else:
            edges[key] = w
    loops = dict(g1.loops)
    for v, lw in g2.loops.items():
        total = loops.get(v, 0.0) + lw
        if total == 0.0:
            loops.pop(v, None)
        else:
            loops[v] = total
    return WeightedGraph(g1.convention, g1.n, edges, loops)


def disjoint_edge_union(*graphs: WeightedGraph) -> WeightedGraph:
    """Edge union that insists the operands share no edge or loop position."""
    if not graphs:
        raise DimensionMismatch("disjoint_edge_union needs at least one graph")
    result = graphs[0]
    for g in graphs[1:]:
        _require_compatible(result, g)
        overlap = set(result.edges) & set(g.edges)
        loop_overlap = set(result.loops) & set(g.loops)
        if overlap or loop_overlap:
            raise BadWeights(
                f"edge sets are not disjoint: shared edges {sorted(overlap)}, "
                f"shared loops {sorted(loop_overlap)}"
            )
        result = edge_union(result, g)
    return result


def permute(g: WeightedGraph, perm: Iterable[int]) -> WeightedGraph:
    """Relabel vertices so old vertex v becomes perm[v]; Q conjugates by P."""
    p = list(perm)
    if sorted(p) != list(range(g.n)):
        raise InvalidPermutation(f"{p} is not a permutation of 0..{g.n - 1}")
    edges: dict[EdgeKey, complex] = {}
    for (u, v), w in g.edges.items():
        a, b = p[u], p[v]
        if a < b:
            edges[(a, b)] = w
        else:
            edges[(b, a)] = w.conjugate()
    loops = {p[v]: lw for v, lw in g.loops.items()}
    return WeightedGraph(g.convention, g.n, edges, loops)


def permutation_matrix(perm: Iterable[int]) -> np.ndarray:
    """P with P[v, perm[v]] = 1, so Q(permute(g, perm)) = P^T Q(g) P."""
    p = list(perm)
    mat = np.zeros((len(p), len(p)))
    for v, t in enumerate(p):
        mat[v, t] = 1.0
    return mat

"""Bipartite and k-partite separability machinery: partial-transpose graphs,
the degree criterion, a PPT matrix oracle, the paired-cross-edge sufficient
condition, and separable-state synthesis from factor graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import spectra, states
from .errors import (
    ComplexNotSupported,
    DimensionMismatch,
    HasLoops,
)
from .graphs import Convention, WeightedGraph
from .products import mix, modified_tensor

DEGREE_MATCH_TOL = 1e-10
WEIGHT_MATCH_TOL = 1e-12
PPT_SUFFICIENT_DIM = 6  # PPT decides separability for 2x2 and 2x3 systems


@dataclass(frozen=True)
class BipartiteShape:
    p: int
    q: int

    def __post_init__(self):
        if self.p < 1 or self.q < 1:
            raise DimensionMismatch(f"factors must be positive, got {self.p}x{self.q}")

    @property
    def size(self) -> int:
        return self.p * self.q

    def labels(self, flat: int) -> tuple[int, int]:
        return divmod(flat, self.q)

    def flat(self, i: int, j: int) -> int:
        return i * self.q + j


@dataclass(frozen=True)
class SeparabilityVerdict:
    verdict: str  # "separable" | "entangled" | "inconclusive"
    witness_kind: str
    witness: tuple
    shape: BipartiteShape

    @property
    def is_entangled(self) -> bool:
        return self.verdict == "entangled"

    @property
    def is_separable(self) -> bool:
        return self.verdict == "separable"


def _check_shape(g: WeightedGraph, shape: BipartiteShape) -> None:
    if g.n != shape.size:
        raise DimensionMismatch(f"graph on {g.n} vertices is not {shape.p}x{shape.q}")


def partial_transpose_graph(g: WeightedGraph, shape: BipartiteShape) -> WeightedGraph:
    """Edge relabeling {(i,j),(k,l)} -> {(i,l),(k,j)}; involutive on loop-free graphs."""
    _check_shape(g, shape)
    if not g.is_loop_free():
        raise HasLoops("partial transpose graphs are defined without loops")
    edges = {}
    for (x, y), w in g.edges.items():
        i, j = shape.labels(x)
        k, l = shape.labels(y)
        a, b = shape.flat(i, l), shape.flat(k, j)
        if a < b:
            edges[(a, b)] = w
        else:
            edges[(b, a)] = w.conjugate()
    return WeightedGraph(g.convention, g.n, edges, {})


def partial_transpose_matrix(a: np.ndarray, shape: BipartiteShape) -> np.ndarray:
    t = np.asarray(a, dtype=complex).reshape(shape.p, shape.q, shape.p, shape.q)
    return np.einsum("ijkl->ilkj", t).reshape(shape.size, shape.size)


def degree_criterion(g: WeightedGraph, shape: BipartiteShape) -> SeparabilityVerdict:
    """Entangled when a vertex degree moves under partial transposition.

    Necessary only: matching degrees yield an inconclusive verdict.  Stated
    for loop-free real-signed graphs and not extrapolated beyond them.
    """
    if not g.is_real:
        raise ComplexNotSupported("the degree criterion is a real-weights result")
    if not g.is_loop_free():
        raise HasLoops("the degree criterion needs a loop-free graph")
    _check_shape(g, shape)
    before = g.degrees()
    after = partial_transpose_graph(g, shape).degrees()
    scale = max(1.0, float(np.abs(before).max(initial=0.0)))
    for v in range(g.n):
        if abs(before[v] - after[v]) > DEGREE_MATCH_TOL * scale:
            return SeparabilityVerdict(
                "entangled",
                "degree-mismatch",
                (v, float(before[v]), float(after[v])),
                shape,
            )
    return SeparabilityVerdict("inconclusive", "degrees-match", (), shape)


def ppt_oracle(sigma: states.DensityMatrix, shape: BipartiteShape) -> SeparabilityVerdict:
    """Spectral test of the partial transpose over the second factor."""
    if sigma.n != shape.size:
        raise DimensionMismatch(f"state of size {sigma.n} is not {shape.p}x{shape.q}")
    pt = partial_transpose_matrix(sigma.mat, shape)
    low = spectra.eigenvalues(pt).min
    if low < -spectra.psd_tolerance(pt):
        return SeparabilityVerdict(
            "entangled", "negative-partial-transpose-eigenvalue", (low,), shape
        )
    if shape.size <= PPT_SUFFICIENT_DIM:
        return SeparabilityVerdict("separable", "ppt-sufficient-dimension", (low,), shape)
    return SeparabilityVerdict("inconclusive", "ppt-necessary-only", (low,), shape)


def paired_cross_edges(g: WeightedGraph, shape: BipartiteShape) -> SeparabilityVerdict:
    """Separable when every cross edge {(i,j),(k,l)} (i!=k, j!=l) is matched by
    its partner {(i,l),(k,j)} with equal weight; inconclusive otherwise."""
    if not g.is_real:
        raise ComplexNotSupported("the pairing condition is a real-weights result")
    _check_shape(g, shape)
    states.density_from_graph(g)
    for (x, y), w in g.edges.items():
        i, j = shape.labels(x)
        k, l = shape.labels(y)
        if i == k or j == l:
            continue
        partner = g.weight(shape.flat(i, l), shape.flat(k, j))
        if abs(partner - w) > WEIGHT_MATCH_TOL * max(1.0, abs(w)):
            return SeparabilityVerdict(
                "inconclusive",
                "unpaired-cross-edge",
                ((i, j, k, l), w.real, partner.real),
                shape,
            )
    return SeparabilityVerdict("separable", "cross-pair-match", (), shape)


def build_separable(
    terms: Sequence[tuple[float, Sequence[WeightedGraph]]],
) -> WeightedGraph:
    """Mixture of modified-tensor chains; sigma is the matching convex sum of
    tensor-product states."""
    if not terms:
        raise DimensionMismatch("build_separable needs at least one term")
    dims = tuple(f.n for f in terms[0][1])
    products = []
    for weight, factors in terms:
        if tuple(f.n for f in factors) != dims:
            raise DimensionMismatch(
                f"factor dimensions {tuple(f.n for f in factors)} differ from {dims}"
            )
        chain = factors[0]
        for f in factors[1:]:
            chain = modified_tensor(chain, f)
        products.append((weight, chain))
    return mix(products)

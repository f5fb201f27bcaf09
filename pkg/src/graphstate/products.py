"""Graph operators and products: eta, loop-strip, degree-to-loops, edge-strip,
tensor product, modified tensor product, cartesian product, convex mixtures,
and pure-state decompositions.

The modified tensor product is the graph operation whose generalized Laplacian
is the Kronecker product of the factor Laplacians, so product states factor
through it exactly.
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass

import numpy as np

from . import spectra, states
from .errors import (
    BadWeights,
    ConventionMismatch,
    DegreeAdditivityWarning,
    DimensionMismatch,
    ZeroDegreeSum,
)
from .graphs import (
    Convention,
    WeightedGraph,
    build_graph,
    disjoint_edge_union,
    edge_union,
)

WEIGHT_SUM_TOL = 1e-12


class GraphOperator(enum.Enum):
    ETA = "eta"        # negate every weight
    L = "loop-strip"   # remove loops
    N = "degree-loops" # loops-only graph carrying the vertex degrees
    OMEGA = "edge-strip"  # keep only loops
    NL = "stripped-degree-loops"  # N after L


@dataclass(frozen=True)
class ProductIndex:
    """Row-major bijection between flat vertex indices and factor labels."""

    dims: tuple[int, ...]

    @property
    def size(self) -> int:
        out = 1
        for d in self.dims:
            out *= d
        return out

    def flat(self, labels: tuple[int, ...]) -> int:
        if len(labels) != len(self.dims):
            raise DimensionMismatch(f"labels {labels} do not match dims {self.dims}")
        idx = 0
        for lab, d in zip(labels, self.dims):
            if not 0 <= lab < d:
                raise DimensionMismatch(f"label {lab} out of range for factor of size {d}")
            idx = idx * d + lab
        return idx

    def labels(self, flat: int) -> tuple[int, ...]:
        if not 0 <= flat < self.size:
            raise DimensionMismatch(f"flat index {flat} out of range")
        out = []
        for d in reversed(self.dims):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))


def factor_swap_permutation(p: int, q: int) -> list[int]:
    """Permutation sending row-major (i, j) over (p, q) to (j, i) over (q, p)."""
    return [(flat % q) * p + flat // q for flat in range(p * q)]


def apply_operator(op: GraphOperator, g: WeightedGraph) -> WeightedGraph:
    if op is GraphOperator.ETA:
        return g.scaled(-1.0)
    if op is GraphOperator.L:
        return g.replace(loops={})
    if op is GraphOperator.OMEGA:
        return g.replace(edges={})
    if op is GraphOperator.N:
        loops = {v: d for v, d in enumerate(g.degrees()) if d != 0.0}
        return WeightedGraph(g.convention, g.n, {}, loops)
    if op is GraphOperator.NL:
        return apply_operator(GraphOperator.N, apply_operator(GraphOperator.L, g))
    raise ValueError(f"unknown operator {op!r}")


def tensor(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """Tensor product: adjacency is the Kronecker product of the factors'."""
    if g.convention is not h.convention:
        raise ConventionMismatch("tensor factors must share a convention")
    m = np.kron(g.adjacency(), h.adjacency())
    n = g.n * h.n
    edges = {}
    for u in range(n - 1):
        for v in range(u + 1, n):
            if m[u, v] != 0:
                edges[(u, v)] = m[u, v]
    loops = {v: m[v, v].real for v in range(n) if m[v, v] != 0}
    return build_graph(g.convention, n, edges, loops)


def _scaled_tensor(g: WeightedGraph, h: WeightedGraph, c: float) -> WeightedGraph:
    return tensor(g, h).scaled(c)


def modified_tensor(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """Product with Q(g [x] h) = Q(g) (x) Q(h) in both conventions."""
    if g.convention is not h.convention:
        raise ConventionMismatch("modified tensor factors must share a convention")
    op = lambda tag, x: apply_operator(tag, x)
    L, N, OM, ETA, NL = (
        GraphOperator.L,
        GraphOperator.N,
        GraphOperator.OMEGA,
        GraphOperator.ETA,
        GraphOperator.NL,
    )
    if g.is_real:
        first = tensor(op(L, g), op(L, op(ETA, h)))
    else:
        first = tensor(op(L, g), op(L, h))
    second = tensor(op(L, g), op(N, h))
    third = tensor(op(N, g), op(L, h))
    fourth = tensor(op(OM, g), op(OM, h))
    if not g.is_real:
        correction = _scaled_tensor(op(NL, g), op(ETA, op(NL, h)), 2.0)
        fourth = edge_union(fourth, correction)
    return disjoint_edge_union(first, second, third, fourth)


def cartesian(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """Two-term product: edges within one factor scaled by the other's degrees."""
    if g.convention is not h.convention:
        raise ConventionMismatch("cartesian factors must share a convention")
    return disjoint_edge_union(
        tensor(apply_operator(GraphOperator.L, g), apply_operator(GraphOperator.N, h)),
        tensor(apply_operator(GraphOperator.N, g), apply_operator(GraphOperator.L, h)),
    )


def _check_mixture_weights(weights: list[float]) -> None:
    if not weights:
        raise BadWeights("mixture needs at least one state")
    if any(p <= 0 for p in weights):
        raise BadWeights(f"mixture weights must be positive, got {weights}")
    if abs(sum(weights) - 1.0) > WEIGHT_SUM_TOL:
        raise BadWeights(f"mixture weights sum to {sum(weights)!r}, expected 1")


def mix(components: list[tuple[float, WeightedGraph]]) -> WeightedGraph:
    """Graph whose density matrix is the convex mixture of the components'.

    Real mode rescales each graph by p/d and takes the edge union.  Complex
    mode assembles degree-carrying loops, the union of loop-stripped graphs,
    and a negated correction for the union's modulus degrees; this keeps the
    mixture linear even when edge phases interfere.
    """
    _check_mixture_weights([p for p, _ in components])
    first = components[0][1]
    scaled = []
    for p, g in components:
        if g.n != first.n:
            raise DimensionMismatch("mixture components must share the vertex count")
        if g.convention is not first.convention:
            raise ConventionMismatch("mixture components must share the convention")
        d = g.degree_sum()
        if d <= 0:
            raise ZeroDegreeSum(f"component degree sum {d!r} admits no state")
        scaled.append(g.scaled(p / d))

    if first.is_real:
        result = scaled[0]
        for g in scaled[1:]:
            result = edge_union(result, g)
        return result

    N, L, NL, ETA = (
        GraphOperator.N,
        GraphOperator.L,
        GraphOperator.NL,
        GraphOperator.ETA,
    )
    degree_part = empty = WeightedGraph(first.convention, first.n)
    stripped_part = empty
    with warnings.catch_warnings():
        # phase interference in the stripped union is compensated below
        warnings.simplefilter("ignore", DegreeAdditivityWarning)
        for g in scaled:
            degree_part = edge_union(degree_part, apply_operator(N, g))
            stripped_part = edge_union(stripped_part, apply_operator(L, g))
        correction = apply_operator(ETA, apply_operator(NL, stripped_part))
        return edge_union(edge_union(degree_part, stripped_part), correction)


def pure_decomposition_graphs(g: WeightedGraph) -> list[tuple[float, WeightedGraph]]:
    """Pure-state graphs and probabilities whose mixture reproduces sigma(g)."""
    sigma = states.density_from_graph(g)
    vals, vecs = spectra.eigensystem(sigma.mat)
    kept = [(float(lam), vecs[:, k]) for k, lam in enumerate(vals) if lam > 1e-12]
    total = sum(lam for lam, _ in kept)
    out = []
    for lam, psi in sorted(kept, key=lambda item: -item[0]):
        proj = np.outer(psi, psi.conj())
        out.append((lam / total, states.extract_graph(proj, g.convention)))
    return out

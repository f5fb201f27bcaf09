"""Kraus-operator realizations of graph edits as trace-preserving maps.

Each edit measures the state in a basis adapted to the edited pair (the two
superpositions on the endpoints plus the remaining standard kets for edge
edits; the full standard basis for loop edits), then steers every outcome
onto the edge/loop projectors of the edited graph with probabilities read off
its weights.  Positive-weight targets populate the A family, negative-weight
targets the B family, and the signed completeness relation
sum A_i^H A_i - sum B_j^H B_j = I holds by construction.

Deleting a positive edge from a signed graph first strips the loops and then
augments both endpoints of every remaining negative edge with loops of twice
its modulus, which keeps the edited Laplacian positive semidefinite.  Adding
a negative edge augments its own endpoints the same way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import states
from .errors import (
    BadWeights,
    ComplexNotSupported,
    DimensionMismatch,
    EdgeExists,
    LoopExists,
    NoSuchEdge,
    NoSuchLoop,
)
from .graphs import EdgeKey, WeightedGraph, build_graph, edge_union

COMPLETENESS_TOL = 1e-10
ACTION_TOL = 1e-10


@dataclass(frozen=True)
class KrausSet:
    """Signed Kraus family: apply() evaluates sum A s A^H - sum B s B^H."""

    positive: tuple[np.ndarray, ...]
    negative: tuple[np.ndarray, ...]
    target_dim: int

    def completeness_defect(self) -> float:
        total = np.zeros((self.target_dim, self.target_dim), dtype=complex)
        for a in self.positive:
            total += a.conj().T @ a
        for b in self.negative:
            total -= b.conj().T @ b
        return float(np.abs(total - np.eye(self.target_dim)).max())

    def apply(self, sigma: np.ndarray) -> np.ndarray:
        out = np.zeros((self.target_dim, self.target_dim), dtype=complex)
        for a in self.positive:
            out += a @ sigma @ a.conj().T
        for b in self.negative:
            out -= b @ sigma @ b.conj().T
        return out


@dataclass(frozen=True)
class EdgeEdit:
    kind: str  # "delete-edge" | "add-edge" | "delete-loop" | "add-loop"
    u: int
    v: int | None = None
    w: float | None = None


@dataclass(frozen=True)
class EdgeEditPlan:
    """Edit plus the operand's sign partition of its edge set."""

    edit: EdgeEdit
    e_plus: tuple[EdgeKey, ...]
    e_minus: tuple[EdgeKey, ...]


def edge_edit_plan(g: WeightedGraph, edit: EdgeEdit) -> EdgeEditPlan:
    plus = tuple(k for k, w in g.edges.items() if w.real > 0)
    minus = tuple(k for k, w in g.edges.items() if w.real < 0)
    return EdgeEditPlan(edit, plus, minus)


# -- unitary completions -------------------------------------------------------


def _complete_unitary(x: np.ndarray) -> np.ndarray:
    """Unitary whose first column is x, completed over the standard basis in
    index order (deterministic Gram-Schmidt)."""
    n = x.shape[0]
    cols = [x / np.linalg.norm(x)]
    for k in range(n):
        if len(cols) == n:
            break
        v = np.zeros(n, dtype=complex)
        v[k] = 1.0
        for _ in range(2):  # re-orthogonalize for stability
            for c in cols:
                v = v - c * (c.conj() @ v)
        norm = np.linalg.norm(v)
        if norm > 1e-8:
            cols.append(v / norm)
    if len(cols) != n:
        raise BadWeights("unitary completion failed")  # unreachable for unit x
    return np.column_stack(cols)


def unitary_mapping(src: np.ndarray, dst: np.ndarray) -> np.ndarray:
    """Deterministic unitary U with U src = dst."""
    return _complete_unitary(dst) @ _complete_unitary(src).conj().T


# -- measurement bases ---------------------------------------------------------


def edge_measurement_basis(n: int, u: int, v: int) -> list[np.ndarray]:
    """(|u> + |v>)/sqrt2, (|u> - |v>)/sqrt2, then the remaining standard kets."""
    plus = np.zeros(n, dtype=complex)
    minus = np.zeros(n, dtype=complex)
    plus[u] = plus[v] = 1.0 / math.sqrt(2.0)
    minus[u] = 1.0 / math.sqrt(2.0)
    minus[v] = -1.0 / math.sqrt(2.0)
    basis = [plus, minus]
    for i in range(n):
        if i not in (u, v):
            e = np.zeros(n, dtype=complex)
            e[i] = 1.0
            basis.append(e)
    return basis


def standard_basis(n: int) -> list[np.ndarray]:
    return [np.eye(n, dtype=complex)[:, i] for i in range(n)]


# -- core builder --------------------------------------------------------------


def _target_states(g: WeightedGraph) -> list[tuple[np.ndarray, float]]:
    """Edge/loop projector states of g with their signed decomposition weights."""
    out = []
    for (u, v), w in g.edges.items():
        t = np.zeros(g.n, dtype=complex)
        t[u] = 1.0 / math.sqrt(2.0)
        t[v] = -1.0 / math.sqrt(2.0)
        out.append((t, 2.0 * w.real))
    for v, lw in g.loops.items():
        t = np.zeros(g.n, dtype=complex)
        t[v] = 1.0
        out.append((t, lw))
    return out


def _kraus_for(result: WeightedGraph, basis: list[np.ndarray]) -> KrausSet:
    d_new = result.degree_sum()
    positive = []
    negative = []
    for target, weight in _target_states(result):
        coeff = math.sqrt(abs(weight) / d_new)
        family = positive if weight > 0 else negative
        for b in basis:
            u = unitary_mapping(b, target)
            op = coeff * np.outer(u @ b, b.conj())
            family.append(op)
    return KrausSet(tuple(positive), tuple(negative), result.n)


def _validated(g: WeightedGraph) -> WeightedGraph:
    states.density_from_graph(g)  # raises ZeroDegreeSum / NotPSD when degenerate
    return g


def _require_real(g: WeightedGraph) -> None:
    if not g.is_real:
        raise ComplexNotSupported("Kraus edits are developed for real weights only")


def _all_positive(g: WeightedGraph) -> bool:
    return all(w.real > 0 for w in g.edges.values()) and all(
        lw > 0 for lw in g.loops.values()
    )


def _loop_augmented(g: WeightedGraph, pairs: list[EdgeKey]) -> WeightedGraph:
    """Add loops of twice each edge's modulus on both of its endpoints."""
    extra: dict[int, float] = {}
    for u, v in pairs:
        bump = 2.0 * abs(g.edges[(u, v)].real)
        extra[u] = extra.get(u, 0.0) + bump
        extra[v] = extra.get(v, 0.0) + bump
    return edge_union(g, build_graph(g.convention, g.n, {}, extra))


def _without_edge(g: WeightedGraph, u: int, v: int) -> WeightedGraph:
    edges = dict(g.edges)
    del edges[(u, v)]
    return g.replace(edges=edges)


# -- public edit operations ----------------------------------------------------


def kraus_delete_edge(g: WeightedGraph, u: int, v: int) -> tuple[KrausSet, WeightedGraph]:
    _require_real(g)
    u, v = min(u, v), max(u, v)
    if (u, v) not in g.edges:
        raise NoSuchEdge(f"no edge ({u}, {v})")
    _validated(g)
    w = g.edges[(u, v)].real
    stripped = _without_edge(g, u, v)
    if _all_positive(g) or w < 0:
        result = stripped
    else:
        # positive deletion on a signed graph: strip loops, re-balance E-
        bare = stripped.replace(loops={})
        result = _loop_augmented(bare, [k for k, ww in bare.edges.items() if ww.real < 0])
    result = _validated(result)
    return _kraus_for(result, edge_measurement_basis(g.n, u, v)), result


def kraus_add_edge(g: WeightedGraph, u: int, v: int, w: float) -> tuple[KrausSet, WeightedGraph]:
    _require_real(g)
    u, v = min(u, v), max(u, v)
    if (u, v) in g.edges:
        raise EdgeExists(f"edge ({u}, {v}) already present")
    if w == 0:
        raise BadWeights("edge weight must be nonzero")
    _validated(g)
    added = edge_union(g, build_graph(g.convention, g.n, [(u, v, w)]))
    if w < 0:
        added = _loop_augmented(added, [(u, v)])
    result = _validated(added)
    return _kraus_for(result, edge_measurement_basis(g.n, u, v)), result


def kraus_delete_loop(g: WeightedGraph, v: int) -> tuple[KrausSet, WeightedGraph]:
    _require_real(g)
    if v not in g.loops:
        raise NoSuchLoop(f"no loop on {v}")
    _validated(g)
    loops = dict(g.loops)
    del loops[v]
    result = _validated(g.replace(loops=loops))
    return _kraus_for(result, standard_basis(g.n)), result


def kraus_add_loop(g: WeightedGraph, v: int, w: float) -> tuple[KrausSet, WeightedGraph]:
    _require_real(g)
    if v in g.loops:
        raise LoopExists(f"loop on {v} already present")
    if w <= 0:
        raise BadWeights("loop additions need a positive weight")
    _validated(g)
    loops = dict(g.loops)
    loops[v] = float(w)
    result = _validated(g.replace(loops=loops))
    return _kraus_for(result, standard_basis(g.n)), result


# -- vertex operations ---------------------------------------------------------


def delete_vertex(g: WeightedGraph, v: int) -> WeightedGraph:
    """Strip v's edges and loop through the Kraus pipeline, then drop the
    zeroed row/column (the complementary projector clicks with certainty)."""
    if not 0 <= v < g.n:
        raise DimensionMismatch(f"vertex {v} out of range")
    if g.n == 1:
        raise DimensionMismatch("cannot delete the last vertex")
    current = g
    while True:
        incident = [(k, w) for k, w in current.edges.items() if v in k]
        negatives = [k for k, w in incident if w.real < 0]
        positives = [k for k, w in incident if w.real > 0]
        if negatives:
            _, current = kraus_delete_edge(current, *negatives[0])
        elif positives:
            _, current = kraus_delete_edge(current, *positives[0])
        elif v in current.loops:
            _, current = kraus_delete_loop(current, v)
        else:
            break
    old = lambda i: i if i < v else i + 1
    edges = {}
    for i in range(g.n - 2):
        for j in range(i + 1, g.n - 1):
            w = current.weight(old(i), old(j))
            if w != 0:
                edges[(i, j)] = w
    loops = {
        i: current.loops[old(i)] for i in range(g.n - 1) if old(i) in current.loops
    }
    return WeightedGraph(g.convention, g.n - 1, edges, loops)


def add_vertex(g: WeightedGraph) -> WeightedGraph:
    """Append an isolated vertex; the state gains a zero row and column."""
    return g.replace(n=g.n + 1)

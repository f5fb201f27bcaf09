"""Conversions between graphs and density matrices, projector decompositions,
purity, entropy, partial trace, and observable graphs.

Graph extraction is canonical: the produced graph always has degree sum equal
to the matrix trace, so round-trips are exact.  Under the real convention an
off-diagonal entry s becomes an edge of weight -s; under the complex
convention it becomes an edge of weight +s.  Loops are then fixed so that
every vertex degree matches the diagonal entry.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from . import spectra
from .errors import (
    ConventionMismatch,
    DimensionMismatch,
    NotAState,
    NotPSD,
    ZeroDegreeSum,
)
from .graphs import Convention, WeightedGraph, build_graph

HERMITICITY_TOL = 1e-12
TRACE_TOL = 1e-12
PURITY_TOL = 1e-10
ENTROPY_EIGENVALUE_CUTOFF = 1e-12


def ensure_hermitian(a: np.ndarray, tol: float = HERMITICITY_TOL) -> np.ndarray:
    """Validate conjugate symmetry and return an exactly hermitian copy."""
    a = np.asarray(a, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"expected a square matrix, got shape {a.shape}")
    defect = float(np.abs(a - a.conj().T).max())
    if defect > tol * max(1.0, spectra.fro_norm(a)):
        raise NotAState(f"matrix is not hermitian (defect {defect:.3e})")
    h = (a + a.conj().T) / 2.0
    h.flags.writeable = False
    return h


@dataclass(frozen=True)
class DensityMatrix:
    """Hermitian, unit-trace, positive-semidefinite matrix."""

    mat: np.ndarray

    @classmethod
    def from_matrix(cls, a: np.ndarray) -> "DensityMatrix":
        h = ensure_hermitian(a)
        tr = float(np.trace(h).real)
        if abs(tr - 1.0) > TRACE_TOL:
            raise NotAState(f"trace is {tr!r}, expected 1")
        if not spectra.is_psd(h):
            raise NotAState("matrix is not positive semidefinite")
        return cls(h)

    @property
    def n(self) -> int:
        return self.mat.shape[0]

    def purity(self) -> float:
        return float(np.trace(self.mat @ self.mat).real)


@dataclass(frozen=True)
class ProjectorTerm:
    """One rank-1 projector in a graph's decomposition.

    kind "edge": coefficient * P[(|i> - e^{i phase}|j>)/sqrt(2)]
    kind "loop": coefficient * P[|i>]
    Coefficients are signed; negative loop corrections appear in complex
    decompositions.
    """

    kind: str
    i: int
    j: int | None
    phase: float
    coefficient: float

    def matrix(self, n: int) -> np.ndarray:
        psi = np.zeros(n, dtype=complex)
        if self.kind == "loop":
            psi[self.i] = 1.0
        else:
            psi[self.i] = 1.0 / math.sqrt(2.0)
            psi[self.j] = -cmath.exp(1j * self.phase) / math.sqrt(2.0)
        return np.outer(psi, psi.conj())


# -- graph <-> matrix -------------------------------------------------------


def extract_graph(a: np.ndarray, convention: Convention) -> WeightedGraph:
    """Graph of a Hermitian matrix (no trace or PSD requirement)."""
    h = ensure_hermitian(a)
    n = h.shape[0]
    real = convention is Convention.REAL_SIGNED
    if real and float(np.abs(h.imag).max()) != 0.0:
        raise ConventionMismatch("real-signed extraction needs a real matrix")
    edges = {}
    for u in range(n - 1):
        for v in range(u + 1, n):
            s = h[u, v]
            if s != 0:
                edges[(u, v)] = -s if real else s
    loops = {}
    for v in range(n):
        row = [h[v, u] for u in range(n) if u != v]
        if real:
            lw = h[v, v].real + math.fsum(s.real for s in row)
        else:
            lw = h[v, v].real - math.fsum(abs(s) for s in row)
        if lw != 0.0:
            loops[v] = lw
    return build_graph(convention, n, edges, loops)


def graph_from_density(sigma: DensityMatrix | np.ndarray, convention: Convention) -> WeightedGraph:
    """Graph whose density matrix is sigma; round-trips entrywise."""
    if not isinstance(sigma, DensityMatrix):
        sigma = DensityMatrix.from_matrix(sigma)
    return extract_graph(sigma.mat, convention)


def density_from_graph(g: WeightedGraph) -> DensityMatrix:
    """sigma(g) = Q(g) / degree-sum; requires a PSD Laplacian."""
    q = g.laplacian()
    d = g.degree_sum()
    if abs(d) <= 1e-12 * max(1.0, spectra.fro_norm(q)):
        raise ZeroDegreeSum(f"degree sum {d!r} leaves sigma undefined")
    low = spectra.eigenvalues(q).min
    if low < -spectra.psd_tolerance(q):
        raise NotPSD("graph Laplacian is not positive semidefinite", low)
    sigma = q / d
    sigma.flags.writeable = False
    return DensityMatrix(sigma)


# -- purity, decomposition, entropy -----------------------------------------


def is_pure(g: WeightedGraph) -> bool:
    """Purity by the degree/weight identity, equivalent to Tr(sigma^2) = 1."""
    density_from_graph(g)
    d = g.degree_sum()
    sq = math.fsum(x * x for x in g.degrees())
    if g.is_real:
        sq += 2.0 * math.fsum(w.real * w.real for w in g.edges.values())
    else:
        sq += 2.0 * math.fsum(abs(w) ** 2 for w in g.edges.values())
    return abs(sq - d * d) <= PURITY_TOL * d * d


def _projector_terms(g: WeightedGraph, normalizer: float) -> list[ProjectorTerm]:
    terms = []
    for (u, v), w in g.edges.items():
        if g.is_real:
            coeff = 2.0 * w.real / normalizer
            phase = 0.0
        else:
            coeff = 2.0 * abs(w) / normalizer
            phase = math.pi - cmath.phase(w)
        terms.append(ProjectorTerm("edge", u, v, phase, coeff))
    for v, lw in g.loops.items():
        terms.append(ProjectorTerm("loop", v, None, 0.0, lw / normalizer))
    return terms


def decompose(g: WeightedGraph) -> list[ProjectorTerm]:
    """Edge/loop projector terms whose weighted sum reproduces sigma(g)."""
    density_from_graph(g)
    return _projector_terms(g, g.degree_sum())


def reconstruct(terms: list[ProjectorTerm], n: int) -> np.ndarray:
    total = np.zeros((n, n), dtype=complex)
    for term in terms:
        total += term.coefficient * term.matrix(n)
    return total


def entropy(sigma: DensityMatrix) -> float:
    """Von Neumann entropy in bits, with 0*log(0) taken as 0."""
    total = 0.0
    for lam in spectra.eigenvalues(sigma.mat).eigenvalues:
        if lam > ENTROPY_EIGENVALUE_CUTOFF:
            total -= lam * math.log2(lam)
    return total


# -- partial trace -----------------------------------------------------------


def partial_trace_matrix(a: np.ndarray, dims: tuple[int, int], keep: str) -> np.ndarray:
    p, q = dims
    if a.shape[0] != p * q:
        raise DimensionMismatch(f"matrix of size {a.shape[0]} is not {p}x{q}")
    t = np.asarray(a, dtype=complex).reshape(p, q, p, q)
    if keep == "first":
        return np.einsum("ikjk->ij", t)
    if keep == "second":
        return np.einsum("kikj->ij", t)
    raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")


def partial_trace(g: WeightedGraph, dims: tuple[int, int], keep: str = "first") -> WeightedGraph:
    """Graph of the reduced state.

    Real-signed graphs reduce by the graph-level rule (weights of matching
    cross edges add; loops absorb the leftover degrees).  Complex graphs route
    through the matrix form and re-extract.
    """
    p, q = dims
    if g.n != p * q:
        raise DimensionMismatch(f"graph on {g.n} vertices is not {p}x{q}")
    if keep not in ("first", "second"):
        raise ValueError(f"keep must be 'first' or 'second', got {keep!r}")
    if not g.is_real:
        reduced = partial_trace_matrix(density_from_graph(g).mat, dims, keep)
        return graph_from_density(DensityMatrix.from_matrix(reduced), g.convention)

    if keep == "first":
        size, other = p, q
        flat = lambda i, k: i * q + k
    else:
        size, other = q, p
        flat = lambda i, k: k * q + i
    edges = {}
    for i in range(size - 1):
        for j in range(i + 1, size):
            w = math.fsum(g.weight(flat(i, k), flat(j, k)).real for k in range(other))
            if w != 0.0:
                edges[(i, j)] = w
    degrees = g.degrees()
    loops = {}
    for i in range(size):
        total = math.fsum(degrees[flat(i, k)] for k in range(other))
        spill = math.fsum(
            edges.get((min(i, j), max(i, j)), 0.0) for j in range(size) if j != i
        )
        lw = total - spill
        if lw != 0.0:
            loops[i] = lw
    return build_graph(g.convention, size, edges, loops)


# -- observables --------------------------------------------------------------


def observable_graph(a: np.ndarray) -> WeightedGraph:
    """Graph of a Hermitian operator; PSD and unit trace are not required."""
    return extract_graph(a, Convention.COMPLEX_HERMITIAN)


def observable_from_graph(g: WeightedGraph) -> np.ndarray:
    """Operator rebuilt from the graph's projector sum (no normalization)."""
    return reconstruct(_projector_terms(g, 1.0), g.n)

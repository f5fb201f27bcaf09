"""Dense Hermitian eigenvalue machinery and the package-wide PSD oracle.

The solver is a cyclic complex Jacobi iteration: sweep all index pairs,
annihilating each off-diagonal entry with a unitary plane rotation, until
every off-diagonal magnitude drops below 1e-14 * ||A||_F, capped at 100
sweeps.  Sizes here stay small (n <= 64), where Jacobi is simple and
Hermitian-exact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergence

OFF_DIAGONAL_FACTOR = 1e-14
MAX_SWEEPS = 100
EIG_TOL_FACTOR = 1e-10
PSD_TOL_FACTOR = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Real eigenvalues in nondecreasing order."""

    eigenvalues: tuple[float, ...]
    n: int

    @property
    def min(self) -> float:
        return self.eigenvalues[0]

    @property
    def max(self) -> float:
        return self.eigenvalues[-1]


def fro_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(a, dtype=complex)))


def eig_tolerance(a: np.ndarray) -> float:
    return EIG_TOL_FACTOR * max(1.0, fro_norm(a))


def psd_tolerance(a: np.ndarray) -> float:
    return PSD_TOL_FACTOR * max(1.0, fro_norm(a))


def _rotate(a: np.ndarray, v: np.ndarray | None, p: int, q: int) -> None:
    apq = a[p, q]
    r = abs(apq)
    if r == 0.0:
        return
    phase = apq / r
    # smaller root of t^2 - 2*mu*t - 1 = 0, the zeroing condition for a[p, q]
    mu = (a[p, p].real - a[q, q].real) / (2.0 * r)
    if mu >= 0.0:
        t = -1.0 / (mu + math.sqrt(mu * mu + 1.0))
    else:
        t = 1.0 / (-mu + math.sqrt(mu * mu + 1.0))
    c = 1.0 / math.sqrt(t * t + 1.0)
    s = t * c
    # A <- J^H A J with J[p,p]=c, J[p,q]=s*phase, J[q,p]=-s*conj(phase), J[q,q]=c
    col_p = a[:, p].copy()
    col_q = a[:, q].copy()
    a[:, p] = c * col_p - s * phase.conjugate() * col_q
    a[:, q] = s * phase * col_p + c * col_q
    row_p = a[p, :].copy()
    row_q = a[q, :].copy()
    a[p, :] = c * row_p - s * phase * row_q
    a[q, :] = s * phase.conjugate() * row_p + c * row_q
    a[p, q] = 0.0
    a[q, p] = 0.0
    a[p, p] = a[p, p].real
    a[q, q] = a[q, q].real
    if v is not None:
        vcol_p = v[:, p].copy()
        vcol_q = v[:, q].copy()
        v[:, p] = c * vcol_p - s * phase.conjugate() * vcol_q
        v[:, q] = s * phase * vcol_p + c * vcol_q


def _max_off_diagonal(a: np.ndarray) -> float:
    n = a.shape[0]
    if n < 2:
        return 0.0
    off = np.abs(a - np.diag(np.diag(a)))
    return float(off.max())


def _jacobi(a_in: np.ndarray, want_vectors: bool) -> tuple[np.ndarray, np.ndarray | None]:
    a = np.array(a_in, dtype=complex)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    n = a.shape[0]
    v = np.eye(n, dtype=complex) if want_vectors else None
    threshold = OFF_DIAGONAL_FACTOR * fro_norm(a)
    if n == 1 or _max_off_diagonal(a) <= threshold:
        return a, v
    for _ in range(MAX_SWEEPS):
        for p in range(n - 1):
            for q in range(p + 1, n):
                if abs(a[p, q]) > threshold:
                    _rotate(a, v, p, q)
        if _max_off_diagonal(a) <= threshold:
            return a, v
    raise NoConvergence(
        f"Jacobi did not reach off-diagonal target {threshold:.3e} in {MAX_SWEEPS} sweeps"
    )


def eigenvalues(a: np.ndarray) -> Spectrum:
    """Eigenvalues of a Hermitian matrix, ascending."""
    diag, _ = _jacobi(a, want_vectors=False)
    vals = np.sort(np.diag(diag).real)
    return Spectrum(tuple(float(x) for x in vals), len(vals))


def eigensystem(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """(values ascending, unitary with matching eigenvector columns)."""
    diag, v = _jacobi(a, want_vectors=True)
    vals = np.diag(diag).real
    order = np.argsort(vals, kind="stable")
    return vals[order], v[:, order]


def is_psd(a: np.ndarray) -> bool:
    """True iff the minimum eigenvalue is >= -1e-9 * max(1, ||A||_F)."""
    return eigenvalues(a).min >= -psd_tolerance(a)

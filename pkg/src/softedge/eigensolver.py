"""Eigenvalues of symmetric tridiagonal matrices.

Two routes are provided and cross-checked against each other:

* ``eigenvalues_full`` computes the whole spectrum with the Pal-Walker-Kahan
  variant of the implicit-shift QL/QR algorithm (LAPACK ``dsterf``), O(n^2).
* ``top_two`` extracts only the two largest eigenvalues by bisection on the
  Sturm sign-change count, which is what large gap-only Monte Carlo runs need.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np
from scipy.linalg.lapack import dsterf

from .sampler import TridiagonalMatrix

__all__ = ["Spectrum", "eigenvalues_full", "sturm_count", "top_two", "top_two_batch"]

_TINY = 1e-300


@dataclass
class Spectrum:
    """Eigenvalues of one matrix, sorted descending."""

    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)

    @property
    def n(self) -> int:
        return len(self.values)

    def lambda_max(self) -> float:
        return float(self.values[0])

    def gap(self) -> float:
        """First gap: largest minus second-largest eigenvalue."""
        if self.n < 2:
            raise ValueError("gap requires at least two eigenvalues")
        return float(self.values[0] - self.values[1])


def eigenvalues_full(m: TridiagonalMatrix) -> Spectrum:
    """All eigenvalues of ``m``, sorted descending.

    Uses LAPACK's ``dsterf`` (Pal-Walker-Kahan implicit QL/QR), accurate to
    machine precision times the matrix norm.
    """
    if not (np.all(np.isfinite(m.diag)) and np.all(np.isfinite(m.offdiag))):
        raise ValueError("matrix entries must be finite")
    if m.n == 1:
        return Spectrum(m.diag.copy())
    vals, info = dsterf(m.diag, m.offdiag)
    if info != 0:
        raise ArithmeticError(f"tridiagonal QL/QR iteration failed (info={info})")
    # dsterf returns ascending order; stable flip keeps exact ties in input order.
    return Spectrum(vals[::-1].copy())


def sturm_count(m: TridiagonalMatrix, x: float) -> int:
    """Number of eigenvalues of ``m`` strictly below ``x``.

    Sturm sequence count via the shifted LDL^T recurrence; zero pivots are
    perturbed by a tiny constant, the standard safeguard.
    """
    if not np.isfinite(x):
        raise ValueError("x must be finite")
    d = m.diag
    e = m.offdiag
    count = 0
    p = d[0] - x
    if p < 0.0:
        count += 1
    for i in range(1, m.n):
        if p == 0.0:
            p = _TINY
        p = d[i] - x - e[i - 1] * e[i - 1] / p
        if p < 0.0:
            count += 1
    return count


@numba.njit(cache=True)
def _top_two_kernel(diag, off2, tol_rel, out):  # pragma: no cover - compiled
    nbatch, n = diag.shape
    for b in range(nbatch):
        lo = diag[b, 0]
        hi = diag[b, 0]
        for i in range(n):
            r = 0.0
            if i > 0:
                r += np.sqrt(off2[b, i - 1])
            if i < n - 1:
                r += np.sqrt(off2[b, i])
            if diag[b, i] - r < lo:
                lo = diag[b, i] - r
            if diag[b, i] + r > hi:
                hi = diag[b, i] + r
        scale = max(abs(lo), abs(hi), 1.0)
        for k in range(2):
            want = n - k  # count(x) >= n-k  <=>  x > lambda_{k+1}
            a = lo
            c = hi
            for _ in range(200):
                x = 0.5 * (a + c)
                cnt = 0
                p = diag[b, 0] - x
                if p < 0.0:
                    cnt += 1
                for i in range(1, n):
                    if p == 0.0:
                        p = _TINY
                    p = diag[b, i] - x - off2[b, i - 1] / p
                    if p < 0.0:
                        cnt += 1
                if cnt >= want:
                    c = x
                else:
                    a = x
                if c - a <= tol_rel * scale:
                    break
            out[b, k] = 0.5 * (a + c)
            hi = c  # lambda_2 <= lambda_1: shrink the next bracket


def top_two_batch(diags: np.ndarray, offdiags: np.ndarray, tol_rel: float = 1e-13) -> np.ndarray:
    """(lambda_1, lambda_2) for a batch of tridiagonal matrices, shape (B, 2)."""
    diags = np.ascontiguousarray(diags, dtype=float)
    off2 = np.ascontiguousarray(offdiags, dtype=float) ** 2
    if diags.shape[1] < 2:
        raise ValueError("top_two requires matrices of size >= 2")
    out = np.empty((diags.shape[0], 2))
    _top_two_kernel(diags, off2, tol_rel, out)
    return out


def top_two(m: TridiagonalMatrix, tol_rel: float = 1e-13) -> tuple[float, float]:
    """The two largest eigenvalues of ``m`` by Sturm bisection."""
    if m.n < 2:
        raise ValueError("top_two requires n >= 2")
    out = top_two_batch(m.diag[None, :], m.offdiag[None, :], tol_rel)
    return float(out[0, 0]), float(out[0, 1])

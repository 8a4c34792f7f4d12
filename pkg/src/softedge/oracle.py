"""Deterministic quadrature of the joint eigenvalue law for N = 2 and N = 3.

Independent cross-check for the Monte Carlo pipeline: gap, DOS and
lambda_max densities are computed by direct Gauss-Legendre integration of the
normalized joint density, with no randomness anywhere.
"""

from __future__ import annotations

import math

import numpy as np

from .estimators import Curve
from .sampler import log_normalization

__all__ = ["oracle_pdf", "small_n_oracle", "oracle_cdf"]

_NODES = 240  # Gauss-Legendre order per integration axis


def _gl(nodes: int = _NODES):
    x, w = np.polynomial.legendre.leggauss(nodes)
    return x, w


def _halfwidth(beta: float, n: int) -> float:
    # Eigenvalues live in [-sqrt(2n), sqrt(2n)]; pad generously for the
    # Gaussian tails so truncation error is far below 1e-6.
    return math.sqrt(2.0 * n) + 10.0 / math.sqrt(beta)


def _pdf_n2(beta: float, observable: str):
    l2 = math.exp(-log_normalization(2, beta))
    xg, wg = _gl()

    def gap_pdf(r):
        # ordered pair density is 2 * P(b + r, b); integrate over b
        r = np.asarray(r, dtype=float)[..., None]
        L = _halfwidth(beta, 2)
        b = xg * L
        w = wg * L
        v = np.exp(beta * np.log(np.maximum(r, 1e-300)) - 0.5 * beta * ((b + r) ** 2 + b**2))
        return 2.0 * l2 * np.sum(w * v, axis=-1)

    def lmax_pdf(y):
        y = np.asarray(y, dtype=float)[..., None]
        L = _halfwidth(beta, 2)
        # map [-1, 1] -> (-L + y, y)
        b = y - (xg + 1.0) * 0.5 * (y + L)
        w = wg * 0.5 * (y + L)
        v = np.abs(y - b) ** beta * np.exp(-0.5 * beta * (y**2 + b**2))
        return 2.0 * l2 * np.sum(w * v, axis=-1)

    if observable in ("gap", "dos"):
        return gap_pdf  # N=2 has a single distance, so DOS(r) = gap pdf / (N-1)
    if observable == "lambda_max":
        return lmax_pdf
    raise ValueError(f"unknown observable {observable!r}")


def _pdf_n3(beta: float, observable: str):
    l3 = math.exp(-log_normalization(3, beta))
    xg, wg = _gl()
    L = _halfwidth(beta, 3)

    def joint(a, b, c):
        rep = (np.abs(a - b) * np.abs(a - c) * np.abs(b - c)) ** beta
        return rep * np.exp(-0.5 * beta * (a**2 + b**2 + c**2))

    b_out = xg * L  # outer axis, fixed nodes on [-L, L]
    wb_out = wg * L

    def gap_pdf(r):
        # ordered top pair (b + r, b), third eigenvalue below b
        out = np.empty(np.shape(r))
        for k, rv in np.ndenumerate(np.asarray(r, dtype=float)):
            c = b_out[:, None] - (xg[None, :] + 1.0) * 0.5 * (b_out[:, None] + L)
            wc = wb_out[:, None] * wg[None, :] * 0.5 * (b_out[:, None] + L)
            v = joint(b_out[:, None] + rv, b_out[:, None], c)
            out[k] = 6.0 * l3 * float(np.sum(wc * v))
        return out

    def second_distance_pdf(r):
        # distance from lambda_max to the smallest eigenvalue: top (c + r),
        # bottom c, middle in between
        out = np.empty(np.shape(r))
        for k, rv in np.ndenumerate(np.asarray(r, dtype=float)):
            m = b_out[:, None] + (xg[None, :] + 1.0) * 0.5 * rv
            wm = wb_out[:, None] * wg[None, :] * 0.5 * rv
            v = joint(b_out[:, None] + rv, m, b_out[:, None])
            out[k] = 6.0 * l3 * float(np.sum(wm * v))
        return out

    def dos_pdf(r):
        return 0.5 * (gap_pdf(r) + second_distance_pdf(r))

    def lmax_pdf(y):
        out = np.empty(np.shape(y))
        for k, yv in np.ndenumerate(np.asarray(y, dtype=float)):
            b = yv - (xg + 1.0) * 0.5 * (yv + L)
            wb = wg * 0.5 * (yv + L)
            v = joint(yv, b[:, None], b[None, :])
            out[k] = 3.0 * l3 * float(np.sum(wb[:, None] * wb[None, :] * v))
        return out

    if observable == "gap":
        return gap_pdf
    if observable == "dos":
        return dos_pdf
    if observable == "lambda_max":
        return lmax_pdf
    raise ValueError(f"unknown observable {observable!r}")


def oracle_pdf(beta: float, n: int, observable: str):
    """Vectorized density callable for the requested small-N observable."""
    if n == 2:
        return _pdf_n2(beta, observable)
    if n == 3:
        return _pdf_n3(beta, observable)
    raise ValueError("the quadrature oracle supports N = 2 and N = 3 only")


def small_n_oracle(beta: float, n: int, observable: str,
                   grid: np.ndarray = None) -> Curve:
    """Density curve for gap / dos / lambda_max at N in {2, 3} by quadrature."""
    pdf = oracle_pdf(beta, n, observable)
    if grid is None:
        if observable == "lambda_max":
            grid = np.linspace(-_halfwidth(beta, n), _halfwidth(beta, n), 1601)
        else:
            grid = np.linspace(0.0, 2.0 * math.sqrt(2.0 * n) + 8.0 / math.sqrt(beta), 1601)
    grid = np.asarray(grid, dtype=float)
    return Curve(grid, pdf(grid))


def oracle_cdf(curve: Curve):
    """CDF callable built from a density curve by trapezoidal accumulation."""
    x, y = curve.x, curve.y
    cum = np.concatenate([[0.0], np.cumsum(0.5 * (y[1:] + y[:-1]) * np.diff(x))])

    def cdf(v):
        return np.interp(v, x, cum, left=0.0, right=cum[-1])

    return cdf

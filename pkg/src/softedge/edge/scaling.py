"""Exact beta = 2 scaling functions for the edge DOS and the first gap.

Everything is built from one linear Schrodinger problem on the edge-table
grid,

    psi''(x) = [x + 2 q(x)^2 - s] psi(x),
    psi(x) ~ 2^{-1/6} sqrt(pi) Ai(x - s)   as x -> +inf,

integrated downward from x_max (the direction in which the decaying solution
dominates, so the march is stable) with a fixed-step Numerov scheme on the
table grid.  The spectral parameter is s = +rt for the DOS scaling function
and s = -rt for the gap scaling function, which share one code path:

    (2^{1/3}/pi) int [ psi(s,x)^2 - (int_x^inf q psi)^2 ] F2(x) dx.

Conditional versions (DOS and gap at a pinned scaled lambda_max position)
evaluate closed expressions in q, q', R, F2, psi and the companion function
g(s,x) = -(s/q(x)) int_x^inf q psi du on the same grid.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_simpson, simpson
from scipy.interpolate import CubicSpline

from .airy import airy_ai, airy_ai_prime
from .painleve import EdgeTable, _derivative

__all__ = [
    "FTildeSolution",
    "solve_f_tilde",
    "g_tilde",
    "rho_edge_exact",
    "p_typ_exact",
    "rho_edge_conditional",
    "p_typ_conditional",
    "p_typ_norm",
]

_AMP = 2.0 ** (-1.0 / 6.0) * math.sqrt(math.pi)  # boundary amplitude
_PREF = 2.0 ** (1.0 / 3.0) / math.pi             # prefactor of the integral formulas


@dataclass
class FTildeSolution:
    """Solution of the edge Schrodinger problem at one spectral parameter."""

    r_tilde: float
    values: np.ndarray
    derivative: np.ndarray


def _spectral_range_check(s: float, table: EdgeTable) -> None:
    if abs(s) > table.x_max - 4.0:
        raise ValueError(
            f"spectral parameter {s} out of range: need |s| <= x_max - 4 "
            f"= {table.x_max - 4.0} for the boundary asymptote to hold")


def _numerov_down(w: np.ndarray, h: float, y_last: float, y_second_last: float) -> np.ndarray:
    """March a_{i+1} y_{i+1} + a_{i-1} y_{i-1} = b_i y_i from the right end."""
    n = len(w)
    h12 = h * h / 12.0
    a = (1.0 - h12 * w).tolist()
    b = (2.0 + 10.0 * h12 * w).tolist()
    y = [0.0] * n
    y[n - 1] = y_last
    y[n - 2] = y_second_last
    for i in range(n - 2, 0, -1):
        y[i - 1] = (b[i] * y[i] - a[i + 1] * y[i + 1]) / a[i - 1]
    return np.asarray(y)


def _solve_schrodinger(x: np.ndarray, q_sq: np.ndarray, s: float, h: float) -> np.ndarray:
    """Numerov solution of psi'' = (x + 2 q^2 - s) psi with Airy right data."""
    w = x + 2.0 * q_sq - s
    y_last = _AMP * float(airy_ai(x[-1] - s))
    y_prev = _AMP * float(airy_ai(x[-2] - s))
    return _numerov_down(w, h, y_last, y_prev)


def solve_f_tilde(r_tilde: float, table: EdgeTable) -> FTildeSolution:
    """Solve the edge Schrodinger problem at spectral parameter ``r_tilde``."""
    if not math.isfinite(r_tilde):
        raise ValueError("r_tilde must be finite")
    _spectral_range_check(r_tilde, table)
    vals = _solve_schrodinger(table.x, table.q**2, r_tilde, table.step)
    return FTildeSolution(r_tilde=float(r_tilde), values=vals,
                          derivative=_derivative(vals, table.step))


def _tail_qf(table: EdgeTable, s: float) -> float:
    """int_{x_max}^inf q * psi du, via the Airy decay rates of both factors."""
    xm = table.x_max
    rate = math.sqrt(xm) + math.sqrt(max(xm - s, 1.0))
    return float(table.q[-1]) * _AMP * float(airy_ai(xm - s)) / rate


def _cumulative_qf(table: EdgeTable, f: FTildeSolution) -> np.ndarray:
    """K(x) = int_x^inf q psi du on the grid, with the right-tail correction."""
    cum = cumulative_simpson(table.q * f.values, dx=table.step, initial=0.0)
    return (cum[-1] - cum) + _tail_qf(table, f.r_tilde)


def g_tilde(r_tilde: float, table: EdgeTable, f: FTildeSolution) -> np.ndarray:
    """Companion function g(s, x) = -(s / q(x)) int_x^inf q psi du."""
    return -r_tilde * _cumulative_qf(table, f) / table.q


def _edge_integral(s: float, table: EdgeTable) -> float:
    """(2^{1/3}/pi) int [psi^2 - K^2] F2 dx with the psi^2 right tail restored."""
    f = solve_f_tilde(s, table)
    k = _cumulative_qf(table, f)
    integrand = (f.values**2 - k**2) * table.F2
    val = simpson(integrand, dx=table.step)
    # beyond x_max: F2 = 1 - O(1e-8), K^2 negligible, psi = AMP * Ai(x - s)
    y = table.x_max - s
    ai, aip = float(airy_ai(y)), float(airy_ai_prime(y))
    val += _AMP**2 * (aip**2 - y * ai**2)
    return _PREF * val


def rho_edge_exact(r_tilde, table: EdgeTable):
    """Edge scaling function of the DOS at beta = 2.

    Vanishes like r^2/2 at small argument and grows like sqrt(r)/pi at large
    argument.  Accepts a scalar or an array of nonnegative arguments.
    """
    if np.ndim(r_tilde) > 0:
        return np.array([rho_edge_exact(float(r), table) for r in np.asarray(r_tilde)])
    if r_tilde < 0:
        raise ValueError("r_tilde must be nonnegative")
    if r_tilde == 0.0:
        return 0.0
    return max(_edge_integral(float(r_tilde), table), 0.0)


def p_typ_exact(r_tilde, table: EdgeTable):
    """Scaling function of the first-gap PDF at beta = 2.

    Same integral as ``rho_edge_exact`` with the spectral parameter negated;
    integrates to 1 over [0, inf) and vanishes like r^2/2 at small argument.
    """
    if np.ndim(r_tilde) > 0:
        return np.array([p_typ_exact(float(r), table) for r in np.asarray(r_tilde)])
    if r_tilde < 0:
        raise ValueError("r_tilde must be nonnegative")
    if r_tilde == 0.0:
        return 0.0
    return max(_edge_integral(-float(r_tilde), table), 0.0)


def p_typ_norm(table: EdgeTable, r_max: float = 6.0, points: int = 301) -> float:
    """int_0^{r_max} of the gap scaling function (normalization check)."""
    grid = np.linspace(0.0, r_max, points)
    return float(simpson(p_typ_exact(grid, table), x=grid))


# -- conditional versions -------------------------------------------------------


def _spline(table: EdgeTable, arr: np.ndarray) -> CubicSpline:
    return CubicSpline(table.x, arr)


def _conditional_bracket(rt: float, sign: float, q, qp, big_r, fv, gv):
    """Shared bracket of the two fixed-position formulas.

    ``sign`` is +1 for the DOS version (spectral parameter +rt) and -1 for the
    gap version (spectral parameter -rt, all inputs already shifted).
    """
    return big_r * ((sign * rt + big_r / q**2) * fv**2
                    - 2.0 * (qp / q) * fv * gv
                    + (1.0 + sign * q**2 / rt) * gv**2) \
        - (q**2 / rt**2) * gv**2


def rho_edge_conditional(r_tilde: float, x, table: EdgeTable):
    """Edge DOS scaling function conditioned on the scaled lambda_max position x.

    The closed expression in (q, q', R, F2, psi, g) is a joint density in
    (r, x) -- integrating it over x returns ``rho_edge_exact`` -- so the
    conditional divides it by the lambda_max density F2'(x) = R(x) F2(x); the
    F2 factors cancel, which also keeps the far-left tail well conditioned.
    """
    if r_tilde < 0:
        raise ValueError("r_tilde must be nonnegative")
    xa = np.asarray(x, dtype=float)
    if np.any(xa < table.x_min) or np.any(xa > table.x_max):
        raise ValueError("x outside the table grid")
    if r_tilde == 0.0:
        out = np.zeros_like(xa)
        return out if out.ndim else 0.0
    f = solve_f_tilde(r_tilde, table)
    gv = g_tilde(r_tilde, table, f)
    big_r = _spline(table, table.R)(xa)
    vals = _PREF * _conditional_bracket(
        r_tilde, +1.0,
        _spline(table, table.q)(xa), _spline(table, table.q_prime)(xa),
        big_r,
        _spline(table, f.values)(xa), _spline(table, gv)(xa)) / big_r
    vals = np.maximum(vals, 0.0)
    return vals if vals.ndim else float(vals)


def p_typ_conditional(r_tilde: float, x, table: EdgeTable):
    """Gap scaling function conditioned on the scaled lambda_max position x.

    Table quantities enter at the shifted point x - r_tilde (the position of
    the second eigenvalue) with spectral parameter -r_tilde; the joint
    expression is normalized by the lambda_max density F2'(x) = R(x) F2(x).
    """
    if r_tilde < 0:
        raise ValueError("r_tilde must be nonnegative")
    xa = np.asarray(x, dtype=float)
    if np.any(xa - r_tilde < table.x_min) or np.any(xa > table.x_max):
        raise ValueError("x - r_tilde falls outside the table grid")
    if r_tilde == 0.0:
        out = np.zeros_like(xa)
        return out if out.ndim else 0.0
    xs = xa - r_tilde
    f = solve_f_tilde(-r_tilde, table)
    gv = g_tilde(-r_tilde, table, f)
    bracket = _conditional_bracket(
        r_tilde, -1.0,
        _spline(table, table.q)(xs), _spline(table, table.q_prime)(xs),
        _spline(table, table.R)(xs),
        _spline(table, f.values)(xs), _spline(table, gv)(xs))
    weight = _spline(table, table.F2)(xs) / (_spline(table, table.R)(xa)
                                             * _spline(table, table.F2)(xa))
    vals = np.maximum(_PREF * bracket * weight, 0.0)
    return vals if vals.ndim else float(vals)

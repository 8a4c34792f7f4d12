"""Hastings-McLeod solution of Painleve II and the Tracy-Widom weight.

The table solves  q'' = 2 q^3 + x q  as a two-point boundary-value problem on
[x_min, x_max] with

    q(x_max) = Ai(x_max)                      (decaying right asymptote)
    q(x_min) = sqrt(-x_min/2) (1 + 1/(8 x_min^3))   (two-term left asymptote)

using a Numerov discretization (4th order) and a damped Newton iteration on
the resulting tridiagonal nonlinear system.  Shooting is useless here: the
wanted solution is exponentially unstable in both directions, while the BVP
formulation is well conditioned.

From q the table accumulates, right-to-left with closed-form Airy tail
corrections beyond x_max,

    R(x) = int_x^inf q^2,          I(x) = int_x^inf q,
    F2(x) = exp(-int_x^inf (u - x) q^2 du),

where F2 is the Tracy-Widom cumulative distribution of the scaled largest
eigenvalue at beta = 2, and F2' = R * F2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.integrate import cumulative_simpson
from scipy.linalg import solve_banded

from .airy import airy_ai, airy_ai_prime, airy_integral

__all__ = ["EdgeTable", "PainleveConvergenceError", "build_edge_table", "tw2_mean"]


class PainleveConvergenceError(RuntimeError):
    """Newton iteration for the Painleve II boundary-value problem failed."""

    def __init__(self, residual_norm: float, iterations: int):
        self.residual_norm = residual_norm
        self.iterations = iterations
        super().__init__(
            f"Newton failed to converge after {iterations} iterations "
            f"(residual sup-norm {residual_norm:.3e})")


@dataclass
class EdgeTable:
    """Shared grid carrying q, q', R, I and F2 for the exact beta = 2 engine."""

    x: np.ndarray
    q: np.ndarray
    q_prime: np.ndarray
    R: np.ndarray
    I: np.ndarray
    F2: np.ndarray

    @property
    def step(self) -> float:
        return float(self.x[1] - self.x[0])

    @property
    def x_min(self) -> float:
        return float(self.x[0])

    @property
    def x_max(self) -> float:
        return float(self.x[-1])

    def f2_pdf(self) -> np.ndarray:
        """Tracy-Widom density on the grid: F2'(x) = R(x) F2(x)."""
        return self.R * self.F2

    def ode_residual(self) -> np.ndarray:
        """|q'' - 2q^3 - x q| at interior points, q'' by the 4th-order stencil."""
        return np.abs(_second_derivative_interior(self.q, self.step)
                      - 2.0 * self.q[2:-2] ** 3 - self.x[2:-2] * self.q[2:-2])


def _second_derivative_interior(y: np.ndarray, h: float) -> np.ndarray:
    """5-point 4th-order second derivative on points 2..n-3."""
    return (-y[:-4] + 16.0 * y[1:-3] - 30.0 * y[2:-2] + 16.0 * y[3:-1] - y[4:]) / (12.0 * h * h)


def _derivative(y: np.ndarray, h: float) -> np.ndarray:
    """4th-order first derivative on the whole grid (one-sided at the ends)."""
    d = np.empty_like(y)
    d[2:-2] = (y[:-4] - 8.0 * y[1:-3] + 8.0 * y[3:-1] - y[4:]) / (12.0 * h)
    for i in (0, 1):
        d[i] = (-25.0 * y[i] + 48.0 * y[i + 1] - 36.0 * y[i + 2]
                + 16.0 * y[i + 3] - 3.0 * y[i + 4]) / (12.0 * h)
    for i in (-1, -2):
        d[i] = (25.0 * y[i] - 48.0 * y[i - 1] + 36.0 * y[i - 2]
                - 16.0 * y[i - 3] + 3.0 * y[i - 4]) / (12.0 * h)
    return d


def _numerov_residual(q, x, h, left, right):
    qq = np.concatenate([[left], q, [right]])
    g = 2.0 * qq**3 + x * qq
    return (qq[2:] - 2.0 * qq[1:-1] + qq[:-2]
            - (h * h / 12.0) * (g[2:] + 10.0 * g[1:-1] + g[:-2]))


def build_edge_table(x_min: float = -12.0, x_max: float = 10.0,
                     step: float = 1.0 / 256.0, *, max_iter: int = 40,
                     tol: float = 1e-13) -> EdgeTable:
    """Solve the Painleve II BVP and assemble the edge table.

    The grid must reach deep enough into both asymptotic regimes for the
    boundary data and tail corrections to hold (x_min <= -10, x_max >= 8) and
    must resolve the solution (step <= 1/256).  The interval count must be
    even so composite Simpson applies cleanly.
    """
    if x_min > -10.0 or x_max < 8.0:
        raise ValueError("need x_min <= -10 and x_max >= 8")
    if step > 1.0 / 256.0 + 1e-15:
        raise ValueError("need step <= 1/256")
    n_int = (x_max - x_min) / step
    if abs(n_int - round(n_int)) > 1e-9 or round(n_int) % 2 != 0:
        raise ValueError("(x_max - x_min)/step must be an even integer")
    n_int = int(round(n_int))
    x = x_min + step * np.arange(n_int + 1)
    h = step

    left = math.sqrt(-x_min / 2.0) * (1.0 + 1.0 / (8.0 * x_min**3))
    right = float(airy_ai(x_max))

    # initial guess: left asymptote blended into the decaying right asymptote
    w = np.clip((x + 2.0) / 4.0, 0.0, 1.0)
    guess_left = np.sqrt(np.maximum(-x, 0.0) / 2.0)
    guess_right = np.asarray(airy_ai(np.maximum(x, 0.0)))
    q = (1.0 - w) * guess_left + w * guess_right
    q[0], q[-1] = left, right

    qi = q[1:-1]
    res = _numerov_residual(qi, x, h, left, right)
    norm = float(np.max(np.abs(res)))
    for it in range(max_iter):
        if norm < tol:
            break
        gp = 6.0 * np.concatenate([[left], qi, [right]]) ** 2 + x
        band = np.zeros((3, qi.size))
        band[0, 1:] = 1.0 - (h * h / 12.0) * gp[2:-1]      # superdiagonal
        band[1, :] = -2.0 - (10.0 * h * h / 12.0) * gp[1:-1]
        band[2, :-1] = 1.0 - (h * h / 12.0) * gp[1:-2]     # subdiagonal
        delta = solve_banded((1, 1), band, -res)
        alpha = 1.0
        for _ in range(30):
            trial = qi + alpha * delta
            tres = _numerov_residual(trial, x, h, left, right)
            tnorm = float(np.max(np.abs(tres)))
            if tnorm < norm:
                break
            alpha *= 0.5
        else:
            raise PainleveConvergenceError(norm, it)
        qi, res, norm = trial, tres, tnorm
    else:
        raise PainleveConvergenceError(norm, max_iter)

    q = np.concatenate([[left], qi, [right]])
    q_prime = _derivative(q, h)

    ai_r = float(airy_ai(x_max))
    aip_r = float(airy_ai_prime(x_max))
    # closed-form tails of the q ~ Ai right asymptote:
    #   int_x^inf Ai^2        = Ai'(x)^2 - x Ai(x)^2
    #   int_x^inf (u-x) Ai^2  = -(2x Ai'(x)^2 - 2x^2 Ai(x)^2 + Ai(x) Ai'(x)) / 3
    tail_r = aip_r**2 - x_max * ai_r**2
    tail_j = -(2.0 * x_max * aip_r**2 - 2.0 * x_max**2 * ai_r**2 + ai_r * aip_r) / 3.0
    tail_i = float(airy_integral(x_max))

    # accumulate every int_x^inf from the right end so small tail values are
    # formed from small partial sums, not as differences of O(1) cumulants
    R = _tail_cumulative(q * q, h) + tail_r
    I = _tail_cumulative(q, h) + tail_i
    J = _tail_cumulative(R, h) + tail_j  # int_x^inf (u-x) q^2 = int_x^inf R
    F2 = np.exp(-J)

    return EdgeTable(x=x, q=q, q_prime=q_prime, R=R, I=I, F2=F2)


def _tail_cumulative(y: np.ndarray, h: float) -> np.ndarray:
    """int_x^{x_max} y(u) du at every grid point, accumulated right-to-left."""
    return cumulative_simpson(y[::-1], dx=h, initial=0.0)[::-1]


def tw2_mean(table: EdgeTable) -> float:
    """Mean of the Tracy-Widom beta = 2 law, int x F2'(x) dx on the grid."""
    from scipy.integrate import simpson

    return float(simpson(table.x * table.f2_pdf(), dx=table.step))

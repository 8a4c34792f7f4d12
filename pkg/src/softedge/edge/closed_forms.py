"""Closed-form limiting densities: Wigner laws and the soft-edge mean density.

``edge_density`` evaluates the mean eigenvalue density near the soft edge in
units where the edge sits at 0 and lambda_max fluctuations are O(1).  Closed
forms exist for the three classical symmetry classes only (beta = 1, 2, 4).
"""

from __future__ import annotations

import math

import numpy as np

from .airy import airy_ai, airy_ai_prime, airy_integral

__all__ = ["wigner", "shifted_wigner", "edge_density"]

_KAPPA = 2.0 ** (2.0 / 3.0)  # argument scaling of the beta = 4 edge density


def wigner(x):
    """Wigner semicircle (1/pi) sqrt(2 - x^2) on |x| <= sqrt(2), else 0."""
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    m = np.abs(x) < math.sqrt(2.0)
    out[m] = np.sqrt(2.0 - x[m] ** 2) / math.pi
    return out if out.ndim else float(out)


def shifted_wigner(x):
    """Semicircle seen from its right endpoint: (1/pi) sqrt(x (2 sqrt(2) - x)).

    Supported on [0, 2 sqrt(2)]; this is the bulk limit of the DOS in units
    of sqrt(N).
    """
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    m = (x > 0.0) & (x < 2.0 * math.sqrt(2.0))
    out[m] = np.sqrt(x[m] * (2.0 * math.sqrt(2.0) - x[m])) / math.pi
    return out if out.ndim else float(out)


def _edge2(x):
    return airy_ai_prime(x) ** 2 - x * airy_ai(x) ** 2


def edge_density(beta: int, x):
    """Soft-edge mean density for beta in {1, 2, 4}.

    beta = 2:  Ai'(x)^2 - x Ai(x)^2
    beta = 1:  the beta = 2 form plus (1/2) Ai(x) (1 - int_x^inf Ai)
    beta = 4:  kappa^{-1/2} [Ai'(k x)^2 - k x Ai(k x)^2
                             - (1/2) Ai(k x) int_{k x}^inf Ai],  kappa = 2^{2/3}

    Left tail ~ sqrt(-x)/pi; right tail ~ exp(-(2 beta / 3) x^{3/2}).
    """
    xa = np.asarray(x, dtype=float)
    if beta == 2:
        out = _edge2(xa)
    elif beta == 1:
        out = _edge2(xa) + 0.5 * airy_ai(xa) * (1.0 - airy_integral(xa))
    elif beta == 4:
        y = _KAPPA * xa
        out = (_edge2(y) - 0.5 * airy_ai(y) * airy_integral(y)) / math.sqrt(_KAPPA)
    else:
        raise ValueError(
            "edge_density has closed forms for beta in {1, 2, 4} only")
    return out if np.ndim(x) else float(out)

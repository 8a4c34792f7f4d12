"""Monte Carlo estimators for near-extreme eigenvalue statistics.

Histograms accumulate three observables per sampled spectrum:

* ``dos``     -- distances r = lambda_max - lambda_i for every i != i_max,
                 normalized so the density integrates to 1 over r;
* ``gap``     -- the first gap lambda_1 - lambda_2, one event per sample;
* ``density`` -- every eigenvalue, estimating the global spectral density.

Rescalings map histograms onto the bulk variable x = r / sqrt(N) or the edge
variable rt = sqrt(2) N^{1/6} r, as curves with Poisson error bars.  Error
bars treat bins as independent; for the DOS the N-1 distances from one matrix
are correlated across bins, which the stderr model ignores.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .eigensolver import Spectrum

__all__ = [
    "Histogram",
    "Curve",
    "ConditionWindow",
    "accumulate_dos",
    "accumulate_gap",
    "accumulate_global_density",
    "condition_accept",
    "rescale_bulk",
    "rescale_edge",
    "merge",
    "CurveMetrics",
    "compare_curves",
    "fit_power_law",
]

KINDS = ("dos", "gap", "density")


@dataclass
class Histogram:
    """Uniform-bin counting estimator over [lo, hi).

    ``n_events`` counts every deposited value, in range or not, and is the
    density normalizer: density = counts / (n_events * bin_width).  For the
    DOS that equals (N-1)*n_samples, for the gap n_samples, for the global
    density N*n_samples, so each normalized histogram integrates to one minus
    the out-of-range fraction.

    Not safe for concurrent mutation: accumulate into one histogram per shard
    and combine with ``merge``.
    """

    lo: float
    hi: float
    bins: int
    kind: str
    counts: np.ndarray = field(default=None, repr=False)
    n_events: int = 0
    n_samples: int = 0
    out_of_range: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"kind must be one of {KINDS}, got {self.kind!r}")
        if not (self.hi > self.lo):
            raise ValueError("need hi > lo")
        if self.bins < 1:
            raise ValueError("need at least one bin")
        if self.counts is None:
            self.counts = np.zeros(self.bins, dtype=np.int64)
        else:
            self.counts = np.asarray(self.counts, dtype=np.int64)
            if self.counts.shape != (self.bins,):
                raise ValueError("counts has the wrong shape")

    # -- geometry ---------------------------------------------------------

    @property
    def bin_width(self) -> float:
        return (self.hi - self.lo) / self.bins

    def bin_edges(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.bins + 1)

    def bin_centers(self) -> np.ndarray:
        return self.lo + (np.arange(self.bins) + 0.5) * self.bin_width

    def config(self) -> tuple:
        return (self.lo, self.hi, self.bins, self.kind)

    # -- accumulation ------------------------------------------------------

    def deposit(self, values: np.ndarray) -> None:
        """Bin raw values; everything outside [lo, hi) lands in out_of_range."""
        values = np.asarray(values, dtype=float).ravel()
        idx = np.floor((values - self.lo) / self.bin_width).astype(np.int64)
        ok = (idx >= 0) & (idx < self.bins) & (values >= self.lo)
        self.counts += np.bincount(idx[ok], minlength=self.bins)
        self.n_events += values.size
        self.out_of_range += int(values.size - np.count_nonzero(ok))

    # -- normalized views ---------------------------------------------------

    def density(self) -> np.ndarray:
        if self.n_events == 0:
            return np.zeros(self.bins)
        return self.counts / (self.n_events * self.bin_width)

    def stderr(self) -> np.ndarray:
        """Poisson (sqrt-counts) error bars on the normalized density."""
        if self.n_events == 0:
            return np.zeros(self.bins)
        return np.sqrt(self.counts) / (self.n_events * self.bin_width)

    def mass(self) -> float:
        """Integral of the normalized density over [lo, hi)."""
        if self.n_events == 0:
            return 0.0
        return float(np.sum(self.counts)) / self.n_events

    def copy(self) -> "Histogram":
        return Histogram(self.lo, self.hi, self.bins, self.kind, self.counts.copy(),
                         self.n_events, self.n_samples, self.out_of_range)


@dataclass
class Curve:
    """Sampled function: strictly increasing abscissa, values, standard errors."""

    x: np.ndarray
    y: np.ndarray
    stderr: np.ndarray = None

    def __post_init__(self):
        self.x = np.asarray(self.x, dtype=float)
        self.y = np.asarray(self.y, dtype=float)
        if self.stderr is None:
            self.stderr = np.zeros_like(self.x)
        self.stderr = np.asarray(self.stderr, dtype=float)
        if not (self.x.shape == self.y.shape == self.stderr.shape):
            raise ValueError("x, y, stderr must have equal lengths")
        if np.any(np.diff(self.x) <= 0):
            raise ValueError("x must be strictly increasing")
        if np.any(self.stderr < 0):
            raise ValueError("stderr must be nonnegative")


@dataclass(frozen=True)
class ConditionWindow:
    """Acceptance window |lambda_max - center| < half_width (strict)."""

    center: float
    half_width: float

    def __post_init__(self):
        if not (self.half_width > 0):
            raise ValueError("half_width must be positive")


def condition_accept(s: Spectrum, w: ConditionWindow) -> bool:
    """True iff lambda_max falls strictly inside the window."""
    return abs(s.lambda_max() - w.center) < w.half_width


# -- accumulation of one spectrum -------------------------------------------


def accumulate_dos(s: Spectrum, h: Histogram) -> Histogram:
    """Deposit the N-1 distances lambda_max - lambda_i (i != i_max) into ``h``."""
    if h.kind != "dos":
        raise ValueError("histogram is not configured for the DOS")
    if s.n < 2:
        raise ValueError("DOS needs at least two eigenvalues")
    h.deposit(s.values[0] - s.values[1:])
    h.n_samples += 1
    return h


def accumulate_gap(s: Spectrum, h: Histogram) -> Histogram:
    """Deposit the first gap of ``s`` into ``h``."""
    if h.kind != "gap":
        raise ValueError("histogram is not configured for the gap")
    h.deposit(np.array([s.gap()]))
    h.n_samples += 1
    return h


def accumulate_global_density(s: Spectrum, h: Histogram) -> Histogram:
    """Deposit every eigenvalue of ``s`` into ``h``."""
    if h.kind != "density":
        raise ValueError("histogram is not configured for the global density")
    h.deposit(s.values)
    h.n_samples += 1
    return h


# -- rescaling ----------------------------------------------------------------


def rescale_bulk(h: Histogram, n: int) -> Curve:
    """Bulk scaling of a DOS histogram: x = r/sqrt(N), y = sqrt(N) * density."""
    if h.kind != "dos":
        raise ValueError("bulk rescaling applies to DOS histograms")
    s = math.sqrt(n)
    return Curve(h.bin_centers() / s, s * h.density(), s * h.stderr())


def rescale_edge(h: Histogram, n: int) -> Curve:
    """Edge scaling: x = sqrt(2) N^{1/6} r.

    DOS densities divide by sqrt(2) N^{-5/6}, gap densities by sqrt(2) N^{1/6},
    so a gap curve stays a normalized PDF in the edge variable.
    """
    a = math.sqrt(2.0) * n ** (1.0 / 6.0)
    if h.kind == "dos":
        f = math.sqrt(2.0) * n ** (-5.0 / 6.0)
    elif h.kind == "gap":
        f = a
    else:
        raise ValueError("edge rescaling applies to DOS or gap histograms")
    return Curve(a * h.bin_centers(), h.density() / f, h.stderr() / f)


def merge(a: Histogram, b: Histogram) -> Histogram:
    """Component-wise sum of two identically configured histograms."""
    if a.config() != b.config():
        raise ValueError(f"histogram configurations differ: {a.config()} vs {b.config()}")
    return Histogram(a.lo, a.hi, a.bins, a.kind, a.counts + b.counts,
                     a.n_events + b.n_events, a.n_samples + b.n_samples,
                     a.out_of_range + b.out_of_range)


# -- curve comparison ----------------------------------------------------------


@dataclass(frozen=True)
class CurveMetrics:
    sup: float
    l2: float
    chi2_per_bin: float
    n_points: int

    def as_dict(self) -> dict:
        return {"sup": self.sup, "l2": self.l2,
                "chi2_per_bin": self.chi2_per_bin, "n_points": self.n_points}


def compare_curves(c: Curve, ref, lo: float = None, hi: float = None) -> CurveMetrics:
    """Distance metrics between ``c`` and a reference curve or callable.

    The reference is evaluated at c.x (curves are linearly interpolated over
    the overlapping abscissa range).  Returns the sup norm, the root mean
    square deviation, and the mean of ((y - ref)/stderr)^2 over points with a
    positive error bar.
    """
    x, y, err = c.x, c.y, c.stderr
    if callable(ref):
        mask = np.ones(len(x), dtype=bool)
    else:
        mask = (x >= ref.x[0]) & (x <= ref.x[-1])
        if not np.any(mask):
            raise ValueError("curves have no overlapping abscissa range")
    if lo is not None:
        mask = mask & (x >= lo)
    if hi is not None:
        mask = mask & (x <= hi)
    if not np.any(mask):
        raise ValueError("empty comparison window")
    if callable(ref):
        r = np.asarray([float(ref(v)) for v in x[mask]])
    else:
        r = np.interp(x[mask], ref.x, ref.y)
    d = y[mask] - r
    e = err[mask]
    pos = e > 0
    chi2 = float(np.mean((d[pos] / e[pos]) ** 2)) if np.any(pos) else 0.0
    return CurveMetrics(
        sup=float(np.max(np.abs(d))),
        l2=float(np.sqrt(np.mean(d * d))),
        chi2_per_bin=chi2,
        n_points=int(np.count_nonzero(mask)),
    )


def fit_power_law(c: Curve, lo: float, hi: float):
    """Weighted least-squares slope of log y against log x on x in [lo, hi].

    Weights are (y/stderr)^2, the inverse variance of log y under the Poisson
    model; empty bins carry no weight.  Returns (slope, intercept, slope_err).
    """
    m = (c.x >= lo) & (c.x <= hi) & (c.y > 0) & (c.stderr > 0)
    if np.count_nonzero(m) < 3:
        raise ValueError("not enough populated bins in the fit window")
    lx = np.log(c.x[m])
    ly = np.log(c.y[m])
    w = (c.y[m] / c.stderr[m]) ** 2
    wsum = w.sum()
    mx = np.sum(w * lx) / wsum
    my = np.sum(w * ly) / wsum
    sxx = np.sum(w * (lx - mx) ** 2)
    slope = float(np.sum(w * (lx - mx) * (ly - my)) / sxx)
    intercept = float(my - slope * mx)
    return slope, intercept, float(1.0 / math.sqrt(sxx))

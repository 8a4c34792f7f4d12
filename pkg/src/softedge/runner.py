"""Monte Carlo driver: sample matrices, solve spectra, fill histograms.

One pass over the sample indices can serve several histograms at once (for
example a bulk-binned and an edge-binned DOS from the same spectra).  Samples
are drawn from per-index counter-based streams, so a run partitioned over any
number of workers produces bit-identical merged histograms.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.linalg.lapack import dsterf

from .eigensolver import top_two_batch
from .estimators import ConditionWindow, Histogram, merge
from .sampler import EnsembleSpec, ReusableStream

__all__ = ["HistogramRequest", "run_monte_carlo", "default_range"]

_BATCH = 1024


@dataclass(frozen=True)
class HistogramRequest:
    """One histogram to accumulate during a run.

    ``conditional`` restricts accumulation to samples whose lambda_max falls
    inside the run's acceptance window.
    """

    kind: str
    lo: float
    hi: float
    bins: int
    conditional: bool = False

    def make(self) -> Histogram:
        return Histogram(self.lo, self.hi, self.bins, self.kind)


def default_range(kind: str, n: int, beta: float, rescaling: str = "none"):
    """Binning ranges resolving each observable's natural support.

    Edge-rescaled runs map the window [0, 6] in the edge variable back to r;
    bulk runs cover the full support [0, 2 sqrt(2N)] of the shifted
    semicircle; the global density gets a symmetric padded range.
    """
    if kind == "density":
        half = math.sqrt(2.0 * n) + 4.0 / math.sqrt(beta)
        return -half, half
    if rescaling == "edge":
        return 0.0, 6.0 / (math.sqrt(2.0) * n ** (1.0 / 6.0))
    return 0.0, 2.0 * math.sqrt(2.0 * n)


def _needs_full(requests) -> bool:
    return any(r.kind != "gap" for r in requests)


def _run_range(spec: EnsembleSpec, start: int, stop: int, requests,
               window: ConditionWindow, solver: str):
    hists = [r.make() for r in requests]
    n, beta = spec.n, spec.beta
    sqrt_beta = math.sqrt(beta)
    sqrt_2beta = math.sqrt(2.0 * beta)
    dof_half = 0.5 * beta * np.arange(n - 1, 0, -1, dtype=float)
    rs = ReusableStream(spec.seed)
    full = solver == "full"

    buf_d = np.empty((_BATCH, n))
    buf_e = np.empty((_BATCH, max(n - 1, 1)))
    done = start
    while done < stop:
        b = min(_BATCH, stop - done)
        for j in range(b):
            g = rs.reset(done + j)
            buf_d[j] = g.standard_normal(n) / sqrt_beta
            buf_e[j, : n - 1] = np.sqrt(g.gamma(dof_half, 2.0)) / sqrt_2beta

        if full:
            if n == 1:
                values = buf_d[:b].copy()
            else:
                values = np.empty((b, n))
                for j in range(b):
                    w, info = dsterf(buf_d[j], buf_e[j, : n - 1])
                    if info != 0:
                        raise ArithmeticError(f"eigensolver failed on sample {done + j}")
                    values[j] = w[::-1]
            lmax = values[:, 0]
        else:
            tt = top_two_batch(buf_d[:b], buf_e[:b, : n - 1])
            values = tt
            lmax = tt[:, 0]

        if window is None:
            accept = np.ones(b, dtype=bool)
        else:
            accept = np.abs(lmax - window.center) < window.half_width

        for req, h in zip(requests, hists):
            rows = accept if req.conditional else np.ones(b, dtype=bool)
            m = int(np.count_nonzero(rows))
            if m == 0:
                continue
            if req.kind == "gap":
                h.deposit(values[:b][rows, 0] - values[:b][rows, 1])
            elif req.kind == "dos":
                h.deposit((values[:b][rows, 0:1] - values[:b][rows, 1:]).ravel())
            else:
                h.deposit(values[:b][rows].ravel())
            h.n_samples += m
        done += b
    return hists


def run_monte_carlo(spec: EnsembleSpec, samples: int, requests,
                    window: ConditionWindow = None, workers: int = 1,
                    solver: str = "auto"):
    """Run ``samples`` draws and return one merged Histogram per request.

    ``solver`` is "full" (whole spectrum), "top2" (two largest eigenvalues by
    Sturm bisection; gap observables only) or "auto".  Results are identical
    for any ``workers`` because sample index i always uses stream (seed, i).
    """
    requests = list(requests)
    if not requests:
        raise ValueError("no histograms requested")
    if any(r.conditional for r in requests) and window is None:
        raise ValueError("conditional requests need an acceptance window")
    if solver == "auto":
        solver = "full" if _needs_full(requests) else "top2"
    if solver == "top2" and _needs_full(requests):
        raise ValueError("the top-two solver serves gap observables only")
    if spec.n < 2 and any(r.kind != "density" for r in requests):
        raise ValueError("gap and DOS observables need n >= 2")

    workers = max(1, int(workers))
    if workers == 1 or samples < 4 * _BATCH:
        return _run_range(spec, 0, samples, requests, window, solver)

    bounds = np.linspace(0, samples, workers + 1).astype(int)
    chunks = [(spec, int(a), int(b), requests, window, solver)
              for a, b in zip(bounds[:-1], bounds[1:]) if b > a]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        shards = list(pool.map(_run_range_star, chunks))
    out = shards[0]
    for shard in shards[1:]:
        out = [merge(a, b) for a, b in zip(out, shard)]
    return out


def _run_range_star(args):
    return _run_range(*args)

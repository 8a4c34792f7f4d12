"""Small utilities shared by the test modules."""

from __future__ import annotations

import numpy as np

from softedge.eigensolver import eigenvalues_full
from softedge.sampler import EnsembleSpec, ReusableStream, sample_matrix


def collect_top_two(beta: float, n: int, samples: int, seed: int):
    """Raw (lambda_1, lambda_2) samples through the production pipeline."""
    spec = EnsembleSpec(beta=beta, n=n, seed=seed)
    rs = ReusableStream(seed)
    l1 = np.empty(samples)
    l2 = np.empty(samples)
    for i in range(samples):
        s = eigenvalues_full(sample_matrix(spec, rs.reset(i)))
        l1[i] = s.values[0]
        l2[i] = s.values[1]
    return l1, l2


def ks_statistic(samples, cdf):
    """Two-sided Kolmogorov-Smirnov distance to a continuous CDF."""
    s = np.sort(np.asarray(samples))
    n = len(s)
    f = np.asarray(cdf(s))
    up = np.max(np.arange(1, n + 1) / n - f)
    down = np.max(f - np.arange(0, n) / n)
    return float(max(up, down))

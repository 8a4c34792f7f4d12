"""Near-extreme eigenvalue statistics of Gaussian beta-ensembles.

Monte Carlo over tridiagonal matrix models (any real beta > 0) for the
density of eigenvalues seen from the largest one and for the first-gap
distribution, together with an exact Painleve II / Tracy-Widom engine for the
beta = 2 soft-edge scaling functions.
"""

__version__ = "0.1.0"

from .sampler import EnsembleSpec, TridiagonalMatrix, sample_matrix, sample_stream
from .eigensolver import Spectrum, eigenvalues_full, sturm_count, top_two
from .estimators import (
    ConditionWindow,
    Curve,
    Histogram,
    accumulate_dos,
    accumulate_gap,
    accumulate_global_density,
    compare_curves,
    condition_accept,
    merge,
    rescale_bulk,
    rescale_edge,
)
from .oracle import small_n_oracle

__all__ = [
    "__version__",
    "EnsembleSpec", "TridiagonalMatrix", "sample_matrix", "sample_stream",
    "Spectrum", "eigenvalues_full", "sturm_count", "top_two",
    "Histogram", "Curve", "ConditionWindow",
    "accumulate_dos", "accumulate_gap", "accumulate_global_density",
    "condition_accept", "merge", "rescale_bulk", "rescale_edge",
    "compare_curves", "small_n_oracle",
]

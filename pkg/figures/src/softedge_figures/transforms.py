"""Axis transforms applied to curve data before plotting.

These are the only numerics in this package; each has a unit test against
hand-computed points.
"""

from __future__ import annotations

import numpy as np

TRANSFORMS = ("linear", "three-halves")


def apply_transform(name: str, values):
    """Map abscissa values for the requested transform.

    ``linear`` is the identity; ``three-halves`` maps x -> x^{3/2} (used to
    plot log densities against x^{3/2} so an exponential tail with that power
    becomes a straight line).  Logarithmic display is handled by axis scales,
    not by transforming the data.
    """
    arr = np.asarray(values, dtype=float)
    if name == "linear":
        return arr
    if name == "three-halves":
        if np.any(arr < 0):
            raise ValueError("three-halves transform needs nonnegative values")
        return arr**1.5
    raise ValueError(f"unknown transform {name!r}; valid: {TRANSFORMS}")

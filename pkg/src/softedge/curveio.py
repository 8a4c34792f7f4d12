"""CSV emission and parsing for simulation and exact curves.

Two fixed schemas, each preceded by one ``#``-prefixed JSON metadata line that
records the generating configuration:

* simulation: ``bin_left,bin_right,density,stderr,counts``
* exact:      ``x,y``

Values are written with 17 significant digits so files round-trip bit-exactly.
"""

from __future__ import annotations

import json

import numpy as np

from .estimators import Curve, Histogram

__all__ = [
    "write_histogram_csv",
    "write_xy_csv",
    "read_curve_csv",
]

_SIM_HEADER = "bin_left,bin_right,density,stderr,counts"
_XY_HEADER = "x,y"


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def write_histogram_csv(path, h: Histogram, metadata: dict,
                        curve: Curve = None) -> None:
    """Write a (possibly rescaled) histogram.

    Without ``curve`` the raw normalized density is written on the raw bin
    grid; with ``curve`` (from one of the rescaling operations) the rescaled
    ordinates are written and the bin edges are mapped onto the rescaled
    abscissa, preserving exact bin boundaries under the linear map.
    """
    edges = h.bin_edges()
    if curve is None:
        y, err = h.density(), h.stderr()
    else:
        y, err = curve.y, curve.stderr
        centers = h.bin_centers()
        # both rescalings are linear in r: map edges with the fitted line
        a = (curve.x[-1] - curve.x[0]) / (centers[-1] - centers[0])
        edges = curve.x[0] + a * (edges - centers[0])
    lines = ["# " + json.dumps(metadata, sort_keys=True), _SIM_HEADER]
    for i in range(h.bins):
        lines.append(",".join([_fmt(edges[i]), _fmt(edges[i + 1]),
                               _fmt(y[i]), _fmt(err[i]), str(int(h.counts[i]))]))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def write_xy_csv(path, x, y, metadata: dict) -> None:
    """Write an exact curve in the two-column schema."""
    lines = ["# " + json.dumps(metadata, sort_keys=True), _XY_HEADER]
    for xi, yi in zip(np.asarray(x, dtype=float), np.asarray(y, dtype=float)):
        lines.append(f"{_fmt(xi)},{_fmt(yi)}")
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def read_curve_csv(path):
    """Parse either schema into (Curve, metadata).

    Simulation files yield bin-center abscissas with error bars; exact files
    yield zero error bars.
    """
    metadata = {}
    with open(path) as fh:
        lines = [ln.strip() for ln in fh if ln.strip()]
    while lines and lines[0].startswith("#"):
        try:
            metadata = json.loads(lines[0][1:].strip())
        except json.JSONDecodeError:
            pass
        lines = lines[1:]
    if not lines:
        raise ValueError(f"{path}: no data")
    header = lines[0]
    rows = [ln.split(",") for ln in lines[1:]]
    if header == _SIM_HEADER:
        data = np.array([[float(v) for v in row] for row in rows])
        x = 0.5 * (data[:, 0] + data[:, 1])
        return Curve(x, data[:, 2], data[:, 3]), metadata
    if header == _XY_HEADER:
        data = np.array([[float(v) for v in row] for row in rows])
        return Curve(data[:, 0], data[:, 1]), metadata
    raise ValueError(f"{path}: unrecognized header {header!r}")

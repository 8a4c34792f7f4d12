"""Readers for the two softedge CSV schemas.

Simulation files carry ``bin_left,bin_right,density,stderr,counts`` after a
``#`` JSON metadata line; exact curves carry ``x,y``.  Parsing failures raise
errors that name the offending file.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

_SIM_HEADER = "bin_left,bin_right,density,stderr,counts"
_XY_HEADER = "x,y"


@dataclass
class CurveFile:
    path: str
    x: np.ndarray
    y: np.ndarray
    stderr: np.ndarray
    metadata: dict = field(default_factory=dict)

    @property
    def is_simulation(self) -> bool:
        return bool(np.any(self.stderr > 0))


def read_curve(path) -> CurveFile:
    path = str(path)
    try:
        with open(path) as fh:
            lines = [ln.strip() for ln in fh if ln.strip()]
    except OSError as exc:
        raise FileNotFoundError(f"cannot read curve file {path}: {exc}") from exc
    metadata = {}
    while lines and lines[0].startswith("#"):
        try:
            metadata = json.loads(lines[0][1:].strip())
        except json.JSONDecodeError:
            pass
        lines = lines[1:]
    if not lines:
        raise ValueError(f"{path}: empty curve file")
    header, rows = lines[0], lines[1:]
    try:
        data = np.array([[float(v) for v in row.split(",")] for row in rows])
    except ValueError as exc:
        raise ValueError(f"{path}: malformed numeric row ({exc})") from exc
    if header == _SIM_HEADER:
        if data.shape[1] != 5:
            raise ValueError(f"{path}: expected 5 columns, got {data.shape[1]}")
        x = 0.5 * (data[:, 0] + data[:, 1])
        return CurveFile(path, x, data[:, 2], data[:, 3], metadata)
    if header == _XY_HEADER:
        if data.shape[1] != 2:
            raise ValueError(f"{path}: expected 2 columns, got {data.shape[1]}")
        return CurveFile(path, data[:, 0], data[:, 1], np.zeros(len(data)), metadata)
    raise ValueError(f"{path}: unrecognized header {header!r}")

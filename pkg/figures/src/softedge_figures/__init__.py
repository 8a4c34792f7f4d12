"""Plotting layer over softedge CSV files.

Reads the two fixed CSV schemas emitted by the simulation CLI and renders the
standard figure styles; all numerics are limited to axis transforms.
"""

__version__ = "0.1.0"

from .curves import CurveFile, read_curve
from .figures import (
    BETA_COLORS,
    CurveSpec,
    FigureSpec,
    PanelSpec,
    conditional_overlay,
    edge_comparison,
    gap_tail,
    make_figure,
    three_panel_collapse,
)
from .transforms import apply_transform

__all__ = [
    "CurveFile", "read_curve", "apply_transform",
    "BETA_COLORS", "CurveSpec", "PanelSpec", "FigureSpec", "make_figure",
    "three_panel_collapse", "edge_comparison", "gap_tail", "conditional_overlay",
]

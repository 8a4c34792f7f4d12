"""Figure assembly: panels of softedge curves with optional overlays.

Simulation curves render as dots with error bars, exact and asymptote curves
as solid/dashed lines.  Colors follow the house convention for the Dyson
index: beta = 1 red, beta = 2 green, beta = 4 blue.
"""

from __future__ import annotations

from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .curves import read_curve
from .transforms import apply_transform

__all__ = [
    "BETA_COLORS",
    "CurveSpec",
    "PanelSpec",
    "FigureSpec",
    "make_figure",
    "three_panel_collapse",
    "edge_comparison",
    "gap_tail",
    "conditional_overlay",
]

BETA_COLORS = {1: "red", 2: "green", 4: "blue"}


def beta_color(beta) -> str:
    return BETA_COLORS.get(int(round(float(beta))), "black")


@dataclass
class CurveSpec:
    """One curve in a panel: a CSV path plus display directives."""

    path: str
    label: str = ""
    color: str = "black"
    style: str = "auto"  # auto | dots | line | dashed


@dataclass
class PanelSpec:
    curves: list
    title: str = ""
    xlabel: str = ""
    ylabel: str = ""
    x_transform: str = "linear"
    logx: bool = False
    logy: bool = False


@dataclass
class FigureSpec:
    panels: list
    output: str
    width: float = 4.2  # per panel, inches


def _draw_curve(ax, spec: CurveSpec, x_transform: str, logy: bool):
    curve = read_curve(spec.path)
    x = apply_transform(x_transform, curve.x)
    y = curve.y
    keep = np.ones(len(x), dtype=bool)
    if logy:
        keep = y > 0
    style = spec.style
    if style == "auto":
        style = "dots" if curve.is_simulation else "line"
    if style == "dots":
        ax.errorbar(x[keep], y[keep], yerr=curve.stderr[keep], fmt=".",
                    color=spec.color, markersize=3, elinewidth=0.6,
                    label=spec.label or None)
    else:
        ax.plot(x[keep], y[keep], "--" if style == "dashed" else "-",
                color=spec.color, linewidth=1.2, label=spec.label or None)


def make_figure(spec: FigureSpec) -> str:
    """Render the figure described by ``spec`` and return the output path.

    Deterministic for given inputs; missing or malformed CSVs raise errors
    naming the file.
    """
    if not spec.panels:
        raise ValueError("figure needs at least one panel")
    fig, axes = plt.subplots(1, len(spec.panels),
                             figsize=(spec.width * len(spec.panels), 3.4))
    if len(spec.panels) == 1:
        axes = [axes]
    for ax, panel in zip(axes, spec.panels):
        for curve_spec in panel.curves:
            _draw_curve(ax, curve_spec, panel.x_transform, panel.logy)
        if panel.logx:
            ax.set_xscale("log")
        if panel.logy:
            ax.set_yscale("log")
        ax.set_title(panel.title, fontsize=10)
        ax.set_xlabel(panel.xlabel)
        ax.set_ylabel(panel.ylabel)
        if any(c.label for c in panel.curves):
            ax.legend(fontsize=7, frameon=False)
    fig.tight_layout()
    fig.savefig(spec.output, dpi=150)
    plt.close(fig)
    return spec.output


# -- the four standard figure styles -------------------------------------------


def three_panel_collapse(raw, bulk, edge, output) -> FigureSpec:
    """Raw DOS curves plus their bulk and edge collapses, one panel each.

    Each argument is a list of (path, beta, label) triples.
    """

    def panel(entries, title, xlabel, ylabel):
        return PanelSpec(
            curves=[CurveSpec(path=p, label=lab, color=beta_color(b))
                    for p, b, lab in entries],
            title=title, xlabel=xlabel, ylabel=ylabel)

    return FigureSpec(
        panels=[
            panel(raw, "density of states vs distance", "r", "rho_DOS(r, N)"),
            panel(bulk, "bulk collapse", "r / sqrt(N)", "sqrt(N) rho_DOS"),
            panel(edge, "edge collapse", "sqrt(2) N^{1/6} r",
                  "rho_DOS / (sqrt(2) N^{-5/6})"),
        ],
        output=str(output))


def edge_comparison(mc, exact, asymptotes, output) -> FigureSpec:
    """Edge scaling function: log-log panel plus linear panel with overlays.

    ``mc`` is a list of (path, beta, label); ``exact`` and ``asymptotes`` are
    lists of (path, label) drawn as solid and dashed lines.
    """
    dots = [CurveSpec(path=p, label=lab, color=beta_color(b), style="dots")
            for p, b, lab in mc]
    solid = [CurveSpec(path=p, label=lab, color="black", style="line")
             for p, lab in exact]
    dashed = [CurveSpec(path=p, label=lab, color="gray", style="dashed")
              for p, lab in asymptotes]
    return FigureSpec(
        panels=[
            PanelSpec(curves=dots + solid + dashed, title="edge scaling (log-log)",
                      xlabel="r", ylabel="rho_edge(r)", logx=True, logy=True),
            PanelSpec(curves=dots + solid + dashed, title="edge scaling",
                      xlabel="r", ylabel="rho_edge(r)"),
        ],
        output=str(output))


def gap_tail(mc, guides, output) -> FigureSpec:
    """log p against r^{3/2}, with exponential-tail guide lines.

    ``mc`` is a list of (path, beta, label); ``guides`` of (path, label).
    """
    curves = [CurveSpec(path=p, label=lab, color=beta_color(b), style="dots")
              for p, b, lab in mc]
    curves += [CurveSpec(path=p, label=lab, color="gray", style="dashed")
               for p, lab in guides]
    return FigureSpec(
        panels=[PanelSpec(curves=curves, title="gap distribution right tail",
                          xlabel="r^{3/2}", ylabel="p_typ(r)",
                          x_transform="three-halves", logy=True)],
        output=str(output))


def conditional_overlay(mc_dos, mc_gap, exact_dos, exact_gap, output) -> FigureSpec:
    """Conditional DOS and gap curves: Monte Carlo dots over exact lines."""

    def panel(mc, exact, title, ylabel):
        curves = [CurveSpec(path=p, label=lab, color=beta_color(b), style="dots")
                  for p, b, lab in mc]
        curves += [CurveSpec(path=p, label=lab, color="black", style="line")
                   for p, lab in exact]
        return PanelSpec(curves=curves, title=title, xlabel="r", ylabel=ylabel)

    return FigureSpec(
        panels=[
            panel(mc_dos, exact_dos, "conditional DOS at the typical edge",
                  "rho_edge(r | 0)"),
            panel(mc_gap, exact_gap, "conditional gap at the typical edge",
                  "p_typ(r | 0)"),
        ],
        output=str(output))

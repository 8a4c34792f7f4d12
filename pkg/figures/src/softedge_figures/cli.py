"""Command line for regenerating the standard figure styles from CSV files.

Inputs are triples ``path:beta:label`` (simulation curves) or pairs
``path:label`` (exact/asymptote curves); betas pick the house colors.
"""

from __future__ import annotations

import argparse
import sys

from .figures import (
    conditional_overlay,
    edge_comparison,
    gap_tail,
    make_figure,
    three_panel_collapse,
)


def _triples(values):
    out = []
    for v in values or []:
        parts = v.split(":")
        if len(parts) != 3:
            raise SystemExit(f"expected path:beta:label, got {v!r}")
        out.append((parts[0], float(parts[1]), parts[2]))
    return out


def _pairs(values):
    out = []
    for v in values or []:
        parts = v.split(":")
        if len(parts) != 2:
            raise SystemExit(f"expected path:label, got {v!r}")
        out.append((parts[0], parts[1]))
    return out


def build_parser():
    ap = argparse.ArgumentParser(prog="softedge-figures")
    sub = ap.add_subparsers(dest="style", required=True)

    p = sub.add_parser("collapse", help="three-panel scaling collapse")
    p.add_argument("--raw", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--bulk", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--edge", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--output", required=True)

    p = sub.add_parser("edge", help="edge scaling function, log-log and linear")
    p.add_argument("--mc", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--exact", nargs="*", default=[], metavar="CSV:LABEL")
    p.add_argument("--asymptote", nargs="*", default=[], metavar="CSV:LABEL")
    p.add_argument("--output", required=True)

    p = sub.add_parser("gap-tail", help="log gap PDF against r^{3/2}")
    p.add_argument("--mc", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--guide", nargs="*", default=[], metavar="CSV:LABEL")
    p.add_argument("--output", required=True)

    p = sub.add_parser("conditional", help="conditional DOS and gap overlays")
    p.add_argument("--mc-dos", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--mc-gap", nargs="+", required=True, metavar="CSV:BETA:LABEL")
    p.add_argument("--exact-dos", nargs="*", default=[], metavar="CSV:LABEL")
    p.add_argument("--exact-gap", nargs="*", default=[], metavar="CSV:LABEL")
    p.add_argument("--output", required=True)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.style == "collapse":
            spec = three_panel_collapse(_triples(args.raw), _triples(args.bulk),
                                        _triples(args.edge), args.output)
        elif args.style == "edge":
            spec = edge_comparison(_triples(args.mc), _pairs(args.exact),
                                   _pairs(args.asymptote), args.output)
        elif args.style == "gap-tail":
            spec = gap_tail(_triples(args.mc), _pairs(args.guide), args.output)
        else:
            spec = conditional_overlay(_triples(args.mc_dos), _triples(args.mc_gap),
                                       _pairs(args.exact_dos), _pairs(args.exact_gap),
                                       args.output)
        out = make_figure(spec)
    except (FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())

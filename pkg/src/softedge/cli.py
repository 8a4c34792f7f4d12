"""Command-line entry point.

Four subcommands wire the sampler, eigensolvers, estimators and the exact
edge engine into reproducible experiments:

* ``simulate`` -- Monte Carlo histogram of dos / gap / density, optionally
  rescaled to bulk or edge variables, optionally conditioned on a lambda_max
  window; CSV output with a JSON metadata line.
* ``exact``    -- exact curves (scaling functions, closed forms, asymptotes,
  or the full special-function table) on a uniform grid.
* ``compare``  -- distance metrics between two curve files with pass/fail
  thresholds; the exit code reports the verdict.
* ``oracle``   -- brute-force quadrature curves for N <= 3.

Exit codes: 0 success / comparison pass, 1 comparison fail, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

import numpy as np

from . import __version__
from .estimators import ConditionWindow, compare_curves, rescale_bulk, rescale_edge
from .curveio import read_curve_csv, write_histogram_csv, write_xy_csv
from .oracle import small_n_oracle
from .runner import HistogramRequest, default_range, run_monte_carlo
from .sampler import EnsembleSpec

_ENV_OUTDIR = "SOFTEDGE_OUTDIR"

_EXACT_FUNCTIONS = (
    "rho-edge",
    "p-typ",
    "rho-edge-conditional",
    "p-typ-conditional",
    "edge-density",
    "wigner",
    "shifted-wigner",
    "f2-table",
    "asymptote",
)


def _out_path(path: str) -> str:
    if os.path.isabs(path):
        return path
    return os.path.join(os.environ.get(_ENV_OUTDIR, "."), path)


def _add_simulate(sub):
    p = sub.add_parser("simulate", help="Monte Carlo histogram run")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, default=200_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--observable", choices=("dos", "gap", "density"), default="dos")
    p.add_argument("--rescaling", choices=("none", "bulk", "edge"), default="none")
    p.add_argument("--window", type=float, default=None, metavar="EPS",
                   help="accept only samples with |lambda_max - sqrt(2N)| < EPS")
    p.add_argument("--bins", type=int, default=200)
    p.add_argument("--lo", type=float, default=None)
    p.add_argument("--hi", type=float, default=None)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--output", default="simulate.csv")


def _add_exact(sub):
    p = sub.add_parser("exact", help="evaluate an exact curve")
    p.add_argument("--function", choices=_EXACT_FUNCTIONS, required=True)
    p.add_argument("--beta", type=float, default=2.0)
    p.add_argument("--kind", default=None, help="asymptote kind")
    p.add_argument("--r-min", type=float, default=0.0)
    p.add_argument("--r-max", type=float, default=6.0)
    p.add_argument("--x-min", type=float, default=-6.0)
    p.add_argument("--x-max", type=float, default=6.0)
    p.add_argument("--points", type=int, default=241)
    p.add_argument("--at-x", type=float, default=0.0,
                   help="conditioning position for the conditional functions")
    p.add_argument("--output", default="exact.csv")


def _add_compare(sub):
    p = sub.add_parser("compare", help="compare two curve files")
    p.add_argument("curve_a", help="measured curve (its error bars feed chi^2)")
    p.add_argument("curve_b", help="reference curve")
    p.add_argument("--lo", type=float, default=None)
    p.add_argument("--hi", type=float, default=None)
    p.add_argument("--sup-tol", type=float, default=None)
    p.add_argument("--l2-tol", type=float, default=None)
    p.add_argument("--chi2-tol", type=float, default=None)
    p.add_argument("--output", default=None)


def _add_oracle(sub):
    p = sub.add_parser("oracle", help="small-N quadrature curve")
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--observable", choices=("gap", "dos", "lambda_max"), default="gap")
    p.add_argument("--r-max", type=float, default=None)
    p.add_argument("--points", type=int, default=801)
    p.add_argument("--output", default="oracle.csv")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="softedge",
        description="Near-extreme eigenvalue statistics of Gaussian beta-ensembles")
    ap.add_argument("--version", action="version", version=__version__)
    sub = ap.add_subparsers(dest="command", required=True)
    _add_simulate(sub)
    _add_exact(sub)
    _add_compare(sub)
    _add_oracle(sub)
    return ap


def cmd_simulate(args) -> int:
    if args.beta <= 0:
        raise SystemExit("--beta must be positive")
    if args.n < 1 or args.samples < 1:
        raise SystemExit("--n and --samples must be positive")
    if args.observable == "density" and args.rescaling != "none":
        raise SystemExit("bulk/edge rescalings apply to dos and gap observables")
    if args.observable == "gap" and args.rescaling == "bulk":
        raise SystemExit("bulk rescaling applies to the DOS only")
    if args.window is not None and args.observable == "density":
        raise SystemExit("the acceptance window applies to dos and gap observables")

    lo, hi = default_range(args.observable, args.n, args.beta, args.rescaling)
    if args.lo is not None:
        lo = args.lo
    if args.hi is not None:
        hi = args.hi

    spec = EnsembleSpec(beta=args.beta, n=args.n, seed=args.seed)
    window = None
    if args.window is not None:
        window = ConditionWindow(center=math.sqrt(2.0 * args.n),
                                 half_width=args.window)
    req = HistogramRequest(args.observable, lo, hi, args.bins,
                           conditional=window is not None)
    (hist,) = run_monte_carlo(spec, args.samples, [req], window=window,
                              workers=args.workers)

    curve = None
    if args.rescaling == "bulk":
        curve = rescale_bulk(hist, args.n)
    elif args.rescaling == "edge":
        curve = rescale_edge(hist, args.n)

    meta = {
        "command": "simulate",
        "beta": args.beta,
        "n": args.n,
        "samples": args.samples,
        "seed": args.seed,
        "observable": args.observable,
        "rescaling": args.rescaling,
        "window": args.window,
        "bins": args.bins,
        "lo": lo,
        "hi": hi,
        "n_samples_accepted": hist.n_samples,
        "out_of_range": hist.out_of_range,
        "version": __version__,
    }
    out = _out_path(args.output)
    write_histogram_csv(out, hist, meta, curve)
    print(out)
    return 0


def _edge_table():
    from .edge import build_edge_table

    return build_edge_table()


def cmd_exact(args) -> int:
    from . import edge

    fn = args.function
    meta = {"command": "exact", "function": fn, "beta": args.beta,
            "version": __version__}
    out = _out_path(args.output)

    if fn == "f2-table":
        tab = _edge_table()
        meta["columns"] = "x,q,q_prime,R,I,F2"
        lines = ["# " + json.dumps(meta, sort_keys=True), "x,q,q_prime,R,I,F2"]
        for i in range(len(tab.x)):
            lines.append(",".join(format(v, ".17g") for v in
                                  (tab.x[i], tab.q[i], tab.q_prime[i],
                                   tab.R[i], tab.I[i], tab.F2[i])))
        with open(out, "w") as fh:
            fh.write("\n".join(lines) + "\n")
        print(out)
        return 0

    if fn in ("rho-edge", "p-typ", "rho-edge-conditional", "p-typ-conditional"):
        if args.beta != 2:
            raise SystemExit(f"--function {fn} is exact at beta = 2 only")
        tab = _edge_table()
        x = np.linspace(0.0, args.r_max, args.points)
        if fn == "rho-edge":
            y = edge.rho_edge_exact(x, tab)
        elif fn == "p-typ":
            y = edge.p_typ_exact(x, tab)
        elif fn == "rho-edge-conditional":
            meta["at_x"] = args.at_x
            y = np.array([edge.rho_edge_conditional(float(r), args.at_x, tab) for r in x])
        else:
            meta["at_x"] = args.at_x
            y = np.array([edge.p_typ_conditional(float(r), args.at_x, tab) for r in x])
    elif fn == "edge-density":
        if args.beta not in (1, 2, 4):
            raise SystemExit("edge-density has closed forms for beta in {1, 2, 4} only")
        x = np.linspace(args.x_min, args.x_max, args.points)
        y = edge.edge_density(int(args.beta), x)
    elif fn == "wigner":
        x = np.linspace(args.x_min, args.x_max, args.points)
        y = edge.wigner(x)
    elif fn == "shifted-wigner":
        x = np.linspace(max(args.x_min, 0.0), args.x_max, args.points)
        y = edge.shifted_wigner(x)
    elif fn == "asymptote":
        if args.kind is None:
            raise SystemExit("--kind is required for --function asymptote")
        meta["kind"] = args.kind
        lo = args.x_min if args.kind.startswith("edge-density") else args.r_min
        hi = args.x_max if args.kind.startswith("edge-density") else args.r_max
        x = np.linspace(lo, hi, args.points)
        x = x[x != 0] if args.kind in ("gap-large-full",) else x
        try:
            y = np.array([edge.asymptote(args.kind, args.beta, v) for v in x])
        except edge.UnsupportedAsymptote as exc:
            raise SystemExit(str(exc)) from None
        except ValueError as exc:
            raise SystemExit(str(exc)) from None
    else:  # pragma: no cover
        raise SystemExit(f"unhandled function {fn}")

    write_xy_csv(out, x, y, meta)
    print(out)
    return 0


def cmd_compare(args) -> int:
    curve_a, _ = read_curve_csv(args.curve_a)
    curve_b, _ = read_curve_csv(args.curve_b)
    metrics = compare_curves(curve_a, curve_b, lo=args.lo, hi=args.hi)
    verdict = True
    checks = {}
    for name, tol in (("sup", args.sup_tol), ("l2", args.l2_tol),
                      ("chi2_per_bin", args.chi2_tol)):
        if tol is not None:
            ok = getattr(metrics, name) <= tol
            checks[name] = {"value": getattr(metrics, name), "tol": tol, "pass": ok}
            verdict = verdict and ok
    report = {"metrics": metrics.as_dict(), "checks": checks,
              "pass": verdict}
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.output:
        with open(_out_path(args.output), "w") as fh:
            fh.write(text + "\n")
    print(text)
    return 0 if verdict else 1


def cmd_oracle(args) -> int:
    if args.n > 3:
        raise SystemExit("the quadrature oracle supports n <= 3")
    if args.beta <= 0:
        raise SystemExit("--beta must be positive")
    grid = None
    if args.r_max is not None:
        if args.observable == "lambda_max":
            grid = np.linspace(-args.r_max, args.r_max, args.points)
        else:
            grid = np.linspace(0.0, args.r_max, args.points)
    curve = small_n_oracle(args.beta, args.n, args.observable, grid=grid)
    meta = {"command": "oracle", "beta": args.beta, "n": args.n,
            "observable": args.observable, "points": len(curve.x),
            "version": __version__}
    out = _out_path(args.output)
    write_xy_csv(out, curve.x, curve.y, meta)
    print(out)
    return 0


def main(argv=None) -> int:
    ap = build_parser()
    args = ap.parse_args(argv)
    try:
        if args.command == "simulate":
            return cmd_simulate(args)
        if args.command == "exact":
            return cmd_exact(args)
        if args.command == "compare":
            return cmd_compare(args)
        if args.command == "oracle":
            return cmd_oracle(args)
    except SystemExit as exc:
        if isinstance(exc.code, str):
            print(f"error: {exc.code}", file=sys.stderr)
            return 2
        raise
    except (ValueError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2  # pragma: no cover


if __name__ == "__main__":
    sys.exit(main())

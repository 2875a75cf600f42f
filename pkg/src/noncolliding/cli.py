"""Command line: evaluate CDF families, run samplers, replay comparisons.

Output is CSV on stdout (or ``--output``): ``#``-prefixed metadata
comment lines (seed, version, resolution), a fixed header row, then data
rows with floats printed to 12 significant digits.  Exit codes: 0 on
success, 1 on numerical non-convergence, 2 on usage errors.
"""

import argparse
import os
import sys
from concurrent.futures import ThreadPoolExecutor

import numpy as np

from . import __version__
from .defaults import DEFAULTS, show_defaults
from .distributions import CdfQuery, evaluate_cdf
from .exceptions import ConvergenceError, DomainError, EvaluationError, ParameterError
from .experiments import EXPERIMENTS, run_experiment
from .kernels import BoundaryFunction
from .montecarlo import (sample_arith_max, sample_blpp, sample_bridge_topmax,
                         sample_dyson_max, sample_loe_max, sample_piflat)
from .rng import RngStream

CDF_FAMILIES = ("arith", "blpp-nw", "blpp-flat", "piflat", "loe", "bridge-allmax",
                "bridge-runmax", "airy", "dyson-edge", "detratio")
SIM_FAMILIES = ("piflat", "loe", "blpp-nw", "blpp-flat", "bridge-topmax", "arith",
                "dyson-max")


class UsageError(Exception):
    pass


def _fmt(v):
    return "%.12g" % float(v)


def _parse_grid(text):
    """'0:2:0.5' -> inclusive range; '1,2,3' -> list; '1.5' -> single value."""
    if ":" in text:
        parts = [float(p) for p in text.split(":")]
        if len(parts) != 3 or parts[2] <= 0:
            raise UsageError("grid syntax is start:stop:step, got %r" % text)
        start, stop, step = parts
        n = int(np.floor((stop - start) / step + 1e-9)) + 1
        return [start + k * step for k in range(n)]
    return [float(p) for p in text.split(",")]


def _parse_list(text):
    return [float(p) for p in text.split(",")]


def _emit(lines, output):
    text = "\n".join(lines) + "\n"
    if output:
        with open(output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _meta(args, seed):
    return ["# noncolliding %s" % __version__,
            "# seed: %d" % seed,
            "# resolution: nodes=%s length=%s"
            % (args.nodes or DEFAULTS["nystrom_nodes_per_slot"], args.length or "auto")]


def _build_query(args, a):
    fam = args.family
    p = {}
    if fam == "piflat":
        if not args.beta:
            raise UsageError("--beta is required for family piflat")
        p = {"beta": args.beta, "a": a}
    elif fam == "loe":
        if args.n is None:
            raise UsageError("--n is required for family loe")
        p = {"n": args.n, "a": a}
    elif fam == "bridge-allmax":
        if args.nu is None:
            raise UsageError("--nu is required for family bridge-allmax")
        p = {"nu": args.nu, "r": a}
    elif fam == "bridge-runmax":
        if args.n is None or args.s is None:
            raise UsageError("--n and --s are required for family bridge-runmax")
        p = {"n": args.n, "s": args.s, "a": a}
    elif fam == "arith":
        if args.delta is None:
            raise UsageError("--delta is required for family arith")
        p = {"delta": args.delta, "a": a}
    elif fam in ("blpp-nw", "blpp-flat"):
        if args.mu is None or args.times is None:
            raise UsageError("--mu and --times are required for family %s" % fam)
        thresholds = [a] * len(args.times)
        p = {"mu": args.mu, "times": args.times, "thresholds": thresholds}
    elif fam == "airy":
        if args.times is None:
            raise UsageError("--times is required for family airy")
        p = {"times": args.times, "thresholds": [a] * len(args.times)}
    elif fam == "dyson-edge":
        if args.nu is None or args.times is None:
            raise UsageError("--nu and --times are required for family dyson-edge")
        p = {"nu": args.nu, "times": args.times, "thresholds": [a] * len(args.times)}
    elif fam == "detratio":
        if not args.beta:
            raise UsageError("--beta is required for family detratio")
        p = {"beta": args.beta, "a": a}
    return CdfQuery(fam, p, nodes=args.nodes, length=args.length)


def cmd_cdf(args, seed):
    if args.family not in CDF_FAMILIES:
        raise UsageError("unknown family %r; known: %s" % (args.family, ", ".join(CDF_FAMILIES)))
    if args.a is None:
        raise UsageError("--a is required (threshold value or grid)")
    grid = args.a
    queries = [_build_query(args, a) for a in grid]
    workers = args.threads or DEFAULTS["threads"]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        values = list(pool.map(evaluate_cdf, queries))
    lines = _meta(args, seed)
    lines.append("threshold,value,resolution,error_estimate")
    nodes = args.nodes or DEFAULTS["nystrom_nodes_per_slot"]
    for a, v in zip(grid, values):
        lines.append(",".join([_fmt(a), _fmt(v), str(nodes), _fmt(0.0)]))
    if args.family == "arith" and args.corollary_n:
        n = args.corollary_n
        lines.append("# corollary thresholds: gamma_1 <= n-1+(a+log(n-1))/2 at n=%d" % n)
        for a in grid:
            lines.append("# a=%s -> %s" % (_fmt(a), _fmt(n - 1 + (a + np.log(n - 1)) / 2.0)))
    _emit(lines, args.output)
    return 0


def _run_sampler(args, seed):
    stream = RngStream(seed, args.stream)
    n = args.samples
    fam = args.family
    if n is None or n < 1:
        raise UsageError("--samples must be a positive count")
    if fam == "piflat":
        if not args.beta:
            raise UsageError("--beta is required for family piflat")
        return sample_piflat(args.beta, stream=stream, samples=n)
    if fam == "loe":
        if args.n is None:
            raise UsageError("--n is required for family loe")
        return sample_loe_max(args.n, stream=stream, samples=n)
    if fam in ("blpp-nw", "blpp-flat"):
        if args.mu is None or args.t is None:
            raise UsageError("--mu and --t are required for family %s" % fam)
        b = BoundaryFunction.narrow_wedge() if fam == "blpp-nw" else BoundaryFunction.flat()
        return sample_blpp(b, args.mu, len(args.mu), args.t,
                           grid_step=args.grid_step, stream=stream, paths=n)
    if fam == "bridge-topmax":
        if args.n is None or args.s is None:
            raise UsageError("--n and --s are required for family bridge-topmax")
        return sample_bridge_topmax(args.n, args.s, nu=args.nu,
                                    grid_step=args.grid_step, stream=stream, paths=n)
    if fam == "arith":
        if args.n is None or args.delta is None:
            raise UsageError("--n and --delta are required for family arith")
        _, resc = sample_arith_max(args.n, args.delta, 0.0, stream=stream, samples=n)
        return resc
    if fam == "dyson-max":
        if args.nu is None or args.times is None:
            raise UsageError("--nu and --times are required for family dyson-max")
        return sample_dyson_max(args.nu, args.times, stream=stream, samples=n)[:, -1]
    raise UsageError("unknown family %r; known: %s" % (fam, ", ".join(SIM_FAMILIES)))


def cmd_simulate(args, seed):
    samples = np.atleast_1d(_run_sampler(args, seed))
    lines = _meta(args, seed)
    if args.ecdf:
        qs = np.linspace(0.0, 1.0, DEFAULTS["ecdf_points"] + 1)[1:]
        grid = np.quantile(samples, qs)
        lines.append("quantile,value")
        for q, v in zip(qs, grid):
            lines.append("%s,%s" % (_fmt(q), _fmt(v)))
    else:
        lines.append("index,value")
        for k, v in enumerate(samples):
            lines.append("%d,%s" % (k, _fmt(v)))
    _emit(lines, args.output)
    return 0


def cmd_compare(args, seed):
    if args.experiment not in EXPERIMENTS:
        raise UsageError("unknown experiment %r; known: %s"
                         % (args.experiment, ", ".join(sorted(EXPERIMENTS))))
    result = run_experiment(args.experiment, seed=seed)
    lines = _meta(args, seed)
    lines.append("label,point,reference,value,deviation")
    for row in result.rows:
        lines.append(",".join(str(r) if isinstance(r, str) else _fmt(r) for r in row))
    lines.append("# max discrepancy: %s  band+allowance: %s"
                 % (_fmt(result.discrepancy), _fmt(result.allowance)))
    lines.append("verdict," + result.verdict())
    _emit(lines, args.output)
    return 0 if result.passed else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="noncolliding",
        description="Fredholm-determinant laws for noncolliding Brownian systems")
    parser.add_argument("--show-defaults", action="store_true",
                        help="print the versioned defaults table and exit")
    sub = parser.add_subparsers(dest="command")

    def common(p):
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--stream", type=int, default=0)
        p.add_argument("--threads", type=int, default=None)
        p.add_argument("--output", default=None)
        p.add_argument("--nodes", type=int, default=None)
        p.add_argument("--length", type=float, default=None)
        p.add_argument("--family", default=None)
        p.add_argument("--beta", type=_parse_list, default=None)
        p.add_argument("--nu", type=_parse_list, default=None)
        p.add_argument("--mu", type=_parse_list, default=None)
        p.add_argument("--times", type=_parse_list, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--s", type=float, default=None)
        p.add_argument("--t", type=float, default=None)
        p.add_argument("--delta", type=float, default=None)
        p.add_argument("--grid-step", type=float, default=None)

    p_cdf = sub.add_parser("cdf", help="evaluate a CDF family on a threshold grid")
    common(p_cdf)
    p_cdf.add_argument("--a", type=_parse_grid, default=None,
                       help="threshold value, comma list, or start:stop:step")
    p_cdf.add_argument("--corollary-n", type=int, default=None,
                       help="with --family arith: also print the positive-definite "
                            "Brownian-motion threshold map at this matrix size")

    p_sim = sub.add_parser("simulate", help="run a sampler and emit samples or an ECDF")
    common(p_sim)
    p_sim.add_argument("--samples", type=int, default=None)
    p_sim.add_argument("--ecdf", action="store_true",
                       help="emit a 1000-point empirical CDF instead of raw samples")

    p_cmp = sub.add_parser("compare", help="run a named determinant-vs-oracle experiment")
    common(p_cmp)
    p_cmp.add_argument("--experiment", default=None)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.show_defaults:
        sys.stdout.write(show_defaults() + "\n")
        return 0
    if args.command is None:
        parser.print_usage(sys.stderr)
        return 2
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("NONCOLLIDING_SEED", DEFAULTS["seed"]))
    try:
        if args.command == "cdf":
            return cmd_cdf(args, seed)
        if args.command == "simulate":
            return cmd_simulate(args, seed)
        if args.command == "compare":
            if args.experiment is None:
                raise UsageError("--experiment is required; known: %s"
                                 % ", ".join(sorted(EXPERIMENTS)))
            return cmd_compare(args, seed)
    except UsageError as exc:
        sys.stderr.write("usage error: %s\n" % exc)
        parser.print_usage(sys.stderr)
        return 2
    except (ParameterError, DomainError) as exc:
        sys.stderr.write("parameter error: %s\n" % exc)
        return 2
    except (ConvergenceError, EvaluationError) as exc:
        sys.stderr.write("numerical error: %s\n" % exc)
        return 1
    return 2


if __name__ == "__main__":
    sys.exit(main())

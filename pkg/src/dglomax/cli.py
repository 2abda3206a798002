"""Command-line front end: tabulation, sampling, moment/entropy reports,
order statistics, dominance comparison and fitting, with CSV or JSON output.

Exit codes: 0 success, 1 usage error, 2 mathematical-domain error
(nonexistence, divergence, truncation, saturation), 3 I/O error.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .dgld import DiscreteGammaLomax
from .errors import DataFormatError, DglomaxError
from .estimate import CountSample, fit_mle
from .glomax import Params
from .ordering import expectation_compare, stochastic_compare
from .orderstats import max_pmf, min_pmf, order_stat_pmf, range_zero_prob


class _UsageError(Exception):
    def __init__(self, message: str, parser: argparse.ArgumentParser):
        super().__init__(message)
        self.parser = parser


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad usage; the interface here reserves
    # 2 for mathematical errors, so usage failures are rerouted to status 1.
    def error(self, message):
        raise _UsageError(message, self)


def _fmt_float(v: float) -> str:
    if math.isnan(v):
        return "NaN"
    if math.isinf(v):
        return "Infinity" if v > 0 else "-Infinity"
    return format(v, ".17g")


def _csv_cell(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fmt_float(float(v))
    return str(v)


def _json_value(v) -> str:
    if v is None:
        return "null"
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return _fmt_float(float(v))
    if isinstance(v, str):
        return '"' + v.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(v, dict):
        items = ", ".join(f"{_json_value(str(k))}: {_json_value(x)}" for k, x in v.items())
        return "{" + items + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v)!r}")


def _serialize(subcommand, params, columns, rows, fmt) -> str:
    if fmt == "csv":
        lines = [",".join(columns)]
        lines.extend(",".join(_csv_cell(v) for v in row) for row in rows)
        return "\n".join(lines) + "\n"
    result = [dict(zip(columns, row)) for row in rows]
    payload = {
        "subcommand": subcommand,
        "params": params,
        "result": result[0] if len(result) == 1 else result,
    }
    return _json_value(payload) + "\n"


def _dist_triple(text: str) -> Params:
    parts = text.split(",")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(
            f"expected c,alpha,theta (three comma-separated numbers); got {text!r}"
        )
    try:
        c, alpha, theta = (float(p) for p in parts)
    except ValueError:
        raise argparse.ArgumentTypeError(f"non-numeric entry in {text!r}")
    return Params(c, alpha, theta)


def _add_dist_flags(p: argparse.ArgumentParser):
    p.add_argument("--c", type=float, required=True, help="tail shape c > 0")
    p.add_argument("--alpha", type=float, required=True, help="gamma shape alpha > 0")
    p.add_argument("--theta", type=float, required=True, help="scale theta > 0")


def _add_output_flags(p: argparse.ArgumentParser):
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="write output to this path")


def _dist_of(args) -> DiscreteGammaLomax:
    return DiscreteGammaLomax(args.c, args.alpha, args.theta)


def _base_params(args) -> dict:
    return {"c": args.c, "alpha": args.alpha, "theta": args.theta}


def _cmd_pmf(args):
    d = _dist_of(args)
    return _base_params(args) | {"x": args.x}, ["x", "pmf"], [[args.x, d.pmf(args.x)]]


def _cmd_cdf(args):
    d = _dist_of(args)
    return _base_params(args) | {"x": args.x}, ["x", "cdf"], [[args.x, d.cdf(args.x)]]


def _cmd_hazard(args):
    d = _dist_of(args)
    return (
        _base_params(args) | {"x": args.x},
        ["x", "hazard"],
        [[args.x, d.hazard(args.x)]],
    )


def _cmd_tabulate(args):
    d = _dist_of(args)
    max_x = args.max_x if args.max_x is not None else d.quantile(0.9999)
    xs = np.arange(max_x + 1, dtype=float)
    pmf, cdf, surv, haz = d.pmf(xs), d.cdf(xs), d.survival(xs), d.hazard(xs)
    rows = [
        [int(x), float(p), float(f), float(s), float(h)]
        for x, p, f, s, h in zip(xs, pmf, cdf, surv, haz)
    ]
    params = _base_params(args) | {"max_x": int(max_x)}
    return params, ["x", "pmf", "cdf", "survival", "hazard"], rows


def _cmd_mode(args):
    d = _dist_of(args)
    return _base_params(args), ["mode"], [[d.mode()]]


def _cmd_quantile(args):
    d = _dist_of(args)
    return (
        _base_params(args) | {"q": args.q},
        ["q", "quantile"],
        [[args.q, d.quantile(args.q)]],
    )


def _cmd_sample(args):
    d = _dist_of(args)
    draws = d.sample(np.random.default_rng(args.seed), size=args.n)
    params = _base_params(args) | {"n": args.n, "seed": args.seed}
    return params, ["x"], [[int(v)] for v in draws]


def _cmd_moments(args):
    d = _dist_of(args)
    tol = args.tol if args.tol is not None else 1e-8
    m = d.moment(args.r, tol)
    params = _base_params(args) | {"r": args.r, "tol": tol}
    return params, ["r", "moment", "bound", "horizon"], [[args.r, m.value, m.bound, m.horizon]]


def _cmd_pgf(args):
    d = _dist_of(args)
    tol = args.tol if args.tol is not None else 1e-10
    g = d.pgf(args.s, tol)
    params = _base_params(args) | {"s": args.s, "tol": tol}
    return params, ["s", "pgf", "bound", "horizon"], [[args.s, g.value, g.bound, g.horizon]]


def _cmd_entropy(args):
    d = _dist_of(args)
    tol = args.tol if args.tol is not None else 1e-6
    h = d.cre_entropy(tol)
    params = _base_params(args) | {"tol": tol}
    return params, ["entropy", "bound", "horizon"], [[h.value, h.bound, h.horizon]]


def _cmd_orderstats(args):
    d = _dist_of(args)
    params = _base_params(args) | {"n": args.n, "i": args.i}
    if args.x is not None:
        rows = [[args.x, order_stat_pmf(d, args.n, args.i, args.x)]]
    else:
        max_x = args.max_x if args.max_x is not None else d.quantile(0.9999)
        xs = np.arange(max_x + 1, dtype=float)
        vals = order_stat_pmf(d, args.n, args.i, xs)
        rows = [[int(x), float(v)] for x, v in zip(xs, vals)]
        params |= {"max_x": int(max_x)}
    return params, ["x", "pmf"], rows


def _cmd_minmax(args):
    comps = [DiscreteGammaLomax.from_params(p) for p in args.dist]
    max_x = args.max_x if args.max_x is not None else max(
        d.quantile(0.9999) for d in comps
    )
    xs = np.arange(max_x + 1, dtype=float)
    mins, maxs = min_pmf(comps, xs), max_pmf(comps, xs)
    rows = [[int(x), float(a), float(b)] for x, a, b in zip(xs, mins, maxs)]
    params = {
        "dists": [{"c": p.c, "alpha": p.alpha, "theta": p.theta} for p in args.dist],
        "max_x": int(max_x),
    }
    return params, ["x", "min_pmf", "max_pmf"], rows


def _cmd_range0(args):
    d = _dist_of(args)
    tol = args.tol if args.tol is not None else 1e-8
    r = range_zero_prob(d, args.n, tol)
    params = _base_params(args) | {"n": args.n, "tol": tol}
    return (
        params,
        ["n", "prob_zero_range", "bound", "horizon"],
        [[args.n, r.value, r.bound, r.horizon]],
    )


def _cmd_compare(args, parser):
    if len(args.dist) != 2:
        raise _UsageError("compare requires exactly two --dist triples", parser)
    d1, d2 = (DiscreteGammaLomax.from_params(p) for p in args.dist)
    tol = args.tol if args.tol is not None else 1e-12
    rep = stochastic_compare(d1, d2, args.horizon, tol)
    mean_first = mean_second = mean_order = None
    if d1.moment_exists(1) and d2.moment_exists(1):
        exp_rep = expectation_compare(d1, d2)
        mean_first, mean_second = exp_rep.mean_first, exp_rep.mean_second
        mean_order = exp_rep.larger
    params = {
        "dists": [{"c": p.c, "alpha": p.alpha, "theta": p.theta} for p in args.dist],
        "tol": tol,
    }
    columns = [
        "direction",
        "horizon",
        "max_gap",
        "gap_location",
        "mean_first",
        "mean_second",
        "mean_order",
    ]
    row = [
        rep.direction,
        rep.horizon,
        rep.max_gap,
        rep.gap_location,
        mean_first,
        mean_second,
        mean_order,
    ]
    return params, columns, [row]


def _read_count_data(path: str) -> CountSample:
    with open(path, encoding="utf-8") as fh:
        lines = fh.read().splitlines()
    stripped = [(i + 1, line.strip()) for i, line in enumerate(lines)]
    stripped = [(ln, text) for ln, text in stripped if text]
    if not stripped:
        raise DataFormatError(f"{path}: no data lines found")
    header_ln, header = stripped[0]
    if header.replace(" ", "").lower() == "value,count":
        pairs = []
        for ln, text in stripped[1:]:
            parts = text.split(",")
            if len(parts) != 2:
                raise DataFormatError(
                    f"{path}: line {ln}: expected 'value,count'; got {text!r}", ln
                )
            try:
                pairs.append((int(parts[0]), int(parts[1])))
            except ValueError:
                raise DataFormatError(
                    f"{path}: line {ln}: non-integer entry in {text!r}", ln
                )
        if not pairs:
            raise DataFormatError(f"{path}: frequency table has no rows")
        return CountSample.from_table(pairs)
    observations = []
    for ln, text in stripped:
        try:
            observations.append(int(text))
        except ValueError:
            raise DataFormatError(
                f"{path}: line {ln}: expected a non-negative integer; got {text!r}", ln
            )
    return CountSample(observations)


def _cmd_fit(args):
    sample = _read_count_data(args.data)
    result = fit_mle(sample, n_starts=args.starts, seed=args.seed)
    p = result.params
    params = {"data": args.data, "starts": args.starts, "seed": args.seed}
    columns = [
        "c",
        "alpha",
        "theta",
        "log_likelihood",
        "aic",
        "converged",
        "iterations",
        "n_starts",
    ]
    row = [
        p.c,
        p.alpha,
        p.theta,
        result.log_likelihood,
        result.aic,
        result.converged,
        result.iterations,
        result.n_starts,
    ]
    return params, columns, [row]


def build_parser() -> _Parser:
    parser = _Parser(prog="dglomax", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, helptext, dist=True, output=True):
        p = sub.add_parser(name, help=helptext)
        if dist:
            _add_dist_flags(p)
        if output:
            _add_output_flags(p)
        return p

    p = add("pmf", "probability mass at x")
    p.add_argument("--x", type=int, required=True)
    p = add("cdf", "cumulative probability at x")
    p.add_argument("--x", type=float, required=True)
    p = add("hazard", "conditional failure probability at x")
    p.add_argument("--x", type=int, required=True)
    p = add("tabulate", "x, pmf, cdf, survival, hazard table")
    p.add_argument("--max-x", type=int, default=None)
    add("mode", "most probable value")
    p = add("quantile", "smallest x with cdf(x) >= q")
    p.add_argument("--q", type=float, required=True)
    p = add("sample", "draw n values")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p = add("moments", "r-th raw moment with certified bound")
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--tol", type=float, default=None)
    p = add("pgf", "probability generating function at s")
    p.add_argument("--s", type=float, required=True)
    p.add_argument("--tol", type=float, default=None)
    p = add("entropy", "cumulative residual entropy")
    p.add_argument("--tol", type=float, default=None)
    p = add("orderstats", "pmf of the i-th order statistic of n draws")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--x", type=int, default=None)
    p.add_argument("--max-x", type=int, default=None)
    p = add("minmax", "pmf of min and max over components", dist=False)
    p.add_argument("--dist", type=_dist_triple, action="append", required=True,
                   help="c,alpha,theta; repeat once per component")
    p.add_argument("--max-x", type=int, default=None)
    p = add("range0", "probability that n iid draws all coincide")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--tol", type=float, default=None)
    p = add("compare", "pointwise survival dominance of two laws", dist=False)
    p.add_argument("--dist", type=_dist_triple, action="append", required=True,
                   help="c,alpha,theta; exactly two")
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--tol", type=float, default=None)
    p = add("fit", "maximum-likelihood fit to a count data file", dist=False)
    p.add_argument("--data", required=True,
                   help="text file: one integer per line, or CSV with header value,count")
    p.add_argument("--starts", type=int, default=8)
    p.add_argument("--seed", type=int, default=0)
    return parser


_HANDLERS = {
    "pmf": _cmd_pmf,
    "cdf": _cmd_cdf,
    "hazard": _cmd_hazard,
    "tabulate": _cmd_tabulate,
    "mode": _cmd_mode,
    "quantile": _cmd_quantile,
    "sample": _cmd_sample,
    "moments": _cmd_moments,
    "pgf": _cmd_pgf,
    "entropy": _cmd_entropy,
    "orderstats": _cmd_orderstats,
    "minmax": _cmd_minmax,
    "range0": _cmd_range0,
    "fit": _cmd_fit,
}


def run(argv=None) -> int:
    """Execute one CLI invocation; returns the process exit status."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as e:
        print(e.parser.format_usage(), end="", file=sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except SystemExit as e:  # --help
        return int(e.code or 0)
    try:
        if args.subcommand == "compare":
            params, columns, rows = _cmd_compare(args, parser)
        else:
            params, columns, rows = _HANDLERS[args.subcommand](args)
    except _UsageError as e:
        print(e.parser.format_usage(), end="", file=sys.stderr)
        print(f"error: {e}", file=sys.stderr)
        return 1
    except DataFormatError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except DglomaxError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except OSError as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    text = _serialize(args.subcommand, params, columns, rows, args.format)
    if args.out is not None:
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 3
    else:
        sys.stdout.write(text)
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

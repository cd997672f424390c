"""Command-line harness for the quasi-interpolation toolkit.

Subcommands regenerate every error table and figure dataset:

  abs-table   |x|-approximation errors/rates for both kernels
  sweep       operator L-infinity errors over (h, c) grids
  rates       convergence-rate ladder at fixed shape parameter
  gibbs       pointwise series near jump discontinuities (f5/f6)
  runge       pointwise series for the steep rational target (f4)
  shape       shape-preservation report for data from a CSV file
  inertia     kernel Gram-matrix inertia
  constants   the numerically solved kernel constants

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys

import numpy as np

from . import absapprox, bench, shape
from .kernels import Family, KernelSpec
from .quasi import NodeGrid, SampleSet, build

__all__ = ["main"]


def _floats(text):
    try:
        return tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated floats: {text!r}")


def _families(text):
    try:
        return tuple(Family(t.strip().lower()) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected kernels from mq,rth: {text!r}")


def _write_or_print(write_fn, out_path):
    """Run `write_fn(path_or_buffer)`; print to stdout when no path given."""
    if out_path:
        write_fn(out_path)
    else:
        buf = io.StringIO()
        write_fn(buf)
        sys.stdout.write(buf.getvalue())


def _emit_csv_any(records, target):
    # bench.emit_csv opens paths itself; route StringIO through a shim
    if isinstance(target, io.StringIO):
        import tempfile, os

        with tempfile.NamedTemporaryFile("r", suffix=".csv", delete=False) as tmp:
            name = tmp.name
        try:
            bench.emit_csv(records, name)
            with open(name, "r", encoding="utf-8") as fh:
                target.write(fh.read())
        finally:
            os.unlink(name)
    else:
        bench.emit_csv(records, target)


def _read_xy_csv(path):
    xs, fs = [], []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            if not row or row[0].startswith("#"):
                continue
            try:
                x, f = float(row[0]), float(row[1])
            except (ValueError, IndexError):
                continue  # header or malformed row
            xs.append(x)
            fs.append(f)
    if len(xs) < 4:
        raise ValueError(f"{path}: need at least 4 numeric x,f rows")
    return np.array(xs), np.array(fs)


def _cmd_abs_table(args):
    rows = absapprox.abs_error_table(args.n, args.cs, args.kernels)

    def write(target):
        fh = open(target, "w", newline="", encoding="utf-8") if isinstance(target, str) else target
        try:
            w = csv.writer(fh, lineterminator="\n")
            w.writerow(["kernel", "n", "c", "linf_error", "r_c"])
            for r in rows:
                w.writerow(
                    [
                        r.family.value,
                        r.n,
                        f"{r.c:.5e}",
                        f"{r.linf_error:.5e}",
                        "" if r.rate_rc is None else f"{r.rate_rc:.5e}",
                    ]
                )
        finally:
            if isinstance(target, str):
                fh.close()

    _write_or_print(write, args.out)


def _cmd_sweep(args):
    config = bench.ExperimentConfig(
        function_id=args.fn, family=args.kernel, c_list=args.c, h_list=args.h, m=args.m
    )
    records = bench.run_error_sweep(config)
    _write_or_print(lambda t: _emit_csv_any(records, t), args.out)


def _cmd_rates(args):
    config = bench.ExperimentConfig(
        function_id=args.fn, family=args.kernel, c_list=(args.c,), h_list=args.h, m=args.m
    )
    rows = bench.run_rate_study(config)
    _write_or_print(lambda t: _emit_csv_any(rows, t), args.out)


def _cmd_gibbs(args):
    series = bench.run_gibbs_study(args.fn, args.c, args.h, args.m)
    _write_or_print(lambda t: _emit_csv_any(series, t), args.out)


def _cmd_runge(args):
    series = bench.run_runge_study(args.h, args.c, args.m)
    _write_or_print(lambda t: _emit_csv_any(series, t), args.out)


def _cmd_shape(args):
    x, f = _read_xy_csv(args.fn_data)
    q = build(SampleSet(NodeGrid(x), f), KernelSpec(Family(args.kernel), args.c))
    report = shape.shape_report(q, args.samples)
    print(f"data_monotone_sign={report.data_monotone_sign.value}")
    print(f"min_d1={report.min_d1:.5e}")
    print(f"max_d1={report.max_d1:.5e}")
    print(f"data_convex_sign={report.data_convex_sign.value}")
    print(f"min_d2_at_nodes={report.min_d2_at_nodes:.5e}")
    print(f"min_d2_on_grid={report.min_d2_on_grid:.5e}")
    print(f"sample_count={report.sample_count}")


def _cmd_inertia(args):
    spec_words = args.nodes
    if spec_words[0] == "uniform":
        if len(spec_words) != 4:
            raise ValueError("uniform grid spec is: uniform <a> <b> <n>")
        a, b, n = float(spec_words[1]), float(spec_words[2]), int(spec_words[3])
        nodes = np.linspace(a, b, n)
    else:
        if len(spec_words) != 1:
            raise ValueError("pass one CSV path or: uniform <a> <b> <n>")
        nodes = _read_nodes_csv(spec_words[0])
    result = shape.gram_inertia(nodes, KernelSpec(Family(args.kernel), args.c))
    print(f"{result.n_positive},{result.n_negative},{result.n_zero}")


def _read_nodes_csv(path):
    vals = []
    with open(path, newline="", encoding="utf-8") as fh:
        for row in csv.reader(fh):
            for cell in row:
                try:
                    vals.append(float(cell))
                except ValueError:
                    continue
    if len(vals) < 2:
        raise ValueError(f"{path}: need at least 2 numeric node values")
    return np.array(vals)


def _cmd_constants(args):
    k = absapprox.solve_extremum_constants()
    print(f"t_star={k.t_star:.12f}")
    print(f"err_coeff={k.err_coeff:.12f}")
    print(f"xi={k.xi:.12f}")


def _build_parser():
    p = argparse.ArgumentParser(prog="rbfqi", description=__doc__,
                                formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("abs-table", help="|x|-approximation error table")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--cs", type=_floats, required=True)
    sp.add_argument("--kernels", type=_families, default=(Family.MQ, Family.RTH))
    sp.add_argument("--out")
    sp.set_defaults(run=_cmd_abs_table)

    sp = sub.add_parser("sweep", help="operator error sweep over (h, c)")
    sp.add_argument("--fn", required=True, choices=sorted(bench.TEST_FUNCTIONS))
    sp.add_argument("--kernel", required=True, choices=["mq", "rth"])
    sp.add_argument("--h", type=_floats, required=True)
    sp.add_argument("--c", type=_floats, required=True)
    sp.add_argument("--m", type=int, default=200)
    sp.add_argument("--out")
    sp.set_defaults(run=_cmd_sweep)

    sp = sub.add_parser("rates", help="convergence-rate ladder")
    sp.add_argument("--fn", required=True, choices=sorted(bench.TEST_FUNCTIONS))
    sp.add_argument("--kernel", default="rth", choices=["mq", "rth"])
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--h", type=_floats, required=True)
    sp.add_argument("--m", type=int, default=200)
    sp.add_argument("--out")
    sp.set_defaults(run=_cmd_rates)

    sp = sub.add_parser("gibbs", help="jump-discontinuity series (f5/f6)")
    sp.add_argument("--fn", required=True, choices=["f5", "f6"])
    sp.add_argument("--h", type=float, required=True)
    sp.add_argument("--c", type=_floats, required=True)
    sp.add_argument("--m", type=int, default=1000)
    sp.add_argument("--out")
    sp.set_defaults(run=_cmd_gibbs)

    sp = sub.add_parser("runge", help="steep-rational endpoint series (f4)")
    sp.add_argument("--h", type=_floats, required=True)
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--m", type=int, default=1000)
    sp.add_argument("--out")
    sp.set_defaults(run=_cmd_runge)

    sp = sub.add_parser("shape", help="shape report for x,f data from CSV")
    sp.add_argument("--fn-data", dest="fn_data", required=True)
    sp.add_argument("--kernel", default="rth", choices=["mq", "rth"])
    sp.add_argument("--c", type=float, required=True)
    sp.add_argument("--samples", type=int, default=500)
    sp.set_defaults(run=_cmd_shape)

    sp = sub.add_parser("inertia", help="kernel Gram-matrix inertia")
    sp.add_argument("--nodes", nargs="+", required=True,
                    metavar="CSV|uniform a b n")
    sp.add_argument("--kernel", default="rth", choices=["mq", "rth"])
    sp.add_argument("--c", type=float, required=True)
    sp.set_defaults(run=_cmd_inertia)

    sp = sub.add_parser("constants", help="numerically solved kernel constants")
    sp.set_defaults(run=_cmd_constants)

    return p


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        args.run(args)
    except (ValueError, TypeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return 3
    return 0


if __name__ == "__main__":
    sys.exit(main())

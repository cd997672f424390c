"""Benchmark harness: test functions, error sweeps, rate studies, and the
jump/endpoint oscillation experiments, with CSV emission.

Grid conventions (used consistently for nodes and evaluation points):

* node grid: a, a+h, ..., b with (b-a)/h required to be integral;
* evaluation grid: m equidistant subintervals of [a, b], i.e. m+1 points
  including both endpoints, spacing (b-a)/m.

The evaluation spacing (b-a)/m was calibrated against the reference error
tables: it lands evaluation points on the nodes whenever h divides
(b-a)/m, which is what makes the near-machine-precision entries at very
small shape parameters reproducible.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .kernels import Family, KernelSpec
from .quasi import NodeGrid, SampleSet, build

__all__ = [
    "TestFunction",
    "TEST_FUNCTIONS",
    "ErrorRecord",
    "RateRow",
    "PointwiseSeries",
    "ExperimentConfig",
    "eval_grid",
    "linf_error",
    "run_error_sweep",
    "run_rate_study",
    "run_gibbs_study",
    "run_runge_study",
    "emit_csv",
]


@dataclass(frozen=True)
class TestFunction:
    id: str
    domain: tuple
    fn: object

    def __call__(self, x):
        return self.fn(np.asarray(x, dtype=float))


def _f5(x):
    # value 1 on the whole closed plateau; the ramp and plateau agree at 0.3
    return np.where(x <= 0.3, 10.0 * x / 3.0, np.where(x <= 0.6, 1.0, 0.0))


def _f6(x):
    # at x=0 we take the right limit cos(0)=1
    return np.where(x < 0, np.sin(x), np.cos(x))


TEST_FUNCTIONS = {
    "f1": TestFunction("f1", (-3.0, 3.0), lambda x: np.sinh(x) / (1.0 + np.cosh(x))),
    "f2": TestFunction(
        "f2", (-4.0, 4.0),
        lambda x: np.sin(x / 2.0) - 2.0 * np.cos(x) + 4.0 * np.sin(np.pi * x),
    ),
    "f3": TestFunction("f3", (-3.0, 3.0), lambda x: 10.0 * np.exp(-(x**2)) + x**2),
    "f4": TestFunction("f4", (-1.0, 1.0), lambda x: 1.0 / (1.0 + 25.0 * x**2)),
    "f5": TestFunction("f5", (0.0, 1.0), _f5),
    "f6": TestFunction("f6", (-1.0, 1.0), _f6),
}

# jump discontinuities used by the oscillation experiments
_JUMPS = {"f5": (0.6,), "f6": (0.0,)}


@dataclass(frozen=True)
class ErrorRecord:
    kernel: str
    fn: str
    h: float
    c: float
    m: int
    linf_error: float


@dataclass(frozen=True)
class RateRow:
    h: float
    linf_error: float
    r_h: float | None


@dataclass(frozen=True)
class PointwiseSeries:
    """Per-point columns plus the statistics attached to one (h, c) run."""

    label: str                  # e.g. "c=1e-3" or "h=0.02"
    x: np.ndarray
    f: np.ndarray
    lf: np.ndarray
    abs_err: np.ndarray = field(init=False)
    rel_err: np.ndarray = field(init=False)
    stats: dict = field(default_factory=dict)

    def __post_init__(self):
        abs_err = np.abs(self.lf - self.f)
        # relative error normalized by max|f| over the grid; avoids
        # division by zero at roots of f
        scale = float(np.max(np.abs(self.f)))
        object.__setattr__(self, "abs_err", abs_err)
        object.__setattr__(self, "rel_err", abs_err / scale if scale else abs_err)


@dataclass(frozen=True)
class ExperimentConfig:
    function_id: str
    family: Family = Family.RTH
    c_list: tuple = ()
    h_list: tuple = ()
    m: int = 200

    def __post_init__(self):
        if self.function_id not in TEST_FUNCTIONS:
            raise ValueError(f"unknown test function {self.function_id!r}")
        object.__setattr__(self, "family", Family(self.family))
        if self.m < 2:
            raise ValueError("m must be >= 2")
        if any(c <= 0 for c in self.c_list):
            raise ValueError("all shape parameters must be positive")
        if any(h <= 0 for h in self.h_list):
            raise ValueError("all mesh sizes must be positive")


def eval_grid(a, b, m):
    """m+1 equidistant points on [a, b] inclusive (spacing (b-a)/m)."""
    return np.linspace(a, b, int(m) + 1)


def _node_grid(a, b, h):
    k = (b - a) / h
    if abs(k - round(k)) > 1e-9 * max(1.0, abs(k)):
        raise ValueError(f"(b-a)/h = {k} is not an integer; refusing to adjust h")
    return NodeGrid.uniform(a, b, round(k))


def _operator(tf: TestFunction, family, h, c):
    a, b = tf.domain
    grid = _node_grid(a, b, h)
    return build(SampleSet.from_function(grid, tf), KernelSpec(Family(family), c))


def linf_error(function_id, family, h, c, m=200):
    """Max |Lf - f| over the evaluation grid for one configuration."""
    tf = TEST_FUNCTIONS[function_id]
    a, b = tf.domain
    q = _operator(tf, family, h, c)
    xe = eval_grid(a, b, m)
    return float(np.max(np.abs(q(xe) - tf(xe))))


def run_error_sweep(config: ExperimentConfig):
    """One ErrorRecord per (h, c) pair, h outer, c inner; deterministic."""
    records = []
    for h in config.h_list:
        for c in config.c_list:
            err = linf_error(config.function_id, config.family, h, c, config.m)
            records.append(
                ErrorRecord(
                    kernel=config.family.value,
                    fn=config.function_id,
                    h=float(h),
                    c=float(c),
                    m=config.m,
                    linf_error=err,
                )
            )
    return records


def run_rate_study(config: ExperimentConfig):
    """Errors over a strictly decreasing h ladder at a single c, plus the
    pairwise convergence rates ln(E_i/E_{i-1}) / ln(h_i/h_{i-1})."""
    if len(config.c_list) != 1:
        raise ValueError("rate study needs exactly one shape parameter")
    hs = list(config.h_list)
    if any(h2 >= h1 for h1, h2 in zip(hs, hs[1:])):
        raise ValueError("h ladder must be strictly decreasing")
    c = config.c_list[0]
    errs = [linf_error(config.function_id, config.family, h, c, config.m) for h in hs]
    rows = [RateRow(h=float(hs[0]), linf_error=errs[0], r_h=None)]
    for i in range(1, len(hs)):
        rate = math.log(errs[i] / errs[i - 1]) / math.log(hs[i] / hs[i - 1])
        rows.append(RateRow(h=float(hs[i]), linf_error=errs[i], r_h=rate))
    return rows


def _overshoot(tf, xe, lf, h, c):
    """max(Lf) - max(f) near each jump.

    The overshoot lobe sits at a distance of order max(h, c) from the
    jump, so the window half-width is 5*max(h, c); a fixed 5h window
    misses the lobe entirely once c >> h.
    """
    out = {}
    f = tf(xe)
    for jump in _JUMPS[tf.id]:
        win = np.abs(xe - jump) <= 5.0 * max(h, c)
        out[jump] = float(np.max(lf[win]) - np.max(f[win]))
    return out


def run_gibbs_study(function_id, c_list, h, m=1000):
    """Pointwise series per shape parameter for a discontinuous target,
    with the per-jump overshoot statistic attached."""
    if function_id not in _JUMPS:
        raise ValueError("jump experiment is defined for f5 and f6 only")
    tf = TEST_FUNCTIONS[function_id]
    a, b = tf.domain
    xe = eval_grid(a, b, m)
    series = []
    for c in c_list:
        q = _operator(tf, Family.RTH, h, c)
        lf = q(xe)
        series.append(
            PointwiseSeries(
                label=f"c={c:g}",
                x=xe,
                f=tf(xe),
                lf=lf,
                stats={"overshoot": _overshoot(tf, xe, lf, h, c)},
            )
        )
    return series


def run_runge_study(h_list, c, m=1000):
    """Pointwise series per mesh size for the steep rational target, with
    the end-region (|x| >= 0.8) max error attached."""
    tf = TEST_FUNCTIONS["f4"]
    a, b = tf.domain
    xe = eval_grid(a, b, m)
    end = np.abs(xe) >= 0.8
    series = []
    for h in h_list:
        q = _operator(tf, Family.RTH, h, c)
        lf = q(xe)
        err = np.abs(lf - tf(xe))
        series.append(
            PointwiseSeries(
                label=f"h={h:g}",
                x=xe,
                f=tf(xe),
                lf=lf,
                stats={
                    "end_region_max_err": float(np.max(err[end])),
                    "global_max_err": float(np.max(err)),
                },
            )
        )
    return series


# -- CSV emission ----------------------------------------------------------

def _fmt(v):
    if v is None:
        return ""
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, float):
        return f"{v:.5e}"  # 6 significant digits
    return str(v)


def _stat_comment(s: PointwiseSeries):
    parts = []
    for key, val in s.stats.items():
        if isinstance(val, dict):
            for jump, ov in val.items():
                parts.append(f"{key}[jump={jump:g}]={ov:.5e}")
        else:
            parts.append(f"{key}={val:.5e}")
    return f"# {s.label} " + " ".join(parts)


def emit_csv(records, path):
    """Write records to a UTF-8 CSV with a fixed header per record type.

    Floats use scientific notation with 6 significant digits; output is
    byte-identical across reruns of the same inputs.  Pointwise series are
    grouped under comment lines carrying the series label and statistics,
    including the relative-error normalization note.
    """
    if not records:
        raise ValueError("no records to write")
    try:
        with open(path, "w", newline="", encoding="utf-8") as fh:
            w = csv.writer(fh, lineterminator="\n")
            first = records[0]
            if isinstance(first, ErrorRecord):
                w.writerow(["kernel", "fn", "h", "c", "m", "linf_error"])
                for r in records:
                    w.writerow(
                        [r.kernel, r.fn, _fmt(r.h), _fmt(r.c), r.m, _fmt(r.linf_error)]
                    )
            elif isinstance(first, RateRow):
                w.writerow(["h", "linf_error", "r_h"])
                for r in records:
                    w.writerow([_fmt(r.h), _fmt(r.linf_error), _fmt(r.r_h)])
            elif isinstance(first, PointwiseSeries):
                fh.write("# rel_err = abs_err / max|f| over the evaluation grid\n")
                w.writerow(["x", "f", "Lf", "abs_err", "rel_err"])
                for s in records:
                    fh.write(_stat_comment(s) + "\n")
                    for row in zip(s.x, s.f, s.lf, s.abs_err, s.rel_err):
                        w.writerow([_fmt(float(v)) for v in row])
            else:
                raise TypeError(f"unknown record type {type(first).__name__}")
    except OSError as exc:
        raise OSError(f"cannot write {path}: {exc}") from exc

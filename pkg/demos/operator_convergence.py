"""Build the quasi-interpolation operator and measure its convergence.

The operator needs no linear solve: its coefficients are the data values
themselves, it reproduces linear polynomials exactly, and it converges at
O(h^2) while the mesh error dominates the shape-parameter floor.
"""

import numpy as np

from rbfqi import (
    ExperimentConfig,
    Family,
    KernelSpec,
    NodeGrid,
    SampleSet,
    build,
    run_error_sweep,
    run_rate_study,
)

# -- direct use on a single grid ------------------------------------------
grid = NodeGrid.uniform(0.0, 3.0, 30)
samples = SampleSet.from_function(grid, np.exp)
q = build(samples, KernelSpec(Family.RTH, c=0.01))

x = np.linspace(0.0, 3.0, 7)
print("exp(x) on [0,3], h=0.1, c=0.01")
print(f"{'x':>5} {'f(x)':>10} {'Lf(x)':>10} {'abs err':>10}")
for xi, fi, li in zip(x, np.exp(x), q(x)):
    print(f"{xi:5.2f} {fi:10.5f} {li:10.5f} {abs(fi - li):10.2e}")
print()

# linear reproduction is exact (up to round-off)
lin = SampleSet.from_function(grid, lambda t: 3.0 * t - 1.0)
ql = build(lin, KernelSpec(Family.RTH, c=0.01))
print("linear data 3x-1: max deviation",
      f"{np.max(np.abs(ql(x) - (3.0 * x - 1.0))):.2e}")
print()

# -- error sweep over (h, c) for a library test function ------------------
cfg = ExperimentConfig("f1", Family.RTH, c_list=(0.05, 0.01), h_list=(0.1, 0.01))
print("L-inf errors for f1 = exp(x)*sin(2x) on [0,3]")
for rec in run_error_sweep(cfg):
    print(f"  h={rec.h:<6g} c={rec.c:<6g} err={rec.linf_error:.3e}")
print()

# -- empirical order in h -------------------------------------------------
cfg = ExperimentConfig("f1", Family.RTH, c_list=(0.001,),
                       h_list=(0.2, 0.1, 0.05, 0.025))
print("mesh-refinement ladder, c=0.001 (rate ~ 2 while mesh error dominates)")
for row in run_rate_study(cfg):
    rate = "" if row.r_h is None else f"  r_h={row.r_h:.3f}"
    print(f"  h={row.h:<7g} err={row.linf_error:.3e}{rate}")

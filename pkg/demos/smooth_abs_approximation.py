"""How well do the smooth kernels approximate |x|, and how fast in c?

Both kernels are uniform smoothings of the absolute value: the
multiquadric sqrt(x^2 + c^2) overshoots |x| by at most c, while the
hyperbolic-tangent kernel x*tanh(x/c) undershoots by at most ~0.2785*c.
This script prints the worst-case gap on a grid, the empirical rate in c,
and the exact constants behind the tanh bound.
"""

import numpy as np

from rbfqi import (
    Family,
    abs_error_table,
    faster_convergence_ratio,
    solve_extremum_constants,
)

consts = solve_extremum_constants()
print("extremum constants for the tanh kernel bound")
print(f"  t_star    = {consts.t_star:.10f}   (argmax of |x| - x*tanh(x/c), scaled)")
print(f"  err_coeff = {consts.err_coeff:.10f}   (sup gap / c)")
print(f"  xi        = {consts.xi:.9f}    (convexity radius / c)")
print()

c_list = [0.1, 0.05, 0.025, 0.0125, 0.00625]
rows = abs_error_table(100, c_list)
print("sup |phi_c(x) - |x||  on 100 equispaced points of [-10, 10]")
print(f"{'family':>6} {'c':>9} {'linf_error':>12} {'rate_rc':>8}")
for row in rows:
    rate = "" if row.rate_rc is None else f"{row.rate_rc:8.4f}"
    print(f"{row.family.value:>6} {row.c:9.5f} {row.linf_error:12.4e} {rate}")
print()

# Away from the kink the tanh kernel converges faster than any power of c;
# the signed ratio (tanh gap)/(MQ gap) collapses toward 0.
print("gap ratio tanh/MQ at x=0.8 (negative: tanh undershoots, MQ overshoots)")
for c in (0.4, 0.2, 0.1, 0.05):
    r = faster_convergence_ratio(0.8, c)
    print(f"  c={c:<5g} ratio={r: .3e}")

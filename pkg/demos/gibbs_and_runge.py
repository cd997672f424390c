"""Two classic failure modes, and how the operator behaves on them.

Gibbs: near a jump, smooth approximants overshoot; here the overshoot dies
off as the shape parameter c shrinks instead of persisting.  Runge: on
equispaced nodes a step function of mesh sizes shows the end-region error
falling with h rather than oscillating.
"""

from rbfqi import run_gibbs_study, run_runge_study

print("Gibbs study: step-like target (jump at x=0.6), h=0.02")
print("overshoot above the upper plateau near the jump, by shape parameter")
for s in run_gibbs_study("f5", c_list=(0.1, 0.05, 0.02, 0.01, 0.001), h=0.02):
    over = max(s.stats["overshoot"].values())
    print(f"  {s.label:<9s} overshoot={over:.4f}")
print()

print("Gibbs study: truncated cosine (jump at x=0), h=0.02")
for s in run_gibbs_study("f6", c_list=(0.1, 0.05, 0.02, 0.01, 0.001), h=0.02):
    over = max(s.stats["overshoot"].values())
    print(f"  {s.label:<9s} overshoot={over:.4f}")
print()

print("Runge study: 1/(1+25x^2) on equispaced nodes, c=0.01")
print("max error on the end region |x| >= 0.8 vs mesh size")
for s in run_runge_study(h_list=(0.1, 0.05, 0.02, 0.01), c=0.01):
    print(f"  {s.label:<8s} end-region={s.stats['end_region_max_err']:.3e}"
          f"  global={s.stats['global_max_err']:.3e}")

"""Local and global squarefree densities.

alpha(5) = 437/3125 three independent ways; the volume identity defines
beta and Monte Carlo over the length-2 ring confirms it; the truncated
global product matches the empirical in_XD fraction.
"""

from d4vinberg.densities import (
    alpha_bruteforce,
    alpha_closed_form,
    alpha_v,
    beta_v,
    delta_b_montecarlo,
    delta_b_tail_bound,
    delta_b_truncated,
)
from d4vinberg.fields import GF

print("alpha(5): lift strategy =", alpha_v(5))
print("          brute force   =", alpha_bruteforce(5))
print("          closed form   =", alpha_closed_form(5))
print()

rep = beta_v(5, mc=(100000, 0))
print("beta(5) =", rep.beta, "  identity residual:", rep.identity_residual)
print("Monte Carlo:", rep.mc_estimate["mean"], "+-", round(rep.mc_estimate["stderr"], 6),
      f"({rep.mc_estimate['deviation_sigmas']:.2f} sigma)")
print()

for k in (1, 2, 4, 6):
    print(f"delta_B truncated at degree {k}: {float(delta_b_truncated(5, k)):.6f}")
print("tail bound beyond degree 6:", float(delta_b_tail_bound(5, 6)))
frac, stderr, hits = delta_b_montecarlo(GF(5), 3, 20000, 0)
print(f"Monte Carlo in_XD fraction (d = 3): {frac} +- {stderr:.5f}")

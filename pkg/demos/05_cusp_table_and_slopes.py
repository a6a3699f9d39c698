"""The cusp-cutting table and the geography of trivial classes.

C0 has exactly eleven upward-closed sets; every row passes both boundary
conditions; the trivial classes sit in Lambda_B^pos with lowest twisted
slope -4 deg D (the reference constant -2 deg D is reported alongside).
"""

from d4vinberg.hnweights import (
    boundary_tail_bound,
    enumerate_c0,
    parabolic_stable_sets,
    trivial_inv_slopes,
    verify_cusp_table,
)

rows = verify_cusp_table()
print("C0 =", [tuple(sorted(m)) for m in enumerate_c0()])
print()
print("M          lambda(M)   |M|  2w(M)            p              2w(M,p)")
for r in rows:
    print(f"{str(r.m_set):10s} {str(r.lambda_m):11s} {r.size}   "
          f"{tuple(str(x) for x in r.w2)!s:16s} {tuple(str(x) for x in r.p)!s:14s} "
          f"{tuple(str(x) for x in r.wp2)}")
print()
print("only", [tuple(sorted(m)) for m in parabolic_stable_sets()],
      "is stable under the a_1-sign involution (the parabolic case)")
print()
for d in (1, 2, 3):
    sigma, hn, pos, lowest, rep = trivial_inv_slopes("e", d)
    print(f"deg D = {d}: sigma = {tuple(str(c) for c in sigma.coords)}, "
          f"lowest slope {lowest} (reference constant {rep['reference_constant']}), "
          f"positive chamber: {pos}")
print()
b1 = boundary_tail_bound((1, 2), 1, 40, 23)
b2 = boundary_tail_bound((1, 2), 2, 40, 23)
print("tail bound for M = {1,2}: d=1:", b1.to_float(), " d=2:", b2.to_float(),
      " (rational upper bound:", float(b1.upper_bound()), ")")

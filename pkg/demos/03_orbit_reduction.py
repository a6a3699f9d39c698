"""Constructive reduction of trivial elements to the Kostant section.

Plants v = u t (w kappa_b) with random torus and unipotent parts, then
recovers w together with an exactly certified group word.
"""

from d4vinberg import GF, D4Context, Invariants, TorusGen, UnipGen, WeylGen
from d4vinberg.liealg import G_SIMPLE
from d4vinberg.orbits import pattern_classify, reduce_trivial
from d4vinberg.quartic import quartic_disc
from d4vinberg.rng import det_rng

ctx = D4Context(GF(23))
inv = Invariants(ctx)
F = ctx.field
rng = det_rng(0, "demo-orbits")

for planted in ("e", "s13.24"):
    while True:
        b = tuple(F.random(rng) for _ in range(4))
        if quartic_disc(b):
            break
    target = ctx.act(WeylGen(planted), inv.kostant_section(b))
    t = TorusGen([F.random_nonzero(rng) for _ in range(4)])
    unips = [UnipGen(tuple(-x for x in a), F.random(rng)) for a in G_SIMPLE]
    v = ctx.act(unips + [t], target)
    print("planted w =", planted)
    print("  vanishing pattern:", pattern_classify(v))
    res = reduce_trivial(inv, v)
    print("  recovered w =", res.w_name, " certified:", res.certified)
    print()

generic = ctx.act(TorusGen([F.elem(2)] * 4), inv.kostant_section((1, 2, 3, 4)))
print("kappa at b=(1,2,3,4), pushed by a torus element, classifies as:",
      pattern_classify(generic).kind)

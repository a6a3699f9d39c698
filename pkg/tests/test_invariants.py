import json

import pytest

from d4vinberg import linalg
from d4vinberg.fields import GF
from d4vinberg.invariants import Invariants, primitives
from d4vinberg.liealg import D4Context, VElem, TorusGen, RHO_CHECK, pairing
from d4vinberg.linalg import mat_mul
from d4vinberg.quartic import quartic_disc
from d4vinberg.rng import det_rng


def setup_module(module):
    module.ctx = D4Context(GF(23))
    module.inv = Invariants(module.ctx)
    module.F = module.ctx.field


def test_gate_below_23():
    with pytest.raises(ValueError):
        Invariants(D4Context(GF(19)))


def test_primitive_consistency_pf_squared():
    rng = det_rng(0, "inv-prim")
    for _ in range(50):
        v = VElem(ctx, [F.random(rng) for _ in range(16)])
        m = v.to_matrix()
        c2, c4, pf, c6 = primitives(ctx, v)
        c8 = linalg.det(F, m)
        assert pf * pf == c8
        # odd power traces vanish on so(Psi)
        m3 = mat_mul(mat_mul(m, m), m)
        tr = F.zero
        for i in range(8):
            tr = tr + m3[i][i]
        assert not tr


def test_even_charpoly_matches_berkowitz():
    rng = det_rng(1, "inv-charpoly")
    for _ in range(10):
        v = VElem(ctx, [F.random(rng) for _ in range(16)])
        m = v.to_matrix()
        c2, c4, c6, c8 = linalg.even_charpoly(F, m)
        full = linalg.charpoly_berkowitz(F, m)
        assert [x.val for x in full] == [
            c8.val, 0, c6.val, 0, c4.val, 0, c2.val, 0, 1
        ]


def test_calibration_is_canonical_diagonal():
    # lexicographically least valid calibration: unit diagonal ansatz
    assert [c.val for c in inv._u_p] == [1, 1, 1, 0, 0, 1, 0, 0, 0]
    data = json.loads(inv.calibration_json())
    assert data["p"] == 23
    assert len(data["Z"]) == 4 and len(data["W"]) == 5


def test_pi_of_nilpotents_is_zero():
    zero4 = (F.zero,) * 4
    assert inv.pi(VElem(ctx, [F.zero] * 16)) == zero4
    assert inv.pi(ctx.E) == zero4
    assert inv.pi(inv.e) == zero4


def test_kostant_round_trip_100():
    rng = det_rng(2, "inv-kostant")
    for _ in range(100):
        b = tuple(F.random(rng) for _ in range(4))
        assert inv.pi(inv.kostant_section(b)) == b
    assert inv.kostant_section((0, 0, 0, 0)) == ctx.E


def test_kostant_scaling_covariance():
    rng = det_rng(3, "inv-scaling")
    for _ in range(100):
        b = tuple(F.random(rng) for _ in range(4))
        lam = F.random_nonzero(rng)
        lb = (lam**2 * b[0], lam**4 * b[1], lam**4 * b[2], lam**6 * b[3])
        rho_inv = inv.rho_torus(lam.inverse())
        assert inv.kostant_section(lb) == ctx.act(
            rho_inv, inv.kostant_section(b).scale(lam)
        )


def test_kostant_classification():
    rng = det_rng(4, "inv-classify")
    while True:
        b = tuple(F.random(rng) for _ in range(4))
        if quartic_disc(b):
            break
    kb = inv.kostant_section(b)
    assert ctx.classify(kb) == {"regular": True, "semisimple": True, "rs": True}
    assert ctx.centralizer_dim(kb, "g") == 0
    assert ctx.centralizer_dim(kb, "h") == 4


def test_slice_relation_and_charts():
    rng = det_rng(5, "inv-slice")
    for _ in range(100):
        cs = [F.random(rng) for _ in range(5)]
        v = inv.slice_param(cs)
        x, y, b = inv.slice_coords(v)
        assert y * (x * y + 2 * b[2]) == x**3 + b[0] * x * x + b[1] * x + b[3]
        assert inv.slice_lift(b, x, y) == v
    assert inv.slice_coords(inv.e) == (F.zero, F.zero, (F.zero,) * 4)


def test_slice_lift_rejects_off_curve():
    # (0, 0) is not on y(xy + 2 q4) = x^3 + ... + p6 when p6 != 0
    with pytest.raises(ValueError):
        inv.slice_lift((F.zero, F.zero, F.zero, F.one), F.zero, F.zero)


def test_slice_membership_enforced():
    rng = det_rng(6, "inv-slice-bad")
    v = VElem(ctx, [F.random(rng) for _ in range(16)])
    if v - inv.e not in [None]:  # generic v is off the slice
        with pytest.raises(ValueError):
            inv.slice_coords(v)


def test_slice_weight_two_scaling():
    # the contraction scales (x, y) by t^2
    rng = det_rng(7, "inv-slice-weight")
    cs = [F.random(rng) for _ in range(5)]
    lam = F.elem(3)
    scaled = [lam**2 * cs[0], lam**2 * cs[1], lam**2 * cs[2], lam**4 * cs[3], lam**4 * cs[4]]
    x1, y1, _ = inv.slice_coords(inv.slice_param(cs))
    x2, y2, _ = inv.slice_coords(inv.slice_param(scaled))
    assert (x2, y2) == (lam**2 * x1, lam**2 * y1)


def test_homogeneity():
    rng = det_rng(8, "inv-homog")
    for _ in range(50):
        v = VElem(ctx, [F.random(rng) for _ in range(16)])
        lam = F.random_nonzero(rng)
        b = inv.pi(v)
        assert inv.pi(v.scale(lam)) == (
            lam**2 * b[0], lam**4 * b[1], lam**4 * b[2], lam**6 * b[3]
        )


def test_subregular_weights():
    # z_V(f) has graded dimensions (3, 2) at contraction weights (2, 4)
    weights = [  # ad-lambda weight of each W basis vector
        next(
            pairing((2, 1, 0, 1), ctx.weight_evec[l])
            for l in range(1, 17)
            if w[l]
        )
        for w in inv.W
    ]
    assert weights == [-1, -1, -1, -3, -3]


def test_lie_disc_constant_ratio():
    ratio = inv.lie_disc_compare(n=30, seed=9)
    assert ratio == F.one  # gamma = 1 for the canonical calibration


def test_lie_disc_vanishes_with_delta():
    rng = det_rng(10, "inv-disc0")
    found = 0
    while found < 5:
        v = VElem(ctx, [F.random(rng) for _ in range(16)])
        if quartic_disc(inv.pi(v)):
            continue
        assert not inv.lie_disc_fast(v)
        found += 1


def test_extension_field_context():
    ext_ctx = D4Context(GF(23, 2))
    ext_inv = Invariants(ext_ctx)
    f = ext_ctx.field
    rng = det_rng(11, "inv-ext")
    for _ in range(10):
        b = tuple(f.random(rng) for _ in range(4))
        assert ext_inv.pi(ext_inv.kostant_section(b)) == b

from fractions import Fraction

import pytest

from d4vinberg import numkernels
from d4vinberg.densities import (
    alpha_bruteforce,
    alpha_closed_form,
    alpha_v,
    beta_v,
    delta_b_montecarlo,
    delta_b_tail_bound,
    delta_b_truncated,
    place_count,
    so4_count_bruteforce,
    so4_count_formula,
    vol_g,
)
from d4vinberg.fields import GF


def test_alpha_three_routes_q5():
    assert alpha_v(5) == alpha_bruteforce(5) == alpha_closed_form(5) == Fraction(437, 3125)


def test_alpha_unit_disc_contributes_nothing():
    # alpha < #{Delta(bar b) = 0} q^4 / q^8: unit-discriminant points give 0
    q = 5
    n0 = q**3 + q - 1
    assert alpha_closed_form(q) <= Fraction(n0 * q**4, q**8)


def test_alpha_degree_two_place_uniformity():
    assert alpha_v(25) == alpha_closed_form(25)


def test_alpha_lift_at_23():
    assert alpha_v(23) == alpha_closed_form(23)


def test_alpha_closed_form_bound():
    for q in (5, 7, 11, 23, 125, 5**6):
        assert 0 < alpha_closed_form(q) < Fraction(5, q**2)


def test_so4_count():
    assert so4_count_formula(5) == 14400
    assert so4_count_bruteforce(5) == 14400


def test_vol_g_properties():
    vals = [vol_g(q) for q in (5, 7, 23, 101)]
    assert all(0 < v < 1 for v in vals)
    assert vals == sorted(vals)  # increases toward 1


def test_volume_identity_residual_zero():
    for q in (5, 7, 23):
        rep = beta_v(q)
        assert rep.identity_residual == 0
        assert 0 < rep.beta < 1


def test_beta_mc_small():
    rep = beta_v(5, mc=(50000, 7))
    assert rep.mc_estimate["deviation_sigmas"] < 4


def test_beta_report_json():
    rep = beta_v(5)
    text = rep.to_json()
    assert '"q_v": 5' in text and "assumptions" in text


def test_place_counts():
    assert place_count(5, 1) == 6
    assert place_count(5, 2) == 10
    assert place_count(5, 3) == 40


def test_delta_b_truncated_monotone():
    vals = [delta_b_truncated(5, k) for k in range(1, 7)]
    assert all(0 < v < 1 for v in vals)
    assert all(vals[i] > vals[i + 1] for i in range(5))
    # degree-1 truncation is (1 - alpha)^(q+1)
    assert vals[0] == (1 - alpha_closed_form(5)) ** 6


def test_delta_b_tail_bound_dominates():
    # the tail bound really bounds sum of alpha over higher-degree places
    q, b = 5, 6
    exact_tail = sum(
        place_count(q, n) * alpha_closed_form(q**n) for n in range(b + 1, b + 6)
    )
    assert exact_tail < delta_b_tail_bound(q, b)


def test_delta_b_montecarlo_agreement():
    frac, stderr, hits = delta_b_montecarlo(GF(5), 2, 5000, 3)
    trunc = float(delta_b_truncated(5, 6))
    assert abs(frac - trunc) <= 4 * stderr + float(delta_b_tail_bound(5, 6)) + 0.01


def test_mc_deterministic():
    a = delta_b_montecarlo(GF(5), 1, 2000, 5)
    b = delta_b_montecarlo(GF(5), 1, 2000, 5)
    assert a == b
    h1 = numkernels.beta_mc_prime(5, 10000, 11)
    h2 = numkernels.beta_mc_prime(5, 10000, 11)
    assert h1 == h2


def test_beta_mc_chunking_invariant():
    full = numkernels.beta_mc_prime(5, 30000, 13, chunk=20000)
    same = numkernels.beta_mc_prime(5, 30000, 13, chunk=20000)
    assert full == same


def test_infinity_coordinate_change():
    # ord at infinity via degree bookkeeping equals ord of the reversed
    # discriminant at s = 0 (the coordinate-change check, run once)
    from d4vinberg.curves import disc_poly
    from d4vinberg.polys import Poly
    from d4vinberg.rng import det_rng

    field = GF(5)
    rng = det_rng(0, "inf-chart")
    d = 1
    for _ in range(20):
        b = tuple(
            Poly(field, [field.random(rng) for _ in range(k + 1)])
            for k in (2, 4, 4, 6)
        )
        delta = disc_poly(field, b)
        if delta.is_zero():
            continue
        ord_inf = 24 * d - delta.degree
        rev = delta.reversed(at_degree=24 * d)
        low = next((i for i, c in enumerate(rev.coeffs) if c), None)
        assert low == ord_inf

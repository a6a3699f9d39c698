from d4vinberg import polys
from d4vinberg.fields import GF
from d4vinberg.polys import Poly, factor, gcd, is_irreducible, is_squarefree, roots
from d4vinberg.rng import det_rng


def test_divmod_and_gcd():
    f = GF(23)
    rng = det_rng(0, "poly-divmod")
    for _ in range(100):
        a = Poly(f, [f.random(rng) for _ in range(8)])
        b = Poly(f, [f.random(rng) for _ in range(4)])
        if b.is_zero():
            continue
        q, r = divmod(a, b)
        assert q * b + r == a
        assert r.degree < b.degree


def test_squarefree_examples():
    f = GF(5)
    t = Poly.x(f)
    assert is_squarefree(t)
    assert not is_squarefree(t * t)
    # t^4 + 1 over F_5 factors into two distinct quadratics
    g = t**4 + 1
    assert is_squarefree(g)
    fac = factor(g)
    assert [p.degree for p, _ in fac] == [2, 2]
    assert fac[0][0] != fac[1][0]


def test_inseparable_power_detected():
    f = GF(5)
    t = Poly.x(f)
    g = t**5 + 2  # (t + 2^(1/5))^5: derivative zero
    assert g.derivative().is_zero()
    assert not is_squarefree(g)
    fac = factor(g)
    total = Poly.const(f, f.one)
    for irr, mult in fac:
        total = total * irr**mult
    assert total == g


def test_factor_reconstructs_product():
    f = GF(7)
    rng = det_rng(3, "poly-factor")
    for _ in range(60):
        a = Poly(f, [f.random(rng) for _ in range(10)])
        if a.is_zero():
            continue
        prod = Poly.const(f, a.lead())
        for irr, mult in factor(a):
            assert is_irreducible(irr)
            prod = prod * irr**mult
        assert prod == a


def test_factor_deterministic():
    f = GF(23)
    rng = det_rng(4, "poly-det")
    for _ in range(10):
        a = Poly(f, [f.random(rng) for _ in range(9)])
        if a.is_zero():
            continue
        assert factor(a) == factor(a)


def test_roots():
    f = GF(23)
    t = Poly.x(f)
    g = (t - 3) * (t - 5) * (t * t + 1)
    rs = roots(g)
    assert {r.val for r in rs} == {3, 5} or len(rs) == 4  # t^2+1 may split
    assert all(g(r) == f.zero for r in rs)


def test_resultant_vs_product_of_values():
    f = GF(23)
    t = Poly.x(f)
    a = (t - 2) * (t - 7)
    b = (t - 1) * (t - 3) * (t - 4)
    # Res(a, b) = lc(a)^deg b * prod b at roots of a
    expected = b(f.elem(2)) * b(f.elem(7))
    assert polys.resultant(a, b) == expected


def test_find_irreducible():
    f = GF(5)
    for d in (1, 2, 3, 5):
        g = polys.find_irreducible(f, d)
        assert g.degree == d and is_irreducible(g)


def test_poly_serialization():
    f = GF(5, 2)
    rng = det_rng(9, "poly-ser")
    for _ in range(20):
        a = Poly(f, [f.random(rng) for _ in range(5)])
        assert Poly.from_str(f, a.to_str()) == a

"""The quartic discriminant and its closed form.

The basic object is f(t) = t^4 + p2 t^3 + p4 t^2 + p6 t + q4^2 (the
homogeneous convention: weights (1,2,2,3) on (p2,p4,q4,p6) with t of weight
2 rescale f by weight 12).  Delta(b) = disc(f) is expanded once over the
integers from the Sylvester resultant Res(f, f') and cached as a sparse
integer polynomial, so it can be evaluated exactly over any commutative
ring: field elements, F_q[t] coefficients, length-2 local rings, or numpy
residue arrays.
"""

from functools import lru_cache

from .multipoly import MPoly, det_mpoly
from . import polys


@lru_cache(maxsize=1)
def disc_monic_quartic_mpoly():
    """disc(t^4 + a t^3 + b t^2 + c t + d) in ZZ[a,b,c,d] (vars 0..3)."""
    a = MPoly.var(4, 0)
    b = MPoly.var(4, 1)
    c = MPoly.var(4, 2)
    d = MPoly.var(4, 3)
    one = MPoly.const(4, 1)
    zero = MPoly(4, {})
    f = [one, a, b, c, d]  # highest degree first
    df = [4 * one, 3 * a, 2 * b, c]
    rows = []
    for shift in range(3):
        rows.append([zero] * shift + f + [zero] * (2 - shift))
    for shift in range(4):
        rows.append([zero] * shift + df + [zero] * (3 - shift))
    return det_mpoly(rows)


@lru_cache(maxsize=1)
def delta_mpoly():
    """Delta(p2, p4, q4, p6) = disc(t^4+p2 t^3+p4 t^2+p6 t+q4^2), vars
    ordered (p2, p4, q4, p6).  Weighted-homogeneous of degree 12 for
    weights (1, 2, 2, 3)."""
    disc = disc_monic_quartic_mpoly()
    # disc vars: (a, b, c, d) = (p2, p4, p6, q4^2); reorder to (p2,p4,q4,p6)
    out = {}
    for e, coef in disc.terms.items():
        ea, eb, ec, ed = e
        key = (ea, eb, 2 * ed, ec)  # q4 exponent doubles, p6 takes c's slot
        out[key] = out.get(key, 0) + coef
    delta = MPoly(4, out)
    degs = delta.weighted_degrees((1, 2, 2, 3))
    assert degs == {12}, f"discriminant not weighted-homogeneous: {degs}"
    return delta


@lru_cache(maxsize=1)
def delta_gradient():
    d = delta_mpoly()
    return tuple(d.partial(i) for i in range(4))


def quartic_disc(b):
    """Delta(b) for b = (p2, p4, q4, p6) with entries in any commutative
    ring supporting +, -, * and multiplication by python ints."""
    return delta_mpoly().eval(tuple(b))


def quartic_poly(field, b):
    """f(t) = t^4 + p2 t^3 + p4 t^2 + p6 t + q4^2 as a Poly over field."""
    p2, p4, q4, p6 = (field.elem(x) for x in b)
    return polys.Poly(field, [q4 * q4, p6, p4, p2, field.one])


def disc_univariate(f: polys.Poly):
    """disc of a univariate polynomial over a field, via Res(f, f')/lc.

    Independent oracle path; agrees with quartic_disc on monic quartics.
    """
    n = f.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    res = polys.resultant(f, f.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    val = res * f.lead().inverse()
    return val if sign > 0 else -val


def is_squarefree(f: polys.Poly) -> bool:
    """Squarefree-and-separable test via gcd(f, f'); the correction at the
    infinite place is degree bookkeeping and lives with the curve models."""
    return polys.is_squarefree(f)


@lru_cache(maxsize=1)
def binary_quartic_invariants():
    """(I, J) of the monic quartic t^4+a t^3+b t^2+c t+d in ZZ[a,b,c,d].

    Normalized so that 4 I^3 - J^2 = 27 disc; the curve y^2 = x^3 - 27 I x
    - 27 J is the Weierstrass model of w^2 = f(t).
    """
    a = MPoly.var(4, 0)
    b = MPoly.var(4, 1)
    c = MPoly.var(4, 2)
    d = MPoly.var(4, 3)
    i_inv = 12 * d - 3 * a * c + b * b
    j_inv = 72 * b * d - 27 * c * c - 27 * a * a * d + 9 * a * b * c - 2 * b * b * b
    return i_inv, j_inv


def weierstrass_from_quartic(field, f: polys.Poly):
    """Short Weierstrass coefficients (A, B) with y^2 = x^3 + A x + B the
    Jacobian model of w^2 = f(t), f monic quartic."""
    if f.degree != 4 or f.lead() != field.one:
        raise ValueError("monic quartic required")
    a, b, c, d = f[3], f[2], f[1], f[0]
    i_inv, j_inv = binary_quartic_invariants()
    i_val = i_inv.eval((a, b, c, d))
    j_val = j_inv.eval((a, b, c, d))
    return field.elem(-27) * i_val, field.elem(-27) * j_val

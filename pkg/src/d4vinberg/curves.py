"""Doubly-marked plane cubics and their arithmetic.

Model: Y(XY + 2 q4 Z^2) = X^3 + p2 X^2 Z + p4 X Z^2 + p6 Z^3, with the three
collinear marked points O = [0:1:0], P = [-1:1:0], Q = [1:1:0] on Z = 0.
The group law is chord-tangent with base point O directly on the plane
model, so divisibility questions never leave the curve.  Multiplying the
affine equation by x gives (xy + q4)^2 = f(x) with f the defining quartic,
which is what ties the curve side to the invariant theory.

Desk-scale enumeration is guarded by max_q (default 101).
"""

from fractions import Fraction

from . import polys
from .fields import extension_of
from .funcfield import Place, RatFunc
from .linalg import kernel_basis
from .polys import Poly
from .quartic import (
    quartic_disc,
    quartic_poly,
    weierstrass_from_quartic,
)

DEFAULT_MAX_Q = 101


class PointedCurve:
    """Smooth pointed cubic over a finite field, with full group machinery."""

    def __init__(self, field, b, max_q=DEFAULT_MAX_Q):
        self.field = field
        self.b = tuple(field.elem(x) for x in b)
        self.disc = quartic_disc(self.b)
        if not self.disc:
            raise ValueError("singular curve: discriminant vanishes")
        if field.order > max_q:
            raise ValueError(f"field size {field.order} exceeds enumeration bound {max_q}")
        f = field
        self.O = (f.zero, f.one, f.zero)
        self.P = (-f.one, f.one, f.zero)
        self.Q = (f.one, f.one, f.zero)
        self._points = None
        self._structure = None
        self._oo = self._third(self.O, self.O)

    # -- the plane model --

    def equation(self, pt):
        x, y, z = pt
        p2, p4, q4, p6 = self.b
        return (
            x * y * y
            + 2 * q4 * y * z * z
            - (x ** 3 + p2 * x * x * z + p4 * x * z * z + p6 * z ** 3)
        )

    def gradient(self, pt):
        x, y, z = pt
        p2, p4, q4, p6 = self.b
        fx = y * y - 3 * x * x - 2 * p2 * x * z - p4 * z * z
        fy = 2 * x * y + 2 * q4 * z * z
        fz = 4 * q4 * y * z - p2 * x * x - 2 * p4 * x * z - 3 * p6 * z * z
        return (fx, fy, fz)

    def contains(self, pt):
        return not self.equation(pt)

    def _normalize(self, pt):
        x, y, z = pt
        if z:
            inv = z.inverse()
            return (x * inv, y * inv, self.field.one)
        if y:
            inv = y.inverse()
            return (x * inv, self.field.one, self.field.zero)
        return (self.field.one, self.field.zero, self.field.zero)

    # -- chord-tangent machinery --

    def _combine(self, p1, p2, t):
        return tuple(a + t * b for a, b in zip(p1, p2))

    def _third(self, p1, p2):
        """Third intersection of the line through p1, p2 (tangent if equal)."""
        f = self.field
        if p1 == p2:
            line = self.gradient(p1)
            basis = kernel_basis(f, [list(line)])
            assert len(basis) == 2, "tangent line degenerate"
            r = None
            for v in basis:
                cr = _cross(p1, v)
                if any(cr):
                    r = tuple(v)
                    break
            assert r is not None
            c3 = self.equation(r)
            c2 = self.equation(self._combine(p1, r, f.one)) - c3
            if c3:
                t3 = -c2 * c3.inverse()
                return self._normalize(self._combine(p1, r, t3))
            return self._normalize(r)
        cp = self.equation(self._combine(p1, p2, f.one))
        cm = self.equation(self._combine(p1, p2, -f.one))
        half = f.inv_int(2)
        c1 = (cp - cm) * half
        c2 = (cp + cm) * half
        if c2:
            t3 = -c1 * c2.inverse()
            return self._normalize(self._combine(p1, p2, t3))
        if c1:
            return self._normalize(p2)
        raise AssertionError("line contained in a smooth cubic")

    def add(self, p1, p2):
        return self._third(self.O, self._third(p1, p2))

    def neg(self, p):
        return self._third(p, self._oo)

    def sub(self, p1, p2):
        return self.add(p1, self.neg(p2))

    def mul(self, n, p):
        if n < 0:
            return self.mul(-n, self.neg(p))
        acc = self.O
        base = p
        while n:
            if n & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            n >>= 1
        return acc

    def order_of(self, p):
        n = 1
        cur = p
        while cur != self.O:
            cur = self.add(cur, p)
            n += 1
        return n

    # -- enumeration --

    def points(self):
        if self._points is not None:
            return self._points
        f = self.field
        p2, p4, q4, p6 = self.b
        sqrt_table = {}
        for x in f:
            sqrt_table.setdefault(x * x, x)
        pts = [self.O, self.P, self.Q]
        for x in f:
            if not x:
                if q4:
                    y = p6 * (2 * q4).inverse()
                    pts.append((f.zero, y, f.one))
                continue
            # x y^2 + 2 q4 y - g(x) = 0; discriminant/4 = f(x) for the quartic
            fx = quartic_poly(f, self.b)(x)
            root = sqrt_table.get(fx)
            if root is None:
                continue
            xinv = x.inverse()
            if not fx:
                pts.append((x, -q4 * xinv, f.one))
            else:
                pts.append((x, (-q4 + root) * xinv, f.one))
                pts.append((x, (-q4 - root) * xinv, f.one))
        for pt in pts:
            assert self.contains(pt)
        self._points = pts
        return pts

    def point_count(self):
        n = len(self.points())
        q = self.field.order
        assert (n - q - 1) ** 2 <= 4 * q, "Hasse bound violated"
        return n

    def group_structure(self):
        """(n1, n2) with E(F_q) = Z/n1 x Z/n2, n1 | n2, by exhaustive orders."""
        if self._structure is not None:
            return self._structure
        pts = self.points()
        n = len(pts)
        exponent = 1
        orders = {}
        for p in pts:
            o = self.order_of(p)
            orders[p] = o
            exponent = _lcm(exponent, o)
        n1, n2 = n // exponent, exponent
        assert n1 * n2 == n and n2 % n1 == 0, "not of rank <= 2 shape"
        self._orders = orders
        self._structure = (n1, n2)
        return self._structure

    def two_torsion_count(self):
        n1, n2 = self.group_structure()
        return (2 if n1 % 2 == 0 else 1) * (2 if n2 % 2 == 0 else 1)

    def generators(self):
        """(g1, g2) with E = <g1> x <g2>, |g1| = n1, |g2| = n2."""
        n1, n2 = self.group_structure()
        pts = self.points()
        g2 = next(p for p in pts if self._orders[p] == n2)
        cyc = set()
        cur = self.O
        for _ in range(n2):
            cyc.add(cur)
            cur = self.add(cur, g2)
        if n1 == 1:
            return self.O, g2
        for p in pts:
            if self._orders[p] != n1:
                continue
            ok = True
            for ell in _prime_divisors(n1):
                if self.mul(n1 // ell, p) in cyc:
                    ok = False
                    break
            if ok:
                return p, g2
        raise AssertionError("no complementary generator found")

    def dlog(self, t):
        """(i, j) with t = i g1 + j g2."""
        g1, g2 = self.generators()
        n1, n2 = self.group_structure()
        cur_j = self.O
        for j in range(n2):
            cur = cur_j
            for i in range(n1):
                if cur == t:
                    return i, j
                cur = self.add(cur, g1)
            cur_j = self.add(cur_j, g2)
        raise AssertionError("point not on the curve")

    def is_two_divisible(self, t):
        """t in 2 E(F_q), via the enumerated group structure."""
        n1, n2 = self.group_structure()
        i, j = self.dlog(t)
        return (n1 % 2 == 1 or i % 2 == 0) and (n2 % 2 == 1 or j % 2 == 0)

    def doubled_set(self):
        """{2P}: the brute-force halving oracle."""
        return {self.mul(2, p) for p in self.points()}


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _lcm(a, b):
    from math import gcd

    return a * b // gcd(a, b)


def _prime_divisors(n):
    out, d = [], 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def curve_group(field, b, max_q=DEFAULT_MAX_Q):
    """(point count, (n1, n2), two-torsion count) of the pointed cubic."""
    curve = PointedCurve(field, b, max_q=max_q)
    n = curve.point_count()
    structure = curve.group_structure()
    return n, structure, curve.two_torsion_count()


def to_weierstrass(field, b):
    """(A, B): y^2 = x^3 + A x + B isomorphic to the pointed cubic.

    Route: multiply the affine equation by x to get (xy + q4)^2 = f(x) and
    take the Jacobian of the binary quartic.
    """
    f = quartic_poly(field, tuple(field.elem(x) for x in b))
    return weierstrass_from_quartic(field, f)


def weierstrass_count(field, a_coef, b_coef):
    """#{y^2 = x^3 + Ax + B} including infinity, by the character sum."""
    n = 1
    cubic = Poly(field, [b_coef, a_coef, field.zero, field.one])
    for x in field:
        n += 1 + field.chi(cubic(x))
    return n


def weierstrass_two_torsion(field, a_coef, b_coef):
    """Two-torsion count via the 2-division polynomial x^3 + Ax + B."""
    cubic = Poly(field, [b_coef, a_coef, field.zero, field.one])
    return 1 + len(polys.roots(cubic))


# -- minimal integral data over F_q(t) --

WEIGHTS = (1, 2, 2, 3)


class MinimalData:
    """n_v exponents, the rescaled minimal tuple, and deg L."""

    __slots__ = ("n", "b_min", "L_degree")

    def __init__(self, n, b_min, L_degree):
        self.n = n
        self.b_min = b_min
        self.L_degree = L_degree

    def __repr__(self):
        return f"MinimalData(L_degree={self.L_degree}, places={len(self.n)})"


def minimal_data(field, b) -> MinimalData:
    """Minimal weighted-integral model of b = (p2, p4, q4, p6) over F_q(t).

    n_v = max_i ceil(-ord_v(b_i) / w_i) over the nonzero coefficients; the
    rescaled tuple (pi^n p2, pi^2n p4, pi^2n q4, pi^3n p6) is v-integral with
    n_v minimal.  Places with n_v = 0 are omitted from the map; deg L sums
    n_v deg v over all places including infinity.

    b_min is the finite-normalized representative (no common weighted factor
    at any finite place); the exponent at infinity has no global uniformizer
    to absorb it and lives in the bundle degree, so b_min is a fixed point:
    rerunning on it leaves no finite places and reproduces it.
    """
    b = [x if isinstance(x, RatFunc) else RatFunc(x) for x in b]
    if quartic_disc(tuple(b)).is_zero():
        raise ValueError("discriminant must be nonzero")
    support = {}
    for i, r in enumerate(b):
        if r.is_zero():
            continue
        for f, mult in _factor_fast(field, r.num):
            if f.degree > 0:
                support.setdefault(Place(field, f, _trusted=True), [0, 0, 0, 0])[i] += mult
        for f, mult in _factor_fast(field, r.den):
            if f.degree > 0:
                support.setdefault(Place(field, f, _trusted=True), [0, 0, 0, 0])[i] -= mult
    inf = Place.infinite(field)
    support[inf] = [
        (r.den.degree - r.num.degree) if not r.is_zero() else 0 for r in b
    ]
    n_map = {}
    for place, ords in support.items():
        cands = []
        for i, (o, w) in enumerate(zip(ords, WEIGHTS)):
            if b[i].is_zero():
                continue
            cands.append(_ceil_div(-o, w))
        n_v = max(cands)
        if n_v:
            n_map[place] = n_v
    # rescale by the finite part; infinity is bookkeeping only
    u = Poly.const(field, field.one)
    for place, n_v in n_map.items():
        if place.is_infinite:
            continue
        u = u * place.poly ** n_v if n_v > 0 else u
    num_scale = RatFunc(u)
    for place, n_v in n_map.items():
        if not place.is_infinite and n_v < 0:
            num_scale = num_scale / RatFunc(place.poly ** (-n_v))
    b_min = tuple(r * _pow_rf(num_scale, w) for r, w in zip(b, WEIGHTS))
    degree = sum(n_v * place.degree for place, n_v in n_map.items())
    return MinimalData(n_map, b_min, degree)


def _pow_rf(r: RatFunc, k: int) -> RatFunc:
    out = RatFunc(Poly.const(r.field, r.field.one))
    for _ in range(k):
        out = out * r
    return out


def _ceil_div(a, b):
    return -((-a) // b)


# -- membership in the squarefree family X_D --


class XDMembership:
    __slots__ = ("in_xd", "disc_divisor", "ord_inf", "kodaira", "delta")

    def __init__(self, in_xd, disc_divisor, ord_inf, kodaira, delta):
        self.in_xd = in_xd
        self.disc_divisor = disc_divisor
        self.ord_inf = ord_inf
        self.kodaira = kodaira
        self.delta = delta

    def __repr__(self):
        return f"XDMembership(in_xd={self.in_xd}, ord_inf={self.ord_inf})"


def xd_membership(field, b, d, classify_fibres=True, max_q=DEFAULT_MAX_Q**2):
    """Membership of a coefficient tuple in H^0(X, B_D)^sf, D = d*infinity.

    b: four Polys (p2, p4, q4, p6) subject to degree bounds (2d, 4d, 4d, 6d).
    disc_divisor lists (place, ord) at every zero of Delta and at infinity
    (ord_oo = 24d - deg Delta); in_xd iff all orders <= 1.  With
    classify_fibres, each bad place gets its Kodaira type: I1 demands a
    single rational nodal point, certified on the reduced plane cubic.
    """
    b = tuple(x if isinstance(x, Poly) else Poly.const(field, field.elem(x)) for x in b)
    bounds = tuple(w * 2 * d for w in WEIGHTS)
    if any(p.degree > bound for p, bound in zip(b, bounds)):
        raise ValueError("coefficient degrees exceed the B_D box")
    delta = disc_poly(field, b)
    if delta.is_zero():
        return XDMembership(False, [], None, {}, delta)
    divisor = []
    kodaira = {}
    ok = True
    for fpoly, mult in _factor_fast(field, delta):
        if fpoly.degree == 0:
            continue
        place = Place(field, fpoly, _trusted=True)
        divisor.append((place, mult))
        if mult > 1:
            ok = False
        if classify_fibres:
            kodaira[place] = (
                _kodaira_at_finite(field, b, place) if mult == 1 else "other"
            )
    ord_inf = 24 * d - delta.degree
    if ord_inf:
        place = Place.infinite(field)
        divisor.append((place, ord_inf))
        if ord_inf > 1:
            ok = False
        elif classify_fibres:
            kodaira[place] = _kodaira_at_infinity(field, b, d)
    in_xd = ok
    if classify_fibres and in_xd:
        assert all(t in ("I1",) for t in kodaira.values()), kodaira
    return XDMembership(in_xd, divisor, ord_inf, kodaira, delta)


def _factor_fast(field, fpoly: Poly):
    """Factor over a prime field via int lists; generic path otherwise."""
    from .fields import PrimeField

    if isinstance(field, PrimeField):
        from .numkernels import il_factor

        return [
            (Poly(field, list(cs)), mult)
            for cs, mult in il_factor([c.val for c in fpoly.coeffs], field.p)
        ]
    return polys.factor(fpoly)


def _kodaira_at_finite(field, b, place: Place):
    kv = place.residue_field()
    b_red = tuple(place.reduce_poly(p) for p in b)
    return kodaira_of_reduction(kv, b_red)


def _kodaira_at_infinity(field, b, d):
    """Reduction at infinity via the s = 1/t chart with the B_D twist."""
    bounds = tuple(w * 2 * d for w in WEIGHTS)
    b_rev = tuple(p.reversed(at_degree=k) if not p.is_zero() else p for p, k in zip(b, bounds))
    b_red = tuple(p[0] if not p.is_zero() else field.zero for p in b_rev)
    return kodaira_of_reduction(field, b_red)


def kodaira_of_reduction(kv, b_red):
    """Fibre type of the reduced cubic over the residue field kv.

    I0 for smooth reduction; I1 when the quartic has a single double root
    (two simple others) whose plane point is a node; 'other' otherwise.
    The double root, when unique, is automatically rational, so locating
    the singular point needs no residue-field enumeration.
    """
    delta = quartic_disc(b_red)
    if delta:
        return "I0"
    p2, p4, q4, p6 = b_red
    fbar = quartic_poly(kv, b_red)
    g = polys.gcd(fbar, fbar.derivative())
    if g.degree != 1:
        return "other"
    delta_root = -g[0]  # g monic linear
    # double but not triple
    sq = Poly(kv, [delta_root * delta_root, -2 * delta_root, kv.one])
    if (fbar // sq) (delta_root) == kv.zero:
        return "other"
    if not delta_root:
        # double root at 0 forces q4 = p6 = 0: reducible fibre
        return "other"
    y0 = -q4 * delta_root.inverse()
    # certify the singular point on the plane model
    x0 = delta_root
    fx = y0 * y0 - 3 * x0 * x0 - 2 * p2 * x0 - p4
    fy = 2 * x0 * y0 + 2 * q4
    fval = x0 * y0 * y0 + 2 * q4 * y0 - (x0 ** 3 + p2 * x0 * x0 + p4 * x0 + p6)
    assert not fx and not fy and not fval, "singular point certificate failed"
    # tangent cone rank 2 <=> nodal
    hxx = -6 * x0 - 2 * p2
    hxy = 2 * y0
    hyy = 2 * x0
    det_h = hxx * hyy - hxy * hxy
    return "I1" if det_h else "other"


def singular_points_bruteforce(kv, b_red):
    """All singular points in P^2(kv) of the reduced cubic (test oracle)."""
    out = []
    pts = [(x, y, kv.one) for x in kv for y in kv]
    pts += [(kv.one, y, kv.zero) for y in kv] + [(kv.zero, kv.one, kv.zero)]
    p2, p4, q4, p6 = b_red
    for x, y, z in pts:
        fval = x * y * y + 2 * q4 * y * z * z - (
            x ** 3 + p2 * x * x * z + p4 * x * z * z + p6 * z ** 3
        )
        fx = y * y - 3 * x * x - 2 * p2 * x * z - p4 * z * z
        fy = 2 * x * y + 2 * q4 * z * z
        fz = 4 * q4 * y * z - p2 * x * x - 2 * p4 * x * z - 3 * p6 * z * z
        if not fval and not fx and not fy and not fz:
            out.append((x, y, z))
    return out


def disc_poly(field, b) -> Poly:
    """Delta(b) for polynomial coefficient tuples, int-list fast path."""
    from .fields import PrimeField

    b = tuple(
        x if isinstance(x, Poly) else Poly.const(field, field.elem(x)) for x in b
    )
    if isinstance(field, PrimeField):
        from .numkernels import delta_poly_intlists

        cs = delta_poly_intlists(field.p, [[c.val for c in x.coeffs] for x in b])
        return Poly(field, cs)
    return quartic_disc(b)


def in_xd_fast(field, b, d) -> bool:
    """Cheap in_XD test: nonzero squarefree discriminant, simple at infinity."""
    from .fields import PrimeField

    delta = disc_poly(field, b)
    if delta.is_zero():
        return False
    if 24 * d - delta.degree > 1:
        return False
    if isinstance(field, PrimeField):
        from .numkernels import squarefree_int_list

        return squarefree_int_list([c.val for c in delta.coeffs], field.p)
    return polys.is_squarefree(delta)


def sample_xd(field, d, count, seed, max_tries=None, classify_fibres=False):
    """Uniform rejection sampling of H^0(X, B_D)^sf coefficient tuples."""
    from .rng import det_rng

    if max_tries is None:
        max_tries = 200 * count + 1000
    bounds = tuple(w * 2 * d for w in WEIGHTS)
    out = []
    tries = 0
    rng = det_rng(seed, "sample-xd")
    while len(out) < count:
        tries += 1
        if tries > max_tries:
            raise RuntimeError(f"rejection sampling exceeded {max_tries} tries")
        b = tuple(
            Poly(field, [field.random(rng) for _ in range(k + 1)]) for k in bounds
        )
        if not in_xd_fast(field, b, d):
            continue
        if classify_fibres:
            member = xd_membership(field, b, d, classify_fibres=True)
            assert member.in_xd
        out.append(b)
    return out


def xd_acceptance_fraction(field, d, n, seed):
    """Empirical in_XD fraction over n uniform draws from the B_D box."""
    from .rng import det_rng

    bounds = tuple(w * 2 * d for w in WEIGHTS)
    rng = det_rng(seed, "xd-fraction")
    hits = 0
    for _ in range(n):
        b = tuple(
            Poly(field, [field.random(rng) for _ in range(k + 1)]) for k in bounds
        )
        hits += in_xd_fast(field, b, d)
    return Fraction(hits, n)


# -- stabilizer side of the 2-torsion identity --


def stabilizer_count_from_degrees(degrees):
    """#Z_G(kappa_b)(F_q) from the factor degrees of the eigenvalue quartic.

    Geometric 2-torsion classes are even sign patterns on the four
    eigenline pairs modulo a global flip; Frobenius permutes the pairs as
    it permutes the quartic's roots, so rationality is epsilon o sigma =
    +/- epsilon.
    """
    assert sum(degrees) == 4
    sigma = [0] * 4
    start = 0
    for d in degrees:
        for i in range(d):
            sigma[start + i] = start + (i + 1) % d
        start += d
    count = 0
    for mask in range(16):
        eps = [1 if mask & (1 << i) else -1 for i in range(4)]
        if eps[0] * eps[1] * eps[2] * eps[3] != 1:
            continue
        if all(eps[sigma[i]] == eps[i] for i in range(4)) or all(
            eps[sigma[i]] == -eps[i] for i in range(4)
        ):
            count += 1
    assert count % 2 == 0
    return count // 2


def stabilizer_two_torsion(inv, b, extension_degree=1):
    """#Z_G(kappa_b)(F_{q^m}) computed on the group side.

    Takes the calibrated invariant context, forms kappa_b, reads off the
    even characteristic quartic of its matrix (the eigenvalue-pair data of
    the Cartan it spans), and counts Frobenius-stable even sign patterns.
    """
    ctx = inv.ctx
    b = tuple(ctx.field.elem(x) for x in b)
    if not quartic_disc(b):
        raise ValueError("Delta(b) = 0")
    kb = inv.kostant_section(b)
    g = ctx.char_quartic(kb)
    if extension_degree > 1:
        ext = extension_of(
            ctx.field, polys.find_irreducible(ctx.field, extension_degree).coeffs
        )
        g = Poly(ext, [ext.elem(c) for c in g.coeffs])
    degrees = []
    for fpoly, mult in polys.factor(g):
        degrees += [fpoly.degree] * mult
    return stabilizer_count_from_degrees(sorted(degrees))


# -- K-rational 2-torsion over the function field --


def two_torsion_field_rank(field, b_polys):
    """Number of K-rational roots of the 2-division cubic of the quartic
    model over K = F_q(t); 0 means E(K)[2] is trivial.

    A K-root of the monic cubic is a polynomial of bounded degree; it is
    reconstructed from its value at a single place of large degree.
    """
    a_coef, b_coef = to_weierstrass_polys(field, b_polys)
    bound = max(
        _ceil_div(a_coef.degree, 2) if not a_coef.is_zero() else 0,
        _ceil_div(b_coef.degree, 3) if not b_coef.is_zero() else 0,
        0,
    )
    mu = polys.find_irreducible(field, bound + 1)
    ext = extension_of(field, mu.coeffs)
    tau = ext.gen
    cubic = Poly(ext, [b_coef(tau), a_coef(tau), ext.zero, ext.one])
    count = 0
    for root in polys.roots(cubic):
        # reconstruct the unique polynomial of degree <= bound with value root
        rows = []
        power = ext.one
        cols = []
        for _ in range(bound + 1):
            cols.append(list(power.val))
            power = power * tau
        rows = [[field.elem(cols[j][i]) for j in range(bound + 1)] for i in range(ext.deg)]
        from . import linalg

        sol = linalg.solve(field, rows, [field.elem(v) for v in root.val])
        if sol is None:
            continue
        cand = Poly(field, sol)
        check = cand ** 3 + a_coef * cand + b_coef
        if check.is_zero():
            count += 1
    return count


def to_weierstrass_polys(field, b_polys):
    """(A(t), B(t)) of the Weierstrass model for polynomial coefficients."""
    from .quartic import binary_quartic_invariants

    p2, p4, q4, p6 = (
        x if isinstance(x, Poly) else Poly.const(field, field.elem(x)) for x in b_polys
    )
    i_inv, j_inv = binary_quartic_invariants()
    i_val = i_inv.eval((p2, p4, p6, q4 * q4))
    j_val = j_inv.eval((p2, p4, p6, q4 * q4))
    m27 = Poly.const(field, field.elem(-27))
    return m27 * i_val, m27 * j_val

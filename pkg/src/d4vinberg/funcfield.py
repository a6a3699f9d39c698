"""The rational function field F_q(t): places, valuations, truncations.

Finite places are monic irreducible polynomials pi(t); the place at infinity
is first-class with uniformizer 1/t, so global degree bookkeeping (product
formula, section degrees on P^1) flows through it uniformly.
"""

from . import polys
from .fields import extension_of
from .polys import Poly


class Place:
    """A place of F_q(t): finite (monic irreducible) or infinite."""

    __slots__ = ("field", "poly", "degree", "_kv")

    def __init__(self, field, poly=None, _trusted=False):
        self.field = field
        self._kv = None
        if poly is None:
            self.poly = None  # the place at infinity
            self.degree = 1
        else:
            if poly.lead() != field.one:
                poly = poly.monic()
            if not _trusted and not polys.is_irreducible(poly):
                raise ValueError("finite places require an irreducible polynomial")
            self.poly = poly
            self.degree = poly.degree

    @staticmethod
    def infinite(field):
        return Place(field, None)

    @property
    def is_infinite(self):
        return self.poly is None

    def qv(self):
        return self.field.order**self.degree

    def residue_field(self):
        """k(v) as an extension of the constant field (cached per place)."""
        if self.is_infinite or self.degree == 1:
            return self.field
        if self._kv is None:
            self._kv = extension_of(self.field, self.poly.coeffs, trusted=True)
        return self._kv

    def reduce_poly(self, f: Poly):
        """Image of f in k(v) (finite places; degree-1 places give F_q)."""
        if self.is_infinite:
            raise ValueError("use local_data for the infinite place")
        r = f % self.poly
        if self.degree == 1:
            return r(-self.poly[0])
        return self.residue_field().elem([c for c in r.coeffs])

    def __eq__(self, other):
        return (
            isinstance(other, Place)
            and self.field == other.field
            and self.poly == other.poly
        )

    def __hash__(self):
        return hash((self.field, self.poly))

    def __repr__(self):
        return "Place(oo)" if self.is_infinite else f"Place({self.poly.to_str()})"


class LocalTrunc:
    """Residue class in O_v/(pi^k), canonical representative of degree
    < k*deg(pi) in the uniformizer chart."""

    __slots__ = ("place", "level", "value")

    def __init__(self, place, level, value: Poly):
        self.place = place
        self.level = level
        self.value = value

    def __eq__(self, other):
        return (
            isinstance(other, LocalTrunc)
            and self.place == other.place
            and self.level == other.level
            and self.value == other.value
        )

    def __repr__(self):
        return f"LocalTrunc({self.place!r}, k={self.level}, {self.value.to_str()!r})"


class RatFunc:
    """Element of F_q(t), stored as num/den with den monic and gcd 1."""

    __slots__ = ("field", "num", "den")

    def __init__(self, num: Poly, den: Poly = None):
        self.field = num.field
        if den is None:
            den = Poly.const(self.field, self.field.one)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        g = polys.gcd(num, den)
        if not g.is_constant():
            num, den = num // g, den // g
        c = den.lead().inverse()
        self.num = num * c
        self.den = den * c

    def is_zero(self):
        return self.num.is_zero()

    def __add__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    def __sub__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.den - other.num * self.den, self.den * other.den)

    def __mul__(self, other):
        other = self._coerce(other)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__
    __radd__ = __add__

    def __rsub__(self, other):
        return -(self - other)

    def __neg__(self):
        return RatFunc(-self.num, self.den)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.num * other.den, self.den * other.num)

    def __pow__(self, k):
        if k < 0:
            return RatFunc(self.den**-k, self.num**-k)
        return RatFunc(self.num**k, self.den**k)

    def _coerce(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other)
        return RatFunc(Poly.const(self.field, self.field.elem(other)))

    def __eq__(self, other):
        other = self._coerce(other)
        return self.num == other.num and self.den == other.den

    def __repr__(self):
        return f"RatFunc({self.num.to_str()!r} / {self.den.to_str()!r})"


def _mult_at(f: Poly, pi: Poly) -> int:
    """Multiplicity of the irreducible pi in f (f nonzero)."""
    m = 0
    while True:
        q, r = divmod(f, pi)
        if not r.is_zero():
            return m
        f = q
        m += 1


def ord_at(r, place: Place) -> int:
    """Normalized valuation ord_v(r); r nonzero (RatFunc or Poly)."""
    if isinstance(r, Poly):
        r = RatFunc(r)
    if r.is_zero():
        raise ValueError("ord of zero")
    if place.is_infinite:
        return r.den.degree - r.num.degree
    return _mult_at(r.num, place.poly) - _mult_at(r.den, place.poly)


def local_data(r, place: Place, k: int):
    """(ord, LocalTrunc) of r at the place, truncation level k >= 1.

    Truncation requires ord >= 0; elements with poles cannot be truncated.
    """
    if k < 1:
        raise ValueError("truncation level must be >= 1")
    if isinstance(r, Poly):
        r = RatFunc(r)
    if r.is_zero():
        return None, LocalTrunc(place, k, Poly(r.field))
    o = ord_at(r, place)
    if o < 0:
        raise ValueError(f"cannot truncate an element with a pole (ord {o})")
    field = r.field
    if place.is_infinite:
        # chart s = 1/t: r(t) = s^(deg den - deg num) * rev(num)/rev(den)
        d = r.num.degree if r.num.degree > r.den.degree else r.den.degree
        num_s = r.num.reversed(at_degree=d)
        den_s = r.den.reversed(at_degree=d)
        pi = Poly.x(field)
        value = _series_quotient(num_s, den_s, pi, k)
    else:
        pi = place.poly
        value = _series_quotient(r.num, r.den, pi, k)
    return o, LocalTrunc(place, k, value)


def _series_quotient(num: Poly, den: Poly, pi: Poly, k: int) -> Poly:
    """num/den mod pi^k for den coprime to pi (num may be divisible)."""
    field = num.field
    pik = pi**k
    den_red = den % pik
    # invert den modulo pi^k via extended gcd (unit since gcd(den, pi) = 1)
    g, s, _ = polys.xgcd(den_red, pik)
    if not g.is_constant():
        raise ValueError("denominator not a unit at the place")
    inv = s * g.lead().inverse()
    return (num * inv) % pik


def places_of_degree(field, n: int):
    """All places of degree n of P^1 over F_q (including oo for n = 1)."""
    out = []
    if n == 1:
        out.append(Place.infinite(field))
        x = Poly.x(field)
        for c in field:
            out.append(Place(field, x - c))
        return out
    for f, _ in _monic_irreducibles(field, n):
        out.append(Place(field, f))
    return out


def _monic_irreducibles(field, n):
    for code in range(field.order**n):
        cs = []
        c = code
        for _ in range(n):
            cs.append(field.from_int(c % field.order))
            c //= field.order
        f = Poly(field, cs + [field.one])
        if polys.is_irreducible(f):
            yield f, n


def count_monic_irreducibles(q: int, n: int) -> int:
    """Number of monic irreducibles of degree n over F_q (necklace count)."""
    total = 0
    for d in range(1, n + 1):
        if n % d == 0:
            total += _moebius(n // d) * q**d
    return total // n


def _moebius(n):
    if n == 1:
        return 1
    out = 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            n //= d
            if n % d == 0:
                return 0
            out = -out
        d += 1
    if n > 1:
        out = -out
    return out


def support(r) -> list:
    """Places where ord_v(r) != 0, with their orders (includes oo)."""
    if isinstance(r, Poly):
        r = RatFunc(r)
    if r.is_zero():
        raise ValueError("support of zero")
    field = r.field
    out = []
    for f, mult in polys.factor(r.num):
        if f.degree > 0:
            out.append((Place(field, f), mult))
    for f, mult in polys.factor(r.den):
        if f.degree > 0:
            out.append((Place(field, f), -mult))
    o_inf = r.den.degree - r.num.degree
    if o_inf != 0:
        out.append((Place.infinite(field), o_inf))
    return out

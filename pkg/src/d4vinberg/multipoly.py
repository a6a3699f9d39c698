"""Sparse multivariate polynomials over the integers or a field.

Monomials map exponent tuples to coefficients.  Used for the closed-form
quartic discriminant (integer coefficients, evaluated over arbitrary
commutative rings) and for the symbolic invariant restrictions to the
Kostant and subregular charts during calibration.
"""


class MPoly:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        self.terms = {}
        if terms:
            for e, c in terms.items():
                if _nonzero(c):
                    self.terms[tuple(e)] = c

    @staticmethod
    def const(nvars, c):
        return MPoly(nvars, {(0,) * nvars: c})

    @staticmethod
    def var(nvars, i, one=1):
        e = [0] * nvars
        e[i] = 1
        return MPoly(nvars, {tuple(e): one})

    def is_zero(self):
        return not self.terms

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e, None)
            s = c if s is None else s + c
            if _nonzero(s):
                out[e] = s
            elif e in out:
                del out[e]
        return MPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(e, None)
                s = prod if s is None else s + prod
                if _nonzero(s):
                    out[e] = s
                elif e in out:
                    del out[e]
        return MPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        result = MPoly.const(self.nvars, 1 if not self.terms else _one_like(next(iter(self.terms.values()))))
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def _coerce(self, other):
        if isinstance(other, MPoly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return MPoly.const(self.nvars, other)

    def partial(self, i):
        out = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            ne = list(e)
            ne[i] -= 1
            coef = e[i] * c
            if _nonzero(coef):
                out[tuple(ne)] = coef
        return MPoly(self.nvars, out)

    def eval(self, args):
        """Evaluate at a point; args supply +,*,- and accept int multiples."""
        acc = None
        for e, c in self.terms.items():
            term = c
            for x, k in zip(args, e):
                for _ in range(k):
                    term = term * x
            acc = term if acc is None else acc + term
        if acc is None:
            return 0
        return acc

    def substitute(self, i, repl):
        """Substitute variable i by an MPoly in the same variables."""
        out = MPoly(self.nvars, {})
        for e, c in self.terms.items():
            ne = list(e)
            k = ne[i]
            ne[i] = 0
            term = MPoly(self.nvars, {tuple(ne): c})
            if k:
                term = term * repl**k
            out = out + term
        return out

    def weighted_degrees(self, weights):
        return {sum(w * k for w, k in zip(weights, e)) for e in self.terms}

    def monomials(self):
        """Sorted list of (coefficient, exponent-tuple)."""
        return [(self.terms[e], e) for e in sorted(self.terms)]

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        return (self - other).is_zero()

    def __repr__(self):
        if not self.terms:
            return "MPoly(0)"
        bits = []
        for c, e in self.monomials():
            mono = "*".join(
                f"x{i}^{k}" if k > 1 else f"x{i}"
                for i, k in enumerate(e)
                if k
            )
            bits.append(f"{c}" + (f"*{mono}" if mono else ""))
        return "MPoly(" + " + ".join(bits) + ")"


def _nonzero(c):
    if isinstance(c, int):
        return c != 0
    return bool(c)


def _one_like(c):
    if isinstance(c, int):
        return 1
    return c.field.one


def det_mpoly(rows):
    """Determinant of a square matrix of MPolys, by Laplace expansion with
    memoization over column subsets (division-free)."""
    n = len(rows)
    nvars = rows[0][0].nvars
    memo = {}

    def minor(r, cols):
        if r == n:
            return MPoly.const(nvars, 1)
        key = cols
        if key in memo:
            return memo[key]
        acc = MPoly(nvars, {})
        sign = 1
        for idx, c in enumerate(cols):
            entry = rows[r][c]
            if not entry.is_zero():
                sub = minor(r + 1, cols[:idx] + cols[idx + 1 :])
                term = entry * sub
                acc = acc + term if sign > 0 else acc - term
            sign = -sign
        memo[key] = acc
        return acc

    return minor(0, tuple(range(n)))

"""Weight-poset combinatorics, the cusp-cutting table, slope arithmetic for
torus-induced torsors, and section-count bounds for split bundles on P^1.

Slope vectors live in X_*(T)_Q and are stored by their pairings with the
simple roots a_1..a_4 of G (rational 4-tuples).  The eleven-row table
certifying that deep-cusp strata vanish in the limit is hardcoded as data
and recomputed from the poset; both bulleted conditions are checked row by
row.  Tail bounds are exact sums of geometric series in q^(1/4), reported
as rational upper bounds.
"""

from fractions import Fraction

from .liealg import LABELS, LABEL_SIGNS, leq, w0_label_perm, W0_PERMS

# <rho-check, a_i> for the simple roots of G
RHO_PAIRINGS = (4, 2, 2, 2)


def lambda_max(m_set):
    """Maximal elements of the complement of m_set in Phi_V."""
    comp = [l for l in LABELS if l not in m_set]
    return frozenset(a for a in comp if all(a == b or not leq(a, b) for b in comp))


def covers(label):
    """Labels covering the given one (flip a single -1 up)."""
    signs = LABEL_SIGNS[label]
    sign_to_label = {v: k for k, v in LABEL_SIGNS.items()}
    out = []
    for i in range(4):
        if signs[i] < 0:
            new = list(signs)
            new[i] = 1
            out.append(sign_to_label[tuple(new)])
    return frozenset(out)


def is_upward_closed(m_set):
    return all(
        all(b in m_set for b in LABELS if leq(a, b)) for a in m_set
    )


def enumerate_upward_closed():
    """All nonempty upward-closed subsets of Phi_V."""
    out = []
    labels = list(LABELS)
    for mask in range(1, 1 << 16):
        m = frozenset(labels[i] for i in range(16) if mask & (1 << i))
        if is_upward_closed(m):
            out.append(m)
    return out


def enumerate_c0():
    """The eleven upward-closed sets avoiding every cusp set, sorted."""
    from .orbits import ALL_CUSP_SETS

    out = []
    for m in enumerate_upward_closed():
        if any(s <= m for s in ALL_CUSP_SETS):
            continue
        out.append(m)
    out.sort(key=lambda s: (len(s), tuple(sorted(s))))
    return out


# the table: M -> (lambda(M), p on lambda(M) in ascending label order,
#                  2w(M), 2w(M,p)); values straight from the source table
HALF = Fraction(1, 2)
CUSP_TABLE = {
    (1,): ((2, 3, 4, 5), (0, 0, 0, 0), (1, 1, 1, 1), (1, 1, 1, 1)),
    (1, 2): ((3, 4, 5), (HALF, HALF, HALF), (2, 0, 0, 0), (Fraction(7, 2), HALF, HALF, HALF)),
    (1, 3): ((2, 4, 5), (HALF, HALF, HALF), (0, 2, 0, 0), (HALF, Fraction(7, 2), HALF, HALF)),
    (1, 4): ((2, 3, 5), (HALF, HALF, HALF), (0, 0, 2, 0), (HALF, HALF, Fraction(7, 2), HALF)),
    (1, 5): ((2, 3, 4), (HALF, HALF, HALF), (0, 0, 0, 2), (HALF, HALF, HALF, Fraction(7, 2))),
    (1, 2, 3): ((4, 5, 6), (HALF, HALF, Fraction(3, 2)), (1, 1, -1, -1), (HALF,) * 4),
    (1, 2, 4): ((3, 5, 7), (HALF, HALF, Fraction(3, 2)), (1, -1, 1, -1), (HALF,) * 4),
    (1, 2, 5): ((3, 4, 8), (HALF, HALF, Fraction(3, 2)), (1, -1, -1, 1), (HALF,) * 4),
    (1, 3, 4): ((2, 5, 9), (HALF, HALF, Fraction(3, 2)), (-1, 1, 1, -1), (HALF,) * 4),
    (1, 3, 5): ((2, 4, 10), (HALF, HALF, Fraction(3, 2)), (-1, 1, -1, 1), (HALF,) * 4),
    (1, 4, 5): ((2, 3, 11), (HALF, HALF, Fraction(3, 2)), (-1, -1, 1, 1), (HALF,) * 4),
}


class CuspRow:
    __slots__ = ("m_set", "lambda_m", "size", "w2", "p", "wp2", "conditions_ok")

    def __init__(self, m_set, lambda_m, size, w2, p, wp2, conditions_ok):
        self.m_set = m_set
        self.lambda_m = lambda_m
        self.size = size
        self.w2 = w2
        self.p = p
        self.wp2 = wp2
        self.conditions_ok = conditions_ok

    def as_record(self):
        return {
            "M": list(self.m_set),
            "lambda": list(self.lambda_m),
            "size": self.size,
            "2w": [str(x) for x in self.w2],
            "p": [str(x) for x in self.p],
            "2wp": [str(x) for x in self.wp2],
            "conditions_ok": self.conditions_ok,
        }


def two_w(m_set):
    """2 w(M) = -sum_{a in M} eps(a) - 2 delta_B, delta_B = -(a1+..+a4)."""
    total = [0, 0, 0, 0]
    for l in m_set:
        for i, s in enumerate(LABEL_SIGNS[l]):
            total[i] += s
    return tuple(Fraction(2 - t) for t in total)


def verify_cusp_table():
    """Recompute the eleven rows and check the two cusp conditions.

    Any failing row (or mismatch with the stored table) raises.
    """
    c0 = enumerate_c0()
    assert len(c0) == 11, f"|C0| = {len(c0)} != 11"
    rows = []
    for m in c0:
        key = tuple(sorted(m))
        assert key in CUSP_TABLE, f"set {key} missing from the table"
        exp_lambda, p_vals, exp_w2, exp_wp2 = CUSP_TABLE[key]
        lam = tuple(sorted(lambda_max(m)))
        assert lam == exp_lambda, (key, lam, exp_lambda)
        w2 = two_w(m)
        assert w2 == tuple(Fraction(x) for x in exp_w2), (key, w2, exp_w2)
        assert len(p_vals) == len(lam)
        wp2 = list(w2)
        for a, pv in zip(lam, p_vals):
            for i, s in enumerate(LABEL_SIGNS[a]):
                wp2[i] += Fraction(pv) * s
        wp2 = tuple(wp2)
        assert wp2 == tuple(Fraction(x) for x in exp_wp2), (key, wp2, exp_wp2)
        cond1 = len(m) > sum(Fraction(x) for x in p_vals)
        cond2 = all(x > 0 for x in wp2)
        row = CuspRow(
            key, lam, len(m), w2, tuple(Fraction(x) for x in p_vals), wp2, cond1 and cond2
        )
        if not row.conditions_ok:
            raise AssertionError(f"cusp table row {key} fails its conditions")
        rows.append(row)
    return rows


def parabolic_stable_sets():
    """Members of C0 stable under the a_1-sign involution (expected: {1,2})."""
    sign_to_label = {v: k for k, v in LABEL_SIGNS.items()}

    def flip1(label):
        s = list(LABEL_SIGNS[label])
        s[0] = -s[0]
        return sign_to_label[tuple(s)]

    return [m for m in enumerate_c0() if all(flip1(a) in m for a in m)]


# -- slope arithmetic --


class SlopeVector:
    """Element of X_*(T)_Q, stored by pairings with (a_1, a_2, a_3, a_4)."""

    __slots__ = ("coords",)

    def __init__(self, coords):
        self.coords = tuple(Fraction(c) for c in coords)
        assert len(self.coords) == 4

    def pair_weight(self, label):
        """<sigma, a> for the weight with the given label (half-integers)."""
        return sum(
            s * Fraction(e, 2) for s, e in zip(self.coords, LABEL_SIGNS[label])
        )

    def in_lambda_b_pos(self):
        """<sigma, a> > 0 for all a in the Borel's root basis R^- = {-a_i}."""
        return all(c < 0 for c in self.coords)

    def __eq__(self, other):
        return isinstance(other, SlopeVector) and self.coords == other.coords

    def __repr__(self):
        return f"SlopeVector({self.coords})"


def trivial_inv_slopes(w_name, d, char=None):
    """Slope data of the trivial-class torsor inv(w kappa_b) at deg D = d.

    Returns (sigma, hn, positivity, lowest, report) where hn is the sorted
    (slope, multiplicity) list of V_g(D) and report carries the lowest-slope
    constant next to the reference value -2 deg D for comparison (logged, never
    asserted).
    """
    if d <= 0:
        raise ValueError("deg D must be positive")
    perm = W0_PERMS[w_name]
    # <w rho w^-1, a_i> = <rho, a_{w^-1(i)}>; Klein elements are involutions
    pairings = [RHO_PAIRINGS[perm[i] - 1] for i in range(4)]
    sigma = SlopeVector([-d * x for x in pairings])
    slopes = {}
    for l in LABELS:
        s = sigma.pair_weight(l) + d
        slopes[s] = slopes.get(s, 0) + 1
    hn = sorted(slopes.items())
    lowest = hn[0][0]
    positivity = sigma.in_lambda_b_pos()
    hyp = None
    if char is not None:
        # small-weight hypothesis: 2 <rho_G, lambda> < char for all weights;
        # rho_G pairs to 1 with every a_i, so the max is 4.
        hyp = 4 < char
    report = {
        "lowest": lowest,
        "reference_constant": Fraction(-2 * d),
        "matches_reference_constant": lowest == Fraction(-2 * d),
        "filtration_hypothesis_ok": hyp,
    }
    assert lowest < 0, "lowest slope of a trivial class must be negative"
    return sigma, hn, positivity, lowest, report


# -- Clifford / section bounds on P^1 (split bundles) --


def clifford_h0(split_degrees, twist):
    """(h0, bounds_ok) for (+) O(e_i) twisted by O(twist) on P^1.

    h0 is exact; bounds_ok checks every case inequality of the semistable
    section bound and of the slope-zero refinement (the negative-part
    subtraction is applied piecewise, which is the form the orbit-count
    argument uses; the single-piece statement follows).
    """
    gx = 0
    degs = sorted(split_degrees, reverse=True)
    n = len(degs)
    h0 = sum(max(0, e + twist + 1) for e in degs)
    ok = True
    # HN pieces: groups of equal degree, slopes descending
    pieces = []
    for e in degs:
        if pieces and pieces[-1][0] == e:
            pieces[-1][1] += 1
        else:
            pieces.append([e, 1])
    # semistable bound per piece
    for e, rank in pieces:
        mu = e + twist
        piece_h0 = rank * max(0, mu + 1)
        if mu < 0 and piece_h0 != 0:
            ok = False
        if 0 <= mu <= 2 * gx - 2:
            ok = False  # empty band on P^1
        if mu > 2 * gx - 2 and piece_h0 != rank * (1 - gx + mu):
            ok = False
    # slope-zero refinement, when applicable
    total_deg = sum(degs)
    if total_deg == 0 and twist > 0:
        q0_low = pieces[-1][0]
        neg = [(e, r) for e, r in pieces if e + twist < 0]
        bound = n * (1 + twist) - sum(r * (1 + e + twist) for e, r in neg)
        if h0 > bound:
            ok = False
        if twist + q0_low < 0:
            # the sub-bundle of negative twisted slope has no sections
            if any(r * max(0, e + twist + 1) for e, r in neg):
                ok = False
            if h0 > bound:
                ok = False
        if twist + q0_low > 2 * gx - 2 and h0 != n * (1 - gx + twist):
            ok = False
        if 0 <= twist + q0_low <= 2 * gx - 2 and h0 > n * (1 + twist):
            ok = False
    return h0, ok


# -- exact tail bounds for the boundary sums --


class QPowerSum:
    """Exact finite sums of integer multiples of q^(-e/8), integer e >= 0.

    Eighth-integer exponents cover everything the boundary sums produce
    (sigma coordinates in (1/2)Z paired against weights in (1/2)Z)."""

    __slots__ = ("q", "terms")

    def __init__(self, q, terms=None):
        self.q = q
        self.terms = dict(terms or {})  # int exponent (units of 1/8) -> int coeff

    @staticmethod
    def monomial(q, exponent: Fraction, coeff=1):
        e8 = Fraction(exponent) * 8
        assert e8.denominator == 1 and e8 >= 0
        return QPowerSum(q, {int(e8): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
            if not out[e]:
                del out[e]
        return QPowerSum(self.q, out)

    def __mul__(self, other):
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return QPowerSum(self.q, out)

    def to_float(self):
        root8 = self.q ** 0.125
        return float(sum(c * root8 ** (-e) for e, c in self.terms.items()))

    def upper_bound(self, digits=40) -> Fraction:
        """Rational upper bound with denominator 10^digits.

        Per term, q^(-e/8) <= 1/floor(q^(e/8)); each quotient is rounded up
        on a common power-of-ten denominator so the result stays compact.
        """
        scale = 10**digits
        total = 0
        for e, c in self.terms.items():
            assert c >= 0 and e >= 0
            root = max(_integer_root_floor(self.q**e, 8), 1)
            total += -((-c * scale) // root)  # ceil division
        return Fraction(total, scale)


def _integer_root_floor(n, k):
    if k == 1:
        return n
    lo, hi = 0, 1
    while hi**k <= n:
        hi *= 2
    while lo < hi - 1:
        mid = (lo + hi) // 2
        if mid**k <= n:
            lo = mid
        else:
            hi = mid
    return lo


def boundary_tail_bound(m_key, d, truncation, q):
    """Truncated lattice-sum bound for the boundary stratum of M.

    Sum over sigma in Lambda_B^pos with coordinates in -(1/2)Z, each
    magnitude <= truncation, of q^(d (sum p - |M|) + <sigma, w(M,p)>).
    The summand factors over coordinates, so the sum is a product of
    truncated geometric series; everything is exact in powers of q^(1/4).
    """
    key = tuple(sorted(m_key))
    exp_lambda, p_vals, _, exp_wp2 = CUSP_TABLE[key]
    wp2 = [Fraction(x) for x in exp_wp2]  # both conditions verified elsewhere
    p_sum = sum(Fraction(x) for x in p_vals)
    size = len(key)
    lead_exp = -Fraction(d) * (p_sum - size)  # positive: q^{-lead_exp} prefactor
    assert lead_exp > 0
    out = QPowerSum.monomial(q, lead_exp)
    for w_i in wp2:
        # sigma_i = -j/2, j = 1..2T: each term is q^{-j w_i / 4} (w_i is 2w)
        axis = QPowerSum(q, {})
        for j in range(1, 2 * truncation + 1):
            axis = axis + QPowerSum.monomial(q, Fraction(j) * w_i / 4)
        out = out * axis
    return out

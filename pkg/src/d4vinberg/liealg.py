"""The graded pair (G, V) inside the adjoint D4 algebra.

h = so(Psi) for the split form Psi (antidiagonal 4x4 blocks), theta is
conjugation by s = diag(1,-1,-1,1,1,-1,-1,1), g and V its +/-1 eigenspaces.
The 16 weights of V carry the label table (1..16) and the Boolean-cube
partial order; the adjoint torus T(k) = Hom(root lattice, k^x) is stored by
its values on the simple-root basis of H, which is exactly what the
constructive orbit reduction needs.

Everything is built once per field and cached on a D4Context; all operations
are pure and the context is safe to share.
"""

from fractions import Fraction

from . import linalg
from .linalg import mat_mul, mat_sub, mat_vec
from .quartic import disc_univariate
from .polys import Poly

# positions 0..7 carry torus characters +/- e_k:
POS_CHAR = [
    (1, 0, 0, 0),
    (0, 1, 0, 0),
    (0, -1, 0, 0),
    (-1, 0, 0, 0),
    (0, 0, 1, 0),
    (0, 0, 0, 1),
    (0, 0, 0, -1),
    (0, 0, -1, 0),
]
IOTA = [3, 2, 1, 0, 7, 6, 5, 4]  # Psi_{i,j} = [j == IOTA[i]]
S_SIGNS = [1, -1, -1, 1, 1, -1, -1, 1]

# weight label table: label -> (2n1, 2n2, 2n3, 2n4)
LABEL_SIGNS = {
    1: (1, 1, 1, 1),
    2: (-1, 1, 1, 1),
    3: (1, -1, 1, 1),
    4: (1, 1, -1, 1),
    5: (1, 1, 1, -1),
    6: (-1, -1, 1, 1),
    7: (-1, 1, -1, 1),
    8: (-1, 1, 1, -1),
    9: (1, -1, -1, 1),
    10: (1, -1, 1, -1),
    11: (1, 1, -1, -1),
    12: (-1, -1, -1, 1),
    13: (-1, -1, 1, -1),
    14: (-1, 1, -1, -1),
    15: (1, -1, -1, -1),
    16: (-1, -1, -1, -1),
}
LABELS = tuple(sorted(LABEL_SIGNS))

# simple roots of G in e-coordinates: a1 = e0+e2, a2 = e0-e2, a3 = e1+e3, a4 = e1-e3
G_SIMPLE = ((1, 0, 1, 0), (1, 0, -1, 0), (0, 1, 0, 1), (0, 1, 0, -1))
# simple roots of H: alpha1 = e0-e1, alpha2 = e1-e2, alpha3 = e2-e3, alpha4 = e2+e3
H_SIMPLE = ((1, -1, 0, 0), (0, 1, -1, 0), (0, 0, 1, -1), (0, 0, 1, 1))

RHO_CHECK = (3, 2, 1, 0)  # sum of fundamental coweights of H, e*-coordinates
LAMBDA_CHECK = (2, 1, 0, 1)  # the subregular cocharacter, e*-coordinates

# Klein four-group acting on the index set {1,2,3,4} of the a_i
W0_PERMS = {
    "e": (1, 2, 3, 4),
    "s12.34": (2, 1, 4, 3),
    "s13.24": (3, 4, 1, 2),
    "s14.23": (4, 3, 2, 1),
}
# 8x8 signed-permutation representatives (position permutations, 0-indexed)
W0_POSITION_PERMS = {
    "e": (0, 1, 2, 3, 4, 5, 6, 7),
    "s12.34": (0, 1, 2, 3, 7, 6, 5, 4),
    "s13.24": (1, 0, 3, 2, 5, 4, 7, 6),
    "s14.23": (1, 0, 3, 2, 6, 7, 4, 5),
}


def weight_evec(signs):
    """e-coordinates (doubled: integer) of the weight with the given
    (2n_i) pattern; returns the character vector itself (entries in ZZ)."""
    e1, e2, e3, e4 = signs
    return (
        (e1 + e2) // 2,
        (e3 + e4) // 2,
        (e1 - e2) // 2,
        (e3 - e4) // 2,
    )


def alpha_coords(evec):
    """Coordinates of a root-lattice element in the H-simple-root basis."""
    w0, w1, w2, w3 = evec
    m1 = w0
    m2 = w0 + w1
    s = w0 + w1 + w2 + w3
    if s % 2:
        raise ValueError("not in the root lattice")
    m4 = (s) // 2 - 0 if False else (w0 + w1 + w2 + w3) // 2
    m3 = (w0 + w1 + w2 - w3) // 2
    return (m1, m2, m3, m4)


def pairing(cochar, char) -> int:
    """<cochar, char> for e*-coordinates against e-coordinates."""
    return sum(a * b for a, b in zip(cochar, char))


def leq(label_a, label_b) -> bool:
    """Partial order on Phi_V: a <= b iff n_i(a) <= n_i(b) for all i."""
    sa, sb = LABEL_SIGNS[label_a], LABEL_SIGNS[label_b]
    return all(x <= y for x, y in zip(sa, sb))


def w0_label_perm(name):
    """Permutation of weight labels induced by a Klein-group element."""
    perm = W0_PERMS[name]
    out = {}
    sign_to_label = {v: k for k, v in LABEL_SIGNS.items()}
    for label, signs in LABEL_SIGNS.items():
        new = tuple(signs[perm[i] - 1] for i in range(4))
        out[label] = sign_to_label[new]
    return out


class VElem:
    """Element of V in weight coordinates (label order 1..16)."""

    __slots__ = ("ctx", "coords")

    def __init__(self, ctx, coords):
        self.ctx = ctx
        self.coords = tuple(ctx.field.elem(c) for c in coords)
        if len(self.coords) != 16:
            raise ValueError("16 weight coordinates required")

    def __getitem__(self, label):
        return self.coords[label - 1]

    def __add__(self, other):
        return VElem(self.ctx, [a + b for a, b in zip(self.coords, other.coords)])

    def __sub__(self, other):
        return VElem(self.ctx, [a - b for a, b in zip(self.coords, other.coords)])

    def __neg__(self):
        return VElem(self.ctx, [-a for a in self.coords])

    def scale(self, c):
        c = self.ctx.field.elem(c)
        return VElem(self.ctx, [c * a for a in self.coords])

    def __eq__(self, other):
        return isinstance(other, VElem) and self.coords == other.coords

    def __hash__(self):
        return hash(self.coords)

    def is_zero(self):
        return not any(self.coords)

    def zero_set(self):
        return frozenset(l for l in LABELS if not self[l])

    def to_matrix(self):
        return self.ctx.v_coords_to_matrix(self.coords)

    def serialize(self):
        f = self.ctx.field
        return ",".join(f.elem_to_str(c) for c in self.coords)

    @staticmethod
    def deserialize(ctx, s):
        f = ctx.field
        return VElem(ctx, [f.elem_from_str(t) for t in _split_top(s)])

    def __repr__(self):
        return f"VElem({self.serialize()})"


def _split_top(s):
    depth, parts, cur = 0, [], []
    for ch in s:
        if ch == "," and depth == 0:
            parts.append("".join(cur))
            cur = []
            continue
        depth += ch == "("
        depth -= ch == ")"
        cur.append(ch)
    parts.append("".join(cur))
    return parts


class TorusGen:
    """Element of the adjoint torus T(k) = Hom(root lattice, k^x), stored by
    its values on the H-simple roots (alpha_1..alpha_4)."""

    __slots__ = ("values",)

    def __init__(self, values):
        self.values = tuple(values)
        if len(self.values) != 4 or not all(self.values):
            raise ValueError("four nonzero alpha-values required")

    def eval_char(self, field, evec):
        m = alpha_coords(evec)
        out = field.one
        for x, k in zip(self.values, m):
            if k:
                out = out * (x**k if k > 0 else x.inverse() ** (-k))
        return out

    def inverse(self):
        return TorusGen([x.inverse() for x in self.values])


def torus_from_g_root_values(field, lams):
    """Torus point with chi(a_i) = lams[i], when one exists.

    The a_i span an index-2 sublattice of the root lattice, so the values
    determine chi only up to a sign and exist only when lam2 lam3 lam4 /
    lam1 is a square; returns None otherwise (deterministic square root).
    """
    l1, l2, l3, l4 = lams
    s = field.sqrt(l2 * l3 * l4 * l1.inverse())
    if s is None or not s:
        return None
    x2 = s
    x1 = l2 * x2.inverse()
    x4 = l3 * x2.inverse()
    x3 = l4 * x2.inverse()
    return TorusGen([x1, x2, x3, x4])


class UnipGen:
    """exp(c X_root) for a root of h; X_root^2 = 0 in the matrix model."""

    __slots__ = ("root", "c")

    def __init__(self, root, c):
        self.root = tuple(root)
        self.c = c


class WeylGen:
    """A representative of the Klein four-group W0."""

    __slots__ = ("name",)

    def __init__(self, name):
        if name not in W0_PERMS:
            raise ValueError(f"unknown W0 element {name!r}")
        self.name = name


class D4Context:
    """All field-dependent structure of the graded pair, built once."""

    def __init__(self, field):
        if field.char < 5:
            raise ValueError("characteristic must be at least 5")
        self.field = field
        f = field
        self.psi = [
            [f.one if j == IOTA[i] else f.zero for j in range(8)] for i in range(8)
        ]
        self.s_matrix = [
            [f.elem(S_SIGNS[i]) if i == j else f.zero for j in range(8)]
            for i in range(8)
        ]
        self._build_bases()
        self._build_weight_data()
        self.E = self._velem_from_matrix_int(E_MATRIX_INT)
        self.e_subreg = self._velem_from_matrix_int(E_SUBREG_INT)
        self._w0_vmaps = {}
        self._w0_label_perms = {name: w0_label_perm(name) for name in W0_PERMS}

    # -- construction of bases --

    def _build_bases(self):
        f = self.field
        # Cartan basis h_k: diagonal matrices for the coweight e_k*
        self.cartan_basis = []
        for k in range(4):
            m = linalg.zeros(f, 8, 8)
            for i in range(8):
                m[i][i] = f.elem(POS_CHAR[i][k])
            self.cartan_basis.append(m)
        # root vectors: one per root, primary entry lexicographically least
        roots = {}
        for i in range(8):
            for j in range(8):
                if i == j or j == IOTA[i]:
                    continue
                char = tuple(a - b for a, b in zip(POS_CHAR[i], POS_CHAR[j]))
                partner = (IOTA[j], IOTA[i])
                primary = min((i, j), partner)
                if char not in roots or primary < roots[char][0]:
                    roots[char] = (primary, (IOTA[primary[1]], IOTA[primary[0]]))
        assert len(roots) == 24
        self.root_entries = roots  # char -> (primary(i,j), partner(i,j))
        self.root_matrix = {}
        for char, (prim, part) in roots.items():
            m = linalg.zeros(f, 8, 8)
            m[prim[0]][prim[1]] = f.one
            m[part[0]][part[1]] = -f.one
            self.root_matrix[char] = m
        self.h_roots = sorted(roots)
        self.g_roots = [
            r for r in self.h_roots if S_SIGNS[roots[r][0][0]] * S_SIGNS[roots[r][0][1]] == 1
        ]
        self.v_roots = [r for r in self.h_roots if r not in set(self.g_roots)]
        assert len(self.g_roots) == 8 and len(self.v_roots) == 16
        # full h basis: 4 cartan + 24 roots (dim 28)
        self.h_basis = list(self.cartan_basis) + [
            self.root_matrix[r] for r in self.h_roots
        ]
        self.g_basis = list(self.cartan_basis) + [
            self.root_matrix[r] for r in self.g_roots
        ]

    def _build_weight_data(self):
        self.weight_evec = {l: weight_evec(LABEL_SIGNS[l]) for l in LABELS}
        evec_to_label = {v: k for k, v in self.weight_evec.items()}
        assert set(self.weight_evec.values()) == set(self.v_roots)
        self.evec_to_label = evec_to_label
        self.v_basis_entries = {
            l: self.root_entries[self.weight_evec[l]] for l in LABELS
        }

    # -- matrix <-> coordinates --

    def v_coords_to_matrix(self, coords):
        f = self.field
        m = linalg.zeros(f, 8, 8)
        for l in LABELS:
            c = coords[l - 1]
            if not c:
                continue
            (pi, pj), (qi, qj) = self.v_basis_entries[l]
            m[pi][pj] = m[pi][pj] + c
            m[qi][qj] = m[qi][qj] - c
        return m

    def velem_from_matrix(self, m, check=True):
        coords = []
        for l in LABELS:
            (pi, pj), _ = self.v_basis_entries[l]
            coords.append(m[pi][pj])
        v = VElem(self, coords)
        if check and v.to_matrix() != m:
            raise ValueError("matrix is not in V")
        return v

    def _velem_from_matrix_int(self, rows):
        f = self.field
        m = [[f.elem(x) for x in row] for row in rows]
        self.assert_in_h(m)
        return self.velem_from_matrix(m)

    def assert_in_h(self, m):
        """x^T Psi + Psi x = 0, i.e. m[iota(j)][iota(i)] = -m[i][j]."""
        for i in range(8):
            for j in range(8):
                if m[IOTA[j]][IOTA[i]] != -m[i][j]:
                    raise ValueError("matrix not in so(Psi)")

    def h_coords(self, m):
        """Coordinates of m in the h basis (4 cartan + 24 root entries)."""
        out = [m[0][0], m[1][1], m[4][4], m[5][5]]
        for r in self.h_roots:
            prim, _ = self.root_entries[r]
            out.append(m[prim[0]][prim[1]])
        return out

    def theta(self, m):
        return mat_mul(mat_mul(self.s_matrix, m), self.s_matrix)

    def g_v_parts(self, m):
        """Split m in h into (g part, V part)."""
        f = self.field
        half = f.inv_int(2)
        tm = self.theta(m)
        gp = [[(a + b) * half for a, b in zip(r1, r2)] for r1, r2 in zip(m, tm)]
        vp = [[(a - b) * half for a, b in zip(r1, r2)] for r1, r2 in zip(m, tm)]
        return gp, vp

    # -- cocharacters --

    def cochar_matrix(self, exps, scale=1):
        """d(cocharacter)(scale) as a diagonal matrix, exps in e*-coords."""
        f = self.field
        m = linalg.zeros(f, 8, 8)
        for i in range(8):
            m[i][i] = f.elem(scale * pairing(exps, POS_CHAR[i]))
        return m

    def torus_from_cochar(self, exps, t):
        """The torus point cochar(t) as a TorusGen (alpha-values t^<exps, alpha_i>)."""
        t = self.field.elem(t)
        vals = []
        for alpha in H_SIMPLE:
            k = pairing(exps, alpha)
            vals.append(t**k if k >= 0 else t.inverse() ** (-k))
        return TorusGen(vals)

    # -- group action on V --

    def unip_matrix(self, gen: UnipGen):
        f = self.field
        x = self.root_matrix[gen.root]
        x2 = mat_mul(x, x)
        if any(any(c for c in row) for row in x2):
            raise ValueError("root vector does not square to zero")
        u = linalg.identity(f, 8)
        c = f.elem(gen.c)
        for i in range(8):
            for j in range(8):
                if x[i][j]:
                    u[i][j] = u[i][j] + c * x[i][j]
        return u

    def weyl_matrix(self, gen: WeylGen):
        f = self.field
        perm = W0_POSITION_PERMS[gen.name]
        m = linalg.zeros(f, 8, 8)
        for j in range(8):
            m[perm[j]][j] = f.one
        return m

    def act_gen(self, gen, v: VElem) -> VElem:
        f = self.field
        if isinstance(gen, TorusGen):
            coords = []
            for l in LABELS:
                c = v[l]
                coords.append(c * gen.eval_char(f, self.weight_evec[l]) if c else c)
            return VElem(self, coords)
        if isinstance(gen, UnipGen):
            u = self.unip_matrix(gen)
            uinv = linalg.identity(f, 8)
            x = self.root_matrix[gen.root]
            c = f.elem(gen.c)
            for i in range(8):
                for j in range(8):
                    if x[i][j]:
                        uinv[i][j] = uinv[i][j] - c * x[i][j]
            m = mat_mul(mat_mul(u, v.to_matrix()), uinv)
            return self.velem_from_matrix(m)
        if isinstance(gen, WeylGen):
            p = self.weyl_matrix(gen)
            pinv = linalg.transpose(p)  # permutation matrix
            m = mat_mul(mat_mul(p, v.to_matrix()), pinv)
            return self.velem_from_matrix(m)
        raise TypeError(f"not a group generator: {gen!r}")

    def act(self, gens, v: VElem) -> VElem:
        """Apply a generator or a word of generators (leftmost outermost)."""
        if not isinstance(gens, (list, tuple)):
            gens = [gens]
        for gen in reversed(gens):
            v = self.act_gen(gen, v)
        return v

    def w0_label_action(self, name):
        return self._w0_label_perms[name]

    # -- invariant-free classification helpers --

    def ad_matrix(self, v: VElem, basis):
        """Matrix of ad(v) restricted to span(basis), in h coordinates."""
        vm = v.to_matrix()
        cols = []
        for b in basis:
            br = mat_sub(mat_mul(vm, b), mat_mul(b, vm))
            cols.append(self.h_coords(br))
        # rows = 28 h-coordinates, columns = basis elements
        return [[cols[j][i] for j in range(len(basis))] for i in range(28)]

    def centralizer_dim(self, v: VElem, ambient="g") -> int:
        basis = self.g_basis if ambient == "g" else self.h_basis
        mat = self.ad_matrix(v, basis)
        return len(basis) - linalg.rank(self.field, mat)

    def char_quartic(self, v: VElem) -> Poly:
        """g(T) with det(xI - v) = g(x^2), from the even charpoly."""
        c2, c4, c6, c8 = linalg.even_charpoly(self.field, v.to_matrix())
        return Poly(self.field, [c8, c6, c4, c2, self.field.one])

    def is_regular_semisimple(self, v: VElem) -> bool:
        g = self.char_quartic(v)
        return bool(disc_univariate(g))

    def minimal_polynomial(self, v: VElem) -> Poly:
        f = self.field
        m = v.to_matrix()
        powers = [linalg.identity(f, 8)]
        while True:
            # seek a dependence of the last power on the earlier ones
            rows = [
                [powers[k][i][j] for k in range(len(powers))]
                for i in range(8)
                for j in range(8)
            ]
            target_mat = mat_mul(powers[-1], m)
            target = [target_mat[i][j] for i in range(8) for j in range(8)]
            sol = linalg.solve(f, rows, target)
            if sol is not None:
                return Poly(f, [-c for c in sol] + [f.one])
            powers.append(target_mat)

    def classify(self, v: VElem):
        """(regular, semisimple, regular-semisimple) flags."""
        from . import polys as _p

        rs = self.is_regular_semisimple(v)
        if rs:
            return {"regular": True, "semisimple": True, "rs": True}
        regular = self.centralizer_dim(v, "g") == 0
        semisimple = _p.is_squarefree(self.minimal_polynomial(v))
        return {"regular": regular, "semisimple": semisimple, "rs": False}

    def __repr__(self):
        return f"D4Context({self.field!r})"


# fixed matrices of the distinguished nilpotents (integer entries)
E_MATRIX_INT = [
    [0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, 0, 0, 0, 0, 0, -1],
    [0, 0, -1, 0, 0, 0, 0, 0],
]
E_SUBREG_INT = [
    [0, 1, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 2],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, -2, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 1, 0, 0, -1],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, -1, 0, 0, 0, -1, 0],
]


# -- lattice bookkeeping: pi_1(G) --


def _snf_diagonal(mat):
    """Elementary divisors of an integer matrix (Smith normal form)."""
    m = [row[:] for row in mat]
    n = len(m)
    divisors = []
    for k in range(n):
        # find a nonzero pivot minimizing |value|
        while True:
            best = None
            for i in range(k, n):
                for j in range(k, n):
                    if m[i][j] and (best is None or abs(m[i][j]) < abs(m[best[0]][best[1]])):
                        best = (i, j)
            if best is None:
                divisors.append(0)
                break
            bi, bj = best
            m[k], m[bi] = m[bi], m[k]
            for row in m:
                row[k], row[bj] = row[bj], row[k]
            pivot = m[k][k]
            clean = True
            for i in range(k + 1, n):
                if m[i][k] % pivot:
                    clean = False
                q = m[i][k] // pivot
                m[i] = [a - q * b for a, b in zip(m[i], m[k])]
            for j in range(k + 1, n):
                if m[k][j] % pivot:
                    clean = False
                q = m[k][j] // pivot
                for i in range(n):
                    m[i][j] -= q * m[i][k]
            if clean and all(m[i][k] == 0 for i in range(k + 1, n)) and all(
                m[k][j] == 0 for j in range(k + 1, n)
            ):
                divisors.append(abs(pivot))
                break
        else:
            continue
    return divisors


def fundamental_group_divisors():
    """Elementary divisors of X_*(T) / (coroot lattice of G).

    X_*(T) for the adjoint torus is the dual of the root lattice of H;
    returns the divisor list, whose product is the order of pi_1(G).
    """
    # fundamental coweights: basis of X_*(T), rows in e*-coordinates
    a = [[Fraction(x) for x in row] for row in H_SIMPLE]
    n = 4
    # invert a (rows are the alpha_i in e-coords); dual basis = columns of a^-1
    aug = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if aug[i][c])
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for i in range(n):
            if i != c and aug[i][c]:
                f = aug[i][c]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[c])]
    ainv = [row[n:] for row in aug]
    # coweight basis W: W[j] = j-th column of a^-1 as a row vector
    coweights = [[ainv[i][j] for i in range(n)] for j in range(n)]
    # coroots of G: for roots e_i +/- e_j the coroot has the same coordinates
    coroots = [[Fraction(x) for x in row] for row in G_SIMPLE]
    # express coroots in the coweight basis: solve W^T m = coroot
    wt = [[coweights[j][i] for j in range(n)] for i in range(n)]
    m_int = []
    for cr in coroots:
        aug2 = [row[:] + [cr[i]] for i, row in enumerate(wt)]
        for c in range(n):
            piv = next(i for i in range(c, n) if aug2[i][c])
            aug2[c], aug2[piv] = aug2[piv], aug2[c]
            inv = 1 / aug2[c][c]
            aug2[c] = [x * inv for x in aug2[c]]
            for i in range(n):
                if i != c and aug2[i][c]:
                    f = aug2[i][c]
                    aug2[i] = [x - f * y for x, y in zip(aug2[i], aug2[c])]
        col = [aug2[i][n] for i in range(n)]
        assert all(x.denominator == 1 for x in col)
        m_int.append([int(x) for x in col])
    return _snf_diagonal(m_int)


def fundamental_group_order() -> int:
    out = 1
    for d in fundamental_group_divisors():
        out *= d
    return out

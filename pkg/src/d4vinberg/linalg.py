"""Dense exact linear algebra over a field, plus division-free kernels.

Matrices are lists of lists of field elements.  Sizes here are tiny (at most
28x28), so everything is straightforward Gaussian elimination with exact
arithmetic.  The Pfaffian and the even characteristic polynomial are the two
non-generic routines: both avoid divisions that would fail in small odd
characteristic (only 2 and 3 are ever inverted).
"""

def zeros(field, n, m):
    return [[field.zero] * m for _ in range(n)]


def identity(field, n):
    out = zeros(field, n, n)
    for i in range(n):
        out[i][i] = field.one
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_neg(a):
    return [[-x for x in row] for row in a]


def mat_scale(c, a):
    return [[c * x for x in row] for row in a]


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0])
    bt = [[b[r][c] for r in range(k)] for c in range(m)]
    out = []
    for i in range(n):
        row_a = a[i]
        row = []
        for col in bt:
            acc = row_a[0] * col[0]
            for t in range(1, k):
                acc = acc + row_a[t] * col[t]
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a, v):
    out = []
    for row in a:
        acc = row[0] * v[0]
        for t in range(1, len(v)):
            acc = acc + row[t] * v[t]
        out.append(acc)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def bracket(a, b):
    return mat_sub(mat_mul(a, b), mat_mul(b, a))


def _row_echelon(field, mat, aug=None):
    """In-place row reduction; returns pivot column list."""
    rows = len(mat)
    cols = len(mat[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if mat[i][c]), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        if aug is not None:
            aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = mat[r][c].inverse()
        mat[r] = [x * inv for x in mat[r]]
        if aug is not None:
            aug[r] = [x * inv for x in aug[r]]
        for i in range(rows):
            if i != r and mat[i][c]:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
                if aug is not None:
                    aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return pivots


def rank(field, a):
    if not a:
        return 0
    m = [row[:] for row in a]
    return len(_row_echelon(field, m))


def kernel_basis(field, a):
    """Basis of the right kernel of a (rows = equations)."""
    if not a:
        return []
    cols = len(a[0])
    m = [row[:] for row in a]
    pivots = _row_echelon(field, m)
    pivot_set = set(pivots)
    free = [c for c in range(cols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [field.zero] * cols
        v[fc] = field.one
        for r, pc in enumerate(pivots):
            v[pc] = -m[r][fc]
        basis.append(v)
    return basis


def solve(field, a, b):
    """One solution x of a x = b, or None if inconsistent."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [row[:] for row in a]
    aug = [[x] for x in b]
    pivots = _row_echelon(field, m, aug)
    for i in range(rows):
        if all(not x for x in m[i]) and aug[i][0]:
            return None
    x = [field.zero] * cols
    for r, pc in enumerate(pivots):
        x[pc] = aug[r][0]
    return x


def inverse(field, a):
    n = len(a)
    m = [row[:] for row in a]
    aug = [row[:] for row in identity(field, n)]
    pivots = _row_echelon(field, m, aug)
    if len(pivots) != n:
        raise ValueError("matrix not invertible")
    return aug


def det(field, a):
    n = len(a)
    m = [row[:] for row in a]
    result = field.one
    for c in range(n):
        pivot = next((i for i in range(c, n) if m[i][c]), None)
        if pivot is None:
            return field.zero
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            result = -result
        result = result * m[c][c]
        inv = m[c][c].inverse()
        for i in range(c + 1, n):
            if m[i][c]:
                f = m[i][c] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[c])]
    return result


# -- Pfaffian of an antisymmetric matrix, by perfect matchings --


def _matchings(items):
    if not items:
        yield []
        return
    first = items[0]
    for j in range(1, len(items)):
        rest = items[1:j] + items[j + 1 :]
        for sub in _matchings(rest):
            yield [(first, items[j])] + sub


def _matching_sign(pairs):
    perm = [i for pair in pairs for i in pair]
    n = len(perm)
    seen = [False] * n
    pos = {v: i for i, v in enumerate(perm)}
    sign = 1
    # sign of the permutation sending (0,1,...,n-1) to perm
    values = perm[:]
    for i in range(n):
        while values[i] != i:
            j = values[i]
            values[i], values[j] = values[j], values[i]
            sign = -sign
    return sign


_PFAFFIAN_TERMS = {}


def pfaffian_terms(n):
    """[(sign, ((i1,j1),...))] over perfect matchings of {0..n-1}, cached."""
    if n not in _PFAFFIAN_TERMS:
        terms = []
        for pairs in _matchings(list(range(n))):
            terms.append((_matching_sign(pairs), tuple(pairs)))
        _PFAFFIAN_TERMS[n] = terms
    return _PFAFFIAN_TERMS[n]


def pfaffian(field, a):
    """Pfaffian of an antisymmetric n x n matrix (n even), division-free."""
    n = len(a)
    if n % 2:
        return field.zero
    acc = field.zero
    for sign, pairs in pfaffian_terms(n):
        term = field.one
        for i, j in pairs:
            term = term * a[i][j]
        acc = acc + term if sign > 0 else acc - term
    return acc


# -- characteristic polynomial --


def even_charpoly(field, a):
    """(c2, c4, c6, c8) with det(xI - a) = x^8 + c2 x^6 + c4 x^4 + c6 x^2 + c8.

    Valid for 8x8 matrices similar to -a^T (odd power traces vanish), which
    holds throughout so(Psi).  Uses Newton's identities on even power sums;
    the only divisions are by 2, 4 and 6, units for characteristic >= 5.
    c8 is det(a), computed by elimination.
    """
    a2 = mat_mul(a, a)
    a4 = mat_mul(a2, a2)
    n = len(a)
    p2 = _trace(field, a2)
    p4 = _trace(field, a4)
    p6 = _trace_prod(field, a2, a4)
    half = field.inv_int(2)
    quarter = field.inv_int(4)
    sixth = field.inv_int(6)
    e2 = -p2 * half
    e4 = -(p4 + e2 * p2) * quarter
    e6 = -(p6 + e2 * p4 + e4 * p2) * sixth
    e8 = det(field, a)
    return e2, e4, e6, e8


def _trace(field, a):
    acc = field.zero
    for i in range(len(a)):
        acc = acc + a[i][i]
    return acc


def _trace_prod(field, a, b):
    acc = field.zero
    for i in range(len(a)):
        for j in range(len(a)):
            acc = acc + a[i][j] * b[j][i]
    return acc


def charpoly_berkowitz(field, a):
    """Characteristic polynomial of a (det(xI - a)), division-free.

    Returns coefficients lowest-degree-first, length n+1, leading 1.
    Cross-check path for the fast even charpoly; also used for ad matrices
    whose size exceeds the characteristic (Newton would divide by p).
    """
    n = len(a)
    one, zero = field.one, field.zero
    # Berkowitz: iteratively build the char poly vector via Toeplitz products
    vec = [one, -a[0][0]]
    for i in range(1, n):
        m = a[i][i]
        row = a[i][:i]  # R
        col = [a[k][i] for k in range(i)]  # S
        sub = [r[:i] for r in a[:i]]  # principal submatrix
        # products R A^j S for j = 0..i-1
        products = []
        cur = col
        for _ in range(i):
            acc = zero
            for x, y in zip(row, cur):
                acc = acc + x * y
            products.append(acc)
            cur = mat_vec(sub, cur)
        # Toeplitz multiply: new vector length i+2
        diag = [one, -m] + [-p for p in products]
        new = []
        for r in range(i + 2):
            acc = zero
            lo = max(0, r - (len(diag) - 1))
            hi = min(r, len(vec) - 1)
            for k in range(lo, hi + 1):
                acc = acc + diag[r - k] * vec[k]
            new.append(acc)
        vec = new
    # vec holds coefficients from x^n down to x^0
    return list(reversed(vec))

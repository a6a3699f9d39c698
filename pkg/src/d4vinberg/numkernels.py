"""Vectorized mod-p kernels for the density enumerations and Monte Carlo.

Everything here is exact integer arithmetic on int64 arrays reduced mod p.
Length-2 local rings O_v/(pi^2) are equal-characteristic, so they are dual
numbers k[eps]/(eps^2); ring elements are (value, eps-part) array pairs.
Small extension residue fields use index tables.
"""

import numpy as np

from .liealg import IOTA, LABELS
from .linalg import pfaffian_terms
from .quartic import delta_mpoly, delta_gradient
from .rng import det_rng


def delta_monomials():
    """[(int coefficient, (e_p2, e_p4, e_q4, e_p6))] of Delta."""
    return [(c, e) for c, e in delta_mpoly().monomials()]


def gradient_monomials():
    return [
        [(c, e) for c, e in g.monomials()] for g in delta_gradient()
    ]


def _eval_monomials_mod(monos, arrays, p):
    """Evaluate a monomial list on value arrays mod p (vectorized)."""
    max_exp = [0, 0, 0, 0]
    for _, e in monos:
        for i in range(4):
            max_exp[i] = max(max_exp[i], e[i])
    powers = []
    for arr, top in zip(arrays, max_exp):
        row = [np.ones_like(arr)]
        for _ in range(top):
            row.append(row[-1] * arr % p)
        powers.append(row)
    out = np.zeros_like(arrays[0])
    for c, e in monos:
        term = np.full_like(arrays[0], c % p)
        for i in range(4):
            if e[i]:
                term = term * powers[i][e[i]] % p
        out = (out + term) % p
    return out


def alpha_counts_prime(p):
    """(N0, N2) over F_p: points of {Delta = 0} and of {Delta = 0, grad = 0}."""
    rng = np.arange(p, dtype=np.int64)
    grids = np.meshgrid(rng, rng, rng, rng, indexing="ij")
    arrays = [g.reshape(-1) for g in grids]
    delta = _eval_monomials_mod(delta_monomials(), arrays, p)
    on = delta == 0
    n0 = int(on.sum())
    grad_zero = on.copy()
    sub = [a[on] for a in arrays]
    acc = np.ones(int(on.sum()), dtype=bool)
    for monos in gradient_monomials():
        g = _eval_monomials_mod(monos, sub, p)
        acc &= g == 0
    n2 = int(acc.sum())
    return n0, n2


def alpha_lift_prime(p):
    """Numerator of alpha_v * q^8 by the first-order lift strategy, F_p.

    Nodal-smooth points contribute p^3 lifts each; gradient-zero points are
    evaluated once over the dual numbers (all their lifts share the value).
    """
    n0, n2 = alpha_counts_prime(p)
    # tripwire: the shared dual value at gradient-zero points is Delta(b) = 0
    return (n0 - n2) * p**3 + n2 * p**4


def alpha_brute_prime(p):
    """Exhaustive count over all p^8 residues of B(O/pi^2) with Delta = 0
    mod pi^2 (literal dual-number evaluation at every point); the oracle
    for the lift strategy."""
    monos = delta_monomials()
    total = p**8
    count = 0
    chunk = 2 * 10**6
    for start in range(0, total, chunk):
        end = min(start + chunk, total)
        codes = np.arange(start, end, dtype=np.int64)
        digits = []
        rest = codes
        for _ in range(8):
            digits.append(rest % p)
            rest = rest // p
        arr0 = digits[0:4]
        arr1 = digits[4:8]
        d0, d1 = _eval_monomials_dual(monos, arr0, arr1, p)
        count += int(((d0 == 0) & (d1 == 0)).sum())
    return count


class GFTable:
    """Index-table arithmetic for a small extension field (vectorized)."""

    def __init__(self, field):
        self.field = field
        q = field.order
        if q > 64:
            raise ValueError("index tables limited to q <= 64")
        self.q = q
        elems = sorted(field, key=field.to_int)
        self.add = np.zeros((q, q), dtype=np.int64)
        self.mul = np.zeros((q, q), dtype=np.int64)
        self.neg = np.zeros(q, dtype=np.int64)
        for a in elems:
            ia = field.to_int(a)
            self.neg[ia] = field.to_int(-a)
            for b in elems:
                ib = field.to_int(b)
                self.add[ia, ib] = field.to_int(a + b)
                self.mul[ia, ib] = field.to_int(a * b)
        self.int_embed = np.array(
            [field.to_int(field.elem(k)) for k in range(field.char)], dtype=np.int64
        )

    def embed_int(self, k):
        return int(self.int_embed[k % self.field.char])

    def eval_monomials(self, monos, arrays):
        q = self.q
        max_exp = [0, 0, 0, 0]
        for _, e in monos:
            for i in range(4):
                max_exp[i] = max(max_exp[i], e[i])
        one = self.field.to_int(self.field.one)
        powers = []
        for arr, top in zip(arrays, max_exp):
            row = [np.full_like(arr, one)]
            for _ in range(top):
                row.append(self.mul[row[-1], arr])
            powers.append(row)
        out = np.full_like(arrays[0], self.field.to_int(self.field.zero))
        for c, e in monos:
            term = np.full_like(arrays[0], self.embed_int(c))
            for i in range(4):
                if e[i]:
                    term = self.mul[term, powers[i][e[i]]]
            out = self.add[out, term]
        return out


def alpha_counts_table(field):
    """(N0, N2) over a small extension field via index tables."""
    tab = GFTable(field)
    q = tab.q
    rng = np.arange(q, dtype=np.int64)
    grids = np.meshgrid(rng, rng, rng, rng, indexing="ij")
    arrays = [g.reshape(-1) for g in grids]
    zero = field.to_int(field.zero)
    delta = tab.eval_monomials(delta_monomials(), arrays)
    on = delta == zero
    n0 = int(on.sum())
    sub = [a[on] for a in arrays]
    acc = np.ones(n0, dtype=bool)
    for monos in gradient_monomials():
        g = tab.eval_monomials(monos, sub)
        acc &= g == zero
    return n0, int(acc.sum())


# -- dual-number invariant pipeline for the beta Monte Carlo --


def _basis_scatter():
    """(labels x 2) entry positions and signs of the weight basis."""
    from .liealg import POS_CHAR, weight_evec, LABEL_SIGNS

    # rebuild the primary/partner entries exactly as D4Context does
    entries = {}
    for i in range(8):
        for j in range(8):
            if i == j or j == IOTA[i]:
                continue
            char = tuple(a - b for a, b in zip(POS_CHAR[i], POS_CHAR[j]))
            partner = (IOTA[j], IOTA[i])
            primary = min((i, j), partner)
            if char not in entries or primary < entries[char][0]:
                entries[char] = (primary, (IOTA[primary[1]], IOTA[primary[0]]))
    out = []
    for l in LABELS:
        evec = weight_evec(LABEL_SIGNS[l])
        prim, part = entries[evec]
        out.append((prim, part))
    return out


_SCATTER = _basis_scatter()


def _dmul(a, b, p):
    return (a[0] * b[0] % p, (a[0] * b[1] + a[1] * b[0]) % p)


def _dadd(a, b, p):
    return ((a[0] + b[0]) % p, (a[1] + b[1]) % p)


def _dscale(k, a, p):
    return (k * a[0] % p, k * a[1] % p)


def _dmatmul(a, b, p):
    m0 = np.matmul(a[0], b[0]) % p
    m1 = (np.matmul(a[0], b[1]) + np.matmul(a[1], b[0])) % p
    return (m0, m1)


def _dtrace(a, p):
    return (np.trace(a[0], axis1=1, axis2=2) % p, np.trace(a[1], axis1=1, axis2=2) % p)


def _dtrace_prod(a, b, p):
    t0 = np.einsum("nij,nji->n", a[0], b[0]) % p
    t1 = (np.einsum("nij,nji->n", a[0], b[1]) + np.einsum("nij,nji->n", a[1], b[0])) % p
    return (t0, t1)


def beta_mc_prime(p, n_samples, seed, chunk=20000):
    """Monte Carlo count of {x in V(O/pi^2) : Delta(pi(x)) = 0 mod pi^2}.

    Samples uniform dual-number coordinates, pushes them through the matrix
    invariants (even charpoly + Pfaffian, diagonal normalization) and the
    quartic discriminant.  Returns the hit count.
    """
    inv2 = pow(2, p - 2, p)
    inv4 = pow(4, p - 2, p)
    inv6 = pow(6, p - 2, p)
    pf_terms = pfaffian_terms(8)
    signs = np.array([s for s, _ in pf_terms], dtype=np.int64)
    idx = np.array([[list(pair) for pair in pairs] for _, pairs in pf_terms])
    monos = delta_monomials()
    hits = 0
    done = 0
    batch_index = 0
    while done < n_samples:
        size = min(chunk, n_samples - done)
        rng = det_rng(seed, "beta-mc", batch_index)
        batch_index += 1
        coords = rng.integers(0, p, size=(size, 16, 2), dtype=np.int64)
        a0 = np.zeros((size, 8, 8), dtype=np.int64)
        a1 = np.zeros((size, 8, 8), dtype=np.int64)
        for k, ((pi, pj), (qi, qj)) in enumerate(_SCATTER):
            a0[:, pi, pj] = coords[:, k, 0]
            a0[:, qi, qj] = (-coords[:, k, 0]) % p
            a1[:, pi, pj] = coords[:, k, 1]
            a1[:, qi, qj] = (-coords[:, k, 1]) % p
        a = (a0, a1)
        a2 = _dmatmul(a, a, p)
        a4 = _dmatmul(a2, a2, p)
        t2 = _dtrace(a2, p)
        t4 = _dtrace(a4, p)
        t6 = _dtrace_prod(a2, a4, p)
        e2 = _dscale((p - 1) * inv2 % p, t2, p)
        e4 = _dscale((p - 1) * inv4 % p, _dadd(t4, _dmul(e2, t2, p), p), p)
        e6 = _dscale(
            (p - 1) * inv6 % p,
            _dadd(t6, _dadd(_dmul(e2, t4, p), _dmul(e4, t2, p), p), p),
            p,
        )
        # Pfaffian of Psi a: row permutation by iota
        pa0 = a0[:, IOTA, :]
        pa1 = a1[:, IOTA, :]
        g00 = pa0[:, idx[:, 0, 0], idx[:, 0, 1]]
        g01 = pa1[:, idx[:, 0, 0], idx[:, 0, 1]]
        prod = (g00, g01)
        for t in range(1, 4):
            h0 = pa0[:, idx[:, t, 0], idx[:, t, 1]]
            h1 = pa1[:, idx[:, t, 0], idx[:, t, 1]]
            prod = _dmul(prod, (h0, h1), p)
        pf0 = (prod[0] * signs).sum(axis=1) % p
        pf1 = (prod[1] * signs).sum(axis=1) % p
        b_arrays0 = [e2[0], e4[0], pf0, e6[0]]
        b_arrays1 = [e2[1], e4[1], pf1, e6[1]]
        d0, d1 = _eval_monomials_dual(monos, b_arrays0, b_arrays1, p)
        hits += int(((d0 == 0) & (d1 == 0)).sum())
        done += size
    return hits


def _eval_monomials_dual(monos, arr0, arr1, p):
    max_exp = [0, 0, 0, 0]
    for _, e in monos:
        for i in range(4):
            max_exp[i] = max(max_exp[i], e[i])
    powers = []
    for a0, a1, top in zip(arr0, arr1, max_exp):
        row = [(np.ones_like(a0), np.zeros_like(a0))]
        for _ in range(top):
            row.append(_dmul(row[-1], (a0, a1), p))
        powers.append(row)
    out = (np.zeros_like(arr0[0]), np.zeros_like(arr0[0]))
    for c, e in monos:
        term = (np.full_like(arr0[0], c % p), np.zeros_like(arr0[0]))
        for i in range(4):
            if e[i]:
                term = _dmul(term, powers[i][e[i]], p)
        out = _dadd(out, term, p)
    return out


# -- batched polynomial pipeline for the delta_B Monte Carlo --


def _batched_polymul(a, b, p):
    """(N, da+1) x (N, db+1) -> (N, da+db+1), coefficients mod p."""
    n, da1 = a.shape
    db1 = b.shape[1]
    out = np.zeros((n, da1 + db1 - 1), dtype=np.int64)
    for i in range(da1):
        col = a[:, i : i + 1]
        out[:, i : i + db1] = (out[:, i : i + db1] + col * b) % p
    return out


def delta_poly_batch(p, coeff_arrays):
    """Batched Delta for polynomial coefficient tuples (arrays (N, deg+1))."""
    monos = delta_monomials()
    max_exp = [0, 0, 0, 0]
    for _, e in monos:
        for i in range(4):
            max_exp[i] = max(max_exp[i], e[i])
    n = coeff_arrays[0].shape[0]
    powers = []
    for arr, top in zip(coeff_arrays, max_exp):
        row = [np.ones((n, 1), dtype=np.int64)]
        for _ in range(top):
            row.append(_batched_polymul(row[-1], arr, p))
        powers.append(row)
    target_len = 1 + sum(
        (arr.shape[1] - 1) * top for arr, top in zip(coeff_arrays, max_exp)
    )
    out = np.zeros((n, target_len), dtype=np.int64)
    for c, e in monos:
        term = np.full((n, 1), c % p, dtype=np.int64)
        for i in range(4):
            if e[i]:
                term = _batched_polymul(term, powers[i][e[i]], p)
        out[:, : term.shape[1]] = (out[:, : term.shape[1]] + term) % p
    return out


def squarefree_int_list(coeffs, p):
    """Squarefree test of a mod-p polynomial given as an int list (low first)."""
    a = list(coeffs)
    while a and a[-1] == 0:
        a.pop()
    if not a:
        return False  # zero polynomial: caller treats separately
    if len(a) == 1:
        return True
    b = [(i * c) % p for i, c in enumerate(a)][1:]
    while b and b[-1] == 0:
        b.pop()
    if not b:
        return False  # derivative zero: p-th power
    # Euclid on int lists
    while b:
        da, db = len(a) - 1, len(b) - 1
        if da < db:
            a, b = b, a
            da, db = db, da
        inv = pow(b[db], p - 2, p)
        r = a[:]
        for k in range(da - db, -1, -1):
            c = r[db + k] * inv % p
            if c:
                for j in range(db + 1):
                    r[j + k] = (r[j + k] - c * b[j]) % p
        while r and r[-1] == 0:
            r.pop()
        a, b = b, r
    return len(a) == 1


# -- fast int-list polynomial factorization over prime fields --
#
# The X_D pipeline factors discriminants of degree up to ~72 over F_5 in
# bulk; boxed field elements are too slow for that, so these helpers work
# on plain int lists (lowest degree first, trailing zeros stripped).


def _il_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _il_mul(a, b, p):
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return _il_trim(out)


def _il_divmod(a, b, p):
    da, db = len(a) - 1, len(b) - 1
    if db < 0:
        raise ZeroDivisionError
    if da < db:
        return [], list(a)
    inv = pow(b[db], p - 2, p)
    r = list(a)
    q = [0] * (da - db + 1)
    for k in range(da - db, -1, -1):
        c = r[db + k] * inv % p
        if c:
            q[k] = c
            for j in range(db + 1):
                r[j + k] = (r[j + k] - c * b[j]) % p
    return _il_trim(q), _il_trim(r)


def _il_gcd(a, b, p):
    a, b = list(a), list(b)
    while b:
        a, b = b, _il_divmod(a, b, p)[1]
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _il_powmod(base, e, mod, p):
    result = [1]
    base = _il_divmod(base, mod, p)[1]
    while e:
        if e & 1:
            result = _il_divmod(_il_mul(result, base, p), mod, p)[1]
        base = _il_divmod(_il_mul(base, base, p), mod, p)[1]
        e >>= 1
    return result


def _il_monic(a, p):
    if not a:
        return a
    inv = pow(a[-1], p - 2, p)
    return [c * inv % p for c in a]


def _il_deriv(a, p):
    return _il_trim([i * c % p for i, c in enumerate(a)][1:])


def il_factor(coeffs, p, seed=0):
    """[(tuple coeffs of monic irreducible, multiplicity)], sorted."""
    f = _il_monic(_il_trim(list(coeffs)), p)
    if not f:
        raise ValueError("zero polynomial")
    out = []

    def sff(f, mult):
        if len(f) <= 1:
            return
        d = _il_deriv(f, p)
        if not d:
            # f = h(x^p); p-th root by Frobenius inverse on coefficients
            h = [f[i] for i in range(0, len(f), p)]
            sff(h, mult * p)
            return
        w = _il_gcd(f, d, p)
        c = _il_divmod(f, w, p)[0]
        i = 1
        while len(c) > 1:
            y = _il_gcd(w, c, p)
            fac = _il_divmod(c, y, p)[0]
            if len(fac) > 1:
                ddf(_il_monic(fac, p), mult * i)
            w = _il_divmod(w, y, p)[0]
            c = y
            i += 1
        if len(w) > 1:
            sff(w, mult)

    def ddf(f, mult):
        h = [0, 1]
        h = _il_divmod(h, f, p)[1]
        d = 0
        while len(f) > 2:
            d += 1
            if 2 * d > len(f) - 1:
                break
            h = _il_powmod(h, p, f, p)
            hx = list(h)
            # h - x
            while len(hx) < 2:
                hx.append(0)
            hx[1] = (hx[1] - 1) % p
            g = _il_gcd(f, _il_trim(hx), p)
            if len(g) > 1:
                edf(g, d, mult)
                f = _il_divmod(f, g, p)[0]
                h = _il_divmod(h, f, p)[1]
        if len(f) > 1:
            edf(f, len(f) - 1, mult)

    def edf(f, d, mult):
        from .rng import det_rng

        if len(f) - 1 == d:
            out.append((tuple(f), mult))
            return
        rng = det_rng(seed, "il-edf:" + ",".join(map(str, f)))
        work = [f]
        guard = 0
        while work:
            g = work.pop()
            if len(g) - 1 == d:
                out.append((tuple(g), mult))
                continue
            guard += 1
            if guard > 10000:
                raise RuntimeError("equal-degree split failed")
            r = [int(v) for v in rng.integers(0, p, size=len(g) - 1)]
            r = _il_trim(r)
            if not r:
                work.append(g)
                continue
            h = _il_gcd(g, r, p)
            if 1 < len(h) < len(g):
                work += [h, _il_divmod(g, h, p)[0]]
                continue
            e = (p**d - 1) // 2
            s = _il_powmod(r, e, g, p)
            if s:
                s = list(s)
                s[0] = (s[0] - 1) % p
            else:
                s = [p - 1]
            h = _il_gcd(g, _il_trim(s), p)
            if 1 < len(h) < len(g):
                work += [h, _il_divmod(g, h, p)[0]]
            else:
                work.append(g)

    sff(f, 1)
    out.sort(key=lambda t: (len(t[0]), t[0]))
    return out


def delta_poly_intlists(p, coeff_lists):
    """Delta for four mod-p polynomials given as int lists (low first)."""
    monos = delta_monomials()
    max_exp = [0, 0, 0, 0]
    for _, e in monos:
        for i in range(4):
            max_exp[i] = max(max_exp[i], e[i])
    powers = []
    for cs, top in zip(coeff_lists, max_exp):
        row = [[1]]
        for _ in range(top):
            row.append(_il_mul(row[-1], cs, p))
        powers.append(row)
    out = []
    for c, e in monos:
        term = [c % p]
        for i in range(4):
            if e[i]:
                term = _il_mul(term, powers[i][e[i]], p)
        if len(term) > len(out):
            out, term = term, out
        for i, v in enumerate(term):
            out[i] = (out[i] + v) % p
    return _il_trim(out)

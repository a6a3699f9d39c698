"""Local squarefree densities alpha_v, beta_v, the volume identity, and
truncated/Monte Carlo global densities.

alpha_v has three routes that must agree: the first-order lift strategy
(the contracted algorithm), exhaustive enumeration over all q_v^8 residues
(oracle, feasible for q_v <= 7ish), and a closed form obtained by
stratifying the quartics with repeated roots:

    N0(Q) = #{Delta = 0}            = Q^3 + Q - 1
    N2(Q) = #{Delta = 0, grad = 0}  = 4Q^2 - 5Q + 2
    alpha(Q) = ((N0 - N2) Q^3 + N2 Q^4) / Q^8 = (5Q^3 - 9Q^2 + 8Q - 3)/Q^5

(the gradient includes the chain-rule factor 2 q4 from the square constant
term, which is what produces the N2 strata: two double roots, a triple or
quadruple root, and nodal quartics whose double root sits at 0).  The closed
form powers the high-degree places of the truncated global product and the
rigorous tail bound alpha(Q) <= 5/Q^2.

beta_v is never enumerated (q_v^32); the volume identity defines it and
Monte Carlo over V(O/(pi^2)) checks it.
"""

import json
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from math import sqrt

from . import numkernels
from .fields import GF
from .funcfield import count_monic_irreducibles
from .rng import det_rng


def alpha_closed_form(q_v: int) -> Fraction:
    """alpha_v as an exact rational, valid for any prime power q_v (p >= 5)."""
    n0 = q_v**3 + q_v - 1
    n2 = 4 * q_v**2 - 5 * q_v + 2
    return Fraction((n0 - n2) * q_v**3 + n2 * q_v**4, q_v**8)


def alpha_v(q_v: int, p: int = None) -> Fraction:
    """alpha_v by the first-order lift strategy (enumeration of B(k_v)).

    For prime q_v the enumeration is vectorized directly; for prime powers
    up to 64 it runs over index tables.  The result is checked against the
    closed form (hard failure on mismatch).
    """
    if p is None:
        p = _char_of(q_v)
    if q_v == p:
        num = numkernels.alpha_lift_prime(p)
    elif q_v <= 64:
        m = _degree_of(q_v, p)
        n0, n2 = numkernels.alpha_counts_table(GF(p, m))
        num = (n0 - n2) * q_v**3 + n2 * q_v**4
    else:
        raise ValueError(f"enumeration infeasible at q_v = {q_v}; use the closed form")
    out = Fraction(num, q_v**8)
    assert out == alpha_closed_form(q_v), "lift strategy disagrees with the closed form"
    return out


def alpha_bruteforce(q_v: int) -> Fraction:
    """Exhaustive q_v^8 oracle (prime q_v only; q_v <= 7 is comfortable)."""
    p = _char_of(q_v)
    if q_v != p:
        raise ValueError("brute force oracle implemented for prime q_v")
    return Fraction(numkernels.alpha_brute_prime(p), q_v**8)


def _char_of(q):
    for p in range(2, q + 1):
        if q % p == 0:
            return p
    raise ValueError


def _degree_of(q, p):
    m = 0
    while q > 1:
        q //= p
        m += 1
    return m


def so4_count_formula(q: int) -> int:
    return q**2 * (q**2 - 1) ** 2


def so4_count_bruteforce(q: int) -> int:
    """#SO_4(F_q) for the split antidiagonal form, column by column."""
    import numpy as np

    p = q
    if _char_of(q) != q:
        raise ValueError("oracle restricted to prime q")
    rng = np.arange(q, dtype=np.int64)
    vecs = np.stack(
        [g.reshape(-1) for g in np.meshgrid(rng, rng, rng, rng, indexing="ij")], axis=1
    )
    jmat = np.zeros((4, 4), dtype=np.int64)
    for i in range(4):
        jmat[i, 3 - i] = 1

    def bform(u, vs):
        return (u @ jmat @ vs.T) % p

    def qform(vs):
        return np.einsum("ni,ij,nj->n", vs, jmat, vs) % p

    iso = vecs[qform(vecs) == 0]
    count = 0
    for c1 in iso:
        keep2 = iso[(bform(c1, iso) == 0)]
        for c2 in keep2:
            if np.all(c2 == 0) or np.all(c1 == 0):
                continue
            keep3 = iso[(bform(c1, iso) == 0) & (bform(c2, iso) == 1)]
            if len(keep3) == 0:
                continue
            keep4 = iso[
                (bform(c1, iso) == 1) & (bform(c2, iso) == 0)
            ]
            for c3 in keep3:
                cand = keep4[(bform(c3, keep4) == 0)]
                if len(cand) == 0:
                    continue
                dets = _det4_mod(np.stack([np.broadcast_to(c1, (len(cand), 4)),
                                           np.broadcast_to(c2, (len(cand), 4)),
                                           np.broadcast_to(c3, (len(cand), 4)),
                                           cand], axis=2), p)
                count += int((dets == 1).sum())
    return count


def _det4_mod(mats, p):
    import numpy as np

    # mats: (n, 4, 4) with columns c1..c4; Laplace along the last column
    out = np.zeros(mats.shape[0], dtype=np.int64)
    for j in range(4):
        sign = (-1) ** (j + 3)
        minor = _det3_mod(np.delete(np.delete(mats, 3, axis=2), j, axis=1), p)
        out = (out + sign * mats[:, j, 3] * minor) % p
    return out % p


def _det3_mod(mats, p):
    a = mats
    return (
        a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
        - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
        + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0])
    ) % p


def vol_g(q: int) -> Fraction:
    """vol(G(O_v)) = #G(F_q)/q^12 with #G = #SO_4(F_q)^2 (Lang count
    through the central isogeny SO_4 x SO_4 -> G with kernel mu_2)."""
    return Fraction(so4_count_formula(q) ** 2, q**12)


@dataclass
class DensityReport:
    q_v: int
    alpha: Fraction
    beta: Fraction
    vol_g: Fraction
    identity_residual: Fraction
    mc_estimate: dict | None = None
    assumptions: tuple = (
        "vol(G(O_v)) = #G(k_v)/q_v^dim G (smooth-model volume)",
        "alpha, beta depend on v through q_v only",
    )

    def to_json(self) -> str:
        data = {
            "q_v": self.q_v,
            "alpha": str(self.alpha),
            "beta": str(self.beta),
            "vol_G": str(self.vol_g),
            "identity_residual": str(self.identity_residual),
            "mc": self.mc_estimate,
            "assumptions": list(self.assumptions),
        }
        return json.dumps(data, indent=2, sort_keys=True)


def beta_v(q_v: int, mc: tuple = None, sigma_gate: float = 4.0) -> DensityReport:
    """beta_v = 1 - vol_G (1 - alpha_v), with optional Monte Carlo check.

    mc = (N, seed) samples N points of V(O/(pi^2)) and requires the exact
    value within sigma_gate standard errors (hard failure otherwise).
    Monte Carlo is available at prime q_v.
    """
    alpha = alpha_v(q_v)
    vol = vol_g(q_v)
    beta = 1 - vol * (1 - alpha)
    residual = vol * (1 - alpha) - (1 - beta)
    assert residual == 0
    assert 0 < alpha < 1 and 0 < beta < 1
    mc_data = None
    if mc is not None:
        n, seed = mc
        p = _char_of(q_v)
        if q_v != p:
            raise ValueError("Monte Carlo beta implemented for prime q_v")
        hits = numkernels.beta_mc_prime(p, n, seed)
        mean = hits / n
        stderr = sqrt(max(mean * (1 - mean), 1e-12) / n)
        dev = abs(mean - float(beta))
        mc_data = {
            "N": n,
            "seed": seed,
            "hits": hits,
            "mean": mean,
            "stderr": stderr,
            "deviation_sigmas": dev / stderr if stderr else 0.0,
        }
        if dev > sigma_gate * stderr:
            raise AssertionError(
                f"Monte Carlo beta {mean} deviates from exact {float(beta)} "
                f"by {dev / stderr:.2f} sigma"
            )
    return DensityReport(q_v, alpha, beta, vol, residual, mc_data)


def place_count(q: int, degree: int) -> int:
    """Places of P^1/F_q of the given degree (infinity included at 1)."""
    n = count_monic_irreducibles(q, degree)
    return n + 1 if degree == 1 else n


def delta_b_truncated(q: int, max_degree: int) -> Fraction:
    """prod over places of degree <= max_degree of (1 - alpha_v)."""
    out = Fraction(1)
    for n in range(1, max_degree + 1):
        out *= (1 - alpha_closed_form(q**n)) ** place_count(q, n)
    return out


def delta_b_tail_bound(q: int, beyond_degree: int) -> Fraction:
    """Rigorous bound on the truncation error: sum over deg v > B of alpha_v.

    Uses alpha(Q) <= 5/Q^2 and N_n <= q^n/n:
    sum_{n>B} (q^n/n) 5 q^{-2n} <= (5/(B+1)) q^{-B} / (q-1).
    The product/tail comparison |prod_{<=B} - prod_all| <= tail holds since
    all factors lie in (0, 1].
    """
    b = beyond_degree
    return Fraction(5, (b + 1) * (q - 1)) * Fraction(1, q**b)


def delta_b_montecarlo(field, d: int, n: int, seed: int):
    """Empirical in_XD fraction over H^0(X, B_D), D = d*infinity, batched.

    Returns (fraction, stderr, hits).  Matches curves.xd_membership: the
    affine discriminant must be squarefree, nonzero, and have at most a
    simple zero at infinity (24 d - deg Delta <= 1).
    """
    import numpy as np

    p = field.char
    if field.order != p:
        raise ValueError("Monte Carlo delta_B implemented for prime fields")
    weights = (1, 2, 2, 3)
    hits = 0
    done = 0
    batch_index = 0
    chunk = 4000
    while done < n:
        size = min(chunk, n - done)
        rng = det_rng(seed, "delta-b-mc", batch_index)
        batch_index += 1
        arrays = [
            rng.integers(0, p, size=(size, 2 * d * w + 1), dtype=np.int64)
            for w in weights
        ]
        delta = numkernels.delta_poly_batch(p, arrays)
        for row in delta:
            coeffs = row.tolist()
            deg = -1
            for i, c in enumerate(coeffs):
                if c:
                    deg = i
            if deg < 0:
                continue
            if 24 * d - deg > 1:
                continue
            if numkernels.squarefree_int_list(coeffs[: deg + 1], p):
                hits += 1
        done += size
    frac = hits / n
    stderr = sqrt(max(frac * (1 - frac), 1e-12) / n)
    return frac, stderr, hits

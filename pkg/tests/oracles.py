"""Small brute-force references used to cross-check the library.

Nothing here uses the library's search code; field arithmetic is redone from
the modulus with schoolbook polynomial multiplication.
"""

from __future__ import annotations

import itertools

import numpy as np


def digits(v, p, k):
    out = []
    for _ in range(k):
        out.append(v % p)
        v //= p
    return out


def undigits(ds, p):
    v = 0
    for c in reversed(ds):
        v = v * p + c
    return v


def naive_add(F, x, y):
    return undigits([(a + b) % F.p for a, b in zip(digits(x, F.p, F.k), digits(y, F.p, F.k))], F.p)


def naive_mul(F, x, y):
    p, k, mod = F.p, F.k, F.modulus
    a, b = digits(x, p, k), digits(y, p, k)
    c = [0] * (2 * k)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            c[i + j] = (c[i + j] + ai * bj) % p
    for deg in range(2 * k - 1, k - 1, -1):
        f = c[deg]
        if f:
            for i in range(k + 1):
                c[deg - k + i] = (c[deg - k + i] - f * mod[i]) % p
    return undigits(c[:k], p)


class Arith:
    """Vector arithmetic over a field using only the naive operations."""

    def __init__(self, F):
        self.F = F
        q = F.q
        self.add = [[naive_add(F, a, b) for b in range(q)] for a in range(q)]
        self.mul = [[naive_mul(F, a, b) for b in range(q)] for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)
        self.neg = [next(b for b in range(q) if self.add[a][b] == 0) for a in range(q)]

    def combo(self, coeffs, vecs):
        out = [0] * len(vecs[0])
        for c, v in zip(coeffs, vecs):
            if c:
                out = [self.add[o][self.mul[c][x]] for o, x in zip(out, v)]
        return out

    def rank(self, rows):
        rows = [list(r) for r in rows]
        rk, col = 0, 0
        ncols = len(rows[0]) if rows else 0
        while rk < len(rows) and col < ncols:
            piv = next((i for i in range(rk, len(rows)) if rows[i][col]), None)
            if piv is None:
                col += 1
                continue
            rows[rk], rows[piv] = rows[piv], rows[rk]
            iv = self.inv[rows[rk][col]]
            rows[rk] = [self.mul[iv][x] for x in rows[rk]]
            for i in range(len(rows)):
                if i != rk and rows[i][col]:
                    f = self.neg[rows[i][col]]
                    rows[i] = [self.add[a][self.mul[f][b]] for a, b in zip(rows[i], rows[rk])]
            rk += 1
            col += 1
        return rk


def power(A, x, e):
    out = 1
    for _ in range(e):
        out = A.mul[out][x]
    return out


def eval_monomial(A, m, pt):
    return prod_field(A, [power(A, x, e) for x, e in zip(pt, m)])


def prod_field(A, xs):
    out = 1
    for x in xs:
        out = A.mul[out][x]
    return out


def monomials(s, d):
    return [m for m in itertools.product(range(d + 1), repeat=s) if sum(m) == d]


def hilbert_by_rank(A, points, d):
    """dim of degree-d forms restricted to the points, by raw evaluation rank."""
    rows = [[eval_monomial(A, m, pt) for pt in points] for m in monomials(len(points[0]), d)]
    return A.rank(rows)


def brute_ghw(A, G, r):
    """min |supp D| over r-dim subcodes D of the row space of G (small codes only)."""
    H, q = len(G), A.F.q
    words = []
    for msg in itertools.product(range(q), repeat=H):
        if any(msg):
            words.append(A.combo(msg, G))
    best = None
    for combo in itertools.combinations(range(len(words)), r):
        vecs = [words[i] for i in combo]
        if A.rank(vecs) < r:
            continue
        supp = sum(1 for col in zip(*vecs) if any(col))
        best = supp if best is None else min(best, supp)
    return best


def projective_points(A, s):
    q = A.F.q
    pts = []
    for v in itertools.product(range(q), repeat=s):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def generic_lemma92_degree(sizes, a_head, a_last=0):
    """Count standard monomials of S/(t_i^{d_i}, t^a) in a degree where the count is stable."""
    D = sum(d - 1 for d in sizes) + a_last
    count = 0
    for b in itertools.product(*[range(d) for d in sizes]):
        last = D - sum(b)
        if all(x >= y for x, y in zip(b, a_head)) and last >= a_last:
            continue
        count += 1
    return count


def generic_lemma92_degrees(sizes, heads, a_last=0):
    """Vectorised form of generic_lemma92_degree for many exponent heads at once."""
    box = np.array(list(itertools.product(*[range(d) for d in sizes])), dtype=np.int64)
    heads = np.asarray(heads, dtype=np.int64)
    D = sum(d - 1 for d in sizes) + a_last
    last_ok = (D - box.sum(axis=1)) >= a_last
    divisible = np.all(box[None, :, :] >= heads[:, None, :], axis=2) & last_ok[None, :]
    return len(box) - divisible.sum(axis=1)

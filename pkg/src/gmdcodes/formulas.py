"""Closed forms and exhaustive verifiers for second weights of cartesian codes."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import prod
from typing import Sequence

import numpy as np

from .gf import FieldSpec
from .poly import Polynomial


class RangeError(ValueError):
    pass


def _sorted_sizes(sizes, minimum=2):
    sizes = tuple(int(x) for x in sizes)
    if list(sizes) != sorted(sizes):
        raise RangeError(f"sizes {sizes} must be non-decreasing")
    if any(x < minimum for x in sizes):
        raise RangeError(f"sizes {sizes} must all be >= {minimum}")
    return sizes


# -- pi(a, b) and the integer inequality ----------------------------------------

def pi(a: Sequence[int], b: Sequence[int]) -> int:
    """prod(a) + prod(b) - prod(min(a_i, b_i))."""
    if len(a) != len(b):
        raise ValueError("sequences of different length")
    if any(x < 1 for x in a) or any(x < 1 for x in b):
        raise ValueError("entries must be positive")
    return prod(a) + prod(b) - prod(min(x, y) for x, y in zip(a, b))


def thm62_rhs(a: Sequence[int], e: Sequence[int], k: int) -> int:
    """(sum(a) - sum(e[k:]) - (k-2)) * prod(e[k:]) - prod(e[k+1:]), k is 1-based."""
    m = len(e)
    if not 1 <= k <= m - 1:
        raise RangeError(f"k must lie in 1..{m - 1}")
    return (sum(a) - sum(e[k:]) - (k - 2)) * prod(e[k:]) - prod(e[k + 1:])


def _report(checked, violations, tight):
    return {"checked": int(checked), "violations": violations, "tight_instances": tight}


def verify_thm62(e: Sequence[int], max_violations: int = 20) -> dict:
    """All pairs a != b in the box [1, e_i] with equal sums and every k."""
    e = tuple(int(x) for x in e)
    if list(e) != sorted(e) or e[0] < 1:
        raise RangeError(f"bounds {e} must be positive and non-decreasing")
    if len(e) < 2:
        return _report(0, [], [])
    from ._kernels import thm62_scan
    checked, nviol, slack, ba, bb, bk = thm62_scan(np.array(e, dtype=np.int64), len(e))
    violations = []
    if nviol:
        violations = _thm62_violations(e, max_violations)
    tight = []
    if checked:
        tight = [{"a": ba.tolist(), "b": bb.tolist(), "k": int(bk), "slack": int(slack)}]
    return _report(checked, violations, tight)


def _thm62_violations(e, limit):
    out = []
    boxes = [range(1, x + 1) for x in e]
    for a, b in itertools.combinations(itertools.product(*boxes), 2):
        if sum(a) != sum(b):
            continue
        for k in range(1, len(e)):
            if pi(a, b) < thm62_rhs(a, e, k):
                out.append({"a": list(a), "b": list(b), "k": k})
                if len(out) >= limit:
                    return out
    return out


def bounded_tuples(max_prod: int, max_len: int, minimum: int = 1):
    """Non-decreasing tuples of integers >= minimum with product <= max_prod."""
    def rec(cur, p, lo):
        if cur:
            yield cur
        if len(cur) == max_len:
            return
        x = lo
        while p * x <= max_prod:
            yield from rec(cur + (x,), p * x, x)
            x += 1
    yield from rec((), 1, minimum)


def verify_thm62_all(max_prod: int = 2000, max_len: int = 4) -> dict:
    checked = 0
    violations = []
    tight = None
    tuples = 0
    for e in bounded_tuples(max_prod, max_len):
        tuples += 1
        rep = verify_thm62(e)
        checked += rep["checked"]
        violations += [dict(v, e=list(e)) for v in rep["violations"]]
        for t in rep["tight_instances"]:
            if tight is None or t["slack"] < tight["slack"]:
                tight = dict(t, e=list(e))
    out = _report(checked, violations, [tight] if tight else [])
    out["bound_vectors"] = tuples
    return out


def lemma53_check(e: Sequence[int], b: Sequence[int] | None = None) -> dict:
    """prod(e-b) >= (sum_{i<=k}(e_i-b_i) - (k-1) - sum_{i>k} b_i) prod_{i>k} e_i.

    With ``b`` given only that vector is checked, otherwise every b in the
    box 0 <= b_i <= e_i - 1; always for k = 1..m.
    """
    e = np.array(e, dtype=np.int64)
    m = len(e)
    if np.any(np.diff(e) < 0) or e[0] < 1:
        raise RangeError("bounds must be positive and non-decreasing")
    if b is None:
        B = np.array(list(itertools.product(*[range(x) for x in e])), dtype=np.int64)
    else:
        B = np.array([b], dtype=np.int64)
        if np.any(B < 0) or np.any(B > e - 1):
            raise RangeError("b must satisfy 0 <= b_i <= e_i - 1")
    D = e - B
    lhs = D.prod(axis=1)
    violations = []
    slack_min = None
    tight = []
    for k in range(1, m + 1):
        rhs = (D[:, :k].sum(axis=1) - (k - 1) - B[:, k:].sum(axis=1)) * int(np.prod(e[k:]))
        slack = lhs - rhs
        for i in np.nonzero(slack < 0)[0][:20]:
            violations.append({"b": B[i].tolist(), "k": k})
        j = int(slack.argmin())
        if slack_min is None or slack[j] < slack_min:
            slack_min = int(slack[j])
            tight = [{"b": B[j].tolist(), "k": k, "slack": slack_min}]
    return _report(len(B) * m, violations, tight)


def verify_lemma53_all(max_prod: int = 500, max_len: int = 4) -> dict:
    checked, violations, n = 0, [], 0
    for e in bounded_tuples(max_prod, max_len):
        n += 1
        rep = lemma53_check(e)
        checked += rep["checked"]
        violations += [dict(v, e=list(e)) for v in rep["violations"]]
    out = _report(checked, violations, [])
    out["bound_vectors"] = n
    return out


def verify_lemma63(max_sum: int = 30) -> dict:
    """a_1...a_r >= (a_1 + ... + a_r) - (r - 1) over all partitions with sum <= max_sum.

    Both sides are symmetric, so partitions stand in for all tuples.
    """
    checked, violations = 0, []

    def parts(n, most):
        if n == 0:
            yield ()
            return
        for x in range(min(n, most), 0, -1):
            for rest in parts(n - x, x):
                yield (x,) + rest

    for total in range(1, max_sum + 1):
        for p in parts(total, total):
            checked += 1
            if prod(p) < total - (len(p) - 1):
                violations.append(list(p))
    return _report(checked, violations, [])


# -- degrees of cartesian monomial ideals -------------------------------------------

def lemma92_degree(sizes: Sequence[int], a: Sequence[int]) -> int:
    """deg(S/(t_1^{d_1},...,t_n^{d_n}, t^a)) = prod(d) - prod(d_i - a_i)."""
    n = len(sizes)
    if len(a) not in (n, n + 1):
        raise RangeError("a must have n or n+1 entries")
    head = a[:n]
    if any(x < 0 for x in a):
        raise RangeError("exponents must be non-negative")
    if not any(x >= 1 for x in head):
        raise RangeError("need a_j >= 1 for some j <= n")
    if any(x > d - 1 for x, d in zip(head, sizes)):
        raise RangeError("need a_i <= d_i - 1 for i <= n")
    return prod(sizes) - prod(d - x for d, x in zip(sizes, head))


@dataclass(frozen=True)
class DegreeDecomposition:
    k: int
    ell: int


def degree_decomposition(d: int, sizes: Sequence[int]) -> DegreeDecomposition:
    """The unique (k, l) with d = sum_{i<=k}(sizes_i - 1) + l, 1 <= l <= sizes_{k+1} - 1."""
    total = sum(x - 1 for x in sizes)
    if not 1 <= d <= total:
        raise RangeError(f"d = {d} outside 1..{total}")
    acc = 0
    for k, x in enumerate(sizes):
        if d - acc <= x - 1:
            return DegreeDecomposition(k, d - acc)
        acc += x - 1
    raise AssertionError("unreachable")


def thm83_delta2(sizes: Sequence[int], d: int) -> int:
    """Second weight of the affine cartesian code with factor sizes d_1 <= ... <= d_n."""
    sizes = _sorted_sizes(sizes)
    if d < 1:
        raise RangeError("d must be >= 1")
    n = len(sizes)
    if d >= sum(x - 1 for x in sizes):
        return 2
    dec = degree_decomposition(d, sizes)
    k, ell = dec.k, dec.ell
    # s - 3 = n - 2 and s - 2 = n - 1; sizes is 0-based
    if k < n - 2:
        return (sizes[k] - ell + 1) * prod(sizes[k + 1:]) - prod(sizes[k + 2:])
    if k == n - 2:
        return (sizes[k] - ell + 1) * prod(sizes[k + 1:]) - 1
    return sizes[n - 1] - ell + 1


def P_value(sizes: Sequence[int], a: Sequence[int], b: Sequence[int]) -> int:
    ua = [d - x for d, x in zip(sizes, a)]
    ub = [d - x for d, x in zip(sizes, b)]
    return prod(ua) + prod(ub) - prod(min(x, y) for x, y in zip(ua, ub))


def thm85_min(sizes: Sequence[int], d: int):
    """min P(a, b) over admissible exponent pairs; returns (value, (a, b)).

    Exponents satisfy 0 <= a_i <= d_i - 1 for i <= n with some a_i > 0, and
    the last exponent takes up the rest of the degree.
    """
    sizes = _sorted_sizes(sizes)
    n = len(sizes)
    if n < 2:
        raise RangeError("need at least two factors")
    if not 1 <= d <= sum(x - 1 for x in sizes):
        raise RangeError(f"d = {d} outside 1..{sum(x - 1 for x in sizes)}")
    heads = [h for h in itertools.product(*[range(x) for x in sizes])
             if 0 < sum(h) <= d]
    H = np.array(heads, dtype=np.int64)
    U = np.array(sizes, dtype=np.int64) - H  # d_i - a_i
    prods = U.prod(axis=1)
    best, arg = None, None
    for i in range(len(heads) - 1):
        mins = np.minimum(U[i], U[i + 1:]).prod(axis=1)
        vals = prods[i] + prods[i + 1:] - mins
        j = int(vals.argmin())
        if best is None or vals[j] < best:
            best = int(vals[j])
            a = tuple(heads[i]) + (d - sum(heads[i]),)
            b = tuple(heads[i + 1 + j]) + (d - sum(heads[i + 1 + j]),)
            arg = (a, b)
    if best is None:
        raise RangeError("no admissible pair")
    return best, arg


def cor84_torus_delta2(q: int, s: int, d: int) -> int:
    """Second weight of the projective torus code in P^{s-1} over GF(q)."""
    if q < 3:
        raise RangeError("q must be >= 3")
    if s < 3:
        raise RangeError("s must be >= 3")
    if d < 1:
        raise RangeError("d must be >= 1")
    eta, gamma = (q - 2) * (s - 2), (q - 2) * (s - 1)
    if d >= gamma:
        return 2
    k, ell = divmod(d - 1, q - 2)
    ell += 1
    if d <= eta:
        return (q - 1) ** (s - (k + 3)) * ((q - 1) * (q - ell) - 1)
    return q - ell


def conjecture52_value(sizes: Sequence[int], d: int) -> int:
    """The conjectured minimum distance of a nested cartesian code (false in general)."""
    sizes = _sorted_sizes(sizes)
    tail = sizes[1:]
    total = sum(x - 1 for x in tail)
    if d < 1:
        raise RangeError("d must be >= 1")
    if d >= total + 1:
        return 1
    dec = degree_decomposition(d, tail)
    return (tail[dec.k] - dec.ell + 1) * prod(tail[dec.k + 1:])


def thm55_bound(sizes: Sequence[int], d: int) -> int:
    """Lower bound d_1 - l + 1 for d = sum_{i=2}^{s-1}(d_i - 1) + l, 1 <= l <= d_1 - 1."""
    sizes = _sorted_sizes(sizes)
    base = sum(x - 1 for x in sizes[1:-1])
    ell = d - base
    if not 1 <= ell <= sizes[0] - 1:
        raise RangeError(f"d = {d} outside {base + 1}..{base + sizes[0] - 1}")
    return sizes[0] - ell + 1


# -- explicit witnesses ---------------------------------------------------------------

def lemma91_count(sizes: Sequence[int], d: int) -> int:
    """Common zeros of the two witness polynomials on A_1 x ... x A_n."""
    sizes = _sorted_sizes(sizes)
    n = len(sizes)
    dec = degree_decomposition(d, sizes)
    k, ell = dec.k, dec.ell
    D = prod(sizes)
    if k < n - 2:
        return D - (sizes[k] - ell + 1) * prod(sizes[k + 1:]) + prod(sizes[k + 2:])
    if k == n - 2:
        return D - (sizes[k] - ell + 1) * prod(sizes[k + 1:]) + 1
    return D - sizes[n - 1] + ell - 1


def lemma91_witness(F: FieldSpec, factors: Sequence[Sequence[int]], d: int):
    """Two independent forms of degree d with many common zeros on the cartesian set.

    Returns homogeneous (F, G) in n+1 variables (t_{n+1} homogenizes) and the
    predicted common-zero count on the affine points.  Factors must be given
    in non-decreasing order of size.
    """
    factors = [tuple(A) for A in factors]
    if [len(A) for A in factors] != sorted(len(A) for A in factors):
        raise RangeError("factors must be ordered by non-decreasing size")
    sizes = _sorted_sizes([len(A) for A in factors])
    n = len(factors)
    s = n + 1
    dec = degree_decomposition(d, sizes)
    k, ell = dec.k, dec.ell
    h = Polynomial.var(F, s, n)  # homogenizing variable

    def lin(i, beta):
        # beta * t_{n+1} - t_i
        return h.scale(beta) - Polynomial.var(F, s, i)

    base = Polynomial.constant(F, s, 1)
    for i in range(k):
        for beta in factors[i][: sizes[i] - 1]:
            base = base * lin(i, beta)
    for beta in factors[k][: ell - 1]:
        base = base * lin(k, beta)
    h1 = lin(k, factors[k][ell - 1])
    if k <= n - 2:
        h2 = lin(k + 1, factors[k + 1][ell - 1])
    else:
        h2 = lin(k, factors[k][ell])
    Fp, Gp = base * h1, base * h2
    return Fp, Gp, lemma91_count(sizes, d)


# -- consistency triangle -------------------------------------------------------------

def smallest_prime_power(n: int) -> tuple[int, int]:
    """(p, k) with p^k the least prime power >= n."""
    from .gf import is_prime
    q = max(n, 2)
    while True:
        for p in range(2, q + 1):
            if is_prime(p):
                k, v = 0, 1
                while v < q:
                    v *= p
                    k += 1
                if v == q:
                    return p, k
        q += 1


def consistency_triangle(sizes: Sequence[int], budget: int | None = None) -> list[dict]:
    """Compare the closed form, the P-minimum, the footprint and the true delta(d, 2).

    Uses the affine cartesian set whose i-th factor is the first d_i field
    elements, over the smallest field that has room for the largest factor.
    """
    from .geometry import affine_cartesian_set
    from .gf import make_field
    from .gmdfun import delta_fn, footprint_fn
    from .geometry import vanishing_ideal

    sizes = _sorted_sizes(sizes)
    F = make_field(*smallest_prime_power(max(sizes)))
    X = affine_cartesian_set(F, [list(range(x)) for x in sizes])
    V = vanishing_ideal(X)
    rows = []
    for d in range(1, sum(x - 1 for x in sizes) + 1):
        row = {"d": d, "thm83": thm83_delta2(sizes, d), "thm85": thm85_min(sizes, d)[0],
               "footprint": footprint_fn(V.initial, V.degree, d, 2),
               "delta": delta_fn(X, d, 2, budget=budget)}
        row["ok"] = len({row["thm83"], row["thm85"], row["footprint"], row["delta"]}) == 1
        rows.append(row)
    return rows

"""Buchberger bases, monomial ideals, Hilbert functions and vanishing ideals."""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .linalg import nullspace, rank, rref
from .poly import (
    MonomialOrder, Polynomial, divide, mono_div, mono_divides, mono_lcm, mono_mul,
    monomials_of_degree,
)


class DimensionError(ValueError):
    """Raised when a quotient has Krull dimension above what is supported."""


def _minimalize(gens: Iterable[tuple]) -> tuple[tuple, ...]:
    uniq = sorted(set(tuple(g) for g in gens), key=lambda m: (sum(m), m))
    keep: list[tuple] = []
    for g in uniq:
        if not any(mono_divides(h, g) for h in keep):
            keep.append(g)
    return tuple(sorted(keep))


@dataclass(frozen=True)
class MonomialIdeal:
    """Monomial ideal stored by its minimal generators (exponent tuples)."""

    s: int
    mingens: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for g in self.mingens:
            if len(g) != self.s:
                raise ValueError(f"generator {g} does not live in {self.s} variables")
        object.__setattr__(self, "mingens", _minimalize(self.mingens))

    @classmethod
    def of(cls, s: int, gens: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return cls(s, tuple(tuple(g) for g in gens))

    def is_unit(self) -> bool:
        return any(sum(g) == 0 for g in self.mingens)

    def contains(self, m: Sequence[int]) -> bool:
        return any(mono_divides(g, m) for g in self.mingens)

    def __contains__(self, m):
        return self.contains(m)

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.s, self.mingens + tuple(other.mingens))

    def add_monomials(self, ms: Iterable[Sequence[int]]) -> "MonomialIdeal":
        return MonomialIdeal(self.s, self.mingens + tuple(tuple(m) for m in ms))

    def max_exponents(self) -> tuple[int, ...]:
        if not self.mingens:
            return (0,) * self.s
        return tuple(max(g[i] for g in self.mingens) for i in range(self.s))


def standard_monomials(L: MonomialIdeal, d: int) -> list[tuple[int, ...]]:
    """Degree-d monomials outside L."""
    if d < 0:
        return []
    return [m for m in monomials_of_degree(L.s, d) if not L.contains(m)]


def hilbert_function(L: MonomialIdeal, d: int) -> int:
    if d < 0:
        return 0
    if not L.mingens:
        return comb(d + L.s - 1, L.s - 1)
    if L.is_unit():
        return 0
    return sum(1 for m in monomials_of_degree(L.s, d) if not L.contains(m))


def krull_dimension(L: MonomialIdeal) -> int:
    """Largest set of variables containing the support of no generator.

    Returns -1 for the unit ideal.
    """
    if L.is_unit():
        return -1
    supports = [frozenset(i for i, e in enumerate(g) if e) for g in L.mingens]
    for size in range(L.s, -1, -1):
        for V in itertools.combinations(range(L.s), size):
            Vs = set(V)
            if not any(sup <= Vs for sup in supports):
                return size
    return 0


def degree_and_regularity(L: MonomialIdeal) -> tuple[int, int]:
    """(deg(S/L), reg(S/L)) for quotients of Krull dimension at most one.

    With E the sum over variables of the largest exponent among generators,
    the Hilbert function agrees with the Hilbert polynomial from E on.
    """
    dim = krull_dimension(L)
    if dim > 1:
        raise DimensionError(f"Krull dimension {dim} > 1 is not supported")
    if dim < 0:
        return 0, 0
    E = sum(L.max_exponents())
    hf = [int(x) for x in hilbert_values(L, E)]
    if dim == 0:
        r0 = E + 1
        while r0 > 0 and hf[r0 - 1] == 0:
            r0 -= 1
        return sum(hf), r0
    const = hf[E]
    r0 = E
    while r0 > 0 and hf[r0 - 1] == const:
        r0 -= 1
    return const, r0


@functools.lru_cache(maxsize=64)
def _monomial_table(s: int, D: int) -> tuple[np.ndarray, np.ndarray]:
    """All monomials of degree <= D in s variables and their degrees."""
    rows = [m for e in range(D + 1) for m in monomials_of_degree(s, e)]
    A = np.array(rows, dtype=np.int16).reshape(-1, s)
    return A, A.sum(axis=1)


def hilbert_values(L: MonomialIdeal, D: int) -> np.ndarray:
    """Vectorized [HF(0), ..., HF(D)]."""
    A, deg = _monomial_table(L.s, D)
    if L.mingens:
        gens = np.array(L.mingens, dtype=np.int16)
        inside = np.zeros(A.shape[0], dtype=bool)
        for g in gens:
            inside |= np.all(A >= g, axis=1)
        deg = deg[~inside]
    return np.bincount(deg, minlength=D + 1)[: D + 1]


@functools.lru_cache(maxsize=1 << 16)
def quotient_degree(L: MonomialIdeal) -> int:
    """deg(S/L), cached; dim(S/L) must be at most one."""
    dim = krull_dimension(L)
    if dim > 1:
        raise DimensionError(f"Krull dimension {dim} > 1 is not supported")
    if dim < 0:
        return 0
    E = sum(L.max_exponents())
    hf = hilbert_values(L, E)
    if dim == 1:
        return int(hf[E])
    return int(hf.sum())


def _colon_mono(L: MonomialIdeal, m) -> MonomialIdeal:
    return MonomialIdeal(L.s, tuple(tuple(max(gi - mi, 0) for gi, mi in zip(g, m))
                                    for g in L.mingens))


def _intersect(A: MonomialIdeal, B: MonomialIdeal) -> MonomialIdeal:
    return MonomialIdeal(A.s, tuple(mono_lcm(a, b) for a in A.mingens for b in B.mingens))


def monomial_colon(L: MonomialIdeal, M: Iterable[Sequence[int]]) -> MonomialIdeal:
    """(L : (M)) as the intersection of the (L : m)."""
    M = [tuple(m) for m in M]
    if not M:
        raise ValueError("colon by an empty set of monomials")
    out = _colon_mono(L, M[0])
    for m in M[1:]:
        out = _intersect(out, _colon_mono(L, m))
    return out


def colon_is_proper(L: MonomialIdeal, M: Iterable[Sequence[int]]) -> bool:
    """True when (L : (M)) strictly contains L."""
    C = monomial_colon(L, M)
    return any(not L.contains(g) for g in C.mingens)


# -- Groebner bases ------------------------------------------------------------

@dataclass(frozen=True)
class GroebnerBasis:
    order: MonomialOrder
    gens: tuple[Polynomial, ...]

    @property
    def s(self) -> int:
        return self.gens[0].s

    @property
    def field(self):
        return self.gens[0].field

    def leading_monomials(self):
        return [g.leading_monomial(self.order) for g in self.gens]

    def reduce(self, f: Polynomial) -> Polynomial:
        return divide(f, self.gens, self.order)[1]

    def contains(self, f: Polynomial) -> bool:
        return self.reduce(f).is_zero()

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    F = f.field
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    a = f.mul_term(mono_div(lcm, mf), F.inv(cf.value))
    b = g.mul_term(mono_div(lcm, mg), F.inv(cg.value))
    return a - b


def _coprime(a, b):
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def buchberger(gens: Sequence[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis (normal selection strategy, full inter-reduction)."""
    gens = [g for g in gens if not g.is_zero()]
    if not gens:
        raise ValueError("need at least one nonzero generator")
    key = order.key
    G = [g.monic(order) for g in gens]
    lm = [g.leading_monomial(order) for g in G]
    pairs = {(i, j) for j in range(len(G)) for i in range(j)}
    while pairs:
        i, j = min(pairs, key=lambda p: (key(mono_lcm(lm[p[0]], lm[p[1]])), p))
        pairs.discard((i, j))
        lcm = mono_lcm(lm[i], lm[j])
        if _coprime(lm[i], lm[j]):
            continue
        # chain criterion
        if any(k != i and k != j and mono_divides(lm[k], lcm)
               and (min(i, k), max(i, k)) not in pairs
               and (min(j, k), max(j, k)) not in pairs for k in range(len(G))):
            continue
        r = divide(s_polynomial(G[i], G[j], order), G, order)[1]
        if not r.is_zero():
            r = r.monic(order)
            G.append(r)
            lm.append(r.leading_monomial(order))
            n = len(G) - 1
            pairs.update((k, n) for k in range(n))
    return _reduce_basis(G, order)


def _reduce_basis(G: list[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    key = order.key
    G = sorted(G, key=lambda g: key(g.leading_monomial(order)))
    minimal: list[Polynomial] = []
    for g in G:
        m = g.leading_monomial(order)
        if not any(mono_divides(h.leading_monomial(order), m) for h in minimal):
            minimal = [h for h in minimal
                       if not mono_divides(m, h.leading_monomial(order))]
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        m, _ = g.leading_term(order)
        tail = Polynomial(g.field, g.s, {k: v for k, v in g.terms.items() if k != m})
        r = divide(tail, others, order)[1] if others else tail
        reduced.append((Polynomial.monomial(g.field, m, 1) + r.scale(g.field.inv(g.terms[m]))))
    reduced.sort(key=lambda g: key(g.leading_monomial(order)))
    return GroebnerBasis(order, tuple(reduced))


def is_groebner(G: Sequence[Polynomial], order: MonomialOrder) -> bool:
    """Buchberger criterion over every pair."""
    G = list(G)
    for i, j in itertools.combinations(range(len(G)), 2):
        if not divide(s_polynomial(G[i], G[j], order), G, order)[1].is_zero():
            return False
    return True


def is_reduced(gb: GroebnerBasis) -> bool:
    order = gb.order
    lms = gb.leading_monomials()
    for i, g in enumerate(gb.gens):
        if g.leading_term(order)[1].value != 1:
            return False
        for j, m in enumerate(lms):
            if i != j and any(mono_divides(m, t) for t in g.terms):
                return False
    return True


def initial_ideal(gb: GroebnerBasis) -> MonomialIdeal:
    return MonomialIdeal.of(gb.s, gb.leading_monomials())


# -- vanishing ideals of point sets ------------------------------------------------

def evaluation_matrix(points: Sequence[Sequence[int]], monos: Sequence[tuple], F) -> np.ndarray:
    """Rows = points, columns = monomials; entries are integer field codes."""
    P = np.asarray(points, dtype=np.int64)
    n, s = P.shape
    E = np.ones((n, len(monos)), dtype=np.int64)
    if not monos:
        return E
    maxe = max(max(m) for m in monos)
    # powers[j][e] = column of x_j^e over all points
    pw = np.ones((s, maxe + 1, n), dtype=np.int64)
    for j in range(s):
        for e in range(1, maxe + 1):
            pw[j, e] = [F.mul(int(a), int(b)) for a, b in zip(pw[j, e - 1], P[:, j])]
    for c, m in enumerate(monos):
        col = np.ones(n, dtype=np.int64)
        for j, e in enumerate(m):
            if e:
                col = F.mul_table[col, pw[j, e]] if F.has_tables() else np.array(
                    [F.mul(int(a), int(b)) for a, b in zip(col, pw[j, e])])
        E[:, c] = col
    return E


class ValidationError(RuntimeError):
    pass


def vanishing_ideal_points(X, order: MonomialOrder) -> GroebnerBasis:
    """Reduced Groebner basis of I(X) from evaluation-matrix kernels.

    ``X`` needs ``field``, ``s`` and ``coords`` (integer code tuples).
    Kernels are collected up to degree D+1, with D the first degree where the
    evaluation rank reaches |X|; the result is then validated.
    """
    pts = list(X.coords)
    if not pts:
        raise ValueError("empty point set")
    F, s = X.field, X.s
    n = len(pts)
    key = order.key
    gens: list[Polynomial] = []
    leads: list[tuple] = []
    ranks = {}
    D = None
    d = 1
    while D is None or d <= D + 1:
        monos = sorted(monomials_of_degree(s, d), key=key, reverse=True)
        E = evaluation_matrix(pts, monos, F)
        ranks[d] = rank(E, F)
        if D is None and ranks[d] == n:
            D = d
        N = nullspace(E, F)
        if N.shape[0]:
            R, piv = rref(N, F)
            for row, pc in zip(R, piv):
                lead = monos[pc]
                if any(mono_divides(m, lead) for m in leads):
                    continue
                terms = {monos[c]: int(v) for c, v in enumerate(row) if v}
                gens.append(Polynomial(F, s, terms))
                leads.append(lead)
        d += 1
    gb = buchberger(gens, order)
    L = initial_ideal(gb)
    for dd, rk in ranks.items():
        if hilbert_function(L, dd) != rk:
            raise ValidationError(f"Hilbert function mismatch in degree {dd}")
    if quotient_degree(L) != n:
        raise ValidationError("degree of the quotient differs from the number of points")
    return gb

"""Evaluation codes C_X(d) and their generalized Hamming weights.

Three exact routes to the r-th weight are provided:

* ``ghw_by_subspaces`` walks every r-dimensional subcode once, by RREF pivot
  pattern, with a compiled branch and bound on packed supports.
* ``ghw_by_supports`` uses the parity-check side: the r-th weight is the
  least |S| whose coordinate restriction of the dual has corank >= r.
* ``ghw_by_codewords`` is a literal scan over codeword pairs (r <= 2).

``ghw`` picks the cheaper of the first two.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import comb, prod

import numpy as np

from . import _kernels
from .geometry import PointSet, VanishingIdeal, vanishing_ideal
from .groebner import evaluation_matrix, standard_monomials
from .linalg import nullspace, rank, rref
from .poly import MonomialOrder, Polynomial, mono_str, monomials_of_degree

DEFAULT_BUDGET = 10**7
_CHUNK = 1 << 18


class BudgetExceeded(RuntimeError):
    """The exact search would visit more objects than the budget allows."""

    def __init__(self, cost, budget, what="subspaces"):
        super().__init__(f"exact search needs ~{cost} {what}, budget is {budget}")
        self.cost = cost
        self.budget = budget


@dataclass
class EvaluationCode:
    X: PointSet
    d: int
    ideal: VanishingIdeal
    basis: list  # standard monomials of degree d
    G: np.ndarray  # H x m generator matrix (integer field codes)
    _cache: dict = field(default_factory=dict, repr=False)

    @property
    def field(self):
        return self.X.field

    @property
    def length(self) -> int:
        return self.G.shape[1]

    @property
    def dimension(self) -> int:
        return self.G.shape[0]

    def parity_check(self) -> np.ndarray:
        if "Hc" not in self._cache:
            self._cache["Hc"] = nullspace(self.G, self.field)
        return self._cache["Hc"]

    def polynomial(self, coeffs) -> Polynomial:
        """Standard polynomial with the given message coordinates."""
        F, s = self.field, self.X.s
        return Polynomial(F, s, {m: int(c) for m, c in zip(self.basis, coeffs) if c})

    def encode(self, B) -> np.ndarray:
        from .linalg import matmul
        return matmul(np.atleast_2d(B), self.G, self.field)

    def generator_csv(self) -> str:
        F = self.field
        head = ",".join(mono_str(m) for m in self.basis)
        rows = [",".join(F.format(int(x), "digits") for x in col) for col in self.G.T]
        return "\n".join(["# columns of G^T indexed by " + head] + rows) + "\n"

    def __repr__(self):
        return f"EvaluationCode([{self.length}, {self.dimension}] over {self.field!r}, d={self.d})"


def build_code(X: PointSet, d: int, order: MonomialOrder | None = None) -> EvaluationCode:
    """Evaluate the degree-d standard monomials of I(X) at every point."""
    if d < 1:
        raise ValueError("degree must be >= 1")
    V = vanishing_ideal(X, order)
    basis = standard_monomials(V.initial, d)
    G = evaluation_matrix(X.coords, basis, X.field).T.copy()
    H = len(basis)
    if rank(G, X.field) != H:
        raise RuntimeError("standard monomials do not give independent codewords")
    full = evaluation_matrix(X.coords, monomials_of_degree(X.s, d), X.field)
    if rank(full, X.field) != H:
        raise RuntimeError("Hilbert function differs from the evaluation rank")
    return EvaluationCode(X, d, V, basis, G)


def support_weight(code: EvaluationCode, B) -> int:
    """Number of coordinates where some row of B*G is nonzero."""
    B = np.atleast_2d(np.asarray(B, dtype=np.int64))
    if B.shape[0] == 0:
        raise ValueError("subcode of dimension 0")
    if B.shape[1] != code.dimension:
        raise ValueError(f"basis rows need {code.dimension} entries, got {B.shape[1]}")
    return int(np.any(code.encode(B) != 0, axis=0).sum())


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of GF(q)^n."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def singleton_bound(m: int, k: int, r: int) -> int:
    return m - k + r


# -- packed supports ----------------------------------------------------------------

def _pack(mask: np.ndarray) -> np.ndarray:
    """Boolean (N, m) -> uint64 (N, W) bitsets."""
    N, m = mask.shape
    W = (m + 63) // 64
    pad = np.zeros((N, W * 64), dtype=np.uint8)
    pad[:, :m] = mask
    bytes_ = np.packbits(pad, axis=1, bitorder="little")
    return np.ascontiguousarray(bytes_).view(np.uint64).reshape(N, W)


def _popcount(packed: np.ndarray) -> np.ndarray:
    return np.bitwise_count(packed).sum(axis=-1).astype(np.int64)


def _row_codewords(code, pivot, free, start=0, stop=None):
    """Codewords G[pivot] + sum_j x_j G[free_j] for message indices in [start, stop).

    Message index t encodes the free coefficients in base q, first free
    column most significant.
    """
    F = code.field
    q = F.q
    total = q ** len(free)
    stop = total if stop is None else min(stop, total)
    idx = np.arange(start, stop, dtype=np.int64)
    out = np.broadcast_to(code.G[pivot], (idx.size, code.length)).copy()
    for j, col in enumerate(free):
        digit = (idx // q ** (len(free) - 1 - j)) % q
        out = F.add_table[out, F.mul_table[digit[:, None], code.G[col][None, :]]]
    return out


def _digits(t, nfree, q):
    return [(t // q ** (nfree - 1 - j)) % q for j in range(nfree)]


def _rref_row(H, pivot, free, digits):
    row = np.zeros(H, dtype=np.int64)
    row[pivot] = 1
    for col, x in zip(free, digits):
        row[col] = x
    return row


def _patterns(H, r):
    for piv in itertools.combinations(range(H), r):
        pset = set(piv)
        frees = [[c for c in range(p + 1, H) if c not in pset] for p in piv]
        yield piv, frees


@dataclass
class GHWResult:
    value: int
    method: str
    witness: object = None  # r x H message basis or a coordinate set
    visited: int = 0


def ghw_by_subspaces(code: EvaluationCode, r: int, lower: int = 0, upper: int | None = None,
                     witness: bool = True) -> GHWResult:
    """Exact r-th weight by enumerating RREF bases of all r-dim subcodes."""
    H, m, q = code.dimension, code.length, code.field.q
    _check_r(code, r)
    best = (m if upper is None else upper) + 1
    best_basis = None
    for piv, frees in _patterns(H, r):
        if best <= max(lower, r):
            break
        rest_sets, rest_orders = [], []
        for p, fr in zip(piv[1:], frees[1:]):
            cw = _row_codewords(code, p, fr)
            packed = _pack(cw != 0)
            order = np.argsort(_popcount(packed), kind="stable")
            rest_sets.append(packed[order])
            rest_orders.append(order)
        if rest_sets:
            maxc = max(x.shape[0] for x in rest_sets)
            W = rest_sets[0].shape[1]
            rest = np.zeros((len(rest_sets), maxc, W), dtype=np.uint64)
            for i, x in enumerate(rest_sets):
                rest[i, :x.shape[0]] = x
            counts = np.array([x.shape[0] for x in rest_sets], dtype=np.int64)
        else:
            rest = np.zeros((0, 1, (m + 63) // 64), dtype=np.uint64)
            counts = np.zeros(0, dtype=np.int64)
        total0 = q ** len(frees[0])
        for start in range(0, total0, _CHUNK):
            cw0 = _row_codewords(code, piv[0], frees[0], start, start + _CHUNK)
            packed0 = _pack(cw0 != 0)
            order0 = np.argsort(_popcount(packed0), kind="stable")
            val, found = _kernels.primal_dfs(np.ascontiguousarray(packed0[order0]), rest,
                                             counts, best, max(lower, r))
            if val < best:
                best = int(val)
                rows = [_rref_row(H, piv[0], frees[0],
                                  _digits(start + int(order0[found[0]]), len(frees[0]), q))]
                for i, (p, fr) in enumerate(zip(piv[1:], frees[1:])):
                    t = int(rest_orders[i][found[i + 1]])
                    rows.append(_rref_row(H, p, fr, _digits(t, len(fr), q)))
                best_basis = np.array(rows)
            if best <= max(lower, r):
                break
    if best_basis is None:
        # nothing beat the supplied upper bound
        return GHWResult(best - 1, "subspaces", None)
    return GHWResult(best, "subspaces", best_basis if witness else None)


def ghw_by_supports(code: EvaluationCode, r: int, lower: int = 0,
                    upper: int | None = None) -> GHWResult:
    """Exact r-th weight as min{|S| : |S| - rank(Hc restricted to S) >= r}."""
    _check_r(code, r)
    H, m = code.dimension, code.length
    if H == m:
        return GHWResult(r, "supports", tuple(range(r)))
    F = code.field
    Hc = code.parity_check()
    ub = singleton_bound(m, H, r) if upper is None else min(upper, singleton_bound(m, H, r))
    best, members, nodes = _kernels.dual_bb(np.ascontiguousarray(Hc), F.add_table, F.mul_table,
                                            F.neg_table, F.inv_table, r, ub + 1, max(lower, r))
    if len(members) == 0:
        return GHWResult(ub, "supports", None, int(nodes))
    return GHWResult(int(best), "supports", tuple(int(c) for c in members), int(nodes))


def ghw_by_codewords(code: EvaluationCode, r: int) -> int:
    """Literal scan over all nonzero message vectors (r = 1) or pairs (r = 2)."""
    if r not in (1, 2):
        raise ValueError("codeword scan only supports r = 1 or 2")
    _check_r(code, r)
    H, q = code.dimension, code.field.q
    msgs = np.array(list(itertools.product(range(q), repeat=H))[1:], dtype=np.int64)
    words = code.encode(msgs) != 0
    if r == 1:
        return int(words.sum(axis=1).min())
    packed = _pack(words)
    best = code.length
    F = code.field
    for i in range(len(msgs)):
        a = packed[i]
        union = _popcount(packed[i + 1:] | a)
        if union.size == 0:
            continue
        # drop scalar multiples of message i
        lead = np.nonzero(msgs[i])[0][0]
        scal = F.mul_table[F.inv(int(msgs[i, lead])), msgs[i]]
        rest = msgs[i + 1:]
        c = rest[:, lead]
        prop = F.mul_table[c[:, None], scal[None, :]]
        dep = np.all(prop == rest, axis=1)
        union = np.where(dep, code.length + 1, union)
        best = min(best, int(union.min()))
    return best


def _check_r(code, r):
    if r < 1:
        raise ValueError("r must be >= 1")
    if r > code.dimension:
        raise ValueError(f"r = {r} exceeds the dimension {code.dimension}")


def subspace_cost(code: EvaluationCode, r: int) -> int:
    return gaussian_binomial(code.dimension, r, code.field.q)


def support_cost(code: EvaluationCode, r: int, upper: int | None = None) -> int:
    """Crude bound on the support-set search: subsets of size below the bound."""
    m, H = code.length, code.dimension
    ub = singleton_bound(m, H, r) if upper is None else min(upper, singleton_bound(m, H, r))
    return sum(comb(m, j) for j in range(ub))


def ghw_exact(code: EvaluationCode, r: int, budget: int | None = DEFAULT_BUDGET,
              method: str = "auto", lower: int = 0, upper: int | None = None) -> GHWResult:
    """r-th generalized Hamming weight, refusing searches above ``budget``."""
    _check_r(code, r)
    H, m = code.dimension, code.length
    if r == H:
        return GHWResult(int(np.any(code.G != 0, axis=0).sum()), "full", np.eye(H, dtype=np.int64))
    if H == m:
        return GHWResult(r, "full")
    costs = {"subspaces": subspace_cost(code, r), "supports": support_cost(code, r, upper)}
    if method == "auto":
        method = min(costs, key=costs.get)
    if method not in costs:
        raise ValueError(f"unknown method {method!r}")
    if budget is not None and costs[method] > budget:
        raise BudgetExceeded(costs[method], budget,
                             "subspaces" if method == "subspaces" else "coordinate sets")
    if method == "subspaces":
        return ghw_by_subspaces(code, r, lower, upper)
    return ghw_by_supports(code, r, lower, upper)


def ghw(code: EvaluationCode, r: int, budget: int | None = DEFAULT_BUDGET, **kw) -> int:
    return ghw_exact(code, r, budget, **kw).value


def ghw_budgeted(code: EvaluationCode, r: int, budget: int) -> int:
    """Exact weight when the subspace count fits the budget, else BudgetExceeded."""
    cost = subspace_cost(code, r)
    if cost > budget:
        raise BudgetExceeded(cost, budget)
    return ghw_exact(code, r, None, method="subspaces").value


def weight_hierarchy(code: EvaluationCode, budget: int | None = DEFAULT_BUDGET) -> list[int]:
    return [ghw(code, r, budget) for r in range(1, code.dimension + 1)]


def iter_rref(H: int, r: int, q: int, batch: int = 1 << 14):
    """All r x H RREF matrices over GF(q) (integer codes) in batches."""
    for piv, frees in _patterns(H, r):
        nfree = [len(f) for f in frees]
        total = q ** sum(nfree)
        for start in range(0, total, batch):
            idx = np.arange(start, min(total, start + batch), dtype=np.int64)
            out = np.zeros((idx.size, r, H), dtype=np.int64)
            rem = idx.copy()
            for i in range(r - 1, -1, -1):
                out[:, i, piv[i]] = 1
                for col in reversed(frees[i]):
                    out[:, i, col] = rem % q
                    rem //= q
            yield out

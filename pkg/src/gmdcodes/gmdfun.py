"""Generalized minimum distance, Vasconcelos and footprint functions.

Matrices have rows d = 1..reg(S/I) and columns r = 1..deg(S/I).  Cells with
r > H(d) hold the infinity marker (their value is |X|).
"""

from __future__ import annotations

import csv
import io
import itertools
import json
from dataclasses import dataclass, field
from math import comb
from typing import Iterable, Sequence

import numpy as np

from .codes import (
    DEFAULT_BUDGET, BudgetExceeded, EvaluationCode, _pack, _popcount, build_code,
    ghw_exact, iter_rref, singleton_bound,
)
from .geometry import PointSet, count_zeros, evaluate_on, vanishing_ideal
from .groebner import (
    MonomialIdeal, colon_is_proper, krull_dimension, quotient_degree, standard_monomials,
)
from .poly import MonomialOrder, Polynomial

INF = float("inf")


class PointSetTooSmall(ValueError):
    pass


def _need_two(X: PointSet):
    if len(X) < 2:
        raise PointSetTooSmall("the weight functions need |X| >= 2")


def delta_fn(X: PointSet, d: int, r: int, order: MonomialOrder | None = None,
             budget: int | None = DEFAULT_BUDGET, **kw) -> int:
    """delta_X(d, r): the r-th generalized Hamming weight of C_X(d), or |X| if r > H."""
    _need_two(X)
    if d < 1 or r < 1:
        raise ValueError("d and r must be >= 1")
    code = build_code(X, d, order)
    if r > code.dimension:
        return len(X)
    L = code.ideal.initial
    if not any(colon_is_proper(L, M) for M in itertools.combinations(code.basis, r)):
        return len(X)
    lower = footprint_fn(L, len(X), d, r)
    return ghw_exact(code, r, budget, lower=lower, **kw).value


def _standard_evaluations(X: PointSet, basis) -> np.ndarray:
    """Evaluate each standard monomial as a polynomial on X (H x m)."""
    F = X.field
    return np.array([evaluate_on(X, Polynomial.monomial(F, m)) for m in basis],
                    dtype=np.int64).reshape(len(basis), len(X))


def vasconcelos_fn(X: PointSet, d: int, r: int, order: MonomialOrder | None = None,
                   budget: int | None = DEFAULT_BUDGET) -> int:
    """min |X minus V_X(F)| over r independent standard forms F of degree d.

    Every subspace is visited (no pruning); the count per subspace is the
    number of points where not all r forms vanish.
    """
    _need_two(X)
    V = vanishing_ideal(X, order)
    basis = standard_monomials(V.initial, d)
    H = len(basis)
    if r > H:
        return len(X)
    F = X.field
    from .codes import gaussian_binomial
    cost = gaussian_binomial(H, r, F.q)
    if budget is not None and cost > budget:
        raise BudgetExceeded(cost, budget)
    ev = _standard_evaluations(X, basis)
    add, mul = F.add_table, F.mul_table
    best = len(X)
    for B in iter_rref(H, r, F.q):
        # values[b, i, x] = sum_j B[b, i, j] * ev[j, x]
        vals = np.zeros(B.shape[:2] + (len(X),), dtype=np.int64)
        for j in range(H):
            vals = add[vals, mul[B[:, :, j][:, :, None], ev[j][None, None, :]]]
        common_zero = np.all(vals == 0, axis=1)
        best = min(best, int(len(X) - common_zero.sum(axis=1).max()))
    return best


def footprint_fn(L: MonomialIdeal, degS: int, d: int, r: int) -> int:
    """fp(d, r) from the initial ideal L; degS is deg(S/I)."""
    if krull_dimension(L) > 1:
        from .groebner import DimensionError
        raise DimensionError("footprint needs dim(S/L) <= 1")
    delta = standard_monomials(L, d)
    if r > len(delta):
        return degS
    best = None
    for M in itertools.combinations(delta, r):
        if not colon_is_proper(L, M):
            continue
        dg = quotient_degree(L.add_monomials(M))
        if best is None or dg > best:
            best = dg
    return degS if best is None else degS - best


def footprint_argmax(L: MonomialIdeal, d: int, r: int):
    """An r-set of standard monomials attaining the footprint maximum, or None."""
    best, arg = None, None
    for M in itertools.combinations(standard_monomials(L, d), r):
        if colon_is_proper(L, M):
            dg = quotient_degree(L.add_monomials(M))
            if best is None or dg > best:
                best, arg = dg, M
    return arg


# -- matrices -------------------------------------------------------------------------

@dataclass
class Cell:
    value: int | None = None  # exact value; None when only bounds are known
    lower: int | None = None
    upper: int | None = None
    infinite: bool = False
    method: str = ""

    @property
    def exact(self) -> bool:
        return self.infinite or self.value is not None

    def text(self) -> str:
        if self.infinite:
            return "∞"
        if self.value is not None:
            return str(self.value)
        return f"[{self.lower},{self.upper}]"


@dataclass
class WeightMatrix:
    kind: str  # "delta", "footprint" or "vasconcelos"
    length: int
    regularity: int
    hilbert: list[int]
    cells: dict = field(default_factory=dict)  # (d, r) -> Cell
    degrees: list[int] | None = None
    ranks: list[int] | None = None

    def __post_init__(self):
        if self.degrees is None:
            self.degrees = list(range(1, self.regularity + 1))
        if self.ranks is None:
            self.ranks = list(range(1, self.length + 1))

    def __getitem__(self, key) -> Cell:
        return self.cells[key]

    def value(self, d: int, r: int):
        c = self.cells[(d, r)]
        if c.infinite:
            return INF
        return c.value

    def row(self, d: int) -> list:
        return [self.value(d, r) for r in self.ranks]

    def is_exact(self) -> bool:
        return all(c.exact for c in self.cells.values())

    def to_text(self) -> str:
        cols = self.ranks
        body = [[self.cells[(d, r)].text() for r in cols] for d in self.degrees]
        width = max(len(x) for row in body for x in row)
        width = max(width, len(str(cols[-1])))
        lines = ["d\\r " + " ".join(str(r).rjust(width) for r in cols)]
        for d, row in zip(self.degrees, body):
            lines.append(f"{d:<3} " + " ".join(x.rjust(width) for x in row))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["d"] + [f"r{r}" for r in self.ranks])
        for d in self.degrees:
            out = []
            for r in self.ranks:
                c = self.cells[(d, r)]
                if c.infinite:
                    out.append("inf")
                elif c.value is not None:
                    out.append(str(c.value))
                else:
                    out.append(f"{c.lower}..{c.upper}")
            w.writerow([d] + out)
        return buf.getvalue()

    def to_json(self) -> str:
        rows = []
        for d in self.degrees:
            row = []
            for r in self.ranks:
                c = self.cells[(d, r)]
                entry = {"value": None if c.infinite else c.value}
                if c.infinite:
                    entry["infinite"] = True
                elif c.value is None:
                    entry.update(lower=c.lower, upper=c.upper, exact=False)
                if c.method:
                    entry["method"] = c.method
                row.append(entry)
            rows.append(row)
        return json.dumps({"kind": self.kind, "length": self.length,
                           "regularity": self.regularity, "hilbert": self.hilbert,
                           "degrees": self.degrees, "ranks": self.ranks,
                           "rows": rows}, indent=1) + "\n"

    def format(self, fmt: str) -> str:
        return {"text": self.to_text, "csv": self.to_csv, "json": self.to_json}[fmt]()


def _select(V, degrees, ranks):
    degrees = list(degrees) if degrees is not None else list(range(1, V.regularity + 1))
    ranks = list(ranks) if ranks is not None else list(range(1, V.degree + 1))
    return degrees, ranks


def footprint_matrix(X: PointSet, order: MonomialOrder | None = None,
                     degrees=None, ranks=None) -> WeightMatrix:
    _need_two(X)
    V = vanishing_ideal(X, order)
    L = V.initial
    hil = [V.hilbert(d) for d in range(1, V.regularity + 1)]
    W = WeightMatrix("footprint", V.degree, V.regularity, hil, {}, *_select(V, degrees, ranks))
    for d in W.degrees:
        for r in W.ranks:
            if r > V.hilbert(d):
                W.cells[(d, r)] = Cell(infinite=True)
            else:
                W.cells[(d, r)] = Cell(footprint_fn(L, V.degree, d, r), method="footprint")
    return W


def monomial_witness(code: EvaluationCode, r: int, limit: int = 20000) -> int:
    """Least support of the span of r rows of G (monomial subcodes)."""
    packed = _pack(code.G != 0)
    weights = _popcount(packed)
    best = code.length
    order = np.argsort(weights, kind="stable")
    for n, comb_ in enumerate(itertools.combinations(order, r)):
        if n >= limit:
            break
        acc = np.bitwise_or.reduce(packed[list(comb_)], axis=0)
        best = min(best, int(np.bitwise_count(acc).sum()))
    return best


def witness_upper(X: PointSet, polys: Sequence[Polynomial]) -> int:
    """|X minus V_X(F)| for user-supplied forms (an upper bound for delta)."""
    return count_zeros(X, polys)[1]


def weight_matrix(X: PointSet, order: MonomialOrder | None = None,
                  budget: int | None = DEFAULT_BUDGET,
                  witnesses: dict | None = None, method: str = "auto",
                  degrees=None, ranks=None) -> WeightMatrix:
    """Matrix of delta_X(d, r); cells above the budget carry [lower, upper] bounds.

    ``witnesses`` maps (d, r) to lists of r forms whose non-common-zero count
    bounds the cell from above.
    """
    _need_two(X)
    V = vanishing_ideal(X, order)
    L = V.initial
    m = V.degree
    hil = [V.hilbert(d) for d in range(1, V.regularity + 1)]
    degrees, ranks = _select(V, degrees, ranks)
    W = WeightMatrix("delta", m, V.regularity, hil, {}, degrees, ranks)
    witnesses = witnesses or {}
    for d in W.degrees:
        H = V.hilbert(d)
        code = build_code(X, d, order)
        prev_lo = 0
        for r in range(1, max(W.ranks) + 1):
            if r > H:
                W.cells[(d, r)] = Cell(infinite=True)
                continue
            if not any(colon_is_proper(L, M) for M in itertools.combinations(code.basis, r)):
                W.cells[(d, r)] = Cell(m, method="no-candidate")
                prev_lo = m
                continue
            fp = footprint_fn(L, m, d, r)
            lo = max(fp, r, prev_lo + 1)
            hi = min(singleton_bound(m, H, r), monomial_witness(code, r))
            for polys in witnesses.get((d, r), []):
                hi = min(hi, witness_upper(X, polys))
            if lo == hi:
                W.cells[(d, r)] = Cell(lo, method="sandwich")
                prev_lo = lo
                continue
            try:
                res = ghw_exact(code, r, budget, method=method, lower=lo, upper=hi)
                W.cells[(d, r)] = Cell(res.value, method=res.method)
                prev_lo = res.value
            except BudgetExceeded:
                W.cells[(d, r)] = Cell(None, lo, hi, method="bounds")
                prev_lo = lo
        # tighten upper bounds from the right: delta_r <= delta_{r+1} - 1
        for r in range(min(H, max(W.ranks)) - 1, 0, -1):
            c, nxt = W.cells[(d, r)], W.cells[(d, r + 1)]
            nxt_hi = nxt.value if nxt.value is not None else nxt.upper
            if c.value is None and nxt_hi is not None and nxt_hi - 1 < c.upper:
                c.upper = nxt_hi - 1
                if c.upper == c.lower:
                    c.value = c.lower
                    c.method = "sandwich"
    return W


def vasconcelos_matrix(X: PointSet, order: MonomialOrder | None = None,
                       budget: int | None = DEFAULT_BUDGET, degrees=None,
                       ranks=None) -> WeightMatrix:
    _need_two(X)
    V = vanishing_ideal(X, order)
    hil = [V.hilbert(d) for d in range(1, V.regularity + 1)]
    W = WeightMatrix("vasconcelos", V.degree, V.regularity, hil, {},
                     *_select(V, degrees, ranks))
    for d in W.degrees:
        for r in W.ranks:
            if r > V.hilbert(d):
                W.cells[(d, r)] = Cell(infinite=True)
                continue
            try:
                W.cells[(d, r)] = Cell(vasconcelos_fn(X, d, r, order, budget), method="vasconcelos")
            except BudgetExceeded:
                W.cells[(d, r)] = Cell(None, r, V.degree, method="bounds")
    return W

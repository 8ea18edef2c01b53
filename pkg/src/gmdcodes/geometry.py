"""Projective point sets, their vanishing ideals and zero-set counting."""

from __future__ import annotations

import functools
import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .gf import FieldElement, FieldSpec, make_field, parse_element
from .groebner import (
    GroebnerBasis, MonomialIdeal, buchberger, evaluation_matrix, initial_ideal,
    quotient_degree, vanishing_ideal_points,
)
from .poly import MonomialOrder, Polynomial

FAMILIES = ("affine-cartesian", "nested-cartesian", "projective-space", "torus", "custom")


class PointSetError(ValueError):
    pass


def _code(F: FieldSpec, x) -> int:
    if isinstance(x, FieldElement):
        return x.value
    if isinstance(x, str):
        return parse_element(F, x)
    return F(int(x)).value


def normalize(F: FieldSpec, coords: Sequence[int]) -> tuple[int, ...]:
    """Scale so that the first nonzero coordinate is 1."""
    for c in coords:
        if c:
            inv = F.inv(c)
            return tuple(F.mul(x, inv) for x in coords)
    raise PointSetError("the zero vector is not a projective point")


@dataclass(frozen=True)
class ProjectivePoint:
    field: FieldSpec
    coords: tuple[int, ...]

    def elements(self) -> tuple[FieldElement, ...]:
        return tuple(FieldElement(self.field, c) for c in self.coords)

    def __str__(self):
        return "[" + ":".join(self.field.format(c) for c in self.coords) + "]"


@dataclass(frozen=True, eq=False)
class PointSet:
    field: FieldSpec
    s: int
    coords: tuple[tuple[int, ...], ...]
    family: str = "custom"
    factors: tuple[tuple[int, ...], ...] | None = None
    meta: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise PointSetError(f"unknown family {self.family!r}")
        if not self.coords:
            raise PointSetError("a point set needs at least one point")
        seen = set()
        for c in self.coords:
            if len(c) != self.s:
                raise PointSetError(f"point {c} does not have {self.s} coordinates")
            key = normalize(self.field, c)
            if key in seen:
                raise PointSetError(f"duplicate projective point {c}")
            seen.add(key)

    def __len__(self):
        return len(self.coords)

    @property
    def points(self) -> tuple[ProjectivePoint, ...]:
        return tuple(ProjectivePoint(self.field, c) for c in self.coords)

    @property
    def sizes(self) -> tuple[int, ...] | None:
        return None if self.factors is None else tuple(len(A) for A in self.factors)

    def describe(self) -> dict:
        F = self.field
        out = {"field": {"p": F.p, "k": F.k}, "family": self.family}
        if self.factors is not None:
            out["factors"] = [[F.format(x, "digits") for x in A] for A in self.factors]
        elif self.family in ("projective-space", "torus"):
            out["s"] = self.s
        else:
            out["points"] = [[F.format(x, "digits") for x in c] for c in self.coords]
        return out

    def __repr__(self):
        return f"PointSet({self.family}, |X|={len(self)}, s={self.s}, {self.field!r})"


def _factor(F: FieldSpec, A) -> tuple[int, ...]:
    if isinstance(A, str):
        if A.strip().lower() != "all":
            raise PointSetError(f"factor keyword {A!r} not understood (use 'all')")
        return tuple(range(F.q))
    codes = [_code(F, x) for x in A]
    if not codes:
        raise PointSetError("empty factor")
    if len(set(codes)) != len(codes):
        raise PointSetError(f"duplicate elements in factor {list(A)}")
    return tuple(sorted(codes))


def affine_cartesian_set(F: FieldSpec, factors: Sequence) -> PointSet:
    """[A_1 x ... x A_n x {1}] inside P^n."""
    A = tuple(_factor(F, f) for f in factors)
    if not A:
        raise PointSetError("need at least one factor")
    coords = tuple(sorted(tuple(t) + (1,) for t in itertools.product(*A)))
    return PointSet(F, len(A) + 1, coords, "affine-cartesian", A)


def check_nested(F: FieldSpec, A: Sequence[Sequence[int]]) -> None:
    for i, Ai in enumerate(A):
        if 0 not in Ai or 1 not in Ai:
            raise PointSetError(f"factor A_{i + 1} must contain 0 and 1 (condition (i))")
    for j, Aj in enumerate(A):
        Sj = set(Aj)
        for i in range(j):
            for b in A[i]:
                if b == 0:
                    continue
                binv = F.inv(b)
                for a in Aj:
                    if F.mul(a, binv) not in Sj:
                        raise PointSetError(
                            f"{F.format(a)}/{F.format(b)} is not in A_{j + 1} "
                            f"(closure condition (ii) for i={i + 1}, j={j + 1})")
    sizes = [len(x) for x in A]
    if sizes != sorted(sizes):
        raise PointSetError(f"factor sizes {sizes} are not non-decreasing (condition (iii))")


def nested_cartesian_set(F: FieldSpec, factors: Sequence) -> PointSet:
    """Projective classes of the nonzero tuples of A_1 x ... x A_s."""
    A = tuple(_factor(F, f) for f in factors)
    if len(A) < 2:
        raise PointSetError("need at least two factors")
    check_nested(F, A)
    pts = {normalize(F, t) for t in itertools.product(*A) if any(t)}
    return PointSet(F, len(A), tuple(sorted(pts)), "nested-cartesian", A)


def projective_space(F: FieldSpec | int, s: int) -> PointSet:
    """All of P^{s-1}; as a nested cartesian set with every factor the field."""
    F = _as_field(F)
    if s < 2:
        raise PointSetError("need s >= 2")
    full = tuple(range(F.q))
    pts = {normalize(F, t) for t in itertools.product(full, repeat=s) if any(t)}
    return PointSet(F, s, tuple(sorted(pts)), "projective-space", (full,) * s)


def projective_torus(F: FieldSpec | int, s: int) -> PointSet:
    """Points of P^{s-1} with every coordinate nonzero."""
    F = _as_field(F)
    if s < 2:
        raise PointSetError("need s >= 2")
    units = range(1, F.q)
    coords = tuple(sorted((1,) + t for t in itertools.product(units, repeat=s - 1)))
    return PointSet(F, s, coords, "torus", None, {"q": F.q})


def custom_point_set(F: FieldSpec, points: Iterable[Sequence], dedupe: bool = False) -> PointSet:
    """Arbitrary projective points; repeated classes are an error unless ``dedupe``."""
    pts = []
    seen = set()
    for p in points:
        c = normalize(F, [_code(F, x) for x in p])
        if c in seen:
            if not dedupe:
                raise PointSetError(f"point {list(p)} repeats the projective point {list(c)}")
            continue
        seen.add(c)
        pts.append(c)
    if not pts:
        raise PointSetError("empty point set")
    s = len(pts[0])
    if any(len(c) != s for c in pts):
        raise PointSetError("points have different numbers of coordinates")
    return PointSet(F, s, tuple(sorted(pts)), "custom")


def _as_field(F):
    if isinstance(F, FieldSpec):
        return F
    from .gf import field_of_size
    return field_of_size(int(F))


# -- vanishing ideals -----------------------------------------------------------

def _lin(F, s, i, j, gamma):
    """t_i - gamma * t_j."""
    p = Polynomial.var(F, s, i)
    if gamma:
        p = p - Polynomial.var(F, s, j).scale(gamma)
    return p


def vanishing_generators(X: PointSet) -> list[Polynomial]:
    """Known generator sets of I(X) for the structured families."""
    F, s = X.field, X.s
    one = Polynomial.constant(F, s, 1)
    if X.family == "affine-cartesian":
        gens = []
        for i, A in enumerate(X.factors):
            f = one
            for g in A:
                f = f * _lin(F, s, i, s - 1, g)
            gens.append(f)
        return gens
    if X.family in ("nested-cartesian", "projective-space"):
        gens = []
        for i, j in itertools.combinations(range(s), 2):
            f = Polynomial.var(F, s, i)
            for g in X.factors[j]:
                f = f * _lin(F, s, j, i, g)
            gens.append(f)
        return gens
    if X.family == "torus":
        q = F.q
        last = Polynomial.var(F, s, s - 1, q - 1)
        return [Polynomial.var(F, s, i, q - 1) - last for i in range(s - 1)]
    raise PointSetError("custom point sets have no closed-form generators")


@dataclass(frozen=True)
class VanishingIdeal:
    X: PointSet
    gb: GroebnerBasis
    initial: MonomialIdeal
    degree: int
    regularity: int

    @property
    def order(self) -> MonomialOrder:
        return self.gb.order

    def hilbert(self, d: int) -> int:
        from .groebner import hilbert_function
        return hilbert_function(self.initial, d)


def default_order(X: PointSet) -> MonomialOrder:
    return MonomialOrder("grevlex", tuple(range(X.s)))


@functools.lru_cache(maxsize=64)
def _vanishing_cached(X: PointSet, order: MonomialOrder) -> VanishingIdeal:
    from .groebner import degree_and_regularity
    if X.family == "custom":
        gb = vanishing_ideal_points(X, order)
    else:
        gens = vanishing_generators(X)
        for f in gens:
            vals = evaluate_on(X, f)
            if np.any(vals):
                raise PointSetError(f"generator {f} does not vanish on X")
        gb = buchberger(gens, order)
    L = initial_ideal(gb)
    deg, reg = degree_and_regularity(L)
    if deg != len(X):
        raise PointSetError(f"deg(S/I) = {deg} differs from |X| = {len(X)}")
    return VanishingIdeal(X, gb, L, deg, reg)


def vanishing_ideal(X: PointSet, order: MonomialOrder | None = None) -> VanishingIdeal:
    """Groebner data of I(X); closed-form generators are checked on construction."""
    return _vanishing_cached(X, order or default_order(X))


# -- zero sets ------------------------------------------------------------------

def evaluate_on(X: PointSet, f: Polynomial) -> np.ndarray:
    """Values of f at the stored representatives of X, as integer codes."""
    F = X.field
    if f.s != X.s:
        raise PointSetError(f"polynomial in {f.s} variables, points in {X.s}")
    if f.is_zero():
        return np.zeros(len(X), dtype=np.int64)
    monos = list(f.terms)
    E = evaluation_matrix(X.coords, monos, F)
    coeffs = np.array([f.terms[m] for m in monos], dtype=np.int64)
    if F.has_tables():
        prod = F.mul_table[E, coeffs[None, :]]
        acc = np.zeros(len(X), dtype=np.int64)
        for c in range(prod.shape[1]):
            acc = F.add_table[acc, prod[:, c]]
        return acc
    return np.array([f.eval_int(c) for c in X.coords], dtype=np.int64)


def zero_set(X: PointSet, polys: Sequence[Polynomial]) -> list[ProjectivePoint]:
    """Points of X where every polynomial vanishes."""
    mask = zero_mask(X, polys)
    return [ProjectivePoint(X.field, c) for c, z in zip(X.coords, mask) if z]


def zero_mask(X: PointSet, polys: Sequence[Polynomial]) -> np.ndarray:
    polys = list(polys)
    if not polys:
        raise PointSetError("need at least one polynomial")
    mask = np.ones(len(X), dtype=bool)
    for f in polys:
        if f.is_zero():
            raise PointSetError("the zero polynomial is not allowed")
        if not f.is_homogeneous():
            raise PointSetError(f"{f} is not homogeneous")
        mask &= evaluate_on(X, f) == 0
    return mask


def count_zeros(X: PointSet, polys: Sequence[Polynomial]) -> tuple[int, int]:
    """(|V_X(F)|, |X minus V_X(F)|)."""
    z = int(zero_mask(X, polys).sum())
    return z, len(X) - z


# -- JSON descriptions ------------------------------------------------------------

def from_description(desc: dict | str) -> PointSet:
    """Build a point set from a JSON description.

    ``{"field": {"p": 2, "k": 2}, "family": "nested-cartesian",
    "factors": [["0", "1"], ["0", "1"], "all"]}``
    """
    if isinstance(desc, str):
        desc = json.loads(desc)
    try:
        fd = desc["field"]
        F = make_field(int(fd["p"]), int(fd.get("k", 1)))
        family = desc["family"]
    except (KeyError, TypeError) as exc:
        raise PointSetError(f"invalid point-set description: missing {exc}") from None
    if family == "affine-cartesian":
        return affine_cartesian_set(F, desc["factors"])
    if family == "nested-cartesian":
        return nested_cartesian_set(F, desc["factors"])
    if family == "projective-space":
        return projective_space(F, int(desc["s"]))
    if family == "torus":
        return projective_torus(F, int(desc["s"]))
    if family == "custom":
        return custom_point_set(F, desc["points"])
    raise PointSetError(f"unknown family {family!r}")

"""Sparse multivariate polynomials over GF(q) and monomial orders.

Monomials are exponent tuples ``(a_1, ..., a_s)``.  A polynomial maps
monomials to nonzero integer field codes (see :mod:`gmdcodes.gf`).
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .gf import FieldElement, FieldError, FieldSpec, parse_element

Monomial = tuple  # tuple[int, ...]

ORDER_KINDS = ("lex", "grlex", "grevlex")
_KIND_ALIASES = {
    "lex": "lex", "grlex": "grlex", "graded-lex": "grlex", "deglex": "grlex",
    "grevlex": "grevlex", "graded-reverse-lex": "grevlex", "degrevlex": "grevlex",
}


def mono_degree(m: Monomial) -> int:
    return sum(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True when t^a divides t^b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(b: Monomial, a: Monomial) -> Monomial:
    return tuple(y - x for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomials_of_degree(s: int, d: int) -> list[Monomial]:
    """All degree-d monomials in s variables, lexicographically descending in t1."""
    if d < 0:
        return []
    if s == 1:
        return [(d,)]
    out = []
    for first in range(d, -1, -1):
        for rest in monomials_of_degree(s - 1, d - first):
            out.append((first,) + rest)
    return out


def mono_str(m: Monomial) -> str:
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(f"t{i + 1}")
        elif e > 1:
            parts.append(f"t{i + 1}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class MonomialOrder:
    """lex / grlex / grevlex with an explicit variable priority.

    ``priority`` lists 0-based variable indices from most to least
    significant; ``(2, 1, 0)`` means t3 > t2 > t1.
    """

    kind: str = "grevlex"
    priority: tuple[int, ...] | None = None

    def __post_init__(self):
        kind = _KIND_ALIASES.get(self.kind)
        if kind is None:
            raise ValueError(f"unknown monomial order {self.kind!r}")
        object.__setattr__(self, "kind", kind)
        if self.priority is not None:
            pr = tuple(int(i) for i in self.priority)
            if sorted(pr) != list(range(len(pr))):
                raise ValueError(f"priority {pr} is not a permutation")
            object.__setattr__(self, "priority", pr)

    def _prio(self, s):
        if self.priority is None:
            return tuple(range(s))
        if len(self.priority) != s:
            raise ValueError(f"order has {len(self.priority)} variables, monomial has {s}")
        return self.priority

    def key(self, m: Monomial):
        """Sort key: larger key means larger monomial."""
        pr = self._prio(len(m))
        if self.kind == "lex":
            return tuple(m[i] for i in pr)
        if self.kind == "grlex":
            return (sum(m),) + tuple(m[i] for i in pr)
        return (sum(m),) + tuple(-m[i] for i in reversed(pr))

    def compare(self, m1: Monomial, m2: Monomial) -> int:
        if len(m1) != len(m2):
            raise ValueError("monomials live in different rings")
        k1, k2 = self.key(m1), self.key(m2)
        return (k1 > k2) - (k1 < k2)

    def describe(self, s: int) -> str:
        pr = self._prio(s)
        return f"{self.kind} with " + " > ".join(f"t{i + 1}" for i in pr)


def parse_priority(text: str, s: int | None = None) -> tuple[int, ...]:
    """``"t3,t2,t1"`` -> ``(2, 1, 0)``."""
    names = [x.strip() for x in text.replace(">", ",").split(",") if x.strip()]
    out = []
    for nm in names:
        m = re.fullmatch(r"t?(\d+)", nm)
        if not m:
            raise ValueError(f"bad variable name {nm!r} in priority")
        out.append(int(m.group(1)) - 1)
    if s is not None and len(out) != s:
        raise ValueError(f"priority names {len(out)} variables, ring has {s}")
    if sorted(out) != list(range(len(out))):
        raise ValueError(f"priority {text!r} is not a permutation of t1..t{len(out)}")
    return tuple(out)


@dataclass(frozen=True, eq=False)
class Polynomial:
    field: FieldSpec
    s: int
    terms: Mapping[Monomial, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for m, c in self.terms.items():
            c = int(c)
            if len(m) != self.s:
                raise ValueError(f"monomial {m} has wrong length for s={self.s}")
            if c:
                clean[tuple(m)] = c
        object.__setattr__(self, "terms", clean)

    # -- constructors ---------------------------------------------------------
    @classmethod
    def zero(cls, F, s):
        return cls(F, s, {})

    @classmethod
    def constant(cls, F, s, c=1):
        c = F(c).value if not isinstance(c, int) else c
        return cls(F, s, {(0,) * s: c})

    @classmethod
    def monomial(cls, F, m: Monomial, c: int = 1):
        return cls(F, len(m), {tuple(m): c})

    @classmethod
    def var(cls, F, s, i, power=1):
        m = [0] * s
        m[i] = power
        return cls(F, s, {tuple(m): 1})

    # -- queries --------------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def coefficient(self, m: Monomial) -> FieldElement:
        return FieldElement(self.field, self.terms.get(tuple(m), 0))

    def leading_term(self, order: MonomialOrder) -> tuple[Monomial, FieldElement]:
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        m = max(self.terms, key=order.key)
        return m, FieldElement(self.field, self.terms[m])

    def leading_monomial(self, order: MonomialOrder) -> Monomial:
        return max(self.terms, key=order.key)

    def sorted_terms(self, order: MonomialOrder):
        return sorted(self.terms.items(), key=lambda kv: order.key(kv[0]), reverse=True)

    # -- arithmetic -------------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        if other.field != self.field or other.s != self.s:
            raise FieldError("polynomials belong to different rings")
        return other

    def _lift(self, other):
        if isinstance(other, (int, FieldElement)):
            return Polynomial.constant(self.field, self.s, self.field(other).value)
        return other

    def __add__(self, other):
        other = self._lift(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        F = self.field
        t = dict(self.terms)
        for m, c in other.terms.items():
            v = F.add(t.get(m, 0), c)
            if v:
                t[m] = v
            else:
                t.pop(m, None)
        return Polynomial(F, self.s, t)

    __radd__ = __add__

    def __neg__(self):
        F = self.field
        return Polynomial(F, self.s, {m: F.neg(c) for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c: int) -> "Polynomial":
        F = self.field
        if c == 0:
            return Polynomial(F, self.s, {})
        return Polynomial(F, self.s, {m: F.mul(v, c) for m, v in self.terms.items()})

    def mul_term(self, mono: Monomial, c: int) -> "Polynomial":
        F = self.field
        return Polynomial(F, self.s, {mono_mul(m, mono): F.mul(v, c)
                                      for m, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, FieldElement)):
            return self.scale(self.field(other).value)
        if self._check(other) is NotImplemented:
            return NotImplemented
        F = self.field
        t: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                t[m] = F.add(t.get(m, 0), F.mul(c1, c2))
        return Polynomial(F, self.s, t)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = Polynomial.constant(self.field, self.s, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.field == other.field and self.s == other.s and self.terms == other.terms

    def __hash__(self):
        return hash((self.s, frozenset(self.terms.items())))

    def monic(self, order: MonomialOrder) -> "Polynomial":
        _, c = self.leading_term(order)
        return self.scale(self.field.inv(c.value))

    # -- evaluation -----------------------------------------------------------
    def evaluate(self, point: Sequence) -> FieldElement:
        return FieldElement(self.field, self.eval_int([_code(self.field, x) for x in point]))

    def eval_int(self, point: Sequence[int]) -> int:
        if len(point) != self.s:
            raise ValueError(f"point has {len(point)} coordinates, ring has {self.s} variables")
        F = self.field
        acc = 0
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v = F.mul(v, F.pow(x, e))
                    if v == 0:
                        break
            acc = F.add(acc, v)
        return acc

    # -- text -------------------------------------------------------------------
    def to_str(self, order: MonomialOrder | None = None) -> str:
        if not self.terms:
            return "0"
        order = order or MonomialOrder("grevlex")
        F = self.field
        out = []
        for m, c in self.sorted_terms(order):
            ms = mono_str(m)
            sign = "+"
            if F.k == 1 and c > F.p // 2 and F.p > 2:
                sign, c = "-", F.neg(c)
            cs = F.format(c)
            if F.k > 1 and "+" in cs:
                cs = f"({cs})"
            if ms == "1":
                body = cs
            elif c == 1:
                body = ms
            else:
                body = f"{cs}*{ms}"
            out.append((sign, body))
        text = ("-" if out[0][0] == "-" else "") + out[0][1]
        for sign, body in out[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"Polynomial({self.to_str()!r})"


def _code(F: FieldSpec, x) -> int:
    if isinstance(x, FieldElement):
        return x.value
    return F(x).value


# -- division -------------------------------------------------------------------

def divide(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder):
    """Multivariate division with first-match divisor selection.

    Returns ``(quotients, remainder)`` with ``f = sum(q_i g_i) + r``.
    """
    if any(g.is_zero() for g in divisors):
        raise ValueError("division by the zero polynomial")
    F = f.field
    lts = [g.leading_term(order) for g in divisors]
    lt_inv = [F.inv(c.value) for _, c in lts]
    quot = [dict() for _ in divisors]
    rem: dict = {}
    p = dict(f.terms)
    key = order.key
    while p:
        m = max(p, key=key)
        c = p[m]
        for i, (lm, _) in enumerate(lts):
            if mono_divides(lm, m):
                mq = mono_div(m, lm)
                cq = F.mul(c, lt_inv[i])
                quot[i][mq] = F.add(quot[i].get(mq, 0), cq)
                neg = F.neg(cq)
                for gm, gc in divisors[i].terms.items():
                    t = mono_mul(gm, mq)
                    v = F.add(p.get(t, 0), F.mul(gc, neg))
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
            del p[m]
    return [Polynomial(F, f.s, q) for q in quot], Polynomial(F, f.s, rem)


def reduce(f: Polynomial, divisors: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    return divide(f, divisors, order)[1]


# -- parsing --------------------------------------------------------------------

class ParseError(ValueError):
    def __init__(self, msg, pos, text):
        super().__init__(f"{msg} at position {pos}: {text!r}\n  {text}\n  {' ' * pos}^")
        self.pos = pos
        self.text = text


_TOKEN = re.compile(r"\s*(?:(t\d+)|(a)|(\d+)|(.))")


def _tokenize(text):
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else pos
        if m.group(1):
            toks.append(("var", m.group(1), start))
        elif m.group(2):
            toks.append(("root", "a", start))
        elif m.group(3):
            toks.append(("num", m.group(3), start))
        elif m.group(4):
            ch = m.group(4)
            if ch.isspace():
                pos = m.end()
                continue
            if ch not in "+-*^()":
                raise ParseError(f"unexpected character {ch!r}", start, text)
            toks.append(("op", ch, start))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text, F, s):
        self.text, self.F, self.s = text, F, s
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise ParseError(msg, tok[2], self.text)

    def parse(self):
        if self.peek()[0] == "end":
            self.error("empty polynomial")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected {self.peek()[1]!r}")
        return p

    def expr(self):
        sign = 1
        if self.peek()[:2] in (("op", "-"), ("op", "+")):
            sign = -1 if self.take()[1] == "-" else 1
        p = self.term()
        if sign < 0:
            p = -p
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            t = self.term()
            p = p + t if op == "+" else p - t
        return p

    def term(self):
        p = self.power()
        while True:
            tok = self.peek()
            if tok[:2] == ("op", "*"):
                self.take()
                p = p * self.power()
            elif tok[0] in ("var", "root", "num") or tok[:2] == ("op", "("):
                p = p * self.power()  # implicit multiplication, e.g. 2t1 or t1(t2+t3)
            else:
                return p

    def power(self):
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "num":
                self.error("expected an exponent", tok)
            base = base ** int(tok[1])
        return base

    def atom(self):
        tok = self.take()
        F, s = self.F, self.s
        kind, val, pos = tok
        if kind == "var":
            i = int(val[1:]) - 1
            if not 0 <= i < s:
                raise ParseError(f"variable {val} outside t1..t{s}", pos, self.text)
            return Polynomial.var(F, s, i)
        if kind == "root":
            try:
                return Polynomial.constant(F, s, parse_element(F, "a"))
            except FieldError as exc:
                raise ParseError(str(exc), pos, self.text) from None
        if kind == "num":
            try:
                return Polynomial.constant(F, s, parse_element(F, val))
            except FieldError as exc:
                raise ParseError(str(exc), pos, self.text) from None
        if tok[:2] == ("op", "("):
            p = self.expr()
            if self.peek()[:2] != ("op", ")"):
                self.error("expected ')'")
            self.take()
            return p
        raise ParseError(f"unexpected {val!r}" if kind != "end" else "unexpected end of input",
                         pos, self.text)


def parse_polynomial(text: str, F: FieldSpec, s: int) -> Polynomial:
    """Parse e.g. ``"t1*t2^2 - t1^2*t2"`` or ``"(a+1)t1 + t3"``.

    Numeric coefficients use the field element format (decimal residues for
    prime fields, base-p digit strings for extension fields); ``a`` is the
    root of the field modulus.
    """
    return _Parser(text, F, s).parse()


def linear_combination(polys: Iterable[Polynomial], coeffs: Iterable[int]) -> Polynomial:
    polys = list(polys)
    out = Polynomial.zero(polys[0].field, polys[0].s)
    for p, c in zip(polys, coeffs):
        if c:
            out = out + p.scale(c)
    return out


def product(factors: Iterable[Polynomial], F: FieldSpec, s: int) -> Polynomial:
    out = Polynomial.constant(F, s, 1)
    for f in factors:
        out = out * f
    return out


def all_monomials_upto(s: int, d: int):
    return itertools.chain.from_iterable(monomials_of_degree(s, e) for e in range(d + 1))

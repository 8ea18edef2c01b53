"""Finite fields GF(p^k).

Elements are stored as integers ``0 <= v < q`` whose base-p digits are the
coefficients of the element in the power basis of the modulus root ``a``
(``v = c_0 + c_1 p + ... + c_{k-1} p^{k-1}``).  Integer order therefore
coincides with coefficient-lexicographic order, with 0 first.
"""

from __future__ import annotations

import functools
import itertools
import re
from dataclasses import dataclass, field

import numpy as np

MAX_FIELD_SIZE = 2**16
_TABLE_LIMIT = 256  # full q x q tables are only built up to this size


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


# --- polynomials over GF(p) as coefficient lists (low degree first) -------

def _trim(c):
    c = list(c)
    while c and c[-1] == 0:
        c.pop()
    return c


def _polymod(num, den, p):
    num = _trim(num)
    den = _trim(den)
    inv_lead = pow(den[-1], p - 2, p)
    while len(num) >= len(den):
        f = num[-1] * inv_lead % p
        shift = len(num) - len(den)
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - f * c) % p
        num = _trim(num)
    return num


def _monic_polys(p, deg):
    """Monic polynomials of degree ``deg`` in coefficient-lexicographic order."""
    for low in itertools.product(range(p), repeat=deg):
        yield list(reversed(low)) + [1]


def is_irreducible(coeffs, p) -> bool:
    """Trial division by every monic polynomial of degree <= deg/2."""
    coeffs = _trim(coeffs)
    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for dd in range(1, deg // 2 + 1):
        for g in _monic_polys(p, dd):
            if not _polymod(coeffs, g, p):
                return False
    return True


def smallest_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree k (low first)."""
    for cand in _monic_polys(p, k):
        if is_irreducible(cand, p):
            return tuple(cand)
    raise ValueError(f"no irreducible polynomial of degree {k} over GF({p})")


class FieldError(ValueError):
    pass


@dataclass(frozen=True, eq=False)
class FieldSpec:
    p: int
    k: int
    modulus: tuple[int, ...]  # monic, low degree first, length k+1
    q: int = field(init=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise FieldError(f"characteristic {self.p} is not prime")
        if self.k < 1:
            raise FieldError("extension degree must be >= 1")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise FieldError("modulus must be monic of degree k")
        if not is_irreducible(self.modulus, self.p):
            raise FieldError(f"modulus {self.modulus} is reducible over GF({self.p})")
        object.__setattr__(self, "q", self.p**self.k)
        self._build_tables()

    def __eq__(self, other):
        return (isinstance(other, FieldSpec) and self.p == other.p
                and self.k == other.k and self.modulus == other.modulus)

    def __hash__(self):
        return hash((self.p, self.k, self.modulus))

    def __repr__(self):
        if self.k == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.k}, modulus={self.modulus_str()})"

    # -- construction of lookup tables --------------------------------------
    def _digits(self, v):
        p = self.p
        out = []
        for _ in range(self.k):
            out.append(v % p)
            v //= p
        return out

    def _from_digits(self, digits):
        v = 0
        for c in reversed(digits):
            v = v * self.p + c
        return v

    def _slow_mul(self, x, y):
        p, k = self.p, self.k
        a, b = self._digits(x), self._digits(y)
        prod = [0] * (2 * k - 1)
        for i, ai in enumerate(a):
            if ai:
                for j, bj in enumerate(b):
                    prod[i + j] = (prod[i + j] + ai * bj) % p
        red = _polymod(prod, self.modulus, p) if k > 1 else [prod[0] % p]
        return self._from_digits(red + [0] * (k - len(red)))

    def _build_tables(self):
        q = self.q
        # primitive element -> exp/log tables (valid for every q)
        for g in range(1, q):
            x = g
            order = 1
            while x != 1:
                x = self._slow_mul(x, g)
                order += 1
                if order > q:
                    break
            if order == q - 1 or q == 2:
                break
        exp = [0] * (2 * (q - 1))
        log = [0] * q
        x = 1
        for i in range(q - 1):
            exp[i] = x
            log[x] = i
            x = self._slow_mul(x, g)
        for i in range(q - 1, 2 * (q - 1)):
            exp[i] = exp[i - (q - 1)]
        object.__setattr__(self, "_exp", exp)
        object.__setattr__(self, "_log", log)
        object.__setattr__(self, "primitive", g)
        neg = [self._from_digits([(-c) % self.p for c in self._digits(v)]) for v in range(q)]
        object.__setattr__(self, "_neg", neg)
        inv = [0] + [exp[(q - 1 - log[v]) % (q - 1)] for v in range(1, q)]
        object.__setattr__(self, "_inv", inv)
        if q <= _TABLE_LIMIT:
            add = [[self._slow_add(a, b) for b in range(q)] for a in range(q)]
            mul = [[self.mul(a, b) for b in range(q)] for a in range(q)]
            object.__setattr__(self, "_add", add)
            object.__setattr__(self, "_multab", mul)
            object.__setattr__(self, "add_table", np.array(add, dtype=np.int64))
            object.__setattr__(self, "mul_table", np.array(mul, dtype=np.int64))
            object.__setattr__(self, "neg_table", np.array(neg, dtype=np.int64))
            object.__setattr__(self, "inv_table", np.array(inv, dtype=np.int64))
        else:
            object.__setattr__(self, "_add", None)

    def _slow_add(self, x, y):
        if self.k == 1:
            return (x + y) % self.p
        a, b = self._digits(x), self._digits(y)
        return self._from_digits([(s + t) % self.p for s, t in zip(a, b)])

    def has_tables(self) -> bool:
        return self._add is not None

    # -- integer-level arithmetic (hot paths use these) ---------------------
    def add(self, x: int, y: int) -> int:
        if self._add is not None:
            return self._add[x][y]
        return self._slow_add(x, y)

    def neg(self, x: int) -> int:
        return self._neg[x]

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self._neg[y])

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("inverse of zero in " + repr(self))
        return self._inv[x]

    def pow(self, x: int, n: int) -> int:
        if n < 0:
            x, n = self.inv(x), -n
        if n == 0:
            return 1
        if x == 0:
            return 0
        return self._exp[(self._log[x] * n) % (self.q - 1)]

    # -- elements -------------------------------------------------------------
    def __call__(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError("element belongs to a different field")
            return value
        if isinstance(value, str):
            return FieldElement(self, parse_element(self, value))
        if isinstance(value, (int, np.integer)):
            if not 0 <= int(value) < self.q:
                if self.k == 1:
                    return FieldElement(self, int(value) % self.p)
                raise FieldError(f"{value} is not an element code of {self!r}")
            return FieldElement(self, int(value))
        raise TypeError(f"cannot convert {value!r} to a field element")

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def modulus_str(self) -> str:
        return _poly_str(self.modulus, "x")

    def format(self, v: int, style: str = "poly") -> str:
        if style == "digits":
            return "".join(str(c) for c in reversed(self._digits(v)))
        if self.k == 1:
            return str(v)
        return _poly_str(self._digits(v), "a")


def _poly_str(coeffs, var):
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        else:
            mono = var if i == 1 else f"{var}^{i}"
            parts.append(mono if c == 1 else f"{c}{mono}")
    return "+".join(parts) if parts else "0"


_ELEM_TERM = re.compile(r"^(\d*)\*?(a(?:\^(\d+))?)?$")


def parse_element(F: FieldSpec, text: str) -> int:
    """Parse a field element.

    Accepts base-p digit strings ``c_{k-1}...c_0`` (for prime fields any
    decimal integer, reduced mod p, optionally negative) and polynomial
    notation in the root ``a`` such as ``a+1`` or ``2a^2+a``.
    """
    s = text.strip().replace(" ", "")
    if not s:
        raise FieldError("empty field element")
    if F.k == 1 and re.fullmatch(r"[+-]?\d+", s):
        return int(s) % F.p
    if re.fullmatch(r"\d+", s):
        if len(s) > F.k or any(int(ch) >= F.p for ch in s):
            raise FieldError(f"{text!r} is not a base-{F.p} digit string of length <= {F.k}")
        return F._from_digits([int(ch) for ch in reversed(s)])
    total = 0
    sign = 1
    for tok in re.findall(r"[+-]|[^+-]+", s):
        if tok == "+":
            sign = 1
            continue
        if tok == "-":
            sign = -1
            continue
        m = _ELEM_TERM.match(tok)
        if not m or (not m.group(1) and not m.group(2)):
            raise FieldError(f"cannot parse field element {text!r}")
        coef = int(m.group(1)) % F.p if m.group(1) else 1
        if m.group(2):
            if F.k == 1:
                raise FieldError("the root 'a' is only defined for extension fields")
            e = int(m.group(3)) if m.group(3) else 1
            base = F.pow(F.p, e)  # the code p is the root a
        else:
            base = 1
        val = F.mul(coef % F.p, base) if coef else 0
        if sign < 0:
            val = F.neg(val)
        total = F.add(total, val)
        sign = 1
    return total


@dataclass(frozen=True)
class FieldElement:
    field: FieldSpec
    value: int

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(self.field._digits(self.value))

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError("mixed-field operands")
            return other.value
        if isinstance(other, int):
            return self.field(other % self.field.p if self.field.k > 1 else other).value
        return NotImplemented

    def __add__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.add(self.value, o))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(self.value, o))

    def __rsub__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.sub(o, self.value))

    def __mul__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, o))

    __rmul__ = __mul__

    def __neg__(self):
        return FieldElement(self.field, self.field.neg(self.value))

    def inverse(self):
        return FieldElement(self.field, self.field.inv(self.value))

    def __truediv__(self, other):
        o = self._other(other)
        return FieldElement(self.field, self.field.mul(self.value, self.field.inv(o)))

    def __pow__(self, n: int):
        return FieldElement(self.field, self.field.pow(self.value, n))

    def __bool__(self):
        return self.value != 0

    def __int__(self):
        return self.value

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"FieldElement({self.field.format(self.value)} in {self.field!r})"


@functools.lru_cache(maxsize=None)
def make_field(p: int, k: int = 1) -> FieldSpec:
    """GF(p^k) with the lexicographically smallest monic irreducible modulus."""
    if not is_prime(p):
        raise FieldError(f"characteristic {p} is not prime")
    if k < 1:
        raise FieldError("extension degree must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise FieldError(f"field size {p}^{k} exceeds the cap {MAX_FIELD_SIZE}")
    return FieldSpec(p, k, smallest_irreducible(p, k))


def field_of_size(q: int) -> FieldSpec:
    for p in range(2, q + 1):
        if q % p == 0:
            k = 0
            n = q
            while n % p == 0:
                n //= p
                k += 1
            if n != 1:
                raise FieldError(f"{q} is not a prime power")
            return make_field(p, k)
    raise FieldError(f"{q} is not a prime power")


def parse_field(text: str) -> FieldSpec:
    """``"2^2"`` or ``"4"`` or ``"3"``."""
    text = text.strip()
    if "^" in text:
        p, k = text.split("^")
        return make_field(int(p), int(k))
    return field_of_size(int(text))


def elements(F: FieldSpec) -> list[FieldElement]:
    return [FieldElement(F, v) for v in range(F.q)]

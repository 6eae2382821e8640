"""Exact base fields: arbitrary-precision rationals and odd prime fields.

Scalars are kept in a canonical form (fully reduced fraction with positive
denominator, or least nonnegative residue), so equality of values is plain
representation equality.  All arithmetic is exact; there is no floating-point
mode anywhere in the library.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt

from .errors import InvalidField, NotASquare, UnorderedField, ZeroDenominator

_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin (exact far beyond any desk-scale modulus)."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _mod_sqrt(a: int, p: int) -> int:
    """Tonelli-Shanks; `a` must already be a quadratic residue mod odd prime p."""
    a %= p
    if a == 0:
        return 0
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1
    m, c = s, pow(z, q, p)
    t, r = pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class Field:
    """A base field: the rationals, or integers modulo an odd prime."""

    kind: str
    ordered: bool

    def scalar(self, value) -> "Scalar":
        raise NotImplementedError

    def zero(self) -> "Scalar":
        return self.scalar(0)

    def one(self) -> "Scalar":
        return self.scalar(1)

    def parse(self, text: str) -> "Scalar":
        """Parse the textual scalar form `n` or `n/d` (division done in-field)."""
        if not _RATIONAL_RE.match(text.strip()):
            raise ValueError(f"not a scalar literal: {text!r}")
        body = text.strip()
        if "/" in body:
            n, d = body.split("/")
            return self.scalar(int(n)) / self.scalar(int(d))
        return self.scalar(int(body))

    def format(self, x: "Scalar") -> str:
        return str(x)

    # raw-value arithmetic, supplied by subclasses
    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _div(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def is_square(self, x: "Scalar") -> bool:
        raise NotImplementedError

    def sqrt(self, x: "Scalar") -> "Scalar":
        raise NotImplementedError


class RationalField(Field):
    """The field of arbitrary-precision rationals."""

    kind = "Q"
    ordered = True

    def scalar(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError("scalar from a different field")
            return value
        if isinstance(value, (int, Fraction)):
            return Scalar(self, Fraction(value))
        raise TypeError(f"cannot make a rational from {value!r}")

    def rational(self, n: int, d: int) -> "Scalar":
        if d == 0:
            raise ZeroDenominator(f"{n}/0")
        return Scalar(self, Fraction(n, d))

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _div(self, a, b):
        return a / b

    def _neg(self, a):
        return -a

    def is_square(self, x: "Scalar") -> bool:
        v = x.value
        if v < 0:
            return False
        n, d = v.numerator, v.denominator
        return isqrt(n) ** 2 == n and isqrt(d) ** 2 == d

    def sqrt(self, x: "Scalar") -> "Scalar":
        if not self.is_square(x):
            raise NotASquare(str(x))
        v = x.value
        return Scalar(self, Fraction(isqrt(v.numerator), isqrt(v.denominator)))

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("Q")

    def __repr__(self):
        return "RationalField()"

    def __str__(self):
        return "Q"


class PrimeField(Field):
    """Integers modulo p, p an odd prime; characteristic 2 is rejected."""

    kind = "Fp"
    ordered = False

    def __init__(self, p: int):
        if p == 2:
            raise InvalidField("characteristic 2 is not supported")
        if p < 2 or not _is_prime(p):
            raise InvalidField(f"{p} is not prime")
        self.p = p

    def scalar(self, value) -> "Scalar":
        if isinstance(value, Scalar):
            if value.field != self:
                raise ValueError("scalar from a different field")
            return value
        if isinstance(value, int):
            return Scalar(self, value % self.p)
        raise TypeError(f"cannot make a residue from {value!r}")

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return a * b % self.p

    def _div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero residue")
        return a * pow(b, -1, self.p) % self.p

    def _neg(self, a):
        return -a % self.p

    def is_square(self, x: "Scalar") -> bool:
        v = x.value
        return v == 0 or pow(v, (self.p - 1) // 2, self.p) == 1

    def sqrt(self, x: "Scalar") -> "Scalar":
        if not self.is_square(x):
            raise NotASquare(f"{x} mod {self.p}")
        r = _mod_sqrt(x.value, self.p)
        return Scalar(self, min(r, (self.p - r) % self.p))

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("Fp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"

    def __str__(self):
        return f"Fp {self.p}"


class Scalar:
    """One exact field element; canonical, hashable, operator-overloaded."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _lift(self, other):
        if isinstance(other, Scalar):
            if other.field != self.field:
                raise ValueError("mixed-field arithmetic")
            return other
        if isinstance(other, int):
            return self.field.scalar(other)
        return None

    def __add__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._add(self.value, o.value))

    __radd__ = __add__

    def __sub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._sub(self.value, o.value))

    def __rsub__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._sub(o.value, self.value))

    def __mul__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._mul(self.value, o.value))

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._div(self.value, o.value))

    def __rtruediv__(self, other):
        o = self._lift(other)
        if o is None:
            return NotImplemented
        return Scalar(self.field, self.field._div(o.value, self.value))

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def __pow__(self, n: int):
        out = self.field.one()
        base = self
        if n < 0:
            base = self.field.one() / self
            n = -n
        for _ in range(n):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = self.field.scalar(other)
        if not isinstance(other, Scalar):
            return NotImplemented
        return self.field == other.field and self.value == other.value

    def __hash__(self):
        return hash((self.field, self.value))

    def __bool__(self):
        return self.value != 0

    def _cmp_other(self, other):
        if not self.field.ordered:
            raise UnorderedField("residues are not ordered")
        o = self._lift(other)
        if o is None:
            raise TypeError(f"cannot compare scalar with {other!r}")
        return o

    def __lt__(self, other):
        return self.value < self._cmp_other(other).value

    def __le__(self, other):
        return self.value <= self._cmp_other(other).value

    def __gt__(self, other):
        return self.value > self._cmp_other(other).value

    def __ge__(self, other):
        return self.value >= self._cmp_other(other).value

    def __abs__(self):
        if not self.field.ordered:
            raise UnorderedField("absolute value needs an ordered field")
        return Scalar(self.field, abs(self.value))

    def is_square(self) -> bool:
        return self.field.is_square(self)

    def sqrt(self) -> "Scalar":
        """Canonical root: nonnegative over the rationals, least residue mod p."""
        return self.field.sqrt(self)

    def __str__(self):
        return str(self.value)

    def __repr__(self):
        return f"Scalar({self.field}, {self.value})"


#: The rationals, shared by everyone (all RationalField instances compare equal).
Q = RationalField()


def make_rational(n: int, d: int) -> Scalar:
    """The reduced canonical rational n/d (positive denominator, gcd 1)."""
    return Q.rational(n, d)


def is_square(x: Scalar, field: Field | None = None) -> bool:
    """True iff some field element squares to x."""
    return (field or x.field).is_square(x)


def sqrt(x: Scalar, field: Field | None = None) -> Scalar:
    """Canonical square root of x; raises NotASquare when none exists."""
    return (field or x.field).sqrt(x)


def field_from_text(text: str) -> Field:
    """Parse the CLI field syntax: 'q' or 'fp:<p>'."""
    t = text.strip().lower()
    if t == "q":
        return Q
    if t.startswith("fp:"):
        return PrimeField(int(t[3:]))
    raise InvalidField(f"unknown field spec {text!r} (expected q or fp:<p>)")

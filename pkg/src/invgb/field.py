"""Exact coefficient fields: GF(2), GF(p) for prime p < 2**31, and the rationals.

A field object owns the arithmetic on raw values (ints for the finite
fields, ``fractions.Fraction`` for Q).  Polynomial code stores raw values
and calls the field, which keeps inner loops cheap.  ``FieldElement`` is
the checked wrapper used at API boundaries: it carries its field and
refuses to mix with elements of another field.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from operator import and_, mul, xor

from .errors import FieldMismatchError, UsageError

_INT_RE = re.compile(r"^[+-]?\d+$")
_RAT_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


class Field:
    """Arithmetic on raw coefficient values of one field."""

    name = "?"
    spec = "?"
    enumerable = False
    zero = 0
    one = 1

    @property
    def key(self):
        return self.spec

    def __eq__(self, other):
        return isinstance(other, Field) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        return self.name

    def __call__(self, value) -> FieldElement:
        return FieldElement(self, self.coerce(value))

    def coerce(self, value):
        """Turn an int, string, Fraction or FieldElement into a raw value."""
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldMismatchError(f"element of {value.field} used in {self}")
            return value.value
        if isinstance(value, str):
            return self.parse(value)
        return self.from_int(value)

    def is_zero(self, a):
        return a == 0

    def div(self, a, b):
        return self.mul(a, self.inv(b))

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def power(self, a, e):
        if e < 0:
            a, e = self.inv(a), -e
        result = self.one
        while e:
            if e & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            e >>= 1
        return result

    def dot(self, xs, ys):
        """Sum of products of two equal-length value lists."""
        acc = self.zero
        for a, b in zip(xs, ys):
            acc = self.add(acc, self.mul(a, b))
        return acc

    def axpy(self, target, offset, q, xs):
        """In place: target[offset + k] -= q * xs[k]."""
        for k, a in enumerate(xs):
            target[offset + k] = self.sub(target[offset + k], self.mul(q, a))


class GF2(Field):
    name = "GF(2)"
    spec = "gf2"
    enumerable = True
    size = 2

    def from_int(self, n):
        if isinstance(n, Fraction):
            if n.denominator != 1:
                raise UsageError(f"{n} is not an element of GF(2)")
            n = n.numerator
        return int(n) & 1

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise UsageError(f"cannot parse {text!r} as an element of GF(2)")
        return int(text) & 1

    def format(self, a):
        return str(a)

    def add(self, a, b):
        return a ^ b

    sub = add

    def neg(self, a):
        return a

    def mul(self, a, b):
        return a & b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse in GF(2)")
        return 1

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in GF(2)")
        return a

    def elements(self):
        return [0, 1]

    def random(self, rng):
        return rng.getrandbits(1)

    def dot(self, xs, ys):
        return sum(map(and_, xs, ys)) & 1

    def axpy(self, target, offset, q, xs):
        if q:
            end = offset + len(xs)
            target[offset:end] = map(xor, target[offset:end], xs)


class PrimeField(Field):
    enumerable = True

    def __init__(self, p):
        if not isinstance(p, int) or p < 2 or p >= 2**31:
            raise UsageError(f"GF(p) needs a prime 2 <= p < 2^31, got {p!r}")
        if not _is_prime(p):
            raise UsageError(f"{p} is not prime")
        self.p = p
        self.size = p
        self.name = f"GF({p})"
        self.spec = f"gfp:{p}"

    def from_int(self, n):
        if isinstance(n, Fraction):
            return self.div(n.numerator % self.p, n.denominator % self.p)
        return int(n) % self.p

    def parse(self, text):
        text = text.strip()
        if not _INT_RE.match(text):
            raise UsageError(f"cannot parse {text!r} as an element of {self.name}")
        return int(text) % self.p

    def format(self, a):
        return str(a)

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def neg(self, a):
        return -a % self.p

    def mul(self, a, b):
        return a * b % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(a, -1, self.p)

    def elements(self):
        return list(range(self.p))

    def random(self, rng):
        return rng.randrange(self.p)

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys)) % self.p

    def axpy(self, target, offset, q, xs):
        if q:
            p = self.p
            end = offset + len(xs)
            target[offset:end] = [(t - q * a) % p for t, a in zip(target[offset:end], xs)]


class Rationals(Field):
    name = "Q"
    spec = "q"
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def parse(self, text):
        text = text.strip()
        m = _RAT_RE.match(text)
        if not m:
            raise UsageError(f"cannot parse {text!r} as a rational")
        den = int(m.group(2) or 1)
        if den == 0:
            raise UsageError(f"zero denominator in {text!r}")
        return Fraction(int(m.group(1)), den)

    def format(self, a):
        return str(a)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def neg(self, a):
        return -a

    def mul(self, a, b):
        return a * b

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("division by zero in Q")
        return 1 / a

    def div(self, a, b):
        if b == 0:
            raise ZeroDivisionError("division by zero in Q")
        return a / b

    def random(self, rng, bound=5):
        num = rng.randint(-bound, bound)
        return Fraction(num, rng.randint(1, 3))

    def dot(self, xs, ys):
        return sum(map(mul, xs, ys), Fraction(0))

    def axpy(self, target, offset, q, xs):
        if q:
            end = offset + len(xs)
            target[offset:end] = [t - q * a for t, a in zip(target[offset:end], xs)]


class CountingField(Field):
    """Wraps a field and counts multiplications (a division counts as one).

    Bulk ``dot``/``axpy`` calls count one multiplication per pair of
    operands.  Equal to the wrapped field, so results mix freely.
    """

    def __init__(self, base):
        self.base = base
        self.mults = 0
        self.name = base.name
        self.spec = base.spec
        self.enumerable = base.enumerable
        self.zero = base.zero
        self.one = base.one

    def __getattr__(self, attr):
        return getattr(self.base, attr)

    def add(self, a, b):
        return self.base.add(a, b)

    def sub(self, a, b):
        return self.base.sub(a, b)

    def neg(self, a):
        return self.base.neg(a)

    def from_int(self, n):
        return self.base.from_int(n)

    def parse(self, text):
        return self.base.parse(text)

    def format(self, a):
        return self.base.format(a)

    def mul(self, a, b):
        self.mults += 1
        return self.base.mul(a, b)

    def inv(self, a):
        self.mults += 1
        return self.base.inv(a)

    def div(self, a, b):
        self.mults += 1
        return self.base.div(a, b)

    def dot(self, xs, ys):
        self.mults += min(len(xs), len(ys))
        return self.base.dot(xs, ys)

    def axpy(self, target, offset, q, xs):
        self.mults += len(xs)
        self.base.axpy(target, offset, q, xs)


class FieldElement:
    """An exact scalar tagged with its field."""

    __slots__ = ("field", "value")

    def __init__(self, field, value):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "value", value)

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    def _other(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")
            return other.value
        if isinstance(other, (int, Fraction)):
            return self.field.from_int(other)
        return NotImplemented

    def _wrap(self, value):
        return FieldElement(self.field, value)

    def __add__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.add(self.value, b))

    __radd__ = __add__

    def __sub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(self.value, b))

    def __rsub__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.sub(b, self.value))

    def __mul__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.mul(self.value, b))

    __rmul__ = __mul__

    def __truediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(self.value, b))

    def __rtruediv__(self, other):
        b = self._other(other)
        return NotImplemented if b is NotImplemented else self._wrap(self.field.div(b, self.value))

    def __neg__(self):
        return self._wrap(self.field.neg(self.value))

    def __pow__(self, e):
        return self._wrap(self.field.power(self.value, e))

    def inv(self):
        return self._wrap(self.field.inv(self.value))

    def is_zero(self):
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return self.field == other.field and self.value == other.value
        if isinstance(other, (int, Fraction)):
            return self.value == self.field.from_int(other)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.value))

    def __str__(self):
        return self.field.format(self.value)

    def __repr__(self):
        return f"{self.field.name}({self})"


def _is_prime(n):
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


@lru_cache(maxsize=None)
def gf2() -> GF2:
    return GF2()


@lru_cache(maxsize=None)
def gfp(p: int) -> Field:
    if p == 2:
        return gf2()
    return PrimeField(p)


@lru_cache(maxsize=None)
def rationals() -> Rationals:
    return Rationals()


def parse_field(spec: str) -> Field:
    """Accepts ``gf2``, ``gfp:<p>`` (also ``gf<p>``) or ``q``."""
    s = spec.strip().lower()
    if s in ("gf2", "gf(2)"):
        return gf2()
    if s in ("q", "qq", "rationals"):
        return rationals()
    m = re.match(r"^(?:gfp:|gf\(?)(\d+)\)?$", s)
    if m:
        return gfp(int(m.group(1)))
    raise UsageError(f"unknown field {spec!r}; use gf2, gfp:<p> or q")

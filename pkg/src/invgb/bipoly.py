"""Homogeneous polynomials (forms) in k[x,z] under grlex with x > z.

A ``Form`` of degree d stores d+1 raw coefficients indexed by z-power:
``coeffs[j]`` multiplies x^(d-j) z^j.  The zero polynomial is the form
with no coefficients and degree -inf.  ``UniPoly`` is the dehomogenised
world: coefficients by descending power of x.
"""

from __future__ import annotations

import re
from typing import NamedTuple

from .errors import FieldMismatchError, UsageError
from .field import FieldElement, Rationals

NEG_INF = float("-inf")


class Monomial(NamedTuple):
    xdeg: int
    zdeg: int

    @property
    def degree(self):
        return self.xdeg + self.zdeg

    def divides(self, other):
        return self.xdeg <= other.xdeg and self.zdeg <= other.zdeg

    def __str__(self):
        return format_monomial(self.xdeg, self.zdeg) or "1"


def grlex_key(mon):
    """Sort key: larger key means larger in grlex with x > z."""
    return (mon[0] + mon[1], mon[0])


def grlex_compare(m1, m2) -> int:
    """Return 1, 0 or -1 as m1 is greater than, equal to or less than m2."""
    k1, k2 = grlex_key(m1), grlex_key(m2)
    return (k1 > k2) - (k1 < k2)


# text rendering and parsing, shared by forms, polynomials and inverse forms

def format_monomial(a, b, xname="x", zname="z"):
    parts = []
    for name, e in ((xname, a), (zname, b)):
        if e == 1:
            parts.append(name)
        elif e != 0:
            parts.append(f"{name}^{e}")
    return "*".join(parts)


def format_terms(field, terms, xname="x", zname="z"):
    """Render ``[((a, b), c), ...]`` (already ordered) as canonical text."""
    out = []
    for (a, b), c in terms:
        negative = isinstance(field, Rationals) and c < 0
        if negative:
            c = -c
        mono = format_monomial(a, b, xname, zname)
        cstr = field.format(c)
        if not mono:
            body = cstr
        elif c == 1:
            body = mono
        else:
            body = f"{cstr}*{mono}"
        if not out:
            out.append("-" + body if negative else body)
        else:
            out.append((" - " if negative else " + ") + body)
    return "".join(out) if out else "0"


_FACTOR_RE = re.compile(r"^(?:(\d+(?:/\d+)?)|([a-z])(?:\^(-?\d+))?)$")


def parse_terms(text, field, variables=("x", "z"), allow_negative=False):
    """Parse a sum of terms into ``{exponent tuple: raw coefficient}``.

    Zero coefficients are dropped; repeated monomials are combined.
    """
    s = re.sub(r"\s+", "", text)
    if not s:
        raise UsageError("empty polynomial")
    chunks, start = [], 0
    for i, ch in enumerate(s):
        if ch in "+-" and i > 0 and s[i - 1] != "^":
            chunks.append(s[start:i])
            start = i
    chunks.append(s[start:])
    result = {}
    nvars = len(variables)
    for chunk in chunks:
        sign = 1
        while chunk and chunk[0] in "+-":
            if chunk[0] == "-":
                sign = -sign
            chunk = chunk[1:]
        if not chunk:
            raise UsageError(f"dangling sign in {text!r}")
        coef = field.one
        exps = [0] * nvars
        for factor in chunk.split("*"):
            m = _FACTOR_RE.match(factor)
            if not m:
                raise UsageError(f"cannot parse factor {factor!r} in {text!r}")
            if m.group(1) is not None:
                if "/" in m.group(1) and not isinstance(field, Rationals):
                    num, den = m.group(1).split("/")
                    val = field.div(field.parse(num), field.parse(den))
                else:
                    val = field.parse(m.group(1))
                coef = field.mul(coef, val)
            else:
                name = m.group(2)
                if name not in variables:
                    raise UsageError(f"unknown variable {name!r} in {text!r}")
                e = int(m.group(3)) if m.group(3) is not None else 1
                if e < 0 and not allow_negative:
                    raise UsageError(f"negative exponent in {text!r}")
                exps[variables.index(name)] += e
        if sign < 0:
            coef = field.neg(coef)
        key = tuple(exps)
        result[key] = field.add(result.get(key, field.zero), coef)
        if field.is_zero(result[key]):
            del result[key]
    return result


class Form:
    """A homogeneous polynomial in k[x,z], or the zero polynomial."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = tuple(coeffs)
        if not any(coeffs):
            coeffs = ()
        self.field = field
        self.coeffs = coeffs

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def monomial(cls, field, xdeg, zdeg, c=None):
        c = field.one if c is None else c
        coeffs = [field.zero] * (xdeg + zdeg + 1)
        coeffs[zdeg] = c
        return cls(field, coeffs)

    @classmethod
    def from_terms(cls, field, terms):
        """Build from ``{(a, b): c}``; all terms must share one total degree."""
        if not terms:
            return cls.zero(field)
        degrees = {a + b for a, b in terms}
        if len(degrees) != 1:
            raise UsageError("terms of mixed total degree do not form a form")
        d = degrees.pop()
        coeffs = [field.zero] * (d + 1)
        for (a, b), c in terms.items():
            coeffs[b] = field.add(coeffs[b], c)
        return cls(field, coeffs)

    @classmethod
    def parse(cls, text, field):
        return cls.from_terms(field, parse_terms(text, field))

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    def _require_nonzero(self, what):
        if not self.coeffs:
            raise UsageError(f"{what} of the zero polynomial")

    def terms(self):
        """Nonzero ``(Monomial, raw coefficient)`` pairs in decreasing grlex order."""
        d = len(self.coeffs) - 1
        return [(Monomial(d - j, j), c) for j, c in enumerate(self.coeffs) if c]

    def term_dict(self):
        return {mon: c for mon, c in self.terms()}

    def coeff(self, xdeg, zdeg):
        if xdeg + zdeg != self.degree or xdeg < 0 or zdeg < 0:
            return self.field(0)
        return self.field(self.coeffs[zdeg])

    def _lead_index(self):
        self._require_nonzero("leading term")
        for j, c in enumerate(self.coeffs):
            if c:
                return j

    def leading(self):
        j = self._lead_index()
        return Monomial(len(self.coeffs) - 1 - j, j), self.field(self.coeffs[j])

    @property
    def lm(self):
        return self.leading()[0]

    @property
    def lc(self):
        return self.coeffs[self._lead_index()]

    def z_valuation(self):
        return self._lead_index()

    def is_monic(self):
        return bool(self.coeffs) and self.lc == self.field.one

    def in_phi(self):
        """Monic with a z-free leading monomial."""
        return bool(self.coeffs) and self.coeffs[0] == self.field.one

    def _check(self, other):
        if not isinstance(other, Form):
            raise TypeError(f"expected a Form, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine forms over {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        if len(self.coeffs) != len(other.coeffs):
            raise UsageError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        add = self.field.add
        return Form(self.field, [add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        neg = self.field.neg
        return Form(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.coerce(c)
        mul = self.field.mul
        return Form(self.field, [mul(c, a) for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return Form.zero(self.field)
        f = self.field
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        out[i + j] = f.add(out[i + j], f.mul(a, b))
        return Form(f, out)

    __rmul__ = __mul__

    def mul_x(self, k=1):
        if not self.coeffs or k == 0:
            return self
        return Form(self.field, self.coeffs + (self.field.zero,) * k)

    def mul_z(self, k=1):
        if not self.coeffs or k == 0:
            return self
        return Form(self.field, (self.field.zero,) * k + self.coeffs)

    def mul_monomial(self, mon, c=None):
        out = self.mul_x(mon[0]).mul_z(mon[1])
        return out if c is None else out.scale(c)

    def div_z(self, k=1):
        """Exact division by z^k; the caller guarantees z^k divides."""
        if not self.coeffs:
            return self
        if any(self.coeffs[:k]):
            raise UsageError(f"z^{k} does not divide {self}")
        return Form(self.field, self.coeffs[k:])

    def monic(self):
        return self.scale(self.field(self.field.inv(self.lc)))

    def __eq__(self, other):
        if isinstance(other, Form):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def __str__(self):
        return format_terms(self.field, self.terms())

    def __repr__(self):
        return f"Form({self}; {self.field.name})"


class UniPoly:
    """A polynomial in k[x]; ``coeffs`` by descending power, empty for zero."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs):
        coeffs = list(coeffs)
        k = 0
        while k < len(coeffs) and not coeffs[k]:
            k += 1
        self.field = field
        self.coeffs = tuple(coeffs[k:])

    @classmethod
    def zero(cls, field):
        return cls(field, ())

    @classmethod
    def one(cls, field):
        return cls(field, (field.one,))

    @classmethod
    def x_power(cls, field, n, c=None):
        return cls(field, (field.one if c is None else c,) + (field.zero,) * n)

    @classmethod
    def from_ascending(cls, field, coeffs):
        return cls(field, reversed(list(coeffs)))

    @classmethod
    def parse(cls, text, field):
        terms = parse_terms(text, field, variables=("x",))
        if not terms:
            return cls.zero(field)
        d = max(e[0] for e in terms)
        coeffs = [field.zero] * (d + 1)
        for (e,), c in terms.items():
            coeffs[d - e] = c
        return cls(field, coeffs)

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def lc(self):
        if not self.coeffs:
            raise UsageError("leading coefficient of the zero polynomial")
        return self.coeffs[0]

    def coeff(self, j):
        """Raw coefficient of x^j (zero outside the support)."""
        d = len(self.coeffs) - 1
        if 0 <= j <= d:
            return self.coeffs[d - j]
        return self.field.zero

    def ascending(self):
        return list(reversed(self.coeffs))

    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[0] == self.field.one

    def _check(self, other):
        if not isinstance(other, UniPoly):
            raise TypeError(f"expected a UniPoly, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self.field} and {other.field}")

    def __add__(self, other):
        self._check(other)
        a, b = self.ascending(), other.ascending()
        if len(a) < len(b):
            a, b = b, a
        f = self.field
        out = list(a)
        for i, c in enumerate(b):
            out[i] = f.add(out[i], c)
        return UniPoly.from_ascending(f, out)

    def __neg__(self):
        return UniPoly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.coerce(c)
        return UniPoly(self.field, [self.field.mul(c, a) for a in self.coeffs])

    def mul_x(self, k=1):
        if not self.coeffs:
            return self
        return UniPoly(self.field, self.coeffs + (self.field.zero,) * k)

    def __mul__(self, other):
        if isinstance(other, (FieldElement, int)):
            return self.scale(other)
        self._check(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly.zero(self.field)
        f = self.field
        out = [f.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = f.add(out[i + j], f.mul(a, b))
        return UniPoly(f, out)

    __rmul__ = __mul__

    def divmod(self, other):
        """Long division: returns (quotient, remainder)."""
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        f = self.field
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UniPoly.zero(f), self
        inv_lc = f.inv(other.coeffs[0])
        quot = []
        for k in range(dq + 1):
            c = f.mul(rem[k], inv_lc)
            quot.append(c)
            if c:
                for t, b in enumerate(other.coeffs):
                    rem[k + t] = f.sub(rem[k + t], f.mul(c, b))
        return UniPoly(f, quot), UniPoly(f, rem[dq + 1:])

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.field == other.field and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.coeffs))

    def __str__(self):
        d = len(self.coeffs) - 1
        terms = [((d - j, 0), c) for j, c in enumerate(self.coeffs) if c]
        return format_terms(self.field, terms)

    def __repr__(self):
        return f"UniPoly({self}; {self.field.name})"


def leading(phi: Form):
    return phi.leading()


def homogenise(psi: UniPoly, degree=None) -> Form:
    """psi(x/z) z^degree; the degree defaults to deg psi."""
    if not psi.coeffs:
        raise UsageError("cannot homogenise the zero polynomial")
    form = Form(psi.field, psi.coeffs)
    if degree is not None:
        if degree < psi.degree:
            raise UsageError(f"degree {degree} below deg psi = {psi.degree}")
        form = form.mul_z(degree - psi.degree)
    return form


def dehomogenise(phi: Form) -> UniPoly:
    """Substitute z = 1; the zero form maps to the zero polynomial."""
    return UniPoly(phi.field, phi.coeffs)


def divide_by_phi(phi: Form, g: Form):
    """Divide a form by g (monic, z-free leader) through univariate division.

    Returns (alpha, beta) with phi = alpha*g + beta.  When |g| <= |phi|,
    beta is zero or divisible by z.
    """
    if not g.in_phi():
        raise UsageError(f"{g} is not monic with a z-free leading monomial")
    if phi.is_zero():
        raise UsageError("cannot divide the zero polynomial")
    if phi.field != g.field:
        raise FieldMismatchError("divide_by_phi across fields")
    d = phi.degree
    if d < g.degree:
        return Form.zero(phi.field), phi
    q, r = dehomogenise(phi).divmod(dehomogenise(g))
    alpha = homogenise(q, d - g.degree) if q else Form.zero(phi.field)
    beta = homogenise(r, d) if r else Form.zero(phi.field)
    return alpha, beta

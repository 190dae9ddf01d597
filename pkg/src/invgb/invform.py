"""Inverse forms in k[x^-1, z^-1] and the action of k[x,z] on them.

An ``InverseForm`` of degree m <= 0 keeps F_m, ..., F_0 where F_i is the
coefficient of x^i z^(m-i).  Multiplying by a form and discarding every
monomial with a positive exponent is the module action ``act``.
"""

from __future__ import annotations

import json
import re

from .bipoly import Form, format_terms
from .errors import FieldMismatchError, UsageError
from .field import parse_field


class InverseForm:
    __slots__ = ("field", "degree", "coeffs")

    def __init__(self, field, degree, coeffs):
        coeffs = tuple(coeffs)
        if degree > 0:
            raise UsageError(f"inverse forms have degree <= 0, got {degree}")
        if len(coeffs) != 1 - degree:
            raise UsageError(f"degree {degree} needs {1 - degree} coefficients, got {len(coeffs)}")
        if not any(coeffs):
            raise UsageError("the zero inverse form is not allowed")
        self.field = field
        self.degree = degree
        self.coeffs = coeffs

    @classmethod
    def from_terms(cls, field, degree, terms):
        """Build from ``{i: F_i}`` (x-exponents in [degree, 0])."""
        coeffs = [field.zero] * (1 - degree)
        for i, c in terms.items():
            if not degree <= i <= 0:
                raise UsageError(f"x-exponent {i} outside [{degree}, 0]")
            coeffs[i - degree] = field.coerce(c)
        return cls(field, degree, coeffs)

    @classmethod
    def x_power(cls, field, m):
        return cls.from_terms(field, m, {m: 1})

    @classmethod
    def z_power(cls, field, m):
        return cls.from_terms(field, m, {0: 1})

    @classmethod
    def unit(cls, field):
        return cls(field, 0, (field.one,))

    def coefficient(self, i):
        """Raw F_i; zero outside [m, 0]."""
        if self.degree <= i <= 0:
            return self.coeffs[i - self.degree]
        return self.field.zero

    def __getitem__(self, i):
        return self.field(self.coefficient(i))

    @property
    def order(self):
        for k in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[k]:
                return k + self.degree

    def normalised(self):
        """The multiple with F_nu = 1 (same annihilator ideal)."""
        f = self.field
        inv = f.inv(self.coefficient(self.order))
        return InverseForm(f, self.degree, [f.mul(inv, c) for c in self.coeffs])

    def to_sequence(self):
        """Raw coefficients F_0, F_-1, ..., F_m (the associated sequence)."""
        return list(reversed(self.coeffs))

    def __eq__(self, other):
        if isinstance(other, InverseForm):
            return (self.field == other.field and self.degree == other.degree
                    and self.coeffs == other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.field.key, self.degree, self.coeffs))

    def __str__(self):
        m = self.degree
        terms = [((i, m - i), c) for i, c in zip(range(m, 1), self.coeffs) if c]
        return format_terms(self.field, terms)

    def __repr__(self):
        return f"InverseForm({self}; {self.field.name})"

    def to_text(self):
        fmt = self.field.format
        return f"m={self.degree}; F=" + ",".join(fmt(c) for c in self.coeffs)

    @classmethod
    def parse(cls, text, field):
        """Parse ``m=<int>; F=<F_m>,...,<F_0>``."""
        mt = re.match(r"^\s*m\s*=\s*(-?\d+)\s*;\s*F\s*=\s*(.*?)\s*$", text)
        if not mt:
            raise UsageError(f"expected 'm=<int>; F=<F_m>,...,<F_0>', got {text!r}")
        items = [t for t in mt.group(2).split(",")]
        return cls(field, int(mt.group(1)), [field.parse(t) for t in items])

    def to_json(self):
        fmt = self.field.format
        return {"field": self.field.spec, "degree": self.degree,
                "coeffs": [fmt(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data):
        if isinstance(data, str):
            data = json.loads(data)
        field = parse_field(data["field"])
        return cls(field, int(data["degree"]), [field.parse(str(c)) for c in data["coeffs"]])


def _same_field(phi, F):
    if phi.field != F.field:
        raise FieldMismatchError(f"form over {phi.field} acting on inverse form over {F.field}")


def act(phi: Form, F: InverseForm):
    """phi o F, or None when the result is zero."""
    if phi.is_zero():
        raise UsageError("act needs a nonzero form")
    _same_field(phi, F)
    e, m = phi.degree, F.degree
    d = e + m
    if d > 0:
        return None
    f = F.field
    out = []
    for i in range(d, 1):
        acc = f.zero
        # term j of phi is x^(e-j) z^j; it meets F_k with k = i - e + j
        for j, c in enumerate(phi.coeffs):
            k = i - e + j
            if c and m <= k <= 0:
                acc = f.add(acc, f.mul(c, F.coeffs[k - m]))
        out.append(acc)
    if not any(out):
        return None
    return InverseForm(f, d, out)


def annihilates(phi: Form, F: InverseForm) -> bool:
    return act(phi, F) is None


def augment(a, F: InverseForm) -> InverseForm:
    """a x^(m-1) + F z^-1."""
    return InverseForm(F.field, F.degree - 1, (F.field.coerce(a),) + F.coeffs)


def subform(F: InverseForm, i: int) -> InverseForm:
    """The inverse subform of degree i: coefficients F_i, ..., F_0."""
    if not F.degree <= i <= F.order:
        raise UsageError(f"subform index {i} outside [{F.degree}, {F.order}]")
    return InverseForm(F.field, i, F.coeffs[i - F.degree:])


def discrepancy(phi: Form, G: InverseForm):
    """Coefficient of x^(|phi|+|G|) in phi*G, as a field element.

    A single window dot product: the term x^(e-j) z^j of phi meets G_(M+j).
    """
    if phi.is_zero():
        raise UsageError("discrepancy needs a nonzero form")
    _same_field(phi, G)
    e, M = phi.degree, G.degree
    f = G.field
    if e + M > 0:
        return f(0)
    width = min(e, -M) + 1
    return f(f.dot(phi.coeffs[:width], G.coeffs[:width]))


def is_geometric(F: InverseForm):
    """The ratio r = F_-1 when F_0 = 1 and F_i = r F_(i+1) throughout; else None."""
    f = F.field
    if F.degree > -1 or F.coefficient(0) != f.one:
        return None
    r = F.coefficient(-1)
    for i in range(F.degree, -1):
        if F.coefficient(i) != f.mul(r, F.coefficient(i + 1)):
            return None
    return f(r)

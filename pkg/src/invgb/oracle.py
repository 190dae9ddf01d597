"""Brute-force checks that share nothing with the fast paths.

Everything here is exponential or uses full Laurent products.  Searches
refuse inputs beyond fixed budgets instead of truncating.
"""

from __future__ import annotations

from itertools import product

from .bipoly import Form, UniPoly
from .errors import OracleBudgetError, UsageError
from .field import GF2, PrimeField
from .groebner import buchberger, remainder
from .invform import InverseForm
from .sequence import SequenceRecord, is_annihilating

# largest 1-m (or sequence length) each enumerable field may search
BUDGET = {2: 14, 3: 9}


class LaurentPoly:
    """Sparse map (i, j) -> coefficient for x^i z^j, any signs allowed."""

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def from_form(cls, phi: Form):
        d = phi.degree
        return cls(phi.field, {(d - j, j): c for j, c in enumerate(phi.coeffs)})

    @classmethod
    def from_inverse(cls, F: InverseForm):
        m = F.degree
        return cls(F.field, {(i, m - i): F.coefficient(i) for i in range(m, 1)})

    def __mul__(self, other):
        f = self.field
        out = {}
        for (a, b), c in self.terms.items():
            for (x, z), v in other.terms.items():
                key = (a + x, b + z)
                out[key] = f.add(out.get(key, f.zero), f.mul(c, v))
        return LaurentPoly(f, out)

    def __getitem__(self, key):
        return self.terms.get(key, self.field.zero)


def laurent_annihilation_check(phi: Form, F: InverseForm) -> bool:
    """Full product phi*F, then every coefficient of x^i z^(d-i), d <= i <= 0, must vanish."""
    if phi.is_zero():
        raise UsageError("need a nonzero form")
    prod = LaurentPoly.from_form(phi) * LaurentPoly.from_inverse(F)
    d = phi.degree + F.degree
    return all(not prod[(i, d - i)] for i in range(d, 1))


def _budget(field, size):
    base = field.base if hasattr(field, "base") else field
    if not isinstance(base, (GF2, PrimeField)) or base.size not in BUDGET:
        raise OracleBudgetError(f"exhaustive search only over GF(2) or GF(3), not {field}")
    limit = BUDGET[base.size]
    if size > limit:
        raise OracleBudgetError(f"search size {size} exceeds the {field} budget of {limit}")


def exhaustive_lambda(F: InverseForm) -> int:
    """Least degree of a monic annihilating form whose leader is a pure x-power."""
    field = F.field
    _budget(field, 1 - F.degree)
    elems = field.elements()
    for d in range(0, 2 - F.degree):
        for tail in product(elems, repeat=d):
            phi = Form(field, (field.one,) + tail)
            if laurent_annihilation_check(phi, F):
                return d
    raise AssertionError("x^(1-m) always annihilates; unreachable")


def exhaustive_lc(s: SequenceRecord) -> int:
    """Least degree of a monic polynomial annihilating s (0 for a zero sequence)."""
    field = s.field
    _budget(field, s.n)
    elems = field.elements()
    for d in range(0, s.n + 1):
        for tail in product(elems, repeat=d):
            if is_annihilating(UniPoly(field, (field.one,) + tail), s):
                return d
    raise AssertionError("x^n always annihilates; unreachable")


def standard_monomial_count(G, m) -> int:
    """Lattice points of [0, 1-m]^2 outside the monomial ideal of the leaders of G."""
    if m is None:
        raise UsageError("standard_monomial_count needs the box bound m")
    leaders = [g.lm for g in G]
    side = 1 - m
    if not any(a <= side and b == 0 for a, b in leaders) or \
            not any(b <= side and a == 0 for a, b in leaders):
        raise UsageError(f"leaders {leaders} do not bound the box [0, {side}]^2")
    count = 0
    for i in range(side + 1):
        for j in range(side + 1):
            if not any(a <= i and b <= j for a, b in leaders):
                count += 1
    return count


def ideal_equal(A, B) -> bool:
    """True when each generator set lies in the ideal of the other."""
    GA, GB = buchberger(A), buchberger(B)
    return (all(not remainder(a, GB) for a in A)
            and all(not remainder(b, GA) for b in B))

"""Finite sequences: annihilator pairs, linear complexity, minimal polynomials.

A sequence s_0, ..., s_(n-1) corresponds to the inverse form of degree
1-n whose coefficient at x^(-i) is s_i.  ``viable_pair_seq`` runs the
shared annihilator kernel from the pair (1, 0); ``bm_variant`` is a
separate univariate implementation of the same recursion that never
builds an inverse form.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .annihilator import ViablePair, _Run
from .bipoly import Form, UniPoly, dehomogenise, homogenise
from .errors import UsageError
from .field import Field
from .invform import InverseForm


@dataclass(frozen=True)
class SequenceRecord:
    field: Field
    terms: tuple

    def __post_init__(self):
        if len(self.terms) < 1:
            raise UsageError("a sequence needs at least one term")

    @classmethod
    def parse(cls, text, field):
        """Comma-separated terms, s_0 first."""
        items = [t for t in text.replace(";", ",").split(",")]
        if not text.strip() or any(not t.strip() for t in items):
            raise UsageError(f"cannot parse sequence {text!r}")
        return cls(field, tuple(field.parse(t) for t in items))

    @classmethod
    def of(cls, field, values):
        return cls(field, tuple(field.coerce(v) for v in values))

    @property
    def n(self):
        return len(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_trivial(self):
        return not any(self.terms)

    def __str__(self):
        return ",".join(self.field.format(c) for c in self.terms)


class BmPair(NamedTuple):
    mu: UniPoly
    mu_prime: UniPoly


def _record(s, field=None):
    if isinstance(s, SequenceRecord):
        return s
    if field is None:
        raise UsageError("a field is needed to interpret a plain list as a sequence")
    return SequenceRecord.of(field, s)


def inverse_form(s, field=None):
    """The inverse form of degree 1-n, or None for an all-zero sequence."""
    s = _record(s, field)
    if s.is_trivial():
        return None
    return InverseForm(s.field, 1 - s.n, reversed(s.terms))


def _run(s, trace=False, field=None):
    run = _Run(field or s.field, list(s.terms), trace=trace)
    run.start_sequence()
    run.run()
    return run


def viable_pair_seq(s, trace=False, field=None) -> ViablePair:
    """Viable pair for the sequence's annihilator ideal; (1, 0) if all terms vanish.

    ``field`` may substitute an equal field (for instance a counting wrapper).
    """
    s = _record(s, field)
    return _run(s, trace, field).pair(1 - s.n)


def lc_profile(s, field=None):
    """Linear complexity of each prefix s_0..s_i."""
    s = _record(s, field)
    return _run(s).profile


def linear_complexity(s, field=None) -> int:
    s = _record(s, field)
    return len(_run(s).f1) - 1


def minimal_polynomial(s, field=None) -> UniPoly:
    s = _record(s, field)
    return dehomogenise(viable_pair_seq(s).f1)


def is_annihilating(psi: UniPoly, s, field=None) -> bool:
    """sum_j psi_j s_(j-i) = 0 for |psi|+1-n <= i <= 0 (vacuous when |psi| >= n)."""
    s = _record(s, field or psi.field)
    if psi.is_zero():
        return True
    f = s.field
    d = psi.degree
    coeffs = psi.ascending()
    for i in range(d + 1 - s.n, 1):
        acc = f.zero
        for j, c in enumerate(coeffs):
            acc = f.add(acc, f.mul(c, s.terms[j - i]))
        if acc:
            return False
    return True


def bm_variant(s, field=None) -> BmPair:
    """Univariate recursion producing a minimal polynomial and its partner."""
    s = _record(s, field)
    f = s.field
    mu, mu_p = UniPoly.one(f), UniPoly.zero(f)
    delta_p = f.one
    d = 1
    for n in range(s.n):
        deg = mu.degree
        asc = mu.ascending()
        delta = f.zero
        for j, c in enumerate(asc):
            delta = f.add(delta, f.mul(c, s.terms[n + j - deg]))
        if delta:
            q = f.div(delta, delta_p)
            if d <= 0:
                mu = mu - mu_p.mul_x(-d).scale(f(q))
            else:
                mu, mu_p = mu.mul_x(d) - mu_p.scale(f(q)), mu
                delta_p = delta
                d = -d
        d += 1
    return BmPair(mu, mu_p)


def dehom_pair(f: ViablePair) -> BmPair:
    return BmPair(dehomogenise(f.f1), dehomogenise(f.f2))


def hom_pair(p, n: int) -> ViablePair:
    """(mu^, mu'^ z^(n+1-|mu|-|mu'|)) for a non-trivial sequence of length n."""
    mu, mu_p = p
    if mu_p.is_zero():
        if mu == UniPoly.one(mu.field):
            return ViablePair(homogenise(mu), Form.zero(mu.field), 1 - n)
        raise UsageError("zero auxiliary polynomial with a non-constant minimal polynomial")
    shift = n + 1 - mu.degree - mu_p.degree
    if shift < 1:
        raise UsageError(f"inconsistent pair for n={n}: z exponent {shift} < 1")
    return ViablePair(homogenise(mu), homogenise(mu_p).mul_z(shift), 1 - n)


def intersect_annihilators(s, t):
    """Generators of the intersection of the two sequences' annihilator ideals."""
    from .groebner import intersect_ideals

    s, t = _record(s), _record(t)
    if s.is_trivial() or t.is_trivial():
        raise UsageError("intersection needs non-trivial sequences")
    if s.field != t.field:
        raise UsageError("sequences over different fields")
    return intersect_ideals(viable_pair_seq(s), viable_pair_seq(t))


def trace_seq(s):
    """Trace rows of the sequence run; row index i is the degree -k of the prefix."""
    return _run(_record(s), trace=True).trace


__all__ = [
    "SequenceRecord", "BmPair", "inverse_form", "viable_pair_seq", "lc_profile",
    "linear_complexity", "minimal_polynomial", "is_annihilating", "bm_variant",
    "dehom_pair", "hom_pair", "intersect_annihilators", "trace_seq",
]

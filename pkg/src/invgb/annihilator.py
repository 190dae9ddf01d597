"""Generators and Groebner bases of the annihilator ideal of an inverse form.

The kernel walks the coefficients of F from the order nu down to the
degree m, keeping a viable pair (f1, f2).  At each step a single
discrepancy decides whether f1 survives, is corrected by a multiple of
f2, or the roles swap and f1 grows in degree.  Optionally it also keeps
the whole form vector (a minimal Groebner basis) and reduces its head to
get the reduced basis.

Kernel polynomials are plain lists indexed by x-power (ascending), so
that multiplying by z is an append.  They become ``Form`` objects only
at the boundary.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import NamedTuple, Optional

from .bipoly import Form, Monomial
from .errors import InvariantError, UsageError
from .field import FieldElement
from .invform import InverseForm, annihilates, discrepancy, subform


@dataclass(frozen=True)
class ViablePair:
    f1: Form
    f2: Form
    source_degree: int
    trace: tuple = dc_field(default=(), compare=False, repr=False)

    @property
    def is_sentinel(self):
        """The (1, 0) answer for an all-zero sequence."""
        return self.f2.is_zero()

    @property
    def d(self):
        return self.f2.degree - self.f1.degree

    def __iter__(self):
        return iter((self.f1, self.f2))

    def __str__(self):
        return f"({self.f1}, {self.f2})"


@dataclass(frozen=True)
class TraceRow:
    i: int
    q: Optional[FieldElement]
    d: int
    B: bool
    pair_snapshot: tuple
    subform: Optional[InverseForm] = None
    form_vector: Optional[tuple] = None
    degree_vector: Optional[tuple] = None

    def csv_fields(self, index=None):
        f1, f2 = self.pair_snapshot
        return [str(self.i if index is None else index),
                "-" if self.q is None else str(self.q),
                str(self.d), str(int(self.B)), str(f1), str(f2)]


class EssentialTriple(NamedTuple):
    m_prime: int
    f1_prime: Form
    delta_prime: FieldElement


@dataclass(frozen=True)
class AnnihilatorResult:
    pair: ViablePair
    form_vector: tuple
    degree_vector: tuple
    lambda_: int
    big_lambda: int
    profile: tuple
    source: InverseForm
    triple: Optional[EssentialTriple] = None
    trace: tuple = dc_field(default=(), repr=False)

    @property
    def dimension(self):
        return self.big_lambda

    def to_json(self):
        return {
            "f1": str(self.pair.f1),
            "f2": str(self.pair.f2),
            "form_vector": [str(g) for g in self.form_vector],
            "degree_vector": list(self.degree_vector),
            "lambda": self.lambda_,
            "dimension": self.big_lambda,
        }

    def dumps(self):
        return json.dumps(self.to_json())


def trace_csv(rows, index=None):
    """CSV text with header ``i,q,d,B,f1,f2``; ``index`` maps rows to labels."""
    import csv
    import io

    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["i", "q", "d", "B", "f1", "f2"])
    for row in rows:
        w.writerow(row.csv_fields(None if index is None else index(row)))
    return buf.getvalue()


def _to_form(field, asc):
    if asc is None:
        return Form.zero(field)
    return Form(field, reversed(asc))


class _Run:
    """Mutable solver state for one pass over a coefficient sequence.

    ``seq[k]`` is the coefficient entering at step k, i.e. F_(-k).
    """

    def __init__(self, field, seq, accumulate=False, reduce=False, trace=False,
                 subforms=None):
        self.field = field
        self.seq = seq
        self.accumulate = accumulate or reduce
        self.reduce = reduce
        self.trace = [] if trace else None
        self.subforms = subforms
        self.profile = []

    def start_sequence(self):
        f = self.field
        self.f1 = [f.one]
        self.f2 = None
        self.lead2 = 0
        self.delta2 = f.one
        self.d = 1
        self.k = 0

    def start_basis(self, nu):
        """The pair (x^(1-nu), z) at degree nu; F_nu plays the role of delta2."""
        f = self.field
        self.f1 = [f.zero] * (1 - nu) + [f.one]
        self.f2 = [f.one, f.zero]
        self.lead2 = 0
        self.delta2 = self.seq[-nu]
        self.d = nu
        self.k = 1 - nu
        self.tail = []
        self.nvec = [nu, nu + 1]
        self.profile.append(1 - nu)
        if self.trace is not None:
            self._snapshot(nu, None)

    def _snapshot(self, i, q):
        f = self.field
        fv = nv = None
        if self.accumulate:
            fv = tuple(_to_form(f, a) for a in [self.f1, self.f2] + self.tail)
            nv = tuple(self.nvec)
        sub = self.subforms(i) if self.subforms else None
        self.trace.append(TraceRow(i, None if q is None else f(q), self.d, False,
                                   (_to_form(f, self.f1), _to_form(f, self.f2)), sub, fv, nv))

    def step(self):
        f = self.field
        k = self.k
        s = self.seq
        f1 = self.f1
        e = len(f1) - 1
        # f1 is monic of degree e: its top coefficient multiplies s[k] for free
        if e:
            delta1 = f.add(s[k], f.dot(f1[:e], s[k - e:k]))
        else:
            delta1 = s[k]
        q = f.zero
        lengthen = False
        if delta1:
            q = f.div(delta1, self.delta2)
            d = self.d
            f2 = self.f2
            lead = self.lead2
            if d <= 0:
                # f1 <- f1 - q x^(-d) f2
                f.axpy(f1, -d, q, f2[:lead])
                f1[lead - d] = f.sub(f1[lead - d], q)
            else:
                # (f1, f2) <- (x^d f1 - q f2, f1)
                g1 = [f.zero] * d + f1
                if f2 is not None:
                    f.axpy(g1, 0, q, f2[:lead])
                    g1[lead] = f.sub(g1[lead], q)
                if self.accumulate:
                    self.tail.insert(0, f2)
                self.f1 = g1
                self.f2 = f1
                self.lead2 = e
                self.delta2 = delta1
                self.d = -d
                lengthen = True
        if self.f2 is not None:
            self.f2.append(f.zero)
        self.d += 1
        i = -k
        if self.accumulate:
            for t in self.tail:
                t.append(f.zero)
            if lengthen:
                self.nvec.insert(0, i)
            else:
                self.nvec[0] = i
            if self.reduce and self.d <= 0:
                self._reduce_head()
        self.profile.append(len(self.f1) - 1)
        if self.trace is not None:
            self._snapshot(i, q)
        self.k = k + 1

    def _reduce_head(self):
        """f1 <- remainder of f1 on division by f2."""
        f = self.field
        f1, f2, lead = self.f1, self.f2, self.lead2
        e = len(f1) - 1
        v2 = len(f2) - 1 - lead
        for a in range(e - 1, lead - 1, -1):
            c = f1[a]
            if c and e - a >= v2:
                f.axpy(f1, a - lead, c, f2[:lead])
                f1[a] = f.zero

    def run(self):
        n = len(self.seq)
        while self.k < n:
            self.step()
        if self.trace is not None:
            _mark_lengthening(self.trace)
        return self

    def pair(self, m):
        f = self.field
        return ViablePair(_to_form(f, self.f1), _to_form(f, self.f2), m,
                          tuple(self.trace or ()))

    def forms(self):
        f = self.field
        return [_to_form(f, a) for a in [self.f1, self.f2] + self.tail]


def _mark_lengthening(rows):
    """Set B on each row: would the move out of this row add a generator.

    B holds when d > 0 and the next discrepancy is nonzero; on the last
    row, where there is no next step, only d > 0 is required.
    """
    for r, row in enumerate(rows):
        nxt = rows[r + 1] if r + 1 < len(rows) else None
        b = row.d > 0 and (nxt is None or nxt.q is not None and not nxt.q.is_zero())
        rows[r] = TraceRow(row.i, row.q, row.d, b, row.pair_snapshot, row.subform,
                           row.form_vector, row.degree_vector)


def _run_inverse(F: InverseForm, accumulate=False, reduce=False, trace=False, field=None):
    if not isinstance(F, InverseForm):
        raise UsageError("expected an inverse form")
    run = _Run(field or F.field, F.to_sequence(), accumulate, reduce, trace,
               subforms=(lambda i: subform(F, i)) if trace else None)
    run.start_basis(F.order)
    return run.run()


def ominus(f1: Form, f2: Form, d: int, q) -> Form:
    """x^max(d,0) f1 - q x^(-min(d,0)) f2."""
    q = f1.field.coerce(q)
    if f1.field.is_zero(q):
        raise UsageError("ominus needs q != 0")
    return f1.mul_x(max(d, 0)) - f2.mul_x(-min(d, 0)).scale(q)


def viable_pair(F: InverseForm, trace=False, field=None) -> ViablePair:
    """Generators (f1, f2) of the annihilator ideal of F."""
    run = _run_inverse(F, trace=trace, field=field)
    return run.pair(F.degree)


def lambda_profile(F: InverseForm):
    """lambda of F^(i) for i = m, ..., nu."""
    return list(reversed(_run_inverse(F).profile))


def lambda_(F: InverseForm) -> int:
    return viable_pair(F).f1.degree


def big_lambda(F: InverseForm) -> int:
    return sum(lambda_profile(F))


def dimension(F: InverseForm) -> int:
    """dim_k of R modulo the annihilator ideal."""
    p = viable_pair(F)
    return p.f1.degree * p.f2.degree


def essential_triple(F: InverseForm, profile=None):
    """(m', f1', delta') or None when F is a unit multiple of 1 or geometric."""
    m, nu = F.degree, F.order
    prof = list(profile) if profile is not None else lambda_profile(F)
    lam = dict(zip(range(m, nu + 1), prof))
    lam_m = lam[m]
    lam_0 = lam.get(0, 0)
    if lam_m <= lam_0:
        return None
    m_prime = min(i for i in range(m, 1) if lam.get(i, 0) < lam_m)
    if m_prime <= nu:
        f1p = viable_pair(subform(F, m_prime)).f1
    else:
        f1p = Form(F.field, (F.field.one,))
    delta = discrepancy(f1p, subform(F, m_prime - 1))
    return EssentialTriple(m_prime, f1p, delta)


def _check_result(F, pair, forms, nvec, profile):
    m, nu = F.degree, F.order
    lam = pair.f1.degree
    big = sum(profile)
    if nvec[0] != m or nvec[-1] != nu + 1 or any(a >= b for a, b in zip(nvec, nvec[1:])):
        raise InvariantError(f"degree vector {nvec} is not m < ... < nu+1")
    if len(forms) != len(nvec) or len(forms) > lam + 1:
        raise InvariantError(f"form vector of length {len(forms)} for lambda {lam}")
    by_degree = dict(zip(range(m, nu + 1), reversed(profile)))
    for g, n in zip(forms, nvec):
        expect = Monomial(by_degree.get(n, 0), n - m)
        if g.lm != expect:
            raise InvariantError(f"leading monomial {g.lm} of {g}, expected {expect}")
    if not (big == lam * (2 - m - lam) == pair.f1.degree * pair.f2.degree):
        raise InvariantError(f"dimension mismatch: {big}, lambda {lam}, m {m}")
    if by_degree[m] > by_degree.get(0, 0):
        _check_essential_degrees(nvec, lambda i: by_degree.get(i, 0))


def _check_essential_degrees(nvec, lam):
    """Degree-vector laws of an essential form; ``lam(i)`` is 0 above the order."""
    levels = [lam(n) for n in nvec]
    if levels[-1] != 0 or any(a <= b for a, b in zip(levels, levels[1:])):
        raise InvariantError(f"lambda along {nvec} is {levels}, not strictly falling to 0")
    for n in nvec[1:]:
        before = lam(n - 1)
        if before <= lam(n):
            raise InvariantError(f"lambda does not drop at degree {n}")
        first = min(i for i in range(nvec[0], n + 1) if lam(i) < before)
        if first != n:
            raise InvariantError(f"first drop below lambda {before} is at {first}, not {n}")


def form_vector(F: InverseForm, trace=False) -> AnnihilatorResult:
    """Viable pair plus the accumulated minimal Groebner basis and degree vector."""
    run = _run_inverse(F, accumulate=True, trace=trace)
    pair = run.pair(F.degree)
    forms = run.forms()
    profile = list(reversed(run.profile))
    nvec = tuple(run.nvec)
    _check_result(F, pair, forms, nvec, run.profile)
    return AnnihilatorResult(
        pair=pair,
        form_vector=tuple(forms),
        degree_vector=nvec,
        lambda_=pair.f1.degree,
        big_lambda=sum(profile),
        profile=tuple(profile),
        source=F,
        triple=essential_triple(F, profile),
        trace=tuple(run.trace or ()),
    )


def reduced_gb(F: InverseForm, trace=False):
    """The reduced grlex Groebner basis, reducing the head by f2 whenever d <= 0."""
    run = _run_inverse(F, reduce=True, trace=trace)
    return run.forms()


def syzygy_triple(result: AnnihilatorResult):
    """(s1, s2, s3) with s1 F1 + s2 F2 + s3 F3 = 0 from the S-polynomial of F1, F2."""
    from .groebner import divide, spoly

    forms = result.form_vector
    if len(forms) < 3:
        raise UsageError("syzygy triple needs at least three basis elements")
    g1, g2, g3 = forms[:3]
    field = g1.field
    sp = spoly(g1, g2)
    if sp.is_zero():
        quots = [Form.zero(field), Form.zero(field)]
    else:
        (a2, a3), rem = divide(sp, [g2, g3])
        if rem:
            raise InvariantError(f"S-polynomial leaves remainder {rem}")
        quots = [a2.to_form() if a2 else Form.zero(field), a3.to_form() if a3 else Form.zero(field)]
    l1, l2 = g1.lm, g2.lm
    s1 = Form.monomial(field, 0, l2.zdeg - l1.zdeg)
    p = l1.xdeg - l2.xdeg
    s2 = -(Form.monomial(field, p, 0) + quots[0]) if quots[0] else -Form.monomial(field, p, 0)
    a3 = quots[1]
    if a3 and a3.degree != 0:
        raise InvariantError(f"third syzygy coefficient {a3} is not a scalar")
    s3 = field(field.neg(a3.coeffs[0]) if a3 else field.zero)
    h = s2 + Form.monomial(field, p, 0)
    if h and h.coeffs[0]:
        raise InvariantError(f"{h} is not divisible by z")
    return s1, s2, s3


def is_viable(pair, F: InverseForm) -> bool:
    """Definition check, including equality of ideals through Groebner bases."""
    from .groebner import buchberger, remainder

    f1, f2 = pair
    m = F.degree
    if f1.is_zero() or f2.is_zero():
        return False
    if not (f1.in_phi() and f2.is_monic() and f2.z_valuation() >= 1):
        return False
    if f1.degree + f2.degree != 2 - m:
        return False
    if not (annihilates(f1, F) and annihilates(f2, F)):
        return False
    rgb = reduced_gb(F)
    gb = buchberger([f1, f2])
    return (all(not remainder(g, gb) for g in rgb)
            and all(not remainder(g, rgb) for g in gb))

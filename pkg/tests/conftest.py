from __future__ import annotations

from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from invgb import Form, InverseForm, SequenceRecord
from invgb.field import gf2, gfp, rationals

settings.register_profile("default", max_examples=80, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")

FIELDS = [gf2(), gfp(3), gfp(7), rationals()]
FIELD_IDS = ["gf2", "gf3", "gf7", "q"]

fields = st.sampled_from(FIELDS)


def scalars(field):
    if field == rationals():
        return st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))
    return st.integers(0, field.size - 1)


@st.composite
def forms(draw, field, min_degree=0, max_degree=6):
    d = draw(st.integers(min_degree, max_degree))
    coeffs = draw(st.lists(scalars(field), min_size=d + 1, max_size=d + 1).filter(any))
    return Form(field, [field.coerce(c) for c in coeffs])


@st.composite
def phi_forms(draw, field, min_degree=1, max_degree=6):
    """Monic forms whose leading monomial is a pure x-power."""
    d = draw(st.integers(min_degree, max_degree))
    tail = draw(st.lists(scalars(field), min_size=d, max_size=d))
    return Form(field, [field.one] + [field.coerce(c) for c in tail])


@st.composite
def inverse_forms(draw, field, max_length=10):
    n = draw(st.integers(1, max_length))
    coeffs = draw(st.lists(scalars(field), min_size=n, max_size=n).filter(any))
    return InverseForm(field, 1 - n, [field.coerce(c) for c in coeffs])


@st.composite
def sequences(draw, field, max_length=16, nontrivial=True):
    n = draw(st.integers(1, max_length))
    terms = st.lists(scalars(field), min_size=n, max_size=n)
    if nontrivial:
        terms = terms.filter(any)
    return SequenceRecord(field, tuple(field.coerce(c) for c in draw(terms)))

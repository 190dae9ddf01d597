import json
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invgb import (Form, InverseForm, act, annihilates, augment, discrepancy, form_vector,
                   is_geometric, subform, viable_pair)
from invgb.errors import FieldMismatchError, UsageError
from invgb.field import gf2, gfp, rationals
from invgb.groebner import Poly
from invgb.verify import random_form, random_inverse_form

from conftest import FIELD_IDS, FIELDS, fields, forms, inverse_forms, scalars

K, Q = gf2(), rationals()
WORKED = InverseForm.parse("m=-7; F=0,1,0,1,1,0,0,1", K)


def P(text, field=K):
    return Form.parse(text, field)


def geometric(field, m, r):
    r = field.coerce(r)
    return InverseForm(field, m, [field.power(r, -i) for i in range(m, 1)])


def test_construction_rules():
    with pytest.raises(UsageError):
        InverseForm(K, -2, [0, 0, 0])
    with pytest.raises(UsageError):
        InverseForm(K, 1, [1, 1])
    with pytest.raises(UsageError):
        InverseForm(K, -2, [1])
    assert str(WORKED) == "x^-6*z^-1 + x^-4*z^-3 + x^-3*z^-4 + z^-7"


def test_act_examples():
    rng = random.Random(1)
    for field in FIELDS:
        F = random_inverse_form(field, -3, rng)
        for a in (field.zero, field.one, field.random(rng)):
            assert act(P("z", field), augment(a, F)) == F
    for field, r in ((Q, 2), (gfp(7), 3), (K, 1)):
        assert act(P("x", field) - P("z", field).scale(field(r)), geometric(field, -4, r)) is None
    assert act(P("x^2"), InverseForm.x_power(K, -1)) is None


def test_annihilates_examples():
    F = InverseForm.from_terms(K, -6, {-6: 1, -4: 1, -3: 1, 0: 1})
    assert annihilates(P("x^4 + x^3*z + x^2*z^2"), F)
    rng = random.Random(2)
    for field in FIELDS:
        for m in range(0, -6, -1):
            G = random_inverse_form(field, m, rng)
            assert annihilates(Form.monomial(field, 0, 1 - m), G)
            assert annihilates(Form.monomial(field, 1 - m, 0), G)
    assert annihilates(P("x"), InverseForm.z_power(K, -1))


def test_act_requires_matching_fields_and_nonzero_form():
    with pytest.raises(FieldMismatchError):
        act(P("x", Q), WORKED)
    with pytest.raises(UsageError):
        act(Form.zero(K), WORKED)


def test_augment_examples():
    for field in FIELDS:
        a = field.coerce(3)
        G = augment(a, InverseForm.z_power(field, -2))
        assert G == InverseForm.from_terms(field, -3, {-3: a, 0: 1})
    assert augment(0, InverseForm.x_power(K, -2)) == InverseForm.from_terms(K, -3, {-2: 1})
    assert str(augment(1, InverseForm.x_power(K, -1))) == "x^-2 + x^-1*z^-1"


def test_subform_examples():
    assert str(subform(WORKED, -3)) == "x^-3 + z^-3"
    assert str(subform(WORKED, -5)) == "x^-4*z^-1 + x^-3*z^-2 + z^-5"
    F = InverseForm.from_terms(K, -4, {-4: 1, -2: 1, -1: 1})
    assert subform(F, F.order) == InverseForm.x_power(K, -1)
    with pytest.raises(UsageError):
        subform(F, 0)
    with pytest.raises(UsageError):
        subform(F, -5)


def test_subform_of_augment_is_original():
    rng = random.Random(3)
    for field in FIELDS:
        F = random_inverse_form(field, -4, rng)
        G = augment(field.random(rng), F)
        for i in range(F.degree, F.order + 1):
            assert subform(G, i) == subform(F, i)


def test_discrepancy_examples():
    rng = random.Random(4)
    for field in FIELDS:
        for m in (0, -1, -3):
            a = field.random(rng)
            G = augment(a, InverseForm.x_power(field, m))
            assert discrepancy(Form.monomial(field, 1 - m, 0), G) == field(a)
        for r in (field.coerce(2), field.one):
            F = geometric(field, -3, r)
            a = field.random(rng)
            G = augment(a, F)
            phi = P("x", field) - P("z", field).scale(field(r))
            assert discrepancy(phi, G) == field(a) - field(r) ** 4
    F = InverseForm.from_terms(K, -6, {-6: 1, -4: 1, -3: 1, 0: 1})
    phi = P("x^4 + x^3*z + x^2*z^2")
    for a in (0, 1):
        assert discrepancy(phi, augment(a, F)) == K(1 + a)


def test_discrepancy_predicts_membership():
    rng = random.Random(5)
    for field in FIELDS:
        for _ in range(100):
            F = random_inverse_form(field, -rng.randint(0, 6), rng)
            f1 = viable_pair(F).f1
            G = augment(field.random(rng), F)
            assert annihilates(f1, G) == (not discrepancy(f1, G))


def test_is_geometric_examples():
    assert is_geometric(InverseForm.z_power(K, -3)) == K(0)
    assert is_geometric(geometric(Q, -2, 2)) == Q(2)
    assert is_geometric(InverseForm.from_terms(K, -3, {-3: 1, 0: 1})) is None
    assert is_geometric(InverseForm.unit(K)) is None
    assert is_geometric(InverseForm.x_power(K, -2)) is None


def test_order_examples():
    assert InverseForm.x_power(K, -5).order == -5
    assert WORKED.order == 0
    assert InverseForm.from_terms(K, -4, {-4: 1, -2: 1, -1: 1}).order == -1


def test_text_and_json_round_trip():
    rng = random.Random(6)
    for field in FIELDS:
        for _ in range(30):
            F = random_inverse_form(field, -rng.randint(0, 8), rng)
            assert InverseForm.parse(F.to_text(), field) == F
            blob = json.dumps(F.to_json())
            assert InverseForm.from_json(blob) == F
    assert json.loads(json.dumps(WORKED.to_json())) == {
        "field": "gf2", "degree": -7, "coeffs": ["0", "1", "0", "1", "1", "0", "0", "1"]}
    with pytest.raises(UsageError):
        InverseForm.parse("F=1,0", K)


def test_normalised_keeps_the_annihilator():
    F = InverseForm.parse("m=-2; F=3,1,2", gfp(7))
    N = F.normalised()
    assert N.coefficient(N.order) == 1
    for text in ("x - z", "x^2 + z^2", "z^3", "x^3"):
        phi = P(text, gfp(7))
        assert annihilates(phi, F) == annihilates(phi, N)


def _sample(field, rng):
    return random_form(field, rng.randint(0, 3), rng)


@pytest.mark.parametrize("field", FIELDS, ids=FIELD_IDS)
def test_module_law_and_bilinearity(field):
    rng = random.Random(f"module:{field.spec}")
    for _ in range(500):
        F = random_inverse_form(field, -rng.randint(0, 7), rng)
        phi, psi = _sample(field, rng), _sample(field, rng)
        inner = act(psi, F)
        lhs = act(phi * psi, F)
        rhs = None if inner is None else act(phi, inner)
        assert lhs == rhs
        chi = random_form(field, phi.degree, rng)
        total = phi + chi
        if total:
            a, b, c = act(phi, F), act(chi, F), act(total, F)
            assert _add(a, b, F.field) == c
        G = random_inverse_form(field, F.degree, rng)
        summed = [field.add(x, y) for x, y in zip(F.coeffs, G.coeffs)]
        if any(summed):
            H = InverseForm(field, F.degree, summed)
            assert _add(act(phi, F), act(phi, G), field) == act(phi, H)


def _add(a, b, field):
    """Sum of two act results, None standing for zero."""
    if a is None:
        return b
    if b is None:
        return a
    coeffs = [field.add(x, y) for x, y in zip(a.coeffs, b.coeffs)]
    return InverseForm(field, a.degree, coeffs) if any(coeffs) else None


@given(fields.flatmap(lambda f: st.tuples(inverse_forms(f, 8), scalars(f), forms(f, 0, 5))))
def test_dividing_by_z_law(case):
    F, a, phi = case
    field = F.field
    G = augment(field.coerce(a), F)
    zphi = phi.mul_z()
    assert annihilates(zphi, G) == annihilates(phi, F)


@given(fields.flatmap(lambda f: st.tuples(inverse_forms(f, 8), scalars(f))))
def test_augmentation_shrinks_the_ideal_strictly(case):
    F, a = case
    field = F.field
    G = augment(field.coerce(a), F)
    for g in form_vector(G).form_vector:
        assert annihilates(g, F)
    zpow = Form.monomial(field, 0, 1 - F.degree + F.order)
    assert annihilates(zpow, F)
    assert not annihilates(zpow, G)


@given(fields.flatmap(lambda f: st.tuples(inverse_forms(f, 8), st.randoms(use_true_random=False))))
def test_homogeneous_components_of_members_annihilate(case):
    F, rng = case
    field = F.field
    f1, f2 = viable_pair(F)
    total = Poly.constant(field, field.zero)
    for g in (f1, f2):
        for _ in range(2):
            coeff = random_form(field, rng.randint(0, 2), rng)
            total = total + Poly.from_form(coeff * g)
    for comp in total.homogeneous_components():
        assert annihilates(comp.to_form(), F)


@given(fields.flatmap(lambda f: st.tuples(inverse_forms(f, 8), forms(f, 0, 4), st.data())))
def test_quotient_law_for_subforms(case):
    F, phi, data = case
    m, nu = F.degree, F.order
    if m == nu:
        return
    level = data.draw(st.integers(m + 1, nu))
    assert annihilates(phi, subform(F, level)) == annihilates(phi.mul_z(level - m), F)

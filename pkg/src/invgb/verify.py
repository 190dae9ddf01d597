"""Randomised agreement checks between the fast paths and the oracles."""

from __future__ import annotations

import random

from . import oracle
from .annihilator import dimension, form_vector, lambda_, reduced_gb
from .bipoly import Form
from .field import gf2, gfp, rationals
from .groebner import buchberger, reduce_gb
from .invform import InverseForm, annihilates
from .sequence import (SequenceRecord, bm_variant, dehom_pair, hom_pair, inverse_form,
                       linear_complexity, viable_pair_seq)


def all_fields():
    return [gf2(), gfp(3), gfp(7), rationals()]


def random_inverse_form(field, m, rng):
    while True:
        coeffs = [field.random(rng) for _ in range(1 - m)]
        if any(coeffs):
            return InverseForm(field, m, coeffs)


def random_form(field, d, rng, monic_phi=False):
    while True:
        coeffs = [field.random(rng) for _ in range(d + 1)]
        if monic_phi:
            coeffs[0] = field.one
        if any(coeffs):
            return Form(field, coeffs)


def random_sequence(field, n, rng, nontrivial=True):
    while True:
        terms = tuple(field.random(rng) for _ in range(n))
        if any(terms) or not nontrivial:
            return SequenceRecord(field, terms)


def _check_laurent(rng, cases):
    for _ in range(cases):
        field = rng.choice(all_fields())
        F = random_inverse_form(field, -rng.randint(0, 8), rng)
        phi = random_form(field, rng.randint(0, 9), rng)
        if oracle.laurent_annihilation_check(phi, F) != annihilates(phi, F):
            return f"disagree on {phi} and {F}"
    return None


def _check_lambda(rng, cases):
    for _ in range(cases):
        field = rng.choice([gf2(), gfp(3)])
        m = -rng.randint(0, 9 if field.size == 2 else 6)
        F = random_inverse_form(field, m, rng)
        if oracle.exhaustive_lambda(F) != lambda_(F):
            return f"lambda differs on {F}"
        res = form_vector(F)
        if oracle.standard_monomial_count(res.form_vector, m) != dimension(F):
            return f"standard monomial count differs on {F}"
    return None


def _check_lc(rng, cases):
    for _ in range(cases):
        s = random_sequence(gf2(), rng.randint(1, 12), rng, nontrivial=False)
        if oracle.exhaustive_lc(s) != linear_complexity(s):
            return f"linear complexity differs on {s}"
    return None


def _check_correspondence(rng, cases):
    for _ in range(cases):
        field = rng.choice(all_fields())
        s = random_sequence(field, rng.randint(1, 32), rng)
        f = viable_pair_seq(s)
        bm = bm_variant(s)
        if dehom_pair(f) != bm or hom_pair(bm, s.n) != f:
            return f"correspondence fails on {s}"
    return None


def _check_gb(rng, cases):
    for _ in range(cases):
        field = rng.choice(all_fields())
        s = random_sequence(field, rng.randint(1, 16), rng)
        F = inverse_form(s)
        p = viable_pair_seq(s)
        expect = reduce_gb(buchberger([p.f1, p.f2]))
        if set(map(str, expect)) != set(map(str, reduced_gb(F))):
            return f"reduced bases differ on {s}"
        if not oracle.ideal_equal(list(form_vector(F).form_vector), [p.f1, p.f2]):
            return f"form vector ideal differs on {s}"
    return None


CHECKS = [
    ("laurent product agrees with the windowed action", _check_laurent, 400),
    ("exhaustive lambda and standard monomials agree", _check_lambda, 60),
    ("exhaustive linear complexity agrees", _check_lc, 150),
    ("dehomogenised pair equals the univariate recursion", _check_correspondence, 300),
    ("reduced basis agrees with generic Buchberger", _check_gb, 80),
]


def run_verify(seed=0, scale=1.0):
    """Run every check; returns a list of (name, ok, detail, cases)."""
    results = []
    for idx, (name, check, cases) in enumerate(CHECKS):
        rng = random.Random(f"{seed}:{idx}")
        n = max(1, int(cases * scale))
        detail = check(rng, n)
        results.append((name, detail is None, detail, n))
    return results

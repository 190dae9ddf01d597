"""Annihilator ideals of inverse forms: generators, Groebner bases, sequences."""

from .errors import FieldMismatchError, InvariantError, OracleBudgetError, UsageError
from .field import FieldElement, CountingField, gf2, gfp, parse_field, rationals
from .bipoly import Form, Monomial, UniPoly, dehomogenise, divide_by_phi, grlex_compare, homogenise
from .invform import InverseForm, act, annihilates, augment, discrepancy, is_geometric, subform
from .annihilator import (
    AnnihilatorResult, EssentialTriple, TraceRow, ViablePair, big_lambda, dimension,
    essential_triple, form_vector, is_viable, lambda_, lambda_profile, ominus,
    reduced_gb, syzygy_triple, viable_pair,
)
from .sequence import (
    BmPair, SequenceRecord, bm_variant, dehom_pair, hom_pair, intersect_annihilators,
    inverse_form, is_annihilating, lc_profile, linear_complexity, minimal_polynomial,
    viable_pair_seq,
)

__version__ = "0.1.0"

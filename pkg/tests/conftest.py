"""Shared helpers for the test suite: catalog algebras and random forms."""

import random
from fractions import Fraction

import pytest

from lieform import KForm
from lieform.catalog import gl2r, sl2r, su2, u2


@pytest.fixture
def algebras():
    """The four built-in reductive algebras, parameter-free."""
    return [u2(), gl2r(), su2(), sl2r()]


def random_fraction(rng, span=9):
    num = rng.randint(-span, span)
    den = rng.choice([1, 1, 2, 3])
    return Fraction(num, den)


def random_form(rng, g, degree=None, max_terms=3):
    """Sparse random form with small exact rational coefficients."""
    if degree is None:
        degree = rng.randint(0, g.dim)
    coeffs = {}
    for _ in range(rng.randint(1, max_terms)):
        idx = tuple(sorted(rng.sample(range(g.dim), degree)))
        c = random_fraction(rng)
        coeffs[idx] = coeffs.get(idx, g.zero()) + g._scalar(c)
    return KForm(g, degree, coeffs)


def random_vector(rng, g):
    return [g._scalar(random_fraction(rng, span=4)) for _ in range(g.dim)]


def make_rng(seed):
    return random.Random(seed)

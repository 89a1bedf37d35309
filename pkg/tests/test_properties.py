"""Algebraic laws checked on randomized inputs."""

import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from sullivan.cdga import apply_d, change_of_variable, rename_generators
from sullivan.cohomology import betti
from sullivan.constructors import biquotient_model
from sullivan.dsl import parse_model, render_model
from sullivan.gradedalg import (
    Generator,
    Monomial,
    Polynomial,
    basis_of_degree,
    sort_with_sign,
    substitute,
)
from sullivan.presets import classifying_data
from sullivan.reduction import reduce, replay

from helpers import brute_monomials, random_pure_model, random_reducible_model

EVENS = (Generator("x2", 2), Generator("x4", 4), Generator("y4", 4))
ODDS = (Generator("a3", 3), Generator("b3", 3), Generator("c5", 5))
POOL = tuple(sorted(EVENS + ODDS))

MODEL = biquotient_model(classifying_data("thm34"))

coefficients = st.fractions(
    min_value=Fraction(-4), max_value=Fraction(4), max_denominator=6
).filter(lambda c: c != 0)


@st.composite
def monomials(draw):
    powers = []
    for g in POOL:
        top = 1 if g.odd else 2
        e = draw(st.integers(min_value=0, max_value=top))
        if e:
            powers.append((g, e))
    return Monomial(tuple(powers))


@st.composite
def polynomials(draw):
    terms = draw(st.dictionaries(monomials(), coefficients, max_size=4))
    return Polynomial(terms)


@st.composite
def homogeneous_polynomials(draw):
    degree = draw(st.integers(min_value=2, max_value=12))
    basis = basis_of_degree(POOL, degree)
    if not basis:
        return Polynomial.zero(), degree
    picked = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3, unique=True))
    coeffs = draw(
        st.lists(coefficients, min_size=len(picked), max_size=len(picked))
    )
    return Polynomial(dict(zip(picked, coeffs))), degree


@st.composite
def model_polynomials(draw):
    degree = draw(st.integers(min_value=3, max_value=14))
    basis = basis_of_degree(MODEL.generators, degree)
    if not basis:
        return Polynomial.zero(), degree
    picked = draw(st.lists(st.sampled_from(basis), min_size=1, max_size=3, unique=True))
    coeffs = draw(st.lists(coefficients, min_size=len(picked), max_size=len(picked)))
    return Polynomial(dict(zip(picked, coeffs))), degree


@given(polynomials(), polynomials(), polynomials())
def test_ring_laws(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p + q == q + p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == Polynomial.zero()


@given(homogeneous_polynomials(), homogeneous_polynomials())
def test_graded_commutativity(pd, qd):
    p, i = pd
    q, j = qd
    sign = -1 if (i % 2 and j % 2) else 1
    assert p * q == sign * (q * p)


@given(model_polynomials(), model_polynomials())
def test_leibniz_rule_on_products(pd, qd):
    p, degree = pd
    q, _ = qd
    sign = -1 if degree % 2 else 1
    left = apply_d(MODEL, p * q)
    right = apply_d(MODEL, p) * q + sign * (p * apply_d(MODEL, q))
    assert left == right


@given(model_polynomials())
def test_differential_squares_to_zero(pd):
    p, _ = pd
    assert apply_d(MODEL, apply_d(MODEL, p)).is_zero()


@given(st.permutations(list(POOL)))
def test_sort_with_sign_normalizes_any_word(order):
    word = [(g, 1) for g in order]
    m, sign = sort_with_sign(word)
    assert sign in (-1, 1)
    assert m == Monomial(tuple((g, 1) for g in POOL))
    # sorting a canonical word is the identity
    again, sign2 = sort_with_sign(list(m.powers))
    assert again == m and sign2 == 1


@given(monomials())
def test_monomial_sort_key_orders_by_degree_first(m):
    key = m.sort_key
    assert key[0] == m.degree


@given(polynomials())
def test_substitute_by_self_is_identity(p):
    for g in POOL:
        assert substitute(p, g, Polynomial.gen(g)) == p


@given(st.integers(min_value=0, max_value=14))
def test_basis_enumeration_is_complete_and_duplicate_free(degree):
    fast = basis_of_degree(POOL, degree)
    assert len(set(fast)) == len(fast)
    assert set(fast) == brute_monomials(POOL, degree)


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=25, deadline=None)
def test_random_models_satisfy_d_squared_zero(seed):
    model = random_pure_model(random.Random(seed))
    for g in model.generators:
        assert apply_d(model, model.d(g)).is_zero()


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=15, deadline=None)
def test_random_models_round_trip_through_documents(seed):
    model = random_pure_model(random.Random(seed))
    assert parse_model(render_model(model, name="R")).to_model() == model


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=10, deadline=None)
def test_reduction_preserves_cohomology_and_replays(seed):
    model = random_reducible_model(random.Random(seed))
    out, log = reduce(model, check_degree=9)
    assert betti(out, 9).betti == betti(model, 9).betti
    assert replay(model, log) == out
    again, log2 = reduce(out, check_degree=9)
    assert again == out and log2.steps == []


@given(coefficients)
@settings(max_examples=20, deadline=None)
def test_change_of_variable_is_invertible(c):
    a4 = next(g for g in MODEL.generators if g.name == "a4")
    b4 = next(g for g in MODEL.generators if g.name == "b4")
    t4 = Generator("t4", 4)
    relation = Polynomial.gen(a4) + c * Polynomial.gen(b4)
    changed = change_of_variable(MODEL, a4, t4, relation)
    back = change_of_variable(
        changed, t4, a4, Polynomial.gen(t4) - c * Polynomial.gen(b4)
    )
    assert back == MODEL
    assert betti(changed, 12).betti == betti(MODEL, 12).betti


@given(st.integers(min_value=0, max_value=2 ** 32 - 1))
@settings(max_examples=10, deadline=None)
def test_renaming_preserves_betti(seed):
    model = random_pure_model(random.Random(seed))
    mapping = {
        g: Generator(f"w{i}_{g.degree}", g.degree)
        for i, g in enumerate(model.generators)
    }
    renamed = rename_generators(model, mapping)
    assert betti(renamed, 9).betti == betti(model, 9).betti

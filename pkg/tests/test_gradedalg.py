from fractions import Fraction

import pytest

from sullivan.errors import ParityMismatchError, ResourceLimitError
from sullivan.gradedalg import (
    UNIT,
    Generator,
    Monomial,
    Polynomial,
    basis_of_degree,
    sort_with_sign,
    substitute,
)

from helpers import brute_monomials, random_polynomial

x4 = Generator("x4", 4)
y4 = Generator("y4", 4)
a3 = Generator("a3", 3)
b3 = Generator("b3", 3)
v7 = Generator("v7", 7)


def test_generator_names_are_validated():
    Generator("x4'", 4)
    Generator("_tmp", 2)
    with pytest.raises(ValueError):
        Generator("4x", 4)
    with pytest.raises(ValueError):
        Generator("a-b", 4)
    with pytest.raises(ValueError):
        Generator("", 4)
    with pytest.raises(ValueError):
        Generator("x", 0)


def test_generator_ordering_is_degree_then_name():
    assert a3 < x4
    assert x4 < y4
    assert sorted([v7, y4, b3, a3, x4]) == [a3, b3, x4, y4, v7]


def test_monomial_rejects_bad_shapes():
    with pytest.raises(ValueError):
        Monomial(((a3, 2),))
    with pytest.raises(ValueError):
        Monomial(((x4, 0),))
    with pytest.raises(ValueError):
        Monomial(((y4, 1), (x4, 1)))


def test_monomial_str_forms():
    assert str(UNIT) == "1"
    assert str(Monomial(((x4, 1),))) == "x4"
    assert str(Monomial(((x4, 2), (y4, 1)))) == "x4^2*y4"


def test_sort_with_sign_swapping_odd_generators():
    m, sign = sort_with_sign([(b3, 1), (a3, 1)])
    assert m == Monomial(((a3, 1), (b3, 1)))
    assert sign == -1
    m, sign = sort_with_sign([(a3, 1), (b3, 1)])
    assert sign == 1


def test_sort_with_sign_odd_squares_vanish():
    m, sign = sort_with_sign([(a3, 1), (x4, 1), (a3, 1)])
    assert m is None and sign == 0


def test_sort_with_sign_even_factors_commute_freely():
    m, sign = sort_with_sign([(y4, 1), (a3, 1), (x4, 2)])
    assert sign == 1
    assert m == Monomial(((a3, 1), (x4, 2), (y4, 1)))


def test_odd_generator_squares_to_zero_in_products():
    p = Polynomial.gen(a3)
    assert (p * p).is_zero()
    assert (p ** 2).is_zero()


def test_graded_commutativity_signs():
    pa, pb = Polynomial.gen(a3), Polynomial.gen(b3)
    px = Polynomial.gen(x4)
    assert pa * pb == -(pb * pa)
    assert pa * px == px * pa


def test_polynomial_arithmetic_identities():
    p = Polynomial.gen(x4) + 2 * Polynomial.gen(y4)
    q = Polynomial.gen(x4) - Polynomial.gen(y4)
    assert p - p == Polynomial.zero()
    assert p * Polynomial.scalar(1) == p
    assert p * Polynomial.zero() == Polynomial.zero()
    assert (p + q) * q == p * q + q * q
    assert (p * q) * p == p * (q * p)


def test_polynomial_scalar_division():
    p = 3 * Polynomial.gen(x4)
    assert p / 3 == Polynomial.gen(x4)
    assert p / Fraction(1, 2) == 6 * Polynomial.gen(x4)
    with pytest.raises(ZeroDivisionError):
        p / 0


def test_polynomial_str_is_the_document_form():
    p = -Polynomial.gen(x4) ** 2 + 3 * Polynomial.gen(x4) * Polynomial.gen(y4)
    assert str(p) == "-x4^2 + 3*x4*y4"
    assert str(Polynomial.zero()) == "0"
    assert str(Polynomial.scalar(Fraction(-1, 2))) == "-1/2"
    assert str(Polynomial.gen(x4) - Polynomial.gen(y4)) == "x4 - y4"


def test_degree_and_homogeneity():
    p = Polynomial.gen(x4) * Polynomial.gen(a3)
    assert p.degree() == 7
    assert p.is_homogeneous()
    mixed = Polynomial.gen(x4) + Polynomial.gen(a3)
    assert not mixed.is_homogeneous()
    with pytest.raises(ValueError, match="inhomogeneous"):
        mixed.degree()
    assert Polynomial.zero().is_homogeneous()
    assert Polynomial.zero().degree() is None


@pytest.mark.parametrize("degree", [0, 3, 4, 7, 8, 11, 12, 16])
def test_basis_of_degree_matches_exhaustive_enumeration(degree):
    gens = (a3, b3, x4, y4, v7)
    fast = basis_of_degree(gens, degree)
    assert len(set(fast)) == len(fast)
    assert set(fast) == brute_monomials(gens, degree)


def test_basis_of_degree_is_sorted_deterministically():
    gens = (x4, y4)
    basis = basis_of_degree(gens, 8)
    assert basis == sorted(basis, key=lambda m: m.sort_key)


def test_basis_of_degree_cap():
    gens = tuple(Generator(f"e{i}_2", 2) for i in range(8))
    with pytest.raises(ResourceLimitError):
        basis_of_degree(gens, 16, max_size=10)


def test_substitute_identity_and_linearity(rng):
    gens = (x4, y4)
    p = random_polynomial(rng, gens, 8)
    assert substitute(p, x4, Polynomial.gen(x4)) == p
    shifted = substitute(p, x4, Polynomial.gen(x4) + Polynomial.gen(y4))
    back = substitute(shifted, x4, Polynomial.gen(x4) - Polynomial.gen(y4))
    assert back == p


def test_substitute_checks_parity_before_degree():
    p = Polynomial.gen(x4)
    with pytest.raises(ParityMismatchError):
        substitute(p, x4, Polynomial.gen(a3))


def test_substitute_odd_generator_elimination():
    p = Polynomial.gen(a3) * Polynomial.gen(x4)
    out = substitute(p, a3, Polynomial.gen(b3))
    assert out == Polynomial.gen(b3) * Polynomial.gen(x4)

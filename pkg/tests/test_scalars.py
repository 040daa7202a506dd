from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from mhdouble.errors import UnsupportedParameterError
from mhdouble.scalars import (
    QQ,
    ModInt,
    PrimeField,
    find_root_of_unity,
    find_taft_lambda,
    multiplicative_order,
    parse_field,
    qbinomial,
)
from oracle_taft import gaussian_by_words

F7 = PrimeField(7)
ints = st.integers(min_value=-50, max_value=50)


@given(ints, ints, ints)
def test_prime_field_ring_axioms(a, b, c):
    x, y, z = F7(a), F7(b), F7(c)
    assert (x + y) + z == x + (y + z)
    assert x * (y + z) == x * y + x * z
    assert x - x == F7.zero
    assert x * y == y * x


@given(ints.filter(lambda v: v % 7))
def test_prime_field_inverse(a):
    x = F7(a)
    assert x * x.inverse() == 1
    assert x / x == F7.one
    assert x**-2 * x**2 == 1


def test_modint_rejects_mixed_fields():
    with pytest.raises(ValueError):
        ModInt(1, 5) + ModInt(1, 7)
    with pytest.raises(ZeroDivisionError):
        F7(0).inverse()


def test_fraction_coerces_into_prime_field():
    assert F7(Fraction(1, 2)) * 2 == 1


def test_prime_field_needs_prime():
    with pytest.raises(UnsupportedParameterError):
        PrimeField(9)


def test_parse_field():
    assert parse_field("rational") is QQ
    assert parse_field("fq:7") == F7
    with pytest.raises(UnsupportedParameterError):
        parse_field("reals")
    with pytest.raises(UnsupportedParameterError):
        parse_field("fq:x")


def test_roots_of_unity():
    assert find_root_of_unity(1, QQ) == 1
    assert find_root_of_unity(2, QQ) == -1
    assert find_root_of_unity(4, PrimeField(5)) == 2
    with pytest.raises(UnsupportedParameterError, match="no element of order 3"):
        find_root_of_unity(3, QQ)
    with pytest.raises(UnsupportedParameterError, match="m \\| q-1"):
        find_root_of_unity(4, F7)


def test_multiplicative_order():
    assert multiplicative_order(2, F7) == 3
    assert multiplicative_order(3, F7) == 6
    assert multiplicative_order(-1, QQ) == 2
    assert multiplicative_order(2, QQ) is None


def test_taft_lambda_selection():
    assert find_taft_lambda(2, 1, QQ) == -1
    lam = find_taft_lambda(3, 1, F7)
    assert multiplicative_order(lam, F7) == 3
    lam2 = find_taft_lambda(3, 2, F7)
    assert multiplicative_order(lam2**2, F7) == 3
    with pytest.raises(UnsupportedParameterError):
        find_taft_lambda(3, 1, QQ)


@pytest.mark.parametrize("n,k,q,want", [(5, 0, 3, 1), (2, 1, -1, 0), (3, 1, 2, 7)])
def test_qbinomial_values(n, k, q, want):
    assert qbinomial(n, k, QQ(q)) == want


@given(st.integers(0, 7), st.integers(0, 7), st.integers(-3, 3).filter(bool))
def test_qbinomial_matches_word_count_and_symmetry(n, k, q):
    q = QQ(q)
    if k > n:
        assert qbinomial(n, k, q) == 0
        return
    assert qbinomial(n, k, q) == gaussian_by_words(n, k, q)
    assert qbinomial(n, k, q) == qbinomial(n, n - k, q)


@given(st.integers(0, 6), st.integers(0, 6), st.integers(1, 6))
def test_qbinomial_in_prime_field(n, k, q):
    if k <= n:
        assert qbinomial(n, k, F7(q)) == gaussian_by_words(n, k, F7(q))


def test_qbinomial_rejects_zero_parameter():
    with pytest.raises(ValueError):
        qbinomial(2, 1, QQ(0))

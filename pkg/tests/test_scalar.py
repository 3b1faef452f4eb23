from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rearep.scalar import (
    ONE,
    ZERO,
    GenericityError,
    LaurentRational,
    PoleError,
    lam,
    parse_scalar,
    q,
    q_int,
    qpow,
    specialize,
)

from conftest import laurent_polys, nonzero_scalars, scalars


@given(scalars, scalars, scalars)
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a and a * b == b * a


@given(nonzero_scalars)
def test_inverse_round_trip(a):
    assert a * (ONE / a) == ONE
    assert a / a == ONE


@given(scalars)
def test_canonical_form_is_idempotent(a):
    again = LaurentRational.canon(a.shift, a.num, a.den)
    assert (again.shift, again.num, again.den) == (a.shift, a.num, a.den)
    if a:
        assert a.num[0] != 0 and a.den[0] > 0


@given(scalars)
def test_print_parse_round_trip(a):
    assert parse_scalar(str(a)) == a
    assert str(parse_scalar(str(a))) == str(a)


@given(laurent_polys, st.fractions(min_value=2, max_value=7, max_denominator=5))
def test_specialization_is_a_homomorphism(a, q0):
    b = a * a + q
    assert specialize(b, q0) == specialize(a, q0) ** 2 + q0


def test_printed_format():
    assert str(LaurentRational.laurent({3: 2, 0: -1, -2: 1})) == "2*q^3 - 1 + q^-2"
    assert parse_scalar("2*q^3 - 1 + q^-2") == 2 * qpow(3) - 1 + qpow(-2)
    assert str(ZERO) == "0"


def test_q_int_values():
    assert q_int(1) == ONE
    assert q_int(2) == q + q.inverse()
    assert q_int(3) * lam == qpow(3) - qpow(-3)


@pytest.mark.parametrize("k", range(1, 21))
def test_q_int_classical_limit(k):
    assert specialize(q_int(k), 1, classical_limit=True) == k
    assert q_int(k) != ZERO


def test_specialize_examples():
    assert specialize(q_int(2), 2) == Fraction(5, 2)
    assert specialize(lam, 1, classical_limit=True) == 0


def test_specialize_errors():
    with pytest.raises(PoleError):
        specialize(ONE / lam, 1, classical_limit=True)
    with pytest.raises(GenericityError):
        specialize(q, 1)
    with pytest.raises(GenericityError):
        specialize(q, -1)
    with pytest.raises(GenericityError):
        specialize(q, 0)
    with pytest.raises(PoleError):
        specialize(ONE / (q - 2), 2)


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO

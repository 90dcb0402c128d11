from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, settings, strategies as st

from taftgwa.parsing import parse_scalar
from taftgwa.scalars import (ScalarError, cyclotomic_modulus, euler_phi, field, format_scalar,
                             lcm, root_order)

from grid import nonzero_scalars, scalars

FIELDS = [field(N) for N in (2, 4, 6, 12)]


def _polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def test_cyclotomic_modulus_examples():
    # coefficient sequences, constant term first
    assert list(cyclotomic_modulus(1)) == [-1, 1]
    assert list(cyclotomic_modulus(6)) == [1, -1, 1]
    assert list(cyclotomic_modulus(12)) == [1, 0, -1, 0, 1]


@pytest.mark.parametrize("N", [1, 2, 3, 4, 6, 8, 9, 12, 15, 30])
def test_product_of_cyclotomics_is_x_n_minus_one(N):
    prod = [Fraction(1)]
    for d in range(1, N + 1):
        if N % d == 0:
            prod = _polymul(prod, [Fraction(c) for c in cyclotomic_modulus(d)])
    assert prod == [-1] + [0] * (N - 1) + [1]
    assert len(cyclotomic_modulus(N)) == euler_phi(N) + 1


@pytest.mark.parametrize("N", [2, 3, 6, 12, 30])
def test_modulus_vanishes_at_zeta(N):
    F = field(N)
    z = F.zeta(1)
    total = F.zero
    for i, c in enumerate(cyclotomic_modulus(N)):
        total = total + z**i * F.from_rational(c)
    assert total.is_zero()


def test_field_examples():
    F = field(6)
    z3 = F.root_of_unity(3)
    assert (1 - z3) * (1 - z3**2) == 3
    assert (1 - z3).inverse() == (1 - z3**2) / 3
    for j in range(6):
        assert F.zeta(j).inverse() == F.zeta(6 - j)


def test_division_by_zero():
    F = field(4)
    with pytest.raises(ZeroDivisionError):
        F.zero.inverse()
    with pytest.raises(ZeroDivisionError):
        F.one / F.zero


def test_missing_root_of_unity():
    with pytest.raises(ScalarError):
        field(4).root_of_unity(3)


def test_root_order_examples():
    F = field(12)
    assert root_order(F.zeta(8)) == 3
    assert root_order(F.one) == 1
    assert root_order(F.from_rational(-1)) == 2
    assert root_order(F.from_rational(2)) is None
    assert root_order(F.zero) is None
    assert root_order(1 + F.zeta(1)) is None


@pytest.mark.parametrize("N", [2, 4, 6, 12, 10])
def test_root_order_of_powers(N):
    F = field(N)
    for j in range(N + 1):
        assert F.zeta(j).root_order() == N // gcd(N, j)


def test_roots_of_unity_odd_modulus():
    # -zeta_3 has order 6 even though it lives in Q(zeta_3)
    F = field(3)
    assert (-F.zeta(1)).root_order() == 6


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"N{F.N}")
def test_field_axioms(F):
    @settings(max_examples=60, deadline=None)
    @given(scalars(F), scalars(F), scalars(F))
    def check(a, b, c):
        assert a + b == b + a
        assert a * b == b * a
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == F.zero
        assert a * F.one == a
    check()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"N{F.N}")
def test_division_roundtrip(F):
    @settings(max_examples=60, deadline=None)
    @given(scalars(F), nonzero_scalars(F))
    def check(a, b):
        assert (a * b) * b.inverse() == a
        assert (a / b) * b == a
    check()


@pytest.mark.parametrize("F", FIELDS, ids=lambda F: f"N{F.N}")
def test_literal_roundtrip(F):
    @settings(max_examples=60, deadline=None)
    @given(scalars(F, bound=7), st.integers(1, 5))
    def check(a, den):
        a = a / den
        assert parse_scalar(format_scalar(a), F) == a
    check()


def test_lcm():
    assert lcm(2, 3, 4) == 12
    assert lcm() == 1

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from floorzeta.errors import InvalidArgument
from floorzeta.exact_arith import (
    ExponentA,
    ceil_pow,
    floor_pow,
    int_root_ceil,
    int_root_floor,
    is_perfect_power,
    parse_fraction,
    rational_root_ceil,
    rational_root_floor,
)


@pytest.mark.parametrize("x,k,want", [(10, 2, 3), (16, 4, 2), (10 ** 18, 3, 10 ** 6), (0, 3, 0), (1, 7, 1)])
def test_int_root_floor_examples(x, k, want):
    assert int_root_floor(x, k) == want


@pytest.mark.parametrize("x,k,want", [(10, 2, 4), (16, 2, 4), (0, 5, 0)])
def test_int_root_ceil_examples(x, k, want):
    assert int_root_ceil(x, k) == want


def test_int_root_exhaustive_small():
    for k in range(1, 7):
        for x in range(10 ** 4 + 1):
            r = int_root_floor(x, k)
            assert r ** k <= x < (r + 1) ** k
            c = int_root_ceil(x, k)
            assert (c - 1) ** k < x <= c ** k or x == c == 0


@settings(max_examples=300, deadline=None)
@given(st.integers(min_value=0, max_value=2 ** 4000), st.integers(min_value=1, max_value=40))
def test_int_root_floor_big(x, k):
    r = int_root_floor(x, k)
    assert r ** k <= x < (r + 1) ** k


@settings(max_examples=200, deadline=None)
@given(st.integers(min_value=1, max_value=2 ** 300), st.integers(min_value=2, max_value=12))
def test_perfect_powers_near_boundary(r, k):
    x = r ** k
    assert int_root_floor(x, k) == r
    assert int_root_floor(x - 1, k) == r - 1
    assert int_root_ceil(x + 1, k) == r + 1
    assert is_perfect_power(x, k)


def test_root_rejects_bad_index():
    with pytest.raises(InvalidArgument):
        int_root_floor(10, 0)
    with pytest.raises(InvalidArgument):
        int_root_ceil(10, 0)
    with pytest.raises(InvalidArgument):
        int_root_floor(-1, 2)


@pytest.mark.parametrize("num,den,k,want", [(9, 2, 2, 2), (8, 1, 3, 2), (25, 2, 2, 3)])
def test_rational_root_floor_examples(num, den, k, want):
    assert rational_root_floor(num, den, k) == want


@settings(max_examples=300, deadline=None)
@given(st.integers(0, 10 ** 30), st.integers(1, 10 ** 12), st.integers(1, 6))
def test_rational_roots_definition(num, den, k):
    r = rational_root_floor(num, den, k)
    assert r ** k * den <= num < (r + 1) ** k * den
    c = rational_root_ceil(num, den, k)
    assert c ** k * den >= num
    assert c == 0 or (c - 1) ** k * den < num


@pytest.mark.parametrize("i,a,want", [(10, "1/2", 3), (5, "2/3", 2), (8, "1/3", 2)])
def test_floor_pow_examples(i, a, want):
    assert floor_pow(i, ExponentA.of(a)) == want


@pytest.mark.parametrize("i,a,want", [(10, "1/2", 4), (4, "1/2", 2), (5, "2/3", 3)])
def test_ceil_pow_examples(i, a, want):
    assert ceil_pow(i, ExponentA.of(a)) == want


def test_floor_ceil_gap_and_monotone(exponent):
    prev = 0
    for i in range(1, 3000):
        f, c = floor_pow(i, exponent), ceil_pow(i, exponent)
        assert c - f in (0, 1)
        assert (c == f) == is_perfect_power(i ** exponent.u, exponent.v)
        assert f >= prev
        prev = f


def test_unit_exponent_is_identity():
    one = ExponentA(1, 1)
    for i in range(1, 500):
        assert floor_pow(i, one) == i == ceil_pow(i, one)


def test_exponent_validation():
    assert ExponentA.of("2/4") == ExponentA(1, 2)
    assert ExponentA.of(0.5) == ExponentA(1, 2)
    assert str(ExponentA.of(Fraction(3, 4))) == "3/4"
    for bad in ("3/2", "0", "-1/2"):
        with pytest.raises(InvalidArgument):
            ExponentA.of(bad)
    with pytest.raises(InvalidArgument):
        ExponentA(2, 4)


def test_parse_fraction():
    assert parse_fraction("2/3") == Fraction(2, 3)
    assert parse_fraction(0.3) == Fraction(3, 10)
    with pytest.raises(InvalidArgument):
        parse_fraction("x")
    with pytest.raises(InvalidArgument):
        parse_fraction(float("nan"))

import math

import pytest
from hypothesis import given, settings, strategies as st

from floorzeta import floor_sums as fs
from floorzeta.errors import BudgetExceeded, InvalidArgument
from floorzeta.exact_arith import ExponentA, floor_pow


def prefix_brute(n_max, a, p, flavor):
    a = ExponentA.of(a)
    out = [0]
    for i in range(1, n_max + 1):
        v = floor_pow(i, a) if flavor == "floor" else -floor_pow_neg(i, a)
        out.append(out[-1] + v ** p)
    return out


def floor_pow_neg(i, a):
    # -ceil(x) = floor(-x); kept separate so the oracle does not call ceil_pow
    f = floor_pow(i, a)
    return -(f if f ** a.v == i ** a.u else f + 1)


def test_examples():
    assert fs.sum_floor(10, "1/2") == 19
    assert fs.sum_ceil(10, "1/2") == 26
    assert fs.sum_floor(1, "2/3") == 1
    assert fs.sum_ceil(1, "1/5") == 1
    assert fs.gen_faulhaber_floor(10, "1/2", 2) == 41
    assert fs.gen_faulhaber_ceil(10, "1/2", 2) == 74
    assert fs.brute_sum(10, "1/2", 2, "floor") == 41


def test_two_thirds_example_by_enumeration():
    # floor(i^(2/3)) for i = 1..10 is 1,1,2,2,2,3,3,4,4,4
    assert [floor_pow(i, ExponentA(2, 3)) for i in range(1, 11)] == [1, 1, 2, 2, 2, 3, 3, 4, 4, 4]
    assert fs.sum_floor(10, "2/3") == 26


def test_closed_forms_small():
    assert fs.sum_floor_closed(10, 2) == 19
    assert fs.sum_ceil_closed(10, 2) == 26
    assert fs.sum_ceil_closed(100, 3) == fs.sum_ceil(100, "1/3")
    assert fs.gen_faulhaber_floor_closed(10, 2, 2) == 41
    assert fs.gen_faulhaber_floor_closed(10, 2, 1) == 19
    assert fs.gen_faulhaber_ceil_closed(10, 2, 2) == 74
    assert fs.gen_faulhaber_ceil_closed(10, 2, 1) == 26
    assert fs.gen_faulhaber_floor_closed(500, 3, 4) == fs.gen_faulhaber_floor(500, "1/3", 4)
    assert fs.gen_faulhaber_ceil_closed(300, 3, 3) == fs.gen_faulhaber_ceil(300, "1/3", 3)


@pytest.mark.parametrize("p", [1, 2, 3, 4])
def test_oracle_equivalence(exponent, p):
    n_max = 600
    fl = prefix_brute(n_max, exponent, p, "floor")
    ce = prefix_brute(n_max, exponent, p, "ceiling")
    for n in range(1, n_max + 1):
        assert fs.gen_faulhaber_floor(n, exponent, p) == fl[n]
        assert fs.gen_faulhaber_ceil(n, exponent, p) == ce[n]
        if p == 1:
            assert fs.sum_floor(n, exponent) == fl[n]
            assert fs.sum_ceil(n, exponent) == ce[n]
        if exponent.is_unit_fraction:
            q = exponent.v
            assert fs.gen_faulhaber_floor_closed(n, q, p) == fl[n]
            assert fs.gen_faulhaber_ceil_closed(n, q, p) == ce[n]


def test_gauss_and_faulhaber_reductions():
    from floorzeta.bernoulli import faulhaber_sum
    for n in range(1, 200):
        assert fs.sum_floor(n, 1) == n * (n + 1) // 2 == fs.sum_ceil(n, 1)
        assert fs.sum_floor_closed(n, 1) == n * (n + 1) // 2
        for p in (1, 2, 3):
            assert fs.gen_faulhaber_floor(n, 1, p) == faulhaber_sum(n, p)
            assert fs.gen_faulhaber_ceil(n, 1, p) == faulhaber_sum(n, p)


def test_sqrt_polynomials():
    for n in range(1, 10 ** 4 + 1, 7):
        assert fs.sqrt_floor_poly(n) == fs.sum_floor_closed(n, 2)
        assert fs.sqrt_ceil_poly(n) == fs.sum_ceil_closed(n, 2)
    assert fs.sqrt_floor_poly(10) == 19
    assert fs.sqrt_ceil_poly(10) == 26


@pytest.mark.parametrize("n", [10 ** 9, 10 ** 12, 10 ** 40 + 12345])
def test_large_n_cross_method(n):
    assert fs.sum_floor_closed(n, 2) == fs.sqrt_floor_poly(n)
    assert fs.sum_ceil_closed(n, 2) == fs.sqrt_ceil_poly(n)


def test_difference_identity():
    assert fs.diff_identity(10, "1/2") == (3, 3)
    for n in range(1, 200):
        lhs, rhs = fs.diff_identity(n, 1)
        assert lhs == rhs == n
    lhs, rhs = fs.diff_identity(20, "1/3")
    assert lhs == rhs
    for q in range(1, 6):
        for n in range(1, 2001, 13):
            lhs, rhs = fs.diff_identity_unit(n, q)
            assert lhs == rhs


@settings(max_examples=60, deadline=None)
@given(st.integers(1, 3000), st.integers(1, 9), st.integers(1, 9))
def test_formula_matches_brute_random(n, u, v):
    if u > v or math.gcd(u, v) != 1:
        return
    a = ExponentA(u, v)
    assert fs.sum_floor(n, a) == fs.brute_sum(n, a, 1, "floor")
    assert fs.sum_ceil(n, a) == fs.brute_sum(n, a, 1, "ceiling")


def test_work_counter_bound(exponent):
    for n in (10, 1000, 54321):
        res = fs.evaluate(fs.SumSpec(n, exponent, 1, "floor"), "formula")
        assert res.work <= floor_pow(n, exponent) + 2


def test_methods_agree_via_evaluate():
    spec = fs.SumSpec(777, ExponentA(1, 3), 3, "ceiling")
    vals = {m: fs.evaluate(spec, m).value for m in ("formula", "closed-form", "brute-force")}
    assert len(set(vals.values())) == 1
    with pytest.raises(InvalidArgument):
        fs.evaluate(fs.SumSpec(10, ExponentA(2, 3)), "closed-form")


def test_brute_cap_and_validation():
    with pytest.raises(BudgetExceeded):
        fs.brute_sum(100, "1/2", cap=10)
    with pytest.raises(InvalidArgument):
        fs.sum_floor(0, "1/2")
    with pytest.raises(InvalidArgument):
        fs.sum_floor(10, "3/2")
    with pytest.raises(InvalidArgument):
        fs.normalize_flavor("round")

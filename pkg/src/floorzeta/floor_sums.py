"""Exact partial sums of floor/ceiling powers.

Every sum here has (at least) two independent evaluators: a formula that
loops only over the ``floor(n**a)`` distinct values, and the literal
term-by-term sum in :func:`brute_sum`.  Where ``a = 1/q`` a third, Bernoulli
closed form needs one root extraction and ``O(q)`` polynomial evaluations.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Literal, Tuple, Union

from .bernoulli import faulhaber_sum, power_sum_poly_diff
from .errors import BudgetExceeded, InternalInconsistency, InvalidArgument
from .exact_arith import (
    ExponentA,
    RationalLike,
    ceil_pow,
    ceil_pow_inv,
    floor_pow,
    floor_pow_inv,
    int_root_ceil,
    int_root_floor,
)

__all__ = [
    "BRUTE_FORCE_CAP",
    "ExactSumResult",
    "SumSpec",
    "brute_sum",
    "diff_identity",
    "diff_identity_unit",
    "evaluate",
    "gen_faulhaber_ceil",
    "gen_faulhaber_ceil_closed",
    "gen_faulhaber_floor",
    "gen_faulhaber_floor_closed",
    "sqrt_ceil_poly",
    "sqrt_floor_poly",
    "sum_ceil",
    "sum_ceil_closed",
    "sum_floor",
    "sum_floor_closed",
]

Flavor = Literal["floor", "ceiling"]
ExponentLike = Union[ExponentA, RationalLike]

BRUTE_FORCE_CAP = 10 ** 7


def normalize_flavor(flavor: str) -> str:
    f = flavor.strip().lower()
    if f in ("floor", "f"):
        return "floor"
    if f in ("ceiling", "ceil", "c"):
        return "ceiling"
    raise InvalidArgument(f"unknown flavor {flavor!r}; expected floor or ceiling")


@dataclass(frozen=True)
class SumSpec:
    n: int
    a: ExponentA
    p: int = 1
    flavor: str = "floor"

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", ExponentA.of(self.a))
        object.__setattr__(self, "flavor", normalize_flavor(self.flavor))
        _check_n(self.n)
        _check_p(self.p)


@dataclass(frozen=True)
class ExactSumResult:
    value: int
    method: str
    work: int


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidArgument(f"n must be a positive integer, got {n!r}")


def _check_p(p: int) -> None:
    if not isinstance(p, int) or p < 1:
        raise InvalidArgument(f"p must be a positive integer, got {p!r}")


def _check_q(q: int) -> None:
    if not isinstance(q, int) or q < 1:
        raise InvalidArgument(f"q must be a positive integer, got {q!r}")


# -- Formulas 1 and 2 -------------------------------------------------------

def _formula_floor(n: int, a: ExponentA, p: int = 1) -> Tuple[int, int]:
    """Sum of floor(i**a)**p for i <= n, looping over t <= floor(n**a).

    ceil((t+1)**(1/a)) - ceil(t**(1/a)) is how many i have floor(i**a) == t;
    the last value F = floor(n**a) is only partially covered.
    """
    F = floor_pow(n, a)
    work = 2
    total = 0
    prev = ceil_pow_inv(1, a)
    for t in range(1, F + 1):
        nxt = ceil_pow_inv(t + 1, a)
        work += 1
        total += t ** p * (nxt - prev)
        prev = nxt
    # prev is now ceil((F+1)**(1/a)) > n
    total += F ** p * (n - prev + 1)
    return total, work


def _formula_ceil(n: int, a: ExponentA, p: int = 1) -> Tuple[int, int]:
    C = ceil_pow(n, a)
    work = 1
    total = 0
    prev = 0  # floor(0 ** (1/a))
    for t in range(1, C + 1):
        cur = floor_pow_inv(t, a)
        work += 1
        total += t ** p * (cur - prev)
        prev = cur
    # prev is now floor(C**(1/a)) >= n
    total -= (prev - n) * C ** p
    return total, work


def sum_floor(n: int, a: ExponentLike) -> int:
    """``sum_{i<=n} floor(i**a)`` as ``(n+1)F - sum_{t<=F} ceil(t**(1/a))``, ``F = floor(n**a)``.

    Needs ``F + 1`` root extractions rather than ``n``.
    """
    return _sum_floor_counted(n, ExponentA.of(a))[0]


def _sum_floor_counted(n: int, a: ExponentA) -> Tuple[int, int]:
    _check_n(n)
    F = floor_pow(n, a)
    acc = 0
    for t in range(1, F + 1):
        acc += ceil_pow_inv(t, a)
    return (n + 1) * F - acc, F + 1


def sum_ceil(n: int, a: ExponentLike) -> int:
    """``sum_{i<=n} ceil(i**a)`` as ``nC + floor(C**(1/a)) - sum_{t<=C} floor(t**(1/a))``."""
    return _sum_ceil_counted(n, ExponentA.of(a))[0]


def _sum_ceil_counted(n: int, a: ExponentA) -> Tuple[int, int]:
    _check_n(n)
    C = ceil_pow(n, a)
    acc = 0
    for t in range(1, C + 1):
        acc += floor_pow_inv(t, a)
    return n * C + floor_pow_inv(C, a) - acc, C + 2


# -- Bernoulli closed forms for a = 1/q -------------------------------------

def _power_sum(m: int, q: int) -> Fraction:
    """1^q + ... + m^q as an exact Fraction (integrality checked by callers)."""
    return power_sum_poly_diff(q, m)


def _as_int(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise InternalInconsistency(f"{what} evaluated to non-integer {value}")
    return value.numerator


def sum_floor_closed(n: int, q: int) -> int:
    """``sum_{i<=n} floor(i**(1/q))`` with a single root extraction."""
    _check_n(n)
    _check_q(q)
    if q == 1:
        return faulhaber_sum(n, 1)
    F = int_root_floor(n, q)
    return _as_int((n + 1) * F - _power_sum(F, q), "floor closed form")


def sum_ceil_closed(n: int, q: int) -> int:
    """``sum_{i<=n} ceil(i**(1/q))`` with a single root extraction."""
    _check_n(n)
    _check_q(q)
    if q == 1:
        return faulhaber_sum(n, 1)
    C = int_root_ceil(n, q)
    return _as_int(n * C + C ** q - _power_sum(C, q), "ceiling closed form")


def sqrt_floor_poly(n: int) -> int:
    """``(6nF - 2F^3 - 3F^2 + 5F) / 6`` with ``F = isqrt(n)``; the a = 1/2 floor sum."""
    _check_n(n)
    F = int_root_floor(n, 2)
    num = 6 * n * F - 2 * F ** 3 - 3 * F ** 2 + 5 * F
    q, r = divmod(num, 6)
    if r:
        raise InternalInconsistency(f"sqrt floor polynomial not integral at n={n}")
    return q


def sqrt_ceil_poly(n: int) -> int:
    """``(6nC - 2C^3 + 3C^2 - C) / 6`` with ``C = ceil(sqrt(n))``."""
    _check_n(n)
    C = int_root_ceil(n, 2)
    num = 6 * n * C - 2 * C ** 3 + 3 * C ** 2 - C
    q, r = divmod(num, 6)
    if r:
        raise InternalInconsistency(f"sqrt ceiling polynomial not integral at n={n}")
    return q


# -- difference of the two formulas -----------------------------------------

def diff_identity(n: int, a: ExponentLike) -> Tuple[int, int]:
    """Both sides of

        sum_{i<=n} (1 - (ceil(i^a) - floor(i^a)))
            = sum_{t<=floor(n^a)} (1 - (ceil(t^(1/a)) - floor(t^(1/a)))),

    each computed term by term. Both count exact powers.
    """
    _check_n(n)
    a = ExponentA.of(a)
    lhs = sum(1 - (ceil_pow(i, a) - floor_pow(i, a)) for i in range(1, n + 1))
    F = floor_pow(n, a)
    rhs = sum(1 - (ceil_pow_inv(t, a) - floor_pow_inv(t, a)) for t in range(1, F + 1))
    return lhs, rhs


def diff_identity_unit(n: int, q: int) -> Tuple[int, int]:
    """``sum_{i<=n} (ceil(i^(1/q)) - floor(i^(1/q)))`` against ``n - floor(n^(1/q))``."""
    _check_n(n)
    _check_q(q)
    lhs = 0
    for i in range(1, n + 1):
        r = int_root_floor(i, q)
        lhs += 0 if r ** q == i else 1
    return lhs, n - int_root_floor(n, q)


# -- generalized Faulhaber sums ---------------------------------------------

def gen_faulhaber_floor(n: int, a: ExponentLike, p: int) -> int:
    """``sum_{i<=n} floor(i**a)**p``, looping over the distinct floor values."""
    _check_n(n)
    _check_p(p)
    return _formula_floor(n, ExponentA.of(a), p)[0]


def gen_faulhaber_ceil(n: int, a: ExponentLike, p: int) -> int:
    """``sum_{i<=n} ceil(i**a)**p``, looping over the distinct ceiling values."""
    _check_n(n)
    _check_p(p)
    return _formula_ceil(n, ExponentA.of(a), p)[0]


def gen_faulhaber_floor_closed(n: int, q: int, p: int) -> int:
    """Closed form of ``sum_{i<=n} floor(i**(1/q))**p``.

    With ``F = floor(n**(1/q))``::

        sum_{t<q} C(q,t) S_{p+t}(F) + F^p (n - (F+1)^q + 1)

    where ``S_k(F)`` is the power sum, evaluated through Bernoulli polynomials.
    """
    _check_n(n)
    _check_q(q)
    _check_p(p)
    if q == 1:
        return faulhaber_sum(n, p)
    F = int_root_floor(n, q)
    acc = Fraction(0)
    for t in range(q):
        acc += comb(q, t) * _power_sum(F, p + t)
    acc += F ** p * (n - (F + 1) ** q + 1)
    return _as_int(acc, "generalized floor closed form")


def gen_faulhaber_ceil_closed(n: int, q: int, p: int) -> int:
    """Closed form of ``sum_{i<=n} ceil(i**(1/q))**p`` (alternating binomial weights)."""
    _check_n(n)
    _check_q(q)
    _check_p(p)
    if q == 1:
        return faulhaber_sum(n, p)
    C = int_root_ceil(n, q)
    acc = Fraction(0)
    for t in range(q):
        acc += (-1) ** (q - t + 1) * comb(q, t) * _power_sum(C, p + t)
    acc -= (C ** q - n) * C ** p
    return _as_int(acc, "generalized ceiling closed form")


# -- oracle -----------------------------------------------------------------

def brute_sum(
    n: int,
    a: ExponentLike,
    p: int = 1,
    flavor: str = "floor",
    cap: int = BRUTE_FORCE_CAP,
) -> int:
    """Literal ``sum_{i<=n} floor(i**a)**p`` (or ceiling); refuses ``n > cap``."""
    _check_n(n)
    _check_p(p)
    if n > cap:
        raise BudgetExceeded(f"brute force over {n} terms exceeds cap {cap}")
    a = ExponentA.of(a)
    pw = floor_pow if normalize_flavor(flavor) == "floor" else ceil_pow
    return sum(pw(i, a) ** p for i in range(1, n + 1))


def evaluate(spec: SumSpec, method: str = "formula") -> ExactSumResult:
    """Evaluate a :class:`SumSpec` with ``formula``, ``closed-form`` or ``brute-force``."""
    n, a, p, flavor = spec.n, spec.a, spec.p, spec.flavor
    if method == "formula":
        if p == 1:
            counted = _sum_floor_counted if flavor == "floor" else _sum_ceil_counted
            value, work = counted(n, a)
        else:
            gen = _formula_floor if flavor == "floor" else _formula_ceil
            value, work = gen(n, a, p)
        return ExactSumResult(value, method, work)
    if method == "closed-form":
        if not a.is_unit_fraction:
            raise InvalidArgument(f"closed form needs a = 1/q, got a = {a}")
        q = a.v
        if p == 1:
            fn = sum_floor_closed if flavor == "floor" else sum_ceil_closed
            value = fn(n, q)
        else:
            fn = gen_faulhaber_floor_closed if flavor == "floor" else gen_faulhaber_ceil_closed
            value = fn(n, q, p)
        return ExactSumResult(value, method, 1)
    if method == "brute-force":
        return ExactSumResult(brute_sum(n, a, p, flavor), method, n)
    raise InvalidArgument(f"unknown method {method!r}")

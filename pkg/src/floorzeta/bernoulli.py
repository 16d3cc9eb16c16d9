"""Bernoulli numbers and polynomials over the rationals, and power sums.

The number accessor uses the ``B_1 = +1/2`` convention.  Polynomials use the
usual ``B_n(x) = sum_k C(n, k) B_k^- x^(n-k)`` (with ``B_1^- = -1/2``), which is
the convention in which ``(B_{q+1}(n+1) - B_{q+1}(0)) / (q+1)`` is the power
sum ``1^q + ... + n^q`` for every ``q >= 1``.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from math import comb
from typing import List, Sequence

from .errors import InternalInconsistency, InvalidArgument
from .exact_arith import RationalLike, parse_fraction

__all__ = [
    "bernoulli_number",
    "bernoulli_number_paper_oracle",
    "bernoulli_poly_coefficients",
    "bernoulli_poly_eval",
    "faulhaber_sum",
    "power_sum_poly_diff",
]

_lock = threading.Lock()
_numbers: List[Fraction] = [Fraction(1)]
_poly_rows: dict = {}


def _extend_numbers(j: int) -> None:
    # sum_{k=0}^{m} C(m+1, k) B_k = m + 1 for the B_1 = +1/2 convention
    with _lock:
        while len(_numbers) <= j:
            m = len(_numbers)
            acc = Fraction(0)
            for k in range(m):
                if _numbers[k]:
                    acc += comb(m + 1, k) * _numbers[k]
            _numbers.append((Fraction(m + 1) - acc) / (m + 1))


def bernoulli_number(j: int) -> Fraction:
    """Exact ``B_j`` with ``B_1 = +1/2``.

    >>> [str(bernoulli_number(j)) for j in range(5)]
    ['1', '1/2', '1/6', '0', '-1/30']
    """
    if not isinstance(j, int) or j < 0:
        raise InvalidArgument(f"Bernoulli index must be a nonnegative integer, got {j!r}")
    if j >= len(_numbers):
        _extend_numbers(j)
    return _numbers[j]


def bernoulli_number_paper_oracle(j: int) -> Fraction:
    """``B_j`` from the explicit double sum

        B_j = sum_{k=0}^{j} 1/(k+1) sum_{t=0}^{k} (-1)^t (t+1)^j C(k, t).

    Cubic-ish work; kept only as an independent cross-check of
    :func:`bernoulli_number`.
    """
    if not isinstance(j, int) or j < 0:
        raise InvalidArgument(f"Bernoulli index must be a nonnegative integer, got {j!r}")
    total = Fraction(0)
    for k in range(j + 1):
        inner = sum((-1) ** t * (t + 1) ** j * comb(k, t) for t in range(k + 1))
        total += Fraction(inner, k + 1)
    return total


def bernoulli_poly_coefficients(n: int) -> Sequence[Fraction]:
    """Coefficients of ``B_n(x)``, constant term first."""
    if not isinstance(n, int) or n < 0:
        raise InvalidArgument(f"polynomial degree must be a nonnegative integer, got {n!r}")
    row = _poly_rows.get(n)
    if row is None:
        coeffs = [Fraction(0)] * (n + 1)
        for k in range(n + 1):
            bk = bernoulli_number(k)
            if k == 1:
                bk = -bk
            coeffs[n - k] = comb(n, k) * bk
        row = tuple(coeffs)
        _poly_rows.setdefault(n, row)
    return row


def bernoulli_poly_eval(n: int, x: RationalLike) -> Fraction:
    """Exact ``B_n(x)``; ``B_2(1/2) = -1/12``."""
    xf = parse_fraction(x)
    acc = Fraction(0)
    for c in reversed(bernoulli_poly_coefficients(n)):
        acc = acc * xf + c
    return acc


def power_sum_poly_diff(q: int, n: int) -> Fraction:
    """``(B_{q+1}(n+1) - B_{q+1}(1)) / (q+1)`` as an unchecked Fraction.

    For ``q >= 1`` this is the same as using ``B_{q+1}(0)``; the ``B(1)`` form
    also gives the right answer at ``q = 0``.
    """
    return (bernoulli_poly_eval(q + 1, n + 1) - bernoulli_poly_eval(q + 1, 1)) / (q + 1)


def faulhaber_sum(n: int, q: int) -> int:
    """Exact ``1^q + 2^q + ... + n^q`` via Bernoulli polynomials."""
    if not isinstance(n, int) or n < 0:
        raise InvalidArgument(f"n must be a nonnegative integer, got {n!r}")
    if not isinstance(q, int) or q < 0:
        raise InvalidArgument(f"q must be a nonnegative integer, got {q!r}")
    value = power_sum_poly_diff(q, n)
    if value.denominator != 1:
        raise InternalInconsistency(
            f"power sum for n={n}, q={q} came out non-integral ({value}); "
            "Bernoulli convention mismatch"
        )
    return value.numerator

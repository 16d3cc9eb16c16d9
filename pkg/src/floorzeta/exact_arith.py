"""Exact integer roots and floor/ceiling of rational powers.

Python's ``int`` and ``fractions.Fraction`` carry every exact value in the
package; this module adds the one primitive they lack, the integer k-th root,
and builds ``floor(i**a)`` / ``ceil(i**a)`` on top of it for rational ``a``.
Floating point is only ever used to seed a root search, never for an answer.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import InvalidArgument

__all__ = [
    "ExponentA",
    "ceil_div",
    "ceil_pow",
    "floor_pow",
    "int_root_ceil",
    "int_root_floor",
    "is_perfect_power",
    "parse_fraction",
    "rational_root_ceil",
    "rational_root_floor",
]

# a float seed is within a step or two of the root while the root fits in 40 bits
_FLOAT_SEED_ROOT_BITS = 40
_NEWTON_MAX_STEPS = 10_000

RationalLike = Union[int, Fraction, str, float]


def parse_fraction(value: RationalLike) -> Fraction:
    """Convert ``3``, ``"2/3"``, ``Fraction(2, 3)`` or ``0.5`` to a Fraction.

    Floats go through their decimal repr, so ``0.3`` becomes ``3/10`` rather
    than the binary expansion.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise InvalidArgument("boolean is not a rational number")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise InvalidArgument(f"non-finite rational: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise InvalidArgument(f"not a rational number: {value!r}") from exc
    raise InvalidArgument(f"cannot interpret {value!r} as a rational number")


def ceil_div(num: int, den: int) -> int:
    """Exact ``ceil(num / den)`` for ``den > 0``."""
    return -((-num) // den)


def _check_root_args(x: int, k: int) -> None:
    if not isinstance(k, int) or k < 1:
        raise InvalidArgument(f"root index must be a positive integer, got {k!r}")
    if x < 0:
        raise InvalidArgument(f"root of a negative number: {x}")


def _bisect_root(x: int, k: int) -> int:
    lo, hi = 0, 1 << (x.bit_length() // k + 1)
    while lo < hi:
        mid = (lo + hi + 1) >> 1
        if mid ** k <= x:
            lo = mid
        else:
            hi = mid - 1
    return lo


def int_root_floor(x: int, k: int) -> int:
    """Largest ``r`` with ``r**k <= x``.

    >>> int_root_floor(10, 2), int_root_floor(16, 4), int_root_floor(10**18, 3)
    (3, 2, 1000000)
    """
    _check_root_args(x, k)
    if k == 1 or x < 2:
        return x
    if k == 2:
        return math.isqrt(x)
    if x.bit_length() <= k:
        # 1 <= root < 2
        return 1
    if x.bit_length() <= _FLOAT_SEED_ROOT_BITS * k:
        r = int(math.exp(math.log(x) / k))
    else:
        # Newton from above; the iterates decrease monotonically to the floor.
        r = 1 << ((x.bit_length() + k - 1) // k)
        for _ in range(_NEWTON_MAX_STEPS):
            y = ((k - 1) * r + x // r ** (k - 1)) // k
            if y >= r:
                break
            r = y
        else:
            r = _bisect_root(x, k)
    while r ** k > x:
        r -= 1
    while (r + 1) ** k <= x:
        r += 1
    return r


def int_root_ceil(x: int, k: int) -> int:
    """Smallest ``r`` with ``r**k >= x``."""
    r = int_root_floor(x, k)
    return r if r ** k == x else r + 1


def is_perfect_power(x: int, k: int) -> bool:
    return int_root_floor(x, k) ** k == x


def rational_root_floor(num: int, den: int, k: int) -> int:
    """Largest ``r >= 0`` with ``r**k * den <= num``.

    Since ``r**k`` is an integer, the condition is ``r**k <= num // den``;
    nothing is ever rounded.
    """
    if den <= 0:
        raise InvalidArgument("denominator must be positive")
    if num < 0:
        raise InvalidArgument("numerator must be nonnegative")
    return int_root_floor(num // den, k)


def rational_root_ceil(num: int, den: int, k: int) -> int:
    """Smallest ``r >= 0`` with ``r**k * den >= num``."""
    if den <= 0:
        raise InvalidArgument("denominator must be positive")
    if num < 0:
        raise InvalidArgument("numerator must be nonnegative")
    return int_root_ceil(ceil_div(num, den), k)


@dataclass(frozen=True)
class ExponentA:
    """A rational exponent ``u/v`` in lowest terms with ``0 < u/v <= 1``."""

    u: int
    v: int

    def __post_init__(self) -> None:
        if not (isinstance(self.u, int) and isinstance(self.v, int)):
            raise InvalidArgument("exponent parts must be integers")
        if self.u < 1 or self.v < 1:
            raise InvalidArgument(f"exponent must be positive, got {self.u}/{self.v}")
        if math.gcd(self.u, self.v) != 1:
            raise InvalidArgument(f"exponent {self.u}/{self.v} is not in lowest terms")
        if self.u > self.v:
            raise InvalidArgument(
                f"exponent {self.u}/{self.v} exceeds 1; only 0 < a <= 1 is supported exactly"
            )

    @classmethod
    def of(cls, value: Union["ExponentA", RationalLike]) -> "ExponentA":
        """Build from a Fraction, an int, a ``"u/v"`` string or a float."""
        if isinstance(value, ExponentA):
            return value
        f = parse_fraction(value)
        return cls(f.numerator, f.denominator)

    @classmethod
    def unit_fraction(cls, q: int) -> "ExponentA":
        return cls(1, q)

    @property
    def fraction(self) -> Fraction:
        return Fraction(self.u, self.v)

    @property
    def is_unit_fraction(self) -> bool:
        return self.u == 1

    def __str__(self) -> str:
        return f"{self.u}/{self.v}"


def floor_pow(i: int, a: ExponentA) -> int:
    """Exact ``floor(i**a)``: the largest r with ``r**v <= i**u``."""
    if i < 0:
        raise InvalidArgument("negative base")
    return int_root_floor(i ** a.u, a.v)


def ceil_pow(i: int, a: ExponentA) -> int:
    """Exact ``ceil(i**a)``."""
    if i < 0:
        raise InvalidArgument("negative base")
    return int_root_ceil(i ** a.u, a.v)


def floor_pow_inv(t: int, a: ExponentA) -> int:
    """Exact ``floor(t**(1/a))`` = ``floor(t**(v/u))``."""
    return int_root_floor(t ** a.v, a.u)


def ceil_pow_inv(t: int, a: ExponentA) -> int:
    """Exact ``ceil(t**(1/a))``."""
    return int_root_ceil(t ** a.v, a.u)

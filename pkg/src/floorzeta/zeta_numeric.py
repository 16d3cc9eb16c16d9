"""Double-precision Hurwitz and Riemann zeta for ``Re(s) > 1``.

Evaluation is a direct head sum of ``N`` terms followed by an Euler-Maclaurin
correction with ``K`` Bernoulli terms.  No analytic continuation is attempted.
"""
from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

from .bernoulli import bernoulli_number
from .errors import DomainError, InvalidArgument

__all__ = ["ZetaResult", "as_complex", "cpow_neg", "hurwitz_zeta", "riemann_zeta"]

ComplexLike = Union[int, float, complex]

EM_TERMS = 12
_EPS = 2.0 ** -52

# B_{2k} / (2k)!
_EM_COEFFS = tuple(
    float(bernoulli_number(2 * k)) / math.factorial(2 * k) for k in range(1, EM_TERMS + 2)
)


@dataclass(frozen=True)
class ZetaResult:
    value: complex
    est_error: float
    N_used: int
    K_used: int

    def __complex__(self) -> complex:
        return self.value


def as_complex(z: ComplexLike, name: str = "argument") -> complex:
    """Coerce to complex, rejecting NaN and infinities."""
    try:
        c = complex(z)
    except (TypeError, ValueError) as exc:
        raise InvalidArgument(f"{name} is not a complex number: {z!r}") from exc
    if not (math.isfinite(c.real) and math.isfinite(c.imag)):
        raise InvalidArgument(f"{name} must be finite, got {z!r}")
    return c


def cpow_neg(base: complex, s: complex) -> complex:
    """``base ** (-s)`` on the principal branch."""
    if base.imag == 0.0 and s.imag == 0.0 and base.real > 0.0:
        return complex(base.real ** (-s.real))
    return cmath.exp(-s * cmath.log(base))


def hurwitz_zeta(s: ComplexLike, t: ComplexLike = 1.0) -> ZetaResult:
    """``sum_{n>=0} (n + t)**(-s)`` for ``Re(s) > 1`` and ``Re(t) > 0``.

    ``est_error`` combines the first omitted Euler-Maclaurin term (scaled by
    the usual ``|s + 2K + 1| / (Re(s) + 2K + 1)`` factor) with a rounding
    allowance for the head sum.
    """
    s = as_complex(s, "s")
    t = as_complex(t, "t")
    if s.real <= 1.0:
        raise DomainError(f"Re(s) must exceed 1 (pole at s = 1), got s = {s}")
    if t.real <= 0.0:
        raise DomainError(f"Re(t) must be positive, got t = {t}")

    target = max(10.0, abs(s))
    N = 0
    while abs(N + t) < target:
        N += 1
    K = EM_TERMS

    re_parts = []
    im_parts = []
    for n in range(N):
        term = cpow_neg(n + t, s)
        re_parts.append(term.real)
        im_parts.append(term.imag)
    head_abs = math.fsum(abs(complex(r, i)) for r, i in zip(re_parts, im_parts))

    x = N + t
    x_neg_s = cpow_neg(x, s)
    tail = x * x_neg_s / (s - 1) + 0.5 * x_neg_s
    # rising factorial s (s+1) ... (s+2k-2), times x^(-s-2k+1)
    rising = s
    power = x_neg_s / x
    inv_x2 = 1.0 / (x * x)
    last = 0j
    for k in range(1, K + 2):
        term = _EM_COEFFS[k - 1] * rising * power
        if k <= K:
            tail += term
        else:
            last = term
        rising *= (s + 2 * k - 1) * (s + 2 * k)
        power *= inv_x2
    re_parts.append(tail.real)
    im_parts.append(tail.imag)
    value = complex(math.fsum(re_parts), math.fsum(im_parts))

    remainder = abs(last) * abs(s + 2 * K + 1) / (s.real + 2 * K + 1)
    # exp(-s log z) amplifies relative error by about |s log z|
    amplify = 8.0 + 2.0 * abs(s) * (abs(cmath.log(x)) + 1.0)
    rounding = amplify * _EPS * (head_abs + abs(tail)) + 4 * _EPS * abs(value)
    return ZetaResult(value, remainder + rounding, N, K)


def riemann_zeta(s: ComplexLike) -> ZetaResult:
    """``zeta(s) = hurwitz_zeta(s, 1)``."""
    return hurwitz_zeta(s, 1.0)

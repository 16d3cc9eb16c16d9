"""Floor and ceiling generalizations of the Hurwitz zeta function.

For rational ``0 < a <= 1`` and ``b > 0``::

    F(s, t) = sum_{n>=0} (floor((b n)^a) + t)^(-s)
    C(s, t) = sum_{n>=0} (ceil((b n)^a) + t)^(-s)        Re(s) > 1/a, Re(t) > 0

Two conventions are kept apart everywhere: the *definition* form above, and
the *reduced* form ``sum_{n>=1} floor((b n)^a)^(-s)`` (resp. ceiling), which is
what the zeta-combination identities with ``t = 1`` actually describe.

Each series can be summed term by term (``direct``) or regrouped by how many
consecutive ``n`` share a floor/ceiling value (``equivalent``).  Tails are
either the plain integral-test bound (``tail="bound"``) or a rigorous
enclosure (``tail="model"``, unit-fraction ``a`` only): the run lengths beyond
the head are interval lengths ``((m+1)^q - m^q)/b`` up to an error below one,
so the tail is a finite combination of Hurwitz zeta values plus a bounded
remainder.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .errors import BudgetExceeded, DomainError, InvalidArgument
from .exact_arith import (
    ExponentA,
    RationalLike,
    parse_fraction,
    rational_root_ceil,
    rational_root_floor,
)
from .floor_sums import normalize_flavor
from .zeta_numeric import ComplexLike, ZetaResult, as_complex, cpow_neg, hurwitz_zeta

__all__ = [
    "DEFAULT_DIRECT_TERMS",
    "DEFAULT_EQUIVALENT_TERMS",
    "FCZetaSpec",
    "SeriesEval",
    "ceil_threshold",
    "ceil_value",
    "coefficients",
    "czeta_closed",
    "czeta_reduced_closed",
    "default_budgets",
    "difference_series",
    "dirichlet_partial_sum",
    "direct_tail_bound",
    "equivalent_tail_bound",
    "fc_zeta_direct",
    "fc_zeta_equivalent",
    "fc_zeta_reduced_direct",
    "floor_threshold",
    "floor_value",
    "fzeta_closed",
    "fzeta_reduced_closed",
    "pole_difference_definition",
    "pole_difference_definition_lhs",
    "pole_difference_reduced",
    "pole_difference_reduced_lhs",
    "rep_count_ceil",
    "rep_count_floor",
]

DEFAULT_DIRECT_TERMS = 10 ** 6
DEFAULT_EQUIVALENT_TERMS = 10 ** 4
MAX_DIRECT_TERMS = 2 * 10 ** 8
_CHUNK = 1 << 20
_EPS = 2.0 ** -52


def default_budgets() -> Tuple[int, int]:
    """(direct, equivalent) term budgets, honouring ``FLOORZETA_TERM_BUDGET``.

    The variable holds either ``N`` (equivalent budget becomes ``N // 100``)
    or ``N,M``.
    """
    raw = os.environ.get("FLOORZETA_TERM_BUDGET", "").strip()
    if not raw:
        return DEFAULT_DIRECT_TERMS, DEFAULT_EQUIVALENT_TERMS
    try:
        parts = [int(x) for x in raw.split(",")]
    except ValueError as exc:
        raise InvalidArgument(f"bad FLOORZETA_TERM_BUDGET={raw!r}") from exc
    if len(parts) == 1:
        return parts[0], max(1, parts[0] // 100)
    if len(parts) == 2:
        return parts[0], parts[1]
    raise InvalidArgument(f"bad FLOORZETA_TERM_BUDGET={raw!r}")


# -- specification ----------------------------------------------------------

@dataclass(frozen=True)
class FCZetaSpec:
    flavor: str
    a: ExponentA
    b: Fraction
    s: complex
    t: complex = 1 + 0j
    convention: str = "definition"

    def __post_init__(self) -> None:
        object.__setattr__(self, "flavor", normalize_flavor(self.flavor))
        object.__setattr__(self, "a", ExponentA.of(self.a))
        b = parse_fraction(self.b)
        if b <= 0:
            raise InvalidArgument(f"b must be positive, got {b}")
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "s", as_complex(self.s, "s"))
        object.__setattr__(self, "t", as_complex(self.t, "t"))
        if self.convention not in ("definition", "reduced"):
            raise InvalidArgument(f"unknown convention {self.convention!r}")
        if self.s.real * self.a.fraction <= 1:
            raise DomainError(f"need Re(s) > 1/a = {1 / self.a.fraction}, got s = {self.s}")
        if self.t.real <= 0:
            raise DomainError(f"need Re(t) > 0, got t = {self.t}")
        if self.convention == "reduced":
            if self.t != 1:
                raise InvalidArgument("the reduced convention is defined for t = 1 only")
            if self.flavor == "floor" and b < 1:
                raise DomainError("reduced floor series has zero bases when b < 1")

    @property
    def sigma(self) -> float:
        return self.s.real

    @property
    def reduced(self) -> bool:
        return self.convention == "reduced"

    @property
    def shift(self) -> complex:
        """Offset added to each floor/ceiling value inside the power."""
        return 0j if self.reduced else self.t

    def describe(self) -> dict:
        return {
            "flavor": self.flavor,
            "a": str(self.a),
            "b": str(self.b),
            "s": _cstr(self.s),
            "t": _cstr(self.t),
            "convention": self.convention,
        }


def _cstr(z: complex) -> str:
    return f"{z.real!r},{z.imag!r}" if z.imag else repr(z.real)


@dataclass(frozen=True)
class SeriesEval:
    """A truncated series value with a verified bound on what was left out.

    ``tail_bound`` covers the omitted terms (or, for model tails, the error
    of the tail enclosure); ``round_bound`` covers floating-point error in
    what was summed.  ``conclusive`` is False when no finite bound applies.
    """

    value: complex
    terms_used: int
    tail_bound: float
    method: str
    round_bound: float = 0.0
    conclusive: bool = True
    tail_mode: str = "bound"
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def bound(self) -> float:
        return self.tail_bound + self.round_bound


# -- exact values, thresholds and repetition counts -------------------------

def _ab_parts(a: ExponentA, b: Fraction) -> Tuple[int, int, int, int]:
    return a.u, a.v, b.numerator, b.denominator


def floor_value(n: int, a: ExponentA, b: Fraction) -> int:
    """Exact ``floor((b n)^a)``."""
    u, v, p, r = _ab_parts(a, b)
    return rational_root_floor((p * n) ** u, r ** u, v)


def ceil_value(n: int, a: ExponentA, b: Fraction) -> int:
    """Exact ``ceil((b n)^a)``."""
    u, v, p, r = _ab_parts(a, b)
    return rational_root_ceil((p * n) ** u, r ** u, v)


def floor_threshold(m: int, a: ExponentA, b: Fraction) -> int:
    """``ceil(m^(1/a) / b)``: the first ``n`` with ``floor((b n)^a) >= m``."""
    u, v, p, r = _ab_parts(a, b)
    return rational_root_ceil(m ** v * r ** u, p ** u, u)


def ceil_threshold(k: int, a: ExponentA, b: Fraction) -> int:
    """``floor(k^(1/a) / b)``: the last ``n`` with ``ceil((b n)^a) <= k``."""
    u, v, p, r = _ab_parts(a, b)
    return rational_root_floor(k ** v * r ** u, p ** u, u)


def rep_count_floor(m: int, a: RationalLike | ExponentA, b: RationalLike) -> int:
    """How many ``n >= 0`` have ``floor((b n)^a) == m``.

    ``ceil((m+1)^(1/a)/b) - ceil(m^(1/a)/b)``; at ``m = 0`` this is ``ceil(1/b)``.
    """
    if m < 0:
        raise InvalidArgument("m must be nonnegative")
    a, b = ExponentA.of(a), parse_fraction(b)
    return floor_threshold(m + 1, a, b) - floor_threshold(m, a, b)


def rep_count_ceil(k: int, a: RationalLike | ExponentA, b: RationalLike) -> int:
    """How many ``n >= 1`` have ``ceil((b n)^a) == k``: ``floor(k^(1/a)/b) - floor((k-1)^(1/a)/b)``."""
    if k < 1:
        raise InvalidArgument("k must be positive")
    a, b = ExponentA.of(a), parse_fraction(b)
    return ceil_threshold(k, a, b) - ceil_threshold(k - 1, a, b)


def coefficients(spec: FCZetaSpec, M: int) -> List[int]:
    """Exact equivalent-series coefficients ``c_0 .. c_M``.

    The series is ``sum_m c_m (m + shift)^(-s)``.  In the reduced convention
    ``c_0`` is 0 (there is no ``m = 0`` term).
    """
    a, b = spec.a, spec.b
    out = [0] * (M + 1)
    if spec.flavor == "floor":
        prev = 0  # floor_threshold(0)
        for m in range(M + 1):
            nxt = floor_threshold(m + 1, a, b)
            out[m] = nxt - prev
            prev = nxt
        if spec.reduced:
            out[0] = 0
    else:
        out[0] = 0 if spec.reduced else 1
        prev = 0  # ceil_threshold(0)
        for k in range(1, M + 1):
            cur = ceil_threshold(k, a, b)
            out[k] = cur - prev
            prev = cur
    return out


# -- vectorized exact floor/ceiling values ----------------------------------

def _values_chunk(n: np.ndarray, spec: FCZetaSpec) -> np.ndarray:
    """Exact floor/ceiling of ``(b n)^a`` for an int64 array ``n``.

    A float estimate is accepted only where it is far from an integer; all
    near-integer entries are recomputed with exact integer roots.
    """
    a, b = spec.a, spec.b
    if a.v == 1 and b.numerator * (int(n[-1]) + 1) < 2 ** 62:
        # a = 1: plain integer division, every value lands on an integer
        num = n * b.numerator
        if spec.flavor == "floor":
            return num // b.denominator
        return -((-num) // b.denominator)
    x = np.power(n.astype(np.float64) * (b.numerator / b.denominator), a.u / a.v)
    nearest = np.rint(x)
    near = np.abs(x - nearest) <= 1e-9 * np.maximum(x, 1.0)
    if spec.flavor == "floor":
        out = np.floor(x).astype(np.int64)
        exact = floor_value
    else:
        out = np.ceil(x).astype(np.int64)
        exact = ceil_value
    for idx in np.nonzero(near)[0]:
        out[idx] = exact(int(n[idx]), a, b)
    return out


def _powers(base: np.ndarray, s: complex) -> np.ndarray:
    """``base ** (-s)`` elementwise on the principal branch."""
    if s.imag == 0.0 and not np.iscomplexobj(base):
        return np.power(base, -s.real)
    return np.exp(-s * np.log(base.astype(np.complex128)))


class _Accumulator:
    """Exactly rounded running sum (via math.fsum) of complex terms."""

    def __init__(self) -> None:
        self.re: List[float] = []
        self.im: List[float] = []
        self.abs_parts: List[float] = []

    def add_array(self, terms: np.ndarray) -> None:
        if np.iscomplexobj(terms):
            self.re.append(math.fsum(terms.real))
            self.im.append(math.fsum(terms.imag))
            self.abs_parts.append(float(np.sum(np.abs(terms))))
        else:
            self.re.append(math.fsum(terms))
            self.abs_parts.append(float(np.sum(np.abs(terms))))

    def add(self, z: complex) -> None:
        self.re.append(z.real)
        self.im.append(z.imag)
        self.abs_parts.append(abs(z))

    @property
    def value(self) -> complex:
        return complex(math.fsum(self.re), math.fsum(self.im))

    @property
    def abs_total(self) -> float:
        return math.fsum(self.abs_parts)


def _round_bound(acc: _Accumulator, s: complex, max_base: float, chunks: int) -> float:
    amplify = 8.0 + 2.0 * abs(s) * (math.log(max(max_base, 2.0)) + 1.0)
    # per-chunk fsum partials are rounded once more when combined
    return amplify * _EPS * acc.abs_total + (chunks + 2) * _EPS * abs(acc.value)


def _arg_factor(s: complex, shift: complex) -> float:
    """Bound on ``exp(Im(s) * arg(m + shift))`` over ``m >= 0``."""
    if s.imag == 0.0 or shift.imag == 0.0:
        return 1.0
    return math.exp(abs(s.imag) * abs(math.atan2(shift.imag, shift.real)))


# -- tail bounds ------------------------------------------------------------

def direct_tail_bound(spec: FCZetaSpec, N: int) -> float:
    """Integral-test bound on ``sum_{n>N}`` of the direct series.

    Uses ``floor(x) >= x/2`` for ``x >= 1`` (so it also covers ceilings),
    giving ``2^sigma b^(-a sigma) N^(1 - a sigma) / (a sigma - 1)``.  Returns
    ``inf`` until ``(b N)^a >= 2``.
    """
    a = spec.a.u / spec.a.v
    b = float(spec.b)
    sigma = spec.sigma
    if N < 1 or (b * N) ** a < 2.0:
        return math.inf
    e = a * sigma
    bound = 2.0 ** sigma * b ** (-e) * N ** (1.0 - e) / (e - 1.0)
    return bound * _arg_factor(spec.s, spec.shift)


def equivalent_tail_bound(spec: FCZetaSpec, M: int) -> float:
    """Bound on ``sum_{m>M} c_m |(m+t)^(-s)|`` using ``c_m <= (m+1)^(1/a-1)/(a b) + 2``."""
    if M < 1:
        return math.inf
    inv_a = spec.a.v / spec.a.u
    b = float(spec.b)
    sigma = spec.sigma
    growth = ((M + 2) / (M + 1)) ** (inv_a - 1.0)
    main = growth / (b / inv_a) * M ** (inv_a - sigma) / (sigma - inv_a)
    flat = 2.0 * M ** (1.0 - sigma) / (sigma - 1.0)
    return (main + flat) * _arg_factor(spec.s, spec.shift)


def _run_length_poly(flavor: str, q: int, b: Fraction) -> List[Fraction]:
    """Coefficients (in m, constant first) of the real run length ``((m+1)^q - m^q)/b``
    for floors, or ``(m^q - (m-1)^q)/b`` for ceilings."""
    sign = 1 if flavor == "floor" else -1
    return [Fraction(comb(q, j) * sign ** (q - j + 1)) / b for j in range(q)]


def _model_tail(
    poly: Sequence[Fraction],
    m0: int,
    s: complex,
    shift: complex,
    delta: float,
) -> Tuple[complex, float]:
    """Enclose ``sum_{m>=m0} c_m (m+shift)^(-s)`` where ``|c_m - poly(m)| <= delta``.

    Returns the value of ``sum poly(m) (m+shift)^(-s)`` (a combination of
    Hurwitz zeta values) and a bound covering ``delta`` and the zeta errors.
    """
    sigma = s.real
    # re-expand poly in y = m + shift: m^j = sum_i C(j,i) y^i (-shift)^(j-i)
    mu = [0j] * len(poly)
    for j, cj in enumerate(poly):
        if cj == 0:
            continue
        cjf = float(cj)
        for i in range(j + 1):
            mu[i] += cjf * comb(j, i) * (-shift) ** (j - i)
    value = 0j
    err = 0.0
    origin = m0 + shift
    for i, coeff in enumerate(mu):
        if coeff == 0:
            continue
        if sigma - i <= 1.0:
            raise DomainError(f"model tail needs Re(s) > {i + 1}, got s = {s}")
        z = hurwitz_zeta(s - i, origin)
        value += coeff * z.value
        err += abs(coeff) * z.est_error + 4 * _EPS * abs(coeff * z.value) * (i + 1)
    if delta:
        base = m0 + shift.real
        weight = base ** (-sigma) + base ** (1.0 - sigma) / (sigma - 1.0)
        err += delta * weight * _arg_factor(s, shift)
    return value, err


def _model_delta(b: Fraction) -> float:
    # thresholds m^q / b are integers when b = 1/r, so run lengths are exact
    return 0.0 if b.numerator == 1 else 1.0


def _need_unit_fraction(spec: FCZetaSpec) -> int:
    if not spec.a.is_unit_fraction:
        raise InvalidArgument(f"model tails need a = 1/q, got a = {spec.a}")
    return spec.a.v


# -- direct and equivalent series -------------------------------------------

def _direct_head(spec: FCZetaSpec, N: int) -> Tuple[_Accumulator, int, int]:
    """Sum the literal terms for n <= N. Returns (acc, last value, chunk count)."""
    start = 1 if spec.reduced else 0
    acc = _Accumulator()
    shift = spec.shift
    last = 0
    chunks = 0
    lo = start
    while lo <= N:
        hi = min(N + 1, lo + _CHUNK)
        n = np.arange(lo, hi, dtype=np.int64)
        vals = _values_chunk(n, spec)
        if spec.reduced:
            base = vals.astype(np.float64)
        elif shift.imag == 0.0:
            base = vals.astype(np.float64) + shift.real
        else:
            base = vals.astype(np.complex128) + shift
        acc.add_array(_powers(base, spec.s))
        last = int(vals[-1])
        chunks += 1
        lo = hi
    return acc, last, chunks


def fc_zeta_direct(
    spec: FCZetaSpec,
    N: Optional[int] = None,
    tail: str = "bound",
) -> SeriesEval:
    """Sum the series term by term over ``n <= N``.

    ``tail="bound"`` reports the partial sum with :func:`direct_tail_bound`;
    ``tail="model"`` adds the rest of the current run exactly and encloses the
    remaining complete runs (unit-fraction ``a`` only).
    """
    if N is None:
        N = default_budgets()[0]
    if not isinstance(N, int) or N < 1:
        raise InvalidArgument(f"term budget must be a positive integer, got {N!r}")
    if N > MAX_DIRECT_TERMS:
        raise BudgetExceeded(f"direct series over {N} terms exceeds cap {MAX_DIRECT_TERMS}")
    acc, last, chunks = _direct_head(spec, N)
    terms = N if spec.reduced else N + 1
    max_base = abs(last + spec.shift) + 1.0
    if tail == "bound":
        tb = direct_tail_bound(spec, N)
        return SeriesEval(acc.value, terms, tb, "direct", _round_bound(acc, spec.s, max_base, chunks),
                          conclusive=math.isfinite(tb), tail_mode="bound")
    if tail != "model":
        raise InvalidArgument(f"unknown tail mode {tail!r}")
    q = _need_unit_fraction(spec)
    a, b, shift = spec.a, spec.b, spec.shift
    if spec.flavor == "floor":
        remaining = floor_threshold(last + 1, a, b) - 1 - N
    else:
        remaining = ceil_threshold(last, a, b) - N
    if remaining < 0:
        raise AssertionError("run bookkeeping went negative")
    if remaining:
        acc.add(remaining * cpow_neg(last + shift, spec.s))
    value, err = _model_tail(_run_length_poly(spec.flavor, q, b), last + 1, spec.s, shift, _model_delta(b))
    acc.add(value)
    return SeriesEval(acc.value, terms, err, "direct", _round_bound(acc, spec.s, max_base, chunks + 2),
                      tail_mode="model", meta={"partial_run": remaining, "model_from": last + 1})


def fc_zeta_equivalent(
    spec: FCZetaSpec,
    M: Optional[int] = None,
    tail: str = "bound",
) -> SeriesEval:
    """Sum the regrouped series ``sum_{m<=M} c_m (m + t)^(-s)``.

    In the definition form the ``m = 0`` weight is the number of ``n`` whose
    floor is zero, ``ceil(1/b)``; that is ``1/t^s`` exactly when ``b >= 1``.
    """
    if M is None:
        M = default_budgets()[1]
    if not isinstance(M, int) or M < 1:
        raise InvalidArgument(f"term budget must be a positive integer, got {M!r}")
    coeffs = coefficients(spec, M)
    shift = spec.shift
    acc = _Accumulator()
    first = 1 if spec.reduced else 0
    ms = np.arange(first, M + 1, dtype=np.float64)
    c = np.array(coeffs[first:], dtype=np.float64)
    if shift.imag == 0.0:
        base = ms + shift.real
    else:
        base = ms.astype(np.complex128) + shift
    acc.add_array(c * _powers(base, spec.s))
    max_base = abs(M + shift) + 1.0
    rb = _round_bound(acc, spec.s, max_base, 1)
    if tail == "bound":
        tb = equivalent_tail_bound(spec, M)
        return SeriesEval(acc.value, M + 1 - first, tb, "equivalent", rb,
                          conclusive=math.isfinite(tb), tail_mode="bound")
    if tail != "model":
        raise InvalidArgument(f"unknown tail mode {tail!r}")
    q = _need_unit_fraction(spec)
    value, err = _model_tail(_run_length_poly(spec.flavor, q, spec.b), M + 1, spec.s, shift,
                             _model_delta(spec.b))
    acc.add(value)
    return SeriesEval(acc.value, M + 1 - first, err, "equivalent",
                      _round_bound(acc, spec.s, max_base, 2), tail_mode="model")


def fc_zeta_reduced_direct(
    flavor: str,
    q: int,
    b: RationalLike,
    s: ComplexLike,
    N: Optional[int] = None,
    tail: str = "bound",
) -> SeriesEval:
    """``sum_{n>=1} floor((b n)^(1/q))^(-s)`` (or ceiling), summed over ``n <= N``."""
    spec = FCZetaSpec(flavor, ExponentA.unit_fraction(q), b, s, 1, "reduced")
    return fc_zeta_direct(spec, N, tail)


def dirichlet_partial_sum(
    coeffs: Sequence,
    s: ComplexLike,
    start: int = 1,
) -> Tuple[complex, float]:
    """``sum_j coeffs[j - start] * j^(-s)`` with a rounding bound.

    Coefficients may be ints or Fractions; they are rounded to double once.
    """
    s = as_complex(s, "s")
    if start < 1:
        raise InvalidArgument("Dirichlet series start at j >= 1")
    j = np.arange(start, start + len(coeffs), dtype=np.float64)
    c = np.array([float(x) for x in coeffs], dtype=np.float64)
    acc = _Accumulator()
    acc.add_array(c * _powers(j, s))
    return acc.value, _round_bound(acc, s, start + len(coeffs), 1)


# -- closed zeta combinations -----------------------------------------------

def _check_q(q: int, minimum: int = 1) -> None:
    if not isinstance(q, int) or q < minimum:
        raise InvalidArgument(f"q must be an integer >= {minimum}, got {q!r}")


def _combine(terms: Sequence[Tuple[complex, ComplexLike, ComplexLike]]) -> ZetaResult:
    """``sum coeff * zeta(s', t')`` with accumulated error estimate."""
    value = 0j
    err = 0.0
    n_used = k_used = 0
    for coeff, s_, t_ in terms:
        if coeff == 0:
            continue
        z = hurwitz_zeta(s_, t_)
        value += coeff * z.value
        err += abs(coeff) * z.est_error + 2 * _EPS * abs(coeff * z.value)
        n_used = max(n_used, z.N_used)
        k_used = max(k_used, z.K_used)
    err += 4 * _EPS * abs(value)
    return ZetaResult(value, err, n_used, k_used)


def _domain(s: complex, q: int) -> None:
    if s.real <= q:
        raise DomainError(f"need Re(s) > q = {q}, got s = {s}")


def fzeta_closed(q: int, s: ComplexLike, t: ComplexLike = 1) -> ZetaResult:
    """``sum_{m<q} sum_{k=m}^{q-1} C(q,m) C(q,q-k-1) (-t)^(q-k-1) zeta(s-m, t)``, as displayed."""
    _check_q(q)
    s, t = as_complex(s, "s"), as_complex(t, "t")
    _domain(s, q)
    terms = []
    for m in range(q):
        w = sum(comb(q, q - k - 1) * (-t) ** (q - k - 1) for k in range(m, q))
        terms.append((comb(q, m) * w, s - m, t))
    return _combine(terms)


def czeta_closed(q: int, s: ComplexLike, t: ComplexLike = 1) -> ZetaResult:
    """``sum_{m<q} sum_{k=m}^{q-1} (-1)^(q-m+1) C(q,m) C(q,q-k-1) t^(q-k-1) zeta(s-m, t)``."""
    _check_q(q)
    s, t = as_complex(s, "s"), as_complex(t, "t")
    _domain(s, q)
    terms = []
    for m in range(q):
        w = sum(comb(q, q - k - 1) * t ** (q - k - 1) for k in range(m, q))
        terms.append(((-1) ** (q - m + 1) * comb(q, m) * w, s - m, t))
    return _combine(terms)


def fzeta_reduced_closed(q: int, s: ComplexLike) -> ZetaResult:
    """``sum_{m<q} C(q,m) zeta(s-m)``."""
    _check_q(q)
    s = as_complex(s, "s")
    _domain(s, q)
    return _combine([(comb(q, m), s - m, 1) for m in range(q)])


def czeta_reduced_closed(q: int, s: ComplexLike) -> ZetaResult:
    """``sum_{m<q} (-1)^(q-m+1) C(q,m) zeta(s-m)``."""
    _check_q(q)
    s = as_complex(s, "s")
    _domain(s, q)
    return _combine([((-1) ** (q - m + 1) * comb(q, m), s - m, 1) for m in range(q)])


def pole_difference_reduced(q: int) -> ZetaResult:
    """``sum_{j=0}^{q-2} C(q,j) zeta(q-j) (1 + (-1)^(q-j))``: the claimed value of
    ``sum_n (floor(n^(1/q))^-q - ceil(n^(1/q))^-q)``."""
    _check_q(q, 2)
    return _combine([(comb(q, j) * (1 + (-1) ** (q - j)), q - j, 1) for j in range(q - 1)])


def pole_difference_definition(q: int, t: ComplexLike = 1) -> ZetaResult:
    """The displayed claim for ``C(q, t) - F(q, t)`` in the definition form::

        sum_{m=0}^{q-2} sum_{k=m}^{q-2} C(q,m) C(q,q-k-1) zeta(q-m, t)
            * ((-t)^(q-k-1) + (-1)^(q-m) t^(q-k-1))
    """
    _check_q(q, 2)
    t = as_complex(t, "t")
    if t.real <= 0:
        raise DomainError(f"need Re(t) > 0, got t = {t}")
    terms = []
    for m in range(q - 1):
        w = sum(
            comb(q, q - k - 1) * ((-t) ** (q - k - 1) + (-1) ** (q - m) * t ** (q - k - 1))
            for k in range(m, q - 1)
        )
        terms.append((comb(q, m) * w, q - m, t))
    return _combine(terms)


# -- convergent differences at the pole -------------------------------------

def difference_series(
    q: int,
    s: ComplexLike,
    t: ComplexLike = 1,
    convention: str = "reduced",
    orientation: str = "F-C",
    M: Optional[int] = None,
    tail: str = "model",
) -> SeriesEval:
    """Sum ``F - C`` (or ``C - F``) for ``a = 1/q, b = 1`` as one coefficient series.

    Each difference coefficient is exact; the series converges for
    ``Re(s) > q - 1`` even though each side alone needs ``Re(s) > q``.
    """
    _check_q(q, 2)
    if M is None:
        M = default_budgets()[1]
    s, t = as_complex(s, "s"), as_complex(t, "t")
    if s.real <= q - 1:
        raise DomainError(f"difference series needs Re(s) > q - 1 = {q - 1}, got s = {s}")
    if orientation not in ("F-C", "C-F"):
        raise InvalidArgument(f"orientation must be 'F-C' or 'C-F', got {orientation!r}")
    a = ExponentA.unit_fraction(q)
    one = Fraction(1)
    # thresholds are exact (b = 1); spec objects only carry the convention here
    f_coeffs = _raw_coefficients("floor", a, one, M, convention)
    c_coeffs = _raw_coefficients("ceiling", a, one, M, convention)
    sign = 1 if orientation == "F-C" else -1
    d = [sign * (fc - cc) for fc, cc in zip(f_coeffs, c_coeffs)]
    shift = 0j if convention == "reduced" else t
    first = 1 if convention == "reduced" else 0
    ms = np.arange(first, M + 1, dtype=np.float64)
    base = ms + shift.real if shift.imag == 0.0 else ms.astype(np.complex128) + shift
    acc = _Accumulator()
    acc.add_array(np.array(d[first:], dtype=np.float64) * _powers(base, s))
    rb = _round_bound(acc, s, abs(M + shift) + 1.0, 1)
    if tail == "model":
        fp = _run_length_poly("floor", q, one)
        cp = _run_length_poly("ceiling", q, one)
        poly = [sign * (x - y) for x, y in zip(fp, cp)]
        while len(poly) > 1 and poly[-1] == 0:
            poly.pop()
        value, err = _model_tail(poly, M + 1, s, shift, 0.0)
        acc.add(value)
        return SeriesEval(acc.value, M + 1 - first, err, "equivalent",
                          _round_bound(acc, s, abs(M + shift) + 1.0, 2), tail_mode="model")
    if tail != "bound":
        raise InvalidArgument(f"unknown tail mode {tail!r}")
    # |d_m| <= q (q-1) (m+1)^(q-2) + 2
    sigma = s.real
    growth = ((M + 2) / (M + 1)) ** (q - 2)
    tb = q * (q - 1) * growth * M ** (q - 1 - sigma) / (sigma - q + 1)
    tb += 2.0 * M ** (1.0 - sigma) / (sigma - 1.0)
    tb *= _arg_factor(s, shift)
    return SeriesEval(acc.value, M + 1 - first, tb, "equivalent", rb, tail_mode="bound")


def _raw_coefficients(flavor: str, a: ExponentA, b: Fraction, M: int, convention: str) -> List[int]:
    # FCZetaSpec validates s against the domain; difference series live at the pole
    proxy = FCZetaSpec(flavor, a, b, complex(a.v + 1, 0), 1, convention)
    return coefficients(proxy, M)


def pole_difference_reduced_lhs(q: int, M: Optional[int] = None, tail: str = "model") -> SeriesEval:
    """``sum_{n>=1} (floor(n^(1/q))^(-q) - ceil(n^(1/q))^(-q))``."""
    return difference_series(q, q, 1, "reduced", "F-C", M, tail)


def pole_difference_definition_lhs(
    q: int,
    t: ComplexLike = 1,
    M: Optional[int] = None,
    orientation: str = "C-F",
    tail: str = "model",
) -> SeriesEval:
    """``sum_{n>=0} ((ceil(n^(1/q)) + t)^(-q) - (floor(n^(1/q)) + t)^(-q))`` (``C-F``)."""
    return difference_series(q, q, t, "definition", orientation, M, tail)

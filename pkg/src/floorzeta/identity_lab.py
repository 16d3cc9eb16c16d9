"""Numerical verdicts on claimed identities for the floor/ceiling zeta functions.

Every comparison carries a verified bound on each side.  A claim is REFUTED
only when the two sides differ by more than both bounds together, and
CONFIRMED only when they agree within bounds of at most ``1e-6`` at two term
budgets (``M`` and ``2M``).  Anything else is INCONCLUSIVE.

Where both sides are Dirichlet series over the same ``j^(-s)``, the integer
coefficients are also compared exactly, and the first mismatch is reported
as a witness.
"""
from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .errors import DomainError, InvalidArgument
from .exact_arith import ExponentA, int_root_floor
from .fc_zeta import (
    FCZetaSpec,
    SeriesEval,
    coefficients,
    czeta_closed,
    czeta_reduced_closed,
    default_budgets,
    difference_series,
    direct_tail_bound,
    dirichlet_partial_sum,
    equivalent_tail_bound,
    fc_zeta_direct,
    fc_zeta_equivalent,
    fzeta_closed,
    fzeta_reduced_closed,
    pole_difference_definition,
    pole_difference_reduced,
)
from .floor_sums import sum_floor
from .zeta_numeric import ComplexLike, as_complex

__all__ = [
    "CONFIRMED",
    "INCONCLUSIVE",
    "REFUTED",
    "SPECIAL_CASES",
    "GrowthReport",
    "RaceReport",
    "SpecialCase",
    "Verdict",
    "check_deduction",
    "check_pole_difference",
    "check_problem42",
    "check_special_case",
    "convergence_race",
    "growth_check_problem44",
    "judge",
    "problem42_coefficient",
    "soundness_check",
    "special_cases_report",
]

CONFIRMED = "CONFIRMED"
REFUTED = "REFUTED"
INCONCLUSIVE = "INCONCLUSIVE"

CONFIRM_TOLERANCE = 1e-6
_EPS = 2.0 ** -52


@dataclass(frozen=True)
class Verdict:
    identity_id: str
    params: dict
    lhs: complex
    rhs: complex
    lhs_bound: float
    rhs_bound: float
    status: str
    convention: str = ""
    witness: Optional[int] = None
    note: str = ""

    @property
    def discrepancy(self) -> float:
        return abs(self.lhs - self.rhs)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["discrepancy"] = self.discrepancy
        return d


# one level = (lhs, lhs_bound, rhs, rhs_bound)
Level = Tuple[complex, float, complex, float]


def judge(levels: Sequence[Level]) -> str:
    """Status from comparisons at increasing precision levels."""
    if not levels:
        raise InvalidArgument("no levels to judge")
    agree_all = True
    for lhs, lb, rhs, rb in levels:
        if not (math.isfinite(lb) and math.isfinite(rb)):
            agree_all = False
            continue
        diff = abs(lhs - rhs)
        slack = 10 * _EPS * max(1.0, abs(lhs), abs(rhs))
        if diff > lb + rb + slack:
            return REFUTED
        if diff > lb + rb:
            agree_all = False
    _, lb, _, rb = levels[-1]
    if agree_all and lb <= CONFIRM_TOLERANCE and rb <= CONFIRM_TOLERANCE:
        return CONFIRMED
    return INCONCLUSIVE


def _verdict(identity_id: str, params: dict, levels: Sequence[Level], convention: str = "",
             witness: Optional[int] = None, note: str = "") -> Verdict:
    status = judge(levels)
    if witness is not None and status == CONFIRMED:
        # coefficients differ, so the series differ; values agreeing here is a coincidence
        status = INCONCLUSIVE
        note = (note + "; " if note else "") + "values agree although coefficients differ"
    lhs, lb, rhs, rb = levels[-1]
    return Verdict(identity_id, params, lhs, rhs, lb, rb, status, convention, witness, note)


def _lab_budget(budget: Optional[int]) -> int:
    return budget if budget is not None else default_budgets()[1]


def _first_mismatch(a: Sequence, b: Sequence, start: int = 1) -> Optional[int]:
    for i, (x, y) in enumerate(zip(a, b)):
        if x != y:
            return i + start
    return None


def _envelope_tail(K: float, d: int, s: complex, J: int) -> float:
    """``sum_{j>J} K j^d |j^(-s)|  <=  K J^(d+1-sigma) / (sigma-d-1)``."""
    sigma = s.real
    if sigma <= d + 1:
        return math.inf
    return K * J ** (d + 1 - sigma) / (sigma - d - 1)


# -- special cases ----------------------------------------------------------

@dataclass(frozen=True)
class SpecialCase:
    """A tabulated claim ``Z(s, 1) = sum_j coeff(j) / j^s``.

    ``degree``/``K`` give an envelope ``coeff(j) <= K j^degree`` for ``j >= 1``,
    used for the tail of the tabulated series.
    """

    case_id: int
    flavor: str
    b: int
    q: int
    coeff: Callable[[int], Fraction]
    degree: int
    K: float
    formula: str


def _alt(n: int, k: int) -> int:
    return n // k - (n - 1) // k


SPECIAL_CASES: Dict[int, SpecialCase] = {c.case_id: c for c in [
    SpecialCase(1, "floor", 2, 2, lambda n: 2 * (n // 2) + 1, 1, 2, "2*floor(n/2)+1"),
    SpecialCase(2, "ceiling", 2, 2, lambda n: 2 * (n // 2), 1, 1, "2*floor(n/2)"),
    SpecialCase(3, "floor", 3, 2, lambda n: 2 * (n // 3) + 1, 1, 2, "2*floor(n/3)+1"),
    SpecialCase(4, "ceiling", 3, 2, lambda n: (2 * n) // 3, 1, 1, "floor(2n/3)"),
    SpecialCase(5, "floor", 4, 2, lambda n: -(-n // 2) + (-1) ** n, 1, 2, "ceil(n/2)+(-1)^n"),
    SpecialCase(6, "ceiling", 4, 2, lambda n: n // 2, 1, 1, "floor(n/2)"),
    SpecialCase(7, "floor", 2, 3, lambda n: Fraction(3 * n * (n + 1), 2) + _alt(n, 2), 2, 4,
                "3n(n+1)/2+floor(n/2)-floor((n-1)/2)"),
    SpecialCase(8, "ceiling", 2, 3, lambda n: Fraction(3 * n * (n - 1), 2) + _alt(n, 2), 2, 3,
                "3n(n-1)/2+floor(n/2)-floor((n-1)/2)"),
    SpecialCase(9, "floor", 3, 3, lambda n: n * (n + 1) + _alt(n, 3), 2, 3,
                "n(n+1)+floor(n/3)-floor((n-1)/3)"),
    SpecialCase(10, "ceiling", 3, 3, lambda n: n * (n - 1) + _alt(n, 3), 2, 2,
                "n(n-1)+floor(n/3)-floor((n-1)/3)"),
    SpecialCase(11, "floor", 4, 3, lambda n: (3 * n * (n + 1)) // 4 + _alt(n, 2), 2, 3,
                "floor(3n(n+1)/4)+floor(n/2)-floor((n-1)/2)"),
    SpecialCase(12, "floor", 4, 3, lambda n: (3 * n * (n - 1)) // 4 + _alt(n, 2), 2, 2,
                "floor(3n(n-1)/4)+floor(n/2)-floor((n-1)/2)"),
    SpecialCase(13, "floor", 2, 4, lambda n: n * (n + 1) * (2 * n + 1) + 2 * (n // 2) + 1, 3, 8,
                "n(n+1)(2n+1)+2*floor(n/2)+1"),
    SpecialCase(14, "floor", 2, 4, lambda n: (n - 1) * n * (2 * n - 1) + 2 * (n // 2), 3, 3,
                "(n-1)n(2n-1)+2*floor(n/2)"),
    SpecialCase(15, "floor", 2, 5,
                lambda n: Fraction(5, 2) * n * (n + 1) * (n * n + n + 1) + _alt(n, 2), 4, 16,
                "5/2 n(n+1)(n^2+n+1)+floor(n/2)-floor((n-1)/2)"),
    SpecialCase(16, "ceiling", 2, 5,
                lambda n: Fraction(5, 2) * (n - 1) * n * (n * n - n + 1) + _alt(n, 2), 4, 4,
                "5/2 (n-1)n(n^2-n+1)+floor(n/2)-floor((n-1)/2)"),
]}

# printed with the floor symbol but following the ceiling pattern of their neighbours
FLAVOR_AMBIGUOUS = (12, 14)


def _dirichlet_coefficients(spec: FCZetaSpec, J: int) -> List[int]:
    """Coefficients of ``j^(-s)``, ``j = 1..J``, of the series at ``t = 1``."""
    co = coefficients(spec, J)
    if spec.reduced:
        return co[1:J + 1]
    # definition form: (m + 1)^(-s), so j = m + 1
    return co[:J]


def _lhs_eval(spec: FCZetaSpec, M: int) -> SeriesEval:
    tail = "model" if spec.a.is_unit_fraction else "bound"
    return fc_zeta_equivalent(spec, M, tail)


def check_special_case(
    case_id: int,
    s_grid: Optional[Iterable[ComplexLike]] = None,
    conventions: Sequence[str] = ("reduced", "definition"),
    budget: Optional[int] = None,
    flavor: Optional[str] = None,
    perturb: complex = 0j,
) -> List[Verdict]:
    """Check one tabulated special case under each convention and each ``s``.

    ``flavor`` overrides the printed flavor (cases 12 and 14 are checked
    both as printed and with the ceiling reading).  ``perturb`` is added to
    every right-hand side (soundness self-test).
    """
    case = SPECIAL_CASES.get(case_id) if isinstance(case_id, int) else None
    if case is None:
        raise InvalidArgument(f"special case id must be 1..16, got {case_id!r}")
    flav = flavor or case.flavor
    M = _lab_budget(budget)
    if s_grid is None:
        s_grid = (case.q + 2, case.q + 3)
    s_list = [as_complex(s, "s") for s in s_grid]
    table = {J: [case.coeff(j) for j in range(1, J + 1)] for J in (M, 2 * M)}
    ident = f"special-{case_id}" + ("" if flav == case.flavor else f"-as-{flav}")
    out = []
    for conv in conventions:
        wit = None
        for s in s_list:
            levels = []
            for J in (M, 2 * M):
                spec = FCZetaSpec(flav, ExponentA.unit_fraction(case.q), case.b, s, 1, conv)
                if J == M:
                    wit = _first_mismatch(_dirichlet_coefficients(spec, J), table[J])
                lhs = _lhs_eval(spec, J)
                rv, rr = dirichlet_partial_sum(table[J], s)
                rb = rr + _envelope_tail(case.K, case.degree, s, J)
                levels.append((lhs.value, lhs.bound, rv + perturb, rb))
            params = {"case": case_id, "flavor": flav, "a": f"1/{case.q}", "b": str(case.b),
                      "s": s, "t": 1, "formula": case.formula, "coefficients_checked": M}
            note = "coefficients agree" if wit is None else "first coefficient mismatch at witness"
            out.append(_verdict(ident, params, levels, conv, wit, note))
    return out


def special_cases_report(
    ids: Iterable[int] = range(1, 17),
    s_grid: Optional[Iterable[ComplexLike]] = None,
    budget: Optional[int] = None,
) -> Tuple[List[Verdict], Dict[str, dict]]:
    """All special cases, both conventions; cases 12/14 also under the ceiling reading.

    Returns the verdicts and a summary of which reading/convention matches.
    """
    verdicts: List[Verdict] = []
    summary: Dict[str, dict] = {}
    for cid in ids:
        case = SPECIAL_CASES[cid]
        readings = [case.flavor] + (["ceiling"] if cid in FLAVOR_AMBIGUOUS else [])
        for flav in readings:
            vs = check_special_case(cid, s_grid, budget=budget, flavor=flav)
            verdicts.extend(vs)
            key = vs[0].identity_id
            matching = sorted({v.convention for v in vs if v.status == CONFIRMED
                               and all(w.status == CONFIRMED for w in vs if w.convention == v.convention)})
            summary[key] = {"printed_flavor": case.flavor, "checked_flavor": flav,
                            "matching_conventions": matching}
    return verdicts, summary


# -- deductions 4-7 ---------------------------------------------------------

def check_deduction(
    which: int,
    q: int,
    s_grid: Optional[Iterable[ComplexLike]] = None,
    t_grid: Optional[Iterable[ComplexLike]] = None,
    budget: Optional[int] = None,
    perturb: complex = 0j,
) -> List[Verdict]:
    """Closed zeta combination vs the directly summed series (``a = 1/q``, ``b = 1``).

    4/5 use the definition form over ``t_grid``; 6/7 use the reduced form at ``t = 1``.
    """
    if which not in (4, 5, 6, 7):
        raise InvalidArgument(f"deduction must be 4, 5, 6 or 7, got {which!r}")
    if not isinstance(q, int) or q < 1:
        raise InvalidArgument(f"q must be a positive integer, got {q!r}")
    N = 10 * _lab_budget(budget)
    if s_grid is None:
        s_grid = (q + 1.5, q + 2, complex(q + 2, 3))
    if which in (6, 7):
        t_list = [1 + 0j]
    else:
        t_list = [as_complex(t, "t") for t in (t_grid if t_grid is not None else (1, 1.5, 2.5))]
    flavor = "floor" if which in (4, 6) else "ceiling"
    conv = "definition" if which in (4, 5) else "reduced"
    a = ExponentA.unit_fraction(q)
    out = []
    for s in s_grid:
        s = as_complex(s, "s")
        if s.real <= q:
            raise DomainError(f"need Re(s) > q = {q}, got s = {s}")
        for t in t_list:
            if which == 4:
                rhs = fzeta_closed(q, s, t)
            elif which == 5:
                rhs = czeta_closed(q, s, t)
            elif which == 6:
                rhs = fzeta_reduced_closed(q, s)
            else:
                rhs = czeta_reduced_closed(q, s)
            levels = []
            for n in (N, 2 * N):
                lhs = fc_zeta_direct(FCZetaSpec(flavor, a, 1, s, t, conv), n, "model")
                levels.append((lhs.value, lhs.bound, rhs.value + perturb, rhs.est_error))
            params = {"deduction": which, "q": q, "s": s, "t": t, "terms": N}
            out.append(_verdict(f"deduction-{which}", params, levels, conv))
    return out


# -- pole differences -------------------------------------------------------

def check_pole_difference(
    q: int,
    t_grid: Optional[Iterable[ComplexLike]] = None,
    budget: Optional[int] = None,
    perturb: complex = 0j,
) -> List[Verdict]:
    """The reduced difference at ``s = q`` against its claimed value, and the
    definition-form difference (both orientations) against the displayed
    ``C - F`` combination."""
    if not isinstance(q, int) or q < 2:
        raise InvalidArgument(f"q must be an integer >= 2, got {q!r}")
    M = _lab_budget(budget)
    out = []
    rhs = pole_difference_reduced(q)
    levels = []
    for m in (M, 2 * M):
        lhs = difference_series(q, q, 1, "reduced", "F-C", m, "model")
        levels.append((lhs.value, lhs.bound, rhs.value + perturb, rhs.est_error))
    out.append(_verdict("pole-reduced", {"q": q, "s": q, "t": 1, "orientation": "F-C", "terms": M},
                        levels, "reduced"))
    for t in (t_grid if t_grid is not None else (1, 1.5)):
        t = as_complex(t, "t")
        rhs = pole_difference_definition(q, t)
        for orientation in ("C-F", "F-C"):
            levels = []
            for m in (M, 2 * M):
                lhs = difference_series(q, q, t, "definition", orientation, m, "model")
                levels.append((lhs.value, lhs.bound, rhs.value + perturb, rhs.est_error))
            params = {"q": q, "s": q, "t": t, "orientation": orientation, "terms": M}
            out.append(_verdict("pole-definition", params, levels, "definition",
                                note="displayed orientation" if orientation == "C-F" else "reversed orientation"))
    return out


# -- conjectured equivalents for b = 2 --------------------------------------

def problem42_coefficient(part: str, q: int, m: int) -> int:
    """The conjectured coefficient of ``m^(-s)`` for ``b = 2``, ``a = 1/q``, read literally."""
    if part not in ("I", "II"):
        raise InvalidArgument(f"part must be 'I' or 'II', got {part!r}")
    lo = -(-q // 2) - q // 2
    upper = m if part == "I" else m - 1
    acc = Fraction(0)
    for t in range(lo, q - 1):
        if (q - t) % 2:
            continue  # (1 + (-1)^(q-t)) / 2 vanishes
        acc += sum(i ** t for i in range(1, upper + 1))
    acc *= Fraction(q * (q - 1), 2)
    if q % 2 == 0:
        extra = 2 * (m // 2) + (1 if part == "I" else 0)
    else:
        extra = m // 2 - (m - 1) // 2
    val = acc + extra
    return int(val) if val.denominator == 1 else val


def _problem42_coefficients(part: str, q: int, J: int) -> List:
    # running power sums keep this linear in J
    lo = -(-q // 2) - q // 2
    ts = [t for t in range(lo, q - 1) if (q - t) % 2 == 0]
    sums = {t: 0 for t in ts}
    weight = Fraction(q * (q - 1), 2)
    out = []
    for m in range(1, J + 1):
        upto = m if part == "I" else m - 1
        if upto >= 1:
            if part == "I" or m >= 2:
                for t in ts:
                    sums[t] += upto ** t
        if q % 2 == 0:
            extra = 2 * (m // 2) + (1 if part == "I" else 0)
        else:
            extra = m // 2 - (m - 1) // 2
        val = weight * sum(sums.values()) + extra
        out.append(int(val) if val.denominator == 1 else val)
    return out


def check_problem42(
    part: str,
    q: int,
    s_grid: Optional[Iterable[ComplexLike]] = None,
    budget: Optional[int] = None,
    perturb: complex = 0j,
) -> List[Verdict]:
    """Conjectured coefficient series vs the reduced ``b = 2`` series (floor for I, ceiling for II)."""
    if part not in ("I", "II"):
        raise InvalidArgument(f"part must be 'I' or 'II', got {part!r}")
    if not isinstance(q, int) or q < 2:
        raise InvalidArgument(f"q must be an integer >= 2, got {q!r}")
    M = _lab_budget(budget)
    flavor = "floor" if part == "I" else "ceiling"
    if s_grid is None:
        s_grid = (q + 2, q + 3)
    conj = {J: _problem42_coefficients(part, q, J) for J in (M, 2 * M)}
    # c_m <= q(q-1)^2/2 m^(q-1) + 2m + 1
    K = q * (q - 1) ** 2 / 2 + 3
    out = []
    for s in s_grid:
        s = as_complex(s, "s")
        if s.real <= q:
            raise DomainError(f"need Re(s) > q = {q}, got s = {s}")
        levels = []
        wit = None
        for J in (M, 2 * M):
            spec = FCZetaSpec(flavor, ExponentA.unit_fraction(q), 2, s, 1, "reduced")
            if J == M:
                wit = _first_mismatch(_dirichlet_coefficients(spec, J), conj[J])
            lhs = _lhs_eval(spec, J)
            rv, rr = dirichlet_partial_sum(conj[J], s)
            levels.append((lhs.value, lhs.bound, rv + perturb, rr + _envelope_tail(K, q - 1, s, J)))
        params = {"part": part, "q": q, "b": 2, "s": s, "coefficients_checked": M}
        out.append(_verdict(f"problem42-{part}", params, levels, "reduced", wit,
                            "coefficients agree" if wit is None else "first coefficient mismatch at witness"))
    return out


# -- convergence race -------------------------------------------------------

@dataclass(frozen=True)
class RaceReport:
    spec: FCZetaSpec
    digits: int
    terms_direct: Optional[int]
    terms_equivalent: Optional[int]
    winner: Optional[str]
    status: str
    direct: Optional[SeriesEval] = None
    equivalent: Optional[SeriesEval] = None
    note: str = ""

    @property
    def ratio(self) -> Optional[float]:
        if self.terms_direct and self.terms_equivalent:
            return self.terms_direct / self.terms_equivalent
        return None


def _min_budget(bound: Callable[[int], float], target: float, cap: int) -> Optional[int]:
    """Smallest ``n <= cap`` with ``bound(n) <= target`` (bound nonincreasing once finite)."""
    hi = 1
    while bound(hi) > target:
        if hi >= cap:
            return None
        hi = min(cap, hi * 2)
    lo = hi // 2 + 1 if hi > 1 else 1
    while lo < hi:
        mid = (lo + hi) // 2
        if bound(mid) <= target:
            hi = mid
        else:
            lo = mid + 1
    return hi


def convergence_race(
    spec: FCZetaSpec,
    digits: int,
    direct_cap: int = 10 ** 8,
    equivalent_cap: int = 10 ** 7,
    evaluate: bool = True,
) -> RaceReport:
    """Minimal term counts for each series to reach ``0.5 * 10^-digits`` by its contract bound."""
    if not isinstance(digits, int) or not 1 <= digits <= 12:
        raise InvalidArgument(f"digits must be an integer in 1..12, got {digits!r}")
    target = 0.5 * 10.0 ** (-digits)
    # the half-ulp-scale rounding bound is negligible next to any target here
    n_dir = _min_budget(lambda n: direct_tail_bound(spec, n), target, direct_cap)
    n_eq = _min_budget(lambda m: equivalent_tail_bound(spec, m), target, equivalent_cap)
    if n_dir is None or n_eq is None:
        missing = "direct" if n_dir is None else "equivalent"
        return RaceReport(spec, digits, n_dir, n_eq, None, INCONCLUSIVE,
                          note=f"{missing} series needs more than its term cap")
    d = e = None
    note = "term counts only; series not evaluated"
    if evaluate:
        d = fc_zeta_direct(spec, n_dir)
        e = fc_zeta_equivalent(spec, n_eq)
        if d.bound > 2 * target or e.bound > 2 * target:
            return RaceReport(spec, digits, n_dir, n_eq, None, INCONCLUSIVE, d, e,
                              "rounding bound spoiled the target")
        if abs(d.value - e.value) > d.bound + e.bound:
            return RaceReport(spec, digits, n_dir, n_eq, None, REFUTED, d, e,
                              "the two series disagree beyond their bounds")
        note = "both series evaluated; values agree within bounds"
    # terms_used counts n = 0 (definition) or m = 0 too
    t_dir = n_dir + (0 if spec.reduced else 1)
    t_eq = n_eq + (0 if spec.reduced else 1)
    winner = "equivalent" if t_eq < t_dir else "direct" if t_dir < t_eq else "tie"
    return RaceReport(spec, digits, t_dir, t_eq, winner, CONFIRMED if evaluate else INCONCLUSIVE,
                      d, e, note)


# -- growth exponent --------------------------------------------------------

@dataclass(frozen=True)
class GrowthReport:
    p: int
    q: int
    n_grid: Tuple[int, ...]
    counts: Tuple[int, ...]
    slope: float
    expected: float
    status: str

    def to_dict(self) -> dict:
        d = asdict(self)
        d["counts"] = [str(c) for c in self.counts]
        return d


def _lattice_count(n: int, p: int, q: int) -> int:
    """``#{(i, j): 1 <= i <= n, j >= 1, j^(q+1) <= i^p} = sum_i floor(i^(p/(q+1)))``."""
    alpha = Fraction(p, q + 1)
    if alpha <= 1:
        return sum_floor(n, alpha)
    return sum(int_root_floor(i ** p, q + 1) for i in range(1, n + 1))


def growth_check_problem44(
    p: int,
    q: int,
    n_grid: Optional[Sequence[int]] = None,
    tolerance: float = 0.05,
) -> GrowthReport:
    """Fit ``log S_n`` against ``log n`` over the upper half of ``n_grid``."""
    if not (isinstance(p, int) and p >= 1 and isinstance(q, int) and q >= 0):
        raise InvalidArgument(f"need integers p >= 1, q >= 0, got {p!r}, {q!r}")
    if n_grid is None:
        n_grid = [int(round(x)) for x in np.geomspace(10 ** 3, 10 ** 6, 13)]
    grid = tuple(int(n) for n in n_grid)
    if len(grid) < 4 or any(b <= a for a, b in zip(grid, grid[1:])) or grid[0] < 1:
        raise InvalidArgument("n_grid must be strictly increasing positive integers (at least 4)")
    if grid[-1] > 10 ** 6:
        raise InvalidArgument("n_grid maximum is 10^6")
    counts = tuple(_lattice_count(n, p, q) for n in grid)
    half = len(grid) // 2
    x = np.log(np.array(grid[half:], dtype=float))
    y = np.log(np.array([float(c) for c in counts[half:]]))
    slope = float(np.polyfit(x, y, 1)[0])
    expected = (p + q + 1) / (q + 1)
    status = CONFIRMED if abs(slope - expected) <= tolerance else REFUTED
    return GrowthReport(p, q, grid, counts, slope, expected, status)


# -- soundness --------------------------------------------------------------

def soundness_check(verdict_fn: Callable[..., List[Verdict]], *args, delta: float = 1e-4,
                    **kwargs) -> List[Tuple[Verdict, Verdict]]:
    """Re-run a check with ``delta`` added to each right-hand side.

    Returns (original, perturbed) pairs for every originally CONFIRMED verdict;
    a sound checker reports each perturbed one as REFUTED.
    """
    base = verdict_fn(*args, **kwargs)
    bumped = verdict_fn(*args, perturb=delta, **kwargs)
    return [(b0, b1) for b0, b1 in zip(base, bumped) if b0.status == CONFIRMED]

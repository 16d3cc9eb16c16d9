"""Acceptance suite: one test per criterion, each recording a PASS/FAIL line.

The lines are printed as each test finishes (visible with ``-s``) and again
in the terminal summary.  Run standalone with ``python tests/test_acceptance.py``.
"""
import cmath
import itertools
import math
import time
from fractions import Fraction

import pytest

from floorzeta import fc_zeta as fz
from floorzeta import floor_sums as fs
from floorzeta import identity_lab as lab
from floorzeta.exact_arith import ExponentA, ceil_pow, floor_pow
from floorzeta.zeta_numeric import hurwitz_zeta, riemann_zeta

RESULTS = {}
C, R, I = lab.CONFIRMED, lab.REFUTED, lab.INCONCLUSIVE


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    RESULTS[n] = line
    print(line)
    assert ok, line


def prefix_brute(n, a, p, flavor):
    """Literal running sums of floor/ceil(i^a)^p for i = 1..n."""
    pw = floor_pow if flavor == "floor" else ceil_pow
    out, acc = [0], 0
    for i in range(1, n + 1):
        acc += pw(i, a) ** p
        out.append(acc)
    return out


def test_criterion_01_formula_equivalence():
    t0 = time.perf_counter()
    bad = []
    for a in ("1", "1/2", "1/3", "2/3", "3/4", "1/5"):
        ea = ExponentA.of(a)
        for flavor, fn in (("floor", fs.sum_floor), ("ceil", fs.sum_ceil)):
            ref = prefix_brute(2000, ea, 1, flavor)
            bad += [(a, flavor, n) for n in range(1, 2001) if fn(n, ea) != ref[n]]
    dt = time.perf_counter() - t0
    record(1, not bad and dt <= 60, f"{2 * 6 * 2000} exact comparisons, {len(bad)} mismatches, {dt:.1f}s")


def test_criterion_02_generalized_faulhaber():
    t0 = time.perf_counter()
    bad = []
    for a in ("1/2", "1/3", "2/3"):
        ea = ExponentA.of(a)
        for p in range(1, 5):
            for flavor, fn in (("floor", fs.gen_faulhaber_floor), ("ceil", fs.gen_faulhaber_ceil)):
                ref = prefix_brute(1000, ea, p, flavor)
                bad += [(a, p, flavor, n) for n in range(1, 1001) if fn(n, ea, p) != ref[n]]
                if ea.u == 1:
                    closed = fs.gen_faulhaber_floor_closed if flavor == "floor" else fs.gen_faulhaber_ceil_closed
                    bad += [(a, p, flavor, n, "closed") for n in range(1, 1001)
                            if closed(n, ea.v, p) != ref[n]]
    dt = time.perf_counter() - t0
    record(2, not bad and dt <= 120, f"{len(bad)} mismatches, {dt:.1f}s")


def test_criterion_03_closed_form_scaling():
    details, ok = [], True
    for n in (10 ** 9, 10 ** 12):
        for closed, poly in ((fs.sum_floor_closed, fs.sqrt_floor_poly), (fs.sum_ceil_closed, fs.sqrt_ceil_poly)):
            t0 = time.perf_counter()
            x = closed(n, 2)
            y = poly(n)
            dt = time.perf_counter() - t0
            ok = ok and x == y and dt <= 1.0
            details.append(f"{dt * 1e3:.2f}ms")
    record(3, ok, "n = 1e9, 1e12 floor/ceil agree exactly; times " + ", ".join(details))


def test_criterion_04_deduction_1_corollary():
    bad = []
    for q in range(1, 6):
        a = ExponentA(1, q)
        acc = 0
        for n in range(1, 2001):
            acc += ceil_pow(n, a) - floor_pow(n, a)
            if acc != n - floor_pow(n, a):
                bad.append((q, n))
        lhs, rhs = fs.diff_identity_unit(2000, q)
        if lhs != rhs:
            bad.append((q, "api"))
    record(4, not bad, f"n <= 2000, q <= 5, {len(bad)} mismatches")


def test_criterion_05_zeta_engine():
    e2 = abs(riemann_zeta(2).value - math.pi ** 2 / 6)
    e4 = abs(riemann_zeta(4).value - math.pi ** 4 / 90)
    worst = 0.0
    for re, im, t in itertools.product((1.5, 2, 3, 5, 8), (0, 1, 10), (0.5, 1, 2.5)):
        s = complex(re, im)
        z = hurwitz_zeta(s, t).value
        resid = abs(hurwitz_zeta(s, t + 1).value - (z - cmath.exp(-s * math.log(t))))
        worst = max(worst, resid / (1 + abs(z)))
    ok = e2 <= 1e-12 and e4 <= 1e-12 and worst <= 1e-11
    record(5, ok, f"|zeta(2) err| {e2:.1e}, |zeta(4) err| {e4:.1e}, worst shift residual {worst:.1e}")


DUAL_GRID = list(itertools.product(("floor", "ceiling"), ("1", "1/2", "1/3"),
                                   ("1", "2", "3", "1/2"), (1.0, 2.5), (1, 2)))


def test_criterion_06_dual_series():
    t0 = time.perf_counter()
    failures, worst_ratio = [], 0.0
    for flavor, a, b, ds, t in DUAL_GRID:
        ea = ExponentA.of(a)
        sp = fz.FCZetaSpec(flavor, ea, Fraction(b), ea.v + ds, t)
        d = fz.fc_zeta_direct(sp)
        e = fz.fc_zeta_equivalent(sp)
        allowed = d.bound + e.bound
        gap = abs(d.value - e.value)
        if not (math.isfinite(allowed) and gap <= allowed):
            failures.append((flavor, a, b, ds, t))
        worst_ratio = max(worst_ratio, gap / allowed if allowed else 0.0)
    red = 0.0
    for flavor in ("floor", "ceiling"):
        for s, t in ((2, 1), (3.5, 2), (complex(2.5, 4), 0.5)):
            sp = fz.FCZetaSpec(flavor, 1, 1, s, t)
            ref = hurwitz_zeta(s, t).value
            for ev in (fz.fc_zeta_direct(sp, tail="model"), fz.fc_zeta_equivalent(sp, tail="model")):
                red = max(red, abs(ev.value - ref))
    dt = time.perf_counter() - t0
    ok = not failures and red <= 1e-10
    record(6, ok, f"{len(DUAL_GRID)} specs, {len(failures)} outside bounds (max gap/bound {worst_ratio:.2f}); "
                  f"a=b=1 vs Hurwitz {red:.1e}; {dt:.1f}s")


def test_criterion_07_deductions_6_7():
    vs = []
    for which in (6, 7):
        for q in (2, 3):
            vs += lab.check_deduction(which, q, [q + 1.5, q + 2], [1])
    ok = all(v.status == C and v.lhs_bound + v.rhs_bound <= 1e-6 for v in vs)
    ex = [v for v in vs if v.identity_id == "deduction-6" and v.params["q"] == 2 and v.params["s"] == 4][0]
    true_value = 2 * riemann_zeta(3).value.real + riemann_zeta(4).value.real
    ok = ok and abs(ex.lhs - true_value) <= 1e-6 and abs(ex.lhs - 3.4864370281) <= 1e-6
    worst = max(v.lhs_bound + v.rhs_bound for v in vs)
    record(7, ok, f"{len(vs)} verdicts all CONFIRMED, worst combined bound {worst:.1e}; "
                  f"q=2 s=4 LHS {ex.lhs.real:.10f}")


def test_criterion_08_pole_difference():
    ok, parts = True, []
    for q, target in ((2, math.pi ** 2 / 3), (3, math.pi ** 2)):
        ev = fz.pole_difference_reduced_lhs(q)
        err = abs(ev.value - target)
        # raw partial sums (no tail) close in on the target
        gaps = [abs(fz.pole_difference_reduced_lhs(q, M, "bound").value - target) for M in (10 ** 2, 10 ** 3, 10 ** 4)]
        ok = ok and err <= 1e-6 and ev.bound <= 1e-6 and gaps[0] > gaps[1] > gaps[2]
        parts.append(f"q={q} err {err:.1e} (bound {ev.bound:.1e})")
    record(8, ok, "; ".join(parts))


def _lab_reports(budget=None):
    out = {}
    out["special"] = lab.special_cases_report(budget=budget)[0]
    out["deduction"] = [v for w in (4, 5) for q in range(1, 5) for v in lab.check_deduction(w, q, budget=budget)]
    out["eq9"] = [v for q in (2, 3, 4) for v in lab.check_pole_difference(q, budget=budget)]
    out["p42"] = [v for part in ("I", "II") for q in range(2, 6) for v in lab.check_problem42(part, q, budget=budget)]
    return out


BUDGET_KEYS = {"coefficients_checked", "terms", "budget"}


def _verdict_key(v):
    return v.identity_id, v.convention, {k: x for k, x in v.params.items() if k not in BUDGET_KEYS}


def test_criterion_09_identity_lab():
    t0 = time.perf_counter()
    problems = []
    base = _lab_reports()
    for name, vs in base.items():
        problems += [(name, v.identity_id, v.params) for v in vs if v.status == I]

    def find(vs, ident, **params):
        return [v for v in vs if v.identity_id == ident and all(v.params.get(k) == x for k, x in params.items())]

    s1 = [v for v in base["special"] if v.identity_id in ("special-1", "special-2") and v.convention == "reduced"]
    if not (s1 and all(v.status == C and v.params["coefficients_checked"] >= 10 ** 4 for v in s1)):
        problems.append("special 1/2 not confirmed with 1e4 coefficients")
    d5 = find(base["deduction"], "deduction-5", q=2, t=1)
    if not (d5 and all(v.status == R for v in d5)):
        problems.append("deduction 5 q=2 not refuted")
    eq9 = find(base["eq9"], "pole-definition", q=2, t=1)
    if not (eq9 and all(v.status == R and v.rhs == 0 for v in eq9)
            and all(abs(v.lhs.real + (math.pi ** 2 / 3 - 2)) <= 1e-9 for v in eq9 if v.params["orientation"] == "C-F")):
        problems.append("eq9 q=2 t=1 witness")
    p42 = find(base["p42"], "problem42-I", q=2)
    if not (p42 and all(v.status == R and v.witness == 1 for v in p42)):
        problems.append("problem 4.2 part I q=2 witness")

    doubled = _lab_reports(2 * lab._lab_budget(None))
    flips = 0
    for name in base:
        for a, b in zip(base[name], doubled[name]):
            assert _verdict_key(a) == _verdict_key(b)
            if a.status != b.status:
                flips += 1
    if flips:
        problems.append(f"{flips} verdicts changed under doubled budget")
    counts = {k: len(vs) for k, vs in base.items()}
    dt = time.perf_counter() - t0
    record(9, not problems, f"reports {counts}, 0 INCONCLUSIVE required, {flips} flips at 2x budget; "
                            f"{dt:.1f}s" + (f"; problems {problems}" if problems else ""))


def test_criterion_10_convergence_race():
    r = lab.convergence_race(fz.FCZetaSpec("floor", "1/2", 1, 4, 1), 6)
    ok = (r.status == C and r.terms_direct >= 10 * r.terms_equivalent
          and r.direct.tail_bound <= 0.5e-6 and r.equivalent.tail_bound <= 0.5e-6
          and abs(r.direct.value - r.equivalent.value) <= r.direct.bound + r.equivalent.bound)
    record(10, ok, f"direct {r.terms_direct} terms, equivalent {r.terms_equivalent} terms, "
                   f"ratio {r.ratio:.0f}, status {r.status}")


def test_criterion_11_problem44():
    parts, ok = [], True
    for p, q in ((1, 0), (1, 1), (2, 1), (2, 2)):
        g = lab.growth_check_problem44(p, q)
        expected = (p + q + 1) / (q + 1)
        ok = ok and abs(g.slope - expected) <= 0.05 and max(g.n_grid) <= 10 ** 6
        parts.append(f"({p},{q}) {g.slope:.4f} vs {expected:.4f}")
    record(11, ok, "; ".join(parts))


def test_criterion_12_checker_soundness():
    checks = [(lab.check_special_case, (k, None, ("reduced",))) for k in range(1, 17) if k not in lab.FLAVOR_AMBIGUOUS]
    checks += [(lab.check_special_case, (k, None, ("reduced",), None, "ceiling")) for k in lab.FLAVOR_AMBIGUOUS]
    checks += [(lab.check_deduction, (w, q)) for w in (4, 5, 6, 7) for q in (1, 2)]
    checks += [(lab.check_pole_difference, (q, [1])) for q in (2, 3, 4)]
    checks += [(lab.check_problem42, (part, 3)) for part in ("I", "II")]
    total = flipped = 0
    for fn, args in checks:
        for before, after in lab.soundness_check(fn, *args):
            total += 1
            flipped += after.status == R
    record(12, total > 0 and flipped == total, f"{flipped}/{total} CONFIRMED verdicts flip to REFUTED under 1e-4")


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q", "-s"]))

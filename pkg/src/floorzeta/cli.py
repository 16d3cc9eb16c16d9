"""Command-line front end: ``floorzeta <command> ...``.

Output is JSON by default (``--csv`` for one row per record).  Exact values are
always printed as decimal integer or fraction strings; complex numbers as
``{"re", "im", "est_error"}``.  Exit codes: 0 ok, 2 usage, 3 domain error,
4 refuted identity under ``--strict``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import random
import sys
import time
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Sequence

from . import __version__
from .bernoulli import bernoulli_number, bernoulli_number_paper_oracle
from .errors import BudgetExceeded, DomainError, FloorZetaError, InvalidArgument
from .exact_arith import ExponentA, parse_fraction
from .fc_zeta import (
    FCZetaSpec,
    SeriesEval,
    czeta_closed,
    czeta_reduced_closed,
    default_budgets,
    fc_zeta_direct,
    fc_zeta_equivalent,
    fzeta_closed,
    fzeta_reduced_closed,
)
from .floor_sums import SumSpec, evaluate, normalize_flavor
from .identity_lab import (
    REFUTED,
    GrowthReport,
    RaceReport,
    Verdict,
    check_deduction,
    check_pole_difference,
    check_problem42,
    check_special_case,
    convergence_race,
    growth_check_problem44,
    SPECIAL_CASES,
    FLAVOR_AMBIGUOUS,
)
from .zeta_numeric import ZetaResult, hurwitz_zeta, riemann_zeta

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_DOMAIN = 3
EXIT_REFUTED = 4


class _UsageError(Exception):
    pass


# -- token grammar ----------------------------------------------------------

def parse_complex(token: str) -> complex:
    """``"2"``, ``"1.5,-3"`` (re,im) or a Python complex literal like ``"2+1j"``."""
    token = token.strip()
    try:
        if "," in token:
            re_s, im_s = token.split(",", 1)
            return complex(float(re_s), float(im_s))
        if "j" in token:
            return complex(token)
        return complex(float(parse_fraction(token)) if "/" in token else float(token), 0.0)
    except (ValueError, InvalidArgument) as exc:
        raise argparse.ArgumentTypeError(f"not a complex number: {token!r}") from exc


def format_complex(z: complex) -> str:
    """Inverse of :func:`parse_complex`."""
    return f"{z.real!r},{z.imag!r}" if z.imag else repr(z.real)


def _fraction_arg(token: str) -> Fraction:
    try:
        return parse_fraction(token)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _exponent_arg(token: str) -> ExponentA:
    try:
        return ExponentA.of(token)
    except InvalidArgument as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(token: str) -> List[int]:
    try:
        return [int(x) for x in token.split(",") if x.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers: {token!r}") from exc


def _complex_list(token: str) -> List[complex]:
    # ';' separates points so that 're,im' stays usable
    return [parse_complex(x) for x in token.split(";") if x.strip()]


# -- record conversion ------------------------------------------------------

def _cjson(z: complex, err: Optional[float] = None) -> Dict[str, Any]:
    d: Dict[str, Any] = {"re": z.real, "im": z.imag}
    if err is not None:
        d["est_error"] = err
    return d


def _jsonable(x: Any) -> Any:
    if isinstance(x, bool) or x is None or isinstance(x, (str, float)):
        return x
    if isinstance(x, int):
        return str(x)
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, complex):
        return _cjson(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)


def _series_record(ev: SeriesEval) -> Dict[str, Any]:
    return {
        "value": _cjson(ev.value, ev.bound),
        "terms_used": str(ev.terms_used),
        "tail_bound": ev.tail_bound,
        "round_bound": ev.round_bound,
        "method": ev.method,
        "tail_mode": ev.tail_mode,
        "conclusive": ev.conclusive,
    }


def _zeta_record(z: ZetaResult, method: str = "closed") -> Dict[str, Any]:
    return {"value": _cjson(z.value, z.est_error), "method": method,
            "N_used": str(z.N_used), "K_used": str(z.K_used)}


def _verdict_record(v: Verdict) -> Dict[str, Any]:
    return {
        "identity_id": v.identity_id,
        "params": _jsonable(v.params),
        "convention": v.convention,
        "lhs": _cjson(v.lhs, v.lhs_bound),
        "rhs": _cjson(v.rhs, v.rhs_bound),
        "discrepancy": v.discrepancy,
        "status": v.status,
        "witness": None if v.witness is None else str(v.witness),
        "note": v.note,
    }


def _race_record(r: RaceReport) -> Dict[str, Any]:
    rec = {
        "spec": r.spec.describe(),
        "digits": str(r.digits),
        "terms_direct": None if r.terms_direct is None else str(r.terms_direct),
        "terms_equivalent": None if r.terms_equivalent is None else str(r.terms_equivalent),
        "winner": r.winner,
        "status": r.status,
        "note": r.note,
    }
    if r.direct is not None:
        rec["direct"] = _series_record(r.direct)
    if r.equivalent is not None:
        rec["equivalent"] = _series_record(r.equivalent)
    return rec


def _growth_record(g: GrowthReport) -> Dict[str, Any]:
    return {"p": str(g.p), "q": str(g.q), "n_grid": [str(n) for n in g.n_grid],
            "counts": [str(c) for c in g.counts], "slope": g.slope,
            "expected": g.expected, "status": g.status}


def _sort_key(rec: Dict[str, Any]) -> str:
    return json.dumps({k: rec.get(k) for k in ("identity_id", "params", "convention", "p", "q", "spec")},
                      sort_keys=True)


# -- commands ---------------------------------------------------------------

def _cmd_bernoulli(args) -> Dict[str, Any]:
    if args.j < 0:
        raise InvalidArgument("--j must be nonnegative")
    js = range(args.j + 1) if args.all else [args.j]
    results = []
    for j in js:
        rec = {"j": str(j), "value": str(bernoulli_number(j))}
        if args.oracle:
            oracle = bernoulli_number_paper_oracle(j)
            rec["oracle"] = str(oracle)
            rec["agree"] = oracle == bernoulli_number(j)
        results.append(rec)
    return {"params": {"j": str(args.j), "oracle": args.oracle, "all": args.all}, "results": results}


def _cmd_sum(args, p: int) -> Dict[str, Any]:
    spec = SumSpec(args.n, args.a, p, normalize_flavor(args.flavor))
    res = evaluate(spec, args.method)
    params = {"flavor": spec.flavor, "n": str(args.n), "a": str(args.a), "p": str(p),
              "method": args.method}
    return {"params": params,
            "results": [{"value": str(res.value), "method": res.method, "work": str(res.work)}]}


def _cmd_zeta(args) -> Dict[str, Any]:
    if args.kind == "riemann":
        z = riemann_zeta(args.s)
    else:
        z = hurwitz_zeta(args.s, args.t)
    params = {"kind": args.kind, "s": format_complex(args.s),
              "t": format_complex(args.t) if args.kind == "hurwitz" else None}
    return {"params": params, "results": [_zeta_record(z, "euler-maclaurin")]}


def _cmd_fc(args, flavor: str) -> Dict[str, Any]:
    spec = FCZetaSpec(flavor, args.a, args.b, args.s, args.t, args.convention)
    direct_budget, eq_budget = default_budgets()
    if args.method == "closed":
        if not spec.a.is_unit_fraction or spec.b != 1:
            raise InvalidArgument("the closed form needs a = 1/q and b = 1")
        q = spec.a.v
        if spec.reduced:
            z = (fzeta_reduced_closed if flavor == "floor" else czeta_reduced_closed)(q, spec.s)
        else:
            z = (fzeta_closed if flavor == "floor" else czeta_closed)(q, spec.s, spec.t)
        rec = _zeta_record(z)
        rec["note"] = "displayed zeta combination; see the identity suite for its verdict"
    elif args.method == "direct":
        rec = _series_record(fc_zeta_direct(spec, args.terms or direct_budget, args.tail))
    else:
        rec = _series_record(fc_zeta_equivalent(spec, args.terms or eq_budget, args.tail))
    params = spec.describe()
    params.update({"method": args.method, "tail": args.tail,
                   "terms": None if args.terms is None else str(args.terms)})
    return {"params": params, "results": [rec]}


def _shuffled(items: list, seed: Optional[int]) -> list:
    items = list(items)
    if seed is not None:
        random.Random(seed).shuffle(items)
    return items


def _cmd_identity(args) -> Dict[str, Any]:
    suite = args.suite
    budget = args.terms
    verdicts: List[Verdict] = []
    results: List[Dict[str, Any]] = []
    params: Dict[str, Any] = {"suite": suite, "terms": None if budget is None else str(budget)}
    s_grid = args.s
    if suite == "special-cases":
        ids = args.ids or list(range(1, 17))
        jobs = []
        for cid in ids:
            if cid not in SPECIAL_CASES:
                raise InvalidArgument(f"special case id must be 1..16, got {cid}")
            jobs.append((cid, SPECIAL_CASES[cid].flavor))
            if cid in FLAVOR_AMBIGUOUS:
                jobs.append((cid, "ceiling"))
        for cid, flav in _shuffled(jobs, args.seed):
            verdicts.extend(check_special_case(cid, s_grid, budget=budget, flavor=flav))
        params["ids"] = [str(i) for i in ids]
    elif suite == "deductions":
        which = args.which or [4, 5, 6, 7]
        qs = args.q or [1, 2, 3, 4]
        jobs = [(w, q) for w in which for q in qs]
        for w, q in _shuffled(jobs, args.seed):
            grid = s_grid if s_grid is not None else None
            verdicts.extend(check_deduction(w, q, grid, args.t, budget))
        params.update({"which": [str(w) for w in which], "q": [str(q) for q in qs]})
    elif suite == "poles":
        qs = args.q or [2, 3, 4]
        for q in _shuffled(qs, args.seed):
            verdicts.extend(check_pole_difference(q, args.t, budget))
        params["q"] = [str(q) for q in qs]
    elif suite == "p42":
        qs = args.q or [2, 3, 4, 5]
        parts = [args.part] if args.part else ["I", "II"]
        for part, q in _shuffled([(p, q) for p in parts for q in qs], args.seed):
            verdicts.extend(check_problem42(part, q, s_grid, budget))
        params.update({"q": [str(q) for q in qs], "parts": parts})
    elif suite == "p44":
        pairs = [(1, 0), (1, 1), (2, 1), (2, 2)]
        if args.p is not None or args.q:
            pairs = [(p, q) for p in ([args.p] if args.p is not None else [1, 2])
                     for q in (args.q or [0, 1, 2])]
        grid = args.n_grid
        for p, q in _shuffled(pairs, args.seed):
            results.append(_growth_record(growth_check_problem44(p, q, grid)))
        params["pairs"] = [[str(p), str(q)] for p, q in pairs]
    elif suite == "race":
        specs = [FCZetaSpec("floor", "1/2", 1, 4, 1), FCZetaSpec("ceiling", "1/2", 1, 4, 1),
                 FCZetaSpec("floor", "1", 1, 3, 1), FCZetaSpec("ceiling", "1/3", 2, 4, 1)]
        for spec in _shuffled(specs, args.seed):
            results.append(_race_record(convergence_race(spec, args.digits)))
    else:  # pragma: no cover - argparse restricts choices
        raise InvalidArgument(f"unknown suite {suite!r}")
    out: Dict[str, Any] = {"params": params,
                           "results": sorted(results, key=_sort_key)}
    if suite not in ("p44", "race"):
        out["verdicts"] = sorted((_verdict_record(v) for v in verdicts), key=_sort_key)
        counts: Dict[str, int] = {}
        for v in verdicts:
            counts[v.status] = counts.get(v.status, 0) + 1
        out["results"] = [{"summary": {k: str(counts[k]) for k in sorted(counts)}}]
    return out


def _cmd_race(args) -> Dict[str, Any]:
    spec = FCZetaSpec(args.flavor, args.a, args.b, args.s, args.t, args.convention)
    report = convergence_race(spec, args.digits, evaluate=not args.no_eval)
    return {"params": {**spec.describe(), "digits": str(args.digits)},
            "results": [_race_record(report)]}


def _selftest_checks() -> List[Dict[str, Any]]:
    from . import floor_sums as fs
    from .bernoulli import faulhaber_sum

    checks: List[tuple] = [
        ("sum_floor(10,1/2)", lambda: fs.sum_floor(10, "1/2"), 19),
        ("sum_ceil(10,1/2)", lambda: fs.sum_ceil(10, "1/2"), 26),
        ("sum_floor(10,2/3)", lambda: fs.sum_floor(10, "2/3"), fs.brute_sum(10, "2/3")),
        ("gen_faulhaber_floor(10,1/2,2)", lambda: fs.gen_faulhaber_floor(10, "1/2", 2), 41),
        ("gen_faulhaber_ceil(10,1/2,2)", lambda: fs.gen_faulhaber_ceil(10, "1/2", 2), 74),
        ("faulhaber_sum(3,2)", lambda: faulhaber_sum(3, 2), 14),
        ("bernoulli(6) oracle", lambda: bernoulli_number_paper_oracle(6), Fraction(1, 42)),
        ("diff_identity(10,1/2)", lambda: fs.diff_identity(10, "1/2"), (3, 3)),
    ]
    for n in range(1, 301):
        for a in ("1/2", "1/3", "2/3", "3/4"):
            for fl in ("floor", "ceiling"):
                fn = fs.sum_floor if fl == "floor" else fs.sum_ceil
                checks.append((f"{fl}({n},{a})", (lambda fn=fn, n=n, a=a: fn(n, a)),
                               fs.brute_sum(n, a, 1, fl)))
    out = []
    for name, fn, want in checks:
        got = fn()
        out.append({"check": name, "got": str(got), "expected": str(want), "ok": got == want})
    z2 = riemann_zeta(2).value.real
    import math
    out.append({"check": "zeta(2)", "got": repr(z2), "expected": repr(math.pi ** 2 / 6),
                "ok": abs(z2 - math.pi ** 2 / 6) <= 1e-12})
    ev = fc_zeta_equivalent(FCZetaSpec("floor", "1/2", 1, 4, 1, "reduced"), 1000, "model")
    red = fzeta_reduced_closed(2, 4)
    out.append({"check": "reduced F(q=2,s=4)", "got": repr(ev.value.real), "expected": repr(red.value.real),
                "ok": abs(ev.value - red.value) <= ev.bound + red.est_error})
    return out


def _cmd_selftest(args) -> Dict[str, Any]:
    results = _selftest_checks()
    failures = [r for r in results if not r["ok"]]
    summary = {"checks": str(len(results)), "failures": str(len(failures))}
    return {"params": {}, "results": failures or [{"summary": summary}], "_failed": bool(failures)}


# -- parser -----------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--csv", action="store_true", help="CSV output instead of JSON")
    common.add_argument("--strict", action="store_true", help="exit 4 if any verdict is REFUTED")
    common.add_argument("--seed", type=int, default=None, help="shuffle grid evaluation order (output is unaffected)")
    common.add_argument("--timing", action="store_true", help="include wall-clock seconds in the output")

    parser = argparse.ArgumentParser(prog="floorzeta", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"floorzeta {__version__}")
    parser.add_argument("--selftest", action="store_true", help="run the bundled oracle suite and exit")
    sub = parser.add_subparsers(dest="command")

    p = sub.add_parser("bernoulli", parents=[common], help="exact Bernoulli numbers (B_1 = +1/2)")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--oracle", action="store_true", help="also evaluate the explicit double sum")
    p.add_argument("--all", action="store_true", help="list B_0 .. B_j")

    for name, helptext in (("sum", "sum of floor/ceiling of i^a"),
                           ("gfaulhaber", "sum of floor/ceiling of i^a, raised to p")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--flavor", required=True, choices=["floor", "ceil", "ceiling", "f", "c"])
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--a", type=_exponent_arg, required=True, help="exponent u/v with 0 < u/v <= 1")
        if name == "gfaulhaber":
            p.add_argument("--p", type=int, required=True)
        p.add_argument("--method", default="formula", choices=["formula", "closed-form", "brute-force"])

    p = sub.add_parser("zeta", parents=[common], help="Riemann or Hurwitz zeta, Re(s) > 1")
    p.add_argument("--kind", choices=["riemann", "hurwitz"], default="riemann")
    p.add_argument("--s", type=parse_complex, required=True, help="re or re,im")
    p.add_argument("--t", type=parse_complex, default=complex(1.0))

    for name in ("fzeta", "czeta"):
        p = sub.add_parser(name, parents=[common], help=f"{'floor' if name == 'fzeta' else 'ceiling'} Hurwitz zeta")
        p.add_argument("--a", type=_exponent_arg, default=ExponentA(1, 1))
        p.add_argument("--b", type=_fraction_arg, default=Fraction(1))
        p.add_argument("--s", type=parse_complex, required=True)
        p.add_argument("--t", type=parse_complex, default=complex(1.0))
        p.add_argument("--method", choices=["direct", "equivalent", "closed"], default="equivalent")
        p.add_argument("--convention", choices=["definition", "reduced"], default="definition")
        p.add_argument("--terms", type=int, default=None)
        p.add_argument("--tail", choices=["bound", "model"], default="bound")

    p = sub.add_parser("identity", parents=[common], help="identity verdict suites")
    p.add_argument("--suite", required=True,
                   choices=["special-cases", "deductions", "poles", "p42", "p44", "race"])
    p.add_argument("--q", type=_int_list, default=None, help="comma-separated q values")
    p.add_argument("--p", type=int, default=None, help="p for the p44 suite")
    p.add_argument("--which", type=_int_list, default=None, help="deductions to check (4,5,6,7)")
    p.add_argument("--ids", type=_int_list, default=None, help="special case ids")
    p.add_argument("--part", choices=["I", "II"], default=None)
    p.add_argument("--s", type=_complex_list, default=None, help="';'-separated s values")
    p.add_argument("--t", type=_complex_list, default=None, help="';'-separated t values")
    p.add_argument("--terms", type=int, default=None, help="coefficient budget M (checked at M and 2M)")
    p.add_argument("--digits", type=int, default=6, help="race target digits")
    p.add_argument("--n-grid", type=_int_list, default=None, dest="n_grid")

    p = sub.add_parser("race", parents=[common], help="direct vs equivalent series term counts")
    p.add_argument("--flavor", choices=["floor", "ceil", "ceiling", "f", "c"], default="floor")
    p.add_argument("--a", type=_exponent_arg, default=ExponentA(1, 2))
    p.add_argument("--b", type=_fraction_arg, default=Fraction(1))
    p.add_argument("--s", type=parse_complex, default=complex(4.0))
    p.add_argument("--t", type=parse_complex, default=complex(1.0))
    p.add_argument("--convention", choices=["definition", "reduced"], default="definition")
    p.add_argument("--digits", type=int, default=6)
    p.add_argument("--no-eval", action="store_true", help="only compute term counts")

    sub.add_parser("selftest", parents=[common], help="run the bundled oracle suite")
    return parser


_DISPATCH: Dict[str, Callable] = {
    "bernoulli": _cmd_bernoulli,
    "sum": lambda a: _cmd_sum(a, 1),
    "gfaulhaber": lambda a: _cmd_sum(a, a.p),
    "zeta": _cmd_zeta,
    "fzeta": lambda a: _cmd_fc(a, "floor"),
    "czeta": lambda a: _cmd_fc(a, "ceiling"),
    "identity": _cmd_identity,
    "race": _cmd_race,
    "selftest": _cmd_selftest,
}


def _flatten(rec: Dict[str, Any], prefix: str = "") -> Dict[str, Any]:
    flat: Dict[str, Any] = {}
    for k, v in rec.items():
        key = f"{prefix}{k}"
        if isinstance(v, dict):
            flat.update(_flatten(v, key + "."))
        elif isinstance(v, list):
            flat[key] = ";".join(json.dumps(x, sort_keys=True) if isinstance(x, (dict, list)) else str(x)
                                 for x in v)
        else:
            flat[key] = v
    return flat


def _render(doc: Dict[str, Any], as_csv: bool) -> str:
    if not as_csv:
        return json.dumps(doc, sort_keys=True, indent=2) + "\n"
    rows = [_flatten(r) for r in (doc.get("verdicts") or doc["results"])]
    fields = sorted({k for r in rows for k in r})
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=fields, lineterminator="\n")
    w.writeheader()
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def run(argv: Optional[Sequence[str]] = None, stdout=None, stderr=None) -> int:
    """Parse ``argv``, execute, write to ``stdout``; return the exit code."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    command = "selftest" if args.selftest else args.command
    if command is None:
        parser.print_usage(stderr)
        return EXIT_USAGE
    if args.selftest and args.command is None:
        for flag in ("csv", "strict", "seed", "timing"):
            setattr(args, flag, None if flag == "seed" else False)
    started = time.perf_counter()
    try:
        body = _DISPATCH[command](args)
    except DomainError as exc:
        print(f"floorzeta: domain error: {exc}", file=stderr)
        return EXIT_DOMAIN
    except BudgetExceeded as exc:
        print(f"floorzeta: budget exceeded: {exc}", file=stderr)
        return EXIT_DOMAIN
    except (InvalidArgument, ValueError) as exc:
        print(f"floorzeta: invalid argument: {exc}", file=stderr)
        return EXIT_USAGE
    except FloorZetaError as exc:
        print(f"floorzeta: error: {exc}", file=stderr)
        return EXIT_FAILURE
    failed = body.pop("_failed", False)
    doc: Dict[str, Any] = {"version": __version__, "command": command}
    doc.update(body)
    if args.timing:
        doc["timing"] = {"seconds": round(time.perf_counter() - started, 6)}
    stdout.write(_render(doc, args.csv))
    if failed:
        return EXIT_FAILURE
    if args.strict and any(v["status"] == REFUTED for v in doc.get("verdicts", [])):
        return EXIT_REFUTED
    return EXIT_OK


def main(argv: Optional[Sequence[str]] = None) -> None:
    sys.exit(run(argv))


if __name__ == "__main__":  # pragma: no cover
    main()

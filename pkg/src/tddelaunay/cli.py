"""Command-line front end.

Every verb reads one JSON document (``--in FILE`` or stdin) and writes one
(``--out FILE`` or stdout).  Exit codes: 0 on success, 1 when a checked
statement fails (a feasible counterexample candidate, a failing self-test),
2 on malformed input.
"""

import argparse
import json
import random
import sys
from fractions import Fraction

from . import serialize as ser
from .catalog import (
    FIVE_ELEMENT_FACETS,
    TRIANGLE_MATRIX,
    five_element_representation,
    triangle_representation,
)
from .geom import PointConfiguration, representation_of, tdd
from .rdel import PlanarPointSet, rdel_realize, rdelaunay
from .represent import Representation, sigma, standardness, standardness_from_complex
from .tdsystem import build_system, decide, is_strict_solution, realize, verify_multiflow
from .witness import CounterexampleFailure, counterexample_representation, fixed_multiflow, verify_counterexample


class InputError(Exception):
    pass


def _read(path):
    try:
        if path in (None, "-"):
            text = sys.stdin.read()
        else:
            with open(path) as fh:
                text = fh.read()
        return json.loads(text)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read JSON input: {exc}") from exc


def _parse(fn, obj):
    try:
        return fn(obj)
    except (ValueError, KeyError, TypeError, ZeroDivisionError) as exc:
        raise InputError(str(exc).strip("'\"")) from exc


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def cmd_sigma(args):
    r = _parse(ser.representation_from_json, _read(args.input))
    return ser.complex_to_json(sigma(r))


def cmd_tdd(args):
    p = _parse(ser.points_from_json, _read(args.input))
    return ser.complex_to_json(_parse(tdd, p))


def cmd_rep_of(args):
    p = _parse(ser.points_from_json, _read(args.input))
    return ser.representation_to_json(_parse(representation_of, p))


def cmd_system(args):
    r = _parse(ser.representation_from_json, _read(args.input))
    s = build_system(r)
    if args.format == "csv":
        return ser.system_to_csv(s)
    return ser.system_to_json(s)


def cmd_decide(args):
    r = _parse(ser.representation_from_json, _read(args.input))
    return ser.verdict_to_json(decide(r))


def cmd_realize(args):
    r = _parse(ser.representation_from_json, _read(args.input))
    p = realize(r)
    if p is None:
        return {"feasible": False, "d": r.d, "points": None}
    return {"feasible": True, **ser.points_to_json(p)}


def cmd_rdel(args):
    p = _parse(ser.planar_from_json, _read(args.input))
    return ser.complex_to_json(rdelaunay(p))


def cmd_rdel_realize(args):
    p = _parse(ser.planar_from_json, _read(args.input))
    return ser.points_to_json(rdel_realize(p))


def cmd_standard(args):
    obj = _read(args.input)
    if isinstance(obj, dict) and "facets" in obj:
        if args.d is None:
            raise InputError("a complex input needs --d")
        c = _parse(ser.complex_from_json, obj)
        maxima = standardness_from_complex(c, args.d)
        return {"is_standard": maxima is not None, "maxima": list(maxima) if maxima else None}
    r = _parse(ser.representation_from_json, obj)
    rep = _parse(standardness, r)
    return {"is_standard": rep.is_standard, "maxima": list(rep.maxima) if rep.maxima else None}


def cmd_counterexample(args):
    try:
        report = verify_counterexample(exhaustive=args.exhaustive, workers=args.workers)
    except CounterexampleFailure as exc:
        report = exc.report
    print(report.summary(), file=sys.stderr)
    out = ser.report_to_json(report)
    if not (report.all_infeasible and report.fixed_flow_all_valid):
        return out, 1
    return out


def _random_points(rng, d, n):
    pts = {}
    for k in range(n):
        coords = [Fraction(rng.randint(-50, 50), rng.randint(1, 12)) for _ in range(d - 1)]
        pts[f"p{k}"] = coords + [1 - sum(coords)]
    return PointConfiguration(d, pts)


def selftest_checks(seed=0):
    """Named boolean checks over the built-in examples and a few seeded
    random configurations."""
    checks = []
    r5 = five_element_representation()
    checks.append(("five-element sigma facets", set(sigma(r5).facets()) == FIVE_ELEMENT_FACETS))
    checks.append(("five-element {1,2,3} rejected", frozenset("123") not in sigma(r5)))
    tri = triangle_representation()
    s = build_system(tri)
    ok = s.shape == (9, 6)
    for (edge, i), row in TRIANGLE_MATRIX.items():
        for v, j in s.cols:
            ok &= s.entry((edge, i - 1), (v, j)) == row.get((v, j + 1), 0)
    checks.append(("triangle system matrix", ok))
    v = decide(tri)
    checks.append(("triangle system feasible", v.feasible and is_strict_solution(s, [v.solution[u][j] for u, j in s.cols])))
    cex = counterexample_representation()
    fixed = fixed_multiflow(cex)
    divs = fixed.divergences(0, cex.elements)
    want = {"e": -1, "f": -1, "g": 1, "h": 1}
    checks.append((
        "fixed e/f/g/h multi-flow",
        verify_multiflow(cex, fixed) and all(divs[x] == want.get(x, 0) for x in cex.elements),
    ))
    vc = decide(cex)
    checks.append(("counterexample infeasible", not vc.feasible and verify_multiflow(cex, vc.multiflow)))
    rng = random.Random(seed)
    ok = True
    for _ in range(20):
        while True:
            p = _random_points(rng, rng.choice((3, 4)), rng.randint(3, 7))
            try:
                ok &= tdd(p) == sigma(representation_of(p))
                break
            except ValueError:
                continue
    checks.append(("random TD-Delaunay = sigma", ok))
    ok = True
    for _ in range(5):
        n = rng.randint(1, 6)
        xs, ys = rng.sample(range(100), n), rng.sample(range(100), n)
        pp = PlanarPointSet({f"q{k}": (xs[k], ys[k]) for k in range(n)})
        ok &= tdd(rdel_realize(pp)) == rdelaunay(pp)
    checks.append(("random rectangle complexes realized", ok))
    return checks


def cmd_selftest(args):
    checks = selftest_checks(args.seed)
    for name, ok in checks:
        print(f"{'PASS' if ok else 'FAIL'}  {name}", file=sys.stderr)
    out = {"checks": {name: bool(ok) for name, ok in checks}, "passed": all(ok for _, ok in checks)}
    return (out, 0) if out["passed"] else (out, 1)


VERBS = {
    "sigma": (cmd_sigma, "complex generated by a representation"),
    "tdd": (cmd_tdd, "TD-Delaunay complex of a point set in H_d"),
    "rep-of": (cmd_rep_of, "coordinate orders of a point set"),
    "system": (cmd_system, "TD-Delaunay inequality system of a representation"),
    "decide": (cmd_decide, "solution or multi-flow certificate"),
    "realize": (cmd_realize, "point set realizing a representation's complex"),
    "rdel": (cmd_rdel, "rectangular Delaunay complex of a planar point set"),
    "rdel-realize": (cmd_rdel_realize, "H_4 point set realizing a rectangular Delaunay complex"),
    "standard": (cmd_standard, "standardness of a representation (or of a complex with --d)"),
    "counterexample": (cmd_counterexample, "check every candidate representation of the 4-dimensional counterexample"),
    "selftest": (cmd_selftest, "run the built-in examples"),
}


def build_parser():
    parser = argparse.ArgumentParser(prog="tddelaunay", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)
    for name, (_, help_text) in VERBS.items():
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--out", default=None, help="output file (default stdout)")
        if name not in ("counterexample", "selftest"):
            p.add_argument("--in", dest="input", default=None, help="input JSON file (default stdin)")
        if name == "system":
            p.add_argument("--format", choices=("json", "csv"), default="json")
        if name == "standard":
            p.add_argument("--d", type=int, default=None, help="dimension when the input is a complex")
        if name == "counterexample":
            p.add_argument("--exhaustive", action="store_true",
                           help="search all middle orders instead of propagating constraints")
            p.add_argument("--workers", type=int, default=None,
                           help="worker processes (default: $TDDEL_THREADS or CPU count)")
        if name == "selftest":
            p.add_argument("--seed", type=int, default=0)
    return parser


def run(argv=None):
    args = build_parser().parse_args(argv)
    fn = VERBS[args.verb][0]
    try:
        result = fn(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    code = 0
    if isinstance(result, tuple):
        result, code = result
    _write(args.out, result if isinstance(result, str) else ser.dumps(result))
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

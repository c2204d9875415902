"""A 4-dimensional complex that is not a TD-Delaunay complex of H_4.

``counterexample_representation`` is an explicit 4-representation on
``a..h``.  Any representation generating the same complex is standard with
maxima ``a, b, c, d``; the candidates are therefore parametrized by which
maximum tops which order, the order of the three smallest elements of each
order, and the order of ``e, f, g, h`` in positions 4 to 7.  The last part
is fixed by propagating domination constraints from the faces of the
complex (or, with ``exhaustive=True``, by a full backtracking search).
Every candidate whose complex matches gets an independent multi-flow
certificate.
"""

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import permutations, product

from .represent import Representation, sigma, standardness_from_complex
from .tdsystem import MultiFlow, build_system, find_multiflow, solve_strict, support_of, verify_multiflow

__all__ = [
    "COUNTEREXAMPLE_ORDERS",
    "FIXED_FLOWS",
    "CounterexampleReport",
    "CounterexampleFailure",
    "counterexample_representation",
    "fixed_multiflow",
    "deduce_middle_orders",
    "exhaustive_middle_orders",
    "candidate_family",
    "enumerate_candidates",
    "verify_counterexample",
    "candidate_id",
]

COUNTEREXAMPLE_ORDERS = (
    "b c d e g f h a",
    "a c d e h f g b",
    "a b d f g e h c",
    "a b c f h e g d",
)

# unit flows on e, f, g, h keyed by the maximum of the order they live on
FIXED_FLOWS = {
    "a": {("e", "g"): 1, ("f", "h"): 1},
    "b": {("e", "h"): 1, ("f", "g"): 1},
    "c": {("e", "h"): 1, ("f", "g"): 1},
    "d": {("e", "g"): 1, ("f", "h"): 1},
}


def counterexample_representation():
    return Representation(tuple(tuple(row.split()) for row in COUNTEREXAMPLE_ORDERS))


def fixed_multiflow(r):
    """The fixed unit multi-flow on ``e, f, g, h``, placed on each order
    according to that order's maximum."""
    return MultiFlow(tuple(dict(FIXED_FLOWS[o[-1]]) for o in r.orders))


def candidate_id(r):
    return "|".join("".join(o) if all(len(v) == 1 for v in o) else ",".join(o) for o in r.orders)


class CounterexampleFailure(RuntimeError):
    """A candidate representation turned out to be TD-Delaunay feasible."""

    def __init__(self, message, report):
        super().__init__(message)
        self.report = report


@dataclass
class CounterexampleReport:
    delta: object
    candidates_total: int
    candidates_matching: int
    all_infeasible: bool
    certificates: dict = field(default_factory=dict)
    fixed_flow_valid: dict = field(default_factory=dict)
    feasible: list = field(default_factory=list)

    @property
    def fixed_flow_all_valid(self):
        return bool(self.fixed_flow_valid) and all(self.fixed_flow_valid.values())

    def summary(self):
        lines = [
            f"complex: {len(self.delta.facets())} facets on {len(self.delta.vertices)} vertices",
            f"raw candidates: {self.candidates_total}",
            f"candidates with the same complex: {self.candidates_matching}",
            f"verified multi-flow for every match: {self.all_infeasible}",
            f"fixed e/f/g/h multi-flow valid for every match: {self.fixed_flow_all_valid}",
        ]
        if self.feasible:
            lines.append(f"FEASIBLE candidates: {self.feasible}")
        return "\n".join(lines)


def _structure(delta, d):
    maxima = standardness_from_complex(delta, d)
    if maxima is None:
        raise ValueError("complex does not have the shape of a standard representation")
    middle = tuple(v for v in delta.vertices if v not in maxima)
    requirements = []
    for face in delta.nonempty_faces():
        for z in middle:
            if z not in face:
                requirements.append((face, z))
    return maxima, middle, requirements


def _close(rel, items):
    changed = True
    while changed:
        changed = False
        for x, y in list(rel):
            for z in items:
                if (y, z) in rel and (x, z) not in rel:
                    rel.add((x, z))
                    changed = True
    return rel


def _linear_extensions(items, rel):
    if not items:
        yield ()
        return
    for x in items:
        if not any((y, x) in rel for y in items if y != x):
            rest = tuple(y for y in items if y != x)
            for tail in _linear_extensions(rest, rel):
                yield (x,) + tail


def deduce_middle_orders(delta, tops):
    """Order of the non-maximum elements in each order, by propagation.

    ``tops[i]`` is the maximum placed on order ``i``.  A face ``F`` and an
    element ``z`` outside it need some order where ``z`` dominates ``F``;
    when only one order remains possible, every member of ``F`` sits below
    ``z`` there.  Returns, per order, the list of linear orders of the
    middle elements compatible with the deduced relations (empty lists when
    the assignment is contradictory).
    """
    d = len(tops)
    maxima, middle, requirements = _structure(delta, d)
    rel = [set() for _ in range(d)]
    mid = set(middle)
    changed = True
    while changed:
        changed = False
        for face, z in requirements:
            possible = [
                i for i in range(d)
                if tops[i] not in face and not any((z, f) in rel[i] for f in face if f in mid)
            ]
            if not possible:
                return [[] for _ in range(d)]
            if len(possible) == 1:
                i = possible[0]
                for f in face:
                    if f in mid and (f, z) not in rel[i]:
                        rel[i].add((f, z))
                        changed = True
                _close(rel[i], middle)
                if any((x, x) in rel[i] for x in middle):
                    return [[] for _ in range(d)]
    return [list(_linear_extensions(middle, rel[i])) for i in range(d)]


def exhaustive_middle_orders(delta, tops):
    """All tuples of middle orders under which every face of ``delta`` is
    dominated by every middle element, by backtracking over all
    ``(|middle|!)^d`` choices."""
    d = len(tops)
    maxima, middle, requirements = _structure(delta, d)
    mid = set(middle)
    perms = list(permutations(middle))
    pos_of = [{v: k for k, v in enumerate(p)} for p in perms]
    reqs = [(face, [f for f in face if f in mid], z) for face, z in requirements]

    def covers(i, p, face, fmid, z):
        if tops[i] in face:
            return False
        pos = pos_of[p]
        return all(pos[f] < pos[z] for f in fmid)

    out = []

    def extend(chosen):
        k = len(chosen)
        for face, fmid, z in reqs:
            if any(covers(i, p, face, fmid, z) for i, p in enumerate(chosen)):
                continue
            if not any(tops[i] not in face for i in range(k, d)):
                return
        if k == d:
            out.append(tuple(perms[p] for p in chosen))
            return
        for p in range(len(perms)):
            extend(chosen + [p])

    extend([])
    return out


def candidate_family(delta, d=4, exhaustive=False):
    """Raw candidates: every assignment of maxima to orders, every order of
    the ``d - 1`` smallest elements, and the admissible middle orders."""
    maxima, middle, _ = _structure(delta, d)
    for tops in permutations(maxima):
        if exhaustive:
            middles = exhaustive_middle_orders(delta, tops)
        else:
            per_order = deduce_middle_orders(delta, tops)
            middles = list(product(*per_order))
        bottoms = [list(permutations([m for m in maxima if m != t])) for t in tops]
        for mids in middles:
            for lows in product(*bottoms):
                yield Representation(
                    tuple(low + mid + (top,) for low, mid, top in zip(lows, mids, tops))
                )


def enumerate_candidates(delta, d=4, exhaustive=False):
    """Candidates from :func:`candidate_family` whose complex is ``delta``."""
    for r in candidate_family(delta, d, exhaustive):
        if sigma(r) == delta:
            yield r


def _check(r, hint=None):
    m = find_multiflow(r, support=hint)
    fixed = verify_multiflow(r, fixed_multiflow(r))
    if m is None:
        feasible = solve_strict(build_system(r)) is not None
        return r.orders, None, False, fixed, feasible
    return r.orders, m, verify_multiflow(r, m), fixed, False


def _check_chunk(reps):
    """Check candidates in sequence, trying the support of each certificate
    first on the next candidate."""
    out = []
    hint = None
    for r in reps:
        result = _check(r, hint)
        if result[1] is not None:
            hint = support_of(build_system(r), result[1])
        out.append(result)
    return out


def _workers(workers):
    if workers is not None:
        return workers
    env = os.environ.get("TDDEL_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def verify_counterexample(exhaustive=False, workers=None, strict=True):
    """Check every candidate representation of the counterexample complex.

    Each matching candidate needs a non-zero multi-flow found by the exact
    LP and re-checked by :func:`verify_multiflow`; the fixed e/f/g/h flow is
    checked on it as well.  With ``strict`` a feasible candidate raises
    :class:`CounterexampleFailure`.
    """
    delta = sigma(counterexample_representation())
    total = 0
    matching = []
    for r in candidate_family(delta, exhaustive=exhaustive):
        total += 1
        # the complex stays cached on r and is reused by the checks below
        if r.complex == delta:
            matching.append(r)

    workers = _workers(workers)
    if workers > 1 and len(matching) > 1:
        size = -(-len(matching) // (8 * workers))
        chunks = [matching[k:k + size] for k in range(0, len(matching), size)]
        with ProcessPoolExecutor(workers) as pool:
            results = [res for part in pool.map(_check_chunk, chunks) for res in part]
    else:
        results = _check_chunk(matching)

    report = CounterexampleReport(delta, total, len(matching), True)
    for orders, m, ok, fixed, feasible in results:
        cid = candidate_id(Representation(orders))
        report.fixed_flow_valid[cid] = fixed
        if m is not None and ok:
            report.certificates[cid] = m
        else:
            report.all_infeasible = False
            if feasible:
                report.feasible.append(cid)
    if not matching:
        report.all_infeasible = False
    if strict and report.feasible:
        raise CounterexampleFailure(f"{len(report.feasible)} feasible candidate(s)", report)
    return report

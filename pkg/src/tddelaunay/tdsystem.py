"""The TD-Delaunay inequality system of a representation and its dual.

For a d-representation ``R`` with edge set ``E`` (edges of ``sigma(R)``)
the system ``A_R X > 0`` has one row per ``(edge, order)`` and one column
per ``(element, coordinate)`` for the first ``d - 1`` coordinates.  It is
feasible exactly when ``sigma(R)`` is realized as a TD-Delaunay complex by
the coordinate orders of some point set; when it is not, a non-zero
multi-flow certifies infeasibility.
"""

import graphlib
from dataclasses import dataclass
from fractions import Fraction

from .geom import PointConfiguration, in_general_position
from .lp import nonnegative_solution

__all__ = [
    "TDSystem",
    "MultiFlow",
    "FeasibilityVerdict",
    "build_system",
    "evaluate",
    "is_strict_solution",
    "solve_strict",
    "find_multiflow",
    "support_of",
    "multiflow_problems",
    "verify_multiflow",
    "divergence",
    "decide",
    "realize",
    "is_acyclic",
    "divergence_free_flow",
]


@dataclass(frozen=True)
class TDSystem:
    """Sparse integer matrix with labeled rows and columns.

    ``rows[k] = (edge, i)`` with ``edge`` a sorted pair and ``i`` a 0-based
    order index; ``cols[c] = (v, j)`` with ``j`` in ``range(d - 1)``.
    ``entries`` maps ``(k, c)`` to +1 or -1.
    """

    d: int
    rows: tuple
    cols: tuple
    entries: dict

    @property
    def shape(self):
        return len(self.rows), len(self.cols)

    def row_dicts(self):
        out = [{} for _ in self.rows]
        for (k, c), v in self.entries.items():
            out[k][c] = v
        return out

    def to_dense(self):
        m, n = self.shape
        dense = [[0] * n for _ in range(m)]
        for (k, c), v in self.entries.items():
            dense[k][c] = v
        return dense

    def to_array(self):
        import numpy as np

        return np.array(self.to_dense(), dtype=np.int64).reshape(self.shape)

    def entry(self, row, col):
        """Coefficient at the labeled position ``row = (edge, i)``,
        ``col = (v, j)``."""
        k = self.rows.index((tuple(sorted(row[0])), row[1]))
        c = self.cols.index(tuple(col))
        return self.entries.get((k, c), 0)


def build_system(r):
    """Coefficient matrix ``A_R`` under the fixed ordering.

    Rows are sorted by (edge, order index) and columns by (element,
    coordinate index).  For ``i < d - 1`` row ``(xy, i)`` has +1 at the
    ``i``-larger endpoint and -1 at the smaller one, both in coordinate
    ``i``.  The last order substitutes ``x_d = 1 - sum(x_j)``, giving -1 at
    the larger endpoint and +1 at the smaller one in every coordinate.
    """
    d = r.d
    edges = sorted(tuple(sorted(e)) for e in r.complex.edges())
    rows = tuple((e, i) for e in edges for i in range(d))
    cols = tuple((v, j) for v in r.elements for j in range(d - 1))
    col_index = {c: k for k, c in enumerate(cols)}
    entries = {}
    for k, (e, i) in enumerate(rows):
        lo, hi = r.min_in(i, e), r.max_in(i, e)
        if i < d - 1:
            entries[k, col_index[hi, i]] = 1
            entries[k, col_index[lo, i]] = -1
        else:
            for j in range(d - 1):
                entries[k, col_index[lo, j]] = 1
                entries[k, col_index[hi, j]] = -1
    return TDSystem(d, rows, cols, entries)


def evaluate(s, x):
    """The vector ``A x``."""
    out = [Fraction(0)] * len(s.rows)
    for (k, c), v in s.entries.items():
        out[k] += v * x[c]
    return out


def is_strict_solution(s, x):
    return len(x) == len(s.cols) and all(v > 0 for v in evaluate(s, x))


def solve_strict(s):
    """A rational point of the open cone ``{x : A x > 0}`` or ``None``.

    Homogeneity turns ``A x > 0`` into ``A x >= 1``.  Within every row the
    coefficients on each coordinate index sum to zero, so shifting all
    values of one coordinate by a constant preserves ``A x``; hence ``x >= 0``
    loses nothing and the problem becomes ``A x - t = 1`` with ``x, t >= 0``.
    """
    m, n = s.shape
    if m == 0:
        return [Fraction(0)] * n
    rows = s.row_dicts()
    for k, row in enumerate(rows):
        row[n + k] = -1
    x = nonnegative_solution(rows, [1] * m, n + m)
    if x is None:
        return None
    return x[:n]


@dataclass(frozen=True)
class MultiFlow:
    """``d`` nonnegative flows; ``flows[i]`` maps arcs ``(x, y)`` of the
    order-``i`` digraph to values.  Arcs absent from a dict carry 0."""

    flows: tuple

    def __post_init__(self):
        object.__setattr__(
            self,
            "flows",
            tuple({tuple(a): Fraction(v) for a, v in f.items()} for f in self.flows),
        )

    @property
    def d(self):
        return len(self.flows)

    def is_zero(self):
        return all(v == 0 for f in self.flows for v in f.values())

    def divergences(self, i, vertices):
        return {v: divergence(self.flows[i], v) for v in vertices}

    def to_vector(self, s):
        """Stack the flows as a vector indexed by the rows of ``s``."""
        y = []
        for e, i in s.rows:
            f = self.flows[i]
            y.append(f.get(e, Fraction(0)) + f.get(e[::-1], Fraction(0)))
        return y

    def __eq__(self, other):
        if not isinstance(other, MultiFlow):
            return NotImplemented
        strip = lambda m: tuple({a: v for a, v in f.items() if v != 0} for f in m.flows)  # noqa: E731
        return strip(self) == strip(other)

    def __hash__(self):
        return hash(tuple(tuple(sorted((a, v) for a, v in f.items() if v)) for f in self.flows))


def divergence(flow, v):
    """Inflow minus outflow at ``v``."""
    total = Fraction(0)
    for (x, y), value in flow.items():
        if y == v:
            total += value
        if x == v:
            total -= value
    return total


def arcs(r, i):
    """Arc set of the order-``i`` digraph: edges of ``sigma(r)`` oriented
    upward in order ``i``."""
    pos = r.positions[i]
    out = set()
    for e in r.complex.edges():
        x, y = e
        out.add((x, y) if pos[x] < pos[y] else (y, x))
    return out


def multiflow_problems(r, m, require_nonzero=True):
    """List the reasons ``m`` fails to be a (non-zero) multi-flow of ``r``."""
    problems = []
    if m.d != r.d:
        return [f"multi-flow has {m.d} flows, representation has d={r.d}"]
    for i, f in enumerate(m.flows):
        allowed = arcs(r, i)
        for a, v in f.items():
            if v < 0:
                problems.append(f"negative value {v} on arc {a} of flow {i + 1}")
            if v != 0 and a not in allowed:
                problems.append(f"arc {a} carries flow {i + 1} but is not an arc of G^{i + 1}")
    last = m.divergences(r.d - 1, r.elements)
    for i in range(r.d - 1):
        div = m.divergences(i, r.elements)
        for v in r.elements:
            if div[v] != last[v]:
                problems.append(
                    f"divergence of {v!r}: flow {i + 1} gives {div[v]}, flow {r.d} gives {last[v]}"
                )
    if require_nonzero and m.is_zero():
        problems.append("zero flow: not a non-zero certificate")
    return problems


def verify_multiflow(r, m):
    """True iff ``m`` is a non-zero multi-flow of ``r``."""
    return not multiflow_problems(r, m)


def find_multiflow(r, support=None):
    """A non-zero multi-flow of ``r`` or ``None``.

    Solves ``A_R^T y = 0, y >= 0, sum(y) = 1`` exactly; ``y`` indexed by
    ``(edge, order)`` is read back as flows on the oriented edges.

    ``support`` optionally names ``(edge, order)`` rows to try first, for
    instance the support of a certificate found for a similar
    representation.  The LP restricted to those rows is solved; if it has
    no solution the full LP is solved as usual.
    """
    s = build_system(r)
    m, n = s.shape
    if m == 0:
        return None
    y = None
    if support is not None:
        keep = [k for k, label in enumerate(s.rows) if label in support]
        if keep:
            y = _dual_solution(s, keep)
    if y is None:
        y = _dual_solution(s, range(m))
    if y is None:
        return None
    flows = [{} for _ in range(r.d)]
    for (e, i), value in zip(s.rows, y):
        if value:
            flows[i][r.min_in(i, e), r.max_in(i, e)] = value
    return MultiFlow(tuple(flows))


def support_of(s, m):
    """The ``(edge, order)`` rows of ``s`` on which ``m`` is non-zero."""
    return {label for label, v in zip(s.rows, m.to_vector(s)) if v}


def _dual_solution(s, keep):
    """Solve the multi-flow LP using only the rows ``keep`` of ``s``;
    returns a full-length vector or ``None``."""
    keep = list(keep)
    where = {k: t for t, k in enumerate(keep)}
    cols = [{} for _ in range(len(s.cols))]
    for (k, c), v in s.entries.items():
        t = where.get(k)
        if t is not None:
            cols[c][t] = v
    rows = [c for c in cols if c] + [{t: 1 for t in range(len(keep))}]
    rhs = [0] * (len(rows) - 1) + [1]
    z = nonnegative_solution(rows, rhs, len(keep))
    if z is None:
        return None
    y = [Fraction(0)] * len(s.rows)
    for k, v in zip(keep, z):
        y[k] = v
    return y


@dataclass(frozen=True)
class FeasibilityVerdict:
    """Exactly one of ``solution`` (vertex -> first ``d - 1`` coordinates)
    and ``multiflow`` is set."""

    solution: dict = None
    multiflow: MultiFlow = None

    def __post_init__(self):
        if (self.solution is None) == (self.multiflow is None):
            raise ValueError("a verdict holds exactly one of solution / multiflow")

    @property
    def feasible(self):
        return self.solution is not None


def decide(r):
    """Solve the system of ``r`` or return its multi-flow certificate."""
    s = build_system(r)
    x = solve_strict(s)
    if x is not None:
        sol = {v: [] for v in r.elements}
        for (v, j), value in zip(s.cols, x):
            sol[v].append(value)
        return FeasibilityVerdict(solution={v: tuple(c) for v, c in sol.items()})
    m = find_multiflow(r)
    if m is None:
        raise RuntimeError("neither a solution nor a multi-flow was found")
    return FeasibilityVerdict(multiflow=m)


def _lift(coords):
    return tuple(coords) + (1 - sum(coords),)


def realize(r, max_halvings=200):
    """Points of H_d whose TD-Delaunay complex is ``sigma(r)``, or ``None``.

    The solution of the system is lifted to H_d and every free coordinate is
    shifted by a distinct multiple of a small ``eps`` to reach general
    position.  Each row has at most ``2(d - 1)`` unit coefficients, so an
    ``eps`` below ``slack / (2(d - 1) * max_multiplier)`` keeps every strict
    inequality.  Elements that are not vertices of ``sigma(r)`` are left out.
    """
    verdict = decide(r)
    if not verdict.feasible:
        return None
    d = r.d
    s = build_system(r)
    x = [verdict.solution[v][j] for v, j in s.cols]
    slack = min(evaluate(s, x), default=Fraction(1))
    vertices = [v for v in r.elements if frozenset((v,)) in r.complex]
    mult = {
        v: [1 + k * (d - 1) + j for j in range(d - 1)] for k, v in enumerate(vertices)
    }
    biggest = max((m for ms in mult.values() for m in ms), default=1)
    eps = slack / (4 * (d - 1) * biggest)
    for _ in range(max_halvings):
        points = {
            v: _lift([c + m * eps for c, m in zip(verdict.solution[v], mult[v])])
            for v in vertices
        }
        p = PointConfiguration(d, points)
        if in_general_position(p):
            return p
        eps /= 2
    raise RuntimeError("perturbation did not reach general position")


def is_acyclic(vertices, arc_set):
    ts = graphlib.TopologicalSorter({v: set() for v in vertices})
    for x, y in arc_set:
        ts.add(y, x)
    try:
        tuple(ts.static_order())
    except graphlib.CycleError:
        return False
    return True


def divergence_free_flow(vertices, arc_set):
    """A nonnegative flow with zero divergence everywhere and total mass 1,
    or ``None`` when only the zero flow is divergence-free."""
    arc_list = sorted(set(arc_set))
    if not arc_list:
        return None
    rows = []
    for v in vertices:
        row = {}
        for k, (x, y) in enumerate(arc_list):
            if y == v:
                row[k] = row.get(k, 0) + 1
            if x == v:
                row[k] = row.get(k, 0) - 1
        rows.append(row)
    rows.append({k: 1 for k in range(len(arc_list))})
    phi = nonnegative_solution(rows, [0] * len(vertices) + [1], len(arc_list))
    if phi is None:
        return None
    return {a: v for a, v in zip(arc_list, phi) if v}

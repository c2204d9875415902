from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from tddelaunay.catalog import TRIANGLE_INEQUALITIES, TRIANGLE_MATRIX, triangle_representation
from tddelaunay.geom import in_general_position, representation_of, tdd
from tddelaunay.represent import Representation, sigma
from tddelaunay.tdsystem import (
    FeasibilityVerdict,
    MultiFlow,
    arcs,
    build_system,
    decide,
    divergence,
    divergence_free_flow,
    evaluate,
    find_multiflow,
    is_acyclic,
    is_strict_solution,
    multiflow_problems,
    realize,
    solve_strict,
    verify_multiflow,
)
from tddelaunay.witness import counterexample_representation, fixed_multiflow

from oracles import make_rng, random_points, random_representation, sigma_bruteforce

Q = Fraction


def dense_oracle(r):
    """Rows of the inequality system written out from its definition, as
    {(vertex, coord): coefficient} keyed by (edge, order)."""
    d = r.d
    out = {}
    for e in sigma_bruteforce(r).k_faces(1):
        for i, o in enumerate(r.orders):
            lo, hi = sorted(e, key=o.index)
            row = {}
            if i < d - 1:
                # X_i(hi) - X_i(lo) > 0
                row[hi, i], row[lo, i] = 1, -1
            else:
                # X_d(hi) - X_d(lo) > 0 with X_d = 1 - sum of the others
                for j in range(d - 1):
                    row[lo, j], row[hi, j] = 1, -1
            out[tuple(sorted(e)), i] = row
    return out


def as_map(s):
    rows = s.row_dicts()
    return {s.rows[k]: {s.cols[c]: v for c, v in row.items()} for k, row in enumerate(rows)}


def test_triangle_matrix():
    s = build_system(triangle_representation())
    assert s.shape == (9, 6)
    assert s.cols == tuple((v, j) for v in "abc" for j in range(2))
    assert [("".join(e), i) for e, i in s.rows] == [
        (e, i) for e in ("ab", "ac", "bc") for i in range(3)
    ]
    got = as_map(s)
    for (edge, i), row in TRIANGLE_MATRIX.items():
        want = {(v, j - 1): c for (v, j), c in row.items()}
        assert got[tuple(edge), i - 1] == want


def test_triangle_solution():
    s = build_system(triangle_representation())
    x = {"a": (Q(7, 10), Q(1, 10)), "b": (Q(1, 10), Q(3, 5)), "c": (Q(3, 10), Q(3, 10))}
    vec = [x[v][j] for v, j in s.cols]
    assert is_strict_solution(s, vec)
    for small, large in TRIANGLE_INEQUALITIES:
        lhs = sum(x[v][j - 1] for v, j in small)
        rhs = sum(x[v][j - 1] for v, j in large)
        assert lhs < rhs
    found = solve_strict(s)
    assert found is not None and is_strict_solution(s, found)
    assert find_multiflow(triangle_representation()) is None


def test_edgeless_system():
    r = Representation((("a",), ("a",), ("a",)))
    s = build_system(r)
    assert s.shape == (0, 2)
    assert solve_strict(s) == [0, 0]
    assert find_multiflow(r) is None
    assert decide(r).feasible


def test_counterexample_system():
    r = counterexample_representation()
    s = build_system(r)
    assert s.shape == (23 * 4, 24)
    assert solve_strict(s) is None
    m = find_multiflow(r)
    assert m is not None and verify_multiflow(r, m)
    v = decide(r)
    assert not v.feasible and verify_multiflow(r, v.multiflow)
    assert realize(r) is None


def test_fixed_flow():
    r = counterexample_representation()
    m = fixed_multiflow(r)
    assert verify_multiflow(r, m)
    want = {"e": -1, "f": -1, "g": 1, "h": 1}
    for i in range(4):
        assert m.divergences(i, r.elements) == {v: want.get(v, 0) for v in r.elements}


def test_fixed_flow_perturbed():
    r = counterexample_representation()
    flows = [dict(f) for f in fixed_multiflow(r).flows]
    flows[0][("e", "g")] = 2
    problems = multiflow_problems(r, MultiFlow(tuple(flows)))
    assert problems and all("divergence" in p for p in problems)


def test_zero_flow_flagged():
    r = counterexample_representation()
    zero = MultiFlow(({}, {}, {}, {}))
    problems = multiflow_problems(r, zero)
    assert problems == ["zero flow: not a non-zero certificate"]
    assert multiflow_problems(r, zero, require_nonzero=False) == []
    assert not verify_multiflow(r, zero)


def test_flow_off_arcs_and_negative():
    r = counterexample_representation()
    bad = MultiFlow(({("g", "h"): 1}, {}, {}, {}))
    assert any("not an arc" in p for p in multiflow_problems(r, bad))
    neg = MultiFlow(({("e", "g"): -1}, {}, {}, {}))
    assert any("negative" in p for p in multiflow_problems(r, neg))
    short = MultiFlow(({},))
    assert "d=4" in multiflow_problems(r, short)[0]


def test_divergence_sign():
    assert divergence({("x", "y"): 3}, "y") == 3
    assert divergence({("x", "y"): 3}, "x") == -3


def test_verdict_exclusive():
    with pytest.raises(ValueError):
        FeasibilityVerdict()
    with pytest.raises(ValueError):
        FeasibilityVerdict(solution={}, multiflow=MultiFlow(({},)))


def test_to_array_matches():
    s = build_system(triangle_representation())
    arr = s.to_array()
    assert arr.shape == (9, 6)
    assert arr.tolist() == [[int(v) for v in row] for row in s.to_dense()]


def test_triangle_realize():
    p = realize(triangle_representation())
    assert p is not None and in_general_position(p)
    assert tdd(p) == sigma(triangle_representation())


def test_single_vertex_realize():
    r = Representation((("a",),) * 4)
    p = realize(r)
    assert list(p.points) == ["a"] and sum(p.points["a"]) == 1


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_matrix_matches_definition(seed):
    rng = make_rng(seed)
    r = random_representation(rng, rng.choice((2, 3, 4)), rng.randint(1, 7))
    s = build_system(r)
    assert as_map(s) == dense_oracle(r)
    d = r.d
    for k, (e, i) in enumerate(s.rows):
        nz = [c for (kk, c) in s.entries if kk == k]
        assert len(nz) == (2 if i < d - 1 else 2 * (d - 1))


@settings(max_examples=150, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_farkas_exclusive(seed):
    rng = make_rng(seed)
    r = random_representation(rng, rng.choice((3, 4)), rng.randint(1, 8))
    s = build_system(r)
    x = solve_strict(s)
    m = find_multiflow(r)
    assert (x is None) != (m is None)
    if x is not None:
        assert is_strict_solution(s, x)
    else:
        assert verify_multiflow(r, m)
        # the flow is a nonnegative vector in the kernel of A^T
        y = m.to_vector(s)
        assert all(v >= 0 for v in y) and any(y)
        for c in range(len(s.cols)):
            assert sum(s.entries.get((k, c), 0) * y[k] for k in range(len(s.rows))) == 0


@pytest.mark.parametrize("seed", range(30))
def test_point_orders_are_feasible(seed):
    rng = make_rng(seed)
    p = random_points(rng, rng.choice((3, 4)), rng.randint(2, 7))
    r = representation_of(p)
    s = build_system(r)
    own = [p.points[v][j] for v, j in s.cols]
    assert is_strict_solution(s, own)
    assert decide(r).feasible


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_realize_round_trip(seed):
    rng = make_rng(seed)
    r = random_representation(rng, rng.choice((3, 4)), rng.randint(1, 7))
    p = realize(r)
    if p is None:
        assert not decide(r).feasible
        return
    assert in_general_position(p)
    assert tdd(p) == sigma(r)


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 10 ** 9))
def test_order_digraphs_acyclic(seed):
    rng = make_rng(seed)
    r = random_representation(rng, rng.choice((2, 3, 4)), rng.randint(1, 8))
    for i in range(r.d):
        a = arcs(r, i)
        assert is_acyclic(r.elements, a)
        assert divergence_free_flow(r.elements, a) is None


def test_cycle_carries_circulation():
    a = {("x", "y"), ("y", "z"), ("z", "x")}
    assert not is_acyclic("xyz", a)
    phi = divergence_free_flow("xyz", a)
    assert phi is not None
    assert all(divergence(phi, v) == 0 for v in "xyz")
    assert sum(phi.values()) == 1
    assert divergence_free_flow("xy", set()) is None


def test_support_hint():
    from tddelaunay.tdsystem import support_of

    r = counterexample_representation()
    s = build_system(r)
    m = find_multiflow(r)
    hint = support_of(s, m)
    assert len(hint) == 8
    assert find_multiflow(r, support=hint) == m
    # a hint that cannot carry a multi-flow falls back to the full LP
    useless = {s.rows[0]}
    assert verify_multiflow(r, find_multiflow(r, support=useless))
    assert find_multiflow(triangle_representation(), support=useless) is None

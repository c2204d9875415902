from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.optimize import linprog

from tddelaunay.lp import nonnegative_solution


def dense_to_rows(a):
    return [{j: v for j, v in enumerate(row) if v} for row in a]


def check(a, b, x):
    assert all(v >= 0 for v in x)
    for row, beta in zip(a, b):
        assert sum(Fraction(c) * xi for c, xi in zip(row, x)) == beta


def test_small_examples():
    a, b = [[1, 1], [1, -1]], [4, 0]
    x = nonnegative_solution(dense_to_rows(a), b, 2)
    assert x == [2, 2]
    assert nonnegative_solution([{0: 1, 1: 1}], [-1], 2) is None
    assert nonnegative_solution([{}], [0], 3) == [0, 0, 0]
    assert nonnegative_solution([{}], [1], 3) is None
    x = nonnegative_solution([{0: Fraction(1, 3)}], [Fraction(2, 7)], 1)
    assert x == [Fraction(6, 7)]


def test_negative_rhs_flipped():
    x = nonnegative_solution([{0: -1, 1: -2}], [-5], 2)
    check([[-1, -2]], [-5], x)


def test_degenerate_system():
    # redundant and degenerate rows
    a = [[1, -1, 0], [0, 1, -1], [1, 0, -1], [1, 1, 1]]
    b = [0, 0, 0, 3]
    x = nonnegative_solution(dense_to_rows(a), b, 3)
    assert x == [1, 1, 1]


systems = st.integers(1, 6).flatmap(
    lambda m: st.integers(1, 6).flatmap(
        lambda n: st.tuples(
            st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n), min_size=m, max_size=m),
            st.lists(st.integers(-4, 4), min_size=m, max_size=m),
        )
    )
)


@settings(max_examples=300, deadline=None)
@given(systems)
def test_agrees_with_floating_point_solver(system):
    a, b = system
    n = len(a[0])
    x = nonnegative_solution(dense_to_rows(a), b, n)
    ref = linprog(np.zeros(n), A_eq=np.array(a, float), b_eq=np.array(b, float),
                  bounds=[(0, None)] * n, method="highs")
    if x is not None:
        check(a, b, x)
        assert ref.status == 0
    else:
        assert ref.status == 2


@settings(max_examples=150, deadline=None)
@given(systems)
def test_bland_rule_throughout(system):
    from tddelaunay import lp

    a, b = system
    n = len(a[0])
    saved = lp.DEGENERATE_RUN
    lp.DEGENERATE_RUN = 0
    try:
        x = nonnegative_solution(dense_to_rows(a), b, n)
    finally:
        lp.DEGENERATE_RUN = saved
    assert (x is None) == (nonnegative_solution(dense_to_rows(a), b, n) is None)
    if x is not None:
        check(a, b, x)

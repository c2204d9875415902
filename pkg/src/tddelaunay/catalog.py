"""Small worked examples with known answers."""

from fractions import Fraction

from .geom import PointConfiguration
from .represent import Representation
from .witness import counterexample_representation

__all__ = [
    "five_element_representation",
    "FIVE_ELEMENT_FACETS",
    "triangle_representation",
    "TRIANGLE_MATRIX",
    "TRIANGLE_INEQUALITIES",
    "triangle_points",
    "counterexample_representation",
]


def five_element_representation():
    return Representation((("1", "2", "5", "4", "3"), ("3", "2", "1", "4", "5"), ("5", "4", "3", "2", "1")))


FIVE_ELEMENT_FACETS = {frozenset("12"), frozenset("234"), frozenset("245")}


def triangle_representation():
    return Representation((tuple("bca"), tuple("acb"), tuple("abc")))


# (edge, order) -> {(vertex, coord): coefficient}, orders and coords 1-based
TRIANGLE_MATRIX = {
    ("bc", 1): {("b", 1): -1, ("c", 1): 1},
    ("ac", 1): {("a", 1): 1, ("c", 1): -1},
    ("ab", 1): {("a", 1): 1, ("b", 1): -1},
    ("bc", 2): {("b", 2): 1, ("c", 2): -1},
    ("ac", 2): {("a", 2): -1, ("c", 2): 1},
    ("ab", 2): {("a", 2): -1, ("b", 2): 1},
    ("bc", 3): {("b", 1): 1, ("c", 1): -1, ("b", 2): 1, ("c", 2): -1},
    ("ac", 3): {("a", 1): 1, ("c", 1): -1, ("a", 2): 1, ("c", 2): -1},
    ("ab", 3): {("a", 1): 1, ("b", 1): -1, ("a", 2): 1, ("b", 2): -1},
}

# each inequality as (smaller side, larger side): sums of (vertex, coord)
TRIANGLE_INEQUALITIES = [
    ((("b", 1),), (("c", 1),)),
    ((("c", 1),), (("a", 1),)),
    ((("b", 1),), (("a", 1),)),
    ((("c", 2),), (("b", 2),)),
    ((("a", 2),), (("c", 2),)),
    ((("a", 2),), (("b", 2),)),
    ((("c", 1), ("c", 2)), (("b", 1), ("b", 2))),
    ((("c", 1), ("c", 2)), (("a", 1), ("a", 2))),
    ((("b", 1), ("b", 2)), (("a", 1), ("a", 2))),
]


def triangle_points():
    """Three points of H_3 whose coordinate orders give the triangle
    representation."""
    F = Fraction
    return PointConfiguration(3, {
        "a": (F(7, 10), F(1, 10), F(1, 5)),
        "b": (F(1, 10), F(3, 5), F(3, 10)),
        "c": (F(3, 10), F(3, 10), F(2, 5)),
    })

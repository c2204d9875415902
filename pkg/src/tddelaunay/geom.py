"""Exact geometry in the hyperplane H_d = {x in R^d : x_1 + ... + x_d = 1}.

Coordinates are :class:`fractions.Fraction`.  A regular simplex is given by
its corner ``c`` and is the set ``{u in H_d : u_i <= c_i}``; its interior
uses strict inequalities.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .complex import SimplicialComplex
from .represent import Representation

__all__ = [
    "PointConfiguration",
    "as_fraction",
    "in_general_position",
    "corner_of",
    "tdd",
    "representation_of",
    "homothety_decompose",
    "canonical_simplex_vertices",
]


def as_fraction(value):
    """Parse ``"p/q"``, ``"p"``, ints and Fractions; floats are rejected."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or isinstance(value, float):
        raise TypeError(f"exact rational expected, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        s = value.strip()
        if "/" in s:
            p, q = s.split("/")
            return Fraction(int(p), int(q))
        return Fraction(int(s))
    raise TypeError(f"cannot read {value!r} as a rational")


@dataclass(frozen=True)
class PointConfiguration:
    """Labeled points of H_d with exact coordinates."""

    d: int
    points: dict

    def __post_init__(self):
        if self.d < 2:
            raise ValueError("d must be >= 2")
        pts = {}
        for label, coords in self.points.items():
            if not isinstance(label, str) or not label:
                raise ValueError(f"point labels must be nonempty strings, got {label!r}")
            coords = tuple(as_fraction(c) for c in coords)
            if len(coords) != self.d:
                raise ValueError(f"point {label!r} has {len(coords)} coordinates, expected {self.d}")
            if sum(coords) != 1:
                raise ValueError(f"point {label!r} not on H_d: sum {sum(coords)} != 1")
            pts[label] = coords
        object.__setattr__(self, "points", dict(sorted(pts.items())))

    @property
    def labels(self):
        return tuple(self.points)

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        if not isinstance(other, PointConfiguration):
            return NotImplemented
        return self.d == other.d and self.points == other.points

    def __hash__(self):
        return hash((self.d, tuple(self.points.items())))


def in_general_position(p):
    """True iff no two points share a value in any coordinate."""
    for i in range(p.d):
        column = [x[i] for x in p.points.values()]
        if len(set(column)) != len(column):
            return False
    return True


def _require_general_position(p):
    if not in_general_position(p):
        raise ValueError("points are not in general position: two points share a coordinate")


def corner_of(p, face):
    """Componentwise maximum of the points of ``face``."""
    face = list(face)
    if not face:
        raise ValueError("corner of the empty face is undefined")
    for v in face:
        if v not in p.points:
            raise KeyError(f"unknown point {v!r}")
    return tuple(max(p.points[v][i] for v in face) for i in range(p.d))


def _interior_is_empty(p, corner):
    for x in p.points.values():
        if all(xi < ci for xi, ci in zip(x, corner)):
            return False
    return True


def tdd(p):
    """TD-Delaunay complex of a general-position configuration.

    A subset is a face iff the smallest regular simplex containing it has
    no point of ``p`` in its interior.
    """
    _require_general_position(p)
    faces = [frozenset()]
    labels = p.labels
    for k in range(1, min(p.d, len(labels)) + 1):
        found = False
        for sub in combinations(labels, k):
            if _interior_is_empty(p, corner_of(p, sub)):
                faces.append(frozenset(sub))
                found = True
        if not found:
            break
    return SimplicialComplex(faces)


def representation_of(p):
    """The ``d`` coordinate orders of ``p``."""
    _require_general_position(p)
    return Representation(
        tuple(tuple(sorted(p.points, key=lambda v: p.points[v][i])) for i in range(p.d))
    )


def homothety_decompose(c):
    """Write the regular simplex with corner ``c`` as ``h(S_1)``.

    Returns ``(alpha, omega)`` with ``h(u) = alpha * u + (1 - alpha) * omega``
    mapping the canonical simplex onto it.  When ``alpha == 1`` the map is
    the identity and the barycenter is returned as center.  A corner with
    ``alpha == 1`` other than ``(1, ..., 1)`` gives a translate of the
    canonical simplex, which no homothety produces; that raises.
    """
    c = tuple(as_fraction(x) for x in c)
    d = len(c)
    if d < 2:
        raise ValueError("corner needs at least 2 coordinates")
    total = sum(c)
    if total < 1:
        raise ValueError(f"not a positive simplex: coordinate sum {total} < 1")
    alpha = (total - 1) / (d - 1)
    if alpha == 1:
        if any(ci != 1 for ci in c):
            raise ValueError(f"corner {c} gives a translate of the canonical simplex, not a homothetic image")
        return alpha, tuple(Fraction(1, d) for _ in range(d))
    return alpha, tuple((ci - alpha) / (1 - alpha) for ci in c)


def canonical_simplex_vertices(d):
    """Extreme points of ``{u in H_d : u_i <= 1}``: vertex ``k`` has
    ``2 - d`` at index ``k`` and 1 elsewhere."""
    return [tuple(Fraction(2 - d) if i == k else Fraction(1) for i in range(d)) for k in range(d)]

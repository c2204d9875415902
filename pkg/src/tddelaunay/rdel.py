"""Rectangular Delaunay complexes of planar point sets.

A subset ``F`` is a face when some axis-parallel rectangle meets the point
set exactly in ``F`` and has no point in its interior.  Such a rectangle can
always be shrunk to the bounding box of ``F``, so only bounding boxes are
tested.  Each side of a box holds at most one point, hence faces have at
most four points.
"""

from dataclasses import dataclass
from itertools import combinations

from .complex import SimplicialComplex
from .geom import as_fraction
from .represent import Representation
from .tdsystem import realize

__all__ = ["PlanarPointSet", "rdelaunay", "four_order_representation", "rdel_realize"]


@dataclass(frozen=True)
class PlanarPointSet:
    """Labeled points of the plane, no two sharing an x or a y value."""

    points: dict

    def __post_init__(self):
        pts = {}
        for label, xy in self.points.items():
            if not isinstance(label, str) or not label:
                raise ValueError(f"point labels must be nonempty strings, got {label!r}")
            xy = tuple(as_fraction(c) for c in xy)
            if len(xy) != 2:
                raise ValueError(f"point {label!r} needs 2 coordinates, got {len(xy)}")
            pts[label] = xy
        for axis, name in ((0, "x"), (1, "y")):
            values = [p[axis] for p in pts.values()]
            if len(set(values)) != len(values):
                raise ValueError(f"two points share an {name}-coordinate")
        object.__setattr__(self, "points", dict(sorted(pts.items())))

    @property
    def labels(self):
        return tuple(self.points)

    def __len__(self):
        return len(self.points)


def _box_interior_empty(pts, sub):
    xs = [pts[v][0] for v in sub]
    ys = [pts[v][1] for v in sub]
    x0, x1, y0, y1 = min(xs), max(xs), min(ys), max(ys)
    return not any(x0 < x < x1 and y0 < y < y1 for x, y in pts.values())


def rdelaunay(p):
    """R-Delaunay complex of ``p``."""
    faces = [frozenset()]
    for k in range(1, min(4, len(p)) + 1):
        for sub in combinations(p.labels, k):
            if _box_interior_empty(p.points, sub):
                faces.append(frozenset(sub))
    return SimplicialComplex(faces)


def four_order_representation(p):
    """Orders: increasing x, decreasing x, increasing y, decreasing y."""
    by_x = tuple(sorted(p.points, key=lambda v: p.points[v][0]))
    by_y = tuple(sorted(p.points, key=lambda v: p.points[v][1]))
    return Representation((by_x, by_x[::-1], by_y, by_y[::-1]))


def rdel_realize(p):
    """Points of H_4 whose TD-Delaunay complex equals ``rdelaunay(p)``."""
    q = realize(four_order_representation(p))
    if q is None:
        raise RuntimeError("TD-Delaunay system of a rectangle representation is infeasible")
    return q

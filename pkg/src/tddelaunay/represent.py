"""d-representations: tuples of linear orders and the complexes they generate.

A representation is stored as ``d`` tuples of labels, each listed in
increasing order.  ``sigma`` returns the complex of all sets dominated by
every element.  The path-certificate functions return explicit witnesses
found by breadth-first search on the 1-skeleton of that complex.
"""

from collections import deque
from dataclasses import dataclass
from functools import cached_property

from .complex import SimplicialComplex

__all__ = [
    "Representation",
    "StandardnessReport",
    "dominates",
    "sigma",
    "is_vertex",
    "swap_consecutive",
    "increasing_path",
    "increasing_path_exists",
    "certify_face_paths",
    "certify_nonface",
    "standardness",
    "standardness_from_complex",
]


@dataclass(frozen=True)
class Representation:
    """``d`` linear orders on a common element set.

    Orders are 0-indexed; ``orders[i]`` lists the elements of order ``i``
    from smallest to largest.
    """

    orders: tuple

    def __post_init__(self):
        orders = tuple(tuple(o) for o in self.orders)
        object.__setattr__(self, "orders", orders)
        if not orders:
            raise ValueError("a representation needs at least one order (d >= 1)")
        base = orders[0]
        if len(set(base)) != len(base):
            raise ValueError(f"duplicate element in order 1: {list(base)}")
        for v in base:
            if not isinstance(v, str) or not v:
                raise ValueError(f"element labels must be nonempty strings, got {v!r}")
        for i, o in enumerate(orders[1:], start=2):
            if len(o) != len(base) or set(o) != set(base):
                raise ValueError(f"order {i} is not a permutation of order 1's elements")

    @property
    def d(self):
        return len(self.orders)

    @cached_property
    def elements(self):
        return tuple(sorted(self.orders[0]))

    @cached_property
    def positions(self):
        """``positions[i][v]`` is the rank of ``v`` in order ``i``."""
        return tuple({v: k for k, v in enumerate(o)} for o in self.orders)

    @cached_property
    def _index(self):
        return {v: k for k, v in enumerate(self.elements)}

    @cached_property
    def _below(self):
        # _below[v][i]: bitmask of elements <=_i v
        idx = self._index
        below = [[0] * self.d for _ in self.elements]
        for i, o in enumerate(self.orders):
            mask = 0
            for v in o:
                mask |= 1 << idx[v]
                below[idx[v]][i] = mask
        return below

    @cached_property
    def _strict_below(self):
        # _strict_below[v][i]: bitmask of elements <_i v
        return [[b & ~(1 << k) for b in masks] for k, masks in enumerate(self._below)]

    @cached_property
    def complex(self):
        return sigma(self)

    def less(self, i, x, y):
        """``x <_i y``."""
        pos = self.positions[i]
        return pos[x] < pos[y]

    def max_in(self, i, face):
        pos = self.positions[i]
        return max(face, key=pos.__getitem__)

    def min_in(self, i, face):
        pos = self.positions[i]
        return min(face, key=pos.__getitem__)

    def mask(self, face):
        idx = self._index
        m = 0
        for v in face:
            m |= 1 << idx[v]
        return m

    def permuted(self, perm):
        """Representation whose order ``k`` is this one's order ``perm[k]``."""
        return Representation(tuple(self.orders[p] for p in perm))

    def __repr__(self):
        rows = ", ".join(" ".join(o) for o in self.orders)
        return f"Representation(d={self.d}, [{rows}])"


@dataclass(frozen=True)
class StandardnessReport:
    is_standard: bool
    maxima: tuple = None


def _check_elements(r, items):
    idx = r._index
    for v in items:
        if v not in idx:
            raise KeyError(f"unknown element {v!r}")


def dominates(r, x, face):
    """True iff ``x`` dominates ``face`` in at least one order of ``r``."""
    face = frozenset(face)
    _check_elements(r, face | {x})
    m = r.mask(face)
    return any(m & ~b == 0 for b in r._below[r._index[x]])


def _dominated_by_all(below, m):
    for masks in below:
        for b in masks:
            if m & ~b == 0:
                break
        else:
            return False
    return True


def sigma(r):
    """The complex of all subsets dominated by every element of ``r``.

    ``F`` fails exactly when some element lies strictly below the maximum
    of ``F`` in every order.  The set of elements strictly below
    ``max_i(F)`` is the union of the strict down-sets of the members of
    ``F``, so faces are grown one element at a time while the intersection
    of those unions over all orders stays empty.  A non-face has no face
    above it, which prunes the search.
    """
    elements = r.elements
    n = len(elements)
    strict = r._strict_below
    found = []

    def grow(mask, unions, start):
        for k in range(start, n):
            nxt = [u | s for u, s in zip(unions, strict[k])]
            meet = nxt[0]
            for u in nxt[1:]:
                meet &= u
            if meet == 0:
                found.append(mask | 1 << k)
                grow(mask | 1 << k, nxt, k + 1)

    grow(0, [0] * r.d, 0)
    faces = [frozenset()]
    faces.extend(frozenset(elements[k] for k in range(n) if m >> k & 1) for m in found)
    return SimplicialComplex(faces)


def is_vertex(r, x):
    """True iff ``{x}`` is a face of ``sigma(r)``."""
    _check_elements(r, [x])
    return _dominated_by_all(r._below, 1 << r._index[x])


def swap_consecutive(r, i, x, y):
    """Transpose two consecutive elements of order ``i``.

    The pair must be two vertices of ``sigma(r)`` that do not span an
    edge; under those conditions the generated complex is unchanged.
    """
    _check_elements(r, [x, y])
    if x == y:
        raise ValueError("swap needs two different elements")
    if not (0 <= i < r.d):
        raise IndexError(f"order index {i} out of range for d={r.d}")
    for v in (x, y):
        if not is_vertex(r, v):
            raise ValueError(f"{v!r} is not a vertex of sigma(R)")
    if frozenset((x, y)) in r.complex:
        raise ValueError(f"{{{x}, {y}}} is an edge of sigma(R)")
    pos = r.positions[i]
    if abs(pos[x] - pos[y]) != 1:
        raise ValueError(f"{x!r} and {y!r} are not consecutive in order {i}")
    order = list(r.orders[i])
    a, b = pos[x], pos[y]
    order[a], order[b] = order[b], order[a]
    orders = list(r.orders)
    orders[i] = tuple(order)
    return Representation(tuple(orders))


def _increasing_search(r, i, source, targets, adj):
    pos = r.positions[i]
    prev = {source: None}
    queue = deque([source])
    while queue:
        u = queue.popleft()
        if u in targets:
            path = [u]
            while prev[path[-1]] is not None:
                path.append(prev[path[-1]])
            return path[::-1]
        for w in adj.get(u, ()):
            if w not in prev and pos[u] < pos[w]:
                prev[w] = u
                queue.append(w)
    return None


def increasing_path(r, i, x, y):
    """A path ``x = a_0, ..., a_k = y`` in the 1-skeleton of ``sigma(r)``
    ascending in order ``i``, or ``None``."""
    _check_elements(r, [x, y])
    return _increasing_search(r, i, x, {y}, r.complex.neighbors())


def increasing_path_exists(r, i, x, y):
    return increasing_path(r, i, x, y) is not None


def certify_face_paths(r, face, x):
    """For a face and a vertex ``x``, increasing paths from the face's
    maximum to ``x``, keyed by order index.  At least one order is present.
    """
    face = frozenset(face)
    _check_elements(r, face | {x})
    if not face:
        raise ValueError("face must be nonempty")
    if face not in r.complex:
        raise ValueError(f"{sorted(face)} is not a face of sigma(R)")
    if not is_vertex(r, x):
        raise ValueError(f"{x!r} is not a vertex of sigma(R)")
    adj = r.complex.neighbors()
    out = {}
    for i in range(r.d):
        path = _increasing_search(r, i, r.max_in(i, face), {x}, adj)
        if path is not None:
            out[i] = path
    if not out:
        raise RuntimeError(f"no increasing path from {sorted(face)} to {x!r} in any order")
    return out


def certify_nonface(r, face):
    """Witness that ``face`` is not in ``sigma(r)``.

    Returns ``(x, paths)`` where ``x`` dominates ``face`` in no order and
    ``paths[i] = (f, path)`` is an increasing path in order ``i`` from ``x``
    to a member ``f`` of the face.
    """
    face = frozenset(face)
    _check_elements(r, face)
    if face in r.complex:
        raise ValueError(f"{sorted(face)} is a face of sigma(R)")
    adj = r.complex.neighbors()
    for x in r.elements:
        if dominates(r, x, face):
            continue
        paths = {}
        for i in range(r.d):
            path = _increasing_search(r, i, x, face, adj)
            if path is None:
                break
            paths[i] = (path[-1], path)
        else:
            return x, paths
    raise RuntimeError(f"no path certificate for the non-face {sorted(face)}")


def standardness(r):
    """Check directly whether every element is a vertex of ``sigma(r)`` and
    each order's maximum is among the ``d - 1`` smallest elements of every
    other order."""
    if len(r.elements) < r.d:
        raise ValueError(f"standardness needs at least d={r.d} elements")
    if not all(is_vertex(r, v) for v in r.elements):
        return StandardnessReport(False, None)
    maxima = tuple(o[-1] for o in r.orders)
    for i, m in enumerate(maxima):
        for j in range(r.d):
            if j != i and r.positions[j][m] >= r.d - 1:
                return StandardnessReport(False, None)
    return StandardnessReport(True, maxima)


def standardness_from_complex(c, d, ground_set=None):
    """Recover the maxima of a standard representation from its complex.

    Requires every face to lie in a face of size ``d`` and every face of
    size ``d - 1`` to lie in at least two of them, except for exactly ``d``
    faces ``M - {m}`` (``m`` in ``M``) lying in exactly one.  Returns the
    sorted tuple ``M`` or ``None``.

    A complex only knows its vertices.  Pass ``ground_set`` (the elements of
    the representation) to also require each of them to be a vertex.
    """
    if d < 1:
        raise ValueError("d must be >= 1")
    if ground_set is not None and set(ground_set) != set(c.vertices):
        return None
    tops = c.k_faces(d - 1)
    if not tops:
        return None
    if any(len(f) != d for f in c.facets()):
        return None
    if d == 1:
        return tuple(c.vertices) if len(c.vertices) == 1 else None
    count = {}
    for t in tops:
        for v in t:
            ridge = t - {v}
            count[ridge] = count.get(ridge, 0) + 1
    deficient = [f for f, n in count.items() if n == 1]
    if len(deficient) != d:
        return None
    union = frozenset().union(*deficient)
    if len(union) != d:
        return None
    if {union - {m} for m in union} != set(deficient):
        return None
    return tuple(sorted(union))


"""Abstract simplicial complexes stored as explicit face sets.

Faces are ``frozenset`` objects of string labels.  The complexes handled
here are tiny (a few dozen vertices at most), so every face is stored.
"""

from itertools import combinations

__all__ = ["Face", "SimplicialComplex", "close_downward", "facets", "k_faces", "face_key"]

Face = frozenset


def face_key(face):
    """Sort key giving a deterministic order on faces: by size, then labels."""
    return (len(face), sorted(face))


def _as_face(vertices):
    vertices = list(vertices)
    face = frozenset(vertices)
    if len(face) != len(vertices):
        raise ValueError(f"duplicate vertex label in {vertices!r}")
    for v in face:
        if not isinstance(v, str) or not v:
            raise ValueError(f"vertex labels must be nonempty strings, got {v!r}")
    return face


class SimplicialComplex:
    """A downward-closed family of finite vertex sets.

    Construct with :func:`close_downward` or :meth:`from_faces`.  The empty
    face is always present.  Two complexes are equal when they have the
    same faces; the vertex set is the set of 0-faces.
    """

    __slots__ = ("_faces", "_vertices", "_facets", "_levels")

    def __init__(self, faces):
        faces = set(faces)
        faces.add(frozenset())
        for face in faces:
            for v in face:
                if frozenset((v,)) not in faces:
                    raise ValueError(f"face family is not downward closed: missing {{{v}}}")
        self._faces = frozenset(faces)
        self._vertices = tuple(sorted(v for f in faces if len(f) == 1 for v in f))
        self._facets = None
        self._levels = {}

    @classmethod
    def from_faces(cls, faces, check=True):
        faces = {frozenset(f) for f in faces}
        if check:
            for f in faces:
                for k in range(len(f)):
                    for sub in combinations(f, k):
                        if frozenset(sub) not in faces and sub:
                            raise ValueError(
                                f"face family is not downward closed: {sorted(sub)} missing"
                            )
        return cls(faces)

    @property
    def vertices(self):
        return self._vertices

    @property
    def faces(self):
        return self._faces

    @property
    def dimension(self):
        return max(len(f) for f in self._faces) - 1

    def __contains__(self, face):
        return frozenset(face) in self._faces

    def __iter__(self):
        return iter(sorted(self._faces, key=face_key))

    def __len__(self):
        return len(self._faces)

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._faces == other._faces

    def __hash__(self):
        return hash(self._faces)

    def __repr__(self):
        shown = [sorted(f) for f in sorted(self.facets(), key=face_key)]
        return f"SimplicialComplex(facets={shown})"

    def facets(self):
        if self._facets is None:
            self._facets = frozenset(_maximal(self._faces))
        return self._facets

    def k_faces(self, k):
        if k < -1:
            raise ValueError("k must be >= -1")
        if k not in self._levels:
            self._levels[k] = sorted((f for f in self._faces if len(f) == k + 1), key=face_key)
        return list(self._levels[k])

    def edges(self):
        return self.k_faces(1)

    def neighbors(self):
        """Adjacency map of the 1-skeleton."""
        adj = {v: set() for v in self._vertices}
        for e in self.edges():
            x, y = e
            adj[x].add(y)
            adj[y].add(x)
        return adj

    def nonempty_faces(self):
        return [f for f in self if f]


def _maximal(faces):
    faces = [f for f in faces if f]
    out = []
    for f in faces:
        if not any(f < g for g in faces):
            out.append(f)
    return out


def close_downward(facets, vertices=None):
    """Build the complex generated by ``facets``.

    ``vertices`` optionally declares the vertex set; every facet must lie in
    it and each declared vertex becomes a 0-face.
    """
    facets = [_as_face(f) for f in facets]
    declared = None
    if vertices is not None:
        declared = _as_face(vertices)
        for f in facets:
            extra = f - declared
            if extra:
                raise ValueError(f"facet uses undeclared vertices {sorted(extra)}")
    faces = {frozenset()}
    for f in facets:
        if f in faces:
            continue
        items = sorted(f)
        for k in range(1, len(items) + 1):
            faces.update(frozenset(s) for s in combinations(items, k))
    if declared is not None:
        faces.update(frozenset((v,)) for v in declared)
    return SimplicialComplex(faces)


def facets(c):
    """Inclusion-maximal nonempty faces of ``c``."""
    return c.facets()


def k_faces(c, k):
    """Faces with exactly ``k + 1`` vertices, in deterministic order."""
    return c.k_faces(k)

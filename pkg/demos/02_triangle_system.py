"""The TD-Delaunay system of a small representation, solved exactly.

Rows are (edge, order) pairs, columns are (vertex, coordinate) pairs for
the first d - 1 coordinates.  A strict solution, lifted to the hyperplane
sum(x) = 1, gives points whose TD-Delaunay complex is the triangle.
"""

from tddelaunay.catalog import triangle_representation
from tddelaunay.geom import tdd
from tddelaunay.tdsystem import build_system, decide, evaluate, realize

r = triangle_representation()
s = build_system(r)
print("shape:", s.shape)
print(" " * 6 + "".join(f"{v + str(j + 1):>5}" for v, j in s.cols))
for (edge, i), row in zip(s.rows, s.to_dense()):
    print(f"{''.join(edge)},{i + 1}".ljust(6) + "".join(f"{int(x):>5}" for x in row))

verdict = decide(r)
x = [verdict.solution[v][j] for v, j in s.cols]
print("solution:", {v: [str(c) for c in cs] for v, cs in verdict.solution.items()})
print("slacks:  ", [str(v) for v in evaluate(s, x)])

p = realize(r)
for v, coords in p.points.items():
    print(f"  {v} = ({', '.join(str(c) for c in coords)})")
print("tdd facets:", sorted(sorted(f) for f in tdd(p).facets()))

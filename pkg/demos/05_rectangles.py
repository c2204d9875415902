"""Rectangular Delaunay complexes are TD-Delaunay complexes of H_4.

Sorting planar points by x, by -x, by y and by -y gives a 4-representation
whose complex is the rectangular Delaunay complex.  Two of its orders are
reverses of the other two, which makes the system solvable; the solution
is a point set of H_4 with the same complex.
"""

from tddelaunay.geom import tdd
from tddelaunay.rdel import PlanarPointSet, four_order_representation, rdel_realize, rdelaunay

p = PlanarPointSet({
    "n": (2, 4), "e": (4, 2), "s": ("5/2", 0), "w": (0, "5/2"), "c": ("3/2", "3/2"),
})
c = rdelaunay(p)
print("facets:", sorted("".join(sorted(f)) for f in c.facets()))

r = four_order_representation(p)
for name, order in zip(("x", "-x", "y", "-y"), r.orders):
    print(f"  {name:>2}: {' '.join(order)}")

q = rdel_realize(p)
for v, coords in q.points.items():
    print(f"  {v}: ({', '.join(str(x) for x in coords)})")
print("same complex in H_4:", tdd(q) == c)

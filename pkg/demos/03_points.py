"""From points to complexes and back.

Random rational points of H_4 go through tdd() and through their coordinate
orders; the two complexes agree.  The orders are then realized again and
the new points have the same complex.
"""

import random
from fractions import Fraction

from tddelaunay.geom import PointConfiguration, in_general_position, representation_of, tdd
from tddelaunay.represent import sigma
from tddelaunay.tdsystem import realize

rng = random.Random(7)


def random_config(d, n):
    while True:
        pts = {}
        for k in range(n):
            head = [Fraction(rng.randint(-30, 30), rng.randint(1, 8)) for _ in range(d - 1)]
            pts[f"p{k}"] = head + [1 - sum(head)]
        p = PointConfiguration(d, pts)
        if in_general_position(p):
            return p


p = random_config(4, 7)
c = tdd(p)
r = representation_of(p)
print(f"{len(c.facets())} facets, sigma agrees: {c == sigma(r)}")
for f in sorted(c.facets(), key=sorted):
    print("  ", " ".join(sorted(f)))

q = realize(r)
print("realized again, same complex:", tdd(q) == c)

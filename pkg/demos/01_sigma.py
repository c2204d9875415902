"""The complex generated by a representation.

A face is a set of elements that every element dominates in at least one
order.  We build the five-element 3-representation, list its facets, and
ask for path certificates of a face and of a non-face.
"""

from tddelaunay.catalog import five_element_representation
from tddelaunay.represent import certify_face_paths, certify_nonface, sigma

r = five_element_representation()
for i, order in enumerate(r.orders, 1):
    print(f"order {i}: {' < '.join(order)}")

c = sigma(r)
print("facets:", sorted(sorted(f) for f in c.facets()))
print("edges: ", ["".join(sorted(e)) for e in c.edges()])

# {2,3,4} is a face: element 1 is reached from the face's maximum by an
# increasing path in some order
for order, path in certify_face_paths(r, {"2", "3", "4"}, "1").items():
    print(f"  order {order + 1}: {' -> '.join(path)}")

# {1,2,3} is not: the witness dominates it in no order, and in every order
# an increasing path leads from the witness into the set (length 0 when
# the witness is itself a member)
x, why = certify_nonface(r, {"1", "2", "3"})
print(f"{{1,2,3}} is not a face; witness {x!r}")
for order, (f, path) in why.items():
    above = max({"1", "2", "3"}, key=r.positions[order].get)
    print(f"  order {order + 1}: {above} is above {x}; path into the set: {' -> '.join(path)}")

"""A 4-dimensional complex that no point set of H_4 produces.

The representation below generates a complex whose TD-Delaunay system has
no solution.  The certificate is a multi-flow: four flows, one per order,
with equal divergence at every vertex.  Pass --sweep to check all 31104
candidate representations of the same complex (a few minutes).
"""

import sys

from tddelaunay.represent import sigma, standardness_from_complex
from tddelaunay.tdsystem import build_system, decide, verify_multiflow
from tddelaunay.witness import counterexample_representation, fixed_multiflow, verify_counterexample

r = counterexample_representation()
delta = sigma(r)
print(f"{len(delta.vertices)} vertices, {len(delta.edges())} edges, {len(delta.k_faces(3))} tetrahedra")
print("maxima:", standardness_from_complex(delta, 4))
print("system:", build_system(r).shape)

verdict = decide(r)
print("feasible:", verdict.feasible)
for i, flow in enumerate(verdict.multiflow.flows, 1):
    arcs = ", ".join(f"{x}->{y}: {v}" for (x, y), v in sorted(flow.items()))
    print(f"  flow {i}: {arcs}")

fixed = fixed_multiflow(r)
print("fixed e/f/g/h flow valid:", verify_multiflow(r, fixed))
print("divergences:", {v: int(x) for v, x in fixed.divergences(0, r.elements).items() if x})

if "--sweep" in sys.argv:
    print(verify_counterexample().summary())

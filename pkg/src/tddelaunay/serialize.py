"""JSON (and CSV) encodings of the library's objects.

Rationals are written as strings ``"p/q"`` (``"p"`` for integers); on
input plain integers are accepted too.  Order and coordinate indices are
1-based in every external format.
"""

import csv
import io
import json
from fractions import Fraction

from .complex import close_downward, face_key
from .geom import PointConfiguration, as_fraction
from .rdel import PlanarPointSet
from .represent import Representation
from .tdsystem import FeasibilityVerdict, MultiFlow

__all__ = [
    "dumps",
    "complex_to_json",
    "complex_from_json",
    "representation_to_json",
    "representation_from_json",
    "points_to_json",
    "points_from_json",
    "planar_from_json",
    "planar_to_json",
    "system_to_json",
    "system_to_csv",
    "multiflow_to_json",
    "multiflow_from_json",
    "verdict_to_json",
    "verdict_from_json",
    "report_to_json",
]


def dumps(obj):
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _q(x):
    return str(Fraction(x))


def _require(obj, *keys):
    if not isinstance(obj, dict):
        raise ValueError(f"expected a JSON object, got {type(obj).__name__}")
    for k in keys:
        if k not in obj:
            raise ValueError(f"missing field {k!r}")


def complex_to_json(c):
    return {
        "vertices": list(c.vertices),
        "facets": [sorted(f) for f in sorted(c.facets(), key=face_key)],
    }


def complex_from_json(obj):
    _require(obj, "facets")
    return close_downward(obj["facets"], obj.get("vertices"))


def representation_to_json(r):
    return {"d": r.d, "elements": list(r.elements), "orders": [list(o) for o in r.orders]}


def representation_from_json(obj):
    _require(obj, "orders")
    r = Representation(tuple(tuple(o) for o in obj["orders"]))
    if "d" in obj and obj["d"] != r.d:
        raise ValueError(f"d={obj['d']} but {r.d} orders given")
    if "elements" in obj:
        elements = list(obj["elements"])
        if len(set(elements)) != len(elements):
            raise ValueError("duplicate label in elements")
        if set(elements) != set(r.elements):
            raise ValueError("orders are not permutations of the listed elements")
    return r


def points_to_json(p):
    return {"d": p.d, "points": {v: [_q(x) for x in c] for v, c in p.points.items()}}


def points_from_json(obj):
    _require(obj, "d", "points")
    return PointConfiguration(int(obj["d"]), dict(obj["points"]))


def planar_to_json(p):
    return {"points": {v: [_q(x) for x in c] for v, c in p.points.items()}}


def planar_from_json(obj):
    _require(obj, "points")
    return PlanarPointSet(dict(obj["points"]))


def system_to_json(s):
    return {
        "d": s.d,
        "rows": [{"edge": list(e), "order": i + 1} for e, i in s.rows],
        "cols": [{"vertex": v, "coord": j + 1} for v, j in s.cols],
        "entries": [[k, c, v] for (k, c), v in sorted(s.entries.items())],
    }


def system_to_csv(s):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["row", "edge", "order", "col", "vertex", "coord", "value"])
    for (k, c), v in sorted(s.entries.items()):
        e, i = s.rows[k]
        u, j = s.cols[c]
        w.writerow([k, "".join(e) if all(len(x) == 1 for x in e) else "-".join(e), i + 1, c, u, j + 1, v])
    return buf.getvalue()


def multiflow_to_json(m):
    out = []
    for i, f in enumerate(m.flows):
        for (x, y), v in sorted(f.items()):
            if v:
                out.append({"order": i + 1, "from": x, "to": y, "value": _q(v)})
    return out


def multiflow_from_json(items, d):
    flows = [{} for _ in range(d)]
    for item in items:
        _require(item, "order", "from", "to", "value")
        i = int(item["order"]) - 1
        if not 0 <= i < d:
            raise ValueError(f"order {item['order']} out of range for d={d}")
        flows[i][item["from"], item["to"]] = as_fraction(item["value"])
    return MultiFlow(tuple(flows))


def verdict_to_json(v):
    if v.feasible:
        return {
            "feasible": True,
            "solution": {u: [_q(x) for x in c] for u, c in sorted(v.solution.items())},
        }
    return {"feasible": False, "multiflow": multiflow_to_json(v.multiflow)}


def verdict_from_json(obj, d):
    _require(obj, "feasible")
    if obj["feasible"]:
        _require(obj, "solution")
        sol = {u: tuple(as_fraction(x) for x in c) for u, c in obj["solution"].items()}
        return FeasibilityVerdict(solution=sol)
    _require(obj, "multiflow")
    return FeasibilityVerdict(multiflow=multiflow_from_json(obj["multiflow"], d))


def report_to_json(rep):
    return {
        "delta": complex_to_json(rep.delta),
        "candidates_total": rep.candidates_total,
        "candidates_matching": rep.candidates_matching,
        "all_infeasible": rep.all_infeasible,
        "fixed_flow_all_valid": rep.fixed_flow_all_valid,
        "feasible": list(rep.feasible),
        "candidates": {
            cid: {
                "infeasible": cid in rep.certificates,
                "fixed_flow_valid": rep.fixed_flow_valid.get(cid, False),
                "multiflow": multiflow_to_json(rep.certificates[cid]) if cid in rep.certificates else None,
            }
            for cid in sorted(rep.fixed_flow_valid)
        },
    }

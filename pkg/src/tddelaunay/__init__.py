"""Dushnik-Miller representations, TD-Delaunay complexes and their
inequality systems, with exact rational arithmetic throughout."""

from .complex import SimplicialComplex, close_downward, facets, k_faces
from .geom import (
    PointConfiguration,
    corner_of,
    homothety_decompose,
    in_general_position,
    representation_of,
    tdd,
)
from .rdel import PlanarPointSet, four_order_representation, rdel_realize, rdelaunay
from .represent import (
    Representation,
    StandardnessReport,
    certify_face_paths,
    certify_nonface,
    dominates,
    increasing_path,
    increasing_path_exists,
    is_vertex,
    sigma,
    standardness,
    standardness_from_complex,
    swap_consecutive,
)
from .tdsystem import (
    FeasibilityVerdict,
    MultiFlow,
    TDSystem,
    build_system,
    decide,
    find_multiflow,
    realize,
    solve_strict,
    verify_multiflow,
)
from .witness import (
    CounterexampleReport,
    counterexample_representation,
    enumerate_candidates,
    verify_counterexample,
)

__version__ = "0.1.0"

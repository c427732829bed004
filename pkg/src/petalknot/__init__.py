"""Petal diagrams of torus knots: constructions, bounds and invariant checks."""

from .bounds import (
    BoundReport,
    bounds_report,
    petal_lower_bound,
    theorem1_value,
    theorem3_upper_bound,
)
from .constructions import (
    HeightAssignment,
    PreconditionError,
    TorusKnotParams,
    braid_to_grid,
    surgery_minus_petal_grid,
    surgery_plus_petal_grid,
    theorem1_petal_grid,
    torus_grid_diagram,
)
from .core import (
    ArcPresentation,
    DiagramError,
    GaussCode,
    GridDiagram,
    PetalGridDiagram,
    PetalPermutation,
    PlanarDiagramCode,
    grid_to_pd,
    petal_grid_to_petal_perm,
    petal_perm_to_petal_grid,
)
from .invariants import (
    InvariantFingerprint,
    alexander_from_pd,
    fingerprint,
    jones_kauffman,
    torus_alexander_oracle,
)
from .laurent import LaurentPolynomial

__version__ = "0.1.0"

__all__ = [
    "ArcPresentation",
    "BoundReport",
    "DiagramError",
    "GaussCode",
    "GridDiagram",
    "HeightAssignment",
    "LaurentPolynomial",
    "InvariantFingerprint",
    "PetalGridDiagram",
    "PetalPermutation",
    "PlanarDiagramCode",
    "PreconditionError",
    "TorusKnotParams",
    "alexander_from_pd",
    "bounds_report",
    "braid_to_grid",
    "fingerprint",
    "grid_to_pd",
    "jones_kauffman",
    "petal_grid_to_petal_perm",
    "petal_lower_bound",
    "petal_perm_to_petal_grid",
    "surgery_minus_petal_grid",
    "surgery_plus_petal_grid",
    "theorem1_petal_grid",
    "theorem1_value",
    "theorem3_upper_bound",
    "torus_alexander_oracle",
    "torus_grid_diagram",
]

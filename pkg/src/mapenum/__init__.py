"""Exact enumeration of orientable maps by genus, edges and vertices.

Rooted counts come from the Carrell-Chapuy recurrences, fixed-genus counts
from the rational form of ``M_g(z)``, and unrooted counts from rooted ones by
summing over cyclic quotient orbifolds.
"""

from ._backend import DEFAULT as BACKEND
from .errors import (
    CoverageError,
    ExactnessError,
    FixtureParseError,
    MapEnumError,
    TableResourceError,
    TableTooSmallError,
)
from .rooted import (
    EdgeTable,
    EdgeVertexTable,
    build_edge_table,
    build_edge_vertex_table,
    lookup,
    reinterpret_as_vertices,
)
from .series import (
    GenusPolynomial,
    RationalForm,
    closed_form_value,
    compute_pg,
    fixed_genus_next,
    fixed_genus_sequence,
    render_rational,
)
from .unrooted import (
    OrbifoldSignature,
    UnrootedTable,
    build_unrooted_table,
    enumerate_signatures,
    epimorphism_count,
    quotient_contribution,
    quotient_contributions,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "CoverageError",
    "EdgeTable",
    "EdgeVertexTable",
    "ExactnessError",
    "FixtureParseError",
    "GenusPolynomial",
    "MapEnumError",
    "OrbifoldSignature",
    "RationalForm",
    "TableResourceError",
    "TableTooSmallError",
    "UnrootedTable",
    "build_edge_table",
    "build_edge_vertex_table",
    "build_unrooted_table",
    "closed_form_value",
    "compute_pg",
    "enumerate_signatures",
    "epimorphism_count",
    "fixed_genus_next",
    "fixed_genus_sequence",
    "lookup",
    "quotient_contribution",
    "quotient_contributions",
    "reinterpret_as_vertices",
    "render_rational",
]

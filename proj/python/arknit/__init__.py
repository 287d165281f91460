"""Stable window computations for path algebra quotients over prime fields.

The C++ core does all the work; this package re-exports its surface.
"""

from arknit._core import (
    Algebra,
    ArknitError,
    Complex,
    analyze_dot,
    analyze_report,
    complex_from_json,
    hom_dims,
    mesh_identities,
    mesh_positivity,
    mesh_rows,
    shift,
    stalk,
)

__all__ = [
    "Algebra",
    "ArknitError",
    "Complex",
    "analyze_dot",
    "analyze_report",
    "complex_from_json",
    "hom_dims",
    "mesh_identities",
    "mesh_positivity",
    "mesh_rows",
    "shift",
    "stalk",
]

__version__ = "0.1.0"

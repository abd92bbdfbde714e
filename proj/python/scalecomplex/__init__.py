"""Simplicial complex of non-chromatic musical scales."""

from ._core import (
    CapacityError,
    DomainError,
    InconsistencyError,
    ParseError,
    PitchUniverse,
    SimplicialComplex,
    StateError,
    build_from_facets,
    build_non_chromatic_complex,
    classify_facets,
    collapse_above_dim,
    complex_from_json,
    connected_components,
    enumerate_maximal_sequences,
    find_free_pairs,
    interval_sequence,
    is_non_chromatic,
    mode_count,
    parse_scale,
    reduced_betti,
    sphere_report,
    verify,
)

__all__ = [
    "CapacityError",
    "DomainError",
    "InconsistencyError",
    "ParseError",
    "PitchUniverse",
    "SimplicialComplex",
    "StateError",
    "build_from_facets",
    "build_non_chromatic_complex",
    "classify_facets",
    "collapse_above_dim",
    "complex_from_json",
    "connected_components",
    "enumerate_maximal_sequences",
    "find_free_pairs",
    "interval_sequence",
    "is_non_chromatic",
    "mode_count",
    "parse_scale",
    "reduced_betti",
    "sphere_report",
    "verify",
]

"""
Sampling and numerical checks for torus knots on the 3-sphere.
"""

from .geometry import (
    MIN_SAMPLES,
    KnotVariant,
    KnotCurveConfig,
    TorusKnotSample,
    minimum_samples,
    equation_locus_radius,
    radii,
    torus_knot_point,
    sample_curve,
    winding_of,
    winding_numbers,
    max_equation_residual,
    sphere_residual,
    torus_residual,
    min_pairwise_distance,
    knot_report,
)

__all__ = [
    "MIN_SAMPLES",
    "KnotVariant",
    "KnotCurveConfig",
    "TorusKnotSample",
    "minimum_samples",
    "equation_locus_radius",
    "radii",
    "torus_knot_point",
    "sample_curve",
    "winding_of",
    "winding_numbers",
    "max_equation_residual",
    "sphere_residual",
    "torus_residual",
    "min_pairwise_distance",
    "knot_report",
]

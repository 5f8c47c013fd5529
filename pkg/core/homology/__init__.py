"""
Simplicial homology with integer coefficients.
"""

from .homology import (
    HomologyGroup,
    boundary_matrix,
    homology,
    boundary_squared_is_zero,
    euler_from_betti,
    homology_to_json,
    homology_signature,
)

__all__ = [
    "HomologyGroup",
    "boundary_matrix",
    "homology",
    "boundary_squared_is_zero",
    "euler_from_betti",
    "homology_to_json",
    "homology_signature",
]

"""
Delta-complex module: cells, face maps, quotients and elementary invariants.
"""

from .delta_complex import (
    MAX_DIM,
    CellId,
    DeltaComplex,
    IdentificationSpec,
    new_complex,
    validate,
    require_valid,
    quotient,
    euler_characteristic,
    boundary_subcomplex,
    closure_subcomplex,
    connected_components,
    relabel,
    standard_simplex,
    find_cell,
)
from .serialization import (
    FORMAT_VERSION,
    complex_to_json,
    complex_from_json,
    dumps_complex,
    loads_complex,
)

__all__ = [
    "MAX_DIM",
    "CellId",
    "DeltaComplex",
    "IdentificationSpec",
    "new_complex",
    "validate",
    "require_valid",
    "quotient",
    "euler_characteristic",
    "boundary_subcomplex",
    "closure_subcomplex",
    "connected_components",
    "relabel",
    "standard_simplex",
    "find_cell",
    "FORMAT_VERSION",
    "complex_to_json",
    "complex_from_json",
    "dumps_complex",
    "loads_complex",
]

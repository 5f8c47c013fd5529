"""
Builders for the named spaces and the name registry.
"""

from .builders import (
    SpaceName,
    BUILDERS,
    build_space,
    is_complex_space,
    build_interval,
    build_circle,
    build_sub2_interval,
    build_sub2_circle,
    build_sub3_interval,
    build_sub3_circle,
    build_trefoil_complement,
)

__all__ = [
    "SpaceName",
    "BUILDERS",
    "build_space",
    "is_complex_space",
    "build_interval",
    "build_circle",
    "build_sub2_interval",
    "build_sub2_circle",
    "build_sub3_interval",
    "build_sub3_circle",
    "build_trefoil_complement",
]

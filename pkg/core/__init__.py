"""
Core modules: Delta-complexes, exact algebra, homology, group presentations
and the knot geometry used to study spaces of finite subsets of the circle.
"""

from .errors import TopologyError

__all__ = [
    "TopologyError",
]

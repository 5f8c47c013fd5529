"""
Fundamental group presentations from the 2-skeleton.
"""

from .skeleton import SkeletonGraph, skeleton_graph
from .fundamental_group import spanning_tree, presentation

__all__ = [
    "SkeletonGraph",
    "skeleton_graph",
    "spanning_tree",
    "presentation",
]

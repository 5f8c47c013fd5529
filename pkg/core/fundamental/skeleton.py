"""
The 1-skeleton of a complex as a multigraph.
"""

from dataclasses import dataclass
from typing import Dict, List, Tuple

import networkx as nx

from core.complex.delta_complex import CellId, DeltaComplex


@dataclass(frozen=True)
class SkeletonGraph:
    vertices: Tuple[CellId, ...]
    edges: Tuple[Tuple[CellId, CellId, CellId], ...]  # (edge, tail, head)

    def incident(self) -> Dict[CellId, List[Tuple[CellId, CellId]]]:
        """vertex -> [(edge, other endpoint)] in edge-index order; loops are skipped."""
        table: Dict[CellId, List[Tuple[CellId, CellId]]] = {v: [] for v in self.vertices}
        for edge, tail, head in self.edges:
            if tail == head:
                continue
            table[tail].append((edge, head))
            table[head].append((edge, tail))
        return table

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(v.index for v in self.vertices)
        for edge, tail, head in self.edges:
            graph.add_edge(tail.index, head.index, key=edge.index)
        return graph


def skeleton_graph(complex_: DeltaComplex) -> SkeletonGraph:
    vertices = tuple(complex_.cells(0))
    edges = tuple((edge, *complex_.endpoints(edge)) for edge in complex_.cells(1))
    return SkeletonGraph(vertices, edges)

"""
Edge-path presentation of the fundamental group.

A spanning tree of the 1-skeleton is contracted; every other edge becomes a
generator and every 2-cell contributes the word read around its boundary.
"""

from collections import deque
from typing import Dict, List, Set

from core.complex.delta_complex import CellId, DeltaComplex, require_valid
from core.errors import DisconnectedComplexError
from core.fundamental.skeleton import skeleton_graph
from core.groups.presentation import Presentation
from core.groups.words import Word, free_reduce
from core.utils.log import get_logger

logger = get_logger("PI1")


def spanning_tree(complex_: DeltaComplex) -> Set[CellId]:
    """Breadth-first from vertex 0, scanning incident edges by index."""
    graph = skeleton_graph(complex_)
    if not graph.vertices:
        raise DisconnectedComplexError("the empty complex has no basepoint")
    incident = graph.incident()
    root = graph.vertices[0]
    seen = {root}
    tree: Set[CellId] = set()
    queue = deque([root])
    while queue:
        vertex = queue.popleft()
        for edge, other in incident[vertex]:
            if other not in seen:
                seen.add(other)
                tree.add(edge)
                queue.append(other)
    if len(seen) != len(graph.vertices):
        raise DisconnectedComplexError(
            f"complex has {len(graph.vertices) - len(seen)} vertices outside the component of vertex 0")
    return tree


def _generator_names(complex_: DeltaComplex, edges: List[CellId]) -> List[str]:
    names: List[str] = []
    used: Dict[str, int] = {}
    for edge in edges:
        base = complex_.name(edge)
        count = used.get(base, 0)
        used[base] = count + 1
        names.append(base if count == 0 else f"{base}_{count}")
    return names


def presentation(complex_: DeltaComplex) -> Presentation:
    """
    One generator per non-tree edge, one relator per 2-cell read as
    face_2 * face_0 * face_1^-1. Cells above dimension 2 are ignored.
    """
    require_valid(complex_, "presentation")
    tree = spanning_tree(complex_)
    free_edges = [edge for edge in complex_.cells(1) if edge not in tree]
    generator_of = {edge: k for k, edge in enumerate(free_edges)}

    def letter(edge: CellId, exponent: int) -> Word:
        if edge in tree:
            return Word()
        return Word.of((generator_of[edge], exponent))

    relators = []
    for triangle in complex_.cells(2):
        f0, f1, f2 = complex_.faces_of(triangle)
        relators.append(free_reduce(letter(f2, 1) * letter(f0, 1) * letter(f1, -1)))

    result = Presentation(tuple(_generator_names(complex_, free_edges)), tuple(relators))
    logger.debug("tree of %d edges, presentation %s", len(tree), result)
    return result

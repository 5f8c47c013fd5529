"""
Named builders for the spaces of finite subsets of I and S^1.

Points of Sub_n(I) are written as sorted tuples, so Sub_2(I) is the triangle
0 <= x <= y <= 1 and Sub_3(I) the tetrahedron 0 <= x <= y <= z <= 1 with
vertices A = (0,0,0), B = (0,0,1), C = (0,1,1), D = (1,1,1). Repeated
coordinates name the same subset, which is what the gluings encode.
"""

from enum import Enum
from typing import Callable, Dict, Union

from core.complex.delta_complex import (
    DeltaComplex,
    IdentificationSpec,
    find_cell,
    new_complex,
    quotient,
    relabel,
    standard_simplex,
)
from core.groups.presentation import Presentation
from core.utils.log import get_logger

logger = get_logger("SPACES")

Space = Union[DeltaComplex, Presentation]


class SpaceName(str, Enum):
    INTERVAL = "interval"
    CIRCLE = "circle"
    SUB2_INTERVAL = "sub2-interval"
    SUB2_CIRCLE = "sub2-circle"
    SUB3_INTERVAL = "sub3-interval"
    SUB3_CIRCLE = "sub3-circle"
    TREFOIL_COMPLEMENT = "trefoil-complement"


def build_interval() -> DeltaComplex:
    return new_complex([2, 1], {1: [[1, 0]]}, {0: ["0", "1"], 1: ["I"]})


def build_circle() -> DeltaComplex:
    """S^1 = I / 0 ~ 1: one vertex, one loop."""
    return new_complex([1, 1], {1: [[0, 0]]}, {0: ["0=1"], 1: ["γ"]})


def build_sub2_interval() -> DeltaComplex:
    """
    The triangle {(x, y): 0 <= x <= y <= 1}. Edge labels follow the picture:
    left x = 0, top y = 1, diagonal x = y.
    """
    triangle = standard_simplex(2, ["(0,0)", "(0,1)", "(1,1)"])
    # lexicographic edge order is 01, 02, 12
    return relabel(triangle, {1: ["left", "diagonal", "top"]})


def build_sub2_circle() -> DeltaComplex:
    """(0, x) ~ (x, 1): the left edge is glued onto the top edge."""
    triangle = build_sub2_interval()
    spec = IdentificationSpec().glue(find_cell(triangle, "left"), find_cell(triangle, "top"))
    mobius = quotient(triangle, spec)
    return relabel(mobius, {1: ["γ", "δ"]})


def _tetrahedron() -> DeltaComplex:
    return standard_simplex(3, "ABCD")


def build_sub3_interval() -> DeltaComplex:
    """(x, x, z) ~ (x, z, z): face ABD is glued onto face ACD."""
    tetrahedron = _tetrahedron()
    spec = IdentificationSpec().glue(find_cell(tetrahedron, "ABD"), find_cell(tetrahedron, "ACD"))
    return quotient(tetrahedron, spec)


def build_sub3_circle() -> DeltaComplex:
    """
    Sub_3(I) further glued by (0, y, z) ~ (y, z, 1), i.e. face ABC onto BCD.
    Every edge except AD collapses to one loop alpha; AD is beta.
    """
    tetrahedron = _tetrahedron()
    spec = (IdentificationSpec()
            .glue(find_cell(tetrahedron, "ABD"), find_cell(tetrahedron, "ACD"))
            .glue(find_cell(tetrahedron, "ABC"), find_cell(tetrahedron, "BCD")))
    sphere = quotient(tetrahedron, spec)
    return relabel(sphere, {1: ["α", "β"]})


def build_trefoil_complement() -> Presentation:
    """Relators read off the faces of the pyramid around the knot."""
    return Presentation.from_strings(
        "abcd",
        [
            "b c d^-1",        # top face RTS
            "a b^-1 c^-1 b",   # front face QTRP
            "a c d",           # left face SPR, also right face QTS
            "a b d^-1",        # back face SPQ
        ],
    )


BUILDERS: Dict[SpaceName, Callable[[], Space]] = {
    SpaceName.INTERVAL: build_interval,
    SpaceName.CIRCLE: build_circle,
    SpaceName.SUB2_INTERVAL: build_sub2_interval,
    SpaceName.SUB2_CIRCLE: build_sub2_circle,
    SpaceName.SUB3_INTERVAL: build_sub3_interval,
    SpaceName.SUB3_CIRCLE: build_sub3_circle,
    SpaceName.TREFOIL_COMPLEMENT: build_trefoil_complement,
}


def build_space(name: Union[SpaceName, str]) -> Space:
    """Build a space by name; unknown names raise KeyError."""
    try:
        key = SpaceName(name)
    except ValueError as e:
        raise KeyError(f"unknown space {name!r}; known: {', '.join(s.value for s in SpaceName)}") from e
    space = BUILDERS[key]()
    logger.debug("built %s", key.value)
    return space


def is_complex_space(name: Union[SpaceName, str]) -> bool:
    return SpaceName(name) is not SpaceName.TREFOIL_COMPLEMENT

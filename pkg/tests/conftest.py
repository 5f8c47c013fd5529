"""
Shared fixtures. Puts the project root on sys.path the same way the
operator scripts do.
"""

import sys
from pathlib import Path

import pytest

PROJECT_ROOT = Path(__file__).resolve().parent.parent
sys.path.insert(0, str(PROJECT_ROOT))

from core.complex.delta_complex import (  # noqa: E402
    IdentificationSpec,
    find_cell,
    quotient,
    relabel,
    standard_simplex,
)
from core.spaces.builders import SpaceName, build_space  # noqa: E402


def build_misglued_sub3_circle():
    """Sub_3(S^1) with the second gluing taken to BCD from ABD instead of ABC."""
    tetrahedron = standard_simplex(3, "ABCD")
    spec = (IdentificationSpec()
            .glue(find_cell(tetrahedron, "ABD"), find_cell(tetrahedron, "ACD"))
            .glue(find_cell(tetrahedron, "ABD"), find_cell(tetrahedron, "BCD")))
    return relabel(quotient(tetrahedron, spec), {1: ["α", "β"]})


@pytest.fixture
def tetrahedron():
    return standard_simplex(3, "ABCD")


@pytest.fixture
def sub2_circle():
    return build_space(SpaceName.SUB2_CIRCLE)


@pytest.fixture
def sub3_interval():
    return build_space(SpaceName.SUB3_INTERVAL)


@pytest.fixture
def sub3_circle():
    return build_space(SpaceName.SUB3_CIRCLE)


@pytest.fixture
def trefoil_complement():
    return build_space(SpaceName.TREFOIL_COMPLEMENT)


@pytest.fixture
def misglued_builders():
    return {SpaceName.SUB3_CIRCLE: build_misglued_sub3_circle}

import pytest

from core.complex.delta_complex import CellId, DeltaComplex, connected_components, euler_characteristic, new_complex
from core.errors import InvalidComplexError, PreconditionError
from core.homology.homology import (
    HomologyGroup,
    boundary_matrix,
    boundary_squared_is_zero,
    euler_from_betti,
    homology,
    homology_signature,
    homology_to_json,
)
from core.spaces.builders import SpaceName, build_space

COMPLEX_SPACES = [s for s in SpaceName if s is not SpaceName.TREFOIL_COMPLEMENT]


def test_circle_boundary_cancels():
    assert boundary_matrix(build_space(SpaceName.CIRCLE), 1).to_rows() == [[0]]


def test_mobius_boundary_column(sub2_circle):
    # slots (gamma, delta, gamma)
    assert boundary_matrix(sub2_circle, 2).to_rows() == [[2], [-1]]


def test_sub3_circle_top_boundary_vanishes(sub3_circle):
    assert boundary_matrix(sub3_circle, 3).to_rows() == [[0], [0]]


@pytest.mark.parametrize("n", [0, 4])
def test_boundary_matrix_range(sub3_circle, n):
    with pytest.raises(PreconditionError):
        boundary_matrix(sub3_circle, n)


@pytest.mark.parametrize("space, expected", [
    (SpaceName.INTERVAL, ["Z", "0"]),
    (SpaceName.CIRCLE, ["Z", "Z"]),
    (SpaceName.SUB2_INTERVAL, ["Z", "0", "0"]),
    (SpaceName.SUB2_CIRCLE, ["Z", "Z", "0"]),
    (SpaceName.SUB3_INTERVAL, ["Z", "0", "0", "0"]),
    (SpaceName.SUB3_CIRCLE, ["Z", "0", "0", "Z"]),
])
def test_homology_of_built_spaces(space, expected):
    assert homology_signature(homology(build_space(space))) == expected


def test_sub3_circle_is_not_s2_x_s1(sub3_circle):
    assert homology_signature(homology(sub3_circle)) != ["Z", "Z", "Z", "Z"]


def test_torsion_is_reported():
    # one vertex, loops a and b, triangles (a, b, a) and (b, a, b): H_1 = Z/3
    complex_ = new_complex([1, 2, 2], {1: [[0, 0], [0, 0]], 2: [[0, 1, 0], [1, 0, 1]]})
    groups = homology(complex_)
    assert groups[1] == HomologyGroup(0, (3,))
    assert homology_signature(groups) == ["Z", "Z/3", "0"]


def test_group_rendering():
    assert str(HomologyGroup(0)) == "0"
    assert str(HomologyGroup(2, (2, 4))) == "Z^2 + Z/2 + Z/4"
    assert homology_to_json([HomologyGroup(1)]) == {"0": {"betti": 1, "torsion": []}}


@pytest.mark.parametrize("space", COMPLEX_SPACES)
def test_chain_complex_properties(space):
    complex_ = build_space(space)
    groups = homology(complex_)
    assert boundary_squared_is_zero(complex_)
    assert euler_from_betti(groups) == euler_characteristic(complex_)
    assert groups[0].betti == connected_components(complex_)


def test_homology_needs_valid_complex():
    bad = DeltaComplex((2, 1), (((), ()), ((CellId(1, 0), CellId(0, 0)),)), ((None, None), (None,)))
    with pytest.raises(InvalidComplexError):
        homology(bad)

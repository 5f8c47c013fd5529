import random
from functools import reduce
from itertools import combinations
from math import gcd

import pytest
import sympy

from core.algebra.smith import IntegerMatrix, SnfResult, matrix_rank, smith_normal_form, verify_snf
from core.errors import ShapeMismatchError


def random_matrix(rng, rows, cols, bound=5):
    return IntegerMatrix.from_rows([[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)])


def test_empty_matrix():
    result = smith_normal_form(IntegerMatrix.zeros(0, 0))
    assert result.S.shape == (0, 0)
    assert result.diagonal == []
    assert verify_snf(IntegerMatrix.zeros(0, 0), result)


def test_coprime_diagonal_becomes_divisibility_chain():
    a = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    result = smith_normal_form(a)
    assert result.S.to_rows() == [[1, 0], [0, 6]]
    assert verify_snf(a, result)


def test_already_in_normal_form():
    a = IntegerMatrix.from_rows([[1, 0], [0, 0]])
    assert smith_normal_form(a).S.to_rows() == [[1, 0], [0, 0]]


def test_tampered_result_is_rejected():
    a = IntegerMatrix.from_rows([[2, 0], [0, 3]])
    result = smith_normal_form(a)
    swapped = IntegerMatrix.from_rows([[6, 0], [0, 1]])
    assert not verify_snf(a, SnfResult(result.U, swapped, result.V))


def test_verify_rejects_incompatible_shapes():
    a = IntegerMatrix.from_rows([[1, 2, 3]])
    result = smith_normal_form(IntegerMatrix.from_rows([[1, 2], [3, 4]]))
    with pytest.raises(ShapeMismatchError):
        verify_snf(a, result)


def test_shape_errors():
    with pytest.raises(ShapeMismatchError):
        IntegerMatrix(2, 2, (1, 2, 3))
    with pytest.raises(ShapeMismatchError):
        IntegerMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(ShapeMismatchError):
        IntegerMatrix.identity(2) @ IntegerMatrix.identity(3)


def test_large_entries_stay_exact():
    big = 10 ** 30
    a = IntegerMatrix.from_rows([[big, big + 1], [big - 1, big]])
    result = smith_normal_form(a)
    assert verify_snf(a, result)
    assert result.diagonal == [1, 1]


def test_random_4x4_certificates():
    rng = random.Random(20240601)
    for _ in range(1000):
        a = random_matrix(rng, 4, 4)
        assert verify_snf(a, smith_normal_form(a))


def test_random_rectangular_certificates():
    rng = random.Random(7)
    for _ in range(300):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4))
        assert verify_snf(a, smith_normal_form(a))


def _minor_gcd(a: IntegerMatrix, r: int) -> int:
    m = sympy.Matrix(a.to_rows())
    minors = [int(m.extract(list(rows), list(cols)).det())
              for rows in combinations(range(a.rows), r)
              for cols in combinations(range(a.cols), r)]
    return reduce(gcd, minors, 0)


def test_diagonal_against_minors_and_rank():
    rng = random.Random(11)
    for _ in range(200):
        a = random_matrix(rng, rng.randint(1, 4), rng.randint(1, 4), bound=4)
        result = smith_normal_form(a)
        rank = sympy.Matrix(a.to_rows()).rank()
        assert result.rank == rank == matrix_rank(a)
        if rank == 0:
            assert result.S.is_zero()
            continue
        assert result.diagonal[0] == reduce(gcd, a.entries, 0)
        product = 1
        for d in result.diagonal[:rank]:
            product *= d
        assert product == _minor_gcd(a, rank)


def test_deterministic():
    a = IntegerMatrix.from_rows([[4, 6, 2], [2, -8, 0], [0, 2, 14]])
    assert smith_normal_form(a) == smith_normal_form(a)

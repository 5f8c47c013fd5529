"""
Exact integer matrices and Smith normal form with unimodular certificates.

Entries are Python ints, so intermediate growth never overflows.
"""

from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

import sympy

from core.errors import ShapeMismatchError
from core.utils.log import get_logger

logger = get_logger("SNF")


@dataclass(frozen=True)
class IntegerMatrix:
    rows: int
    cols: int
    entries: Tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ShapeMismatchError(f"negative shape {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeMismatchError(
                f"{len(self.entries)} entries for a {self.rows}x{self.cols} matrix")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: Optional[int] = None) -> "IntegerMatrix":
        rows = [list(r) for r in rows]
        width = len(rows[0]) if rows else (cols or 0)
        if any(len(r) != width for r in rows):
            raise ShapeMismatchError("ragged rows")
        return cls(len(rows), width, tuple(int(x) for r in rows for x in r))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntegerMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntegerMatrix":
        return cls(size, size, tuple(int(i == j) for i in range(size) for j in range(size)))

    def __getitem__(self, pos: Tuple[int, int]) -> int:
        i, j = pos
        return self.entries[i * self.cols + j]

    @property
    def shape(self) -> Tuple[int, int]:
        return self.rows, self.cols

    def to_rows(self) -> List[List[int]]:
        return [list(self.entries[i * self.cols:(i + 1) * self.cols]) for i in range(self.rows)]

    def transpose(self) -> "IntegerMatrix":
        return IntegerMatrix(self.cols, self.rows,
                             tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ShapeMismatchError(f"cannot multiply {self.shape} by {other.shape}")
        return IntegerMatrix(self.rows, other.cols, tuple(
            sum(self[i, k] * other[k, j] for k in range(self.cols))
            for i in range(self.rows) for j in range(other.cols)))

    def is_zero(self) -> bool:
        return not any(self.entries)

    def diagonal(self) -> List[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def determinant(self) -> int:
        """Exact determinant (fraction-free Bareiss via sympy)."""
        if self.rows != self.cols:
            raise ShapeMismatchError(f"determinant of non-square {self.shape} matrix")
        if self.rows == 0:
            return 1
        return int(sympy.Matrix(self.to_rows()).det(method="bareiss"))


@dataclass(frozen=True)
class SnfResult:
    """U * A * V = S with U, V unimodular and S diagonal, d1 | d2 | ..."""
    U: IntegerMatrix
    S: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> List[int]:
        return self.S.diagonal()

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)


def _find_pivot(a: List[List[int]], t: int) -> Tuple[int, int]:
    """Smallest nonzero |entry| in a[t:, t:], ties by (row, col); (-1, -1) if none."""
    best = (-1, -1)
    best_abs = 0
    for i in range(t, len(a)):
        for j in range(t, len(a[0])):
            v = abs(a[i][j])
            if v and (best_abs == 0 or v < best_abs):
                best, best_abs = (i, j), v
    return best


def smith_normal_form(matrix: IntegerMatrix) -> SnfResult:
    """Diagonalise by unimodular row (U) and column (V) operations."""
    m, n = matrix.rows, matrix.cols
    a = matrix.to_rows()
    u = IntegerMatrix.identity(m).to_rows()
    v = IntegerMatrix.identity(n).to_rows()

    def swap_rows(i, k):
        a[i], a[k] = a[k], a[i]
        u[i], u[k] = u[k], u[i]

    def swap_cols(j, k):
        for row in a:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    def add_row(target, source, factor):
        a[target] = [x + factor * y for x, y in zip(a[target], a[source])]
        u[target] = [x + factor * y for x, y in zip(u[target], u[source])]

    def add_col(target, source, factor):
        for row in a:
            row[target] += factor * row[source]
        for row in v:
            row[target] += factor * row[source]

    for t in range(min(m, n)):
        while True:
            pi, pj = _find_pivot(a, t)
            if pi < 0:
                break
            swap_rows(t, pi)
            swap_cols(t, pj)
            pivot = a[t][t]

            for i in range(t + 1, m):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // pivot))
            for j in range(t + 1, n):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // pivot))
            if any(a[i][t] for i in range(t + 1, m)) or any(a[t][j] for j in range(t + 1, n)):
                continue  # a smaller remainder is left, it becomes the next pivot

            offender = next((i for i in range(t + 1, m) for j in range(t + 1, n)
                             if a[i][j] % pivot), None)
            if offender is not None:
                add_row(t, offender, 1)
                continue
            break
        if pi < 0:
            break
        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    result = SnfResult(
        U=IntegerMatrix.from_rows(u, cols=m),
        S=IntegerMatrix.from_rows(a, cols=n),
        V=IntegerMatrix.from_rows(v, cols=n),
    )
    logger.debug("%dx%d matrix -> diagonal %s", m, n, result.diagonal)
    return result


def _divisibility_chain(diagonal: Sequence[int]) -> bool:
    for d, e in zip(diagonal, diagonal[1:]):
        if d == 0:
            if e != 0:
                return False
        elif e % d:
            return False
    return True


def verify_snf(matrix: IntegerMatrix, result: SnfResult) -> bool:
    """Independent check of every SnfResult invariant against the input."""
    m, n = matrix.shape
    if result.U.shape != (m, m) or result.V.shape != (n, n) or result.S.shape != (m, n):
        raise ShapeMismatchError(
            f"certificate shapes U{result.U.shape} S{result.S.shape} V{result.V.shape} "
            f"do not fit a {m}x{n} matrix")
    if result.U @ matrix @ result.V != result.S:
        return False
    if result.U.determinant() not in (1, -1) or result.V.determinant() not in (1, -1):
        return False
    s = result.S
    if any(s[i, j] for i in range(m) for j in range(n) if i != j):
        return False
    diagonal = s.diagonal()
    if any(d < 0 for d in diagonal):
        return False
    return _divisibility_chain(diagonal)


def matrix_rank(matrix: IntegerMatrix) -> int:
    return smith_normal_form(matrix).rank

"""
Exact integer linear algebra.
"""

from .smith import IntegerMatrix, SnfResult, smith_normal_form, verify_snf, matrix_rank

__all__ = [
    "IntegerMatrix",
    "SnfResult",
    "smith_normal_form",
    "verify_snf",
    "matrix_rank",
]

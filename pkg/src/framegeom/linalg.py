"""Small exact linear-algebra helpers over Fraction matrices.

Matrices are tuples of tuples of Fractions; everything stays rational.
Dimensions here are tiny (at most 7), so plain Gaussian elimination with
exact pivoting is both simple and fast.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import StructureError

Matrix = tuple[tuple[Fraction, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n)) for i in range(n)
    )


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(m[i][j] == m[j][i] for i in range(n) for j in range(n))


def determinant(m: Matrix) -> Fraction:
    n = len(m)
    rows = [list(row) for row in m]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            det = -det
        det *= rows[col][col]
        inv = Fraction(1) / rows[col][col]
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return det


def leading_principal_minors(m: Matrix) -> list[Fraction]:
    n = len(m)
    return [determinant(tuple(row[: k + 1] for row in m[: k + 1])) for k in range(n)]


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    rows = [list(row) + [Fraction(1) if i == j else Fraction(0) for j in range(n)]
            for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            raise StructureError("metric is singular")
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = Fraction(1) / rows[col][col]
        rows[col] = [v * inv for v in rows[col]]
        for r in range(n):
            if r != col and rows[r][col]:
                factor = rows[r][col]
                rows[r] = [v - factor * p for v, p in zip(rows[r], rows[col])]
    return tuple(tuple(row[n:]) for row in rows)

"""Small exact linear-algebra helpers over :class:`fractions.Fraction`.

Matrices are tuples of row tuples.  Everything here is sized for
Cartan-matrix work (rank at most 8), so clarity beats asymptotics.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = tuple[tuple[Fraction, ...], ...]
Vector = tuple[Fraction, ...]


def as_matrix(rows: Sequence[Sequence]) -> Matrix:
    return tuple(tuple(Fraction(v) for v in row) for row in rows)


def identity(n: int) -> Matrix:
    return tuple(
        tuple(Fraction(1) if i == j else Fraction(0) for j in range(n))
        for i in range(n)
    )


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = list(zip(*b))
    return tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a
    )


def mat_vec(a: Matrix, v: Sequence[Fraction]) -> Vector:
    """Matrix times column vector."""
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def vec_mat(v: Sequence[Fraction], a: Matrix) -> Vector:
    """Row vector times matrix."""
    return tuple(
        sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))
    )


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a))


def mat_inv(a: Matrix) -> Matrix:
    """Exact inverse by Gauss-Jordan elimination with partial pivoting."""
    n = len(a)
    aug = [list(row) + list(ident_row) for row, ident_row in zip(a, identity(n))]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        inv_p = Fraction(1) / aug[col][col]
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def block_diagonal(blocks: Sequence[Matrix]) -> Matrix:
    total = sum(len(b) for b in blocks)
    rows: list[tuple[Fraction, ...]] = []
    offset = 0
    for b in blocks:
        for row in b:
            rows.append(
                tuple(Fraction(0) for _ in range(offset))
                + tuple(row)
                + tuple(Fraction(0) for _ in range(total - offset - len(row)))
            )
        offset += len(b)
    return tuple(rows)

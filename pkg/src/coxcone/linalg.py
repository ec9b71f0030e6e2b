"""Exact dense and sparse linear algebra over the scalar field.

Matrices are lists of rows; nothing here ever touches floats.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, Iterable, List, Sequence

from .field import Scalar, simplify

Matrix = List[List[Scalar]]
Vector = List[Scalar]


def identity(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(m: Sequence[Sequence[Scalar]]) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> Matrix:
    bt = transpose(b)
    return [[dot(row, col) for col in bt] for row in a]


def mat_vec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> Vector:
    return [dot(row, v) for row in m]


def dot(u: Sequence[Scalar], v: Sequence[Scalar]) -> Scalar:
    total = 0
    for x, y in zip(u, v):
        if x and y:
            total = total + x * y
    return simplify(total)


def reciprocal(x: Scalar) -> Scalar:
    if isinstance(x, int):
        return Fraction(1, x)
    return 1 / x


def inverse(m: Sequence[Sequence[Scalar]]) -> Matrix:
    """Gauss-Jordan inverse; raises ``ValueError`` if singular."""
    n = len(m)
    aug = [list(row) + [1 if i == j else 0 for j in range(n)] for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = reciprocal(aug[col][col])
        aug[col] = [simplify(x * inv) for x in aug[col]]
        for r in range(n):
            f = aug[r][col]
            if r != col and f:
                aug[r] = [simplify(x - f * y) for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


def solve(m: Sequence[Sequence[Scalar]], b: Sequence[Scalar]) -> Vector:
    """Solve the square system ``m x = b``."""
    return mat_vec(inverse(m), b)


class RowReducer:
    """Incremental sparse row echelon form.

    Rows are dicts ``{column: value}``. Each added row is reduced against the
    pivots seen so far and kept only if something survives, so ``rank`` is
    the rank of everything added.
    """

    def __init__(self):
        self.pivots: Dict[int, Dict[int, Scalar]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Dict[int, Scalar]) -> bool:
        """Reduce ``row`` against the basis; return True if it raised the rank."""
        row = {c: v for c, v in row.items() if v}
        while row:
            col = min(row)
            piv = self.pivots.get(col)
            if piv is None:
                inv = reciprocal(row[col])
                self.pivots[col] = {c: simplify(v * inv) for c, v in row.items()}
                return True
            f = row[col]
            for c, v in piv.items():
                nv = simplify(row.get(c, 0) - f * v)
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
        return False

    def extend(self, rows: Iterable[Dict[int, Scalar]]) -> int:
        for r in rows:
            self.add(r)
        return self.rank


def rank(rows: Iterable[Dict[int, Scalar]]) -> int:
    return RowReducer().extend(rows)

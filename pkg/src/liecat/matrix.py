"""Small dense matrices over exact scalars (Gaussian elimination, no pivoting tricks)."""

from __future__ import annotations

from typing import Sequence

from .errors import ShapeMismatch, Singular
from .scalar import Field, Scalar


class MatrixN:
    """Square matrix; ``rows[r][c]``.  As a linear endomorphism, column ``c``
    holds the coordinates of the image of generator ``c``."""

    __slots__ = ("rows", "field")

    def __init__(self, rows: Sequence[Sequence], field: Field | None = None):
        field = field or Field()
        n = len(rows)
        if any(len(r) != n for r in rows):
            raise ShapeMismatch("matrix must be square")
        self.field = field
        self.rows = tuple(tuple(field.check(v) for v in r) for r in rows)

    @classmethod
    def identity(cls, n: int, field: Field | None = None) -> MatrixN:
        return cls([[1 if r == c else 0 for c in range(n)] for r in range(n)], field)

    @classmethod
    def scalar(cls, n: int, a, field: Field | None = None) -> MatrixN:
        return cls([[a if r == c else 0 for c in range(n)] for r in range(n)], field)

    @property
    def n(self) -> int:
        return len(self.rows)

    def __getitem__(self, rc: tuple[int, int]) -> Scalar:
        r, c = rc
        return self.rows[r][c]

    def column(self, c: int) -> tuple[Scalar, ...]:
        return tuple(row[c] for row in self.rows)

    def __mul__(self, other):
        if isinstance(other, MatrixN):
            if other.n != self.n:
                raise ShapeMismatch(f"{self.n}x{self.n} times {other.n}x{other.n}")
            n = self.n
            cols = [other.column(c) for c in range(n)]
            out = []
            for row in self.rows:
                out.append([_dot(row, col, self.field) for col in cols])
            return MatrixN(out, self.field)
        return MatrixN([[v * other for v in r] for r in self.rows], self.field)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, MatrixN):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        body = "; ".join(" ".join(str(v) for v in r) for r in self.rows)
        return f"MatrixN([{body}])"

    def _eliminate(self):
        """Row-reduce ``[A | I]``; returns (det, inverse-or-None)."""
        n = self.n
        f = self.field
        a = [list(r) + [f.one if i == j else f.zero for j in range(n)] for i, r in enumerate(self.rows)]
        det = f.one
        for col in range(n):
            piv = next((r for r in range(col, n) if a[r][col]), None)
            if piv is None:
                return f.zero, None
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                det = -det
            p = a[col][col]
            det = det * p
            inv = p.inverse()
            a[col] = [v * inv for v in a[col]]
            for r in range(n):
                if r != col and a[r][col]:
                    factor = a[r][col]
                    a[r] = [v - factor * w for v, w in zip(a[r], a[col])]
        return det, MatrixN([row[n:] for row in a], f)

    def det(self) -> Scalar:
        return self._eliminate()[0]

    def inverse(self) -> MatrixN:
        det, inv = self._eliminate()
        if inv is None:
            raise Singular("matrix is singular")
        return inv

    def is_invertible(self) -> bool:
        return bool(self.det())


def _dot(row, col, field: Field) -> Scalar:
    acc = field.zero
    for a, b in zip(row, col):
        if a and b:
            acc = acc + a * b
    return acc

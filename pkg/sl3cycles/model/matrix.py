from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from sl3cycles.model.poly import ONE, ZERO, Poly, as_poly

Row = tuple[Poly, Poly, Poly]


class IndexesMustDiffer(Exception):
    pass


@dataclass(frozen=True)
class Mat3:
    """3x3 matrix over Q[t]. Rows and columns are 0-based here, 1-based in elementary()."""

    rows: tuple[Row, Row, Row]

    @classmethod
    def of(cls, rows: Iterable[Iterable]) -> Mat3:
        converted = tuple(tuple(as_poly(entry) for entry in row) for row in rows)
        if len(converted) != 3 or any(len(row) != 3 for row in converted):
            raise ValueError("a Mat3 needs exactly three rows of three entries")
        return cls(converted)

    @classmethod
    def identity(cls) -> Mat3:
        return diagonal(ONE, ONE, ONE)

    def entry(self, k: int, l: int) -> Poly:
        return self.rows[k][l]

    def __matmul__(self, other: Mat3) -> Mat3:
        return mat_mul(self, other)

    def det(self) -> Poly:
        (a, b, c), (d, e, f), (g, h, i) = self.rows
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)

    def is_integral(self) -> bool:
        return all(entry.is_integral() for row in self.rows for entry in row)

    def __str__(self) -> str:
        return "[" + "; ".join(", ".join(str(entry) for entry in row) for row in self.rows) + "]"


def mat_mul(a: Mat3, b: Mat3) -> Mat3:
    rows = []
    for k in range(3):
        row = []
        for l in range(3):
            total = ZERO
            for m in range(3):
                left = a.rows[k][m]
                right = b.rows[m][l]
                if left and right:
                    total = total + left * right
            row.append(total)
        rows.append(tuple(row))
    return Mat3(tuple(rows))


def diagonal(first, second, third) -> Mat3:
    entries = (as_poly(first), as_poly(second), as_poly(third))
    return Mat3(tuple(tuple(entries[k] if k == l else ZERO for l in range(3)) for k in range(3)))


def elementary(i: int, j: int, a) -> Mat3:
    """Identity plus a in row i, column j (1-based)."""
    if i == j:
        raise IndexesMustDiffer(f"elementary matrix needs distinct indexes, got {i} and {j}")
    if not (1 <= i <= 3 and 1 <= j <= 3):
        raise ValueError(f"index out of range: ({i}, {j})")

    value = as_poly(a)
    return Mat3(
        tuple(
            tuple(
                ONE if k == l else (value if (k, l) == (i - 1, j - 1) else ZERO) for l in range(3)
            )
            for k in range(3)
        )
    )


def signed_permutation(permutation: tuple[int, int, int], signs: tuple[int, int, int]) -> Mat3:
    """Matrix sending basis vector e_l to signs[l] * e_permutation[l] (0-based)."""
    rows = [[ZERO] * 3 for _ in range(3)]
    for l, k in enumerate(permutation):
        rows[k][l] = Poly.constant(signs[l])
    return Mat3(tuple(tuple(row) for row in rows))


SIGN_DIAGONALS = (
    diagonal(1, 1, 1),
    diagonal(-1, -1, 1),
    diagonal(-1, 1, -1),
    diagonal(1, -1, -1),
)

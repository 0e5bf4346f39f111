"""Rectangular matrices with polynomial entries."""

from __future__ import annotations

from typing import Callable, Sequence

from .polynomial import Polynomial


class AlgebraMatrix:
    __slots__ = ("rows",)

    def __init__(self, rows: Sequence[Sequence[Polynomial]]):
        rows = [list(r) for r in rows]
        if not rows or any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("matrix rows must be nonempty and of equal length")
        self.rows = rows

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0])

    @property
    def legs(self):
        return self.rows[0][0].legs

    def __getitem__(self, ij) -> Polynomial:
        i, j = ij
        return self.rows[i][j]

    def entries(self):
        for i, row in enumerate(self.rows):
            for j, e in enumerate(row):
                yield i, j, e

    def map(self, f: Callable[[Polynomial], Polynomial]) -> "AlgebraMatrix":
        return AlgebraMatrix([[f(e) for e in row] for row in self.rows])

    def transpose(self) -> "AlgebraMatrix":
        n, m = self.shape
        return AlgebraMatrix([[self.rows[i][j] for i in range(n)] for j in range(m)])

    def adjoint(self) -> "AlgebraMatrix":
        """Conjugate transpose: ``(M*)_{ij} = (M_{ji})*``."""
        return self.transpose().map(lambda e: e.star())

    def __matmul__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        return self.compose(other, lambda a, b: a * b)

    def compose(self, other: "AlgebraMatrix", product) -> "AlgebraMatrix":
        n, k = self.shape
        k2, m = other.shape
        if k != k2:
            raise ValueError(f"shape mismatch {self.shape} x {other.shape}")
        out = []
        for i in range(n):
            row = []
            for j in range(m):
                acc = None
                for t in range(k):
                    term = product(self.rows[i][t], other.rows[t][j])
                    acc = term if acc is None else acc + term
                row.append(acc)
            out.append(row)
        return AlgebraMatrix(out)

    def tensor_dot(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        """``(A (x). B)_{ij} = sum_k A_{ik} (x) B_{kj}``."""
        return self.compose(other, lambda a, b: a.tensor(b))

    def __sub__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        return AlgebraMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __add__(self, other: "AlgebraMatrix") -> "AlgebraMatrix":
        return AlgebraMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def scale(self, c) -> "AlgebraMatrix":
        return self.map(lambda e: e.scale(c))

    def left_scale(self, f: Polynomial) -> "AlgebraMatrix":
        return self.map(lambda e: f * e)

    def trace(self) -> Polynomial:
        n, m = self.shape
        if n != m:
            raise ValueError("trace of a non-square matrix")
        acc = self.rows[0][0]
        for i in range(1, n):
            acc = acc + self.rows[i][i]
        return acc

    def is_zero(self) -> bool:
        return all(not e for _, _, e in self.entries())

    def __eq__(self, other) -> bool:
        if not isinstance(other, AlgebraMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for (_, _, a), (_, _, b) in zip(self.entries(), other.entries()))

    __hash__ = None

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(e) for e in row) + "]" for row in self.rows)


def identity(legs, n: int, c=1) -> AlgebraMatrix:
    return AlgebraMatrix(
        [[Polynomial.const(legs, c) if i == j else Polynomial.zero(legs) for j in range(n)] for i in range(n)]
    )

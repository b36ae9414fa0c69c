"""Finitely supported integer-indexed sequences of rational matrices.

A mask {M_k} collects the coefficients of a two-scale relation.  The attached
symbol is the Laurent matrix (1/2) sum_k M_k z^k; masks and symbols convert
losslessly in both directions.  Scalar masks are stored as 1x1 matrices.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterator, Mapping, Sequence

from . import linalg
from .laurent import LaurentMatrix, LaurentPoly
from .linalg import Mat
from .rational import as_rational


class MaskSequence:
    """Sparse map k -> (rows x cols) rational matrix; zero matrices not stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Mapping[int, Sequence[Sequence]] | None = None):
        if rows < 1 or cols < 1:
            raise ValueError("mask matrices must have positive dimensions")
        self.rows, self.cols = rows, cols
        clean: dict[int, Mat] = {}
        if entries:
            for k, m in entries.items():
                mat = linalg.as_matrix(m)
                if len(mat) != rows or len(mat[0]) != cols:
                    raise ValueError(f"entry at k={k} has wrong shape")
                if not linalg.is_zero(mat):
                    clean[int(k)] = mat
        self.entries = clean

    @staticmethod
    def from_scalars(values: Mapping[int, object]) -> "MaskSequence":
        return MaskSequence(1, 1, {k: ((as_rational(v),),) for k, v in values.items()})

    @staticmethod
    def from_symbol(symbol: LaurentMatrix, weight: Fraction = Fraction(2)) -> "MaskSequence":
        """Masks M_k = weight * (z^k coefficient of the symbol)."""
        if all(e.is_zero() for row in symbol.entries for e in row):
            return MaskSequence(symbol.rows, symbol.cols)
        lo, hi = symbol.exponent_range()
        out: dict[int, Mat] = {}
        for k in range(lo, hi + 1):
            m = linalg.mat_scale(symbol.coefficient_matrix(k), weight)
            if not linalg.is_zero(m):
                out[k] = m
        return MaskSequence(symbol.rows, symbol.cols, out)

    def to_symbol(self, weight: Fraction = Fraction(1, 2)) -> LaurentMatrix:
        """The Laurent matrix weight * sum_k M_k z^k."""
        out = [[dict() for _ in range(self.cols)] for _ in range(self.rows)]
        for k, m in self.entries.items():
            for i in range(self.rows):
                for j in range(self.cols):
                    if m[i][j]:
                        out[i][j][k] = m[i][j] * weight
        return LaurentMatrix([[LaurentPoly(c) for c in row] for row in out])

    def __getitem__(self, k: int) -> Mat:
        return self.entries.get(k, linalg.zeros(self.rows, self.cols))

    def scalar(self, k: int) -> Fraction:
        if self.rows != 1 or self.cols != 1:
            raise ValueError("scalar access on a matrix mask")
        return self[k][0][0]

    def scalars(self) -> dict[int, Fraction]:
        if self.rows != 1 or self.cols != 1:
            raise ValueError("scalar access on a matrix mask")
        return {k: m[0][0] for k, m in sorted(self.entries.items())}

    def items(self) -> Iterator[tuple[int, Mat]]:
        return iter(sorted(self.entries.items()))

    def indices(self) -> list[int]:
        return sorted(self.entries)

    def support(self) -> tuple[int, int]:
        if not self.entries:
            return (0, -1)
        ks = self.entries.keys()
        return (min(ks), max(ks))

    def length(self) -> int:
        """Number of taps spanned, endpoints included."""
        lo, hi = self.support()
        return max(0, hi - lo + 1)

    def __eq__(self, other):
        if not isinstance(other, MaskSequence):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        lo, hi = self.support()
        return f"MaskSequence({self.rows}x{self.cols}, support [{lo},{hi}])"

"""Laurent polynomials over the (Gaussian) rationals, and matrices of them.

A Laurent polynomial sum_k c_k z^k with finitely many nonzero c_k is stored as
a sparse map ``{exponent: coefficient}`` with no zero entries.  On the unit
circle |z| = 1 conjugation acts by conj(c_k) z^{-k}, which is what
:meth:`LaurentPoly.conj_on_circle` implements.

All arithmetic is exact.  Multiplication of rational-only polynomials runs on
an integer core (one common denominator per operand) because coefficient
convolution dominates the cost of the perfect-reconstruction checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterator, Mapping, Sequence

from .rational import Coeff, GaussianRational, coeff, coeff_to_complex, conj


class LaurentPoly:
    """Finitely supported Laurent polynomial sum_k c_k z^k."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean: dict[int, Coeff] = {}
        if coeffs:
            for k, c in coeffs.items():
                c = coeff(c)
                if c != 0:
                    clean[int(k)] = c
        self.coeffs = clean

    # -- constructors -------------------------------------------------------

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: Fraction(1)})

    @staticmethod
    def monomial(c, k: int = 0) -> "LaurentPoly":
        return LaurentPoly({k: c})

    @staticmethod
    def variable() -> "LaurentPoly":
        return LaurentPoly({1: Fraction(1)})

    # -- basic queries -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def min_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no support")
        return min(self.coeffs)

    def max_exp(self) -> int:
        if not self.coeffs:
            raise ValueError("zero polynomial has no support")
        return max(self.coeffs)

    def support_length(self) -> int:
        return 0 if not self.coeffs else self.max_exp() - self.min_exp() + 1

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs.get(k, Fraction(0))

    def items(self) -> Iterator[tuple[int, Coeff]]:
        return iter(sorted(self.coeffs.items()))

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_real(self) -> bool:
        return all(not isinstance(c, GaussianRational) for c in self.coeffs.values())

    # -- arithmetic ----------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            s = out.get(k, 0) + c
            if s == 0:
                out.pop(k, None)
            else:
                out[k] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __neg__(self):
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {k: -c for k, c in self.coeffs.items()}
        return res

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            c = coeff(other)
            if c == 0:
                return LaurentPoly.zero()
            res = LaurentPoly.__new__(LaurentPoly)
            res.coeffs = {k: v * c for k, v in self.coeffs.items()}
            return res
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return LaurentPoly.zero()
        if self.is_real() and other.is_real():
            return self._mul_rational(other)
        out: dict[int, Coeff] = {}
        for ka, ca in self.coeffs.items():
            for kb, cb in other.coeffs.items():
                k = ka + kb
                s = out.get(k, 0) + ca * cb
                if s == 0:
                    out.pop(k, None)
                else:
                    out[k] = s
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = out
        return res

    __rmul__ = __mul__

    def _mul_rational(self, other: "LaurentPoly") -> "LaurentPoly":
        # Integer-core convolution: scale both operands to integer coefficients,
        # convolve with machine/long ints, divide by the product denominator once.
        na, da = _int_core(self.coeffs)
        nb, db = _int_core(other.coeffs)
        acc: dict[int, int] = {}
        for ka, ca in na.items():
            for kb, cb in nb.items():
                k = ka + kb
                acc[k] = acc.get(k, 0) + ca * cb
        den = da * db
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {k: Fraction(n, den) for k, n in acc.items() if n}
        return res

    def __pow__(self, n: int) -> "LaurentPoly":
        if n < 0:
            if self.is_monomial():
                k, c = next(iter(self.coeffs.items()))
                if isinstance(c, GaussianRational):
                    raise ValueError("negative powers only for rational monomials")
                return LaurentPoly({-k: Fraction(1) / c}) ** (-n)
            raise ValueError("negative powers require a monomial")
        out = LaurentPoly.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    # -- structural operations ------------------------------------------------

    def substitute_neg(self) -> "LaurentPoly":
        """z -> -z: flip the sign of every odd-exponent coefficient."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {k: (-c if k & 1 else c) for k, c in self.coeffs.items()}
        return res

    def conj_on_circle(self) -> "LaurentPoly":
        """Pointwise conjugate on |z| = 1, i.e. c_k z^k -> conj(c_k) z^{-k}."""
        res = LaurentPoly.__new__(LaurentPoly)
        res.coeffs = {-k: conj(c) for k, c in self.coeffs.items()}
        return res

    # -- evaluation ------------------------------------------------------------

    def __call__(self, z: complex) -> complex:
        return sum(coeff_to_complex(c) * z**k for k, c in self.coeffs.items())

    def eval_rational(self, x: Fraction | int) -> Coeff:
        """Exact evaluation at a nonzero rational point."""
        x = Fraction(x)
        if x == 0:
            if any(k < 0 for k in self.coeffs):
                raise ZeroDivisionError("negative exponent at x = 0")
            return self.coeffs.get(0, Fraction(0))
        total: Coeff = Fraction(0)
        for k, c in self.coeffs.items():
            total = total + c * x**k
        return total

    # -- comparisons -----------------------------------------------------------

    def __eq__(self, other):
        other = _as_poly(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "LaurentPoly(0)"
        terms = " + ".join(f"({c})z^{k}" if k else f"({c})" for k, c in self.items())
        return f"LaurentPoly({terms})"


def _as_poly(value):
    if isinstance(value, LaurentPoly):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return LaurentPoly({0: value})
    return NotImplemented


def _int_core(coeffs: Mapping[int, Fraction]) -> tuple[dict[int, int], int]:
    den = 1
    for c in coeffs.values():
        den = den * c.denominator // gcd(den, c.denominator)
    return {k: c.numerator * (den // c.denominator) for k, c in coeffs.items()}, den


class LaurentMatrix:
    """Rectangular matrix with LaurentPoly entries."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: Sequence[Sequence[object]]):
        grid = []
        for row in entries:
            grid.append(tuple(_coerce_entry(e) for e in row))
        if not grid or not grid[0]:
            raise ValueError("matrix must be nonempty")
        width = len(grid[0])
        if any(len(r) != width for r in grid):
            raise ValueError("ragged rows")
        self.entries: tuple[tuple[LaurentPoly, ...], ...] = tuple(grid)
        self.rows = len(grid)
        self.cols = width

    # -- constructors -----------------------------------------------------------

    @staticmethod
    def identity(n: int) -> "LaurentMatrix":
        one, zero = LaurentPoly.one(), LaurentPoly.zero()
        return LaurentMatrix([[one if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def zero(rows: int, cols: int) -> "LaurentMatrix":
        z = LaurentPoly.zero()
        return LaurentMatrix([[z] * cols for _ in range(rows)])

    @staticmethod
    def scalar(poly: LaurentPoly, n: int) -> "LaurentMatrix":
        """poly times the n-by-n identity."""
        zero = LaurentPoly.zero()
        return LaurentMatrix([[poly if i == j else zero for j in range(n)] for i in range(n)])

    @staticmethod
    def block(blocks: Sequence[Sequence["LaurentMatrix"]]) -> "LaurentMatrix":
        rows: list[list[LaurentPoly]] = []
        for brow in blocks:
            height = brow[0].rows
            if any(b.rows != height for b in brow):
                raise ValueError("inconsistent block heights")
            for i in range(height):
                rows.append([e for b in brow for e in b.entries[i]])
        return LaurentMatrix(rows)

    # -- queries ------------------------------------------------------------------

    def __getitem__(self, ij: tuple[int, int]) -> LaurentPoly:
        i, j = ij
        return self.entries[i][j]

    def is_square(self) -> bool:
        return self.rows == self.cols

    def is_lower_triangular(self) -> bool:
        return all(
            self.entries[i][j].is_zero() for i in range(self.rows) for j in range(i + 1, self.cols)
        )

    def is_upper_triangular(self) -> bool:
        return all(self.entries[i][j].is_zero() for i in range(self.rows) for j in range(i))

    def coefficient_matrix(self, k: int) -> tuple[tuple[Fraction, ...], ...]:
        """The rational matrix of z^k coefficients (entries must be real)."""
        out = []
        for row in self.entries:
            vals = []
            for e in row:
                c = e[k]
                if isinstance(c, GaussianRational):
                    raise ValueError("complex coefficient where a rational was expected")
                vals.append(c)
            out.append(tuple(vals))
        return tuple(out)

    def exponent_range(self) -> tuple[int, int]:
        lo, hi = None, None
        for row in self.entries:
            for e in row:
                if e.is_zero():
                    continue
                lo = e.min_exp() if lo is None else min(lo, e.min_exp())
                hi = e.max_exp() if hi is None else max(hi, e.max_exp())
        if lo is None:
            return (0, 0)
        return (lo, hi)

    # -- arithmetic -----------------------------------------------------------------

    def __add__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._same_shape(other)
        return LaurentMatrix(
            [
                [self.entries[i][j] + other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __sub__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        self._same_shape(other)
        return LaurentMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __neg__(self) -> "LaurentMatrix":
        return LaurentMatrix([[-e for e in row] for row in self.entries])

    def __matmul__(self, other: "LaurentMatrix") -> "LaurentMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch: {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        ot = list(zip(*other.entries))
        out = []
        for row in self.entries:
            out_row = []
            for col in ot:
                acc = LaurentPoly.zero()
                for a, b in zip(row, col):
                    if a.coeffs and b.coeffs:
                        acc = acc + a * b
                out_row.append(acc)
            out.append(out_row)
        return LaurentMatrix(out)

    def __mul__(self, other) -> "LaurentMatrix":
        if isinstance(other, (int, Fraction, GaussianRational, LaurentPoly)):
            return LaurentMatrix([[e * other for e in row] for row in self.entries])
        return NotImplemented

    __rmul__ = __mul__

    # -- structural operations ---------------------------------------------------------

    def transpose(self) -> "LaurentMatrix":
        return LaurentMatrix(list(zip(*self.entries)))

    def substitute_neg(self) -> "LaurentMatrix":
        return LaurentMatrix([[e.substitute_neg() for e in row] for row in self.entries])

    def conj_on_circle(self) -> "LaurentMatrix":
        """Entrywise conjugation on |z| = 1 (no transpose)."""
        return LaurentMatrix([[e.conj_on_circle() for e in row] for row in self.entries])

    def conj_transpose(self) -> "LaurentMatrix":
        """conj(M)^T on the unit circle."""
        return self.conj_on_circle().transpose()

    def invert_lower_triangular(self) -> "LaurentMatrix":
        """Exact inverse of a lower-triangular matrix with monomial diagonal.

        Monomials c z^d are the only units of the Laurent polynomial ring, so
        this precondition is exactly invertibility-with-Laurent-inverse.
        """
        if not self.is_square():
            raise ValueError("matrix must be square")
        if not self.is_lower_triangular():
            raise ValueError("matrix must be lower triangular")
        n = self.rows
        diag_inv = []
        for i in range(n):
            d = self.entries[i][i]
            if not d.is_monomial():
                raise ValueError(f"diagonal entry ({i},{i}) is not a monomial; "
                                 "matrix is not invertible over Laurent polynomials")
            k, c = next(iter(d.coeffs.items()))
            if isinstance(c, GaussianRational):
                inv_c = GaussianRational(
                    c.real / (c.real**2 + c.imag**2), -c.imag / (c.real**2 + c.imag**2)
                )
            else:
                inv_c = Fraction(1) / c
            diag_inv.append(LaurentPoly.monomial(inv_c, -k))
        zero = LaurentPoly.zero()
        inv: list[list[LaurentPoly]] = [[zero] * n for _ in range(n)]
        for i in range(n):
            inv[i][i] = diag_inv[i]
        # forward substitution, column by column
        for j in range(n):
            for i in range(j + 1, n):
                acc = LaurentPoly.zero()
                for k in range(j, i):
                    acc = acc + self.entries[i][k] * inv[k][j]
                if not acc.is_zero():
                    inv[i][j] = -(diag_inv[i] * acc)
        return LaurentMatrix(inv)

    # -- evaluation ----------------------------------------------------------------------

    def __call__(self, z: complex):
        import numpy as np

        out = np.empty((self.rows, self.cols), dtype=complex)
        for i, row in enumerate(self.entries):
            for j, e in enumerate(row):
                out[i, j] = e(z)
        return out

    def eval_rational(self, x: Fraction | int) -> tuple[tuple[Coeff, ...], ...]:
        return tuple(tuple(e.eval_rational(x) for e in row) for row in self.entries)

    # -- comparisons -----------------------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, LaurentMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"LaurentMatrix({self.rows}x{self.cols})"

    def _same_shape(self, other: "LaurentMatrix"):
        if self.rows != other.rows or self.cols != other.cols:
            raise ValueError(
                f"dimension mismatch: {self.rows}x{self.cols} vs {other.rows}x{other.cols}"
            )


def _coerce_entry(e) -> LaurentPoly:
    if isinstance(e, LaurentPoly):
        return e
    if isinstance(e, (int, Fraction, GaussianRational)):
        return LaurentPoly({0: e})
    raise TypeError(f"cannot use {type(e).__name__} as a matrix entry")

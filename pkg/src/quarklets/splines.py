"""Cardinal B-splines, quarks, and the quark refinement masks.

The order-m cardinal B-spline N_m is the m-fold convolution of the indicator
of [0, 1), built here exactly through the pointwise recursion

    N_m(x) = x/(m-1) N_{m-1}(x) + (m-x)/(m-1) N_{m-1}(x-1).

Quarks are the symmetrized B-spline N_m(x + floor(m/2)) multiplied by the
monomial (x / ceil(m/2))^q.  The quark vector (degree 0..p) satisfies an
exact two-scale matrix refinement equation whose masks are produced by
:func:`refinement_masks`.

Fourier transforms use the unitary convention F f(xi) =
(2 pi)^{-1/2} integral f(x) exp(-i x xi) dx.  They are evaluated from the
piecewise polynomial itself (closed form per piece), so only convention-free
features - zero locations, ratios - should be consumed downstream.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .linalg import Mat
from .masks import MaskSequence
from .piecewise import PiecewisePoly


def bspline(m: int) -> PiecewisePoly:
    """Exact piecewise polynomial of the order-m cardinal B-spline on [0, m]."""
    if m < 1:
        raise ValueError("spline order must be >= 1")
    return _bspline_cached(m)


@lru_cache(maxsize=None)
def _bspline_cached(m: int) -> PiecewisePoly:
    if m == 1:
        return PiecewisePoly.indicator(0, 1)
    prev = _bspline_cached(m - 1)
    c = Fraction(1, m - 1)
    left = prev.mul_poly([0, c])                                 # x/(m-1) * N_{m-1}(x)
    right = prev.translate(1).mul_poly([Fraction(m, m - 1), -c])  # (m-x)/(m-1) * N_{m-1}(x-1)
    return left + right


def bspline_truncated_power(m: int) -> PiecewisePoly:
    """Alternative closed form of N_m via truncated powers (independent cross-check).

    N_m(x) = 1/(m-1)! sum_k (-1)^k C(m,k) max(0, x-k)^{m-1}, valid for m >= 2.
    """
    if m < 2:
        raise ValueError("the truncated-power form needs m >= 2")
    total = PiecewisePoly.zero()
    fact = Fraction(1, math.factorial(m - 1))
    for k in range(0, m):
        # (x - k)_+^{m-1} restricted to [k, m]; the k = m term is empty there
        # and the remaining terms cancel identically beyond x = m
        coeffs = _binomial_power(-Fraction(k), m - 1)
        piece = PiecewisePoly([k, m], [coeffs])
        total = total + piece * (fact * (-1) ** k * math.comb(m, k))
    return total


def _binomial_power(shift: Fraction, n: int) -> list[Fraction]:
    """Coefficients of (x + shift)^n."""
    return [math.comb(n, j) * shift ** (n - j) for j in range(n + 1)]


def symmetrized_bspline(m: int) -> PiecewisePoly:
    """N_m(x + floor(m/2)), supported on [-floor(m/2), ceil(m/2)]."""
    return bspline(m).compose_linear(1, Fraction(m // 2))


def quark(m: int, q: int) -> PiecewisePoly:
    """The degree-q quark (x/ceil(m/2))^q * N_m(x + floor(m/2))."""
    if m < 1:
        raise ValueError("spline order must be >= 1")
    if q < 0:
        raise ValueError("quark degree must be >= 0")
    return _quark_cached(m, q)


@lru_cache(maxsize=None)
def _quark_cached(m: int, q: int) -> PiecewisePoly:
    base = symmetrized_bspline(m)
    if q == 0:
        return base
    scale = Fraction(1, (m + 1) // 2)
    mono = [Fraction(0)] * q + [scale**q]
    return base.mul_poly(mono)


@dataclass(frozen=True)
class QuarkFamily:
    """Quarks of degree 0..p for one spline order."""

    m: int
    p: int
    members: tuple[PiecewisePoly, ...]

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, q: int) -> PiecewisePoly:
        return self.members[q]


def quark_family(m: int, p: int) -> QuarkFamily:
    return QuarkFamily(m, p, tuple(quark(m, q) for q in range(p + 1)))


@dataclass(frozen=True)
class RefinementMasks:
    """Two-scale masks of the quark vector: matrices A_k and the scalar mask a_k."""

    m: int
    p: int
    matrices: MaskSequence  # (p+1) x (p+1) matrices A_k
    scalar: MaskSequence    # 1 x 1: the B-spline mask a_k


def bspline_mask(m: int) -> MaskSequence:
    """Scalar refinement mask of the symmetrized B-spline: a_k = 2^{1-m} C(m, k + floor(m/2))."""
    half = m // 2
    vals = {k: Fraction(math.comb(m, k + half), 2 ** (m - 1)) for k in range(-half, m - half + 1)}
    return MaskSequence.from_scalars(vals)


def refinement_masks(m: int, p: int) -> RefinementMasks:
    """Exact masks A_k of the quark-vector two-scale relation.

    With 1-based indices q, l in {1, .., p+1} and the scalar mask a_k,

        (A_k)_{q,l} = 2^{1-q} ceil(m/2)^{l-q} a_k C(q-1, l-1) k^{q-l},

    which is lower triangular since C(q-1, l-1) vanishes for l > q.
    """
    if m < 1 or p < 0:
        raise ValueError("need m >= 1 and p >= 0")
    scalar = bspline_mask(m)
    half_up = (m + 1) // 2
    out: dict[int, Mat] = {}
    for k, ak in scalar.scalars().items():
        rows = []
        for q in range(1, p + 2):
            row = []
            for l in range(1, p + 2):
                if l > q:
                    row.append(Fraction(0))
                else:
                    row.append(
                        Fraction(1, 2 ** (q - 1))
                        * Fraction(half_up) ** (l - q)
                        * ak
                        * math.comb(q - 1, l - 1)
                        * Fraction(k) ** (q - l)
                    )
            rows.append(tuple(row))
        out[k] = tuple(rows)
    return RefinementMasks(m, p, MaskSequence(p + 1, p + 1, out), scalar)


def refine_vector(family: QuarkFamily, masks: MaskSequence) -> tuple[PiecewisePoly, ...]:
    """Assemble sum_k M_k F(2x - k) componentwise (exact piecewise identity input)."""
    n = len(family.members)
    if masks.rows != n or masks.cols != n:
        raise ValueError("mask shape does not match the family")
    fine = {}
    out = [PiecewisePoly.zero() for _ in range(n)]
    for k, mat in masks.items():
        for j in range(n):
            if any(mat[i][j] for i in range(n)):
                fine[(j, k)] = family.members[j].compose_linear(2, -Fraction(k))
        for i in range(n):
            for j in range(n):
                c = mat[i][j]
                if c:
                    out[i] = out[i] + fine[(j, k)] * c
    return tuple(out)


# -- Fourier transform (float diagnostics) -----------------------------------------


def piecewise_ft(f: PiecewisePoly, xi: float) -> complex:
    """(2 pi)^{-1/2} integral f(x) exp(-i x xi) dx, closed form per piece.

    For small |xi| each piece integral switches to a power series to avoid
    cancellation in the integration-by-parts recursion.
    """
    if f.is_zero():
        return 0.0
    total = 0.0 + 0.0j
    for i, piece in enumerate(f.pieces):
        a = float(f.breakpoints[i])
        b = float(f.breakpoints[i + 1])
        for n, c in enumerate(piece):
            if c:
                total += float(c) * _moment_integral(n, a, b, xi)
    return total / math.sqrt(2 * math.pi)


def _moment_integral(n: int, a: float, b: float, xi: float) -> complex:
    """integral_a^b x^n exp(-i x xi) dx."""
    if abs(xi) < 0.5:
        # series: sum_t (-i xi)^t / t! * (b^{n+t+1} - a^{n+t+1}) / (n+t+1)
        total = 0.0 + 0.0j
        term = 1.0 + 0.0j
        for t in range(0, 40):
            total += term * (b ** (n + t + 1) - a ** (n + t + 1)) / (n + t + 1)
            term *= complex(0.0, -xi) / (t + 1)
        return total
    c = complex(0.0, -xi)
    ea, eb = cmath.exp(c * a), cmath.exp(c * b)
    # I_n = [x^n e^{cx}/c]_a^b - (n/c) I_{n-1}
    acc = (eb - ea) / c
    for k in range(1, n + 1):
        acc = (b**k * eb - a**k * ea) / c - k / c * acc
    return acc


def quark_ft(m: int, q: int, xi: float) -> complex:
    """Fourier transform of the degree-q quark at frequency xi (float diagnostic)."""
    return piecewise_ft(quark(m, q), xi)

"""Scalar CDF biorthogonal spline filters and the quarklet functions.

The primal mask is the symmetrized B-spline mask of order m.  The dual mask
of order mt (m <= mt, m + mt even) comes from the classical factorization:
with L = (m + mt)/2 and P_L(y) = sum_{n<L} C(L-1+n, n) y^n, the dual symbol is

    at(z) = z^kappa ((1+z)/2)^mt P_L((2 - z - 1/z)/4),

where the integer shift kappa is fixed by requiring the exact scalar
perfect-reconstruction identity

    a(z) at(1/z) + a(-z) at(-1/z) = 1.

Wavelet masks follow the standard alternating-flip convention
b_k = (-1)^k at_{1-k} and bt_k = (-1)^k a_{1-k}.

Quarklets are the finite combinations psi_q = sum_k b_k phi_q(2x - k) of
dilated quark translates, assembled exactly as piecewise polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .laurent import LaurentMatrix, LaurentPoly
from .masks import MaskSequence
from .piecewise import PiecewisePoly
from .splines import bspline_mask, quark_family


@dataclass(frozen=True)
class CdfPair:
    """Primal/dual scaling masks and the two wavelet masks, all exact."""

    m: int
    mt: int
    primal: MaskSequence        # a_k
    dual: MaskSequence          # at_k
    wavelet: MaskSequence       # b_k
    dual_wavelet: MaskSequence  # bt_k

    def wavelet_symbol(self) -> LaurentPoly:
        """b(z) = (1/2) sum_k b_k z^k."""
        return self.wavelet.to_symbol()[0, 0]

    def primal_symbol(self) -> LaurentPoly:
        return self.primal.to_symbol()[0, 0]

    def dual_symbol(self) -> LaurentPoly:
        return self.dual.to_symbol()[0, 0]

    def dual_wavelet_symbol(self) -> LaurentPoly:
        return self.dual_wavelet.to_symbol()[0, 0]


def validate_orders(m: int, mt: int):
    if m < 1 or mt < 1:
        raise ValueError("spline orders must be >= 1")
    if m > mt:
        raise ValueError("need m <= mt")
    if (m + mt) % 2:
        raise ValueError("need m + mt even")


def scalar_pr_defect(a: LaurentPoly, at: LaurentPoly) -> LaurentPoly:
    """a(z) at(1/z) + a(-z) at(-1/z) - 1 (zero iff perfect reconstruction)."""
    at_conj = at.conj_on_circle()
    return a * at_conj + a.substitute_neg() * at_conj.substitute_neg() - LaurentPoly.one()


def cdf_masks(m: int, mt: int) -> CdfPair:
    """Exact CDF filter quadruple for orders (m, mt)."""
    validate_orders(m, mt)
    return _cdf_cached(m, mt)


@lru_cache(maxsize=None)
def _cdf_cached(m: int, mt: int) -> CdfPair:
    primal = bspline_mask(m)
    a = primal.to_symbol()[0, 0]

    ell = (m + mt) // 2
    y = LaurentPoly({-1: Fraction(-1, 4), 0: Fraction(1, 2), 1: Fraction(-1, 4)})
    bezout = LaurentPoly.zero()
    ypow = LaurentPoly.one()
    for n in range(ell):
        bezout = bezout + ypow * math.comb(ell - 1 + n, n)
        ypow = ypow * y
    half_sum = LaurentPoly({0: Fraction(1, 2), 1: Fraction(1, 2)})
    core = (half_sum ** mt) * bezout

    at = None
    for kappa in range(-(m + mt), m + mt + 1):
        candidate = core * LaurentPoly.monomial(Fraction(1), kappa)
        if scalar_pr_defect(a, candidate).is_zero():
            at = candidate
            break
    if at is None:
        raise ValueError(f"no monomial shift satisfies perfect reconstruction for (m, mt) = ({m}, {mt})")

    dual = MaskSequence.from_symbol(LaurentMatrix([[at]]), Fraction(2))
    at_scalars = dual.scalars()
    b_vals = {k: _sign(k) * at_scalars.get(1 - k, Fraction(0)) for k in _flip_range(at_scalars)}
    a_scalars = primal.scalars()
    bt_vals = {k: _sign(k) * a_scalars.get(1 - k, Fraction(0)) for k in _flip_range(a_scalars)}
    return CdfPair(
        m,
        mt,
        primal,
        dual,
        MaskSequence.from_scalars(b_vals),
        MaskSequence.from_scalars(bt_vals),
    )


def _sign(k: int) -> int:
    return 1 if k % 2 == 0 else -1


def _flip_range(scalars: dict[int, Fraction]) -> range:
    ks = sorted(scalars)
    return range(1 - ks[-1], 1 - ks[0] + 1)


@dataclass(frozen=True)
class QuarkletFamily:
    """Quarklets psi_0..psi_p for one (m, mt) filter pair."""

    m: int
    mt: int
    p: int
    members: tuple[PiecewisePoly, ...]

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, q: int) -> PiecewisePoly:
        return self.members[q]


def quarklets(m: int, mt: int, p: int) -> QuarkletFamily:
    """Exact piecewise polynomials psi_q = sum_k b_k phi_q(2x - k), q = 0..p."""
    validate_orders(m, mt)
    if p < 0:
        raise ValueError("need p >= 0")
    b = cdf_masks(m, mt).wavelet.scalars()
    quarks = quark_family(m, p)
    out = []
    for q in range(p + 1):
        acc = PiecewisePoly.zero()
        for k, bk in b.items():
            acc = acc + quarks[q].compose_linear(2, -Fraction(k)) * bk
        out.append(acc)
    return QuarkletFamily(m, mt, p, tuple(out))

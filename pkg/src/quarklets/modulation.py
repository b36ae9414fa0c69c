"""Modulation-matrix algebra for the quark/quarklet filter bank.

For orders (m, mt) and maximal degree p the bundle collects:

*  the scaling symbol  S(z) = (1/2) sum_k A_k z^k   ((p+1) square),
*  the detail symbol   W(z) = b(z) Id               (scalar wavelet symbol),
*  the modulation matrix  X(z) = [[S(z), S(-z)], [W(z), W(-z)]],
*  the block determinant  T(z) = S(z) b(-z) - b(z) S(-z),  which is lower
   triangular with monomial diagonal 2^{1-q} z, hence exactly invertible
   over Laurent polynomials,
*  the exact inverse  X(z)^{-1} = [[b(-z) T^{-1}, -T^{-1} S(-z)],
                                   [-b(z) T^{-1},  T^{-1} S(z)]],
*  dual symbols read off from X^{-1}:  conj(St(z))^T = b(-z) T(z)^{-1} and
   conj(Wt(z))^T = -T(z)^{-1} S(-z), together with their mask sequences.

Everything is exact rational arithmetic; verification routines return the
residual entries instead of asserting.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction
from functools import lru_cache

from .cdf import CdfPair, cdf_masks, quarklets
from .laurent import LaurentMatrix, LaurentPoly
from .masks import MaskSequence
from .piecewise import PiecewisePoly
from .splines import quark_family, refinement_masks


@dataclass(frozen=True)
class ModulationBundle:
    m: int
    mt: int
    p: int
    filters: CdfPair
    scaling_masks: MaskSequence        # A_k
    detail_masks: MaskSequence         # B_k = b_k Id
    scaling_symbol: LaurentMatrix      # S(z)
    detail_symbol: LaurentMatrix       # W(z) = b(z) Id
    modulation: LaurentMatrix          # X(z), size 2(p+1)
    block_det: LaurentMatrix           # T(z)
    block_det_inv: LaurentMatrix       # T(z)^{-1}
    modulation_inv: LaurentMatrix      # X(z)^{-1}
    dual_scaling_symbol: LaurentMatrix  # St(z)
    dual_detail_symbol: LaurentMatrix   # Wt(z)
    dual_scaling_masks: MaskSequence    # At_k
    dual_detail_masks: MaskSequence     # Bt_k

    @property
    def size(self) -> int:
        return self.p + 1


def build_modulation(m: int, mt: int, p: int) -> ModulationBundle:
    """Assemble the full modulation bundle for (m, mt, p), exactly."""
    if p < 0:
        raise ValueError("need p >= 0")
    return _build_cached(m, mt, p)


@lru_cache(maxsize=None)
def _build_cached(m: int, mt: int, p: int) -> ModulationBundle:
    filters = cdf_masks(m, mt)
    n = p + 1
    ref = refinement_masks(m, p)
    scaling_symbol = ref.matrices.to_symbol()
    b = filters.wavelet_symbol()
    b_neg = b.substitute_neg()
    detail_symbol = LaurentMatrix.scalar(b, n)
    detail_masks = MaskSequence.from_symbol(detail_symbol)

    modulation = LaurentMatrix.block(
        [
            [scaling_symbol, scaling_symbol.substitute_neg()],
            [detail_symbol, detail_symbol.substitute_neg()],
        ]
    )

    block_det = scaling_symbol * b_neg - scaling_symbol.substitute_neg() * b
    for q in range(n):
        expected = LaurentPoly.monomial(Fraction(1, 2**q), 1)
        if block_det[q, q] != expected:
            raise AssertionError(
                f"block determinant diagonal ({q},{q}) is {block_det[q, q]!r}, "
                f"expected {expected!r}; filter construction is inconsistent"
            )
    block_det_inv = block_det.invert_lower_triangular()

    left_top = block_det_inv * b_neg
    left_bottom = -(block_det_inv * b)
    right_top = -(block_det_inv @ scaling_symbol.substitute_neg())
    right_bottom = block_det_inv @ scaling_symbol
    modulation_inv = LaurentMatrix.block([[left_top, right_top], [left_bottom, right_bottom]])

    dual_scaling_symbol = left_top.conj_transpose()
    dual_detail_symbol = right_top.conj_transpose()
    return ModulationBundle(
        m=m,
        mt=mt,
        p=p,
        filters=filters,
        scaling_masks=ref.matrices,
        detail_masks=detail_masks,
        scaling_symbol=scaling_symbol,
        detail_symbol=detail_symbol,
        modulation=modulation,
        block_det=block_det,
        block_det_inv=block_det_inv,
        modulation_inv=modulation_inv,
        dual_scaling_symbol=dual_scaling_symbol,
        dual_detail_symbol=dual_detail_symbol,
        dual_scaling_masks=MaskSequence.from_symbol(dual_scaling_symbol),
        dual_detail_masks=MaskSequence.from_symbol(dual_detail_symbol),
    )


@dataclass(frozen=True)
class ReconstructionReport:
    """Outcome of the exact perfect-reconstruction identity check."""

    m: int
    mt: int
    p: int
    identity_holds: bool
    residuals: tuple[tuple[int, int, LaurentPoly], ...]  # nonzero entries of X Xinv - Id


def check_product_is_identity(x: LaurentMatrix, xinv: LaurentMatrix) -> tuple[tuple[int, int, LaurentPoly], ...]:
    product = x @ xinv
    residual = product - LaurentMatrix.identity(x.rows)
    out = []
    for i in range(residual.rows):
        for j in range(residual.cols):
            if not residual[i, j].is_zero():
                out.append((i, j, residual[i, j]))
    return tuple(out)


def verify_perfect_reconstruction(bundle: ModulationBundle) -> ReconstructionReport:
    """Check X(z) conj(Xt(z))^T = Id exactly; conj(Xt)^T is the stored inverse."""
    residuals = check_product_is_identity(bundle.modulation, bundle.modulation_inv)
    return ReconstructionReport(bundle.m, bundle.mt, bundle.p, not residuals, residuals)


def dual_modulation(bundle: ModulationBundle) -> LaurentMatrix:
    """Xt(z) assembled from the dual symbols (so that conj(Xt)^T = X^{-1})."""
    st, wt = bundle.dual_scaling_symbol, bundle.dual_detail_symbol
    return LaurentMatrix.block(
        [[st, st.substitute_neg()], [wt, wt.substitute_neg()]]
    )


def sub_symbols(bundle: ModulationBundle, parity: int) -> tuple[LaurentMatrix, LaurentMatrix]:
    """Even/odd sub-symbols sum_k M_{2k+parity} z^{2k} of the scaling and detail masks."""
    if parity not in (0, 1):
        raise ValueError("parity must be 0 or 1")
    return (
        _sub_symbol(bundle.scaling_masks, parity),
        _sub_symbol(bundle.detail_masks, parity),
    )


def _sub_symbol(masks: MaskSequence, parity: int) -> LaurentMatrix:
    picked = {k - parity: m for k, m in masks.items() if (k - parity) % 2 == 0}
    return MaskSequence(masks.rows, masks.cols, picked).to_symbol(Fraction(1))


def parity_exchange_matrix(n: int) -> LaurentMatrix:
    """The block matrix [[Id, z^{-1} Id], [Id, -z^{-1} Id]] of size 2n."""
    z_inv = LaurentPoly.monomial(Fraction(1), -1)
    return LaurentMatrix.block(
        [
            [LaurentMatrix.identity(n), LaurentMatrix.scalar(z_inv, n)],
            [LaurentMatrix.identity(n), LaurentMatrix.scalar(-z_inv, n)],
        ]
    )


def parity_exchange_inverse(n: int) -> LaurentMatrix:
    """Exact inverse (1/2) [[Id, Id], [z Id, -z Id]]."""
    half = Fraction(1, 2)
    z = LaurentPoly.monomial(half, 1)
    return LaurentMatrix.block(
        [
            [LaurentMatrix.scalar(LaurentPoly.monomial(half, 0), n)] * 2,
            [LaurentMatrix.scalar(z, n), LaurentMatrix.scalar(-z, n)],
        ]
    )


@dataclass(frozen=True)
class PolyphaseFactorization:
    polyphase: LaurentMatrix          # P(z) of the sub-symbols
    exchange: LaurentMatrix           # E(z) with P = X E
    inverse: LaurentMatrix            # P(z)^{-1} = E^{-1} X^{-1}
    factorization_holds: bool         # P == X E, checked exactly
    invertible: bool                  # P P^{-1} == Id, checked exactly


def polyphase(bundle: ModulationBundle) -> PolyphaseFactorization:
    """Polyphase matrix of the filter bank plus its exact invertibility certificate."""
    n = bundle.size
    s0, w0 = sub_symbols(bundle, 0)
    s1, w1 = sub_symbols(bundle, 1)
    pp = LaurentMatrix.block([[s0, s1], [w0, w1]])
    exchange = parity_exchange_matrix(n)
    holds = pp == bundle.modulation @ exchange
    inv = parity_exchange_inverse(n) @ bundle.modulation_inv
    invertible = not check_product_is_identity(pp, inv)
    return PolyphaseFactorization(pp, exchange, inv, holds, invertible)


@dataclass(frozen=True)
class DecompositionFilters:
    """Exact two-scale splitting filters: Phi(2x - r) expanded over coarse quarks/quarklets.

    For r in {0, 1}:  Phi(2x - r) = sum_k C_{r+2k} Phi(x - k) + sum_k D_{r+2k} Psi(x - k).
    """

    m: int
    mt: int
    p: int
    coarse: MaskSequence  # C_n, n in Z
    detail: MaskSequence  # D_n, n in Z


def decomposition_filters(bundle: ModulationBundle) -> DecompositionFilters:
    """Read the splitting filters off the inverse modulation matrix.

    The symbols [Cr(z^2), Dr(z^2)] = (1/2) [z^r Id, (-1)^r z^r Id] X(z)^{-1}
    must contain even powers of z only; an odd-power residue means the
    derivation (not the input) is wrong, so it raises.
    """
    n = bundle.size
    half = Fraction(1, 2)
    coarse: dict[int, tuple] = {}
    detail: dict[int, tuple] = {}
    for parity in (0, 1):
        sign = half if parity == 0 else -half
        row = LaurentMatrix.block(
            [
                [
                    LaurentMatrix.scalar(LaurentPoly.monomial(half, parity), n),
                    LaurentMatrix.scalar(LaurentPoly.monomial(sign, parity), n),
                ]
            ]
        )
        sym = row @ bundle.modulation_inv
        c_part = LaurentMatrix([[sym[i, j] for j in range(n)] for i in range(n)])
        d_part = LaurentMatrix([[sym[i, j + n] for j in range(n)] for i in range(n)])
        for name, part, target in (("C", c_part, coarse), ("D", d_part, detail)):
            lo, hi = part.exponent_range()
            for e in range(lo, hi + 1):
                mat = part.coefficient_matrix(e)
                if any(any(row_) for row_ in mat):
                    if e % 2:
                        raise AssertionError(
                            f"odd power z^{e} in {name}_{parity}: decomposition derivation bug"
                        )
                    target[parity + e] = mat
    return DecompositionFilters(
        bundle.m,
        bundle.mt,
        bundle.p,
        MaskSequence(n, n, coarse),
        MaskSequence(n, n, detail),
    )


def splitting_identity_defect(
    bundle: ModulationBundle, filters: DecompositionFilters, parity: int
) -> tuple[PiecewisePoly, ...]:
    """Phi(2x - parity) minus its reconstruction from coarse quarks and quarklets.

    Returns the exact componentwise difference (all zero iff the identity holds).
    """
    quarks = quark_family(bundle.m, bundle.p)
    wavelets = quarklets(bundle.m, bundle.mt, bundle.p)
    n = bundle.size
    lhs = [member.compose_linear(2, -Fraction(parity)) for member in quarks]
    rhs = [PiecewisePoly.zero() for _ in range(n)]
    for masks, family in ((filters.coarse, quarks), (filters.detail, wavelets)):
        for idx, mat in masks.items():
            if (idx - parity) % 2:
                continue
            k = (idx - parity) // 2
            translated = [family[j].translate(k) for j in range(n)]
            for i in range(n):
                for j in range(n):
                    c = mat[i][j]
                    if c:
                        rhs[i] = rhs[i] + translated[j] * c
    return tuple(l - r for l, r in zip(lhs, rhs))


def perturb_detail_block(bundle: ModulationBundle, i: int = 0, j: int = 0) -> ModulationBundle:
    """A copy of the bundle with W(z)[i][j] nudged by z/100 (negative control)."""
    n = bundle.size
    bad = [[bundle.detail_symbol[r, c] for c in range(n)] for r in range(n)]
    bad[i][j] = bad[i][j] + LaurentPoly.monomial(Fraction(1, 100), 1)
    bad_sym = LaurentMatrix(bad)
    bad_x = LaurentMatrix.block(
        [
            [bundle.scaling_symbol, bundle.scaling_symbol.substitute_neg()],
            [bad_sym, bad_sym.substitute_neg()],
        ]
    )
    return replace(bundle, detail_symbol=bad_sym, modulation=bad_x)

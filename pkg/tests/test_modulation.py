"""Modulation matrix assembly, inversion, duals, polyphase, splitting filters."""

from fractions import Fraction

import pytest

from quarklets.laurent import LaurentMatrix, LaurentPoly
from quarklets.modulation import (
    build_modulation,
    check_product_is_identity,
    decomposition_filters,
    dual_modulation,
    parity_exchange_inverse,
    parity_exchange_matrix,
    perturb_detail_block,
    polyphase,
    splitting_identity_defect,
    sub_symbols,
    verify_perfect_reconstruction,
)

PAIRS = [(1, 1), (2, 2), (3, 3), (2, 4), (3, 5)]


def P(coeffs):
    return LaurentPoly({k: Fraction(v) if not isinstance(v, Fraction) else v for k, v in coeffs.items()})


def half(*pairs):
    return P({k: Fraction(num, den) for k, num, den in pairs})


class TestBundleStructure:
    def test_block_det_lower_triangular_and_odd(self):
        for (m, mt) in PAIRS:
            b = build_modulation(m, mt, 3)
            t = b.block_det
            assert t.is_lower_triangular()
            assert t.substitute_neg() == -t
            for q in range(4):
                assert t[q, q] == LaurentPoly({1: Fraction(1, 2**q)})

    def test_block_det_inverse_is_laurent_and_odd(self):
        b = build_modulation(2, 2, 3)
        tinv = b.block_det_inv
        assert tinv.is_lower_triangular()
        assert tinv.substitute_neg() == -tinv
        assert tinv @ b.block_det == LaurentMatrix.identity(4)

    def test_sign_identities_of_inverse_blocks(self):
        # b(z) Tinv(-z) = -b(z) Tinv(z)  and  -Tinv(-z) S(z) = Tinv(z) S(z)
        b = build_modulation(1, 1, 2)
        bz = b.filters.wavelet_symbol()
        tinv = b.block_det_inv
        assert tinv.substitute_neg() * bz == -(tinv * bz)
        lhs = -(tinv.substitute_neg() @ b.scaling_symbol)
        assert lhs == tinv @ b.scaling_symbol

    def test_detail_block_is_scalar_wavelet_symbol(self):
        b = build_modulation(2, 4, 2)
        bz = b.filters.wavelet_symbol()
        assert b.detail_symbol == LaurentMatrix.scalar(bz, 3)
        for _, mat in b.detail_masks.items():
            for i in range(3):
                for j in range(3):
                    if i != j:
                        assert mat[i][j] == 0

    def test_dual_symbol_at_one_upper_triangular_with_powers(self):
        for (m, mt) in PAIRS:
            b = build_modulation(m, mt, 4)
            at1 = b.dual_scaling_symbol.eval_rational(1)
            for i in range(5):
                for j in range(i):
                    assert at1[i][j] == 0
                assert at1[i][i] == 2**i


class TestPaperScaleExample:
    """The explicit 4x4 matrices for m = mt = 1, p = 1."""

    def setup_method(self):
        self.bundle = build_modulation(1, 1, 1)

    def test_modulation_matrix_entrywise(self):
        z2 = Fraction(1, 2)
        q = Fraction(1, 4)
        expected = LaurentMatrix(
            [
                [half((0, 1, 2), (1, 1, 2)), P({}), half((0, 1, 2), (1, -1, 2)), P({})],
                [P({1: q}), half((0, 1, 4), (1, 1, 4)), P({1: -q}), half((0, 1, 4), (1, -1, 4))],
                [half((0, 1, 2), (1, -1, 2)), P({}), half((0, 1, 2), (1, 1, 2)), P({})],
                [P({}), half((0, 1, 2), (1, -1, 2)), P({}), half((0, 1, 2), (1, 1, 2))],
            ]
        )
        assert self.bundle.modulation == expected

    def test_inverse_entrywise(self):
        e = LaurentMatrix(
            [
                [half((-1, 1, 1), (0, 1, 1)), P({}), half((-1, -1, 1), (0, 1, 1)), P({})],
                [
                    half((-1, -1, 2), (0, -1, 2)),
                    half((-1, 2, 1), (0, 2, 1)),
                    half((-1, 1, 2), (0, 1, 2)),
                    half((-1, -1, 1), (0, 1, 1)),
                ],
                [half((-1, -1, 1), (0, 1, 1)), P({}), half((-1, 1, 1), (0, 1, 1)), P({})],
                [
                    half((-1, 1, 2), (0, -1, 2)),
                    half((-1, -2, 1), (0, 2, 1)),
                    half((-1, -1, 2), (0, 1, 2)),
                    half((-1, 1, 1), (0, 1, 1)),
                ],
            ]
        )
        expected = e * Fraction(1, 2)
        assert self.bundle.modulation_inv == expected

    def test_dual_masks_entrywise(self):
        at0 = ((Fraction(1), Fraction(-1, 2)), (Fraction(0), Fraction(2)))
        bt0 = ((Fraction(1), Fraction(1, 2)), (Fraction(0), Fraction(1)))
        bt1 = ((Fraction(-1), Fraction(1, 2)), (Fraction(0), Fraction(-1)))
        assert self.bundle.dual_scaling_masks[0] == at0
        assert self.bundle.dual_scaling_masks[1] == at0
        assert self.bundle.dual_detail_masks[0] == bt0
        assert self.bundle.dual_detail_masks[1] == bt1
        assert self.bundle.dual_scaling_masks.indices() == [0, 1]
        assert self.bundle.dual_detail_masks.indices() == [0, 1]


class TestPerfectReconstruction:
    @pytest.mark.parametrize("m,mt", PAIRS)
    @pytest.mark.parametrize("p", [0, 1, 2, 3, 5])
    def test_identity_exact_both_orders(self, m, mt, p):
        b = build_modulation(m, mt, p)
        assert not check_product_is_identity(b.modulation, b.modulation_inv)
        assert not check_product_is_identity(b.modulation_inv, b.modulation)

    def test_report_on_detail_perturbation(self):
        bad = perturb_detail_block(build_modulation(1, 1, 1))
        report = verify_perfect_reconstruction(bad)
        assert not report.identity_holds
        assert report.residuals

    def test_dual_modulation_assembles_to_inverse(self):
        b = build_modulation(2, 2, 2)
        assert dual_modulation(b).conj_transpose() == b.modulation_inv


class TestSubSymbolsAndPolyphase:
    def test_haar_scalar_sub_symbols(self):
        b = build_modulation(1, 1, 0)
        s0, w0 = sub_symbols(b, 0)
        s1, w1 = sub_symbols(b, 1)
        assert s0 == LaurentMatrix([[1]])
        assert s1 == LaurentMatrix([[1]])
        assert w0 == LaurentMatrix([[1]])
        assert w1 == LaurentMatrix([[-1]])

    @pytest.mark.parametrize("m,mt,p", [(1, 1, 1), (2, 2, 2), (3, 3, 1)])
    def test_parity_reassembly(self, m, mt, p):
        b = build_modulation(m, mt, p)
        s0, w0 = sub_symbols(b, 0)
        s1, w1 = sub_symbols(b, 1)
        z = LaurentPoly({1: 1})
        assert (s0 + s1 * z) * Fraction(1, 2) == b.scaling_symbol
        assert (w0 + w1 * z) * Fraction(1, 2) == b.detail_symbol
        for mat in (s0, s1, w0, w1):
            lo, hi = mat.exponent_range()
            for e in range(lo, hi + 1):
                if e % 2:
                    assert not any(any(row) for row in mat.coefficient_matrix(e))

    def test_exchange_inverse(self):
        for n in (1, 2, 3):
            e = parity_exchange_matrix(n)
            einv = parity_exchange_inverse(n)
            assert e @ einv == LaurentMatrix.identity(2 * n)
            assert einv @ e == LaurentMatrix.identity(2 * n)

    @pytest.mark.parametrize("m,mt,p", [(1, 1, 1), (2, 2, 2), (3, 3, 1)])
    def test_polyphase_factorization(self, m, mt, p):
        pf = polyphase(build_modulation(m, mt, p))
        assert pf.factorization_holds
        assert pf.invertible


class TestDecompositionFilters:
    def test_haar_split(self):
        filt = decomposition_filters(build_modulation(1, 1, 0))
        assert filt.coarse.scalars() == {0: Fraction(1, 2), 1: Fraction(1, 2)}
        assert filt.detail.scalars() == {0: Fraction(1, 2), 1: Fraction(-1, 2)}

    @pytest.mark.parametrize("m,mt,p", [(1, 1, 0), (1, 1, 1), (1, 1, 2), (2, 2, 1), (3, 3, 1)])
    @pytest.mark.parametrize("parity", [0, 1])
    def test_splitting_identity_exact(self, m, mt, p, parity):
        bundle = build_modulation(m, mt, p)
        filt = decomposition_filters(bundle)
        defects = splitting_identity_defect(bundle, filt, parity)
        assert all(d.is_zero() for d in defects)

    def test_support_growth_linear(self):
        for (m, mt) in [(1, 1), (3, 3)]:
            lengths = []
            for p in range(0, 7):
                filt = decomposition_filters(build_modulation(m, mt, p))
                lengths.append(max(filt.coarse.length(), filt.detail.length()))
            increments = [b - a for a, b in zip(lengths, lengths[1:])]
            # increments settle to a constant: growth is (eventually exactly) linear
            assert len(set(increments[2:])) == 1
            assert max(increments) <= increments[-1] + 2 * mt

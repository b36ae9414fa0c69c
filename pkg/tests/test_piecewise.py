"""Exact piecewise polynomial arithmetic and integration."""

import random
from fractions import Fraction

import pytest

from quarklets.piecewise import PiecewisePoly, inner_product


def hat() -> PiecewisePoly:
    # order-2 B-spline on [0, 2]: x on [0,1), 2-x on [1,2)
    return PiecewisePoly([0, 1, 2], [(0, 1), (2, -1)])


def rand_piecewise(rng) -> PiecewisePoly:
    n = rng.randint(1, 4)
    start = Fraction(rng.randint(-4, 2), 2)
    bps = [start]
    for _ in range(n):
        bps.append(bps[-1] + Fraction(rng.randint(1, 4), 2))
    pieces = [
        tuple(Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(rng.randint(1, 3)))
        for _ in range(n)
    ]
    return PiecewisePoly(bps, pieces)


class TestBasics:
    def test_indicator_values(self):
        f = PiecewisePoly.indicator(0, 1)
        assert f(0) == 1
        assert f(Fraction(1, 2)) == 1
        assert f(1) == 0  # right-open
        assert f(-1) == 0

    def test_non_dyadic_breakpoint_rejected(self):
        with pytest.raises(ValueError, match="dyadic"):
            PiecewisePoly([0, Fraction(1, 3)], [(1,)])

    def test_canonical_merges_equal_pieces(self):
        f = PiecewisePoly([0, 1, 2], [(1,), (1,)])
        assert f == PiecewisePoly.indicator(0, 2)

    def test_zero_end_pieces_trimmed(self):
        f = PiecewisePoly([-1, 0, 1, 2], [(), (1,), ()])
        assert f.support() == (0, 1)

    def test_compose_linear(self):
        f = hat()
        g = f.compose_linear(2, -1)  # x -> f(2x - 1)
        assert g.support() == (Fraction(1, 2), Fraction(3, 2))
        assert g(1) == f(1)
        assert g(Fraction(3, 4)) == f(Fraction(1, 2))

    def test_add_disjoint_supports(self):
        f = PiecewisePoly.indicator(0, 1) + PiecewisePoly.indicator(2, 3)
        assert f(Fraction(1, 2)) == 1
        assert f(Fraction(3, 2)) == 0
        assert f(Fraction(5, 2)) == 1

    def test_derivative_of_hat(self):
        d = hat().derivative()
        assert d(Fraction(1, 2)) == 1
        assert d(Fraction(3, 2)) == -1

    def test_compose_linear_rejects_nonpositive_dilation(self):
        with pytest.raises(ValueError):
            hat().compose_linear(-1, 0)
        with pytest.raises(ValueError):
            hat().compose_linear(0, 0)

    def test_non_dyadic_dilation_rejected_via_breakpoints(self):
        with pytest.raises(ValueError, match="dyadic"):
            hat().compose_linear(3, 0)


class TestIntegrals:
    def test_indicator_inner_product(self):
        f = PiecewisePoly.indicator(0, 1)
        assert inner_product(f, f) == 1

    def test_hat_shift_overlap(self):
        # <N2, N2(.-1)> = integral_0^1 u(1-u) du = 1/6, by the Beta integral
        f = hat()
        assert inner_product(f, f.translate(1)) == Fraction(1, 6)

    def test_hat_norm(self):
        # integral_0^1 x^2 + integral_1^2 (2-x)^2 = 2/3
        f = hat()
        assert inner_product(f, f) == Fraction(2, 3)

    def test_moment(self):
        f = PiecewisePoly.indicator(0, 1)
        assert f.moment(0) == 1
        assert f.moment(1) == Fraction(1, 2)
        assert f.moment(3) == Fraction(1, 4)

    def test_symmetry_and_bilinearity(self):
        rng = random.Random(19)
        for _ in range(25):
            f, g, h = (rand_piecewise(rng) for _ in range(3))
            a = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
            assert inner_product(f, g) == inner_product(g, f)
            assert inner_product(f * a + h, g) == a * inner_product(f, g) + inner_product(h, g)

    def test_positivity(self):
        rng = random.Random(29)
        for _ in range(25):
            f = rand_piecewise(rng)
            if f.is_zero():
                continue
            assert inner_product(f, f) > 0

    def test_product_respects_support_intersection(self):
        f = PiecewisePoly.indicator(0, 2)
        g = PiecewisePoly.indicator(1, 3).mul_poly([0, 1])
        prod = f * g
        assert prod.support() == (1, 2)
        assert prod(Fraction(3, 2)) == Fraction(3, 2)

"""Trigonometric polynomials with exact coefficients.

A TrigPoly is a finitely supported two-sided coefficient sequence {c_n}
representing the 2*pi-periodic function t -> sum_n c_n exp(-i n t).

The central construction is the shift Gram symbol of two compactly supported
functions f, g: the TrigPoly whose n-th coefficient is <f, g(. - n)>.  Up to
one global positive constant (fixed by the Fourier normalization, and
irrelevant for every positivity question asked here) it equals the periodized
product sum_k Ff(t + 2 pi k) * conj(Fg(t + 2 pi k)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import realroots
from .piecewise import PiecewisePoly, inner_product
from .rational import Coeff, GaussianRational, coeff, coeff_to_complex, conj


class TrigPoly:
    """Finitely supported two-sided Fourier coefficient sequence."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Mapping[int, object] | None = None):
        clean: dict[int, Coeff] = {}
        if coeffs:
            for n, c in coeffs.items():
                c = coeff(c)
                if c != 0:
                    clean[int(n)] = c
        self.coeffs = clean

    @staticmethod
    def zero() -> "TrigPoly":
        return TrigPoly()

    @staticmethod
    def constant(c) -> "TrigPoly":
        return TrigPoly({0: c})

    def __getitem__(self, n: int) -> Coeff:
        return self.coeffs.get(n, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other):
        other = _as_trig(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self.coeffs)
        for n, c in other.coeffs.items():
            s = out.get(n, 0) + c
            if s == 0:
                out.pop(n, None)
            else:
                out[n] = s
        return TrigPoly(out)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_trig(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __neg__(self):
        return TrigPoly({n: -c for n, c in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction, GaussianRational)):
            return TrigPoly({n: c * other for n, c in self.coeffs.items()})
        if not isinstance(other, TrigPoly):
            return NotImplemented
        out: dict[int, Coeff] = {}
        for na, ca in self.coeffs.items():
            for nb, cb in other.coeffs.items():
                n = na + nb
                s = out.get(n, 0) + ca * cb
                if s == 0:
                    out.pop(n, None)
                else:
                    out[n] = s
        return TrigPoly(out)

    __rmul__ = __mul__

    def conjugate(self) -> "TrigPoly":
        """Pointwise complex conjugate of the represented function."""
        return TrigPoly({-n: conj(c) for n, c in self.coeffs.items()})

    def is_real_valued(self) -> bool:
        """True iff c_{-n} = conj(c_n) for all n."""
        return all(self[-n] == conj(c) for n, c in self.coeffs.items())

    def __call__(self, t: float) -> complex:
        return sum(
            coeff_to_complex(c) * complex(math.cos(n * t), -math.sin(n * t))
            for n, c in self.coeffs.items()
        )

    def __eq__(self, other):
        other = _as_trig(other)
        if other is NotImplemented:
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(frozenset(self.coeffs.items()))

    def __repr__(self):
        if not self.coeffs:
            return "TrigPoly(0)"
        terms = " + ".join(f"({c})e^(-{n}it)" if n else f"({c})" for n, c in sorted(self.coeffs.items()))
        return f"TrigPoly({terms})"


def _as_trig(value):
    if isinstance(value, TrigPoly):
        return value
    if isinstance(value, (int, Fraction, GaussianRational)):
        return TrigPoly({0: value})
    return NotImplemented


def shift_gram_symbol(f: PiecewisePoly, g: PiecewisePoly) -> TrigPoly:
    """TrigPoly with n-th coefficient <f, g(. - n)>, exact.

    Only finitely many translates of g meet the support of f, so the result
    is a genuine trigonometric polynomial.
    """
    if f.is_zero() or g.is_zero():
        return TrigPoly.zero()
    fa, fb = f.support()
    ga, gb = g.support()
    out: dict[int, Fraction] = {}
    n_lo = math.floor(fa - gb)
    n_hi = math.ceil(fb - ga)
    for n in range(n_lo, n_hi + 1):
        v = inner_product(f, g.translate(n))
        if v:
            out[n] = v
    return TrigPoly(out)


@dataclass(frozen=True)
class CirclePositivity:
    """Outcome of the exact positivity test on the unit circle."""

    positive: bool
    location: float  # argmin frequency in [0, pi] (zero location when not positive)
    value: float     # function value there (0.0 for a certified zero)
    certificate: str


def to_cosine_polynomial(theta: TrigPoly) -> realroots.Poly:
    """Rational polynomial q with theta(t) = q(cos t).

    Requires real symmetric rational coefficients (c_{-n} = c_n), which is
    exactly the shape of autocorrelation symbols and Gram determinants of
    real-valued functions.
    """
    c0 = theta[0]
    if isinstance(c0, GaussianRational):
        raise ValueError("complex coefficients not supported here")
    cn: dict[int, Fraction] = {}
    for n, c in theta.coeffs.items():
        if isinstance(c, GaussianRational):
            raise ValueError("complex coefficients not supported here")
        if n <= 0:
            continue
        if theta[-n] != c:
            raise ValueError("coefficients are not symmetric: theta is not even")
        cn[n] = c
    for n in theta.coeffs:
        if n < 0 and theta[-n] != theta[n]:
            raise ValueError("coefficients are not symmetric: theta is not even")
    return realroots.cosine_series_to_poly(c0, cn)


def is_positive_on_circle(theta: TrigPoly) -> CirclePositivity:
    """Decide exactly whether theta(t) > 0 for every real t.

    The decision maps theta to the polynomial q(x) = theta(arccos x) and
    isolates the real roots of q in [-1, 1] with Sturm chains; no sampling
    and no floating-point tolerance is involved in the verdict.  The reported
    location/value floats are diagnostics only.
    """
    if theta.is_zero():
        return CirclePositivity(False, 0.0, 0.0, "identically zero")
    q = to_cosine_polynomial(theta)
    one = Fraction(1)
    roots = realroots.isolate_roots(q, -one, one)
    if roots:
        x = max(roots)  # zeros at t = 0 (x = 1) are the common failure mode
        t = math.acos(max(-1.0, min(1.0, float(x))))
        return CirclePositivity(False, t, 0.0, f"zero on the unit circle near t = {t:.6g}")
    mid = realroots.evaluate(q, Fraction(0))
    if mid < 0:
        return CirclePositivity(False, math.pi / 2, float(mid), "negative on the whole circle")
    loc, val = _float_minimum(q)
    return CirclePositivity(True, loc, val, f"positive minimum {val:.6g} at t = {loc:.6g}")


def _float_minimum(q: realroots.Poly, samples: int = 512) -> tuple[float, float]:
    """Approximate minimum of q(cos t) over [0, pi] (diagnostic only)."""

    def val(t: float) -> float:
        return realroots.evaluate_float(q, math.cos(t))

    best_t, best_v = 0.0, val(0.0)
    for i in range(1, samples + 1):
        t = math.pi * i / samples
        v = val(t)
        if v < best_v:
            best_t, best_v = t, v
    lo = max(0.0, best_t - math.pi / samples)
    hi = min(math.pi, best_t + math.pi / samples)
    for _ in range(80):
        m1 = lo + (hi - lo) / 3
        m2 = hi - (hi - lo) / 3
        if val(m1) <= val(m2):
            hi = m2
        else:
            lo = m1
    t = (lo + hi) / 2
    return t, val(t)

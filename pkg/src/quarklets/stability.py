"""Shift-stability analysis of quarks and quark vectors.

A compactly supported L2 function has L2-stable integer translates iff its
autocorrelation symbol (the shift Gram symbol with itself) is strictly
positive on the circle; a vector of such functions is stable iff the
determinant of its Gram-symbol matrix never vanishes.  Both criteria are
decided exactly here via Sturm root isolation in the Chebyshev variable.

Also included: a frequency-domain zero scan for individual quark transforms
(float diagnostic) and exact Condition E / eigenvalue checks for the dual
refinement symbol at z = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg, realroots
from .modulation import build_modulation
from .splines import quark, quark_ft
from .trig import TrigPoly, is_positive_on_circle, shift_gram_symbol


@dataclass(frozen=True)
class StabilityReport:
    subject: str
    stable: bool
    certificate: str
    location: float
    value: float


def is_stable_single(m: int, q: int) -> StabilityReport:
    """Exact L2-stability decision for the integer translates of one quark."""
    phi = quark(m, q)
    theta = shift_gram_symbol(phi, phi)
    res = is_positive_on_circle(theta)
    return StabilityReport(
        subject=f"quark(m={m}, q={q})",
        stable=res.positive,
        certificate=res.certificate,
        location=res.location,
        value=res.value,
    )


def gram_symbol_matrix(m: int, p: int) -> list[list[TrigPoly]]:
    """Matrix of shift Gram symbols of the quark vector (Hermitian in t)."""
    quarks = [quark(m, q) for q in range(p + 1)]
    return [[shift_gram_symbol(f, g) for g in quarks] for f in quarks]


def trig_determinant(mat: Sequence[Sequence[TrigPoly]]) -> TrigPoly:
    """Exact determinant by cofactor expansion (sizes here are tiny)."""
    n = len(mat)
    if n == 1:
        return mat[0][0]
    total = TrigPoly.zero()
    for j in range(n):
        if mat[0][j].is_zero():
            continue
        minor = [[mat[i][k] for k in range(n) if k != j] for i in range(1, n)]
        term = mat[0][j] * trig_determinant(minor)
        total = total + (term if j % 2 == 0 else -term)
    return total


def is_stable_vector(m: int, p: int) -> StabilityReport:
    """Exact L2-stability decision for the quark vector of degrees 0..p."""
    det = trig_determinant(gram_symbol_matrix(m, p))
    res = is_positive_on_circle(det)
    return StabilityReport(
        subject=f"quark vector(m={m}, p={p})",
        stable=res.positive,
        certificate="Gram determinant: " + res.certificate,
        location=res.location,
        value=res.value,
    )


def stability_table(max_m: int, max_p: int) -> dict[tuple[int, int], bool]:
    """Grid of single-quark stability decisions for 1 <= m <= max_m, 0 <= p <= max_p."""
    if max_m < 1 or max_p < 0:
        raise ValueError("bounds must cover at least one cell")
    return {
        (m, p): is_stable_single(m, p).stable
        for m in range(1, max_m + 1)
        for p in range(0, max_p + 1)
    }


def ft_zero_scan(
    m: int,
    q: int,
    lo: float,
    hi: float,
    samples: int = 4000,
    zero_rtol: float = 1e-7,
) -> list[float]:
    """Approximate real zeros of |F phi_q| on [lo, hi] (float diagnostic).

    Brackets local minima of |F|^2 on a uniform grid, sharpens each bracket by
    ternary search, and reports minima whose value is a numerical zero
    relative to the overall scale of |F| on the interval.
    """
    if not (hi > lo) or not math.isfinite(lo) or not math.isfinite(hi):
        raise ValueError("need a finite interval with lo < hi")
    xs = np.linspace(lo, hi, samples)
    vals = np.array([abs(quark_ft(m, q, x)) ** 2 for x in xs])
    scale = math.sqrt(float(vals.max()))
    tol = zero_rtol * (1.0 + scale)

    def h(x: float) -> float:
        return abs(quark_ft(m, q, x)) ** 2

    zeros: list[float] = []
    for i in range(1, samples - 1):
        if vals[i] <= vals[i - 1] and vals[i] <= vals[i + 1]:
            a, b = xs[i - 1], xs[i + 1]
            for _ in range(100):
                m1 = a + (b - a) / 3
                m2 = b - (b - a) / 3
                if h(m1) <= h(m2):
                    b = m2
                else:
                    a = m1
            x = (a + b) / 2
            if math.sqrt(h(x)) < tol:
                zeros.append(x)
    deduped: list[float] = []
    step = (hi - lo) / samples
    for z in sorted(zeros):
        if not deduped or z - deduped[-1] > step:
            deduped.append(z)
    return deduped


def condition_e(matrix) -> bool:
    """True iff 1 is a simple eigenvalue and every other eigenvalue has modulus < 1.

    Exact for rational matrices up to 8x8 (characteristic polynomial plus a
    Schur-Cohn test after deflating the eigenvalue 1); larger or float input
    falls back to numpy eigenvalues with a 1e-10 tolerance.
    """
    rational = _as_rational_matrix(matrix)
    if rational is not None and len(rational) <= 8:
        return _condition_e_exact(rational)
    arr = np.asarray(matrix, dtype=float)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError("matrix must be square")
    eig = np.linalg.eigvals(arr)
    tol = 1e-10
    near_one = [ev for ev in eig if abs(ev - 1) <= tol]
    others = [ev for ev in eig if abs(ev - 1) > tol]
    return len(near_one) == 1 and all(abs(ev) < 1 - tol for ev in others)


def _as_rational_matrix(matrix):
    try:
        rows = [list(r) for r in matrix]
    except TypeError:
        return None
    out = []
    for row in rows:
        line = []
        for x in row:
            if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
                line.append(Fraction(x))
            else:
                return None
        out.append(tuple(line))
    n = len(out)
    if n == 0 or any(len(r) != n for r in out):
        raise ValueError("matrix must be square and nonempty")
    return tuple(out)


def _condition_e_exact(matrix: linalg.Mat) -> bool:
    if linalg.is_upper_triangular(matrix) or linalg.is_upper_triangular(linalg.transpose(matrix)):
        diag = [matrix[i][i] for i in range(len(matrix))]
        return diag.count(Fraction(1)) == 1 and all(abs(d) < 1 for d in diag if d != 1)
    p = linalg.char_poly(matrix)
    if realroots.evaluate(p, Fraction(1)) != 0:
        return False
    q, r = realroots.divmod_poly(p, (Fraction(-1), Fraction(1)))  # divide by (x - 1)
    assert not r
    if realroots.evaluate(q, Fraction(1)) == 0:
        return False  # eigenvalue 1 not simple
    return realroots.all_roots_in_open_unit_disk(q)


def dual_symbol_at_one(m: int, mt: int, p: int) -> linalg.Mat:
    """The dual scaling symbol evaluated exactly at z = 1 (upper triangular)."""
    bundle = build_modulation(m, mt, p)
    mat = bundle.dual_scaling_symbol.eval_rational(Fraction(1))
    mat = tuple(tuple(Fraction(x) for x in row) for row in mat)
    if not linalg.is_upper_triangular(mat):
        raise AssertionError("dual scaling symbol at z = 1 should be upper triangular")
    return mat


def dual_symbol_eigenvalues(m: int, mt: int, p: int) -> list[Fraction]:
    """Exact eigenvalues of the dual scaling symbol at z = 1 (diagonal read-off)."""
    mat = dual_symbol_at_one(m, mt, p)
    return sorted(mat[i][i] for i in range(len(mat)))

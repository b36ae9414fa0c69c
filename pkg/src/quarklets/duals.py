"""Generalized dual quarks and quarklets via the truncated infinite product.

The dual refinement equation has a compactly supported distributional
solution whose Fourier transform is, up to one global scalar,

    F Phi~(xi) = (i xi)^p  *  prod_{j>=1} 2^{-p} St(exp(-i 2^{-j} xi)) v,

where St is the dual scaling symbol and v the exact rational eigenvector of
2^{-p} St(1) for the eigenvalue 1 (normalized so its last component is 1; all
dual values are defined up to this one scalar).  The eigenvector and the
symbols stay exact; the product itself is evaluated in complex floats since
its value has no rational closed form.

Grid points are dyadic multiples of 2 pi, stored as exact Fractions t with
xi = 2 pi t, so halving a grid point is exact bookkeeping.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from . import linalg
from .modulation import ModulationBundle, build_modulation
from .stability import dual_symbol_at_one


def dual_eigenvector(m: int, mt: int, p: int) -> tuple[Fraction, ...]:
    """Exact right eigenvector v of 2^{-p} St(1) for eigenvalue 1, last component 1.

    2^{-p} St(1) is upper triangular with diagonal 2^{q-p}, q = 0..p, so the
    eigenvalue 1 sits in the last position and back-substitution suffices.
    """
    mat = dual_symbol_at_one(m, mt, p)
    n = len(mat)
    scale = Fraction(1, 2**p)
    scaled = tuple(tuple(x * scale for x in row) for row in mat)
    v = [Fraction(0)] * n
    v[n - 1] = Fraction(1)
    for i in range(n - 2, -1, -1):
        acc = sum((scaled[i][j] * v[j] for j in range(i + 1, n)), Fraction(0))
        diag = scaled[i][i]
        if diag == 1:
            raise AssertionError("unexpected repeated eigenvalue 1 in the dual symbol")
        v[i] = acc / (1 - diag)
    return tuple(v)


@dataclass(frozen=True)
class DualApproximation:
    """Truncated-product values of the dual quark transform on a dyadic grid."""

    m: int
    mt: int
    p: int
    levels: int                       # truncation depth J
    grid: tuple[Fraction, ...]        # xi = 2 pi t for each stored t
    values: dict[Fraction, np.ndarray]  # t -> complex vector of length p+1
    eigenvector: tuple[Fraction, ...]

    def xi(self, t: Fraction) -> float:
        return 2 * math.pi * float(t)


def dual_quark_ft(
    m: int,
    mt: int,
    p: int,
    levels: int,
    grid: Sequence[Fraction],
    bundle: ModulationBundle | None = None,
) -> DualApproximation:
    """Evaluate (i xi)^p prod_{j=1}^{levels} 2^{-p} St(exp(-i 2^{-j} xi)) v on the grid."""
    if levels < 1:
        raise ValueError("need at least one product level")
    if bundle is None:
        bundle = build_modulation(m, mt, p)
    v = dual_eigenvector(m, mt, p)
    v_arr = np.array([float(x) for x in v], dtype=complex)
    symbol = bundle.dual_scaling_symbol
    scale = 2.0**-p
    values: dict[Fraction, np.ndarray] = {}
    pts = tuple(Fraction(t) for t in grid)
    for t in pts:
        xi = 2 * math.pi * float(t)
        acc = np.eye(p + 1, dtype=complex)
        for j in range(1, levels + 1):
            z = np.exp(-1j * xi / 2**j)
            acc = acc @ (scale * symbol(z))
        values[t] = (1j * xi) ** p * (acc @ v_arr)
    return DualApproximation(m, mt, p, levels, pts, values, v)


def dual_quarklet_ft(
    approx: DualApproximation,
    points: Sequence[Fraction] | None = None,
    bundle: ModulationBundle | None = None,
) -> dict[Fraction, np.ndarray]:
    """F Psi~(xi) = Wt(exp(-i xi / 2)) F Phi~(xi / 2) at the requested points.

    Every requested point must have its half-point stored in the
    approximation; build it on ``with_halves(grid)`` and request the original
    grid to guarantee that.
    """
    if bundle is None:
        bundle = build_modulation(approx.m, approx.mt, approx.p)
    symbol = bundle.dual_detail_symbol
    out: dict[Fraction, np.ndarray] = {}
    for t in approx.grid if points is None else (Fraction(t) for t in points):
        half = t / 2
        if half not in approx.values:
            raise ValueError(f"grid point {t} has no half point {half}; use with_halves()")
        z = np.exp(-1j * approx.xi(t) / 2)
        out[t] = symbol(z) @ approx.values[half]
    return out


def with_halves(grid: Sequence[Fraction]) -> list[Fraction]:
    """Close a dyadic grid under one halving step (for quarklet evaluation)."""
    pts = {Fraction(t) for t in grid}
    return sorted(pts | {t / 2 for t in pts})


def dyadic_grid(span: int, depth: int) -> list[Fraction]:
    """Grid t = k / 2**depth, |t| <= span, i.e. xi in [-2 pi span, 2 pi span]."""
    if span < 1 or depth < 0:
        raise ValueError("need span >= 1 and depth >= 0")
    n = span * 2**depth
    return [Fraction(k, 2**depth) for k in range(-n, n + 1)]


@dataclass(frozen=True)
class ConvergenceProbe:
    grid: tuple[Fraction, ...]
    levels: tuple[int, ...]
    deltas: tuple[float, ...]          # sup |v_J - v_J'| between consecutive levels
    modulus_deltas: tuple[float, ...]  # sup ||v_J| - |v_J'|| (phase-free view)


def convergence_probe(
    m: int, mt: int, p: int, grid: Sequence[Fraction], levels: Sequence[int]
) -> ConvergenceProbe:
    """Sup-norm differences of the truncated product between consecutive depths.

    The complex-valued deltas decay like 2^{-J} (the truncation keeps a phase
    offset proportional to the remaining argument); the modulus deltas decay
    like 4^{-J}.  Both are reported.
    """
    levels = tuple(levels)
    if any(b <= a for a, b in zip(levels, levels[1:])):
        raise ValueError("levels must be strictly increasing")
    bundle = build_modulation(m, mt, p)
    runs = [dual_quark_ft(m, mt, p, j, grid, bundle) for j in levels]
    deltas = []
    mod_deltas = []
    for prev, nxt in zip(runs, runs[1:]):
        d = 0.0
        dm = 0.0
        for t in prev.grid:
            a, b = prev.values[t], nxt.values[t]
            d = max(d, float(np.max(np.abs(a - b))))
            dm = max(dm, float(np.max(np.abs(np.abs(a) - np.abs(b)))))
        deltas.append(d)
        mod_deltas.append(dm)
    return ConvergenceProbe(tuple(Fraction(t) for t in grid), levels, tuple(deltas), tuple(mod_deltas))


def refinement_defect(approx: DualApproximation, bundle: ModulationBundle | None = None) -> float:
    """Sup-norm defect of F Phi~(xi) = St(exp(-i xi/2)) F Phi~(xi/2) on the grid.

    For the J-level truncation this measures one extra product level, so it is
    of the order of the truncation error itself.
    """
    if bundle is None:
        bundle = build_modulation(approx.m, approx.mt, approx.p)
    symbol = bundle.dual_scaling_symbol
    worst = 0.0
    for t in approx.grid:
        half = t / 2
        if half not in approx.values:
            continue
        z = np.exp(-1j * approx.xi(t) / 2)
        predicted = symbol(z) @ approx.values[half]
        worst = max(worst, float(np.max(np.abs(predicted - approx.values[t]))))
    return worst


def time_profile(values: np.ndarray, xi_max: float, window: str = "hann") -> tuple[np.ndarray, np.ndarray]:
    """Approximate time-domain profile from uniform frequency samples.

    ``values[k]`` are F f at xi_k = -xi_max + k * dxi (N samples, dxi =
    2 xi_max / N) under the convention F f(0) = integral f.  A smooth window
    confines truncation leakage near the support edges, which is what the
    support diagnostics need.  Returns (x, f(x)) with x the FFT-dual grid.
    """
    values = np.asarray(values, dtype=complex)
    n = values.size
    dxi = 2 * xi_max / n
    if window == "hann":
        w = np.hanning(n)
        norm = 2.0  # Hann mean is 1/2; keep unit mass at the origin
    elif window in (None, "none", "boxcar"):
        w = np.ones(n)
        norm = 1.0
    else:
        raise ValueError(f"unknown window {window!r}")
    spectrum = values * w * norm
    # f(x_m) = (dxi / 2 pi) sum_k F(xi_k) e^{i xi_k x_m}, x_m = 2 pi m / (n dxi)
    shifted = np.fft.ifft(spectrum) * n * dxi / (2 * math.pi)
    x = np.fft.fftfreq(n, d=dxi / (2 * math.pi))
    phase = np.exp(-1j * xi_max * x)
    f = shifted * phase
    order = np.argsort(x)
    return x[order], f[order]


def mass_outside(x: np.ndarray, f: np.ndarray, lo: float, hi: float) -> float:
    """Fraction of the L2 mass of the profile lying outside [lo, hi]."""
    density = np.abs(f) ** 2
    total = float(np.trapezoid(density, x))
    inside = (x >= lo) & (x <= hi)
    kept = float(np.trapezoid(np.where(inside, density, 0.0), x))
    if total == 0:
        return 0.0
    return (total - kept) / total


def eigen_residual(m: int, mt: int, p: int) -> tuple[Fraction, ...]:
    """(2^{-p} St(1)) v - v with exact arithmetic (must be identically zero)."""
    mat = dual_symbol_at_one(m, mt, p)
    scale = Fraction(1, 2**p)
    scaled = tuple(tuple(x * scale for x in row) for row in mat)
    v = dual_eigenvector(m, mt, p)
    mv = linalg.mat_vec(scaled, v)
    return tuple(a - b for a, b in zip(mv, v))

"""Multiscale decomposition/reconstruction of coefficient frames, and
orthogonalized Haar quarklets.

A coefficient frame stores finitely many rational coefficient vectors c_k of
length p+1 at one dyadic level j; it represents sum_k c_k^T Phi(2^j x - k)
for a scaling frame or sum_k d_k^T Psi(2^j x - k) for a quarklet frame.

``reconstruct`` merges a scaling and a quarklet frame one level up through
the two-scale masks; ``decompose`` splits one level down through the exact
splitting filters.  The two are exact inverses of each other.

For order m = 1 the quarklets supported on one period can be orthogonalized
degree by degree with plain rational Gram-Schmidt; the resulting functions
give an orthogonal re-basing of quarklet frames and an orthogonal projection
onto the detail space.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

from . import linalg
from .cdf import QuarkletFamily, quarklets
from .masks import MaskSequence
from .modulation import DecompositionFilters, ModulationBundle
from .piecewise import PiecewisePoly, inner_product
from .rational import as_rational

Vector = tuple[Fraction, ...]


@dataclass(frozen=True)
class CoefficientFrame:
    """Finitely supported map translate -> rational coefficient vector."""

    level: int
    width: int  # vector length, p + 1
    coefficients: Mapping[int, Vector]

    def __post_init__(self):
        clean = {}
        for k, v in self.coefficients.items():
            vec = tuple(as_rational(c) for c in v)
            if len(vec) != self.width:
                raise ValueError(f"coefficient at k={k} has length {len(vec)}, expected {self.width}")
            if any(vec):
                clean[int(k)] = vec
        object.__setattr__(self, "coefficients", clean)

    @staticmethod
    def zero(level: int, width: int) -> "CoefficientFrame":
        return CoefficientFrame(level, width, {})

    @staticmethod
    def unit(level: int, width: int, k: int, component: int) -> "CoefficientFrame":
        vec = [Fraction(0)] * width
        vec[component] = Fraction(1)
        return CoefficientFrame(level, width, {k: tuple(vec)})

    def __getitem__(self, k: int) -> Vector:
        return self.coefficients.get(k, (Fraction(0),) * self.width)

    def items(self):
        return sorted(self.coefficients.items())

    def is_zero(self) -> bool:
        return not self.coefficients


def reconstruct(
    scaling: CoefficientFrame, detail: CoefficientFrame, bundle: ModulationBundle
) -> CoefficientFrame:
    """One synthesis step: c_n = sum_l (A_{n-2l}^T s_l + B_{n-2l}^T d_l), exact."""
    if scaling.level != detail.level:
        raise ValueError("frames must live on the same level")
    width = bundle.size
    if scaling.width != width or detail.width != width:
        raise ValueError("frame width does not match the bundle degree")
    out: dict[int, list[Fraction]] = {}

    def accumulate(frame: CoefficientFrame, masks: MaskSequence):
        for l, vec in frame.items():
            for i, mat in masks.items():
                contrib = linalg.mat_t_vec(mat, vec)
                if any(contrib):
                    tgt = out.setdefault(i + 2 * l, [Fraction(0)] * width)
                    for idx, val in enumerate(contrib):
                        tgt[idx] += val

    accumulate(scaling, bundle.scaling_masks)
    accumulate(detail, bundle.detail_masks)
    return CoefficientFrame(scaling.level + 1, width, {k: tuple(v) for k, v in out.items()})


def decompose(
    frame: CoefficientFrame, filters: DecompositionFilters
) -> tuple[CoefficientFrame, CoefficientFrame]:
    """One analysis step, the exact inverse of :func:`reconstruct`."""
    width = filters.p + 1
    if frame.width != width:
        raise ValueError("frame width does not match the filter degree")
    s_out: dict[int, list[Fraction]] = {}
    d_out: dict[int, list[Fraction]] = {}

    for n, vec in frame.items():
        parity = n % 2
        l = (n - parity) // 2
        for masks, out in ((filters.coarse, s_out), (filters.detail, d_out)):
            for idx, mat in masks.items():
                if (idx - parity) % 2:
                    continue
                k = (idx - parity) // 2
                contrib = linalg.mat_t_vec(mat, vec)
                if any(contrib):
                    tgt = out.setdefault(l + k, [Fraction(0)] * width)
                    for i, val in enumerate(contrib):
                        tgt[i] += val
    level = frame.level - 1
    return (
        CoefficientFrame(level, width, {k: tuple(v) for k, v in s_out.items()}),
        CoefficientFrame(level, width, {k: tuple(v) for k, v in d_out.items()}),
    )


def frame_function(frame: CoefficientFrame, members: Sequence[PiecewisePoly]) -> PiecewisePoly:
    """The piecewise polynomial sum_k sum_q c_k[q] f_q(2^level x - k)."""
    scale = Fraction(2) ** frame.level
    total = PiecewisePoly.zero()
    for k, vec in frame.items():
        for q, c in enumerate(vec):
            if c:
                total = total + members[q].compose_linear(scale, -Fraction(k)) * c
    return total


# -- orthogonalized Haar quarklets ---------------------------------------------------


@dataclass(frozen=True)
class OrthoQuarklets:
    """Gram-Schmidt orthogonalized quarklets for order m = 1.

    ``to_plain[q][l]`` expresses member q over the plain quarklets
    (psi*_q = sum_l to_plain[q][l] psi_l, lower unitriangular), and
    ``from_plain`` is its exact inverse.
    """

    mt: int
    p: int
    members: tuple[PiecewisePoly, ...]
    norms: tuple[Fraction, ...]  # <psi*_q, psi*_q>
    to_plain: linalg.Mat
    from_plain: linalg.Mat
    plain: QuarkletFamily


def orthogonalize_haar(mt: int, p: int) -> OrthoQuarklets:
    """Degree-by-degree rational Gram-Schmidt of the order-1 quarklets.

    Requires mt odd (the order-1 filter pairs all have odd mt).  For mt = 1
    the quarklets live on [0, 1], so translates are orthogonal as well and
    the family spans the same detail space with a fully orthogonal system.
    """
    if mt % 2 == 0:
        raise ValueError("order 1 pairs with odd dual order only")
    family = quarklets(1, mt, p)
    members: list[PiecewisePoly] = []
    rows: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for q in range(p + 1):
        f = family[q]
        row = [Fraction(0)] * (p + 1)
        row[q] = Fraction(1)
        for l in range(q):
            coeff = inner_product(family[q], members[l]) / norms[l]
            if coeff:
                f = f - members[l] * coeff
                for j in range(l + 1):
                    row[j] -= coeff * rows[l][j]
        members.append(f)
        rows.append(row)
        norm = inner_product(f, f)
        if norm == 0:
            raise AssertionError(f"degenerate quarklet family: member {q} vanished")
        norms.append(norm)
    to_plain = tuple(tuple(r) for r in rows)
    return OrthoQuarklets(
        mt=mt,
        p=p,
        members=tuple(members),
        norms=tuple(norms),
        to_plain=to_plain,
        from_plain=_invert_lower_unitriangular(to_plain),
        plain=family,
    )


def _invert_lower_unitriangular(mat: linalg.Mat) -> linalg.Mat:
    n = len(mat)
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        inv[i][i] = Fraction(1)
        for j in range(i - 1, -1, -1):
            acc = sum((mat[i][k] * inv[k][j] for k in range(j, i)), Fraction(0))
            inv[i][j] = -acc
    return tuple(tuple(r) for r in inv)


def project_detail(f: PiecewisePoly, ortho: OrthoQuarklets) -> PiecewisePoly:
    """Orthogonal projection onto the detail space spanned by the translates.

    Valid for mt = 1, where the orthogonalized quarklets and all their
    translates form an orthogonal system (supports meet in measure zero).
    """
    if ortho.mt != 1:
        raise ValueError("the translate system is orthogonal only for mt = 1")
    if f.is_zero():
        return f
    lo, hi = f.support()
    out = PiecewisePoly.zero()
    for k in range(math.floor(lo), math.ceil(hi) + 1):
        for q in range(ortho.p + 1):
            member = ortho.members[q].translate(k)
            c = inner_product(f, member) / ortho.norms[q]
            if c:
                out = out + member * c
    return out


def to_orthogonal_frames(
    frame: CoefficientFrame, ortho: OrthoQuarklets
) -> list[dict[int, Fraction]]:
    """Re-express a quarklet frame over the orthogonalized members, degree by degree.

    Returns per-degree scalar frames out[q] = {k: coefficient of psi*_q(. - k)};
    the represented function is unchanged.
    """
    if frame.width != ortho.p + 1:
        raise ValueError("frame width does not match the family")
    out: list[dict[int, Fraction]] = [dict() for _ in range(ortho.p + 1)]
    for k, vec in frame.items():
        for l, c in enumerate(vec):
            if not c:
                continue
            for q in range(l + 1):
                val = ortho.from_plain[l][q] * c
                if val:
                    cur = out[q].get(k, Fraction(0)) + val
                    if cur:
                        out[q][k] = cur
                    else:
                        out[q].pop(k, None)
    return out


def from_orthogonal_frames(
    frames: Sequence[Mapping[int, Fraction]], ortho: OrthoQuarklets, level: int = 0
) -> CoefficientFrame:
    """Inverse of :func:`to_orthogonal_frames`."""
    width = ortho.p + 1
    if len(frames) != width:
        raise ValueError("need one scalar frame per degree")
    out: dict[int, list[Fraction]] = {}
    for q, scalar_frame in enumerate(frames):
        for k, c in scalar_frame.items():
            if not c:
                continue
            tgt = out.setdefault(k, [Fraction(0)] * width)
            for l in range(q + 1):
                tgt[l] += ortho.to_plain[q][l] * c
    return CoefficientFrame(level, width, {k: tuple(v) for k, v in out.items()})

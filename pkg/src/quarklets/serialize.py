"""Canonical JSON forms of the exact types.

Rationals are ``[numerator, denominator]`` integer pairs; Gaussian rationals
are ``{"re": [n, d], "im": [n, d]}``.  Sparse integer-indexed collections are
emitted as sorted ``[index, value]`` pair lists so output is byte-stable.
"""

from __future__ import annotations

from fractions import Fraction

from .laurent import LaurentMatrix, LaurentPoly
from .masks import MaskSequence
from .piecewise import PiecewisePoly
from .rational import Coeff, GaussianRational
from .transform import CoefficientFrame
from .trig import TrigPoly


def rational_json(x: Fraction) -> list[int]:
    return [x.numerator, x.denominator]


def rational_from_json(obj) -> Fraction:
    num, den = obj
    return Fraction(int(num), int(den))


def coeff_json(c: Coeff):
    if isinstance(c, GaussianRational):
        return {"re": rational_json(c.real), "im": rational_json(c.imag)}
    return rational_json(c)


def coeff_from_json(obj) -> Coeff:
    if isinstance(obj, dict):
        return GaussianRational(rational_from_json(obj["re"]), rational_from_json(obj["im"]))
    return rational_from_json(obj)


def laurent_poly_json(p: LaurentPoly) -> dict:
    return {"terms": [[k, coeff_json(c)] for k, c in p.items()]}


def laurent_poly_from_json(obj) -> LaurentPoly:
    return LaurentPoly({int(k): coeff_from_json(c) for k, c in obj["terms"]})


def laurent_matrix_json(m: LaurentMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[laurent_poly_json(e) for e in row] for row in m.entries],
    }


def matrix_json(mat) -> list:
    return [[rational_json(x) for x in row] for row in mat]


def matrix_from_json(obj):
    return tuple(tuple(rational_from_json(x) for x in row) for row in obj)


def mask_json(mask: MaskSequence) -> dict:
    if mask.rows == 1 and mask.cols == 1:
        return {"kind": "scalar", "taps": [[k, rational_json(v)] for k, v in mask.scalars().items()]}
    return {
        "kind": "matrix",
        "rows": mask.rows,
        "cols": mask.cols,
        "taps": [[k, matrix_json(m)] for k, m in mask.items()],
    }


def mask_from_json(obj) -> MaskSequence:
    if obj["kind"] == "scalar":
        return MaskSequence.from_scalars({int(k): rational_from_json(v) for k, v in obj["taps"]})
    return MaskSequence(
        int(obj["rows"]),
        int(obj["cols"]),
        {int(k): matrix_from_json(m) for k, m in obj["taps"]},
    )


def piecewise_json(f: PiecewisePoly) -> dict:
    return {
        "breakpoints": [rational_json(b) for b in f.breakpoints],
        "pieces": [[rational_json(c) for c in piece] for piece in f.pieces],
    }


def piecewise_from_json(obj) -> PiecewisePoly:
    return PiecewisePoly(
        [rational_from_json(b) for b in obj["breakpoints"]],
        [[rational_from_json(c) for c in piece] for piece in obj["pieces"]],
    )


def trig_json(t: TrigPoly) -> dict:
    return {"terms": [[n, coeff_json(c)] for n, c in sorted(t.coeffs.items())]}


def frame_json(frame: CoefficientFrame) -> dict:
    return {
        "level": frame.level,
        "width": frame.width,
        "coefficients": [[k, [rational_json(c) for c in vec]] for k, vec in frame.items()],
    }


def frame_from_json(obj) -> CoefficientFrame:
    return CoefficientFrame(
        int(obj["level"]),
        int(obj["width"]),
        {int(k): tuple(rational_from_json(c) for c in vec) for k, vec in obj["coefficients"]},
    )

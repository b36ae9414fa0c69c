"""Command-line front end.

Every subcommand is a thin wrapper over the library with file or stdout
output.  Outputs are deterministic: exact rationals as [num, den] pairs,
floats printed with 17 significant digits, no timestamps.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import duals, serialize, stability, transform
from .cdf import cdf_masks, quarklets, scalar_pr_defect, validate_orders
from .modulation import build_modulation, decomposition_filters, verify_perfect_reconstruction
from .splines import bspline, quark
from .transform import orthogonalize_haar


class UsageError(Exception):
    pass


def _fmt_float(x: float) -> str:
    return format(x, ".17g")


def _write(text: str, path: str | None):
    if path:
        with open(path, "w") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _json_dump(payload) -> str:
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _csv_text(rows, header) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


# -- subcommand handlers --------------------------------------------------------


def cmd_filters(args) -> int:
    validate_orders(args.m, args.mt)
    pair = cdf_masks(args.m, args.mt)
    payload = {
        "m": args.m,
        "mt": args.mt,
        "primal": serialize.mask_json(pair.primal),
        "dual": serialize.mask_json(pair.dual),
        "wavelet": serialize.mask_json(pair.wavelet),
        "dual_wavelet": serialize.mask_json(pair.dual_wavelet),
    }
    if args.dual and args.p is None:
        raise UsageError("--dual needs --p to fix the quark degree")
    if args.p is not None:
        bundle = build_modulation(args.m, args.mt, args.p)
        payload["p"] = args.p
        payload["scaling_masks"] = serialize.mask_json(bundle.scaling_masks)
        if args.dual:
            payload["dual_scaling_masks"] = serialize.mask_json(bundle.dual_scaling_masks)
            payload["dual_detail_masks"] = serialize.mask_json(bundle.dual_detail_masks)
    _write(_json_dump(payload), args.out)
    return 0


def cmd_verify_pr(args) -> int:
    validate_orders(args.m, args.mt)
    bundle = build_modulation(args.m, args.mt, args.p)
    report = verify_perfect_reconstruction(bundle)
    scalar_defect = scalar_pr_defect(
        bundle.filters.primal_symbol(), bundle.filters.dual_symbol()
    )
    payload = {
        "m": args.m,
        "mt": args.mt,
        "p": args.p,
        "identity_holds": report.identity_holds,
        "scalar_identity_holds": scalar_defect.is_zero(),
        "residual_entries": [
            {"row": i, "col": j, "poly": serialize.laurent_poly_json(r)}
            for i, j, r in report.residuals
        ],
    }
    _write(_json_dump(payload), args.out)
    return 0 if report.identity_holds and scalar_defect.is_zero() else 1


def cmd_stability_table(args) -> int:
    table = stability.stability_table(args.max_m, args.max_p)
    ms = range(1, args.max_m + 1)
    ps = range(0, args.max_p + 1)
    if args.format == "json":
        payload = {
            "cells": [
                {"m": m, "p": p, "stable": table[(m, p)]} for m in ms for p in ps
            ]
        }
        _write(_json_dump(payload), args.out)
    elif args.format == "csv":
        rows = [[m, p, "stable" if table[(m, p)] else "unstable"] for m in ms for p in ps]
        _write(_csv_text(rows, ["m", "p", "stability"]), args.out)
    else:
        lines = ["| m \\ p | " + " | ".join(str(p) for p in ps) + " |"]
        lines.append("|" + "---|" * (len(list(ps)) + 1))
        for m in ms:
            cells = ["stable" if table[(m, p)] else "unstable" for p in ps]
            lines.append(f"| {m} | " + " | ".join(cells) + " |")
        _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_ft_zeros(args) -> int:
    zeros = stability.ft_zero_scan(args.m, args.q, args.lo, args.hi, samples=args.samples)
    rows = [[_fmt_float(z)] for z in zeros]
    _write(_csv_text(rows, ["zero"]), args.out)
    return 0


def cmd_eigen(args) -> int:
    validate_orders(args.m, args.mt)
    eig = stability.dual_symbol_eigenvalues(args.m, args.mt, args.p)
    mat = stability.dual_symbol_at_one(args.m, args.mt, args.p)
    payload = {
        "m": args.m,
        "mt": args.mt,
        "p": args.p,
        "eigenvalues": [serialize.rational_json(v) for v in eig],
        "condition_e": stability.condition_e(mat),
        "eigenvector": [serialize.rational_json(v) for v in duals.dual_eigenvector(args.m, args.mt, args.p)],
    }
    _write(_json_dump(payload), args.out)
    return 0


def cmd_dual(args) -> int:
    validate_orders(args.m, args.mt)
    grid = duals.dyadic_grid(args.grid_span, args.grid_depth)
    if args.quarklets:
        grid_full = duals.with_halves(grid)
        approx = duals.dual_quark_ft(args.m, args.mt, args.p, args.levels, grid_full)
        values = duals.dual_quarklet_ft(approx, points=grid)
        pts = [Fraction(t) for t in grid]
    else:
        approx = duals.dual_quark_ft(args.m, args.mt, args.p, args.levels, grid)
        values = approx.values
        pts = list(approx.grid)
    rows = []
    for t in pts:
        xi = 2 * math.pi * float(t)
        vec = values[t]
        for comp in range(args.p + 1):
            rows.append(
                [_fmt_float(xi), comp, _fmt_float(vec[comp].real), _fmt_float(vec[comp].imag)]
            )
    _write(_csv_text(rows, ["xi", "component", "re", "im"]), args.out)
    return 0


def cmd_decompose(args) -> int:
    validate_orders(args.m, args.mt)
    with open(args.input) as handle:
        frame = serialize.frame_from_json(json.load(handle))
    bundle = build_modulation(args.m, args.mt, frame.width - 1)
    filters = decomposition_filters(bundle)
    s, d = transform.decompose(frame, filters)
    _write(_json_dump(serialize.frame_json(s)), args.out_scaling)
    _write(_json_dump(serialize.frame_json(d)), args.out_detail)
    return 0


def cmd_reconstruct(args) -> int:
    validate_orders(args.m, args.mt)
    with open(args.scaling) as handle:
        s = serialize.frame_from_json(json.load(handle))
    with open(args.detail) as handle:
        d = serialize.frame_from_json(json.load(handle))
    if s.width != d.width:
        raise UsageError("scaling and detail frames have different widths")
    bundle = build_modulation(args.m, args.mt, s.width - 1)
    c = transform.reconstruct(s, d, bundle)
    _write(_json_dump(serialize.frame_json(c)), args.out)
    return 0


def cmd_orthogonalize(args) -> int:
    ortho = orthogonalize_haar(args.mt, args.p)
    if args.format == "csv":
        rows = []
        count = args.samples
        for q, member in enumerate(ortho.members):
            for i in range(count + 1):
                x = Fraction(i, count)
                rows.append([q, _fmt_float(float(x)), _fmt_float(float(member(x)))])
        _write(_csv_text(rows, ["degree", "x", "value"]), args.out)
        return 0
    payload = {
        "mt": args.mt,
        "p": args.p,
        "members": [serialize.piecewise_json(f) for f in ortho.members],
        "norms": [serialize.rational_json(n) for n in ortho.norms],
        "to_plain": serialize.matrix_json(ortho.to_plain),
        "from_plain": serialize.matrix_json(ortho.from_plain),
    }
    _write(_json_dump(payload), args.out)
    return 0


def cmd_sample(args) -> int:
    if args.function == "bspline":
        f = bspline(args.m)
    elif args.function == "quark":
        f = quark(args.m, args.q)
    elif args.function == "quarklet":
        validate_orders(args.m, args.mt)
        f = quarklets(args.m, args.mt, args.q)[args.q]
    elif args.function == "ortho-quarklet":
        if args.m != 1:
            raise UsageError("ortho-quarklet requires --m 1")
        f = orthogonalize_haar(args.mt, args.q).members[args.q]
    else:  # pragma: no cover - argparse restricts choices
        raise UsageError(f"unknown function {args.function}")
    if args.count < 2:
        raise UsageError("--count must be at least 2")
    start = Fraction(args.start).limit_denominator(10**9)
    end = Fraction(args.end).limit_denominator(10**9)
    if end <= start:
        raise UsageError("--end must exceed --start")
    rows = []
    for i in range(args.count):
        x = start + (end - start) * Fraction(i, args.count - 1)
        rows.append([_fmt_float(float(x)), _fmt_float(float(f(x)))])
    _write(_csv_text(rows, ["x", "value"]), args.out)
    return 0


# -- parser -----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quarklets",
        description="Exact B-spline quark/quarklet multiwavelet filter bank toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_orders(p, with_p=True, p_required=True):
        p.add_argument("--m", type=int, required=True, help="primal spline order")
        p.add_argument("--mt", type=int, required=True, help="dual spline order")
        if with_p:
            p.add_argument("--p", type=int, required=p_required, help="maximal quark degree")

    p = sub.add_parser("filters", help="emit the exact filter masks as JSON")
    add_orders(p, p_required=False)
    p.add_argument("--dual", action="store_true", help="include dual quark/quarklet mask matrices")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_filters)

    p = sub.add_parser("verify-pr", help="check the perfect reconstruction identity exactly")
    add_orders(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_verify_pr)

    p = sub.add_parser("stability-table", help="exact stability grid of single quarks")
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-p", type=int, required=True)
    p.add_argument("--format", choices=["md", "csv", "json"], default="md")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_stability_table)

    p = sub.add_parser("ft-zeros", help="scan a quark Fourier transform for zeros")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--q", type=int, required=True, help="quark degree")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--samples", type=int, default=4000)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_ft_zeros)

    p = sub.add_parser("eigen", help="dual symbol spectrum at z = 1 and Condition E")
    add_orders(p)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_eigen)

    p = sub.add_parser("dual", help="truncated-product dual transform values (CSV)")
    add_orders(p)
    p.add_argument("--levels", type=int, default=25, help="product truncation depth")
    p.add_argument("--grid-span", type=int, default=4, help="xi range in multiples of 2*pi")
    p.add_argument("--grid-depth", type=int, default=4, help="dyadic grid depth")
    p.add_argument("--quarklets", action="store_true", help="emit dual quarklet values instead")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_dual)

    p = sub.add_parser("decompose", help="split a fine frame into coarse + detail frames")
    add_orders(p, with_p=False)
    p.add_argument("--input", required=True, help="fine frame JSON")
    p.add_argument("--out-scaling", required=True)
    p.add_argument("--out-detail", required=True)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("reconstruct", help="merge coarse + detail frames one level up")
    add_orders(p, with_p=False)
    p.add_argument("--scaling", required=True, help="scaling frame JSON")
    p.add_argument("--detail", required=True, help="detail frame JSON")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("orthogonalize", help="orthogonalized order-1 quarklets")
    p.add_argument("--mt", type=int, required=True)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--samples", type=int, default=256, help="samples per unit for csv output")
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_orthogonalize)

    p = sub.add_parser("sample", help="sample a named function on a uniform grid (CSV)")
    p.add_argument(
        "--function",
        choices=["bspline", "quark", "quarklet", "ortho-quarklet"],
        required=True,
    )
    p.add_argument("--m", type=int, default=1)
    p.add_argument("--mt", type=int, default=1)
    p.add_argument("--q", type=int, default=0, help="degree of the sampled member")
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--end", type=float, required=True)
    p.add_argument("--count", type=int, default=257)
    p.add_argument("--out", help="output path (default stdout)")
    p.set_defaults(func=cmd_sample)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (KeyError, json.JSONDecodeError) as exc:
        print(f"error: malformed input ({exc})", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

"""Command line front end.

Exit codes: 0 success, 1 verification failure, 2 invalid configuration,
3 I/O failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence

import numpy as np

from . import export
from .dressing import BubbletonParams, removable_limit, residue_check
from .errors import BubbletonError
from .geometry import extract_planar_curve, surface_mesh, turning_number
from .verify import run_verification

EXIT_OK, EXIT_FAILED, EXIT_CONFIG, EXIT_IO = 0, 1, 2, 3


class ConfigError(Exception):
    pass


def _lobe_list(text: str) -> list[int]:
    try:
        ks = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise ConfigError(f"lobe numbers must be integers, got {text!r}") from None
    if not ks:
        raise ConfigError("no lobe number given")
    bad = [k for k in ks if k < 2]
    if bad:
        raise ConfigError(f"lobe numbers must satisfy K >= 2, got {bad[0]}")
    if len(set(ks)) != len(ks):
        raise ConfigError(f"each lobe number may appear only once, got {ks}")
    return ks


def _single_K(text: str) -> int:
    ks = _lobe_list(text)
    if len(ks) != 1:
        raise ConfigError("this command takes a single lobe number K")
    return ks[0]


def _count(value: int, name: str, minimum: int = 16) -> int:
    if value < minimum:
        raise ConfigError(f"{name} must be >= {minimum}, got {value}")
    return value


def _H(value: float) -> float:
    if value == 0:
        raise ConfigError("mean curvature H must be nonzero")
    return value


def cmd_curve(args) -> int:
    K = _single_K(args.K)
    params = BubbletonParams.from_lobes([K], H=_H(args.H))
    n = _count(args.samples, "--samples")
    curve = extract_planar_curve(params, n=n, refine=False)
    if args.out:
        export.atomic_write(args.out, export.curve_csv(curve))
    else:
        sys.stdout.write(export.curve_csv(curve))
    if args.svg:
        export.atomic_write(args.svg, export.curve_svg(extract_planar_curve(params, n=n)))
    return EXIT_OK


def cmd_surface(args) -> int:
    if (args.K is None) == (args.lobes is None):
        raise ConfigError("give exactly one of --K or --lobes")
    ks = _lobe_list(args.K if args.K is not None else args.lobes)
    params = BubbletonParams.from_lobes(ks, H=_H(args.H))
    nx = _count(args.nx, "--nx", 2)
    ny = _count(args.ny, "--ny", 2)
    if not args.y_max > args.y_min:
        raise ConfigError("--y-max must exceed --y-min")
    mesh = surface_mesh(params, nx, ny, (args.y_min, args.y_max))
    export.atomic_write(args.out, export.mesh_obj(mesh))
    return EXIT_OK


def cmd_turning_number(args) -> int:
    K = _single_K(args.K)
    params = BubbletonParams.from_lobes([K], H=_H(args.H))
    tn = turning_number(extract_planar_curve(params, n=_count(args.samples, "--samples")))
    print(f"K={K} turning_number={tn.value} raw={tn.raw:.12f} expected={2 * K - 1}")
    return EXIT_OK


def cmd_residue(args) -> int:
    K = _single_K(args.K)
    limit = residue_check(K).to_array()
    exact = removable_limit(K).to_array()
    rel = float(np.max(np.abs(limit - exact)) / np.max(np.abs(exact)))
    for row in limit:
        print("  ".join(f"{v.real:+.12e}{v.imag:+.12e}j" for v in row))
    print(f"relative deviation from closed form: {rel:.3e}")
    return EXIT_OK


def cmd_verify(args) -> int:
    ks = _lobe_list(args.K)
    samples = _count(args.samples, "--samples")
    report = run_verification(ks, tol_override=args.tol, samples=samples)
    text = export.report_json(report.to_dict())
    if args.out:
        export.atomic_write(args.out, text)
    else:
        sys.stdout.write(text)
    return EXIT_OK if report.passed else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bubbleton", description="CMC bubbletons by dressing the round cylinder")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("curve", help="sample the planar y=0 curve as CSV (and SVG)")
    p.add_argument("--K", required=True)
    p.add_argument("--samples", type=int, default=2000)
    p.add_argument("--H", type=float, default=-0.5)
    p.add_argument("--out", help="CSV path (stdout if omitted)")
    p.add_argument("--svg", help="also write an SVG plot")
    p.set_defaults(func=cmd_curve)

    p = sub.add_parser("surface", help="write the surface as a Wavefront OBJ quad grid")
    p.add_argument("--K")
    p.add_argument("--lobes", help="comma separated lobe numbers, e.g. 2,3")
    p.add_argument("--nx", type=int, default=256)
    p.add_argument("--ny", type=int, default=256)
    p.add_argument("--y-min", type=float, default=-3.0)
    p.add_argument("--y-max", type=float, default=3.0)
    p.add_argument("--H", type=float, default=-0.5)
    p.add_argument("--out", default="surface.obj")
    p.set_defaults(func=cmd_surface)

    p = sub.add_parser("turning-number", help="turning number of the y=0 curve")
    p.add_argument("--K", required=True)
    p.add_argument("--samples", type=int, default=2048)
    p.add_argument("--H", type=float, default=-0.5)
    p.set_defaults(func=cmd_turning_number)

    p = sub.add_parser("residue", help="limit of the dressed monodromy at lambda = alpha")
    p.add_argument("--K", required=True)
    p.set_defaults(func=cmd_residue)

    p = sub.add_parser("verify", help="run the verification checks and emit a JSON report")
    p.add_argument("--K", default="2,3,4,5")
    p.add_argument("--samples", type=int, default=4096)
    p.add_argument("--tol", type=float, help="replace every tolerance with this value")
    p.add_argument("--out", help="report path (stdout if omitted)")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ConfigError, ValueError) as exc:
        print(f"bubbleton: error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"bubbleton: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    except BubbletonError as exc:
        print(f"bubbleton: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())

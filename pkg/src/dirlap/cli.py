"""Command-line front end: generate complexes, sweep spectra and commutators,
locate zero-eigenvalue angles, run diffusion, and check complex files."""

from __future__ import annotations

import argparse
import json
import re
import sys

import numpy as np

from .complexes import DirectedSimplicialComplex, orient_manifold
from .diffusion import build_diffusion_operator, classify_equilibrium, diffuse, random_cochain
from .errors import DirlapError, NotOrientable, NotPseudoManifold
from .generators import (
    TorusSpec,
    complex_to_document,
    directed_triangle,
    load_complex,
    save_complex,
    triangulated_torus,
)
from .sweeps import (
    OPERATOR_TAGS,
    commutator_sweep,
    delta_grid,
    export_csv,
    export_trajectory_csv,
    spectrum_sweep,
    zero_eigenvalue_deltas,
)

_BUILTIN_CASE = re.compile(r"case([1-4])$")
_BUILTIN_TORUS = re.compile(r"torus(\d+)x(\d+)t([12])$")
_ANGLE = re.compile(r"(-?)(\d+(?:\.\d*)?)?\*?pi(?:/(\d+(?:\.\d*)?))?$")


def parse_angle(text: str) -> float:
    """Decimal radians or fractions of pi such as 'pi/3', '2pi/3', '-pi/2'."""
    s = text.strip().lower().replace(" ", "")
    m = _ANGLE.fullmatch(s)
    if m:
        sign = -1.0 if m.group(1) else 1.0
        coefficient = float(m.group(2)) if m.group(2) else 1.0
        denominator = float(m.group(3)) if m.group(3) else 1.0
        return sign * coefficient * np.pi / denominator
    try:
        return float(s)
    except ValueError:
        raise DirlapError(f"cannot parse angle {text!r}; use radians or forms like pi/3")


def resolve_complex(source: str) -> DirectedSimplicialComplex:
    """Built-in names (case1..case4, torusMxNt1, torusMxNt2) or a file path."""
    m = _BUILTIN_CASE.fullmatch(source)
    if m:
        return directed_triangle(int(m.group(1)))
    m = _BUILTIN_TORUS.fullmatch(source)
    if m:
        return triangulated_torus(TorusSpec(int(m.group(1)), int(m.group(2)), int(m.group(3))))
    return load_complex(source)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dirlap",
        description="Spectra, commutators and diffusion on directed 2-dimensional "
        "simplicial complexes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="emit a built-in complex as JSON")
    group = gen.add_mutually_exclusive_group(required=True)
    group.add_argument("--case", type=int, choices=(1, 2, 3, 4), help="directed triangle case")
    group.add_argument("--torus", metavar="MxN", help="torus grid size, e.g. 3x3")
    gen.add_argument("--type", type=int, choices=(1, 2), default=1, help="torus direction type")
    gen.add_argument("--out", help="output file (default: standard output)")

    spectrum = sub.add_parser("spectrum", help="eigenvalues over an angle grid")
    spectrum.add_argument("--complex", required=True, dest="source", metavar="SRC")
    spectrum.add_argument("--op", required=True, choices=OPERATOR_TAGS)
    spectrum.add_argument("--points", type=int, default=256)
    spectrum.add_argument("--threads", type=int, default=1, help="worker threads")
    spectrum.add_argument("--out", required=True)

    comm = sub.add_parser("commutator", help="norm of [L1up, L1down] over an angle grid")
    comm.add_argument("--complex", required=True, dest="source", metavar="SRC")
    comm.add_argument("--points", type=int, default=256)
    comm.add_argument("--threads", type=int, default=1, help="worker threads")
    comm.add_argument("--out", required=True)

    zeros = sub.add_parser("zeros", help="angles where the smallest eigenvalue vanishes")
    zeros.add_argument("--complex", required=True, dest="source", metavar="SRC")
    zeros.add_argument("--op", required=True, choices=OPERATOR_TAGS)
    zeros.add_argument("--points", type=int, default=256)
    zeros.add_argument("--threads", type=int, default=1, help="worker threads")
    zeros.add_argument("--threshold", type=float, default=1e-6)

    diff = sub.add_parser("diffuse", help="integrate the edge diffusion dynamics")
    diff.add_argument("--complex", required=True, dest="source", metavar="SRC")
    diff.add_argument("--op", required=True, choices=("up", "down", "combined"))
    diff.add_argument("--delta", required=True, help="rotation angle (radians or pi/3 forms)")
    diff.add_argument("--seed", type=int, default=0, help="seed for the initial cochain")
    diff.add_argument("--tmax", type=float, default=50.0)
    diff.add_argument("--dt", default="auto", help="time step or 'auto'")
    diff.add_argument("--out", required=True)

    check = sub.add_parser("check", help="validate a complex and report orientability")
    check.add_argument("--complex", required=True, dest="source", metavar="SRC")
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _dispatch(args)
    except (DirlapError, OSError) as exc:
        print(f"dirlap: error: {exc}", file=sys.stderr)
        return 1


def _dispatch(args) -> int:
    if args.command == "generate":
        if args.case is not None:
            c = directed_triangle(args.case)
        else:
            m = re.fullmatch(r"(\d+)x(\d+)", args.torus or "")
            if not m:
                raise DirlapError(f"--torus expects MxN, got {args.torus!r}")
            c = triangulated_torus(TorusSpec(int(m.group(1)), int(m.group(2)), args.type))
        if args.out:
            save_complex(c, args.out)
        else:
            print(json.dumps(complex_to_document(c), indent=2))
        return 0

    if args.command == "spectrum":
        c = resolve_complex(args.source)
        sweep = spectrum_sweep(
            c, args.op, delta_grid(args.points), threads=args.threads, name=args.source
        )
        export_csv(sweep, args.out)
        return 0

    if args.command == "commutator":
        c = resolve_complex(args.source)
        sweep = commutator_sweep(c, delta_grid(args.points), threads=args.threads, name=args.source)
        export_csv(sweep, args.out)
        return 0

    if args.command == "zeros":
        c = resolve_complex(args.source)
        sweep = spectrum_sweep(
            c, args.op, delta_grid(args.points), threads=args.threads, name=args.source
        )
        zeros = zero_eigenvalue_deltas(sweep, threshold=args.threshold)
        print(", ".join(f"{z:.6f}" for z in zeros))
        return 0

    if args.command == "diffuse":
        c = resolve_complex(args.source)
        delta = parse_angle(args.delta)
        dt = None if args.dt == "auto" else float(args.dt)
        nu0 = random_cochain(c.n_edges, args.seed)
        traj = diffuse(args.op, c, delta, nu0, t_max=args.tmax, dt=dt)
        export_trajectory_csv(traj, args.out)
        op = build_diffusion_operator(args.op, c, delta)
        report = classify_equilibrium(traj, op)
        print(report.kind)
        return 0

    if args.command == "check":
        c = resolve_complex(args.source)
        problems = c.validate()
        if problems:
            print(f"invalid; {'; '.join(problems)}", file=sys.stderr)
            return 1
        try:
            orient_manifold(c)
            orientable = "orientable"
        except (NotOrientable, NotPseudoManifold) as exc:
            orientable = f"not orientable ({exc})"
        print(f"valid; {orientable}; V={c.vertex_count} E={c.n_edges} T={c.n_triangles}")
        return 0

    raise DirlapError(f"unhandled command {args.command!r}")


if __name__ == "__main__":
    sys.exit(main())

"""Parameter sweeps over the rotation angle: spectra, commutator norms,
zero-eigenvalue sets, degeneracy profiles, and CSV/JSON export."""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .complexes import DirectedSimplicialComplex, orient_manifold
from .connection import connection_1down, connection_1up, connection_2down
from .diffusion import Trajectory, to_angles, Cochain
from .errors import DimensionMismatch
from .graph_laplacians import magnetic_laplacian
from .linalg import DEGENERACY_TOL, commutator, frobenius_norm, hermitian_eigenvalues

TWO_PI = 2.0 * np.pi

OPERATOR_TAGS = ("1up", "1down", "combined", "2down", "magnetic")

DEFAULT_POINTS = 256


def delta_grid(points: int = DEFAULT_POINTS) -> np.ndarray:
    """Uniform grid on [0, 2 pi), excluding the right endpoint."""
    return np.arange(points) * (TWO_PI / points)


def operator_matrix(c: DirectedSimplicialComplex, tag: str, delta: float) -> np.ndarray:
    """Materialize the operator selected by `tag` at one angle.  The 2-down
    operator needs a manifold orientation, which is assigned on the fly."""
    if tag == "1up":
        return connection_1up(c, delta).matrix
    if tag == "1down":
        return connection_1down(c, delta).matrix
    if tag == "combined":
        return connection_1up(c, delta).matrix + connection_1down(c, delta).matrix
    if tag == "2down":
        oriented = c if c.is_oriented_manifold() else orient_manifold(c)
        return connection_2down(oriented, delta).matrix
    if tag == "magnetic":
        return magnetic_laplacian(c, delta)
    raise DimensionMismatch(f"operator tag must be one of {OPERATOR_TAGS}, got {tag!r}")


@dataclass
class SweepResult:
    """Angle grid plus either the per-angle sorted spectrum or the per-angle
    commutator norm, with enough metadata to reproduce the run."""

    tag: str
    deltas: np.ndarray
    eigenvalues: np.ndarray | None = None
    commutator_norms: np.ndarray | None = None
    metadata: dict = field(default_factory=dict)
    _min_eig_fn: Callable[[float], float] | None = field(default=None, repr=False)


def _map_grid(fn, grid: np.ndarray, threads: int):
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(fn, grid))
    return [fn(d) for d in grid]


def spectrum_sweep(
    c: DirectedSimplicialComplex,
    tag: str,
    grid: np.ndarray | None = None,
    threads: int = 1,
    name: str = "",
) -> SweepResult:
    """Eigenvalues of the selected operator at every grid angle."""
    c.require_valid()
    if grid is None:
        grid = delta_grid()
    oriented = c
    if tag == "2down" and not c.is_oriented_manifold():
        oriented = orient_manifold(c)

    def eigenvalues_at(delta: float) -> np.ndarray:
        return hermitian_eigenvalues(operator_matrix(oriented, tag, delta))

    rows = _map_grid(eigenvalues_at, grid, threads)
    result = SweepResult(
        tag,
        np.asarray(grid, dtype=float),
        eigenvalues=np.vstack(rows) if rows else np.empty((0, 0)),
        metadata={
            "complex": name,
            "vertices": c.vertex_count,
            "edges": c.n_edges,
            "triangles": c.n_triangles,
        },
    )
    result._min_eig_fn = lambda delta: float(eigenvalues_at(float(delta))[0])
    return result


def commutator_sweep(
    c: DirectedSimplicialComplex,
    grid: np.ndarray | None = None,
    threads: int = 1,
    name: str = "",
) -> SweepResult:
    """Frobenius norm of the commutator of the 1-up and 1-down operators."""
    c.require_valid()
    if grid is None:
        grid = delta_grid()

    def norm_at(delta: float) -> float:
        up = connection_1up(c, delta).matrix
        down = connection_1down(c, delta).matrix
        return frobenius_norm(commutator(up, down))

    norms = _map_grid(norm_at, grid, threads)
    return SweepResult(
        "commutator",
        np.asarray(grid, dtype=float),
        commutator_norms=np.asarray(norms, dtype=float),
        metadata={
            "complex": name,
            "vertices": c.vertex_count,
            "edges": c.n_edges,
            "triangles": c.n_triangles,
        },
    )


def zero_eigenvalue_deltas(sweep: SweepResult, threshold: float = 1e-6) -> list[float]:
    """Angles at which the smallest eigenvalue dips below `threshold`.

    The smallest-eigenvalue curve typically touches zero quadratically, so the
    below-threshold window can be narrower than the grid spacing.  Each local
    minimum of the sampled curve is therefore sharpened by golden-section
    search first; when the sharpened minimum sits below the threshold, the two
    crossing points of (lambda_min - threshold) are located by bisection and
    the midpoint of the below-threshold interval is reported.
    """
    if sweep.eigenvalues is None or sweep._min_eig_fn is None:
        raise DimensionMismatch("zero refinement needs a spectrum sweep")
    points = sweep.deltas.size
    if points < 8:
        raise DimensionMismatch("grid too coarse to bracket zeros")
    minima = sweep.eigenvalues[:, 0]
    if np.all(minima < threshold):
        raise DimensionMismatch("smallest eigenvalue is below threshold everywhere")

    fn = sweep._min_eig_fn
    step = TWO_PI / points

    def f(x: float) -> float:
        return fn(x % TWO_PI)

    def golden_min(lo: float, hi: float) -> tuple[float, float]:
        inv_phi = (np.sqrt(5.0) - 1.0) / 2.0
        a, b = lo, hi
        x1 = b - inv_phi * (b - a)
        x2 = a + inv_phi * (b - a)
        f1, f2 = f(x1), f(x2)
        while b - a > 1e-10:
            if f1 <= f2:
                b, x2, f2 = x2, x1, f1
                x1 = b - inv_phi * (b - a)
                f1 = f(x1)
            else:
                a, x1, f1 = x1, x2, f2
                x2 = a + inv_phi * (b - a)
                f2 = f(x2)
        x = 0.5 * (a + b)
        return x, f(x)

    def crossing(inside: float, outside: float) -> float:
        # f(inside) < threshold <= f(outside)
        lo, hi = inside, outside
        for _ in range(60):
            if abs(hi - lo) <= 1e-9:
                break
            mid = 0.5 * (lo + hi)
            if f(mid) < threshold:
                lo = mid
            else:
                hi = mid
        return 0.5 * (lo + hi)

    zeros: list[float] = []
    for idx in range(points):
        prev_val = minima[(idx - 1) % points]
        next_val = minima[(idx + 1) % points]
        if not (minima[idx] <= prev_val and minima[idx] <= next_val):
            continue
        center = idx * step
        x_min, f_min = golden_min(center - step, center + step)
        if f_min >= threshold:
            continue
        left_out = x_min
        for _ in range(points):
            left_out -= step
            if f(left_out) >= threshold:
                break
        else:
            raise DimensionMismatch("could not bracket the below-threshold interval")
        right_out = x_min
        for _ in range(points):
            right_out += step
            if f(right_out) >= threshold:
                break
        else:
            raise DimensionMismatch("could not bracket the below-threshold interval")
        left = crossing(x_min, left_out)
        right = crossing(x_min, right_out)
        z = (0.5 * (left + right)) % TWO_PI
        if TWO_PI - z < 1e-6:
            z = 0.0
        zeros.append(z)

    zeros.sort()
    merged: list[float] = []
    for z in zeros:
        if merged and min(abs(z - merged[-1]), TWO_PI - abs(z - merged[-1])) < 1e-6:
            continue
        merged.append(z)
    return merged


def degeneracy_profile(
    sweep: SweepResult, grouping_tol: float = DEGENERACY_TOL
) -> list[list[tuple[float, int]]]:
    """Cluster each angle's spectrum into (value, multiplicity) groups."""
    if sweep.eigenvalues is None:
        raise DimensionMismatch("degeneracy profile needs a spectrum sweep")
    profiles = []
    for row in sweep.eigenvalues:
        groups: list[tuple[float, int]] = []
        start = 0
        for stop in range(1, row.size + 1):
            if stop < row.size and row[stop] - row[stop - 1] <= grouping_tol:
                continue
            cluster = row[start:stop]
            groups.append((float(np.mean(cluster)), int(cluster.size)))
            start = stop
        profiles.append(groups)
    return profiles


def distinct_eigenvalue_counts(sweep: SweepResult, grouping_tol: float = DEGENERACY_TOL):
    return [len(groups) for groups in degeneracy_profile(sweep, grouping_tol)]


# -- export --------------------------------------------------------------------


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def export_csv(result: SweepResult, path) -> None:
    """Long-form spectrum rows (delta,index,eigenvalue) or commutator rows
    (delta,frobenius_norm); byte-deterministic."""
    lines = []
    if result.eigenvalues is not None:
        lines.append("delta,index,eigenvalue")
        for d, row in zip(result.deltas, result.eigenvalues):
            for idx, val in enumerate(row):
                lines.append(f"{_fmt(d)},{idx},{_fmt(val)}")
    elif result.commutator_norms is not None:
        lines.append("delta,frobenius_norm")
        for d, norm in zip(result.deltas, result.commutator_norms):
            lines.append(f"{_fmt(d)},{_fmt(norm)}")
    else:
        raise DimensionMismatch("sweep result holds neither spectra nor commutator norms")
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def export_json(result: SweepResult, path) -> None:
    doc = {"tag": result.tag, "metadata": result.metadata, "deltas": list(map(float, result.deltas))}
    if result.eigenvalues is not None:
        doc["eigenvalues"] = [[float(v) for v in row] for row in result.eigenvalues]
    if result.commutator_norms is not None:
        doc["frobenius_norms"] = [float(v) for v in result.commutator_norms]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")


def export_trajectory_csv(traj: Trajectory, path) -> None:
    """One row per (time, simplex, component) with the raw complex components,
    the angle parameterization and the energy at that time."""
    lines = ["t,simplex,component,re,im,psi,theta,phi,energy"]
    for k, t in enumerate(traj.times):
        angles = to_angles(Cochain(1, traj.states[k]))
        for l in range(traj.states.shape[1]):
            for comp in range(2):
                z = traj.states[k, l, comp]
                lines.append(
                    ",".join(
                        (
                            _fmt(t),
                            str(l),
                            str(comp),
                            _fmt(z.real),
                            _fmt(z.imag),
                            _fmt(angles.psi[l]),
                            _fmt(angles.theta[l]),
                            _fmt(angles.phi[l]),
                            _fmt(traj.energies[k]),
                        )
                    )
                )
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("\n".join(lines) + "\n")


def export_trajectory_json(traj: Trajectory, path) -> None:
    doc = {
        "times": [float(t) for t in traj.times],
        "energies": [float(e) for e in traj.energies],
        "states": [
            [[float(z.real), float(z.imag)] for z in row.reshape(-1)] for row in traj.states
        ],
    }
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, indent=2)
        fh.write("\n")

"""Strict readers for the three CSV formats exported by the dirlap CLI."""

from __future__ import annotations

import csv

SPECTRUM_HEADER = ["delta", "index", "eigenvalue"]
COMMUTATOR_HEADER = ["delta", "frobenius_norm"]
TRAJECTORY_HEADER = ["t", "simplex", "component", "re", "im", "psi", "theta", "phi", "energy"]


class SchemaError(Exception):
    """The file does not match the expected CSV schema."""


def _read_rows(path, header: list[str]):
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        try:
            first = next(reader)
        except StopIteration:
            raise SchemaError(f"{path}: empty file") from None
        if first != header:
            raise SchemaError(f"{path}: expected header {','.join(header)}, got {','.join(first)}")
        rows = []
        for line_no, row in enumerate(reader, start=2):
            if not row:
                continue
            if len(row) != len(header):
                raise SchemaError(f"{path}:{line_no}: expected {len(header)} fields, got {len(row)}")
            try:
                rows.append([float(v) for v in row])
            except ValueError as exc:
                raise SchemaError(f"{path}:{line_no}: {exc}") from None
    if not rows:
        raise SchemaError(f"{path}: no data rows")
    return rows


def read_spectrum(path) -> dict[int, tuple[list[float], list[float]]]:
    """Eigenvalue curves keyed by eigenvalue index: index -> (deltas, values)."""
    curves: dict[int, tuple[list[float], list[float]]] = {}
    for delta, index, value in _read_rows(path, SPECTRUM_HEADER):
        branch = curves.setdefault(int(index), ([], []))
        branch[0].append(delta)
        branch[1].append(value)
    return curves


def read_commutator(path) -> tuple[list[float], list[float]]:
    deltas, norms = [], []
    for delta, norm in _read_rows(path, COMMUTATOR_HEADER):
        deltas.append(delta)
        norms.append(norm)
    return deltas, norms


def read_trajectory(path) -> dict[int, dict[str, list[float]]]:
    """Per-simplex time series: simplex -> {t, psi, theta, phi, energy}."""
    series: dict[int, dict[str, list[float]]] = {}
    for t, simplex, component, re, im, psi, theta, phi, energy in _read_rows(
        path, TRAJECTORY_HEADER
    ):
        if int(component) != 0:
            continue  # angle rows repeat per component; keep one copy
        entry = series.setdefault(
            int(simplex), {"t": [], "psi": [], "theta": [], "phi": [], "energy": []}
        )
        entry["t"].append(t)
        entry["psi"].append(psi)
        entry["theta"].append(theta)
        entry["phi"].append(phi)
        entry["energy"].append(energy)
    return series

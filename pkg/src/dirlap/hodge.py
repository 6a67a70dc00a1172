"""Hodge Laplacians of the oriented (undirected) complex, kernel-based Betti
numbers, and the positive-splitting matrix feeding the 1-up connection
operator.

All operators are assembled from the signed incidence matrices, so a single
sign convention drives every entry; the entrywise case tables are exercised as
property tests instead of being a second implementation.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .complexes import DirectedSimplicialComplex, edge_vertex_sign, triangle_edge_sign
from .errors import DimensionMismatch
from .linalg import hermitian_eigenvalues


def incidence_matrix(c: DirectedSimplicialComplex, k: int) -> np.ndarray:
    """Signed boundary matrix B_k: vertices x edges for k=1, edges x triangles
    for k=2 (orientations only; directions play no role here)."""
    c.require_valid()
    if k == 1:
        b = np.zeros((c.vertex_count, c.n_edges))
        for j, e in enumerate(c.edges):
            for v in e.ref:
                b[v, j] = edge_vertex_sign(e.ref, v)
        return b
    if k == 2:
        b = np.zeros((c.n_edges, c.n_triangles))
        for j, t in enumerate(c.triangles):
            for e_id in c.triangle_edge_ids(t):
                b[e_id, j] = triangle_edge_sign(t.ref, c.edges[e_id].ref)
        return b
    raise DimensionMismatch(f"incidence matrices exist for k in {{1, 2}}, got {k}")


@dataclass(frozen=True)
class HodgeOperators:
    order: int
    up: np.ndarray
    down: np.ndarray

    @property
    def full(self) -> np.ndarray:
        return self.up + self.down


def hodge_laplacian(c: DirectedSimplicialComplex, k: int) -> HodgeOperators:
    """L_k split into its up-part B_{k+1} B_{k+1}^T and down-part B_k^T B_k
    (the order-0 down-part is zero by convention)."""
    c.require_valid()
    if k == 0:
        b1 = incidence_matrix(c, 1)
        return HodgeOperators(0, b1 @ b1.T, np.zeros((c.vertex_count, c.vertex_count)))
    if k == 1:
        b1 = incidence_matrix(c, 1)
        b2 = incidence_matrix(c, 2)
        return HodgeOperators(1, b2 @ b2.T, b1.T @ b1)
    if k == 2:
        b2 = incidence_matrix(c, 2)
        n2 = c.n_triangles
        return HodgeOperators(2, np.zeros((n2, n2)), b2.T @ b2)
    raise DimensionMismatch(f"Hodge Laplacians exist for k in {{0, 1, 2}}, got {k}")


def betti_number(c: DirectedSimplicialComplex, n: int, tol: float = 1e-8) -> int:
    """Dimension of the kernel of L_n (eigenvalues below `tol`)."""
    ops = hodge_laplacian(c, n)
    full = ops.full
    if full.shape[0] == 0:
        return 0
    w = hermitian_eigenvalues(full.astype(complex))
    return int(np.sum(w < tol))


class Bochner(NamedTuple):
    """Positive splitting of the 1-up Hodge Laplacian: matrix = degree - adjacency,
    with degree twice the number of triangles incident to each edge."""

    matrix: np.ndarray
    degree: np.ndarray
    adjacency: np.ndarray


def bochner_1up(c: DirectedSimplicialComplex) -> Bochner:
    """Split L1-up into D - A with a row-absolute-sum diagonal, keeping the
    result positive semi-definite.  A is -1 on same-oriented upper-adjacent
    pairs, +1 on opposite ones, 0 elsewhere."""
    l1_up = hodge_laplacian(c, 1).up
    off = l1_up - np.diag(np.diag(l1_up))
    adjacency = -off
    degree = np.diag(np.sum(np.abs(off), axis=1))
    return Bochner(degree - adjacency, degree, adjacency)

"""Higher-order connection operators on directed 2-complexes.

Every pair of adjacent simplices gets a 2x2 unitary rotation block: a Pauli
matrix times a complex phase chosen from the direction configuration of the
pair (and, for edge pairs sharing a triangle, the triangle's circulation).
The operators act on 2-component complex cochains, are Hermitian by
construction and positive semi-definite through the same pairwise expansion
that defines their quadratic form.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import (
    AdjacencyRecord,
    DirectedSimplicialComplex,
    delta_sign,
    lower_adjacent,
    same_cycle,
    upper_adjacent_edges,
)
from .errors import (
    DimensionMismatch,
    ManifoldNotOriented,
    NotLowerAdjacent,
    NotPseudoManifold,
    NotUpperAdjacent,
)
from .linalg import pauli

TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class Configuration:
    """One row of a rotation table: a letter (a)-(h), the Pauli kind and the
    sign of the phase (-1, 0 or +1 times the rotation angle)."""

    letter: str
    pauli: str
    phase_sign: int

    def block(self, delta: float) -> "RotationBlock":
        return RotationBlock(self.pauli, self.phase_sign * delta, self.letter)


@dataclass(frozen=True)
class RotationBlock:
    """Concrete 2x2 unitary e^{i phase} * pauli attached to an adjacent pair."""

    pauli: str
    phase: float
    config: str

    @property
    def value(self) -> np.ndarray:
        return np.exp(1j * self.phase) * pauli(self.pauli)


@dataclass(frozen=True)
class BlockRecord:
    """Rotation block plus the +-1 adjacency sign for one unordered pair."""

    pair: tuple[int, int]
    shared: int
    adjacency_sign: int
    block: RotationBlock


@dataclass(frozen=True)
class ConnectionOperator:
    tag: str
    delta: float
    matrix: np.ndarray
    blocks: tuple[BlockRecord, ...]

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


# -- configuration tables ------------------------------------------------------

# Keyed on (first edge flows private->shared, second edge flows shared->private,
# triangle circulation matches the i->j->k cycle).
_TABLE_1UP = {
    (True, True, True): Configuration("a", "sigma0", -1),
    (False, False, False): Configuration("b", "sigma0", +1),
    (False, False, True): Configuration("c", "sigmaX", -1),
    (True, True, False): Configuration("d", "sigmaX", +1),
    (False, True, True): Configuration("e", "sigmaY", -1),
    (False, True, False): Configuration("f", "sigmaY", +1),
    (True, False, True): Configuration("g", "sigmaZ", -1),
    (True, False, False): Configuration("h", "sigmaZ", +1),
}

# Keyed on (first edge flows into the shared vertex, second edge flows out of it).
_TABLE_1DOWN = {
    (True, True): Configuration("a", "sigma0", +1),
    (False, False): Configuration("b", "sigma0", -1),
    (False, True): Configuration("c", "sigmaY", 0),
    (True, False): Configuration("d", "sigmaZ", 0),
}

# Keyed on (first triangle's circulation vs the manifold orientation, second
# triangle's circulation vs the manifold orientation, shared edge flows along
# its reference).
_TABLE_2DOWN = {
    (1, -1, True): Configuration("a", "sigma0", -1),
    (-1, 1, False): Configuration("b", "sigma0", +1),
    (-1, 1, True): Configuration("c", "sigmaX", -1),
    (1, -1, False): Configuration("d", "sigmaX", +1),
    (1, 1, True): Configuration("e", "sigmaY", -1),
    (1, 1, False): Configuration("f", "sigmaY", +1),
    (-1, -1, True): Configuration("g", "sigmaZ", -1),
    (-1, -1, False): Configuration("h", "sigmaZ", +1),
}


def classify_1up(
    c: DirectedSimplicialComplex, edge_pair: tuple[int, int], shared_triangle: int
) -> Configuration:
    """Configuration of two edges upper-adjacent through a triangle.

    With j the shared vertex, i the private vertex of the first edge and k of
    the second, the row is selected by whether the first edge flows i->j, the
    second flows j->k, and the triangle circulates along the cycle (i, j, k).
    """
    e1 = c.edges[edge_pair[0]]
    e2 = c.edges[edge_pair[1]]
    shared = e1.vertices & e2.vertices
    if len(shared) != 1:
        raise NotUpperAdjacent(f"edges {e1.ref} and {e2.ref} do not share one vertex")
    j = next(iter(shared))
    i = e1.other_vertex(j)
    k = e2.other_vertex(j)
    tri = c.triangles[shared_triangle]
    if tri.vertices != {i, j, k}:
        raise NotUpperAdjacent(
            f"triangle {tri.ref} is not the co-face of edges {e1.ref}, {e2.ref}"
        )
    first_forward = e1.flow == (i, j)
    second_forward = e2.flow == (j, k)
    triangle_forward = same_cycle(tri.flow_cycle, (i, j, k))
    return _TABLE_1UP[(first_forward, second_forward, triangle_forward)]


def classify_1down(
    c: DirectedSimplicialComplex, edge_pair: tuple[int, int], shared_vertex: int
) -> Configuration:
    """Configuration of two edges meeting at a vertex: through-flow carries a
    phase, a common source gets sigmaY, a common sink sigmaZ."""
    e1 = c.edges[edge_pair[0]]
    e2 = c.edges[edge_pair[1]]
    if shared_vertex not in e1.vertices or shared_vertex not in e2.vertices:
        raise NotLowerAdjacent(
            f"edges {e1.ref} and {e2.ref} do not both contain vertex {shared_vertex}"
        )
    j = shared_vertex
    i = e1.other_vertex(j)
    k = e2.other_vertex(j)
    first_inward = e1.flow == (i, j)
    second_outward = e2.flow == (j, k)
    return _TABLE_1DOWN[(first_inward, second_outward)]


def classify_2down(
    c: DirectedSimplicialComplex, triangle_pair: tuple[int, int], shared_edge: int
) -> Configuration:
    """Configuration of two triangles glued along an edge on an oriented
    manifold.

    Each triangle contributes the sign of its circulation (its direction
    cycle) against the manifold orientation; the third bit is the shared
    edge's flow relative to its reference (j, k).  Opposite circulations give
    phase-only rotations (sigma0 / sigmaX rows), matching circulations give
    the sigmaY / sigmaZ rows.  The table is evaluated once per unordered pair;
    the caller installs the conjugate transpose for the opposite order, which
    keeps the operator Hermitian independently of pair labelling.
    """
    t1 = c.triangles[triangle_pair[0]]
    t2 = c.triangles[triangle_pair[1]]
    edge = c.edges[shared_edge]
    j, k = edge.ref
    if not ({j, k} <= t1.vertices and {j, k} <= t2.vertices):
        raise NotLowerAdjacent(
            f"edge {edge.ref} is not shared by triangles {t1.ref} and {t2.ref}"
        )
    d1 = delta_sign(t1, t1.flow_cycle)
    d2 = delta_sign(t2, t2.flow_cycle)
    edge_forward = edge.aligned
    return _TABLE_2DOWN[(d1, d2, edge_forward)]


# -- operator assembly -----------------------------------------------------------


def _assemble(
    tag: str,
    delta: float,
    n_simplices: int,
    records: list[AdjacencyRecord],
    classify,
) -> ConnectionOperator:
    delta = float(delta) % TWO_PI
    matrix = np.zeros((2 * n_simplices, 2 * n_simplices), dtype=complex)
    degree = np.zeros(n_simplices)
    blocks = []
    for rec in records:
        l, m = rec.pair
        degree[l] += 1.0
        degree[m] += 1.0
        block = classify(rec).block(delta)
        # adjacency entry is -1 on same-oriented pairs, +1 on opposite ones
        a_lm = -1.0 if rec.sign > 0 else 1.0
        value = -a_lm * block.value
        matrix[2 * l : 2 * l + 2, 2 * m : 2 * m + 2] = value
        matrix[2 * m : 2 * m + 2, 2 * l : 2 * l + 2] = value.conj().T
        blocks.append(BlockRecord(rec.pair, rec.shared, rec.sign, block))
    for l in range(n_simplices):
        matrix[2 * l, 2 * l] = degree[l]
        matrix[2 * l + 1, 2 * l + 1] = degree[l]
    return ConnectionOperator(tag, delta, matrix, tuple(blocks))


def connection_1up(c: DirectedSimplicialComplex, delta: float) -> ConnectionOperator:
    """Edge-to-edge operator through triangles; diagonal blocks are twice the
    number of incident triangles (the positive splitting of the 1-up Hodge
    Laplacian)."""
    c.require_valid()
    records = upper_adjacent_edges(c)
    # each incident triangle contributes two adjacent partners, so counting
    # records per row reproduces the 2 * deg_U diagonal of the splitting
    return _assemble(
        "1up",
        delta,
        c.n_edges,
        records,
        lambda rec: classify_1up(c, rec.pair, rec.shared),
    )


def connection_1down(c: DirectedSimplicialComplex, delta: float) -> ConnectionOperator:
    """Edge-to-edge operator through shared vertices."""
    c.require_valid()
    records = lower_adjacent(c, 1)
    return _assemble(
        "1down",
        delta,
        c.n_edges,
        records,
        lambda rec: classify_1down(c, rec.pair, rec.shared),
    )


def connection_2down(c: DirectedSimplicialComplex, delta: float) -> ConnectionOperator:
    """Triangle-to-triangle operator through shared edges; requires a manifold
    orientation (run orient_manifold first) and at most two triangles per edge."""
    c.require_valid()
    if c.n_triangles and not c.is_oriented_manifold():
        raise ManifoldNotOriented("run orient_manifold before building the 2-down operator")
    edge_use = np.zeros(c.n_edges, dtype=int)
    for t in c.triangles:
        for e_id in c.triangle_edge_ids(t):
            edge_use[e_id] += 1
    if np.any(edge_use > 2):
        raise NotPseudoManifold("an edge belongs to more than two triangles")
    records = lower_adjacent(c, 2)
    return _assemble(
        "2down",
        delta,
        c.n_triangles,
        records,
        lambda rec: classify_2down(c, rec.pair, rec.shared),
    )


# -- quadratic forms ------------------------------------------------------------


def _as_vector(nu, dim: int) -> np.ndarray:
    values = getattr(nu, "values", nu)
    vec = np.asarray(values, dtype=complex).reshape(-1)
    if vec.shape[0] != dim:
        raise DimensionMismatch(f"cochain has {vec.shape[0]} components, operator needs {dim}")
    return vec


def quadratic_form(op: ConnectionOperator, nu) -> float:
    """nu^dagger L nu as a real number (the imaginary part vanishes for
    Hermitian L and is discarded)."""
    vec = _as_vector(nu, op.dim)
    return float(np.real(vec.conj() @ op.matrix @ vec))


def quadratic_form_pairwise(op: ConnectionOperator, nu) -> float:
    """Independent evaluation of the quadratic form as the pairwise sum
    of |nu_l -+ T nu_m|^2 over adjacent pairs (minus on opposite-oriented
    pairs, plus on same-oriented ones)."""
    vec = _as_vector(nu, op.dim)
    total = 0.0
    for rec in op.blocks:
        l, m = rec.pair
        nu_l = vec[2 * l : 2 * l + 2]
        nu_m = vec[2 * m : 2 * m + 2]
        rotated = rec.block.value @ nu_m
        if rec.adjacency_sign > 0:
            total += float(np.sum(np.abs(nu_l + rotated) ** 2))
        else:
            total += float(np.sum(np.abs(nu_l - rotated) ** 2))
    return total

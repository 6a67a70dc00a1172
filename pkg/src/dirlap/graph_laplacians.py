"""Vertex-level operators on the complex's skeleton: combinatorial Laplacian,
magnetic Laplacian and the generic graph connection Laplacian."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .complexes import DirectedSimplicialComplex
from .errors import DimensionMismatch, MissingRotation

TWO_PI = 2.0 * np.pi


def combinatorial_laplacian(c: DirectedSimplicialComplex) -> np.ndarray:
    """Degree-minus-adjacency Laplacian of the undirected skeleton."""
    c.require_valid()
    n = c.vertex_count
    lap = np.zeros((n, n))
    for e in c.edges:
        a, b = e.ref
        lap[a, a] += 1.0
        lap[b, b] += 1.0
        lap[a, b] -= 1.0
        lap[b, a] -= 1.0
    return lap


def magnetic_laplacian(c: DirectedSimplicialComplex, delta: float) -> np.ndarray:
    """Hermitian skeleton Laplacian whose off-diagonal entries carry the phase
    e^{-i delta} along an edge's flow and the conjugate against it."""
    c.require_valid()
    delta = float(delta) % TWO_PI
    n = c.vertex_count
    lap = np.zeros((n, n), dtype=complex)
    phase = np.exp(-1j * delta)
    for e in c.edges:
        u, v = e.flow
        lap[u, u] += 1.0
        lap[v, v] += 1.0
        lap[u, v] = -phase
        lap[v, u] = -np.conj(phase)
    return lap


@dataclass
class RotationAssignment:
    """Orthogonal d x d rotation per skeleton edge; the reverse direction is
    the transpose, stored implicitly."""

    dim: int
    _store: dict[tuple[int, int], np.ndarray] = field(default_factory=dict)

    def set(self, i: int, j: int, matrix: np.ndarray) -> None:
        m = np.asarray(matrix, dtype=float)
        if m.shape != (self.dim, self.dim):
            raise DimensionMismatch(f"rotation for ({i}, {j}) has shape {m.shape}")
        if np.linalg.norm(m @ m.T - np.eye(self.dim)) > 1e-10:
            raise MissingRotation(f"matrix for ({i}, {j}) is not orthogonal to 1e-10")
        self._store[(i, j)] = m

    def get(self, i: int, j: int) -> np.ndarray:
        if (i, j) in self._store:
            return self._store[(i, j)]
        if (j, i) in self._store:
            return self._store[(j, i)].T
        raise MissingRotation(f"no rotation assigned to vertex pair ({i}, {j})")


def identity_rotations(c: DirectedSimplicialComplex, dim: int) -> RotationAssignment:
    """Trivial connection: the identity on every skeleton edge."""
    r = RotationAssignment(dim)
    for e in c.edges:
        r.set(e.ref[0], e.ref[1], np.eye(dim))
    return r


def graph_connection_laplacian(
    c: DirectedSimplicialComplex, rotations: RotationAssignment
) -> np.ndarray:
    """Block Laplacian with -O_ij off-diagonal blocks and degree * identity on
    the diagonal; symmetric because O_ji is the transpose of O_ij."""
    c.require_valid()
    d = rotations.dim
    n = c.vertex_count
    lap = np.zeros((n * d, n * d))
    eye = np.eye(d)
    for e in c.edges:
        i, j = e.ref
        o_ij = rotations.get(i, j)
        lap[i * d : (i + 1) * d, i * d : (i + 1) * d] += eye
        lap[j * d : (j + 1) * d, j * d : (j + 1) * d] += eye
        lap[i * d : (i + 1) * d, j * d : (j + 1) * d] = -o_ij
        lap[j * d : (j + 1) * d, i * d : (i + 1) * d] = -o_ij.T
    return lap


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    witness_cycle: tuple[int, ...] | None = None


def check_consistency(
    c: DirectedSimplicialComplex, rotations: RotationAssignment, tol: float = 1e-8
) -> ConsistencyReport:
    """Check that the rotation product around every independent cycle is the
    identity.  Uses the fundamental cycles of a breadth-first spanning forest;
    the first violating cycle is returned as a closed vertex list."""
    c.require_valid()
    adjacency: dict[int, list[int]] = {v: [] for v in range(c.vertex_count)}
    edge_set = set()
    for e in c.edges:
        i, j = e.ref
        adjacency[i].append(j)
        adjacency[j].append(i)
        edge_set.add(tuple(sorted((i, j))))

    parent: dict[int, int | None] = {}
    transport: dict[int, np.ndarray] = {}
    order: list[int] = []
    for root in range(c.vertex_count):
        if root in parent:
            continue
        parent[root] = None
        transport[root] = np.eye(rotations.dim)
        queue = [root]
        while queue:
            u = queue.pop(0)
            order.append(u)
            for w in sorted(adjacency[u]):
                if w not in parent:
                    parent[w] = u
                    transport[w] = transport[u] @ rotations.get(u, w)
                    queue.append(w)

    tree_edges = {
        tuple(sorted((u, p))) for u, p in parent.items() if p is not None
    }

    def path_to_root(v: int) -> list[int]:
        path = [v]
        while parent[path[-1]] is not None:
            path.append(parent[path[-1]])  # type: ignore[arg-type]
        return list(reversed(path))

    eye = np.eye(rotations.dim)
    for key in sorted(edge_set - tree_edges):
        u, v = key
        holonomy = transport[u] @ rotations.get(u, v) @ transport[v].T
        if np.linalg.norm(holonomy - eye) > tol:
            pu, pv = path_to_root(u), path_to_root(v)
            shared = 0
            while shared < min(len(pu), len(pv)) and pu[shared] == pv[shared]:
                shared += 1
            cycle = pu[shared - 1 :] + list(reversed(pv[shared - 1 :]))
            return ConsistencyReport(False, tuple(cycle))
    return ConsistencyReport(True, None)

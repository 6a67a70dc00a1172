"""Directed, oriented 2-dimensional simplicial complexes.

Every edge and triangle stores a *reference* ordering (its orientation, used
for incidence signs) and a *direction* flag (the actual flow sense, aligned or
reversed relative to the reference).  The two notions are independent: the
orientation fixes signs in boundary operators, the direction drives the
rotation tables of the connection operators.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Iterable

from .errors import (
    InvalidComplex,
    ManifoldNotOriented,
    NotAFace,
    NotOrientable,
    NotPseudoManifold,
)

ALIGNED = "aligned"
REVERSED = "reversed"


@dataclass(frozen=True)
class DirectedEdge:
    """An edge with reference orientation `ref = (tail, head)` and a direction
    flag telling whether the flow follows the reference or runs against it."""

    ref: tuple[int, int]
    aligned: bool = True

    @property
    def flow(self) -> tuple[int, int]:
        """Actual flow endpoints (from, to)."""
        return self.ref if self.aligned else (self.ref[1], self.ref[0])

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.ref)

    def other_vertex(self, v: int) -> int:
        if v == self.ref[0]:
            return self.ref[1]
        if v == self.ref[1]:
            return self.ref[0]
        raise NotAFace(f"vertex {v} is not an endpoint of edge {self.ref}")


@dataclass(frozen=True)
class DirectedTriangle:
    """A triangle whose reference triple fixes one of the two cyclic classes on
    its vertex set; the direction flag picks the actual circulation.
    `manifold_sign` is set by `orient_manifold` and is +1 when the reference
    class coincides with the globally consistent (positive) class."""

    ref: tuple[int, int, int]
    aligned: bool = True
    manifold_sign: int | None = None

    @property
    def flow_cycle(self) -> tuple[int, int, int]:
        """Vertex cycle traversed by the triangle's circulation."""
        return self.ref if self.aligned else tuple(reversed(self.ref))

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(self.ref)

    def edge_keys(self) -> list[tuple[int, int]]:
        a, b, c = sorted(self.ref)
        return [(a, b), (a, c), (b, c)]


@dataclass(frozen=True)
class AdjacencyRecord:
    """Unordered simplex pair `pair = (l, m)` with `l < m`, the id of the
    shared face or co-face, and the product of the two incidence signs.
    sign = +1 encodes "same relative orientation" (the ~ relation)."""

    pair: tuple[int, int]
    shared: int
    sign: int


def cyclic_class(triple: Iterable[int]) -> tuple[int, int, int]:
    """Canonical representative of the cyclic class of an ordered triple."""
    t = tuple(triple)
    k = t.index(min(t))
    return (t[k], t[(k + 1) % 3], t[(k + 2) % 3])


def same_cycle(t1: Iterable[int], t2: Iterable[int]) -> bool:
    return cyclic_class(t1) == cyclic_class(t2)


def edge_vertex_sign(edge_ref: tuple[int, int], vertex: int) -> int:
    """Boundary sign of an oriented edge at one endpoint: head +1, tail -1."""
    if vertex == edge_ref[1]:
        return 1
    if vertex == edge_ref[0]:
        return -1
    raise NotAFace(f"vertex {vertex} is not a face of edge {edge_ref}")


def triangle_edge_sign(tri_ref: tuple[int, int, int], edge_ref: tuple[int, int]) -> int:
    """Boundary sign of an oriented triangle on one of its edges.

    The ordered triple (a, b, c) has boundary (b,c) - (a,c) + (a,b); the sign
    flips when the stored edge reference runs against the induced ordering.
    """
    a, b, c = tri_ref
    terms = (((b, c), 1), ((a, c), -1), ((a, b), 1))
    for pair, sign in terms:
        if edge_ref == pair:
            return sign
        if edge_ref == (pair[1], pair[0]):
            return -sign
    raise NotAFace(f"edge {edge_ref} is not a face of triangle {tri_ref}")


def incidence_sign(simplex, face) -> int:
    """Signed incidence coefficient of `face` inside `simplex`."""
    if isinstance(simplex, DirectedTriangle) and isinstance(face, DirectedEdge):
        return triangle_edge_sign(simplex.ref, face.ref)
    if isinstance(simplex, DirectedEdge) and isinstance(face, int):
        return edge_vertex_sign(simplex.ref, face)
    raise NotAFace(
        f"unsupported simplex/face combination: {type(simplex).__name__}/{type(face).__name__}"
    )


class DirectedSimplicialComplex:
    """Immutable container for vertices, directed edges and directed triangles,
    with lookup tables from sorted vertex tuples to simplex ids."""

    def __init__(
        self,
        vertex_count: int,
        edges: Iterable[DirectedEdge],
        triangles: Iterable[DirectedTriangle] = (),
    ):
        self.vertex_count = int(vertex_count)
        self.edges = tuple(edges)
        self.triangles = tuple(triangles)
        self.edge_index: dict[tuple[int, int], int] = {}
        for i, e in enumerate(self.edges):
            self.edge_index.setdefault(tuple(sorted(e.ref)), i)
        self.triangle_index: dict[tuple[int, int, int], int] = {}
        for i, t in enumerate(self.triangles):
            self.triangle_index.setdefault(tuple(sorted(t.ref)), i)
        self._diagnostics: list[str] | None = None

    # -- invariant checking ------------------------------------------------

    def validate(self) -> list[str]:
        """Return all invariant violations (empty list means the complex is ok)."""
        if self._diagnostics is not None:
            return self._diagnostics
        problems: list[str] = []
        seen_edges: set[tuple[int, int]] = set()
        for i, e in enumerate(self.edges):
            a, b = e.ref
            if a == b:
                problems.append(f"degenerate edge {i}: endpoints coincide ({a})")
                continue
            if not (0 <= a < self.vertex_count and 0 <= b < self.vertex_count):
                problems.append(f"vertex out of range on edge {i}: {e.ref}")
            key = tuple(sorted(e.ref))
            if key in seen_edges:
                problems.append(f"duplicate edge {i}: {key}")
            seen_edges.add(key)
        seen_tris: set[tuple[int, int, int]] = set()
        for i, t in enumerate(self.triangles):
            if len(set(t.ref)) != 3:
                problems.append(f"degenerate triangle {i}: {t.ref}")
                continue
            if not all(0 <= v < self.vertex_count for v in t.ref):
                problems.append(f"vertex out of range on triangle {i}: {t.ref}")
            key = tuple(sorted(t.ref))
            if key in seen_tris:
                problems.append(f"duplicate triangle {i}: {key}")
            seen_tris.add(key)
            for ek in t.edge_keys():
                if ek not in self.edge_index:
                    problems.append(f"missing face: triangle {i} {t.ref} needs edge {ek}")
        self._diagnostics = problems
        return problems

    def require_valid(self) -> None:
        problems = self.validate()
        if problems:
            raise InvalidComplex("; ".join(problems))

    # -- basic queries -------------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return self.vertex_count

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def n_triangles(self) -> int:
        return len(self.triangles)

    def triangle_edge_ids(self, t: DirectedTriangle) -> list[int]:
        return [self.edge_index[k] for k in t.edge_keys()]

    def is_oriented_manifold(self) -> bool:
        return all(t.manifold_sign is not None for t in self.triangles)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirectedSimplicialComplex)
            and self.vertex_count == other.vertex_count
            and self.edges == other.edges
            and self.triangles == other.triangles
        )

    def __repr__(self) -> str:
        return (
            f"DirectedSimplicialComplex(V={self.vertex_count}, "
            f"E={self.n_edges}, T={self.n_triangles})"
        )


# -- adjacency ---------------------------------------------------------------


def upper_adjacent_edges(c: DirectedSimplicialComplex) -> list[AdjacencyRecord]:
    """One record per unordered edge pair sharing a triangle (three per triangle)."""
    c.require_valid()
    records = []
    for t_id, t in enumerate(c.triangles):
        edge_ids = c.triangle_edge_ids(t)
        signs = {e_id: triangle_edge_sign(t.ref, c.edges[e_id].ref) for e_id in edge_ids}
        for a in range(3):
            for b in range(a + 1, 3):
                l, m = sorted((edge_ids[a], edge_ids[b]))
                records.append(AdjacencyRecord((l, m), t_id, signs[l] * signs[m]))
    return records


def lower_adjacent(c: DirectedSimplicialComplex, order: int) -> list[AdjacencyRecord]:
    """Order 1: edge pairs sharing a vertex; order 2: triangle pairs sharing an edge."""
    c.require_valid()
    records = []
    if order == 1:
        incident: dict[int, list[int]] = {}
        for e_id, e in enumerate(c.edges):
            for v in e.ref:
                incident.setdefault(v, []).append(e_id)
        for v in sorted(incident):
            ids = incident[v]
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    l, m = sorted((ids[a], ids[b]))
                    sign = edge_vertex_sign(c.edges[l].ref, v) * edge_vertex_sign(
                        c.edges[m].ref, v
                    )
                    records.append(AdjacencyRecord((l, m), v, sign))
    elif order == 2:
        by_edge: dict[int, list[int]] = {}
        for t_id, t in enumerate(c.triangles):
            for e_id in c.triangle_edge_ids(t):
                by_edge.setdefault(e_id, []).append(t_id)
        for e_id in sorted(by_edge):
            ids = by_edge[e_id]
            e_ref = c.edges[e_id].ref
            for a in range(len(ids)):
                for b in range(a + 1, len(ids)):
                    l, m = sorted((ids[a], ids[b]))
                    sign = triangle_edge_sign(c.triangles[l].ref, e_ref) * triangle_edge_sign(
                        c.triangles[m].ref, e_ref
                    )
                    records.append(AdjacencyRecord((l, m), e_id, sign))
    else:
        raise NotAFace(f"lower adjacency defined for orders 1 and 2, got {order}")
    return records


# -- manifold orientation ------------------------------------------------------


def _cycle_traverses(cycle: tuple[int, int, int], x: int, y: int) -> bool:
    """True when the vertex cycle visits x immediately before y."""
    a, b, c = cycle
    return (x, y) in ((a, b), (b, c), (c, a))


def orient_manifold(c: DirectedSimplicialComplex) -> DirectedSimplicialComplex:
    """Assign a globally consistent positive cyclic class to every triangle.

    Works on pseudo-manifolds (every edge in at most two triangles).  Adjacent
    triangles must traverse their shared edge in opposite orders; a breadth
    first walk of the dual graph propagates this constraint from the lowest-id
    triangle of each component, whose reference class seeds the orientation.
    """
    c.require_valid()
    by_edge: dict[int, list[int]] = {}
    for t_id, t in enumerate(c.triangles):
        for e_id in c.triangle_edge_ids(t):
            by_edge.setdefault(e_id, []).append(t_id)
    for e_id, tri_ids in by_edge.items():
        if len(tri_ids) > 2:
            raise NotPseudoManifold(
                f"edge {c.edges[e_id].ref} belongs to {len(tri_ids)} triangles"
            )

    neighbors: dict[int, list[tuple[int, int]]] = {t: [] for t in range(c.n_triangles)}
    for e_id, tri_ids in by_edge.items():
        if len(tri_ids) == 2:
            a, b = tri_ids
            neighbors[a].append((b, e_id))
            neighbors[b].append((a, e_id))

    signs: list[int | None] = [None] * c.n_triangles
    for seed in range(c.n_triangles):
        if signs[seed] is not None:
            continue
        signs[seed] = 1
        queue = [seed]
        while queue:
            t_id = queue.pop(0)
            t = c.triangles[t_id]
            pos = t.ref if signs[t_id] == 1 else tuple(reversed(t.ref))
            for other_id, e_id in sorted(neighbors[t_id]):
                x, y = c.edges[e_id].ref
                if not _cycle_traverses(pos, x, y):
                    x, y = y, x
                # the neighbour's positive class must traverse (y, x)
                other = c.triangles[other_id]
                needed = 1 if _cycle_traverses(other.ref, y, x) else -1
                if signs[other_id] is None:
                    signs[other_id] = needed
                    queue.append(other_id)
                elif signs[other_id] != needed:
                    raise NotOrientable(
                        f"triangles {t.ref} and {other.ref} cannot be oriented consistently"
                    )
    new_triangles = [
        replace(t, manifold_sign=signs[i]) for i, t in enumerate(c.triangles)
    ]
    return DirectedSimplicialComplex(c.vertex_count, c.edges, new_triangles)


def delta_sign(t: DirectedTriangle, ordered_triple: tuple[int, int, int]) -> int:
    """+1 when the cyclic class of the triple equals the triangle's positive
    (manifold-consistent) class, -1 for the opposite class."""
    if t.manifold_sign is None:
        raise ManifoldNotOriented(f"triangle {t.ref} has no manifold orientation assigned")
    if set(ordered_triple) != set(t.ref):
        raise NotAFace(f"{ordered_triple} is not a permutation of triangle {t.ref}")
    positive = t.ref if t.manifold_sign == 1 else tuple(reversed(t.ref))
    return 1 if same_cycle(ordered_triple, positive) else -1

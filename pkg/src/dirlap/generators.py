"""Canonical complexes (the four directed triangles and the two triangulated
torus families) plus JSON file I/O and small randomized test instances."""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .complexes import DirectedEdge, DirectedSimplicialComplex, DirectedTriangle
from .errors import ParseError, TooSmall, UnknownCase

TRIANGLE_CASES = (1, 2, 3, 4)


@dataclass(frozen=True)
class TorusSpec:
    width: int
    height: int
    type: int


def directed_triangle(case_id: int) -> DirectedSimplicialComplex:
    """One of the four direction patterns on a single filled triangle.

    Vertices are 0, 1, 2.  Cases 1 and 2 route the third edge 2 -> 0 (a
    directed 3-cycle); cases 3 and 4 route it 0 -> 2.  Odd cases circulate the
    triangle along 0 -> 1 -> 2, even cases the opposite way.  All reference
    orientations are label-induced.
    """
    if case_id not in TRIANGLE_CASES:
        raise UnknownCase(f"case {case_id!r} is not one of {TRIANGLE_CASES}")
    cyclic_edges = case_id in (1, 2)
    edges = [
        DirectedEdge((0, 1), True),
        DirectedEdge((0, 2), not cyclic_edges),
        DirectedEdge((1, 2), True),
    ]
    triangle = DirectedTriangle((0, 1, 2), aligned=case_id in (1, 3))
    return DirectedSimplicialComplex(3, edges, [triangle])


def triangulated_torus(spec: TorusSpec) -> DirectedSimplicialComplex:
    """Periodic grid triangulation with m*n vertices, 3*m*n edges and 2*m*n
    triangles.

    Cell (x, y) carries a horizontal edge flowing (x+1, y) -> (x, y), a
    vertical edge (x, y) -> (x, y+1) and a diagonal (x, y+1) -> (x+1, y).
    Reference orientations equal the drawn flows, consistent with the periodic
    boundary.  Every type-1 triangle circulates along its directed edge cycle;
    type 2 reverses the circulation of the upper (above-diagonal) triangles.

    Grids with m < 3 or n < 3 would identify distinct cells' edges into
    duplicate or reciprocated vertex pairs and stop being simplicial, so they
    are rejected.
    """
    m, n = spec.width, spec.height
    if m < 3 or n < 3:
        raise TooSmall(f"a simplicial torus grid needs width and height >= 3, got {m}x{n}")
    if spec.type not in (1, 2):
        raise UnknownCase(f"torus type must be 1 or 2, got {spec.type}")

    def vid(x: int, y: int) -> int:
        return (y % n) * m + (x % m)

    edges: list[DirectedEdge] = []
    for y in range(n):
        for x in range(m):
            edges.append(DirectedEdge((vid(x + 1, y), vid(x, y))))
            edges.append(DirectedEdge((vid(x, y), vid(x, y + 1))))
            edges.append(DirectedEdge((vid(x, y + 1), vid(x + 1, y))))
    edges.sort(key=lambda e: tuple(sorted(e.ref)))

    triangles: list[DirectedTriangle] = []
    for y in range(n):
        for x in range(m):
            lower = (vid(x, y), vid(x, y + 1), vid(x + 1, y))
            upper = (vid(x, y + 1), vid(x + 1, y), vid(x + 1, y + 1))
            triangles.append(DirectedTriangle(lower, aligned=True))
            triangles.append(DirectedTriangle(upper, aligned=spec.type == 1))
    triangles.sort(key=lambda t: tuple(sorted(t.ref)))

    return DirectedSimplicialComplex(m * n, edges, triangles)


def random_complex(
    seed: int, max_vertices: int = 8, max_triangles: int = 6
) -> DirectedSimplicialComplex:
    """Small random directed complex, closed under faces by construction.

    Reference orientations and direction flags are randomized independently so
    the orientation/direction distinction is exercised.
    """
    rng = np.random.default_rng(seed)
    n_v = int(rng.integers(3, max_vertices + 1))
    wanted = int(rng.integers(0, max_triangles + 1))
    triples: list[tuple[int, int, int]] = []
    seen = set()
    for _ in range(wanted * 4):
        if len(triples) == wanted:
            break
        tri = tuple(sorted(rng.choice(n_v, size=3, replace=False)))
        if tri not in seen:
            seen.add(tri)
            triples.append(tri)

    pairs = set()
    for tri in triples:
        a, b, c = tri
        pairs.update([(a, b), (a, c), (b, c)])
    extra = int(rng.integers(0, n_v))
    for _ in range(extra):
        a, b = sorted(rng.choice(n_v, size=2, replace=False))
        pairs.add((int(a), int(b)))

    def shuffled(seq):
        seq = list(seq)
        if rng.random() < 0.5:
            seq.reverse()
        return tuple(int(v) for v in seq)

    edges = [
        DirectedEdge(shuffled(p), aligned=bool(rng.random() < 0.5)) for p in sorted(pairs)
    ]
    triangles = []
    for tri in triples:
        perm = [int(v) for v in rng.permutation(list(tri))]
        triangles.append(DirectedTriangle(tuple(perm), aligned=bool(rng.random() < 0.5)))
    return DirectedSimplicialComplex(n_v, edges, triangles)


# -- file format ---------------------------------------------------------------

_EDGE_FIELDS = {"ref", "dir"}
_TOP_FIELDS = {"vertices", "edges", "triangles"}


def _direction_flag(value, where: str) -> bool:
    if value == "aligned":
        return True
    if value == "reversed":
        return False
    raise ParseError(f"{where}: dir must be 'aligned' or 'reversed', got {value!r}")


def complex_to_document(c: DirectedSimplicialComplex) -> dict:
    """JSON-ready description (manifold orientation is derived data and is
    not persisted)."""
    return {
        "vertices": c.vertex_count,
        "edges": [
            {"ref": list(e.ref), "dir": "aligned" if e.aligned else "reversed"}
            for e in c.edges
        ],
        "triangles": [
            {"ref": list(t.ref), "dir": "aligned" if t.aligned else "reversed"}
            for t in c.triangles
        ],
    }


def save_complex(c: DirectedSimplicialComplex, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(complex_to_document(c), fh, indent=2)
        fh.write("\n")


def load_complex(path) -> DirectedSimplicialComplex:
    """Parse and validate a complex description file.

    Unknown fields are rejected, and any invariant violation in the parsed
    complex (missing face, duplicate simplex, bad vertex index) surfaces as a
    ParseError carrying the diagnostics.
    """
    with open(path, "r", encoding="utf-8") as fh:
        try:
            doc = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError(f"{path}: top level must be an object")
    unknown = set(doc) - _TOP_FIELDS
    if unknown:
        raise ParseError(f"{path}: unknown fields {sorted(unknown)}")
    missing = _TOP_FIELDS - set(doc)
    if missing:
        raise ParseError(f"{path}: missing fields {sorted(missing)}")
    if not isinstance(doc["vertices"], int) or doc["vertices"] < 0:
        raise ParseError(f"{path}: vertices must be a non-negative integer")

    def parse_record(rec, arity: int, where: str):
        if not isinstance(rec, dict):
            raise ParseError(f"{where}: expected an object")
        unknown = set(rec) - _EDGE_FIELDS
        if unknown:
            raise ParseError(f"{where}: unknown fields {sorted(unknown)}")
        ref = rec.get("ref")
        if (
            not isinstance(ref, list)
            or len(ref) != arity
            or not all(isinstance(v, int) for v in ref)
        ):
            raise ParseError(f"{where}: ref must be a list of {arity} integers")
        return tuple(ref), _direction_flag(rec.get("dir"), where)

    edges = []
    for i, rec in enumerate(doc["edges"]):
        ref, aligned = parse_record(rec, 2, f"{path}: edges[{i}]")
        edges.append(DirectedEdge(ref, aligned))
    triangles = []
    for i, rec in enumerate(doc["triangles"]):
        ref, aligned = parse_record(rec, 3, f"{path}: triangles[{i}]")
        triangles.append(DirectedTriangle(ref, aligned))

    c = DirectedSimplicialComplex(doc["vertices"], edges, triangles)
    problems = c.validate()
    if problems:
        raise ParseError(f"{path}: " + "; ".join(problems))
    return c

import numpy as np

from dirlap.complexes import DirectedEdge, DirectedSimplicialComplex
from dirlap.generators import TorusSpec, directed_triangle, random_complex, triangulated_torus
from dirlap.graph_laplacians import combinatorial_laplacian
from dirlap.hodge import betti_number, bochner_1up, hodge_laplacian, incidence_matrix


def hollow_triangle():
    return DirectedSimplicialComplex(
        3, [DirectedEdge((0, 1)), DirectedEdge((0, 2)), DirectedEdge((1, 2))]
    )


def test_order_zero_matches_combinatorial():
    for c in [directed_triangle(1), triangulated_torus(TorusSpec(3, 3, 1)), random_complex(4)]:
        ops = hodge_laplacian(c, 0)
        assert np.array_equal(ops.up, combinatorial_laplacian(c))
        assert np.all(ops.down == 0)


def test_full_triangle_order_one_diagonal():
    # one incident triangle plus the fixed lower contribution: 1 + 2 = 3
    ops = hodge_laplacian(directed_triangle(1), 1)
    assert np.array_equal(np.diag(ops.full), [3.0, 3.0, 3.0])
    assert np.array_equal(np.diag(ops.up), [1.0, 1.0, 1.0])
    assert np.array_equal(np.diag(ops.down), [2.0, 2.0, 2.0])


def test_up_part_vanishes_without_triangles():
    ops = hodge_laplacian(hollow_triangle(), 1)
    assert np.all(ops.up == 0)


def test_case_table_from_relative_orientations():
    # off-diagonal entries: +1 when the incidence signs agree, -1 otherwise
    c = directed_triangle(1)
    b2 = incidence_matrix(c, 2)
    up = hodge_laplacian(c, 1).up
    for l in range(3):
        for m in range(3):
            if l != m:
                assert up[l, m] == b2[l, 0] * b2[m, 0]


def test_hodge_decomposition_orthogonality():
    for c in [directed_triangle(1), triangulated_torus(TorusSpec(3, 3, 2))] + [
        random_complex(seed) for seed in range(8)
    ]:
        ops = hodge_laplacian(c, 1)
        assert np.max(np.abs(ops.up @ ops.down)) <= 1e-10
        assert np.max(np.abs(ops.down @ ops.up)) <= 1e-10


def test_up_down_supersymmetry():
    # nonzero spectra of B B^T and B^T B coincide
    c = triangulated_torus(TorusSpec(3, 3, 1))
    for k in (0, 1):
        up = np.linalg.eigvalsh(hodge_laplacian(c, k).up)
        down = np.linalg.eigvalsh(hodge_laplacian(c, k + 1).down)
        up_nz = np.sort(up[up > 1e-8])
        down_nz = np.sort(down[down > 1e-8])
        assert up_nz.shape == down_nz.shape
        assert np.allclose(up_nz, down_nz, atol=1e-8)


class TestBetti:
    def test_torus(self):
        c = triangulated_torus(TorusSpec(3, 3, 1))
        assert betti_number(c, 0) == 1
        assert betti_number(c, 1) == 2
        assert betti_number(c, 2) == 1

    def test_full_triangle(self):
        c = directed_triangle(1)
        assert betti_number(c, 0) == 1
        assert betti_number(c, 1) == 0

    def test_hollow_triangle(self):
        assert betti_number(hollow_triangle(), 1) == 1


class TestBochner:
    def test_degree_is_twice_triangle_count(self):
        b = bochner_1up(directed_triangle(1))
        assert np.array_equal(b.degree, 2 * np.eye(3))

    def test_adjacency_signs(self):
        # edge pair ((0,1), (1,2)) has matching incidence signs: entry -1
        b = bochner_1up(directed_triangle(1))
        assert b.adjacency[0, 2] == -1
        assert b.adjacency[0, 1] == 1

    def test_zero_without_triangles(self):
        b = bochner_1up(hollow_triangle())
        assert np.all(b.matrix == 0)

    def test_matrix_is_degree_minus_adjacency_and_psd(self):
        for seed in range(6):
            c = random_complex(seed)
            b = bochner_1up(c)
            assert np.array_equal(b.matrix, b.degree - b.adjacency)
            if c.n_edges:
                assert np.linalg.eigvalsh(b.matrix)[0] >= -1e-10

    def test_relation_to_up_laplacian(self):
        # same off-diagonal entries; diagonal replaced by absolute row sums
        c = triangulated_torus(TorusSpec(3, 3, 1))
        up = hodge_laplacian(c, 1).up
        b = bochner_1up(c)
        off_mask = ~np.eye(c.n_edges, dtype=bool)
        assert np.array_equal(b.matrix[off_mask], up[off_mask])
        assert np.array_equal(
            np.diag(b.matrix), np.sum(np.abs(up - np.diag(np.diag(up))), axis=1)
        )

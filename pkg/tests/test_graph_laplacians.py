import numpy as np
import pytest

from dirlap.complexes import DirectedEdge, DirectedSimplicialComplex
from dirlap.errors import MissingRotation
from dirlap.generators import TorusSpec, directed_triangle, random_complex, triangulated_torus
from dirlap.graph_laplacians import (
    RotationAssignment,
    check_consistency,
    combinatorial_laplacian,
    graph_connection_laplacian,
    identity_rotations,
    magnetic_laplacian,
)


def planar_rotation(theta: float) -> np.ndarray:
    return np.array([[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]])


def path3():
    return DirectedSimplicialComplex(3, [DirectedEdge((0, 1)), DirectedEdge((1, 2))])


def three_cycle():
    # directed cycle 0 -> 1 -> 2 -> 0 with label-induced references
    return DirectedSimplicialComplex(
        3,
        [DirectedEdge((0, 1)), DirectedEdge((0, 2), aligned=False), DirectedEdge((1, 2))],
    )


class TestCombinatorial:
    def test_path(self):
        expected = np.array([[1, -1, 0], [-1, 2, -1], [0, -1, 1]], dtype=float)
        assert np.array_equal(combinatorial_laplacian(path3()), expected)

    def test_single_vertex(self):
        c = DirectedSimplicialComplex(1, [])
        assert np.array_equal(combinatorial_laplacian(c), np.zeros((1, 1)))

    def test_triangle_skeleton_degrees(self):
        lap = combinatorial_laplacian(directed_triangle(1))
        assert np.array_equal(np.diag(lap), [2, 2, 2])


class TestMagnetic:
    def test_single_edge(self):
        c = DirectedSimplicialComplex(2, [DirectedEdge((0, 1))])
        delta = 0.9
        lap = magnetic_laplacian(c, delta)
        expected = np.array(
            [[1.0, -np.exp(-1j * delta)], [-np.exp(1j * delta), 1.0]]
        )
        assert np.allclose(lap, expected, atol=0)

    def test_zero_angle_degenerates(self):
        for c in [directed_triangle(2), triangulated_torus(TorusSpec(3, 3, 1))]:
            assert np.array_equal(magnetic_laplacian(c, 0.0), combinatorial_laplacian(c))

    def test_directed_cycle_flat_at_matching_angle(self):
        # phase winding 3 * (2 pi / 3) closes up, oracle: reference eigensolver
        lap = magnetic_laplacian(three_cycle(), 2 * np.pi / 3)
        assert np.linalg.eigvalsh(lap)[0] == pytest.approx(0.0, abs=1e-12)

    def test_hermitian_and_psd_on_random_complexes(self):
        for seed in range(20):
            c = random_complex(seed)
            for delta in np.linspace(0, 2 * np.pi, 7, endpoint=False):
                lap = magnetic_laplacian(c, delta)
                assert np.array_equal(lap, lap.conj().T)
                if c.n_edges:
                    assert np.linalg.eigvalsh(lap)[0] >= -1e-9

    def test_quadratic_form_identity(self):
        c = random_complex(3)
        delta = 1.3
        lap = magnetic_laplacian(c, delta)
        rng = np.random.default_rng(11)
        phase_in = np.exp(-1j * delta)
        for _ in range(50):
            nu = rng.standard_normal(c.vertex_count) + 1j * rng.standard_normal(c.vertex_count)
            direct = float(np.real(nu.conj() @ lap @ nu))
            pairwise = 0.0
            for e in c.edges:
                u, v = e.flow
                pairwise += abs(nu[u] - phase_in * nu[v]) ** 2
            assert direct == pytest.approx(pairwise, rel=1e-10)

    def test_direction_reversal_symmetries(self):
        # flipping every flow conjugates the operator; negating the angle does
        # too, so doing both lands back on the original matrix
        c = random_complex(7)
        flipped = DirectedSimplicialComplex(
            c.vertex_count,
            [DirectedEdge(e.ref, not e.aligned) for e in c.edges],
            c.triangles,
        )
        delta = 0.77
        base = magnetic_laplacian(c, delta)
        assert np.allclose(magnetic_laplacian(flipped, delta), np.conj(base), atol=1e-12)
        assert np.allclose(magnetic_laplacian(c, -delta), np.conj(base), atol=1e-12)
        assert np.allclose(magnetic_laplacian(flipped, -delta), base, atol=1e-12)


class TestConnection:
    def test_identity_rotations_reproduce_kronecker_form(self):
        c = three_cycle()
        lap = graph_connection_laplacian(c, identity_rotations(c, 3))
        assert np.array_equal(lap, np.kron(combinatorial_laplacian(c), np.eye(3)))

    def test_single_edge_quarter_turn(self):
        c = DirectedSimplicialComplex(2, [DirectedEdge((0, 1))])
        r = RotationAssignment(2)
        o = planar_rotation(np.pi / 2)
        r.set(0, 1, o)
        lap = graph_connection_laplacian(c, r)
        assert np.allclose(lap[0:2, 2:4], -o)
        assert np.allclose(lap[2:4, 0:2], -o.T)
        assert np.allclose(lap, lap.T)

    def test_magnetic_is_planar_connection(self):
        c = directed_triangle(1)
        delta = 0.77
        r = RotationAssignment(2)
        for e in c.edges:
            u, v = e.flow
            r.set(u, v, planar_rotation(-delta))
        lap = graph_connection_laplacian(c, r)
        mag = magnetic_laplacian(c, delta)
        n = c.vertex_count
        embedded = np.zeros((2 * n, 2 * n))
        for i in range(n):
            for j in range(n):
                z = mag[i, j]
                embedded[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = [
                    [z.real, -z.imag],
                    [z.imag, z.real],
                ]
            # realification doubles each eigenvalue; entries match blockwise
        assert np.allclose(lap, embedded, atol=1e-12)

    def test_missing_rotation(self):
        c = three_cycle()
        r = RotationAssignment(2)
        r.set(0, 1, np.eye(2))
        with pytest.raises(MissingRotation):
            graph_connection_laplacian(c, r)

    def test_rejects_non_orthogonal(self):
        r = RotationAssignment(2)
        with pytest.raises(MissingRotation):
            r.set(0, 1, np.array([[1.0, 0.1], [0.0, 1.0]]))

    def test_consistent_connection_kernel_dimension(self):
        # gauge-built connection: kernel dimension equals the fiber dimension
        rng = np.random.default_rng(0)
        c = three_cycle()
        for d in (2, 3):
            gauge = [np.linalg.qr(rng.standard_normal((d, d)))[0] for _ in range(3)]
            r = RotationAssignment(d)
            for e in c.edges:
                i, j = e.ref
                r.set(i, j, gauge[i] @ gauge[j].T)
            assert check_consistency(c, r).consistent
            w = np.linalg.eigvalsh(graph_connection_laplacian(c, r))
            assert int(np.sum(w < 1e-8)) == d


class TestConsistency:
    def test_identity_consistent(self):
        c = triangulated_torus(TorusSpec(3, 3, 1))
        assert check_consistency(c, identity_rotations(c, 2)).consistent

    def test_full_turn_split_three_ways(self):
        c = three_cycle()
        r = RotationAssignment(2)
        r.set(0, 1, planar_rotation(2 * np.pi / 3))
        r.set(1, 2, planar_rotation(2 * np.pi / 3))
        r.set(2, 0, planar_rotation(2 * np.pi / 3))
        assert check_consistency(c, r).consistent

    def test_quarter_turns_flagged_with_witness(self):
        c = three_cycle()
        r = RotationAssignment(2)
        for i, j in [(0, 1), (1, 2), (2, 0)]:
            r.set(i, j, planar_rotation(np.pi / 2))
        report = check_consistency(c, r)
        assert not report.consistent
        assert report.witness_cycle is not None
        assert report.witness_cycle[0] == report.witness_cycle[-1]
        assert set(report.witness_cycle) == {0, 1, 2}

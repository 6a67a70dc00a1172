import numpy as np

TWO_PI = 2.0 * np.pi


def mod_distance(a: float, b: float) -> float:
    """Distance between two angles on the circle."""
    d = abs(a - b) % TWO_PI
    return min(d, TWO_PI - d)


def random_hermitian(n: int, seed: int) -> np.ndarray:
    rng = np.random.default_rng(seed)
    m = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return (m + m.conj().T) / 2.0


def pauli_block_matrix(blocks) -> np.ndarray:
    """Expand a nested list of 2x2 blocks into a dense matrix."""
    rows = len(blocks)
    cols = len(blocks[0])
    out = np.zeros((2 * rows, 2 * cols), dtype=complex)
    for i in range(rows):
        for j in range(cols):
            out[2 * i : 2 * i + 2, 2 * j : 2 * j + 2] = blocks[i][j]
    return out

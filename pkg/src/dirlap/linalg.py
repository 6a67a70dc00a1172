"""Dense complex linear algebra: Pauli constants, a self-contained Hermitian
eigensolver, commutators and norms.

The eigensolver reduces the n x n complex Hermitian problem to a 2n x 2n real
symmetric one through the block embedding [[Re, -Im], [Im, Re]] and runs a
cyclic Jacobi iteration on it.  Eigenvalues of the embedded matrix come in
identical pairs (multiplying a complex eigenvector by i gives an independent
real image), which the solver deduplicates by taking every other sorted value.
"""

from __future__ import annotations

import numpy as np

from .errors import DimensionMismatch, NoConvergence, NotHermitian

try:
    from numba import njit

    NUMBA_AVAILABLE = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    NUMBA_AVAILABLE = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


PAULI_KINDS = ("sigma0", "sigmaX", "sigmaY", "sigmaZ")

_PAULI = {
    "sigma0": np.array([[1.0, 0.0], [0.0, 1.0]], dtype=complex),
    "sigmaX": np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex),
    "sigmaY": np.array([[0.0, -1.0j], [1.0j, 0.0]], dtype=complex),
    "sigmaZ": np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex),
}

#: Relative tolerance below which an input is accepted as Hermitian and
#: symmetrized before solving.
HERMITICITY_RTOL = 1e-10

#: Hard cap on cyclic Jacobi sweeps; exceeding it raises NoConvergence.
JACOBI_MAX_SWEEPS = 100

#: Absolute tolerance used when grouping near-equal eigenvalues into
#: degenerate clusters (sweeps and equilibrium classification rely on it).
DEGENERACY_TOL = 1e-8


def pauli(kind: str) -> np.ndarray:
    """Return a fresh copy of the requested 2x2 Pauli matrix."""
    try:
        return _PAULI[kind].copy()
    except KeyError:
        raise DimensionMismatch(f"unknown Pauli kind {kind!r}; expected one of {PAULI_KINDS}")


def frobenius_norm(m: np.ndarray) -> float:
    """sqrt(sum |entry|^2); zero exactly for the zero matrix."""
    m = np.asarray(m)
    if m.size == 0:
        return 0.0
    return float(np.sqrt(np.sum(np.abs(m) ** 2)))


def commutator(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """a @ b - b @ a for square matrices of identical size."""
    a = np.asarray(a)
    b = np.asarray(b)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"first operand is not square: shape {a.shape}")
    if b.shape != a.shape:
        raise DimensionMismatch(f"operand shapes differ: {a.shape} vs {b.shape}")
    return a @ b - b @ a


@njit(cache=True)
def _jacobi_cycle(a, v, max_sweeps, off_tol):  # pragma: no cover - compiled
    """Cyclic Jacobi on symmetric `a`, accumulating rotations into `v`.

    Returns the number of sweeps used, or -1 if `off_tol` was not reached
    within `max_sweeps`.  `a` is overwritten with a near-diagonal matrix.
    """
    n = a.shape[0]
    for sweep in range(max_sweeps):
        off = 0.0
        for i in range(n - 1):
            for j in range(i + 1, n):
                off += a[i, j] * a[i, j]
        if np.sqrt(2.0 * off) <= off_tol:
            return sweep
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if abs(apq) == 0.0:
                    continue
                tau = (a[q, q] - a[p, p]) / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + np.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                for i in range(n):
                    aip = a[i, p]
                    aiq = a[i, q]
                    a[i, p] = c * aip - s * aiq
                    a[i, q] = s * aip + c * aiq
                for i in range(n):
                    api = a[p, i]
                    aqi = a[q, i]
                    a[p, i] = c * api - s * aqi
                    a[q, i] = s * api + c * aqi
                if v.shape[0] == n:
                    for i in range(n):
                        vip = v[i, p]
                        viq = v[i, q]
                        v[i, p] = c * vip - s * viq
                        v[i, q] = s * vip + c * viq
    off = 0.0
    for i in range(n - 1):
        for j in range(i + 1, n):
            off += a[i, j] * a[i, j]
    if np.sqrt(2.0 * off) <= off_tol:
        return max_sweeps
    return -1


def _check_hermitian(m: np.ndarray) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise NotHermitian(f"matrix of shape {m.shape} is not square")
    if not np.all(np.isfinite(m)):
        raise NotHermitian("matrix has non-finite entries")
    scale = frobenius_norm(m)
    dev = frobenius_norm(m - m.conj().T)
    if dev > HERMITICITY_RTOL * max(1.0, scale):
        raise NotHermitian(
            f"deviation from Hermiticity {dev:.3e} exceeds {HERMITICITY_RTOL:.0e} * max(1, norm)"
        )
    return (m + m.conj().T) / 2.0


def _embed_real(h: np.ndarray) -> np.ndarray:
    re = h.real
    im = h.imag
    top = np.hstack((re, -im))
    bot = np.hstack((im, re))
    return np.vstack((top, bot))


def _run_jacobi(big: np.ndarray, want_vectors: bool):
    n2 = big.shape[0]
    scale = frobenius_norm(big)
    if scale == 0.0:
        w = np.zeros(n2)
        v = np.eye(n2) if want_vectors else np.empty((0, 0))
        return w, v
    a = np.ascontiguousarray(big, dtype=np.float64).copy()
    v = np.eye(n2) if want_vectors else np.empty((0, 0))
    sweeps = _jacobi_cycle(a, v, JACOBI_MAX_SWEEPS, 1e-13 * scale)
    if sweeps < 0:
        raise NoConvergence(f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps")
    return np.diag(a).copy(), v


def _complexify_cluster(real_vectors: np.ndarray) -> list[np.ndarray]:
    """Pick an orthonormal complex basis out of a degenerate real eigenspace.

    `real_vectors` holds 2k orthonormal columns of the embedded problem; their
    complexified images span a k-dimensional complex eigenspace.  A pivoted
    modified Gram-Schmidt selects k orthonormal representatives.
    """
    n = real_vectors.shape[0] // 2
    count = real_vectors.shape[1]
    keep = count // 2
    candidates = [real_vectors[:n, j] + 1j * real_vectors[n:, j] for j in range(count)]
    chosen: list[np.ndarray] = []
    for _ in range(keep):
        norms = [np.linalg.norm(c) for c in candidates]
        best = int(np.argmax(norms))
        if norms[best] < 1e-8:
            raise NoConvergence("degenerate eigenspace lost rank during complexification")
        u = candidates.pop(best) / norms[best]
        chosen.append(u)
        candidates = [c - u * (u.conj() @ c) for c in candidates]
    return chosen


def hermitian_eigenvalues(m: np.ndarray) -> np.ndarray:
    """Ascending real eigenvalues of a Hermitian matrix (no eigenvectors)."""
    h = _check_hermitian(m)
    n = h.shape[0]
    if n == 0:
        return np.empty(0)
    w2, _ = _run_jacobi(_embed_real(h), want_vectors=False)
    w2.sort()
    return w2[0::2]


def hermitian_eigendecomposition(m: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Full eigendecomposition of a Hermitian matrix.

    Returns (eigenvalues, eigenvectors) with eigenvalues ascending and real,
    and eigenvectors as orthonormal columns satisfying m @ v[:, k] close to
    w[k] * v[:, k].
    """
    h = _check_hermitian(m)
    n = h.shape[0]
    if n == 0:
        return np.empty(0), np.empty((0, 0), dtype=complex)
    w2, v2 = _run_jacobi(_embed_real(h), want_vectors=True)
    order = np.argsort(w2, kind="stable")
    w2 = w2[order]
    v2 = v2[:, order]

    # Cluster the doubled spectrum; clusters always have even size because the
    # pairing noise (~1e-13 relative) sits far below the cluster tolerance.
    scale = frobenius_norm(h)
    ctol = 1e-10 * scale
    eigenvalues = w2[0::2].copy()
    vectors = np.empty((n, n), dtype=complex)
    start = 0
    col = 0
    for stop in range(1, 2 * n + 1):
        if stop < 2 * n and w2[stop] - w2[stop - 1] <= ctol:
            continue
        basis = _complexify_cluster(v2[:, start:stop])
        for u in basis:
            vectors[:, col] = u
            col += 1
        start = stop
    if col != n:
        raise NoConvergence("eigenvalue pairing produced an odd cluster; solver noise too large")
    return eigenvalues, vectors

"""Diffusion of 2-component edge signals driven by the connection operators:
an explicit fixed-step integrator, the exact spectral propagator, the angle
parameterization used for plotting, and equilibrium classification."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .complexes import DirectedSimplicialComplex
from .connection import ConnectionOperator, connection_1down, connection_1up
from .errors import DimensionMismatch, UnstableStep
from .linalg import DEGENERACY_TOL, hermitian_eigendecomposition, hermitian_eigenvalues

TWO_PI = 2.0 * np.pi

KERNEL_TOL = 1e-8
KERNEL_ENERGY_RATIO = 1e-10
KERNEL_MIN_NORM = 1e-6
SLOW_MODE_DISTANCE = 1e-4


@dataclass(frozen=True)
class Cochain:
    """Signal on the k-simplices: one complex scalar per vertex for order 0,
    one 2-component complex vector per edge or triangle for orders 1 and 2."""

    order: int
    values: np.ndarray

    def vector(self) -> np.ndarray:
        return np.asarray(self.values, dtype=complex).reshape(-1)

    def norm(self) -> float:
        return float(np.linalg.norm(self.vector()))

    @classmethod
    def from_vector(cls, order: int, vec: np.ndarray) -> "Cochain":
        vec = np.asarray(vec, dtype=complex)
        if order == 0:
            return cls(0, vec.reshape(-1))
        if vec.size % 2:
            raise DimensionMismatch("higher-order cochains need an even component count")
        return cls(order, vec.reshape(-1, 2))


@dataclass(frozen=True)
class AngleForm:
    """Per-simplex parameterization amplitude * (cos(psi) e^{i theta},
    sin(psi) e^{i phi})."""

    psi: np.ndarray
    theta: np.ndarray
    phi: np.ndarray
    amplitude: np.ndarray


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    states: np.ndarray  # (samples, n_simplices, 2) complex
    energies: np.ndarray

    @property
    def final(self) -> Cochain:
        return Cochain(1, self.states[-1].copy())


@dataclass(frozen=True)
class EquilibriumReport:
    kind: str  # kernel_state | slow_mode | not_converged
    eigenvalue: float | None = None


def random_cochain(n_simplices: int, seed: int, order: int = 1) -> Cochain:
    """Unit-amplitude cochain with uniformly random angles (reproducible)."""
    rng = np.random.default_rng(seed)
    if order == 0:
        theta = rng.uniform(0.0, TWO_PI, size=n_simplices)
        return Cochain(0, np.exp(1j * theta))
    psi = rng.uniform(0.0, np.pi / 2.0, size=n_simplices)
    theta = rng.uniform(0.0, TWO_PI, size=n_simplices)
    phi = rng.uniform(0.0, TWO_PI, size=n_simplices)
    values = np.stack(
        [np.cos(psi) * np.exp(1j * theta), np.sin(psi) * np.exp(1j * phi)], axis=1
    )
    return Cochain(order, values)


def to_angles(nu: Cochain) -> AngleForm:
    """Invert the angle parameterization; components that vanish get angle 0."""
    if nu.order < 1:
        raise DimensionMismatch("angle form is defined for cochains of order >= 1")
    values = np.asarray(nu.values, dtype=complex).reshape(-1, 2)
    first = values[:, 0]
    second = values[:, 1]
    amplitude = np.sqrt(np.abs(first) ** 2 + np.abs(second) ** 2)
    psi = np.arctan2(np.abs(second), np.abs(first))
    theta = np.where(np.abs(first) > 0, np.mod(np.angle(first), TWO_PI), 0.0)
    phi = np.where(np.abs(second) > 0, np.mod(np.angle(second), TWO_PI), 0.0)
    return AngleForm(psi, theta, phi, amplitude)


def build_diffusion_operator(
    selector: str, c: DirectedSimplicialComplex, delta: float
) -> ConnectionOperator:
    """The generator of the edge diffusion: up, down, or their sum."""
    if selector == "up":
        return connection_1up(c, delta)
    if selector == "down":
        return connection_1down(c, delta)
    if selector == "combined":
        up = connection_1up(c, delta)
        down = connection_1down(c, delta)
        return ConnectionOperator("combined", up.delta, up.matrix + down.matrix, ())
    raise DimensionMismatch(f"selector must be 'up', 'down' or 'combined', got {selector!r}")


def diffuse(
    selector: str,
    c: DirectedSimplicialComplex,
    delta: float,
    nu0: Cochain,
    t_max: float = 50.0,
    dt: float | None = None,
) -> Trajectory:
    """Integrate d nu/dt = -L nu with a classical 4th-order fixed-step scheme.

    The default step is 0.9 * (2 / lambda_max); explicitly passing a step at or
    beyond 2 / lambda_max raises UnstableStep.
    """
    op = build_diffusion_operator(selector, c, delta)
    matrix = op.matrix
    vec = nu0.vector()
    if vec.shape[0] != op.dim:
        raise DimensionMismatch(
            f"initial cochain has {vec.shape[0]} components, operator needs {op.dim}"
        )
    eigenvalues = hermitian_eigenvalues(matrix)
    lam_max = float(eigenvalues[-1]) if eigenvalues.size else 0.0
    if dt is None:
        dt = 0.9 * (2.0 / lam_max) if lam_max > 0 else t_max / 100.0
    if dt <= 0:
        raise UnstableStep("dt must be positive")
    if lam_max > 0 and dt >= 2.0 / lam_max:
        raise UnstableStep(f"dt={dt:g} is at or beyond the stability bound {2.0 / lam_max:g}")

    steps = max(1, int(round(t_max / dt)))
    times = np.arange(steps + 1) * dt
    n = op.dim // 2
    states = np.empty((steps + 1, n, 2), dtype=complex)
    energies = np.empty(steps + 1)
    current = vec.copy()
    for step in range(steps + 1):
        states[step] = current.reshape(-1, 2)
        energies[step] = float(np.real(current.conj() @ matrix @ current))
        if step == steps:
            break
        k1 = -(matrix @ current)
        k2 = -(matrix @ (current + 0.5 * dt * k1))
        k3 = -(matrix @ (current + 0.5 * dt * k2))
        k4 = -(matrix @ (current + dt * k3))
        current = current + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return Trajectory(times, states, energies)


def spectral_propagate(op: ConnectionOperator, nu0: Cochain, t: float) -> Cochain:
    """Exact solution nu(t) = sum_k e^{-lambda_k t} <v_k, nu0> v_k."""
    vec = nu0.vector()
    if vec.shape[0] != op.dim:
        raise DimensionMismatch(
            f"initial cochain has {vec.shape[0]} components, operator needs {op.dim}"
        )
    w, v = hermitian_eigendecomposition(op.matrix)
    coefficients = v.conj().T @ vec
    evolved = v @ (np.exp(-w * t) * coefficients)
    return Cochain.from_vector(nu0.order, evolved)


def phase_align(reference: np.ndarray, state: np.ndarray) -> np.ndarray:
    """Remove the global phase ambiguity: rotate `state` so that its overlap
    with `reference` is real and non-negative."""
    overlap = np.vdot(reference, state)
    if np.abs(overlap) == 0.0:
        return state
    return state * np.exp(-1j * np.angle(overlap))


def classify_equilibrium(traj: Trajectory, op: ConnectionOperator) -> EquilibriumReport:
    """Label the end state of a trajectory.

    kernel_state: the energy collapsed while the state survived (a zero mode);
    slow_mode: the normalized end state lies in the eigenspace of the smallest
    positive eigenvalue; not_converged otherwise.
    """
    initial_energy = traj.energies[0]
    final_energy = traj.energies[-1]
    final = traj.states[-1].reshape(-1)
    final_norm = float(np.linalg.norm(final))
    # the absolute fallback covers starts already inside the kernel, where the
    # initial energy itself is roundoff-level
    scale = float(np.linalg.norm(op.matrix)) if op.dim else 0.0
    energy_floor = 1e-13 * max(1.0, scale) * final_norm**2
    collapsed = (
        final_energy <= KERNEL_ENERGY_RATIO * initial_energy or final_energy <= energy_floor
    )
    if collapsed and final_norm > KERNEL_MIN_NORM:
        return EquilibriumReport("kernel_state", 0.0)
    if final_norm == 0.0:
        return EquilibriumReport("not_converged")
    w, v = hermitian_eigendecomposition(op.matrix)
    positive = np.nonzero(w > KERNEL_TOL)[0]
    if positive.size == 0:
        return EquilibriumReport("not_converged")
    lam = w[positive[0]]
    cols = np.nonzero(np.abs(w - lam) <= DEGENERACY_TOL)[0]
    basis = v[:, cols]
    unit = final / final_norm
    projection = basis @ (basis.conj().T @ unit)
    proj_norm = float(np.linalg.norm(projection))
    if proj_norm < 1e-12:
        return EquilibriumReport("not_converged")
    aligned = phase_align(projection / proj_norm, unit)
    if float(np.linalg.norm(aligned - projection / proj_norm)) < SLOW_MODE_DISTANCE:
        return EquilibriumReport("slow_mode", float(lam))
    return EquilibriumReport("not_converged")

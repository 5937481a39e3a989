"""Unitary evolution under a stationary Hamiltonian, in the parallel-transport gauge.

Throughout, hbar = 1.  A problem instance pairs a Hamiltonian H with an
initial pure state psi_0.  The physically evolved state is
psi(t) = exp(-iHt) psi_0; multiplying by exp(+iEt) with E = <H> removes the
dynamical phase and yields the parallel-transported representative Psi(t),
which satisfies <Psi|dPsi/dt> = 0.

Arc length along the projective-space curve is s = v t, where the speed v is
the energy uncertainty, v^2 = <(H - E)^2>.  In arc-length parametrization the
curve has unit-norm tangent

    T(s) = -i (dh) Psi(s),      dh = (H - E) / v,

and second derivative T'(s) = -(dh)^2 Psi(s), whose squared norm <(dh)^4> is
constant in s.
"""

from __future__ import annotations

import numpy as np

from .hilbert import HermitianOperator, StateVector

__all__ = [
    "StationaryStateError",
    "EvolutionProblem",
    "propagator",
    "evolve",
    "parallel_transported_state",
    "state_at_arclength",
    "tangent",
    "tangent_derivative",
]

# An initial state is treated as an eigenstate (zero-speed curve) when the
# energy variance is negligible relative to the Hamiltonian's scale.
_STATIONARY_MU2_TOL = 1e-10


class StationaryStateError(ValueError):
    """The initial state is an eigenstate: the curve degenerates to a point."""


class EvolutionProblem:
    """A stationary Hamiltonian together with an initial pure state.

    Diagonalizes H once at construction and caches the eigendecomposition,
    the mean energy E, and the speed v = sqrt(<(H-E)^2>).  Instances are
    read-only after construction.

    Parameters
    ----------
    hamiltonian : HermitianOperator
    initial_state : StateVector

    Raises
    ------
    ValueError
        On dimension mismatch between operator and state.
    """

    def __init__(self, hamiltonian: HermitianOperator, initial_state: StateVector):
        if hamiltonian.dim != initial_state.dim:
            raise ValueError(
                f"dimension mismatch: hamiltonian {hamiltonian.dim}, "
                f"state {initial_state.dim}"
            )
        self.hamiltonian = hamiltonian
        self.initial_state = initial_state

        w, basis = np.linalg.eigh(hamiltonian.matrix)
        self._eigenvalues = w
        self._eigenvectors = basis
        self._coeffs0 = basis.conj().T @ initial_state.amplitudes

        self.energy = float(np.sum(np.abs(self._coeffs0) ** 2 * w))
        centered = hamiltonian.matrix @ initial_state.amplitudes - self.energy * initial_state.amplitudes
        self._mu2 = float(np.vdot(centered, centered).real)
        self.speed = float(np.sqrt(max(self._mu2, 0.0)))

        scale = max(1.0, float(np.sum(w * w)))  # ||H||_F^2 via eigenvalues
        self._stationary = self._mu2 <= _STATIONARY_MU2_TOL * scale
        if not self._stationary:
            self._delta_h = (hamiltonian.matrix - self.energy * np.eye(hamiltonian.dim)) / self.speed
        else:
            self._delta_h = None

    @property
    def dim(self) -> int:
        return self.hamiltonian.dim

    @property
    def is_stationary(self) -> bool:
        return self._stationary

    @property
    def delta_h(self) -> np.ndarray:
        """Dimensionless centered Hamiltonian (H - E)/v; <(dh)^2> = 1."""
        self._require_moving()
        return self._delta_h

    def eigensystem(self) -> tuple[np.ndarray, np.ndarray]:
        """Cached (eigenvalues, eigenvector columns) of the Hamiltonian."""
        return self._eigenvalues, self._eigenvectors

    def _require_moving(self):
        if self._stationary:
            raise StationaryStateError("stationary state: arc length undefined")

    def _evolve_vec(self, t: float) -> np.ndarray:
        phases = np.exp(-1j * self._eigenvalues * t)
        return self._eigenvectors @ (phases * self._coeffs0)

    def __repr__(self):
        return (
            f"EvolutionProblem(dim={self.dim}, energy={self.energy:.6g}, "
            f"speed={self.speed:.6g})"
        )


def propagator(hamiltonian: HermitianOperator, t: float) -> np.ndarray:
    """Unitary exp(-iHt) via the Hermitian eigendecomposition.

    Diagonalizing and re-exponentiating is exactly unitary up to rounding,
    unlike a truncated series, so U^dagger U = I holds to ~1e-15 for any t.
    """
    w, basis = np.linalg.eigh(hamiltonian.matrix)
    return (basis * np.exp(-1j * w * t)) @ basis.conj().T


def evolve(problem: EvolutionProblem, t: float) -> StateVector:
    """Schroedinger-evolved state exp(-iHt) psi_0."""
    return StateVector(problem._evolve_vec(t))


def parallel_transported_state(problem: EvolutionProblem, t: float) -> StateVector:
    """Evolved state with the dynamical phase removed: exp(+iEt) exp(-iHt) psi_0.

    The representative satisfies <Psi|dPsi/dt> = 0, so its derivative is
    orthogonal to the curve and norms of derivatives acquire direct geometric
    meaning.
    """
    return StateVector(np.exp(1j * problem.energy * t) * problem._evolve_vec(t))


def state_at_arclength(problem: EvolutionProblem, s: float) -> StateVector:
    """Parallel-transported state at arc length s, i.e. at time t = s/v."""
    problem._require_moving()
    return parallel_transported_state(problem, s / problem.speed)


def tangent(problem: EvolutionProblem, s: float) -> StateVector:
    """Unit tangent T(s) = -i (dh) Psi(s) of the arc-length parametrized curve."""
    problem._require_moving()
    psi = state_at_arclength(problem, s)
    return StateVector(-1j * (problem.delta_h @ psi.amplitudes))


def tangent_derivative(problem: EvolutionProblem, s: float) -> np.ndarray:
    """Curve acceleration T'(s) = -(dh)^2 Psi(s).

    Not normalized: its squared norm equals the fourth moment <(dh)^4>,
    constant along the curve.
    """
    problem._require_moving()
    psi = state_at_arclength(problem, s)
    dh = problem.delta_h
    return -(dh @ (dh @ psi.amplitudes))

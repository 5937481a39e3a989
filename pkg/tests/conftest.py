import numpy as np
import pytest

from qucurve import EvolutionProblem, HermitianOperator, StateVector
from qucurve.models import two_qubit_nonlocal


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return HermitianOperator((a + a.conj().T) / 2.0)


def random_state(rng, dim):
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return StateVector(z / np.linalg.norm(z))


def random_problem(rng, dim):
    return EvolutionProblem(random_hermitian(rng, dim), random_state(rng, dim))


@pytest.fixture
def crossed_fields_problem():
    """H = XZ + ZX on |00>: every frame quantity has a known closed form."""
    ham = two_qubit_nonlocal(0.0, 0.0, 1.0, 1.0)
    return EvolutionProblem(ham, StateVector([1, 0, 0, 0]))


def crossed_fields_state(t):
    """Closed-form evolved state (cos^2 t, -i/2 sin 2t, -i/2 sin 2t, sin^2 t)."""
    c, s = np.cos(t), np.sin(t)
    return np.array([c * c, -0.5j * np.sin(2 * t), -0.5j * np.sin(2 * t), s * s])

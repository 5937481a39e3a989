import numpy as np
import pytest

from qucurve import (
    HermitianOperator,
    LinearDependenceError,
    PauliTerm,
    StateVector,
    build_operator,
    expectation,
    gram_schmidt,
    projector_orthogonal,
)
from qucurve.hilbert import PAULI

from conftest import random_hermitian, random_state


class TestStateVector:
    def test_accepts_unit_vector(self):
        s = StateVector([1, 0])
        assert s.dim == 2
        assert s.amplitudes.dtype == complex

    def test_rejects_unnormalized(self):
        with pytest.raises(ValueError, match="norm"):
            StateVector([1, 1])

    def test_rejects_scalar_and_matrix(self):
        with pytest.raises(ValueError):
            StateVector(np.eye(2))
        with pytest.raises(ValueError):
            StateVector([1.0])

    def test_immutable(self):
        s = StateVector([1, 0])
        with pytest.raises(AttributeError):
            s.amplitudes = np.array([0, 1])
        with pytest.raises(ValueError):
            s.amplitudes[0] = 0.0

    def test_inner_product_conjugates_left(self):
        a = StateVector([1, 0])
        b = StateVector([1j, 0])
        assert a.inner(b) == pytest.approx(1j)


class TestHermitianOperator:
    def test_rejects_non_hermitian(self):
        with pytest.raises(ValueError, match="Hermitian"):
            HermitianOperator([[0, 1], [0, 0]])

    def test_rejects_non_square(self):
        with pytest.raises(ValueError, match="square"):
            HermitianOperator(np.zeros((2, 3)))

    def test_apply_matches_matmul(self):
        rng = np.random.default_rng(3)
        op = random_hermitian(rng, 4)
        v = random_state(rng, 4)
        np.testing.assert_allclose(op.apply(v), op.matrix @ v.amplitudes, rtol=0, atol=0)


class TestBuildOperator:
    def test_single_x_word(self):
        op = build_operator([PauliTerm(1.0, "X")], 1)
        np.testing.assert_array_equal(op.matrix, PAULI["X"])

    def test_word_order_leftmost_is_most_significant(self):
        op = build_operator([PauliTerm(1.0, "XZ")], 2)
        np.testing.assert_array_equal(op.matrix, np.kron(PAULI["X"], PAULI["Z"]))

    def test_local_field_sum_hand_expanded(self):
        # IX + XI + IZ + ZI expanded by hand over the two-qubit basis
        terms = [PauliTerm(1.0, w) for w in ("IX", "XI", "IZ", "ZI")]
        expected = np.array(
            [
                [2, 1, 1, 0],
                [1, 0, 0, 1],
                [1, 0, 0, 1],
                [0, 1, 1, -2],
            ],
            dtype=complex,
        )
        np.testing.assert_allclose(build_operator(terms, 2).matrix, expected, atol=0)

    def test_traceless_when_no_identity_word(self):
        terms = [PauliTerm(0.7, "XX"), PauliTerm(-1.2, "YZ")]
        assert abs(np.trace(build_operator(terms, 2).matrix)) == 0.0

    def test_linear_in_coefficients(self):
        rng = np.random.default_rng(11)
        words = ["XY", "ZZ", "IX"]
        c1, c2 = rng.normal(size=3), rng.normal(size=3)
        a = build_operator([PauliTerm(float(c), w) for c, w in zip(c1, words)], 2).matrix
        b = build_operator([PauliTerm(float(c), w) for c, w in zip(c2, words)], 2).matrix
        both = build_operator(
            [PauliTerm(float(c + d), w) for c, d, w in zip(c1, c2, words)], 2
        ).matrix
        np.testing.assert_allclose(a + b, both, atol=1e-14)

    def test_rejects_wrong_word_length(self):
        with pytest.raises(ValueError, match="expected 2"):
            build_operator([PauliTerm(1.0, "XXX")], 2)

    def test_rejects_bad_letters(self):
        with pytest.raises(ValueError, match="I,X,Y,Z"):
            PauliTerm(1.0, "XQ")

    def test_rejects_nonfinite_coefficient(self):
        with pytest.raises(ValueError, match="finite"):
            PauliTerm(float("nan"), "X")


class TestExpectation:
    def test_sigma_z_on_basis_state(self):
        op = HermitianOperator(PAULI["Z"])
        assert expectation(op, StateVector([1, 0])) == 1.0

    def test_tilted_field_on_tilted_state(self):
        # Bloch vector (1/sqrt2, 0, 1/sqrt2) against the field (0, 0, 1):
        # the mean energy is the projection a.m = 1/sqrt2
        theta = np.pi / 4
        state = StateVector([np.cos(theta / 2), np.sin(theta / 2)])
        op = HermitianOperator(PAULI["Z"])
        assert expectation(op, state) == pytest.approx(1 / np.sqrt(2), abs=1e-15)

    def test_real_for_random_hermitian(self):
        rng = np.random.default_rng(5)
        for dim in (2, 3, 5, 8):
            op = random_hermitian(rng, dim)
            state = random_state(rng, dim)
            val = expectation(op, state)
            spectral = np.linalg.eigvalsh(op.matrix)
            assert spectral[0] - 1e-12 <= val <= spectral[-1] + 1e-12

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="mismatch"):
            expectation(HermitianOperator(PAULI["Z"]), StateVector([1, 0, 0]))


class TestProjectorOrthogonal:
    def test_annihilates_its_state(self):
        rng = np.random.default_rng(7)
        state = random_state(rng, 6)
        proj = projector_orthogonal(state)
        assert np.linalg.norm(proj.apply(state)) < 1e-14

    def test_matrix_for_basis_state(self):
        proj = projector_orthogonal(StateVector([1, 0]))
        np.testing.assert_allclose(proj.matrix, [[0, 0], [0, 1]], atol=0)

    def test_idempotent(self):
        rng = np.random.default_rng(9)
        state = random_state(rng, 5)
        p = projector_orthogonal(state).matrix
        np.testing.assert_allclose(p @ p, p, atol=1e-14)

    def test_trace_is_dim_minus_one(self):
        rng = np.random.default_rng(13)
        state = random_state(rng, 5)
        assert np.trace(projector_orthogonal(state).matrix).real == pytest.approx(4.0, abs=1e-12)


class TestGramSchmidt:
    def test_zero_plus_basis(self):
        zero = np.array([1, 0], dtype=complex)
        plus = np.array([1, 1], dtype=complex) / np.sqrt(2)
        out = gram_schmidt([zero, plus])
        np.testing.assert_allclose(out[0], [1, 0], atol=1e-15)
        np.testing.assert_allclose(out[1], [0, 1], atol=1e-15)

    def test_orthonormal_and_flag_preserving(self):
        rng = np.random.default_rng(17)
        vecs = [rng.normal(size=6) + 1j * rng.normal(size=6) for _ in range(4)]
        out = gram_schmidt(vecs)
        gram = np.array([[np.vdot(a, b) for b in out] for a in out])
        np.testing.assert_allclose(gram, np.eye(4), atol=1e-10)
        # k-th output stays inside the span of the first k inputs
        for k in range(1, 5):
            basis = np.linalg.qr(np.stack(vecs[:k], axis=1))[0]
            residual = out[k - 1] - basis @ (basis.conj().T @ out[k - 1])
            assert np.linalg.norm(residual) < 1e-10

    def test_nearly_dependent_input_reports_index(self):
        v0 = np.array([1, 0, 0], dtype=complex)
        v1 = np.array([0, 1, 0], dtype=complex)
        v2 = v0 + 1e-12 * np.array([0, 0, 1])
        with pytest.raises(LinearDependenceError) as err:
            gram_schmidt([v0, v1, v2])
        assert err.value.index == 2

    def test_accepts_state_vectors(self):
        out = gram_schmidt([StateVector([1, 0]), StateVector(np.array([1, 1j]) / np.sqrt(2))])
        gram = np.array([[np.vdot(a, b) for b in out] for a in out])
        np.testing.assert_allclose(gram, np.eye(2), atol=1e-12)

import numpy as np
import pytest

from qucurve import (
    EvolutionProblem,
    StateVector,
    binormal_raw,
    build_frame,
    cartan_matrix,
    central_moments,
    curvature_from_moments,
    curvature_geometric,
    state_at_arclength,
    tangent,
    torsion_from_moments,
    torsion_geometric,
)
from qucurve.hilbert import PAULI
from qucurve.models import single_qubit

from conftest import random_problem


def crossed_fields_tangent(s):
    arg = np.sqrt(2) * s
    return np.array(
        [-np.sin(arg), -1j * np.cos(arg), -1j * np.cos(arg), np.sin(arg)]
    ) / np.sqrt(2)


def crossed_fields_binormal(s):
    arg = np.sqrt(2) * s
    return np.array(
        [
            0.5 - 0.5 * np.cos(arg),
            0.5j * np.sin(arg),
            0.5j * np.sin(arg),
            0.5 * np.cos(arg) + 0.5,
        ]
    )


class TestWorkedExample:
    """H = XZ + ZX on |00>: every frame ingredient has a trig closed form."""

    def test_curvature_and_torsion(self, crossed_fields_problem):
        for s in (0.0, 0.4, 1.1):
            assert curvature_geometric(crossed_fields_problem, s) == pytest.approx(1.0, abs=1e-12)
            assert torsion_geometric(crossed_fields_problem, s) == pytest.approx(1.0, abs=1e-12)

    def test_frame_vectors(self, crossed_fields_problem):
        for s in (0.0, 0.9):
            fr = build_frame(crossed_fields_problem, s)
            np.testing.assert_allclose(
                fr.tangent.amplitudes, crossed_fields_tangent(s), atol=1e-12
            )
            assert fr.binormal is not None
            np.testing.assert_allclose(
                fr.binormal.amplitudes, crossed_fields_binormal(s), atol=1e-12
            )

    def test_completion_is_singlet(self, crossed_fields_problem):
        # {psi, T, N} all live in the triplet sector, so the lone extra
        # vector must be the singlet (|01> - |10>)/sqrt(2) at every s
        singlet = np.array([0, 1, -1, 0]) / np.sqrt(2)
        for s in (0.0, 0.7):
            fr = build_frame(crossed_fields_problem, s)
            assert len(fr.extra) == 1
            overlap = abs(np.vdot(singlet, fr.extra[0].amplitudes))
            assert overlap == pytest.approx(1.0, abs=1e-12)

    def test_cartan_matrix(self, crossed_fields_problem):
        expected = np.array([[0, 1, 0], [-1, 0, 1], [0, -1, 0]], dtype=complex)
        for s in (0.0, 1.3):
            np.testing.assert_allclose(
                cartan_matrix(crossed_fields_problem, s), expected, atol=1e-12
            )


class TestGeometricPath:
    def test_binormal_raw_is_orthogonal_to_psi_and_tangent(self):
        rng = np.random.default_rng(137)
        for dim in (3, 4, 8):
            prob = random_problem(rng, dim)
            s = float(rng.uniform(0, 2))
            nbar = binormal_raw(prob, s)
            psi = state_at_arclength(prob, s).amplitudes
            tan = tangent(prob, s).amplitudes
            assert abs(np.vdot(psi, nbar)) < 1e-12
            assert abs(np.vdot(tan, nbar)) < 1e-12

    def test_coefficients_constant_along_curve(self):
        rng = np.random.default_rng(139)
        prob = random_problem(rng, 5)
        k0 = curvature_geometric(prob, 0.0)
        t0 = torsion_geometric(prob, 0.0)
        for s in (0.6, 1.7, 3.1):
            assert curvature_geometric(prob, s) == pytest.approx(k0, rel=1e-10)
            assert torsion_geometric(prob, s) == pytest.approx(t0, rel=1e-10, abs=1e-12)

    def test_agrees_with_moment_path(self):
        rng = np.random.default_rng(149)
        for dim in (2, 3, 4, 8):
            for _ in range(10):
                prob = random_problem(rng, dim)
                m = central_moments(prob.hamiltonian, prob.initial_state)
                assert curvature_geometric(prob, 0.0) == pytest.approx(
                    curvature_from_moments(m), rel=1e-10, abs=1e-10
                )
                assert torsion_geometric(prob, 0.0) == pytest.approx(
                    torsion_from_moments(m), rel=1e-8, abs=1e-10
                )

    def test_qubit_curves_are_planar(self):
        rng = np.random.default_rng(151)
        for _ in range(10):
            m = rng.normal(size=3)
            theta, phi = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi)
            state = StateVector(
                [np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)]
            )
            prob = EvolutionProblem(single_qubit(m), state)
            if prob.is_stationary:
                continue
            assert torsion_geometric(prob, 0.3) < 1e-20


class TestBuildFrame:
    def test_frame_is_orthonormal_and_complete(self):
        rng = np.random.default_rng(157)
        for dim in (2, 3, 4, 8):
            prob = random_problem(rng, dim)
            fr = build_frame(prob, float(rng.uniform(0, 2)))
            vecs = np.array([v.amplitudes for v in fr.vectors()])
            assert vecs.shape == (dim, dim)
            np.testing.assert_allclose(
                vecs.conj() @ vecs.T, np.eye(dim), atol=1e-10
            )

    def test_planar_curve_has_no_binormal(self):
        prob = EvolutionProblem(
            single_qubit([0.0, 0.0, 1.0]), StateVector([0.8, 0.6])
        )
        fr = build_frame(prob, 0.5)
        assert fr.binormal is None
        assert len(fr.vectors()) == 2
        # third row and column of the structure matrix stay empty
        np.testing.assert_allclose(fr.cartan[2, :], 0.0, atol=1e-15)
        np.testing.assert_allclose(fr.cartan[:, 2], 0.0, atol=1e-15)

    def test_coefficients_match_standalone_functions(self):
        rng = np.random.default_rng(163)
        prob = random_problem(rng, 4)
        s = 0.8
        fr = build_frame(prob, s)
        assert fr.kappa_sq == pytest.approx(curvature_geometric(prob, s), rel=1e-12)
        assert fr.tau_sq == pytest.approx(torsion_geometric(prob, s), rel=1e-12)

    def test_custom_completion_seed(self, crossed_fields_problem):
        seed = [np.array([0, 1j, -1j, 0]) / np.sqrt(2)]
        fr = build_frame(crossed_fields_problem, 0.0, completion_seed=seed)
        assert len(fr.extra) == 1
        overlap = abs(np.vdot(seed[0], fr.extra[0].amplitudes))
        assert overlap == pytest.approx(1.0, abs=1e-12)


class TestCartanMatrix:
    def test_skew_hermitian(self):
        rng = np.random.default_rng(167)
        for dim in (2, 3, 4, 8):
            for _ in range(5):
                prob = random_problem(rng, dim)
                cart = cartan_matrix(prob, float(rng.uniform(0, 2)))
                np.testing.assert_allclose(cart + cart.conj().T, 0.0, atol=1e-12)

    def test_entries_encode_curvature_and_torsion(self):
        rng = np.random.default_rng(173)
        for dim in (3, 4, 8):
            for _ in range(5):
                prob = random_problem(rng, dim)
                m = central_moments(prob.hamiltonian, prob.initial_state)
                cart = cartan_matrix(prob, 0.0)
                tau = np.sqrt(max(torsion_from_moments(m), 0.0))
                assert abs(cart[1, 2]) == pytest.approx(tau, rel=1e-9, abs=1e-10)
                assert abs(cart[1, 1]) == pytest.approx(abs(m.alpha3), rel=1e-9, abs=1e-10)

    def test_first_row_is_pure_tangent(self):
        rng = np.random.default_rng(179)
        prob = random_problem(rng, 6)
        cart = cartan_matrix(prob, 1.1)
        np.testing.assert_allclose(cart[0], [0, 1, 0], atol=1e-12)

    def test_constant_along_curve(self):
        rng = np.random.default_rng(181)
        prob = random_problem(rng, 4)
        np.testing.assert_allclose(
            cartan_matrix(prob, 0.2), cartan_matrix(prob, 1.9), atol=1e-11
        )

    def test_matches_finite_differences_of_frame(self):
        # the matrix is built from analytic derivatives; check each entry
        # against a central difference of the frame vectors themselves
        rng = np.random.default_rng(191)
        prob = random_problem(rng, 5)
        s, ds = 0.7, 1e-5
        fr = build_frame(prob, s)
        lo = build_frame(prob, s - ds)
        hi = build_frame(prob, s + ds)
        frame_here = fr.vectors()[:3]
        for i, (lo_v, hi_v) in enumerate(
            zip(lo.vectors()[:3], hi.vectors()[:3])
        ):
            deriv = (hi_v.amplitudes - lo_v.amplitudes) / (2 * ds)
            for j in range(3):
                fd = np.vdot(frame_here[j].amplitudes, deriv)
                assert fr.cartan[i, j] == pytest.approx(fd, abs=1e-5)


class TestSigmaZPlane:
    def test_equatorial_rotation_frame(self):
        # sigma_z on |+>: geodesic on the equator, kappa = tau = 0, and the
        # structure matrix reduces to the bare rotation block
        prob = EvolutionProblem(
            single_qubit([0, 0, 1.0]), StateVector(np.array([1, 1]) / np.sqrt(2))
        )
        assert curvature_geometric(prob, 0.0) == pytest.approx(0.0, abs=1e-12)
        assert torsion_geometric(prob, 0.0) == pytest.approx(0.0, abs=1e-12)
        cart = cartan_matrix(prob, 0.0)
        np.testing.assert_allclose(cart[:2, :2], [[0, 1], [-1, 0]], atol=1e-12)

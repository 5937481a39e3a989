import numpy as np
import pytest

from qucurve import (
    EvolutionProblem,
    StateVector,
    StationaryStateError,
    bell_state,
    bloch_to_state,
    central_moments,
    curvature_bloch,
    curvature_from_moments,
    geodesic_efficiency,
    ghz_state,
    heisenberg3,
    heisenberg_ghz_coefficients,
    heisenberg_w_coefficients,
    local_bell_coefficients,
    local_product_coefficients,
    nonlocal_bell_coefficients,
    nonlocal_product_coefficients,
    single_qubit,
    state_to_bloch,
    torsion_bloch,
    torsion_from_moments,
    two_qubit_local,
    two_qubit_nonlocal,
    w_state,
    xi_curvature,
    xi_efficiency,
    xi_kurtosis,
    xi_state,
)


def random_bloch(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


class TestBlochMaps:
    def test_poles_and_equator(self):
        np.testing.assert_allclose(bloch_to_state([0, 0, 1]).amplitudes, [1, 0], atol=1e-15)
        np.testing.assert_allclose(
            np.abs(bloch_to_state([0, 0, -1]).amplitudes), [0, 1], atol=1e-15
        )
        np.testing.assert_allclose(
            bloch_to_state([1, 0, 0]).amplitudes, np.array([1, 1]) / np.sqrt(2), atol=1e-15
        )

    def test_roundtrip(self):
        rng = np.random.default_rng(227)
        for _ in range(10):
            a = random_bloch(rng)
            np.testing.assert_allclose(state_to_bloch(bloch_to_state(a)), a, atol=1e-12)

    def test_circular_state(self):
        plus_i = StateVector(np.array([1, 1j]) / np.sqrt(2))
        np.testing.assert_allclose(state_to_bloch(plus_i), [0, 1, 0], atol=1e-15)

    def test_validation(self):
        with pytest.raises(ValueError, match="unit length"):
            bloch_to_state([0, 0, 2])
        with pytest.raises(ValueError, match="shape"):
            bloch_to_state([1, 0])
        with pytest.raises(ValueError, match="d = 2"):
            state_to_bloch(StateVector([1, 0, 0]))


class TestBlochCurvature:
    def test_tilted_field_on_pole(self):
        # a.m = 1, |m|^2 = 2: kappa^2 = 4/(2-1) = 4
        assert curvature_bloch([0, 0, 1], [1, 0, 1]) == pytest.approx(4.0, rel=1e-14)

    def test_equatorial_states_follow_geodesics(self):
        assert curvature_bloch([1, 0, 0], [0, 0, 2.5]) == pytest.approx(0.0, abs=1e-15)

    def test_matches_moment_pipeline(self):
        rng = np.random.default_rng(229)
        for _ in range(20):
            a = random_bloch(rng)
            m = rng.normal(size=3)
            if abs(np.dot(a, m / np.linalg.norm(m))) > 0.99:
                continue
            ham = single_qubit(m, m0=float(rng.normal()))
            mom = central_moments(ham, bloch_to_state(a))
            assert curvature_bloch(a, m) == pytest.approx(
                curvature_from_moments(mom), rel=1e-9, abs=1e-11
            )
            assert abs(torsion_from_moments(mom)) < 1e-10

    def test_torsion_is_exactly_zero(self):
        assert torsion_bloch([0, 0, 1], [1, 0, 1]) == 0.0

    def test_degenerate_configurations(self):
        with pytest.raises(StationaryStateError):
            curvature_bloch([0, 0, 1], [0, 0, 3.0])  # eigenstate
        with pytest.raises(StationaryStateError):
            curvature_bloch([0, 0, 1], [0, 0, 0])  # no field
        with pytest.raises(StationaryStateError):
            torsion_bloch([1, 0, 0], [2, 0, 0])


class TestStateFactories:
    def test_bell_states(self):
        s = 1 / np.sqrt(2)
        np.testing.assert_allclose(bell_state("phi+").amplitudes, [s, 0, 0, s], atol=1e-15)
        np.testing.assert_allclose(bell_state("phi-").amplitudes, [s, 0, 0, -s], atol=1e-15)
        np.testing.assert_allclose(bell_state("psi+").amplitudes, [0, s, s, 0], atol=1e-15)
        np.testing.assert_allclose(bell_state("psi-").amplitudes, [0, s, -s, 0], atol=1e-15)

    def test_bell_aliases(self):
        np.testing.assert_allclose(
            bell_state("Φ+").amplitudes, bell_state("phi+").amplitudes
        )
        np.testing.assert_allclose(
            bell_state("Ψ-").amplitudes, bell_state("psi-").amplitudes
        )
        np.testing.assert_allclose(
            bell_state("PHI+").amplitudes, bell_state("phi+").amplitudes
        )

    def test_bell_unknown(self):
        with pytest.raises(ValueError, match="unknown Bell state"):
            bell_state("omega")

    def test_ghz_and_w(self):
        ghz = ghz_state().amplitudes
        assert ghz[0] == ghz[7] == pytest.approx(1 / np.sqrt(2))
        assert np.all(ghz[1:7] == 0)
        w = w_state().amplitudes
        assert w[1] == w[2] == w[4] == pytest.approx(1 / np.sqrt(3))
        assert w[0] == w[3] == w[5] == w[6] == w[7] == 0

    def test_xi_state(self):
        np.testing.assert_allclose(xi_state(1.0).amplitudes, [1, 0], atol=1e-15)
        np.testing.assert_allclose(xi_state(0.0).amplitudes, [0, 1], atol=1e-15)
        got = xi_state(0.6, phi=np.pi / 2).amplitudes
        np.testing.assert_allclose(got, [0.6, 0.8j], atol=1e-15)
        with pytest.raises(ValueError, match="xi"):
            xi_state(1.2)


class TestHamiltonianFactories:
    def test_single_qubit_matrices(self):
        np.testing.assert_allclose(
            single_qubit([0, 0, 1]).matrix, np.diag([1.0, -1.0]), atol=1e-15
        )
        np.testing.assert_allclose(
            single_qubit([1, 0, 0], m0=2.0).matrix, [[2, 1], [1, 2]], atol=1e-15
        )

    def test_two_qubit_nonlocal_matrix(self):
        # XX flips both bits, ZZ weighs their parity
        got = two_qubit_nonlocal(1.0, 1.0, 0.0, 0.0).matrix
        expected = np.array(
            [[1, 0, 0, 1], [0, -1, 1, 0], [0, 1, -1, 0], [1, 0, 0, 1]], dtype=complex
        )
        np.testing.assert_allclose(got, expected, atol=1e-15)

    def test_two_qubit_local_matrix(self):
        # first word letter acts on the most significant qubit
        x = np.array([[0, 1], [1, 0]], dtype=complex)
        eye = np.eye(2)
        np.testing.assert_allclose(
            two_qubit_local(1.0, 0.0, 0.0, 0.0).matrix, np.kron(eye, x), atol=1e-15
        )
        np.testing.assert_allclose(
            two_qubit_local(0.0, 1.0, 0.0, 0.0).matrix, np.kron(x, eye), atol=1e-15
        )

    def test_heisenberg3_matrix(self):
        jx, jy, jz, h = 2.0, 1.0, 0.5, 0.3
        expected = np.zeros((8, 8))
        expected[0, 0] = 3 * h + 3 * jz
        for i in (1, 2, 4):
            expected[i, i] = h - jz
        for i in (3, 5, 6):
            expected[i, i] = -h - jz
        expected[7, 7] = 3 * jz - 3 * h
        for i, j in ((0, 3), (0, 5), (0, 6), (1, 7), (2, 7), (4, 7)):
            expected[i, j] = expected[j, i] = jx - jy
        for i, j in ((1, 2), (1, 4), (2, 4), (3, 5), (3, 6), (5, 6)):
            expected[i, j] = expected[j, i] = jx + jy
        np.testing.assert_allclose(heisenberg3(jx, jy, jz, h).matrix, expected, atol=1e-13)


class TestCoefficientFormulas:
    def test_frozen_values(self):
        assert nonlocal_product_coefficients(2, 1, 1, 1) == pytest.approx((1 / 3, 1 / 27))
        assert nonlocal_bell_coefficients(1, 1, 1, 2) == pytest.approx((16.0, 0.0))
        assert local_bell_coefficients(1, 0, 0, 1) == pytest.approx((1.0, 1.0))
        assert local_product_coefficients(1, 1, 0, 0) == pytest.approx((1.0, 1.0))
        assert heisenberg_ghz_coefficients(1, 0, 0, 0) == pytest.approx((4 / 3, 0.0))
        assert heisenberg_w_coefficients(2, 1, 0, 0) == pytest.approx((12.0, 0.0))

    @staticmethod
    def _pipeline(ham, state):
        m = central_moments(ham, state)
        return curvature_from_moments(m), torsion_from_moments(m)

    def test_nonlocal_product_matches_pipeline(self):
        rng = np.random.default_rng(233)
        zero_zero = StateVector([1, 0, 0, 0])
        for _ in range(15):
            ms = rng.uniform(-2, 2, size=4)
            k, t = self._pipeline(two_qubit_nonlocal(*ms), zero_zero)
            ek, et = nonlocal_product_coefficients(*ms)
            assert k == pytest.approx(ek, rel=1e-9, abs=1e-10)
            assert t == pytest.approx(et, rel=1e-9, abs=1e-10)

    def test_nonlocal_bell_matches_pipeline(self):
        rng = np.random.default_rng(239)
        phi_plus = bell_state("phi+")
        for _ in range(15):
            ms = rng.uniform(-2, 2, size=4)
            k, t = self._pipeline(two_qubit_nonlocal(*ms), phi_plus)
            ek, _ = nonlocal_bell_coefficients(*ms)
            assert k == pytest.approx(ek, rel=1e-9, abs=1e-10)
            assert abs(t) < 1e-10

    def test_local_bell_matches_pipeline(self):
        rng = np.random.default_rng(241)
        phi_plus = bell_state("phi+")
        for _ in range(15):
            ms = rng.uniform(-2, 2, size=4)
            k, t = self._pipeline(two_qubit_local(*ms), phi_plus)
            ek, et = local_bell_coefficients(*ms)
            assert k == pytest.approx(ek, rel=1e-9, abs=1e-10)
            assert t == pytest.approx(et, rel=1e-9, abs=1e-10)

    def test_local_product_matches_pipeline(self):
        rng = np.random.default_rng(251)
        zero_zero = StateVector([1, 0, 0, 0])
        for _ in range(15):
            ms = rng.uniform(-2, 2, size=4)
            k, t = self._pipeline(two_qubit_local(*ms), zero_zero)
            ek, et = local_product_coefficients(*ms)
            assert k == pytest.approx(ek, rel=1e-9, abs=1e-10)
            assert t == pytest.approx(et, rel=1e-9, abs=1e-10)

    def test_heisenberg_matches_pipeline(self):
        rng = np.random.default_rng(257)
        for _ in range(15):
            js = rng.uniform(-2, 2, size=3)
            h = rng.uniform(-2, 2)
            k, t = self._pipeline(heisenberg3(*js, h), ghz_state())
            ek, et = heisenberg_ghz_coefficients(*js, h)
            assert k == pytest.approx(ek, rel=1e-8, abs=1e-9)
            assert t == pytest.approx(et, rel=1e-8, abs=1e-9)
            k, t = self._pipeline(heisenberg3(*js, h), w_state())
            ek, et = heisenberg_w_coefficients(*js, h)
            assert k == pytest.approx(ek, rel=1e-8, abs=1e-9)
            assert abs(t) < 1e-9

    def test_ghz_isotropic_limit_is_geodesic(self):
        # at j_x = j_y the shared anisotropy factor kills both coefficients,
        # and the pipeline agrees: the GHZ curve becomes a geodesic
        assert heisenberg_ghz_coefficients(1.0, 1.0, 0.5, 0.7) == (0.0, 0.0)
        k, t = self._pipeline(heisenberg3(1.0, 1.0, 0.5, 0.7), ghz_state())
        assert abs(k) < 1e-12
        assert abs(t) < 1e-12

    def test_degenerate_guards(self):
        with pytest.raises(StationaryStateError):
            nonlocal_product_coefficients(0, 1, 0, 0)
        with pytest.raises(StationaryStateError):
            nonlocal_bell_coefficients(1, 1, 0.5, 0.5)
        with pytest.raises(StationaryStateError):
            local_bell_coefficients(1, -1, 2, -2)
        with pytest.raises(StationaryStateError):
            local_product_coefficients(0, 0, 1, 1)
        with pytest.raises(StationaryStateError):
            heisenberg_ghz_coefficients(1, 1, 0, 0)
        with pytest.raises(StationaryStateError):
            heisenberg_w_coefficients(1, 1, 0.5, 2)


class TestXiFamily:
    XI_ZERO = np.sqrt(2 + np.sqrt(2)) / 2

    def test_anchor_values(self):
        assert xi_curvature(self.XI_ZERO) == pytest.approx(4.0, rel=1e-12)
        assert xi_curvature(1 / np.sqrt(2)) == pytest.approx(0.0, abs=1e-15)

    def test_kurtosis_offset(self):
        for xi in np.linspace(0.05, 0.95, 19):
            assert xi_kurtosis(xi) == pytest.approx(xi_curvature(xi) + 1.0, rel=1e-12)

    def test_curvature_matches_pipeline(self):
        for xi in (0.2, 0.55, 0.9):
            mom = central_moments(single_qubit([0, 0, 1.5]), xi_state(xi))
            assert xi_curvature(xi) == pytest.approx(
                curvature_from_moments(mom), rel=1e-10, abs=1e-12
            )

    def test_eigenstate_endpoints_rejected(self):
        for xi in (0.0, 1.0):
            with pytest.raises(StationaryStateError):
                xi_curvature(xi)
            with pytest.raises(StationaryStateError):
                xi_kurtosis(xi)


class TestEfficiency:
    def test_balanced_superposition_is_geodesic(self):
        prob = EvolutionProblem(single_qubit([0, 0, 1.0]), xi_state(1 / np.sqrt(2)))
        for t in (0.2, 0.8, 1.4):
            assert geodesic_efficiency(prob, t) == pytest.approx(1.0, abs=1e-12)
            assert xi_efficiency(t, 1 / np.sqrt(2)) == pytest.approx(1.0, abs=1e-12)

    def test_closed_form_matches_pipeline(self):
        m = 1.3
        for xi in (0.3, 0.6, 0.85):
            prob = EvolutionProblem(single_qubit([0, 0, m]), xi_state(xi))
            for t in (0.4, 1.1):
                assert geodesic_efficiency(prob, t) == pytest.approx(
                    xi_efficiency(t, xi, m), rel=1e-10
                )

    def test_never_exceeds_unity(self):
        for xi in np.linspace(0.1, 0.9, 9):
            assert xi_efficiency(0.7, xi) <= 1.0 + 1e-12

    def test_invalid_time(self):
        prob = EvolutionProblem(single_qubit([0, 0, 1.0]), xi_state(0.5))
        with pytest.raises(ValueError, match="positive"):
            geodesic_efficiency(prob, 0.0)
        with pytest.raises(ValueError, match="positive"):
            xi_efficiency(-1.0, 0.5)

    def test_stationary_state(self):
        prob = EvolutionProblem(single_qubit([0, 0, 1.0]), StateVector([1, 0]))
        with pytest.raises(StationaryStateError):
            geodesic_efficiency(prob, 1.0)

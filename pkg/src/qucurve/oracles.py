"""Independent numerical checks of the curvature and torsion coefficients.

The moment formulas and the projector construction share code paths with the
rest of the library, so this module derives the same quantities a third way,
from physically measurable data only:

* curvature -- how fast the true evolution peels away from the Fubini-Study
  geodesic through its endpoints; the minimal squared distance grows as
  (mu4 - mu2^2) * (gamma^2/4) * dt^4;
* torsion -- how fast the state leaves the plane spanned by two earlier
  snapshots; the out-of-plane weight grows as tau^2 * mu2^2 * dt^4.

Fitting the quartic coefficients on a small grid of time steps and dividing
by mu2^2 recovers the dimensionless kappa^2 and tau^2.

A sampled-space-curve Frenet-Serret extractor is included so the quantum
quantities can be checked against ordinary curves in R^3 (e.g. circles on a
sphere, whose geodesic curvature the quantum curvature reproduces up to a
factor 4R^2).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .evolution import EvolutionProblem, evolve
from .hilbert import StateVector, _as_vector, gram_schmidt
from .moments import central_moments

__all__ = [
    "FitResult",
    "SpaceCurveSamples",
    "fubini_study_sq",
    "geodesic_interpolate",
    "fit_curvature_coefficient",
    "fit_torsion_coefficient",
    "normalized_fit",
    "classical_frenet_serret",
    "sphere_geodesic_curvature",
]

_OVERLAP_TOL = 1e-10


@dataclass(frozen=True)
class FitResult:
    """Outcome of a through-origin quartic fit y = C * dt^4.

    ``coefficient`` is already converted to the physical constant named by
    the fitting routine (see its docstring), ``residual`` is the relative
    L2 misfit of the quartic model on the grid.
    """

    coefficient: float
    residual: float
    dt_grid: tuple[float, ...]


@dataclass(frozen=True)
class SpaceCurveSamples:
    """A curve in R^3 sampled on a strictly increasing parameter grid."""

    parameter: np.ndarray
    points: np.ndarray  # shape (n, 3)

    def __post_init__(self):
        t = np.asarray(self.parameter, dtype=float)
        p = np.asarray(self.points, dtype=float)
        if t.ndim != 1 or p.shape != (t.shape[0], 3):
            raise ValueError(f"expected (n,) parameters and (n, 3) points, got {t.shape}, {p.shape}")
        if t.shape[0] < 5:
            raise ValueError("need at least 5 samples for third-order differences")
        if np.any(np.diff(t) <= 0):
            raise ValueError("parameter grid must be strictly increasing")
        object.__setattr__(self, "parameter", t)
        object.__setattr__(self, "points", p)


def fubini_study_sq(psi1, psi2, gamma: float = 2.0) -> float:
    """Squared chordal Fubini-Study distance gamma^2 (1 - |<psi1|psi2>|^2).

    Computed as the squared norm of psi2 minus its projection onto psi1,
    which is algebraically identical for unit vectors but does not lose
    precision when the states nearly coincide -- near-zero distances come out
    at the 1e-30 level instead of drowning in 1e-16 cancellation noise.
    """
    a = _as_vector(psi1)
    b = _as_vector(psi2)
    r = b - a * np.vdot(a, b)
    return float(gamma**2 * np.vdot(r, r).real)


def geodesic_interpolate(psi_i, psi_f, xi: float) -> StateVector:
    """Point at fraction xi along the Fubini-Study geodesic between two states.

    The geodesic blends the endpoints with the relative phase of the final
    state aligned to the initial one:

        [ (1-xi) psi_i + xi * (z/|z|) psi_f ] / sqrt(1 - 2 xi (1-xi) (1-|z|)),

    with z = <psi_f|psi_i>.  Endpoints are required to be non-orthogonal
    (|z| > 1e-10); at xi = 0 or 1 the corresponding endpoint is returned up
    to a global phase.
    """
    if not 0.0 <= xi <= 1.0:
        raise ValueError(f"xi must lie in [0, 1], got {xi}")
    a = _as_vector(psi_i)
    b = _as_vector(psi_f)
    z = complex(np.vdot(b, a))
    if abs(z) <= _OVERLAP_TOL:
        raise ValueError("geodesic undefined: endpoint states are orthogonal")
    blend = (1.0 - xi) * a + xi * (z / abs(z)) * b
    norm_sq = 1.0 - 2.0 * xi * (1.0 - xi) * (1.0 - abs(z))
    return StateVector(blend / np.sqrt(norm_sq))


def _golden_minimize(f, lo: float, hi: float, xtol: float = 1e-10) -> tuple[float, float]:
    """Golden-section minimum of a unimodal f on [lo, hi]; returns (x, f(x))."""
    invphi = (np.sqrt(5.0) - 1.0) / 2.0
    a, b = lo, hi
    c = b - invphi * (b - a)
    d = a + invphi * (b - a)
    fc, fd = f(c), f(d)
    while b - a > xtol:
        if fc < fd:
            b, d, fd = d, c, fc
            c = b - invphi * (b - a)
            fc = f(c)
        else:
            a, c, fc = c, d, fd
            d = a + invphi * (b - a)
            fd = f(d)
    return (c, fc) if fc < fd else (d, fd)


def _min_geodesic_deviation(problem: EvolutionProblem, dt: float, gamma: float) -> float:
    """min over xi of d^2( psi(dt), geodesic(psi(0) -> psi(2 dt); xi) )."""
    psi0 = problem.initial_state
    psi_mid = evolve(problem, dt)
    psi_end = evolve(problem, 2.0 * dt)

    def dev(xi):
        return fubini_study_sq(psi_mid, geodesic_interpolate(psi0, psi_end, xi), gamma)

    # Coarse scan seeds the bracket; the deviation is smooth and, for small
    # dt, very nearly quadratic around a single interior minimum.
    grid = np.linspace(0.0, 1.0, 65)
    vals = [dev(x) for x in grid]
    i = int(np.argmin(vals))
    lo = grid[max(i - 1, 0)]
    hi = grid[min(i + 1, len(grid) - 1)]
    _, fmin = _golden_minimize(dev, lo, hi)
    return min(fmin, vals[i])


def _fit_quartic(dt_grid, values) -> tuple[float, float]:
    """Least-squares C for y = C dt^4 through the origin, plus relative misfit."""
    x = np.asarray(dt_grid, dtype=float) ** 4
    y = np.asarray(values, dtype=float)
    coeff = float(np.dot(x, y) / np.dot(x, x))
    norm = float(np.linalg.norm(y))
    if norm == 0.0:
        return coeff, 0.0
    residual = float(np.linalg.norm(y - coeff * x) / norm)
    return coeff, residual


def _check_grid(problem: EvolutionProblem, dt_grid):
    dts = tuple(float(dt) for dt in dt_grid)
    if len(dts) < 2 or any(dt <= 0 for dt in dts):
        raise ValueError("dt_grid must contain at least two positive steps")
    worst = max(dts) * problem.speed
    if worst > 0.1:
        warnings.warn(
            f"largest step has dt*v = {worst:.3g} > 0.1; quartic scaling may not dominate",
            stacklevel=3,
        )
    return dts


def fit_curvature_coefficient(
    problem: EvolutionProblem, dt_grid, gamma: float = 2.0
) -> FitResult:
    """Curvature constant mu4 - mu2^2 from geodesic-deviation scaling.

    For each step dt, the evolved midpoint psi(dt) is compared against the
    geodesic through psi(0) and psi(2 dt); the minimal squared distance is
    fitted to C dt^4 and the returned coefficient is 4 C / gamma^2, which
    approaches mu4 - mu2^2 as dt -> 0.  Dividing by mu2^2 gives kappa^2.

    Raises
    ------
    ValueError
        If the quartic model misfits by more than 5%, or endpoints degenerate.
    StationaryStateError
        For an eigenstate input.
    """
    problem._require_moving()
    dts = _check_grid(problem, dt_grid)
    values = [_min_geodesic_deviation(problem, dt, gamma) for dt in dts]
    coeff, residual = _fit_quartic(dts, values)
    if residual > 0.05:
        raise ValueError(f"quartic fit residual {residual:.3g} exceeds 5%")
    return FitResult(coefficient=4.0 * coeff / gamma**2, residual=residual, dt_grid=dts)


def fit_torsion_coefficient(problem: EvolutionProblem, dt_grid) -> FitResult:
    """Torsion constant tau^2 mu2^2 from plane-deviation scaling.

    The plane is spanned by the snapshots psi(0) and psi(dt); the weight of
    psi(2 dt) outside it, computed as an explicit residual norm, is fitted to
    C dt^4.  The coefficient C itself is returned; dividing by mu2^2 gives
    tau^2.  For any single-qubit problem the plane is the whole space and the
    coefficient vanishes identically.
    """
    problem._require_moving()
    dts = _check_grid(problem, dt_grid)
    values = []
    for dt in dts:
        psi0 = problem.initial_state.amplitudes
        mid = evolve(problem, dt).amplitudes
        end = evolve(problem, 2.0 * dt).amplitudes
        plane = gram_schmidt([psi0, mid])
        r = end.copy()
        for q in plane:
            r -= q * np.vdot(q, r)
        values.append(float(np.vdot(r, r).real))
    coeff, residual = _fit_quartic(dts, values)
    return FitResult(coefficient=coeff, residual=residual, dt_grid=dts)


def normalized_fit(problem: EvolutionProblem, fit: FitResult) -> float:
    """Divide a fitted quartic constant by mu2^2, yielding kappa^2 or tau^2."""
    mom = central_moments(problem.hamiltonian, problem.initial_state)
    return fit.coefficient / mom.mu2**2


def classical_frenet_serret(samples: SpaceCurveSamples) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pointwise curvature and torsion of a sampled space curve.

    Second-order central-difference stencils applied directly to the raw
    samples give r', r'', r''' at interior points (two samples trimmed at
    each end, where the five-point stencil for r''' does not fit), and the
    classical formulas

        kappa = |r' x r''| / |r'|^3
        tau   = (r' x r'') . r''' / |r' x r''|^2

    are evaluated there.  The parameter grid must be uniform: classical
    central stencils lose their error cancellation on irregular spacing.

    Returns
    -------
    (parameter, kappa, tau) : three aligned 1-d arrays over interior samples.
    """
    t = samples.parameter
    r = samples.points
    steps = np.diff(t)
    h = float(steps[0])
    if np.max(np.abs(steps - h)) > 1e-9 * h:
        raise ValueError("parameter grid must be uniformly spaced")

    sl = slice(2, -2)
    d1 = (r[3:-1] - r[1:-3]) / (2.0 * h)
    d2 = (r[3:-1] - 2.0 * r[2:-2] + r[1:-3]) / h**2
    d3 = (r[4:] - 2.0 * r[3:-1] + 2.0 * r[1:-3] - r[:-4]) / (2.0 * h**3)

    cross = np.cross(d1, d2)
    cross_norm = np.linalg.norm(cross, axis=1)
    speed = np.linalg.norm(d1, axis=1)
    # The second-difference stencil carries rounding of order eps*|r|/h^2, so
    # a cross product at that level (or a speed at the first-difference analog)
    # is indistinguishable from a straight or stalled curve and the division
    # below would amplify pure noise.
    noise = 64.0 * np.finfo(float).eps * float(np.max(np.abs(r)) + 1.0) / h**2
    if np.any(speed <= noise * h) or np.any(cross_norm <= speed * noise):
        raise ValueError("degenerate samples: vanishing speed or curvature")
    kappa = cross_norm / speed**3
    tau = np.einsum("ij,ij->i", cross, d3) / cross_norm**2
    return t[sl], kappa, tau


def sphere_geodesic_curvature(theta: float, radius: float) -> float:
    """Geodesic curvature cot(theta)/R of the colatitude-theta circle on a
    radius-R sphere; zero at the equator (a great circle)."""
    if not 0.0 < theta < np.pi:
        raise ValueError(f"theta must lie in (0, pi), got {theta}")
    if radius <= 0.0:
        raise ValueError(f"radius must be positive, got {radius}")
    return 1.0 / (np.tan(theta) * radius)

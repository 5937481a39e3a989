"""Central moments of a Hamiltonian in a state, and the geometry they encode.

With dh = (H - <H>)/sqrt(mu2) the standardized energy fluctuation, the
curvature and torsion coefficients of the evolution curve are pure moment
combinations:

    kappa^2 = <(dh)^4> - 1           = alpha4 - 1
    tau^2   = alpha4 - 1 - alpha3^2

where alpha3 = mu3 / mu2^(3/2) is the skewness and alpha4 = mu4 / mu2^2 the
kurtosis of the energy distribution.  The Pearson inequality
alpha4 >= 1 + alpha3^2 therefore guarantees tau^2 >= 0, and its gap equals
the torsion.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .evolution import _STATIONARY_MU2_TOL, StationaryStateError
from .hilbert import HermitianOperator, StateVector

__all__ = [
    "MomentSet",
    "central_moments",
    "curvature_from_moments",
    "torsion_from_moments",
    "pearson_gap",
]


@dataclass(frozen=True)
class MomentSet:
    """Central moments mu_r = <(H - <H>)^r> up to r = 4, plus standardized ratios.

    ``alpha3`` and ``alpha4`` are None when the state is (numerically) an
    eigenstate: with mu2 ~ 0 the ratios are undefined.
    """

    mean: float
    mu2: float
    mu3: float
    mu4: float
    alpha3: float | None
    alpha4: float | None

    @property
    def is_stationary(self) -> bool:
        return self.alpha4 is None


def central_moments(hamiltonian: HermitianOperator, state: StateVector) -> MomentSet:
    """Compute <H> and central moments mu2..mu4 of H in a pure state.

    Uses repeated matrix-vector products with (H - <H> I): with
    w1 = (H-<H>)psi and w2 = (H-<H>)w1,

        mu2 = <w1|w1>,  mu3 = <w1|w2>,  mu4 = <w2|w2>,

    so mu2 and mu4 are nonnegative by construction and mu3 is real up to
    rounding.  This costs O(d^2) and avoids forming matrix powers.
    """
    if hamiltonian.dim != state.dim:
        raise ValueError(f"dimension mismatch: operator {hamiltonian.dim}, state {state.dim}")
    psi = state.amplitudes
    mean = float(np.vdot(psi, hamiltonian.matrix @ psi).real)
    w1 = hamiltonian.matrix @ psi - mean * psi
    w2 = hamiltonian.matrix @ w1 - mean * w1
    mu2 = float(np.vdot(w1, w1).real)
    mu3 = float(np.vdot(w1, w2).real)
    mu4 = float(np.vdot(w2, w2).real)

    scale = max(1.0, float(np.sum(np.abs(hamiltonian.matrix) ** 2)))  # ||H||_F^2
    if mu2 <= _STATIONARY_MU2_TOL * scale:
        alpha3 = alpha4 = None
    else:
        alpha3 = mu3 / mu2**1.5
        alpha4 = mu4 / mu2**2
    return MomentSet(mean=mean, mu2=mu2, mu3=mu3, mu4=mu4, alpha3=alpha3, alpha4=alpha4)


def _require_moving(m: MomentSet):
    if m.is_stationary:
        raise StationaryStateError("stationary state: arc length undefined")


def curvature_from_moments(m: MomentSet) -> float:
    """Squared curvature coefficient kappa^2 = mu4/mu2^2 - 1 (dimensionless).

    Nonnegative because the variance of (H-<H>)^2 is mu4 - mu2^2 >= 0;
    rounding may produce values as low as -1e-12 near zero.
    """
    _require_moving(m)
    return m.alpha4 - 1.0


def torsion_from_moments(m: MomentSet) -> float:
    """Squared torsion coefficient tau^2 = alpha4 - 1 - alpha3^2.

    Returned raw: tiny negative values (>= -1e-9) are rounding noise on
    exactly-zero torsion and are left to display layers to clamp.
    """
    _require_moving(m)
    return m.alpha4 - 1.0 - m.alpha3**2


def pearson_gap(m: MomentSet) -> float:
    """Slack alpha4 - alpha3^2 - 1 in the Pearson moment inequality.

    Coincides with tau^2; exposed under its statistical name so reports can
    quote how far the energy distribution is from the saturating family.
    """
    return torsion_from_moments(m)

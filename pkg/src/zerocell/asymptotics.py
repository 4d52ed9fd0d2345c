"""Limit formulas and exponential profiles, plus exact-vs-asymptotic
convergence diagnostics.

The profile of the zero-cell face counts along k ~ lambda d is parametrized
through psi(lambda), the unique root of 1 - lambda = psi cot psi in
(0, pi/2); y cot y decays there continuously from 1 to 0, so bisection is
exact and monotone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import angles, facecounts
from .numerics import (DomainError, QuadratureSettings, bisect_root,
                       log_gamma, maximize_unimodal)

_LOG_PI = math.log(math.pi)

CONVERGENCE_QUANTITIES = ("a", "zerocell", "poly", "angle", "secmoment")


@dataclass(frozen=True)
class ProfilePoint:
    """One profile sample: lam in (0,1), psi = psi(lam), profile value."""

    lam: float
    psi: float
    value: float

    def __post_init__(self):
        if not 0.0 < self.lam < 1.0:
            raise DomainError("lam must lie in (0, 1)")
        if not 0.0 < self.psi < 0.5 * math.pi:
            raise DomainError("psi must lie in (0, pi/2)")
        residual = abs((1.0 - self.lam) - self.psi / math.tan(self.psi))
        if residual > 1e-12:
            raise DomainError(f"psi does not solve its equation: "
                              f"residual {residual:.2e}")
        if not math.isfinite(self.value):
            raise DomainError("profile value must be finite")


@dataclass(frozen=True)
class ConvergenceRow:
    """Exact value, asymptotic value, and their ratio at one dimension."""

    d: int
    exact: float
    asymptotic: float
    ratio: float


def a_number_limit_constant(k: int) -> float:
    """lim A[d,k]/d^(3k/2) = 1/(6^(k/2) Gamma(k/2 + 1)); zero at the Gamma
    poles k = -2, -4, ..."""
    if k < 0 and k % 2 == 0:
        return 0.0
    return 6.0 ** (-k / 2.0) / math.gamma(k / 2.0 + 1.0)


def zero_cell_facecount_asymptotic(d: int, k: int) -> float:
    """Large-d form of the expected (d-k)-face count of the zero cell:
    d^(3k/2) / (k! Gamma(k/2+1)) * (pi/sqrt(6))^k."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return math.exp(1.5 * k * math.log(d) - log_gamma(k + 1.0)
                    - log_gamma(k / 2.0 + 1.0)
                    + k * (_LOG_PI - 0.5 * math.log(6.0)))


def poisson_polyhedron_facecount_asymptotic(d: int, k: int,
                                            alpha: float) -> float:
    """Large-d form of the expected (k-1)-face count of the Poisson
    polyhedron:

        d^(k(1+alpha/2)) / (k! Gamma(alpha k/2 + 1)) *
        (alpha sqrt(pi) Gamma(alpha/2) /
         (Gamma((alpha+1)/2) (2 + 4/alpha)^(alpha/2)))^k.

    At alpha = 1 this reduces exactly to
    :func:`zero_cell_facecount_asymptotic`."""
    if k < 1:
        raise DomainError("k must be >= 1")
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    log_const = (math.log(alpha) + 0.5 * _LOG_PI
                 + log_gamma(alpha / 2.0) - log_gamma((alpha + 1.0) / 2.0)
                 - (alpha / 2.0) * math.log(2.0 + 4.0 / alpha))
    return math.exp(k * (1.0 + alpha / 2.0) * math.log(d)
                    - log_gamma(k + 1.0) - log_gamma(alpha * k / 2.0 + 1.0)
                    + k * log_const)


def psi(lam: float) -> float:
    """Root of 1 - lam = y cot y in (0, pi/2); strictly increasing in lam."""
    if not 0.0 < lam < 1.0:
        raise DomainError("lam must lie in (0, 1)")
    target = 1.0 - lam
    return bisect_root(lambda y: y * math.cos(y) / math.sin(y) - target,
                       1e-12, 0.5 * math.pi - 1e-12, 1e-13)


def psi_grid(lams: np.ndarray) -> np.ndarray:
    """Vectorized bisection version of :func:`psi` for large grids."""
    lams = np.asarray(lams, dtype=float)
    if np.any(lams <= 0.0) or np.any(lams >= 1.0):
        raise DomainError("lam values must lie in (0, 1)")
    lo = np.full_like(lams, 1e-12)
    hi = np.full_like(lams, 0.5 * math.pi - 1e-12)
    target = 1.0 - lams
    for _ in range(52):
        mid = 0.5 * (lo + hi)
        too_low = mid / np.tan(mid) > target  # y cot y decreasing
        lo = np.where(too_low, mid, lo)
        hi = np.where(too_low, hi, mid)
    return 0.5 * (lo + hi)


def _entropy(lam: float) -> float:
    # binary entropy in nats with the 0 log 0 = 0 endpoint convention
    acc = 0.0
    if lam > 0.0:
        acc -= lam * math.log(lam)
    if lam < 1.0:
        acc -= (1.0 - lam) * math.log(1.0 - lam)
    return acc


def exponential_profile(lam: float) -> float:
    """Limit of (1/d) log of the expected face count along k ~ lam d:

        lam log pi + H(lam) + (1-lam) log psi(lam) - log sin psi(lam).
    """
    p = psi(lam)
    return (lam * _LOG_PI + _entropy(lam)
            + (1.0 - lam) * math.log(p) - math.log(math.sin(p)))


def profile_maximizer() -> tuple[float, float]:
    """(argmax, max) of :func:`exponential_profile` on (0, 1)."""
    return maximize_unimodal(exponential_profile, 1e-6, 1.0 - 1e-6, 1e-9)


def second_moment_profile(lam: float) -> float:
    """Exponential profile of the typical-cell vertex second moment:
    log 2 + lam log(pi/2) + H(lam); endpoints log 2 and log pi by
    continuity."""
    if not 0.0 <= lam <= 1.0:
        raise DomainError("lam must lie in [0, 1]")
    return math.log(2.0) + lam * math.log(0.5 * math.pi) + _entropy(lam)


def second_moment_profile_max() -> tuple[float, float]:
    """Closed-form maximizer (pi/(pi+2), log(pi+2)) of the second-moment
    profile."""
    lam0 = math.pi / (math.pi + 2.0)
    return lam0, math.log(math.pi + 2.0)


def fixed_coface_asymptotic(d: int, ell: int, alpha: float) -> float:
    """Large-d expected count of (d-ell-1)-faces of the Poisson polyhedron:

        sqrt(alpha)/2^(ell-1/2) * (Gamma(alpha/2)/Gamma((alpha+1)/2))^d
        * (sqrt(pi) alpha)^(d-1) / ell! * d^(ell-1/2).
    """
    if d < 1 or ell < 0:
        raise DomainError("require d >= 1 and ell >= 0")
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    return math.exp(0.5 * math.log(alpha) - (ell - 0.5) * math.log(2.0)
                    + d * (log_gamma(alpha / 2.0)
                           - log_gamma((alpha + 1.0) / 2.0))
                    + (d - 1.0) * (0.5 * _LOG_PI + math.log(alpha))
                    - log_gamma(ell + 1.0) + (ell - 0.5) * math.log(d))


def fixed_coface_relative(d: int, ell: int) -> float:
    """Companion ratio (d/2)^ell / ell! of the fixed-coface counts relative
    to ell = 0; the crosspolytope f-vector exhibits the same ratio."""
    if d < 1 or ell < 0:
        raise DomainError("require d >= 1 and ell >= 0")
    return math.exp(ell * math.log(d / 2.0) - log_gamma(ell + 1.0))


def ball_volume(j: int) -> float:
    """Volume kappa_j = pi^(j/2) / Gamma(j/2 + 1) of the unit j-ball."""
    if j < 0:
        raise DomainError("j must be nonnegative")
    return math.exp(0.5 * j * _LOG_PI - log_gamma(j / 2.0 + 1.0))


def p_k(k: int) -> float:
    """Volume of the k-ball of radius 1/2: pi^(k/2) / (2^k Gamma(k/2+1)).

    Below 1 for every k >= 2 (the ball fits inside the unit cube).
    """
    if k < 0:
        raise DomainError("k must be nonnegative")
    return math.exp(0.5 * k * _LOG_PI - k * math.log(2.0)
                    - log_gamma(k / 2.0 + 1.0))


def cube_simplex_profiles(lam: float) -> tuple[float, float]:
    """Exponential profiles of the cube and simplex f-vectors along
    k ~ lam d: ((log 2)(1-lam) + H(lam), H(lam))."""
    if not 0.0 < lam < 1.0:
        raise DomainError("lam must lie in (0, 1)")
    h = _entropy(lam)
    return (math.log(2.0) * (1.0 - lam) + h, h)


def profile_grid(n: int) -> list[ProfilePoint]:
    """The face-count profile on an n-point uniform open grid of (0, 1)."""
    if n < 1:
        raise DomainError("grid size must be >= 1")
    lams = np.arange(1, n + 1) / (n + 1.0)
    psis = psi_grid(lams)
    ent = -(lams * np.log(lams) + (1.0 - lams) * np.log(1.0 - lams))
    values = lams * _LOG_PI + ent + (1.0 - lams) * np.log(psis) - np.log(
        np.sin(psis))
    return [ProfilePoint(float(l), float(p), float(v))
            for l, p, v in zip(lams, psis, values)]


def second_moment_profile_grid(n: int) -> list[ProfilePoint]:
    """The second-moment profile on the same grid (psi is reported for
    schema uniformity)."""
    if n < 1:
        raise DomainError("grid size must be >= 1")
    lams = np.arange(1, n + 1) / (n + 1.0)
    psis = psi_grid(lams)
    return [ProfilePoint(float(l), float(p), second_moment_profile(float(l)))
            for l, p in zip(lams, psis)]


def _row_a(params, settings):
    k = int(params["k"])
    const = a_number_limit_constant(k)

    def row(d):
        from .anumbers import a_number
        exact = a_number(d, k, settings)
        asympt = const * d ** (1.5 * k)
        return ConvergenceRow(d, exact, asympt, exact / asympt)

    return row


def _row_zerocell(params, settings):
    k = int(params["k"])

    def row(d):
        log_exact = facecounts.zero_cell_expected_faces_log(d, d - k,
                                                            settings)
        asympt = zero_cell_facecount_asymptotic(d, k)
        ratio = math.exp(log_exact - math.log(asympt))
        return ConvergenceRow(d, math.exp(log_exact), asympt, ratio)

    return row


def _row_poly(params, settings):
    k = int(params["k"])
    alpha = float(params.get("alpha", 1.0))

    def row(d):
        log_exact = facecounts.poisson_polyhedron_expected_faces_log(
            d, k, alpha, settings)
        asympt = poisson_polyhedron_facecount_asymptotic(d, k, alpha)
        ratio = math.exp(log_exact - math.log(asympt))
        return ConvergenceRow(d, math.exp(log_exact), asympt, ratio)

    return row


def _row_angle(params, settings):
    ell = int(params.get("ell", 0))

    def row(d):
        # angles decay like pi^-d; the ratio must be formed in log scale
        if ell == 0:
            log_exact = angles.halfsphere_angle_reduced_log(d, settings)
        else:
            log_exact = angles.halfsphere_angle_exact_log(d, ell, settings)
        log_asympt = angles.halfsphere_angle_asymptotic_log(d, ell)
        return ConvergenceRow(d, math.exp(log_exact), math.exp(log_asympt),
                              math.exp(log_exact - log_asympt))

    return row


def _row_secmoment(params, settings):
    limit = math.log(math.pi + 2.0)

    def row(d):
        exact = facecounts.typical_cell_vertex_second_moment_log(d) / d
        return ConvergenceRow(d, exact, limit, exact / limit)

    return row


_ROW_BUILDERS = {
    "a": _row_a,
    "zerocell": _row_zerocell,
    "poly": _row_poly,
    "angle": _row_angle,
    "secmoment": _row_secmoment,
}


def convergence_table(quantity_id: str, fixed_params: dict,
                      d_list: Sequence[int],
                      settings: QuadratureSettings | None = None,
                      ) -> list[ConvergenceRow]:
    """Exact-vs-asymptotic rows for one of the paired quantities.

    quantity ids: "a" (needs k), "zerocell" (k), "poly" (k, alpha),
    "angle" (ell), "secmoment" (no parameters; the exact column is the
    per-dimension log of the second moment over d, the asymptotic column
    its limit).
    """
    if quantity_id not in _ROW_BUILDERS:
        raise DomainError(f"unknown quantity {quantity_id!r}; choose from "
                          f"{CONVERGENCE_QUANTITIES}")
    row_fn = _ROW_BUILDERS[quantity_id](fixed_params, settings)
    rows = []
    for d in d_list:
        d = int(d)
        if d < 1:
            raise DomainError("dimensions must be positive")
        rows.append(row_fn(d))
    return rows

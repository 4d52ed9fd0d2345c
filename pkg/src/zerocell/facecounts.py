"""Exact expected face numbers of the zero cell, the Poisson polyhedron and
the typical cell, plus deterministic reference f-vectors.

The zero cell of the unit-intensity isotropic Poisson hyperplane tessellation
has expected ell-face count pi^(d-ell)/(d-ell)! * A[d, d-ell]; the convex
hull of the power-law Poisson process with exponent -(d+alpha) has expected
(k-1)-face count alpha^d C(d,k) (2 c(alpha))^k T_{d,k}(alpha).  Both are
assembled in log scale from the signed-log evaluators in
:mod:`zerocell.anumbers`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .anumbers import a_number_signed_log, c_alpha, t_number_signed_log
from .numerics import (DomainError, NumericError, QuadratureSettings,
                       log_gamma)

_LOG_PI = math.log(math.pi)

REFERENCE_SHAPES = ("cube", "simplex", "crosspolytope")


@dataclass(frozen=True)
class FVector:
    """Face counts indexed by face dimension 0..d, with counts[d] = 1 for a
    single polytope (expectations otherwise).

    The uniform convention counts[d] = 1 makes the Euler relation read
    sum (-1)^ell counts[ell] = 1 for every d.
    """

    dim: int
    counts: tuple[float, ...]

    def __post_init__(self):
        if self.dim < 1:
            raise DomainError("dimension must be positive")
        if len(self.counts) != self.dim + 1:
            raise DomainError("counts must have d+1 entries")
        if any(not math.isfinite(c) or c < 0.0 for c in self.counts):
            raise DomainError("face counts must be finite and nonnegative")

    def euler_residual(self) -> float:
        """sum (-1)^ell counts[ell] - 1; zero when the Euler relation holds."""
        alt = sum((-1.0) ** ell * c for ell, c in enumerate(self.counts))
        return alt - 1.0


def zero_cell_expected_faces_log(d: int, ell: int,
                                 settings: QuadratureSettings | None = None,
                                 ) -> float:
    """log of the expected number of ell-faces of the zero cell."""
    if d < 1:
        raise DomainError("d must be positive")
    if not 0 <= ell <= d - 1:
        raise DomainError(f"face dimension must lie in 0..{d - 1}, got {ell}")
    k = d - ell
    sign, log_a = a_number_signed_log(d, k, settings)
    if sign <= 0.0:
        raise NumericError(f"A[{d},{k}] evaluated nonpositive; expected-face "
                           f"formula requires a positive value")
    return k * _LOG_PI - log_gamma(k + 1.0) + log_a


def zero_cell_expected_faces(d: int, ell: int,
                             settings: QuadratureSettings | None = None,
                             ) -> float:
    """Expected number of ell-dimensional faces of the zero cell."""
    return math.exp(zero_cell_expected_faces_log(d, ell, settings))


def zero_cell_fvector(d: int,
                      settings: QuadratureSettings | None = None) -> FVector:
    """Expected f-vector of the zero cell, with counts[d] = 1."""
    counts = [zero_cell_expected_faces(d, ell, settings) for ell in range(d)]
    counts.append(1.0)
    return FVector(d, tuple(counts))


def poisson_polyhedron_expected_faces_log(d: int, k: int, alpha: float,
                                          settings: QuadratureSettings | None = None,
                                          ) -> float:
    """log of the expected number of (k-1)-faces of the Poisson polyhedron."""
    if d < 1:
        raise DomainError("d must be positive")
    if not 1 <= k <= d:
        raise DomainError(f"k must lie in 1..{d}, got {k}")
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    sign, log_t = t_number_signed_log(d, k, alpha, settings)
    if sign <= 0.0:
        raise NumericError(f"T_{{{d},{k}}}({alpha}) evaluated nonpositive")
    log_binom = (log_gamma(d + 1.0) - log_gamma(k + 1.0)
                 - log_gamma(d - k + 1.0))
    return (d * math.log(alpha) + log_binom
            + k * math.log(2.0 * c_alpha(alpha)) + log_t)


def poisson_polyhedron_expected_faces(d: int, k: int, alpha: float,
                                      settings: QuadratureSettings | None = None,
                                      ) -> float:
    """Expected number of (k-1)-faces of the convex hull of the power-law
    Poisson process with exponent -(d+alpha)."""
    return math.exp(poisson_polyhedron_expected_faces_log(d, k, alpha,
                                                          settings))


def typical_cell_expected_faces_exact(d: int, k: int) -> int:
    """Expected k-face count of the typical cell: 2^(d-k) C(d,k), exactly
    (it coincides with the f-vector of the d-cube)."""
    if d < 1:
        raise DomainError("d must be positive")
    if not 0 <= k <= d:
        raise DomainError(f"k must lie in 0..{d}, got {k}")
    return (1 << (d - k)) * math.comb(d, k)


def typical_cell_expected_faces(d: int, k: int) -> float:
    """Float version of :func:`typical_cell_expected_faces_exact`."""
    return float(typical_cell_expected_faces_exact(d, k))


def typical_cell_vertex_second_moment_log(d: int) -> float:
    """log E[f_0^2] for the typical cell:

        E f_0^2 = 2^d d! sum_{j=0}^d kappa_j^2 / (4^j (d-j)!),

    with kappa_j the volume of the j-dimensional unit ball.  The (d+1)-term
    sum is accumulated in log scale, so d = 10^4 is routine.
    """
    if d < 1:
        raise DomainError("d must be positive")
    base = d * math.log(2.0) + log_gamma(d + 1.0)
    log_terms = [base + j * (_LOG_PI - math.log(4.0))
                 - log_gamma(d - j + 1.0) - 2.0 * log_gamma(j / 2.0 + 1.0)
                 for j in range(d + 1)]
    ref = max(log_terms)
    return ref + math.log(sum(math.exp(t - ref) for t in log_terms))


def typical_cell_vertex_second_moment(d: int) -> float:
    """E[f_0^2] for the typical cell (overflows to inf for d beyond ~430;
    use the log variant in that regime)."""
    return math.exp(typical_cell_vertex_second_moment_log(d))


def reference_fvector(shape: str, d: int, k: int) -> int:
    """Exact face counts of the standard reference polytopes.

    cube:          f_k = 2^(d-k) C(d, k)
    simplex:       f_k = C(d+1, k+1)
    crosspolytope: f_k = 2^(k+1) C(d, k+1)   (k < d), f_d = 1
    """
    if shape not in REFERENCE_SHAPES:
        raise DomainError(f"unknown shape {shape!r}; choose from "
                          f"{REFERENCE_SHAPES}")
    if d < 1:
        raise DomainError("d must be positive")
    if not 0 <= k <= d:
        raise DomainError(f"k must lie in 0..{d}, got {k}")
    if k == d:
        return 1
    if shape == "cube":
        return (1 << (d - k)) * math.comb(d, k)
    if shape == "simplex":
        return math.comb(d + 1, k + 1)
    return (1 << (k + 1)) * math.comb(d, k + 1)

"""Expected solid angles of random cones, exact and asymptotic.

Two cone models: the positive hull of d + ell uniform points on the full
unit sphere (whose expected solid angle is a plain binomial sum) and the
positive hull of d + ell uniform points on the upper half-sphere, whose
expected solid angle is

    (d+ell)! / (2 pi^(d+ell)) *
        sum over even j in 0..ell of
            B{d+ell+1, d+j+1} (d+j)^2 A[d+j-1, -1].

Angles decay like pi^-d, so the sum is assembled from the signed-log forms
of the B and A families, largest term first.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .anumbers import a_number_signed_log, b_number_log
from .numerics import (DomainError, QuadratureSettings, log_gamma,
                       signed_log_sum)

_LOG_PI = math.log(math.pi)

CONE_KINDS = ("full_sphere", "half_sphere")


@dataclass(frozen=True)
class ConeSpec:
    """A random-cone model: ambient dimension d, extra generators ell, and
    the sphere the generators are drawn from."""

    d: int
    ell: int
    kind: str

    def __post_init__(self):
        if self.d < 1:
            raise DomainError("d must be >= 1")
        if self.ell < 0:
            raise DomainError("ell must be >= 0")
        if self.kind not in CONE_KINDS:
            raise DomainError(f"kind must be one of {CONE_KINDS}")


def wendel_angle(d: int, ell: int) -> float:
    """Expected solid angle of the hull of d+ell uniform full-sphere points:
    2^-(d+ell) * sum_{j=d}^{d+ell} C(d+ell, j), evaluated as an exact
    rational and rounded once."""
    if d < 1 or ell < 0:
        raise DomainError("require d >= 1 and ell >= 0")
    n = d + ell
    total = sum(math.comb(n, j) for j in range(d, n + 1))
    return float(Fraction(total, 1 << n))


def wendel_angle_asymptotic(d: int, ell: int) -> float:
    """Large-d form (d/2)^ell / ell! * 2^-d of :func:`wendel_angle`."""
    if d < 1 or ell < 0:
        raise DomainError("require d >= 1 and ell >= 0")
    return math.exp(ell * math.log(d / 2.0) - log_gamma(ell + 1.0)
                    - d * math.log(2.0)) if ell else 2.0 ** -d


def halfsphere_angle_exact_log(d: int, ell: int,
                               settings: QuadratureSettings | None = None,
                               ) -> float:
    """log of the expected solid angle of the half-sphere cone."""
    if d < 1 or ell < 0:
        raise DomainError("require d >= 1 and ell >= 0")
    n = d + ell
    prefix = log_gamma(n + 1.0) - math.log(2.0) - n * _LOG_PI
    terms = []
    for j in range(0, ell + 1, 2):
        sign_a, log_a = a_number_signed_log(d + j - 1, -1, settings)
        log_b = b_number_log(n + 1, d + j + 1, settings)
        terms.append((sign_a, prefix + log_b + 2.0 * math.log(d + j) + log_a))
    sign, log_total = signed_log_sum(terms)
    if sign <= 0.0:
        raise DomainError(f"half-sphere angle evaluated nonpositive for "
                          f"d={d}, ell={ell}")
    return log_total


def halfsphere_angle_exact(d: int, ell: int,
                           settings: QuadratureSettings | None = None) -> float:
    """Expected solid angle of the hull of d+ell uniform half-sphere points."""
    return math.exp(halfsphere_angle_exact_log(d, ell, settings))


def halfsphere_angle_reduced_log(d: int,
                                 settings: QuadratureSettings | None = None,
                                 ) -> float:
    """log of the ell = 0 angle via the reduced one-term formula

        (1 / (2 pi^d)) * sqrt(pi) Gamma((d+1)/2) / Gamma((d+2)/2)
                       * d^2 * A[d-1, -1],

    an algebraically equal route to :func:`halfsphere_angle_exact_log` at
    ell = 0 (the B factor collapses to a Gamma ratio)."""
    if d < 1:
        raise DomainError("require d >= 1")
    sign_a, log_a = a_number_signed_log(d - 1, -1, settings)
    if sign_a <= 0.0:
        raise DomainError(f"A[{d - 1},-1] evaluated nonpositive")
    return (-math.log(2.0) - d * _LOG_PI + 0.5 * _LOG_PI
            + log_gamma((d + 1.0) / 2.0) - log_gamma((d + 2.0) / 2.0)
            + 2.0 * math.log(d) + log_a)


def halfsphere_angle_reduced(d: int,
                             settings: QuadratureSettings | None = None,
                             ) -> float:
    """Float version of :func:`halfsphere_angle_reduced_log`."""
    return math.exp(halfsphere_angle_reduced_log(d, settings))


def halfsphere_angle_asymptotic_log(d: int, ell: int) -> float:
    """log of the large-d form sqrt(3) (d/2)^ell / ell! * pi^-d."""
    if d < 1 or ell < 0:
        raise DomainError("require d >= 1 and ell >= 0")
    return (0.5 * math.log(3.0) + ell * math.log(d / 2.0)
            - log_gamma(ell + 1.0) - d * _LOG_PI)


def halfsphere_angle_asymptotic(d: int, ell: int) -> float:
    """Large-d form of the half-sphere cone angle."""
    return math.exp(halfsphere_angle_asymptotic_log(d, ell))


def expected_angle(spec: ConeSpec,
                   settings: QuadratureSettings | None = None) -> float:
    """Exact expected solid angle for either cone model."""
    if spec.kind == "full_sphere":
        return wendel_angle(spec.d, spec.ell)
    return halfsphere_angle_exact(spec.d, spec.ell, settings)

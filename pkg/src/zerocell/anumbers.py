"""The three special-number families carrying every exact expectation.

``a_number`` evaluates

    A[n, k] = (n!/(n-k)!) (1/pi) * integral over R of
              (cosh x)^(-n-1) (pi/2 + i x)^(n-k) dx,

``t_number`` evaluates

    T_{d,k}(alpha) = (1/pi) * integral over R of
                     F(i u)^(d-k) (cosh u)^(-alpha d - 1) du,
    F(i u) = c(alpha) + i * integral_0^u (cosh t)^(alpha-1) dt,
    c(alpha) = sqrt(pi) Gamma(alpha/2) / (2 Gamma((alpha+1)/2)),

and ``b_number`` evaluates

    B{n, k} = 1/((k-1)! (n-k)!) * integral_0^pi (sin x)^(k-1) x^(n-k) dx.

Substituting z = pi/2 + i x turns the first two integrands into
z^(n-k) / (sin z)^(n+1) and G(v)^(d-k) / (sin v)^(alpha d + 1) with
G(v) = integral_0^v (sin t)^(alpha-1) dt, both analytic on the strip
0 < Re z < pi and exponentially small in |Im z|.  On the vertical line
Re z = pi/2 (the literal form above) the integrand oscillates with an
amplitude that exceeds the integral by a factor exp(O(d)), which no fixed
precision survives; the modulus on a vertical line is maximized at the real
axis, so we integrate instead along the line through the real minimizer of
the peak.  There the integrand is a gentle near-Gaussian bump and double
precision holds all the way past d = 500.  All powers are integer powers of
the complex factors, so the evaluation is branch-free; (sin z)^(alpha d + 1)
uses the principal log, which is the branch fixed by positivity on the real
axis because Re sin z > 0 throughout the strip.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from .numerics import (DEFAULT_SETTINGS, DomainError, NumericError,
                       QuadratureSettings, ScaledComplex, bisect_root,
                       exp_signed_log, integrate_halfline_scaled,
                       integrate_interval_scaled, log_gamma)

_LN2 = math.log(2.0)
_LOG_2_OVER_PI = math.log(2.0 / math.pi)

_GL15 = np.polynomial.legendre.leggauss(15)


@dataclass(frozen=True)
class ANumberQuery:
    """Index pair (n, k) with n >= 0 and k <= n."""

    n: int
    k: int

    def __post_init__(self):
        if self.n < 0:
            raise DomainError(f"n must be nonnegative, got {self.n}")
        if self.k > self.n:
            raise DomainError(f"k must satisfy k <= n, got k={self.k}, n={self.n}")


@dataclass(frozen=True)
class TNumberQuery:
    """Index triple (d, k, alpha) with d >= 1, k <= d, alpha > 0."""

    d: int
    k: int
    alpha: float

    def __post_init__(self):
        if self.d < 1:
            raise DomainError(f"d must be positive, got {self.d}")
        if self.k > self.d:
            raise DomainError(f"k must satisfy k <= d, got k={self.k}, d={self.d}")
        if not self.alpha > 0.0:
            raise DomainError(f"alpha must be positive, got {self.alpha}")


def log_sin(z: complex) -> complex:
    """Principal log of sin(z) on the strip 0 < Re z < pi.

    Uses the exact factorization sin z = (i/2) e^{-iz} (1 - e^{2iz}) for
    |Im z| > 1 so that cosh never overflows.
    """
    y = z.imag
    if abs(y) <= 1.0:
        return cmath.log(cmath.sin(z))
    if y > 0.0:
        return (complex(y - _LN2, 0.5 * math.pi - z.real)
                + cmath.log(1.0 - cmath.exp(2j * z)))
    return log_sin(z.conjugate()).conjugate()


def c_alpha(alpha: float) -> float:
    """c(alpha) = sqrt(pi) Gamma(alpha/2) / (2 Gamma((alpha+1)/2))."""
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    return 0.5 * math.sqrt(math.pi) * math.exp(
        log_gamma(alpha / 2.0) - log_gamma((alpha + 1.0) / 2.0))


def _x_cot_x(x: float) -> float:
    return x * math.cos(x) / math.sin(x)


def _a_contour(n: int, k: int) -> float:
    """Vertical-line abscissa through the peak minimizer of
    x^(n-k) / (sin x)^(n+1) on (0, pi/2]; for k <= -1 the peak grows with x,
    so any small abscissa is well conditioned."""
    ratio = (n - k) / (n + 1.0)
    if ratio <= 0.0:
        return 0.5 * math.pi
    if ratio < 1.0:
        return bisect_root(lambda x: _x_cot_x(x) - ratio,
                           1e-9, 0.5 * math.pi - 1e-9, 1e-10)
    return 1.0 / math.sqrt(n + 1.0)


def a_number_signed_log(n: int, k: int,
                        settings: QuadratureSettings | None = None,
                        ) -> tuple[float, float]:
    """(sign, log|A[n,k]|); the log form survives arbitrarily large n."""
    ANumberQuery(n, k)
    st = settings or DEFAULT_SETTINGS
    x0 = _a_contour(n, k)
    p = n - k
    q = n + 1

    def f(y: float) -> ScaledComplex:
        z = complex(x0, y)
        return ScaledComplex.from_exponent(p * cmath.log(z) - q * log_sin(z))

    result = integrate_halfline_scaled(f, st)
    sign, log_int = result.signed_log()
    if sign == 0.0:
        return 0.0, -math.inf
    log_pref = log_gamma(n + 1.0) - log_gamma(n - k + 1.0) + _LOG_2_OVER_PI
    return sign, log_pref + log_int


def a_number(n: int, k: int,
             settings: QuadratureSettings | None = None) -> float:
    """A[n, k] as a float; exactly 0 is returned for fully cancelled values."""
    return exp_signed_log(*a_number_signed_log(n, k, settings))


def _gl15_complex(fn, a: float, b: float) -> complex:
    xm, xr = 0.5 * (a + b), 0.5 * (b - a)
    return xr * sum(w * fn(xm + xr * t) for t, w in zip(*_GL15))


def _gl15_real(fn, a: float, b: float) -> float:
    xm, xr = 0.5 * (a + b), 0.5 * (b - a)
    return xr * sum(w * fn(xm + xr * t) for t, w in zip(*_GL15))


def sin_power_integral(x0: float, alpha: float,
                       settings: QuadratureSettings | None = None) -> float:
    """G(x0) = integral_0^{x0} (sin t)^(alpha-1) dt for 0 < x0 <= pi/2.

    The substitution t = x0 * tau^(1/alpha) removes the t^(alpha-1) endpoint
    singularity, leaving a smooth bounded integrand for every alpha > 0.
    """
    if not 0.0 < x0 <= 0.5 * math.pi:
        raise DomainError("x0 must lie in (0, pi/2]")
    inv = 1.0 / alpha

    def f(tau: float) -> ScaledComplex:
        if tau <= 0.0:
            return ScaledComplex.from_real(1.0)
        t = x0 * tau ** inv
        return ScaledComplex.from_exponent(
            complex((alpha - 1.0) * (math.log(math.sin(t)) - math.log(t)), 0.0))

    res = integrate_interval_scaled(f, 0.0, 1.0, settings)
    return (x0 ** alpha / alpha) * res.value


def _sin_power_integral_coarse(x0: float, alpha: float) -> float:
    """Fixed-rule version of :func:`sin_power_integral`; a few digits suffice
    while hunting for the contour abscissa."""
    inv = 1.0 / alpha

    def f(tau: float) -> float:
        t = x0 * tau ** inv
        return (math.sin(t) / t) ** (alpha - 1.0)

    return (x0 ** alpha / alpha) * _gl15_real(f, 0.0, 1.0)


class _InnerCumulative:
    """Phi(y) = integral_0^y (sin(x0 + i s))^(alpha-1) ds, extended lazily.

    Values are cached at fixed knots and completed with one 15-point panel
    from the nearest knot, so every query is exact to machine precision; no
    interpolation error enters the budget.
    """

    def __init__(self, x0: float, alpha: float, step: float = 0.25):
        self.x0 = x0
        self.power = alpha - 1.0
        self.h = step
        self._cum = [0j]

    def _integrand(self, s: float) -> complex:
        return cmath.exp(self.power * log_sin(complex(self.x0, s)))

    def value(self, y: float) -> complex:
        j = int(y / self.h)
        while len(self._cum) <= j:
            m = len(self._cum) - 1
            self._cum.append(self._cum[-1] + _gl15_complex(
                self._integrand, m * self.h, (m + 1) * self.h))
        return self._cum[j] + _gl15_complex(self._integrand, j * self.h, y)


def _t_contour(d: int, k: int, alpha: float) -> float:
    """Abscissa through the peak minimizer of G(x)^(d-k) / (sin x)^(ad+1)."""
    if k >= d:
        return 0.5 * math.pi

    def slope(x: float) -> float:
        return ((d - k) * math.sin(x) ** alpha
                - (alpha * d + 1.0) * _sin_power_integral_coarse(x, alpha)
                * math.cos(x))

    lo, hi = 1e-6, 0.5 * math.pi - 1e-9
    if slope(lo) < 0.0 < slope(hi):
        # three correct digits are plenty: the abscissa only sets conditioning
        return bisect_root(slope, lo, hi, 1e-3)
    if alpha * d + 1.0 <= 40.0:
        return 0.5 * math.pi
    return 1.0 / math.sqrt(alpha * d + 1.0)


def t_number_signed_log(d: int, k: int, alpha: float,
                        settings: QuadratureSettings | None = None,
                        ) -> tuple[float, float]:
    """(sign, log|T_{d,k}(alpha)|)."""
    TNumberQuery(d, k, alpha)
    st = settings or DEFAULT_SETTINGS
    growth = max(alpha - 1.0, 0.0) * (d - k)
    if growth >= alpha * d + 1.0:
        raise DomainError(
            f"T integral diverges for d={d}, k={k}, alpha={alpha}: the inner "
            f"factor grows faster than the cosh weight decays")
    x0 = _t_contour(d, k, alpha)
    g0 = c_alpha(alpha) if x0 == 0.5 * math.pi else sin_power_integral(
        x0, alpha, st)
    inner = _InnerCumulative(x0, alpha)
    p = d - k
    q = alpha * d + 1.0

    def f(y: float) -> ScaledComplex:
        g = g0 + 1j * inner.value(y)
        return ScaledComplex.from_exponent(p * cmath.log(g)
                                           - q * log_sin(complex(x0, y)))

    result = integrate_halfline_scaled(f, st)
    sign, log_int = result.signed_log()
    if sign == 0.0:
        return 0.0, -math.inf
    return sign, _LOG_2_OVER_PI + log_int


def t_number(d: int, k: int, alpha: float,
             settings: QuadratureSettings | None = None) -> float:
    """T_{d,k}(alpha) as a float."""
    return exp_signed_log(*t_number_signed_log(d, k, alpha, settings))


def b_number_log(n: int, k: int,
                 settings: QuadratureSettings | None = None) -> float:
    """log B{n, k}; the integrand is evaluated as exp of its log, so the
    (k-1)! (n-k)! prefactor and sin^(k-1) peaks never underflow."""
    if n < 1 or k < 1 or k > n:
        raise DomainError(f"b_number requires 1 <= k <= n, got n={n}, k={k}")
    a = k - 1.0
    b = n - k

    def f(x: float) -> ScaledComplex:
        if x <= 0.0 or x >= math.pi:
            return ScaledComplex(-math.inf)
        return ScaledComplex(a * math.log(math.sin(x)) + b * math.log(x))

    res = integrate_interval_scaled(f, 0.0, math.pi, settings)
    sign, log_int = res.signed_log()
    if sign <= 0.0:  # the integrand is positive; anything else is a bug
        raise NumericError(f"B{{{n},{k}}} integral evaluated nonpositive")
    return -log_gamma(float(k)) - log_gamma(n - k + 1.0) + log_int


def b_number(n: int, k: int,
             settings: QuadratureSettings | None = None) -> float:
    """B{n, k} as a float (underflows to 0.0 for very large n; use
    :func:`b_number_log` in that regime)."""
    return math.exp(b_number_log(n, k, settings))


def f_tilde_ratio(u: float, alpha: float,
                  settings: QuadratureSettings | None = None) -> float:
    """(integral_0^{|u|} (sinh t)^(alpha-1) dt) / (sinh|u|)^alpha.

    Strictly below 1/alpha for every u != 0; tends to 1/alpha as u -> 0.
    """
    if u == 0.0:
        raise DomainError("ratio is defined for u != 0 (limit 1/alpha)")
    if not alpha > 0.0:
        raise DomainError("alpha must be positive")
    y = abs(u)
    inv = 1.0 / alpha

    def f(tau: float) -> ScaledComplex:
        if tau <= 0.0:
            return ScaledComplex.from_real(1.0)
        t = y * tau ** inv
        log_sinh = t + math.log1p(-math.exp(-2.0 * t)) - _LN2
        return ScaledComplex((alpha - 1.0) * (log_sinh - math.log(t)))

    res = integrate_interval_scaled(f, 0.0, 1.0, settings)
    _, log_int = res.signed_log()
    log_num = alpha * math.log(y) - math.log(alpha) + log_int
    log_den = alpha * (y + math.log1p(-math.exp(-2.0 * y)) - _LN2)
    return math.exp(log_num - log_den)

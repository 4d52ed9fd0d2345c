"""Shared numerical kernel.

Everything downstream reduces to integrating functions whose values span
hundreds of orders of magnitude: high powers like (cosh x)^(-d-1) underflow
and (pi/2)^(d-k) overflows raw doubles long before d reaches the dimensions
of interest.  Values are therefore carried as (log-magnitude, phase) pairs
and every quadrature panel is accumulated relative to its own running peak
exponent, so only well-scaled mantissas ever touch floating point addition.

The quadrature is an adaptive panel scheme: each panel is evaluated with a
15-point and a 7-point Gauss-Legendre rule, the difference serving as the
embedded error estimate, and the worst panel is bisected until the global
estimate meets the requested relative tolerance (or is provably limited by
double-precision roundoff).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

TAU = 2.0 * math.pi

_GL_LO = np.polynomial.legendre.leggauss(7)
_GL_HI = np.polynomial.legendre.leggauss(15)

# Panels whose error falls below this multiple of the accumulated absolute
# mass cannot be improved in double precision; treat them as converged.
_ROUNDOFF_FLOOR = 5e-16


class DomainError(ValueError):
    """Arguments outside an operation's documented domain."""


class NumericError(RuntimeError):
    """A numerical routine failed hard (NaN integrand, impossible state)."""


def wrap_phase(theta: float) -> float:
    """Reduce an angle to the principal interval (-pi, pi]."""
    r = math.remainder(theta, TAU)
    if r <= -math.pi:
        r += TAU
    return r


@dataclass(frozen=True)
class ScaledComplex:
    """A complex value stored as log-magnitude plus phase.

    ``log_mag`` is the natural log of the modulus (-inf encodes zero) and
    ``phase`` lies in (-pi, pi].  The representation survives d-th powers of
    quantities that would overflow or underflow an ordinary complex double.
    """

    log_mag: float
    phase: float = 0.0

    def __post_init__(self):
        if math.isnan(self.log_mag) or math.isnan(self.phase):
            raise NumericError("ScaledComplex built from NaN")
        if self.log_mag == -math.inf:
            object.__setattr__(self, "phase", 0.0)
        else:
            object.__setattr__(self, "phase", wrap_phase(self.phase))

    @staticmethod
    def from_complex(z: complex) -> "ScaledComplex":
        z = complex(z)
        if z == 0:
            return ScaledComplex(-math.inf, 0.0)
        return ScaledComplex(math.log(abs(z)), math.atan2(z.imag, z.real))

    @staticmethod
    def from_real(x: float) -> "ScaledComplex":
        if x == 0.0:
            return ScaledComplex(-math.inf, 0.0)
        return ScaledComplex(math.log(abs(x)), 0.0 if x > 0 else math.pi)

    @staticmethod
    def from_exponent(w: complex) -> "ScaledComplex":
        """exp(w) for complex w, without ever forming exp(Re w)."""
        return ScaledComplex(w.real, wrap_phase(w.imag))

    def to_complex(self) -> complex:
        if self.log_mag == -math.inf:
            return 0j
        r = math.exp(self.log_mag)
        return complex(r * math.cos(self.phase), r * math.sin(self.phase))

    def __mul__(self, other: "ScaledComplex") -> "ScaledComplex":
        return ScaledComplex(self.log_mag + other.log_mag,
                             self.phase + other.phase)

    def power(self, p: float) -> "ScaledComplex":
        return ScaledComplex(p * self.log_mag, p * self.phase)

    def real_scaled(self, ref_log: float) -> float:
        """Real part divided by exp(ref_log)."""
        if self.log_mag == -math.inf:
            return 0.0
        return math.exp(self.log_mag - ref_log) * math.cos(self.phase)


@dataclass(frozen=True)
class QuadratureSettings:
    """Error contract for the adaptive integrators."""

    rel_tol: float = 1e-10
    abs_tol: float = 1e-300
    max_subdivisions: int = 512
    tail_log_bound: float = 40.0 * math.log(10.0)

    def __post_init__(self):
        if not self.rel_tol > 0.0:
            raise DomainError("rel_tol must be positive")
        if self.max_subdivisions < 1:
            raise DomainError("max_subdivisions must be >= 1")


DEFAULT_SETTINGS = QuadratureSettings()


@dataclass(frozen=True)
class ScaledIntegral:
    """Quadrature result as exp(log_scale) * mantissa with an error estimate.

    ``error`` lives at the same scale as ``mantissa``; ``converged`` records
    whether the requested tolerance (or the double-precision roundoff floor)
    was reached before the subdivision budget ran out.
    """

    log_scale: float
    mantissa: float
    error: float
    converged: bool
    evaluations: int
    panels: int

    @property
    def value(self) -> float:
        if self.log_scale == -math.inf or self.mantissa == 0.0:
            return 0.0
        return math.exp(self.log_scale) * self.mantissa

    def signed_log(self) -> tuple[float, float]:
        """(sign, log|integral|); sign 0.0 for an exactly zero result."""
        if self.log_scale == -math.inf or self.mantissa == 0.0:
            return 0.0, -math.inf
        s = 1.0 if self.mantissa > 0.0 else -1.0
        return s, self.log_scale + math.log(abs(self.mantissa))


Integrand = Callable[[float], ScaledComplex]


def _probe(f: Integrand, x: float) -> ScaledComplex:
    v = f(x)
    if math.isnan(v.log_mag) or math.isnan(v.phase):
        raise NumericError(f"integrand returned NaN at x={x!r}")
    return v


def _panel(f: Integrand, a: float, b: float):
    """Evaluate one panel with the 15/7 rule pair, normalized to its peak."""
    xm = 0.5 * (a + b)
    xr = 0.5 * (b - a)
    vals_hi = [_probe(f, xm + xr * t) for t in _GL_HI[0]]
    vals_lo = [_probe(f, xm + xr * t) for t in _GL_LO[0]]
    scale = max(max(v.log_mag for v in vals_hi),
                max(v.log_mag for v in vals_lo))
    if scale == -math.inf:
        return [a, b, -math.inf, 0.0, 0.0, 0.0]
    hi = xr * sum(w * v.real_scaled(scale)
                  for w, v in zip(_GL_HI[1], vals_hi))
    lo = xr * sum(w * v.real_scaled(scale)
                  for w, v in zip(_GL_LO[1], vals_lo))
    mass = xr * sum(w * math.exp(v.log_mag - scale)
                    for w, v in zip(_GL_HI[1], vals_hi))
    return [a, b, scale, hi, abs(hi - lo), mass]


def integrate_interval_scaled(f: Integrand, a: float, b: float,
                              settings: QuadratureSettings | None = None,
                              ) -> ScaledIntegral:
    """Adaptively integrate Re f over [a, b] in peak-normalized form."""
    st = settings or DEFAULT_SETTINGS
    if not b > a:
        raise DomainError("integration interval must satisfy a < b")
    n_seed = 16
    h = (b - a) / n_seed
    panels = [_panel(f, a + i * h, a + (i + 1) * h) for i in range(n_seed)]
    evals = 22 * n_seed
    width_floor = 1e-13 * (abs(b - a) + 1.0)
    splits = 0
    while True:
        ref = max(p[2] for p in panels)
        if ref == -math.inf:
            return ScaledIntegral(-math.inf, 0.0, 0.0, True, evals, len(panels))
        total = err = mass = 0.0
        for p in panels:
            if p[2] == -math.inf:
                continue
            w = math.exp(p[2] - ref)
            total += w * p[3]
            err += w * p[4]
            mass += w * abs(p[5])
        bound = max(st.rel_tol * abs(total),
                    st.abs_tol * math.exp(min(-ref, 700.0)),
                    _ROUNDOFF_FLOOR * mass)
        if err <= bound:
            return ScaledIntegral(ref, total, err, True, evals, len(panels))
        if splits >= st.max_subdivisions:
            return ScaledIntegral(ref, total, err, False, evals, len(panels))
        worst, worst_err = None, 0.0
        for i, p in enumerate(panels):
            if p[2] == -math.inf or (p[1] - p[0]) <= width_floor:
                continue
            e = math.exp(min(p[2] - ref, 700.0)) * p[4]
            if e > worst_err:
                worst, worst_err = i, e
        if worst is None:
            return ScaledIntegral(ref, total, err, False, evals, len(panels))
        pa, pb = panels[worst][0], panels[worst][1]
        pm = 0.5 * (pa + pb)
        panels[worst] = _panel(f, pa, pm)
        panels.append(_panel(f, pm, pb))
        evals += 44
        splits += 1


def _truncation_point(f: Integrand, settings: QuadratureSettings) -> float:
    """Doubling search for X with log|f(X)| below the running peak by
    tail_log_bound; valid for single-peak integrands with exponential decay."""
    peak = _probe(f, 0.0).log_mag
    x = 2.0 ** -16
    while x <= 1e12:
        lm = _probe(f, x).log_mag
        if lm > peak:
            peak = lm
        elif lm <= peak - settings.tail_log_bound:
            return x
        x *= 2.0
    raise NumericError("no exponential decay detected on [0, 1e12]; "
                       "integrand violates the half-line contract")


def integrate_halfline_scaled(f: Integrand,
                              settings: QuadratureSettings | None = None,
                              ) -> ScaledIntegral:
    """Integral of Re f over [0, inf) in scaled form.

    The integrand must have a single log-magnitude peak and decay at least
    exponentially beyond it; the interval is truncated once the integrand has
    fallen ``tail_log_bound`` below the peak, which bounds the dropped tail
    well under the relative tolerance.
    """
    st = settings or DEFAULT_SETTINGS
    x_max = _truncation_point(f, st)
    return integrate_interval_scaled(f, 0.0, x_max, st)


def integrate_halfline(f: Integrand,
                       settings: QuadratureSettings | None = None) -> float:
    """Plain-float version of :func:`integrate_halfline_scaled`."""
    return integrate_halfline_scaled(f, settings).value


def log_gamma(x: float) -> float:
    """Natural log of Gamma(x) for x > 0."""
    if not x > 0.0:
        raise DomainError(f"log_gamma requires x > 0, got {x!r}")
    return math.lgamma(x)


def bisect_root(f: Callable[[float], float], lo: float, hi: float,
                tol: float) -> float:
    """Bisection for a sign change of a continuous monotone function."""
    if not lo < hi:
        raise DomainError("bisect_root requires lo < hi")
    flo, fhi = f(lo), f(hi)
    if flo == 0.0:
        return lo
    if fhi == 0.0:
        return hi
    if (flo > 0.0) == (fhi > 0.0):
        raise DomainError("bisect_root endpoints have the same sign")
    for _ in range(400):
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if fm == 0.0:
            return mid
        if (fm > 0.0) == (flo > 0.0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


_INV_GOLDEN = (math.sqrt(5.0) - 1.0) / 2.0


def maximize_unimodal(f: Callable[[float], float], lo: float, hi: float,
                      tol: float) -> tuple[float, float]:
    """Golden-section search; returns (argmax, max) for unimodal f."""
    if not lo < hi:
        raise DomainError("maximize_unimodal requires lo < hi")
    c = hi - _INV_GOLDEN * (hi - lo)
    d = lo + _INV_GOLDEN * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo > tol:
        if fc > fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_GOLDEN * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_GOLDEN * (hi - lo)
            fd = f(d)
    x = 0.5 * (lo + hi)
    return x, f(x)


def signed_log_sum(terms: Iterable[tuple[float, float]]) -> tuple[float, float]:
    """Sum of sign * exp(log_abs) terms, accumulated largest-first.

    Returns (sign, log|sum|) with sign 0.0 for an exactly cancelled sum.
    """
    live = [(s, l) for s, l in terms if l != -math.inf and s != 0.0]
    if not live:
        return 0.0, -math.inf
    live.sort(key=lambda t: -t[1])
    ref = live[0][1]
    acc = 0.0
    for s, l in live:
        acc += s * math.exp(l - ref)
    if acc == 0.0:
        return 0.0, -math.inf
    sign = 1.0 if acc > 0.0 else -1.0
    return sign, ref + math.log(abs(acc))


def exp_signed_log(sign: float, log_abs: float) -> float:
    """Collapse a (sign, log) pair back to a float; 0.0 when sign is 0."""
    if sign == 0.0 or log_abs == -math.inf:
        return 0.0
    return sign * math.exp(log_abs)

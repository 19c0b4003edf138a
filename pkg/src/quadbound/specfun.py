"""Reference evaluation of the special functions used across the package:
Si, Cin, Ci, Ein, E1, Shi, Cinh, Chi, Ti2, the Euler-Mascheroni constant,
and the gamma function.

Each entire function has two independent routes, a power series and panel
quadrature of its defining integral; the public dispatcher picks the
strategy per function, and the dual routes are cross-checked in the test
suite.  Cin is evaluated by its series in double-double arithmetic, which
keeps absolute error near 1e-16 even at x = 40 where the plain-double
series loses everything to cancellation.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import DomainError, ParameterError
from .quadrature import PanelConfig, integrate

EULER_GAMMA = 0.57721566490153286

WORKING_RANGE = 50.0


@dataclass(frozen=True)
class MathConstants:
    euler_gamma: float = EULER_GAMMA
    pi: float = math.pi


CONSTANTS = MathConstants()


class SpecialFn(str, enum.Enum):
    SI = "si"
    CIN = "cin"
    CI = "ci"
    EIN = "ein"
    E1 = "e1"
    SHI = "shi"
    CINH = "cinh"
    CHI = "chi"
    TI2 = "ti2"


_POSITIVE_ONLY = {SpecialFn.CI, SpecialFn.CHI, SpecialFn.E1}


# ---------------------------------------------------------------------------
# Series routes.

def _si_series(x: float) -> float:
    # sum (-1)^m x^(2m+1) / ((2m+1) (2m+1)!)
    z = x * x
    u = x
    terms = [u]
    m = 0
    while True:
        m += 1
        u *= z / ((2 * m) * (2 * m + 1))
        t = u / (2 * m + 1)
        terms.append(t if m % 2 == 0 else -t)
        if abs(t) < 1e-17 * (1.0 + abs(x)):
            break
    return math.fsum(terms)


def _shi_series(x: float) -> float:
    # sum x^(2m+1) / ((2m+1) (2m+1)!), all terms positive
    z = x * x
    u = x
    s = x
    terms = [u]
    m = 0
    while m < 400:
        m += 1
        u *= z / ((2 * m) * (2 * m + 1))
        t = u / (2 * m + 1)
        terms.append(t)
        s += t
        if t < 1e-17 * s:
            break
    return math.fsum(terms)


def _cinh_series(x: float) -> float:
    # Cinh(x) = -sum_{m>=1} x^(2m) / (2m (2m)!), all summand terms positive
    z = x * x
    u = 0.5 * z
    s = u / 2.0
    terms = [u / 2.0]
    m = 1
    while m < 400:
        m += 1
        u *= z / ((2 * m - 1) * (2 * m))
        t = u / (2 * m)
        terms.append(t)
        s += t
        if t < 1e-17 * (s + 1e-300):
            break
    return -math.fsum(terms)


def _cin_series(x: float) -> float:
    hi, lo = _kernels.cin_dd(np.array([abs(x)]))
    return float(hi[0] + lo[0])


def _ein_series(x):
    # sum (-1)^(m+1) x^m / (m m!), valid on x <= 8 (stable for negative x).
    x = np.asarray(x, dtype=np.float64)
    s = np.zeros_like(x)
    u = np.ones_like(x)
    for m in range(1, 60):
        u = u * x / m
        s = s + (-1.0) ** (m + 1) * u / m
    return s


def _ti2_series(x: float) -> float:
    # sum (-1)^m x^(2m+1) / (2m+1)^2, |x| < 1
    z = x * x
    u = x
    terms = []
    m = 0
    while True:
        terms.append(u / (2 * m + 1) ** 2 * (1 if m % 2 == 0 else -1))
        if abs(u) / (2 * m + 1) ** 2 < 1e-18:
            break
        m += 1
        u *= z
        if m > 100000:
            break
    return math.fsum(terms)


def _e1_series(x):
    x = np.asarray(x, dtype=np.float64)
    s = np.zeros_like(x)
    u = np.ones_like(x)
    for m in range(1, 40):
        u = u * x / m
        s = s + (-1.0) ** (m + 1) * u / m
    return -EULER_GAMMA - np.log(x) + s


# ---------------------------------------------------------------------------
# Quadrature routes (the defining integrals, on stable integrand forms).

_FINE = PanelConfig()


def _sinc(t):
    t = np.asarray(t, dtype=np.float64)
    small = np.abs(t) < 1e-8
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0 - t * t / 6.0, np.sin(safe) / safe)


def cin_integrand(t):
    """(1 - cos t)/t in the cancellation-free form 2 sin^2(t/2)/t."""
    t = np.asarray(t, dtype=np.float64)
    zero = t == 0.0
    safe = np.where(zero, 1.0, t)
    return np.where(zero, 0.0, 2.0 * np.sin(safe / 2.0) ** 2 / safe)


def _cinh_integrand(t):
    t = np.asarray(t, dtype=np.float64)
    zero = t == 0.0
    safe = np.where(zero, 1.0, t)
    return np.where(zero, 0.0, -2.0 * np.sinh(safe / 2.0) ** 2 / safe)


def _shi_integrand(t):
    t = np.asarray(t, dtype=np.float64)
    small = np.abs(t) < 1e-8
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0 + t * t / 6.0, np.sinh(safe) / safe)


def _ein_integrand(t):
    # (1 - e^(-t))/t, continuously extended to 1 at t = 0.  (The defining
    # integrand is sometimes declared 0 at t = 0; the parameter-integral
    # representation forces the continuous value 1, which is what we use.)
    t = np.asarray(t, dtype=np.float64)
    small = np.abs(t) < 1e-12
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0 - t / 2.0, -np.expm1(-safe) / safe)


def _atan_over_t(t):
    t = np.asarray(t, dtype=np.float64)
    small = np.abs(t) < 1e-8
    safe = np.where(small, 1.0, t)
    return np.where(small, 1.0 - t * t / 3.0, np.arctan(safe) / safe)


def _integral_route(fn: SpecialFn, x: float) -> float:
    y = abs(x)
    sign = -1.0 if x < 0 else 1.0
    if fn is SpecialFn.SI:
        return sign * integrate(_sinc, 0.0, y, _FINE)
    if fn is SpecialFn.CIN:
        return integrate(cin_integrand, 0.0, y, _FINE)
    if fn is SpecialFn.EIN:
        if x >= 0:
            return integrate(_ein_integrand, 0.0, x, _FINE)
        return -integrate(lambda u: _ein_integrand(-u), 0.0, y, _FINE)
    if fn is SpecialFn.SHI:
        return sign * integrate(_shi_integrand, 0.0, y, _FINE)
    if fn is SpecialFn.CINH:
        return integrate(_cinh_integrand, 0.0, y, _FINE)
    if fn is SpecialFn.TI2:
        return sign * integrate(_atan_over_t, 0.0, y, _FINE)
    raise ParameterError(f"no integral route for {fn}")


def series_value(fn: SpecialFn, x: float) -> float:
    """Power-series route for the entire functions (dual-check side A)."""
    fn = SpecialFn(fn)
    if fn is SpecialFn.SI:
        return _si_series(x)
    if fn is SpecialFn.CIN:
        return _cin_series(x)
    if fn is SpecialFn.EIN:
        return float(_ein_series(x))
    if fn is SpecialFn.SHI:
        return math.copysign(1.0, x) * _shi_series(abs(x))
    if fn is SpecialFn.CINH:
        return _cinh_series(abs(x))
    raise ParameterError(f"{fn} has no globally convergent power series here")


def integral_value(fn: SpecialFn, x: float) -> float:
    """Defining-integral route for the entire functions (dual-check side B)."""
    return _integral_route(SpecialFn(fn), x)


# ---------------------------------------------------------------------------
# Vectorized E1/Ein used by the transform machinery.

def e1_vec(x):
    """E1 on a positive array: series below 1, panel quadrature above."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    if np.any(x <= 0):
        raise DomainError("E1 requires x > 0")
    out = np.empty_like(x)
    small = x <= 1.0
    if small.any():
        out[small] = _e1_series(x[small])
    if (~small).any():
        xb = x[~small]
        # int_1^T e^(-x t)/t dt with T = 46: dropped tail < e^(-46)/46.
        rule_nodes, rule_weights = _e1_rule()
        vals = np.exp(-xb[:, None] * rule_nodes[None, :]) / rule_nodes[None, :]
        out[~small] = vals @ rule_weights
    return out


_e1_rule_cache = None


def _e1_rule():
    global _e1_rule_cache
    if _e1_rule_cache is None:
        from .quadrature import gauss_legendre_rule

        rule = gauss_legendre_rule(16)
        edges = np.arange(1.0, 46.0 + 0.25, 0.5)
        mid = 0.5 * (edges[:-1] + edges[1:])
        rad = 0.5 * (edges[1:] - edges[:-1])
        nodes = (mid[:, None] + rad[:, None] * rule.nodes[None, :]).ravel()
        weights = (rad[:, None] * rule.weights[None, :]).ravel()
        _e1_rule_cache = (nodes, weights)
    return _e1_rule_cache


def ein_vec(x):
    """Ein on an array, series up to 8 and the E1 relation beyond."""
    x = np.atleast_1d(np.asarray(x, dtype=np.float64))
    out = np.empty_like(x)
    small = x <= 8.0
    if small.any():
        out[small] = _ein_series(x[small])
    if (~small).any():
        xb = x[~small]
        out[~small] = np.log(xb) + EULER_GAMMA + e1_vec(xb)
    return out


def cin_reference_dd(xs):
    """Cin in double-double, (hi, lo) arrays; the Simpson-error reference."""
    return _kernels.cin_dd(np.abs(np.atleast_1d(np.asarray(xs, dtype=np.float64))))


# ---------------------------------------------------------------------------
# Public dispatcher.

def eval_special(fn, x: float) -> float:
    """Evaluate one of the supported special functions at x.

    Absolute accuracy is 1e-13 or better across the working range for the
    bounded-growth functions; the hyperbolic ones grow like e^x and are
    accurate to about 1e-13 relative.
    """
    fn = SpecialFn(fn)
    x = float(x)
    if not np.isfinite(x):
        raise ParameterError("x must be finite")
    if abs(x) > WORKING_RANGE:
        raise ParameterError(f"|x| <= {WORKING_RANGE} supported, got {x}")
    if fn in _POSITIVE_ONLY and x <= 0:
        raise DomainError(f"{fn.value} requires x > 0")

    if fn is SpecialFn.SI:
        return math.copysign(1.0, x) * (_si_series(abs(x)) if abs(x) <= 4.0 else integrate(_sinc, 0.0, abs(x), _FINE))
    if fn is SpecialFn.CIN:
        return _cin_series(x)
    if fn is SpecialFn.CI:
        return EULER_GAMMA + math.log(x) - integrate(cin_integrand, 0.0, x, _FINE)
    if fn is SpecialFn.EIN:
        if x <= 8.0:
            return float(_ein_series(x))
        return math.log(x) + EULER_GAMMA + float(e1_vec(x)[0])
    if fn is SpecialFn.E1:
        return float(e1_vec(x)[0])
    if fn is SpecialFn.SHI:
        return math.copysign(1.0, x) * _shi_series(abs(x))
    if fn is SpecialFn.CINH:
        return _cinh_series(abs(x))
    if fn is SpecialFn.CHI:
        # Quadrature route on (cosh t - 1)/t keeps the Chi/Cinh relation
        # check in the tests a genuine dual-route comparison.
        return EULER_GAMMA + math.log(x) + integrate(lambda t: -_cinh_integrand(t), 0.0, x, _FINE)
    if fn is SpecialFn.TI2:
        if abs(x) <= 0.9:
            return _ti2_series(x)
        return math.copysign(1.0, x) * integrate(_atan_over_t, 0.0, abs(x), _FINE)
    raise ParameterError(f"unknown function id {fn!r}")


# ---------------------------------------------------------------------------
# Gamma.

_LANCZOS_G = 7.0
_LANCZOS_COEF = (
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
)


def gamma_function(kappa: float) -> float:
    """Gamma via a Lanczos approximation (reflection below 1/2).

    Relative accuracy around 1e-13 on (0, 20].
    """
    kappa = float(kappa)
    if not kappa > 0:
        raise DomainError(f"gamma_function requires kappa > 0, got {kappa}")
    if kappa > 20.0:
        raise ParameterError(f"kappa <= 20 supported, got {kappa}")
    return _lanczos(kappa)


def _lanczos(z: float) -> float:
    if z < 0.5:
        return math.pi / (math.sin(math.pi * z) * _lanczos(1.0 - z))
    z -= 1.0
    a = _LANCZOS_COEF[0]
    for i in range(1, len(_LANCZOS_COEF)):
        a += _LANCZOS_COEF[i] / (z + i)
    t = z + _LANCZOS_G + 0.5
    return math.sqrt(2.0 * math.pi) * t ** (z + 0.5) * math.exp(-t) * a

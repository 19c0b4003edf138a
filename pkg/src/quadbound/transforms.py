"""Derivatives of Taylor-remainder ratios via parameter integrals.

The device: a ratio (f(t) - Taylor part at a)/(t-a)^(n+1) equals
``int_0^1 (1-s)^n / n! f^(n+1)((t-a)s + a) ds``, so its k-th derivative is
``(1/n!) int_0^1 s^k (1-s)^n f^(n+k+1)((t-a)s + a) ds`` by differentiation
under the integral sign.  All the families here have base functions whose
derivatives cycle (sin/cos/exp/sinh/cosh), which makes the integrand exact
and branch-free to evaluate.

Two non-Taylor representations ride along: arctan(t)/t as the cosine
transform of E1, and tan t as a Laplace-type transform of 1/sinh(pi s);
both yield the same "differentiate under the integral, bound the moment"
workflow.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import specfun
from .errors import DomainError, ParameterError
from .quadrature import PanelConfig, integrate

_PI_2 = math.pi / 2.0


@dataclass(frozen=True)
class KernelFamily:
    """One function family with an integral representation.

    ``name`` identifies the family; ``base``, when set, names the function
    whose derivative cycle drives the Taylor-remainder representation.
    ``default_n`` is the Taylor order of the canonical representation.
    """

    name: str
    base: str | None
    default_n: int | None
    kappa: float | None = None
    u: float | None = None

    def base_derivative(self, order: int, point):
        """Closed-form ``order``-th derivative of the base function."""
        j = order % 4
        if self.base == "sin":
            return (np.sin, np.cos, lambda v: -np.sin(v), lambda v: -np.cos(v))[j](point)
        if self.base == "neg_cos":
            return (lambda v: -np.cos(v), np.sin, np.cos, lambda v: -np.sin(v))[j](point)
        if self.base == "neg_exp_neg":
            sign = -1.0 if order % 2 == 0 else 1.0
            return sign * np.exp(-np.asarray(point, dtype=np.float64))
        if self.base == "sinh":
            return (np.sinh, np.cosh)[order % 2](point)
        if self.base == "neg_cosh":
            return -((np.cosh, np.sinh)[order % 2](point))
        raise ParameterError(f"family {self.name!r} has no closed-form derivative cycle")


SINC = KernelFamily("sinc", base="sin", default_n=0)
CIN_KERNEL = KernelFamily("cin", base="neg_cos", default_n=0)
CIN_OVER_T2 = KernelFamily("cin2", base="neg_cos", default_n=1)
EIN_KERNEL = KernelFamily("ein", base="neg_exp_neg", default_n=0)
SINH_OVER_T = KernelFamily("shi", base="sinh", default_n=0)
COSH_KERNEL = KernelFamily("cinh", base="neg_cosh", default_n=0)
ARCTAN_OVER_T = KernelFamily("atan", base=None, default_n=0)
TAN_EVEN = KernelFamily("tan", base=None, default_n=None)

TAYLOR_FAMILIES = (SINC, CIN_KERNEL, CIN_OVER_T2, EIN_KERNEL, SINH_OVER_T, COSH_KERNEL)


def q_integrand(kappa: float, u: float) -> KernelFamily:
    """The sieve-integral family t^(-2 kappa) e^(-u t) e^(kappa Ein(t))."""
    if not kappa > 1:
        raise ParameterError(f"kappa > 1 required, got {kappa}")
    if not u > 0:
        raise ParameterError(f"u > 0 required, got {u}")
    return KernelFamily("qint", base=None, default_n=None, kappa=float(kappa), u=float(u))


@dataclass(frozen=True)
class TaylorKernelSpec:
    """Expansion point a, Taylor order n and sup bound M for one family."""

    family: KernelFamily
    a: float = 0.0
    n: int = 0
    m_sup: float = 1.0

    @classmethod
    def of(cls, family: KernelFamily) -> "TaylorKernelSpec":
        n = family.default_n if family.default_n is not None else 0
        return cls(family=family, a=0.0, n=n, m_sup=1.0)

    @property
    def canonical(self) -> bool:
        return self.a == 0.0 and self.n == self.family.default_n


def _check_tan_domain(t: float):
    if abs(t) >= _PI_2:
        raise DomainError(f"tan family requires |t| < pi/2, got {t}")


def ratio_value(spec: TaylorKernelSpec, t: float) -> float:
    """Continuous extension of (f(t) - Taylor part)/(t-a)^(n+1).

    At t == a this is f^(n+1)(a)/(n+1)!.  Canonical specs use
    cancellation-free closed forms; the leading Taylor term takes over
    below |t - a| = 1e-8.
    """
    fam = spec.family
    t = float(t)
    if fam is TAN_EVEN:
        _check_tan_domain(t)
        return math.tan(t)
    if fam.name == "qint":
        if not t > 0:
            raise DomainError(f"q integrand requires t > 0, got {t}")
        return float(t ** (-2.0 * fam.kappa) * math.exp(-fam.u * t) * math.exp(fam.kappa * specfun.ein_vec(t)[0]))
    if fam is ARCTAN_OVER_T:
        if abs(t) < 1e-8:
            return 1.0 - t * t / 3.0
        return math.atan(t) / t

    if not spec.canonical:
        return _ratio_generic(spec, t)
    if abs(t) < 1e-8:
        return _ratio_leading(fam, t)
    if fam is SINC:
        return math.sin(t) / t
    if fam is CIN_KERNEL:
        return 2.0 * math.sin(t / 2.0) ** 2 / t
    if fam is CIN_OVER_T2:
        return 2.0 * math.sin(t / 2.0) ** 2 / (t * t)
    if fam is EIN_KERNEL:
        return -math.expm1(-t) / t
    if fam is SINH_OVER_T:
        return math.sinh(t) / t
    if fam is COSH_KERNEL:
        return -2.0 * math.sinh(t / 2.0) ** 2 / t
    raise ParameterError(f"unsupported family {fam!r}")


def _ratio_leading(fam: KernelFamily, t: float) -> float:
    n = fam.default_n
    c0 = float(fam.base_derivative(n + 1, 0.0)) / math.factorial(n + 1)
    c1 = float(fam.base_derivative(n + 2, 0.0)) / math.factorial(n + 2)
    c2 = float(fam.base_derivative(n + 3, 0.0)) / math.factorial(n + 3)
    return c0 + t * (c1 + t * c2)


def _ratio_generic(spec: TaylorKernelSpec, t: float) -> float:
    fam = spec.family
    if fam.base is None:
        raise ParameterError(f"family {fam.name!r} only supports its canonical representation")
    a, n = spec.a, spec.n
    dt = t - a
    if abs(dt) < 0.5:
        # ratio(t) = sum_j dt^j f^(n+j+1)(a) / (n+j+1)!
        total = 0.0
        power = 1.0
        for j in range(0, 30):
            total += power * float(fam.base_derivative(n + j + 1, a)) / math.factorial(n + j + 1)
            power *= dt
            if abs(power) / math.factorial(n + j + 2) < 1e-18:
                break
        return total
    taylor = 0.0
    for j in range(n + 1):
        taylor += dt**j * float(fam.base_derivative(j, a)) / math.factorial(j)
    return (float(fam.base_derivative(0, t)) - taylor) / dt ** (n + 1)


def transform_derivative(spec: TaylorKernelSpec, k: int, t: float) -> float:
    """k-th derivative of the ratio, evaluated through its representation.

    Taylor families integrate s^k (1-s)^n f^(n+k+1)((t-a)s + a) / n! over
    [0, 1]; the arctan and tan families dispatch to their transforms (for
    TAN_EVEN, k means the 2k-th derivative of tan).
    """
    _check_k(k, 12)
    fam = spec.family
    t = float(t)
    if fam is ARCTAN_OVER_T:
        if not spec.canonical:
            raise ParameterError("arctan family only supports a=0, n=0")
        return arctan_derivative(k, t)
    if fam is TAN_EVEN:
        return tan_even_derivative(k, t)
    if fam.name == "qint":
        raise ParameterError(
            "q-integrand derivatives need the delay-ODE grid; use delay_ode.q_derivative"
        )
    a, n = spec.a, spec.n
    scale = 1.0 / math.factorial(n)

    def integrand(s):
        return s**k * (1.0 - s) ** n * fam.base_derivative(n + k + 1, (t - a) * s + a)

    return scale * integrate(integrand, 0.0, 1.0, PanelConfig())


def finite_difference_derivative(f, k: int, t: float) -> float:
    """Independent oracle: central differences with Richardson extrapolation.

    Accuracy is around 1e-6 absolute for the families here with k <= 4
    (better for low k); intended for cross-checks, not production use.
    """
    _check_k(k, 6)
    t = float(t)
    if k == 0:
        return float(f(t))
    coeffs = [(-1.0) ** i * math.comb(k, i) for i in range(k + 1)]
    offsets = [k / 2.0 - i for i in range(k + 1)]

    def stencil(h):
        return math.fsum(c * float(f(t + o * h)) for c, o in zip(coeffs, offsets)) / h**k

    h = 0.5 + 0.25 * k
    levels = 8
    tableau = [[0.0] * levels for _ in range(levels)]
    best = stencil(h)
    best_err = math.inf
    tableau[0][0] = best
    for j in range(1, levels):
        h /= 2.0
        tableau[j][0] = stencil(h)
        p4 = 1.0
        for m in range(1, j + 1):
            p4 *= 4.0
            tableau[j][m] = (p4 * tableau[j][m - 1] - tableau[j - 1][m - 1]) / (p4 - 1.0)
            err = max(
                abs(tableau[j][m] - tableau[j][m - 1]),
                abs(tableau[j][m] - tableau[j - 1][m - 1]),
            )
            if err <= best_err:
                best_err = err
                best = tableau[j][m]
        if abs(tableau[j][j] - tableau[j - 1][j - 1]) >= 4.0 * best_err and j > 2:
            break
    return best


_GRADED_STEPS = 60
_E1_SPLIT = 48.0
_e1_node_cache = None


def _e1_nodes():
    """Fixed abscissae, weights and E1 values for the [0, inf) integrals.

    Ratio-2 graded panels on [2^-60, 1] soak up the logarithmic
    singularity of E1 at 0; uniform half-width panels cover [1, 48].  The
    remainder below 2^-60 and the tail beyond 48 are both far below 1e-16.
    E1 at these nodes does not depend on the weight function, so it is
    evaluated once and cached.
    """
    global _e1_node_cache
    if _e1_node_cache is None:
        from .quadrature import gauss_legendre_rule

        rule = gauss_legendre_rule(16)
        graded = 2.0 ** -np.arange(_GRADED_STEPS, -1, -1.0)
        uniform = np.arange(1.0, _E1_SPLIT + 0.25, 0.5)
        edges = np.concatenate([graded, uniform[1:]])
        mid = 0.5 * (edges[:-1] + edges[1:])
        rad = 0.5 * (edges[1:] - edges[:-1])
        v = (mid[:, None] + rad[:, None] * rule.nodes[None, :]).ravel()
        w = (rad[:, None] * rule.weights[None, :]).ravel()
        _e1_node_cache = (v, w, specfun.e1_vec(v))
    return _e1_node_cache


def _e1_weighted_integral(k: int, weight) -> float:
    """int_0^inf v^k E1(v) w(v) dv with |w| <= 1."""
    from . import _kernels

    v, w, e1v = _e1_nodes()
    return _kernels.comp_dot(w, v**k * e1v * weight(v))


def e1_moment(k: int) -> float:
    """int_0^inf v^k E1(v) dv, which equals k!/(k+1)."""
    _check_k(k, 8)
    return _e1_weighted_integral(k, lambda v: np.ones_like(v))


def arctan_derivative(k: int, t: float) -> float:
    """k-th derivative of arctan(t)/t via int_0^inf E1(v) cos(vt) dv.

    Differentiating under the integral turns cos(vt) into
    v^k cos(vt + k pi/2); the quarter turns are applied exactly through
    the cos/sin cycle.  |result| <= k!/(k+1).
    """
    _check_k(k, 8)
    t = float(t)
    phase = k % 4
    if phase == 0:
        weight = lambda v: np.cos(v * t)
    elif phase == 1:
        weight = lambda v: -np.sin(v * t)
    elif phase == 2:
        weight = lambda v: -np.cos(v * t)
    else:
        weight = lambda v: np.sin(v * t)
    return _e1_weighted_integral(k, weight)


def _tan_ratio(s, t_abs: float):
    """sinh(2 s t)/sinh(pi s), overflow-safe for large s."""
    s = np.asarray(s, dtype=np.float64)
    out = np.empty_like(s)
    tiny = s < 1e-8
    mid = (~tiny) & (s < 20.0)
    big = s >= 20.0
    out[tiny] = 2.0 * t_abs / math.pi
    out[mid] = np.sinh(2.0 * s[mid] * t_abs) / np.sinh(math.pi * s[mid])
    sb = s[big]
    out[big] = (
        np.exp((2.0 * t_abs - math.pi) * sb)
        * np.expm1(-4.0 * sb * t_abs)
        / np.expm1(-2.0 * math.pi * sb)
    )
    return out


def tan_split_point(k: int, t: float) -> float:
    """Split making the dropped tail of the tan transform < 1e-18 scale."""
    c = math.pi - 2.0 * abs(t)
    s_star = max(20.0, 60.0 / c)
    for _ in range(8):
        s_star = (45.0 + 2.0 * k * math.log(2.0 * s_star + 1.0)) / c
    return max(20.0, s_star)


def tan_even_derivative(k: int, t: float) -> float:
    """2k-th derivative of tan via 2 int_0^inf (2s)^(2k) sinh(2st)/sinh(pi s) ds."""
    _check_k(k, 5)
    t = float(t)
    if abs(t) >= _PI_2 - 0.01:
        raise DomainError(f"|t| < pi/2 - 0.01 required, got {t}")
    sign = -1.0 if t < 0 else 1.0
    t_abs = abs(t)
    if t_abs == 0.0 and k > 0:
        return 0.0
    s_star = tan_split_point(k, t_abs)

    def f(s):
        s = np.asarray(s, dtype=np.float64)
        return 2.0 * (2.0 * s) ** (2 * k) * _tan_ratio(s, t_abs)

    return sign * integrate(f, 0.0, s_star, PanelConfig())


# Explicit product-rule expansions of two fourth derivatives.  They are
# numerically unstable near 0 (which is the point of the transform route),
# so they serve only as cross-check oracles away from the origin.

def d4_sinc_product_rule(t: float) -> float:
    if abs(t) < 0.1:
        raise DomainError("product-rule form is unstable for |t| < 0.1")
    s, c = math.sin(t), math.cos(t)
    return s / t + 4 * c / t**2 - 12 * s / t**3 - 24 * c / t**4 + 24 * s / t**5


def d4_cin_over_t2_product_rule(t: float) -> float:
    if abs(t) < 0.1:
        raise DomainError("product-rule form is unstable for |t| < 0.1")
    s, c = math.sin(t), math.cos(t)
    return 120 * (1 - c) / t**6 - 96 * s / t**5 + 36 * c / t**4 + 8 * s / t**3 - c / t**2


def _check_k(k, limit):
    if not isinstance(k, int) or isinstance(k, bool) or k < 0:
        raise ParameterError(f"k must be a nonnegative integer, got {k!r}")
    if k > limit:
        raise ParameterError(f"k <= {limit} supported, got {k}")

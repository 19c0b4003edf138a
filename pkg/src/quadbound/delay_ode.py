"""The sieve-weight function lambda_kappa: solve its delay differential
equation (v^(1-kappa) lambda(v))' = kappa v^(-kappa) lambda(v-1) by the
method of steps, verify the solution against the forward Laplace identity
int_0^inf e^(-v t) lambda(v) dv = t^(-2 kappa) e^(kappa Ein(t)), and use the
resulting nonnegativity to certify composite-Simpson error for the integral
of t^(-2 kappa) e^(-u t) e^(kappa Ein(t)).

Grid spacing is a reciprocal power of two so every integer delay lands on a
grid node: the integrand of the step integral has kinks exactly at integer
v, and panel boundaries there keep the accumulation at full fourth order.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels, specfun
from .bounds import simpson_error_bound
from .errors import DomainError, ParameterError
from .quadrature import PanelConfig, integrate, simpson_on_interval


@dataclass(frozen=True)
class LambdaGrid:
    """lambda_kappa tabulated on the uniform grid v_j = j * step."""

    kappa: float
    step: float
    v_max: int
    values: np.ndarray

    @property
    def steps_per_unit(self) -> int:
        return round(1.0 / self.step)

    def grid_v(self) -> np.ndarray:
        return self.step * np.arange(len(self.values))

    def boundary_formula(self, v):
        """The closed form e^(kappa gamma) v^(kappa-1) / Gamma(kappa) on [0, 1]."""
        v = np.asarray(v, dtype=np.float64)
        scale = math.exp(self.kappa * specfun.EULER_GAMMA) / specfun.gamma_function(self.kappa)
        return scale * v ** (self.kappa - 1.0)

    def value(self, v: float) -> float:
        """lambda at an arbitrary point: 0 for v <= 0, cubic interpolation
        between grid nodes otherwise."""
        v = float(v)
        if v <= 0.0:
            return 0.0
        if v >= self.v_max:
            raise DomainError(f"v = {v} beyond the tabulated range [0, {self.v_max}]")
        if v <= 1.0:
            return float(self.boundary_formula(v))
        pos = v / self.step
        i = int(pos)
        frac = pos - i
        if frac == 0.0:
            return float(self.values[i])
        i0 = min(max(i - 1, 0), len(self.values) - 4)
        w = _cubic_weights(pos - i0)
        return float(np.dot(w, self.values[i0 : i0 + 4]))


def _cubic_weights(u: float) -> np.ndarray:
    # Lagrange weights for nodes at offsets 0, 1, 2, 3 evaluated at u.
    return np.array(
        [
            (u - 1.0) * (u - 2.0) * (u - 3.0) / -6.0,
            u * (u - 2.0) * (u - 3.0) / 2.0,
            u * (u - 1.0) * (u - 3.0) / -2.0,
            u * (u - 1.0) * (u - 2.0) / 6.0,
        ]
    )


@dataclass(frozen=True)
class QIntSpec:
    """Parameters of the certified integral: kappa > 1, u > 0, 1 <= a <= b."""

    kappa: float
    u: float
    a: float
    b: float

    def __post_init__(self):
        if not self.kappa > 1:
            raise ParameterError(f"kappa > 1 required, got {self.kappa}")
        if not self.u > 0:
            raise ParameterError(f"u > 0 required, got {self.u}")
        if not 0 < self.a <= self.b:
            raise ParameterError(f"need 0 < a <= b, got a={self.a}, b={self.b}")


@dataclass(frozen=True)
class LaplaceCheck:
    lhs: float
    rhs: float
    defect: float


def build_lambda_grid(kappa: float, v_max: int, step: float) -> LambdaGrid:
    """Method-of-steps solution of the delay ODE on [0, v_max].

    On [0, 1] the boundary closed form; on each [m, m+1] the integrated form
    v^(1-kappa) lambda(v) = m^(1-kappa) lambda(m)
                            + kappa int_m^v u^(-kappa) lambda(u-1) du,
    accumulated per grid step by Simpson with cubic interpolation of
    lambda(u-1) at the step midpoints (exact closed-form values while
    u - 1 still lies in [0, 1]).
    """
    kappa = float(kappa)
    if not 1.0 < kappa <= 5.0:
        raise ParameterError(f"kappa must lie in (1, 5], got {kappa}")
    if not isinstance(v_max, (int, np.integer)) or isinstance(v_max, bool):
        raise ParameterError(f"v_max must be an integer, got {v_max!r}")
    if not 1 <= v_max <= 64:
        raise ParameterError(f"v_max must lie in [1, 64], got {v_max}")
    v_max = int(v_max)
    step = float(step)
    mantissa, exponent = math.frexp(step)
    p = 1 - exponent
    if mantissa != 0.5 or not 8 <= p <= 14:
        raise ParameterError(f"step must be 2^-p with 8 <= p <= 14, got {step}")

    n = 2**p
    h = 1.0 / n
    scale = math.exp(kappa * specfun.EULER_GAMMA) / specfun.gamma_function(kappa)
    values = np.empty(v_max * n + 1)
    values[: n + 1] = scale * (h * np.arange(n + 1)) ** (kappa - 1.0)
    mids_first = scale * (h * (np.arange(n) + 0.5)) ** (kappa - 1.0)
    _kernels.lambda_fill(values, mids_first, kappa, h, n, v_max)
    return LambdaGrid(kappa=kappa, step=h, v_max=v_max, values=values)


def _grid_simpson(grid: LambdaGrid, integrand_values: np.ndarray) -> float:
    """Composite Simpson over the whole grid (node count is even by
    construction, and integer kinks fall on panel boundaries)."""
    m = len(integrand_values) - 1
    w = np.empty(m + 1)
    w[0] = w[m] = 1.0
    w[1:m:2] = 4.0
    w[2:m:2] = 2.0
    return (grid.step / 3.0) * _kernels.comp_dot(w, integrand_values)


def laplace_check(grid: LambdaGrid, t: float) -> LaplaceCheck:
    """Compare int_0^v_max e^(-v t) lambda(v) dv with t^(-2k) e^(k Ein(t)).

    The dropped tail beyond v_max is controlled only for t >= 1 (lambda
    grows polynomially, so the tail is ~ e^(-v_max t) times a polynomial).
    """
    t = float(t)
    if t < 1.0:
        raise DomainError(f"laplace_check is certified for t >= 1 only, got {t}")
    v = grid.grid_v()
    lhs = _grid_simpson(grid, np.exp(-v * t) * grid.values)
    rhs = t ** (-2.0 * grid.kappa) * math.exp(grid.kappa * float(specfun.ein_vec(t)[0]))
    return LaplaceCheck(lhs=lhs, rhs=rhs, defect=abs(lhs - rhs))


def delay_residual(grid: LambdaGrid) -> float:
    """Max relative defect of the delay ODE at interior grid nodes.

    Fourth-order central differences of W(v) = v^(1-kappa) lambda(v) are
    compared against kappa v^(-kappa) lambda(v-1); the result is the max of
    |fd - rhs| / (1 + |rhs|) over v in (1, v_max) where the stencil fits.
    """
    n = grid.steps_per_unit
    h = grid.step
    v = grid.grid_v()
    w = np.empty_like(grid.values)
    w[1:] = v[1:] ** (1.0 - grid.kappa) * grid.values[1:]
    w[0] = 0.0
    idx = np.arange(n + 2, len(grid.values) - 2)
    fd = (w[idx - 2] - 8.0 * w[idx - 1] + 8.0 * w[idx + 1] - w[idx + 2]) / (12.0 * h)
    rhs = grid.kappa * v[idx] ** (-grid.kappa) * grid.values[idx - n]
    return float(np.max(np.abs(fd - rhs) / (1.0 + np.abs(rhs))))


def q_derivative(spec: QIntSpec, k: int, t: float, grid: LambdaGrid) -> float:
    """Fourth or fifth derivative of the certified integrand via the grid:

        f^(4)(t) =  int_0^inf (u+v)^4 e^(-(u+v)t) lambda(v) dv
        f^(5)(t) = -int_0^inf (u+v)^5 e^(-(u+v)t) lambda(v) dv

    truncated at v_max; for t >= 1 and v_max >= 40 the dropped tail is
    below 1e-8 relative.
    """
    if k not in (4, 5):
        raise ParameterError(f"k must be 4 or 5, got {k}")
    t = float(t)
    if t < spec.a or spec.a < 1.0:
        raise DomainError(f"q_derivative certified for t >= a >= 1, got t={t}, a={spec.a}")
    if grid.v_max < 40:
        raise ParameterError(f"grid.v_max >= 40 required, got {grid.v_max}")
    if abs(grid.kappa - spec.kappa) > 1e-12:
        raise ParameterError("grid was built for a different kappa")
    v = grid.grid_v()
    uv = spec.u + v
    integrand = uv**k * np.exp(-uv * t) * grid.values
    value = _grid_simpson(grid, integrand)
    return -value if k == 5 else value


def q_integrand_values(spec: QIntSpec, t) -> np.ndarray:
    """t^(-2 kappa) e^(-u t) e^(kappa Ein(t)) on an array of t > 0."""
    t = np.atleast_1d(np.asarray(t, dtype=np.float64))
    if np.any(t <= 0):
        raise DomainError("the integrand requires t > 0")
    return t ** (-2.0 * spec.kappa) * np.exp(-spec.u * t) * np.exp(spec.kappa * specfun.ein_vec(t))


def qint_eval(spec: QIntSpec, n: int, grid: LambdaGrid) -> tuple[float, float]:
    """Composite-Simpson value of the certified integral over [a, b] plus
    its a-priori error bound (b-a)^5 f^(4)(a) / (180 n^4).

    f^(4) is nonnegative and nonincreasing on [a, b] (lambda >= 0), so its
    sup is attained at a; the degenerate a == b case returns (0, 0).
    """
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool) or n < 2 or n % 2:
        raise ParameterError(f"n must be even and >= 2, got {n!r}")
    if spec.a < 1.0:
        raise ParameterError(f"certification requires a >= 1, got {spec.a}")
    if spec.a == spec.b:
        return 0.0, 0.0
    value = simpson_on_interval(lambda t: q_integrand_values(spec, t), spec.a, spec.b, int(n))
    f4a = q_derivative(spec, 4, spec.a, grid)
    bound = simpson_error_bound(f4a, spec.b - spec.a, int(n))
    return value, bound


def qint_oracle(spec: QIntSpec, panel_width: float = 0.05) -> float:
    """High-resolution panel-quadrature reference for the same integral."""
    if spec.a == spec.b:
        return 0.0
    return integrate(
        lambda t: q_integrand_values(spec, t),
        spec.a,
        spec.b,
        PanelConfig(panel_width=panel_width),
    )


def grid_to_csv(grid: LambdaGrid) -> str:
    """Serialize the grid as `v,lambda` rows with 17 significant digits."""
    lines = ["v,lambda"]
    v = grid.grid_v()
    for vi, li in zip(v, grid.values):
        lines.append(f"{vi:.17g},{li:.17g}")
    return "\n".join(lines) + "\n"

"""Actual-versus-bounded Simpson error for the Cin integral: the ratio
table over x = 1..10, plot-ready ratio scans, localization of the error
zero behind the ratio spike, and a truncated Frullani-type identity check.

The actual error E_n(x) = S_n(x) - Cin(x) is as small as a few 1e-16 at
(x, n) = (1, 1000), which is below one ulp of S_n itself.  Both S_n and the
Cin reference are therefore computed in double-double arithmetic and
subtracted before collapsing to a double (see ``_kernels``); the resulting
E_n values carry roughly 1e-25 absolute error.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

import numpy as np

from . import _kernels
from ._kernels.ddcore import dd_sub
from .errors import BracketError, ComputationError, ParameterError
from .quadrature import PanelConfig, integrate

# A ratio below this |E_n| is reported as undefined.  The double-double
# engine resolves E_n to ~1e-25, so ratios remain meaningful well below
# the 1e-14 one would quote for a plain-double engine; 1e-18 keeps the
# (x, n) = (1, 1000) table cell (E ~ 4.3e-16) defined.
UNDEF_THRESHOLD = 1e-18

TABLE_X = tuple(float(v) for v in range(1, 11))
TABLE_N = (10, 100, 1000)


@dataclass(frozen=True)
class SimpsonReport:
    """One (x, n) experiment: Simpson value, reference, error, bound, ratio."""

    x: float
    n: int
    s_n: float
    reference: float
    e_n: float
    b_n: float
    r_n: float | None


@dataclass(frozen=True)
class ZeroBracket:
    lo: float
    hi: float
    e_lo: float
    e_hi: float


@dataclass(frozen=True)
class FrullaniSpec:
    alpha: float
    beta: float
    truncation: float

    def __post_init__(self):
        if not self.truncation >= 1.0:
            raise ParameterError(f"truncation must be >= 1, got {self.truncation}")


@dataclass(frozen=True)
class FrullaniResult:
    truncated: float
    tail_bound: float
    target: float


def _validate_n(n: int):
    if not isinstance(n, (int, np.integer)) or isinstance(n, bool):
        raise ParameterError(f"n must be an integer, got {n!r}")
    if n < 2 or n % 2:
        raise ParameterError(f"n must be even and >= 2, got {n}")
    if n > 2**14:
        raise ParameterError(f"n must stay <= 2^14, got {n}")


def _validate_xn(x: float, n: int):
    _validate_n(n)
    if not 0.0 < x <= 40.0:
        raise ParameterError(f"x must lie in (0, 40], got {x}")


def _reports(xs: np.ndarray, n: int) -> list[SimpsonReport]:
    shi, slo = _kernels.simpson_cin_dd(xs, n)
    chi, clo = _kernels.cin_dd(xs)
    ehi, elo = dd_sub(shi, slo, chi, clo)
    e = ehi + elo
    out = []
    for i, x in enumerate(xs):
        # The canonical form of the bound (M4 = 1/5 folded into the 900).
        b = float(x) ** 5 / (900.0 * int(n) ** 4)
        r = b / e[i] if abs(e[i]) >= UNDEF_THRESHOLD else None
        out.append(
            SimpsonReport(
                x=float(x),
                n=int(n),
                s_n=float(shi[i] + slo[i]),
                reference=float(chi[i] + clo[i]),
                e_n=float(e[i]),
                b_n=b,
                r_n=None if r is None else float(r),
            )
        )
    return out


def simpson_report(x: float, n: int) -> SimpsonReport:
    """Measure the composite-Simpson error for Cin at one (x, n)."""
    x = float(x)
    _validate_xn(x, n)
    return _reports(np.array([x]), int(n))[0]


def simpson_error(x: float, n: int) -> float:
    """E_n(x) = S_n(x) - Cin(x), resolved far below one ulp of S_n."""
    x = float(x)
    _validate_xn(x, n)
    return float(_kernels.simpson_cin_error(np.array([x]), int(n))[0])


def table1() -> list[SimpsonReport]:
    """The 30-cell ratio grid: x = 1..10 against n in {10, 100, 1000}.

    Deterministic (x, n) ordering; ratios rounded half-away-from-zero to
    two decimals reproduce the reference table.
    """
    xs = np.array(TABLE_X)
    by_n = {n: _reports(xs, n) for n in TABLE_N}
    out = []
    for i in range(len(TABLE_X)):
        for n in TABLE_N:
            out.append(by_n[n][i])
    return out


def round_half_away(value: float, digits: int = 2) -> float:
    """Round half away from zero, e.g. 2.555 -> 2.56 and -2.555 -> -2.56."""
    q = Decimal(1).scaleb(-digits)
    return float(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_UP))


CSV_HEADER = "x,n,S_n,Cin,E_n,B_n,R_n"


def _fmt(v: float) -> str:
    return format(float(v), ".17g")


def reports_to_csv(reports) -> str:
    """Serialize reports to CSV; undefined ratios become the literal 'undef'."""
    buf = io.StringIO()
    buf.write(CSV_HEADER + "\n")
    for r in reports:
        ratio = "undef" if r.r_n is None else _fmt(r.r_n)
        buf.write(
            f"{_fmt(r.x)},{r.n},{_fmt(r.s_n)},{_fmt(r.reference)},{_fmt(r.e_n)},{_fmt(r.b_n)},{ratio}\n"
        )
    return buf.getvalue()


def parse_report_csv(text: str) -> list[SimpsonReport]:
    """Inverse of :func:`reports_to_csv` (used by the round-trip checks)."""
    lines = [ln for ln in text.strip().splitlines() if ln]
    if lines[0] != CSV_HEADER:
        raise ParameterError(f"unexpected CSV header {lines[0]!r}")
    out = []
    for ln in lines[1:]:
        x, n, s_n, ref, e_n, b_n, r_n = ln.split(",")
        out.append(
            SimpsonReport(
                x=float(x),
                n=int(n),
                s_n=float(s_n),
                reference=float(ref),
                e_n=float(e_n),
                b_n=float(b_n),
                r_n=None if r_n == "undef" else float(r_n),
            )
        )
    return out


def scan_reports(n: int, x_min: float, x_max: float, step: float) -> list[SimpsonReport]:
    """Reports on the grid x_min, x_min + step, ..., up to x_max."""
    if not step > 0:
        raise ParameterError(f"step must be positive, got {step}")
    if not 0.0 <= x_min < x_max <= 40.0:
        raise ParameterError(f"need 0 <= x_min < x_max <= 40, got [{x_min}, {x_max}]")
    _validate_n(n)
    count = int(math.floor((x_max - x_min) / step + 1e-9)) + 1
    xs = x_min + step * np.arange(count)
    xs = xs[xs > 0.0]
    return _reports(xs, int(n))


def scan_ratio(n: int, x_min: float, x_max: float, step: float):
    """Plot-ready (x, ratio) series; vanishing-error points are undefined.

    Grid points where |E_n| falls below the undefined threshold carry None
    instead of an interpolated or clamped ratio.
    """
    points = [(r.x, r.r_n) for r in scan_reports(n, x_min, x_max, step)]
    if x_min == 0.0:
        points.insert(0, (0.0, None))
    return points


def locate_error_zero(n: int, lo: float, hi: float, tol: float = 1e-6) -> ZeroBracket:
    """Bisect a sign change of E_n down to a bracket of width <= tol."""
    if not tol > 0:
        raise ParameterError(f"tol must be positive, got {tol}")
    lo = float(lo)
    hi = float(hi)
    if not lo < hi:
        raise ParameterError(f"need lo < hi, got [{lo}, {hi}]")
    e_lo = simpson_error(lo, n)
    e_hi = simpson_error(hi, n)
    if math.copysign(1.0, e_lo) == math.copysign(1.0, e_hi):
        raise BracketError(f"E_{n} does not change sign on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        e_mid = simpson_error(mid, n)
        if math.copysign(1.0, e_mid) == math.copysign(1.0, e_lo):
            lo, e_lo = mid, e_mid
        else:
            hi, e_hi = mid, e_mid
    return ZeroBracket(lo=lo, hi=hi, e_lo=e_lo, e_hi=e_hi)


def frullani_integrand(alpha: float, beta: float):
    """(cos(alpha t) - cos(beta t))/t^2 in the cancellation-free combined
    form 2 (sin^2(beta t / 2) - sin^2(alpha t / 2)) / t^2."""

    limit = (beta * beta - alpha * alpha) / 2.0

    def f(t):
        t = np.asarray(t, dtype=np.float64)
        small = np.abs(t) < 1e-8
        safe = np.where(small, 1.0, t)
        value = 2.0 * (np.sin(beta * safe / 2.0) ** 2 - np.sin(alpha * safe / 2.0) ** 2) / (safe * safe)
        return np.where(small, limit, value)

    return f


def frullani_check(spec: FrullaniSpec) -> FrullaniResult:
    """Truncated integral of (cos(alpha t) - cos(beta t))/t^2 against its
    closed form (|beta| - |alpha|) pi/2, with the 2/T tail majorant."""
    truncated = integrate(frullani_integrand(spec.alpha, spec.beta), 0.0, spec.truncation, PanelConfig())
    tail = 2.0 / spec.truncation
    target = (abs(spec.beta) - abs(spec.alpha)) * math.pi / 2.0
    if abs(truncated - target) > tail + 1e-8:
        raise ComputationError(
            f"truncated Frullani value {truncated} misses target {target} by more than the tail bound {tail}"
        )
    return FrullaniResult(truncated=truncated, tail_bound=tail, target=target)

"""Closed-form derivative bounds for the kernel families, and the Simpson
error bound assembled from them.

Every bound here is of the form (moment integral of the representing
kernel) times a uniform derivative bound M, so the factorial arithmetic is
done on exact integers before any float division.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError, ParameterError
from .transforms import (
    ARCTAN_OVER_T,
    CIN_KERNEL,
    CIN_OVER_T2,
    COSH_KERNEL,
    EIN_KERNEL,
    KernelFamily,
    SINC,
    SINH_OVER_T,
    TAN_EVEN,
)

_FACTORIAL_GUARD = 20


@dataclass(frozen=True)
class BoundResult:
    """A derivative bound with its sharpness metadata.

    ``sharp_at`` is the argument at which the bound, evaluated there, is
    attained (subject to ``parity``: 'even'/'odd' restrict the derivative
    orders for which equality holds, 'always' means every order).
    """

    value: float
    sharp_at: float | None = None
    parity: str | None = None


def taylor_bound(n: int, k: int, m_sup: float) -> BoundResult:
    """k! * M / (n+k+1)! : the uniform bound on the k-th derivative of a
    degree-n Taylor-remainder ratio whose (n+k+1)-th base derivative is
    bounded by M."""
    _check_order(n, "n")
    _check_order(k, "k")
    if n + k + 1 > _FACTORIAL_GUARD:
        raise ParameterError(f"n + k + 1 must stay <= {_FACTORIAL_GUARD}, got {n + k + 1}")
    if not m_sup > 0:
        raise ParameterError(f"M must be positive, got {m_sup}")
    # (n+k+1)!/k! as an exact integer, so small cases divide exactly.
    denom = 1
    for j in range(k + 1, n + k + 2):
        denom *= j
    # Sharpness depends on the concrete family, not on the abstract formula.
    return BoundResult(value=m_sup / denom, sharp_at=None, parity=None)


def family_bound(family: KernelFamily, k: int, t: float = 0.0) -> BoundResult:
    """The closed-form bound on the family's k-th transform derivative.

    For TAN_EVEN, k counts derivative pairs: the bound covers the 2k-th
    derivative of tan and requires |t| < pi/2.
    """
    _check_order(k, "k")
    if family in (SINC, CIN_KERNEL, EIN_KERNEL):
        parity = {SINC: "even", CIN_KERNEL: "odd", EIN_KERNEL: "always"}[family]
        return BoundResult(value=1.0 / (k + 1), sharp_at=0.0, parity=parity)
    if family is CIN_OVER_T2:
        return BoundResult(value=1.0 / ((k + 1) * (k + 2)), sharp_at=0.0, parity="even")
    if family is SINH_OVER_T:
        value = math.cosh(t) / (k + 1) if k % 2 == 0 else abs(math.sinh(t)) / (k + 1)
        return BoundResult(value=value, sharp_at=0.0, parity="always")
    if family is COSH_KERNEL:
        value = abs(math.sinh(t)) / (k + 1) if k % 2 == 0 else math.cosh(t) / (k + 1)
        return BoundResult(value=value, sharp_at=0.0, parity="always")
    if family is ARCTAN_OVER_T:
        if k > _FACTORIAL_GUARD:
            raise ParameterError(f"k must stay <= {_FACTORIAL_GUARD}, got {k}")
        return BoundResult(value=math.factorial(k) / (k + 1), sharp_at=0.0, parity="even")
    if family is TAN_EVEN:
        if abs(t) >= math.pi / 2:
            raise DomainError(f"tan bound requires |t| < pi/2, got {t}")
        if 2 * k > _FACTORIAL_GUARD:
            raise ParameterError(f"2k must stay <= {_FACTORIAL_GUARD}, got {2 * k}")
        value = math.factorial(2 * k) / (math.pi / 2 - abs(t)) ** (2 * k + 1)
        # Only asymptotically sharp (as |t| -> pi/2), so no equality point.
        return BoundResult(value=value, sharp_at=None, parity=None)
    raise ParameterError(f"no closed-form bound for family {family!r}")


def simpson_error_bound(m4: float, x: float, n: int) -> float:
    """x^5 * M4 / (180 n^4), the a-priori composite-Simpson error bound on
    [0, x] for an integrand whose fourth derivative is bounded by M4."""
    if not m4 > 0:
        raise ParameterError(f"M4 must be positive, got {m4}")
    if x < 0:
        raise ParameterError(f"x must be nonnegative, got {x}")
    if not isinstance(n, int) or n < 2 or n % 2:
        raise ParameterError(f"n must be even and >= 2, got {n}")
    return x**5 * m4 / (180.0 * n**4)


def _check_order(value, name):
    if not isinstance(value, int) or isinstance(value, bool) or value < 0:
        raise ParameterError(f"{name} must be a nonnegative integer, got {value!r}")

"""Pure-numpy backend for the hot numeric kernels.

Compensated reductions go through ``math.fsum`` (exactly rounded), and the
double-double pipelines reuse :mod:`ddcore` elementwise on arrays.  This
backend is selected with ``QUADBOUND_BACKEND=numpy`` or used automatically
when numba is unavailable.
"""

import math

import numpy as np

from .ddcore import (
    dd_add,
    dd_add_d,
    dd_div,
    dd_div_d,
    dd_mul,
    dd_mul_d,
    dd_sub,
    two_prod,
)
from .ddconst import (
    COS_COEF_HI,
    COS_COEF_LO,
    PIO2_HI,
    PIO2_LO,
    PIO2_MID,
    SIN_COEF_HI,
    SIN_COEF_LO,
    SIN_TERMS,
    TWO_OVER_PI,
)

NAME = "numpy"


def comp_sum(values):
    """Compensated sum of a 1-D array (exactly rounded)."""
    return math.fsum(np.asarray(values, dtype=np.float64).ravel())


def comp_dot(weights, values):
    """Compensated dot product: products are split error-free, then fsum'd."""
    w = np.asarray(weights, dtype=np.float64).ravel()
    v = np.asarray(values, dtype=np.float64).ravel()
    p, e = two_prod(w, v)
    return math.fsum(p) + math.fsum(e)


def _horner_dd(zhi, zlo, chi, clo):
    ahi = np.full_like(zhi, chi[-1])
    alo = np.full_like(zhi, clo[-1])
    for k in range(len(chi) - 2, -1, -1):
        ahi, alo = dd_mul(ahi, alo, zhi, zlo)
        ahi, alo = dd_add(ahi, alo, np.full_like(zhi, chi[k]), np.full_like(zhi, clo[k]))
    return ahi, alo


def dd_sin(xhi, xlo):
    """sin of a double-double argument, elementwise, |x| <= ~200."""
    xhi = np.asarray(xhi, dtype=np.float64)
    xlo = np.asarray(xlo, dtype=np.float64)
    j = np.rint((xhi + xlo) * TWO_OVER_PI)
    p, e = two_prod(j, PIO2_HI)
    rhi, rlo = dd_add(xhi, xlo, -p, -e)
    p, e = two_prod(j, PIO2_MID)
    rhi, rlo = dd_add(rhi, rlo, -p, -e)
    rhi, rlo = dd_add_d(rhi, rlo, -(j * PIO2_LO))

    zhi, zlo = dd_mul(rhi, rlo, rhi, rlo)
    shi, slo = _horner_dd(zhi, zlo, SIN_COEF_HI, SIN_COEF_LO)
    shi, slo = dd_mul(shi, slo, rhi, rlo)
    chi_, clo_ = _horner_dd(zhi, zlo, COS_COEF_HI, COS_COEF_LO)

    k = np.mod(j.astype(np.int64), 4)
    sin_hi = np.where(k == 0, shi, np.where(k == 1, chi_, np.where(k == 2, -shi, -chi_)))
    sin_lo = np.where(k == 0, slo, np.where(k == 1, clo_, np.where(k == 2, -slo, -clo_)))
    return sin_hi, sin_lo


def cin_integrand_dd(thi, tlo):
    """The stable Cin integrand 2*sin^2(t/2)/t in double-double, 0 at t = 0."""
    thi = np.asarray(thi, dtype=np.float64)
    tlo = np.asarray(tlo, dtype=np.float64)
    shi, slo = dd_sin(0.5 * thi, 0.5 * tlo)
    nhi, nlo = dd_mul(shi, slo, shi, slo)
    nhi, nlo = dd_mul_d(nhi, nlo, 2.0)
    safe = np.where(thi == 0.0, 1.0, thi)
    fhi, flo = dd_div(nhi, nlo, safe, tlo)
    zero = thi == 0.0
    return np.where(zero, 0.0, fhi), np.where(zero, 0.0, flo)


def cin_dd(xs):
    """Cin by its power series in double-double, elementwise.

    Alternating series sum_{m>=1} (-1)^(m+1) x^(2m) / (2m * (2m)!), summed
    in double-double so the large-term cancellation for x up to ~45 still
    leaves ~1e-16 absolute accuracy.
    """
    x = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    zhi, zlo = two_prod(x, x)
    uhi, ulo = dd_mul_d(zhi, zlo, 0.5)
    shi, slo = dd_mul_d(uhi, ulo, 0.5)
    terms = int(1.5 * float(np.max(np.abs(x), initial=0.0)) + 35.0)
    sign = -1.0
    for m in range(2, terms + 1):
        uhi, ulo = dd_mul(uhi, ulo, zhi, zlo)
        uhi, ulo = dd_div_d(uhi, ulo, float((2 * m - 1) * (2 * m)))
        thi, tlo = dd_div_d(uhi, ulo, float(2 * m))
        shi, slo = dd_add(shi, slo, sign * thi, sign * tlo)
        sign = -sign
    return shi, slo


def _dd_sum_axis1(hi, lo):
    """Tree-reduce dd values along axis 1."""
    m = hi.shape[1]
    while m > 1:
        k = m // 2
        ahi, alo = dd_add(hi[:, :k], lo[:, :k], hi[:, k : 2 * k], lo[:, k : 2 * k])
        if m % 2:
            ahi[:, 0], alo[:, 0] = dd_add(ahi[:, 0], alo[:, 0], hi[:, m - 1], lo[:, m - 1])
        hi, lo = ahi, alo
        m = k
    return hi[:, 0], lo[:, 0]


def simpson_cin_dd(xs, n):
    """Composite-Simpson value S_n for the Cin integrand, double-double."""
    x = np.atleast_1d(np.asarray(xs, dtype=np.float64))
    i = np.arange(n + 1, dtype=np.float64)
    phi, plo = two_prod(x[:, None], i[None, :])
    thi, tlo = dd_div_d(phi, plo, float(n))
    fhi, flo = cin_integrand_dd(thi, tlo)
    w = np.empty(n + 1)
    w[0] = w[n] = 1.0
    w[1:n:2] = 4.0
    w[2:n:2] = 2.0
    fhi, flo = dd_mul_d(fhi, flo, w[None, :])
    shi, slo = _dd_sum_axis1(fhi, flo)
    ghi, glo = dd_div_d(x, np.zeros_like(x), 3.0 * n)
    return dd_mul(shi, slo, ghi, glo)


def simpson_cin_error(xs, n):
    """E_n = S_n - Cin for each x, resolved well below one ulp of S_n."""
    shi, slo = simpson_cin_dd(xs, n)
    chi_, clo_ = cin_dd(xs)
    ehi, elo = dd_sub(shi, slo, chi_, clo_)
    return ehi + elo


def lambda_fill(values, mids_first, kappa, h, steps, v_max):
    """Fill the delay-ODE grid in place by the method of steps.

    ``values[0 : steps+1]`` must hold the closed-form boundary segment and
    ``mids_first`` the closed-form integrand-argument values at the interval
    midpoints shifted into [0, 1].  Works interval by interval; inside one
    interval the accumulation is a cumulative Simpson sum, vectorized here.
    """
    n = steps
    w_acc = values[n]
    wm = 9.0 / 16.0
    we = 1.0 / 16.0
    for m in range(1, v_max):
        lam_prev = values[(m - 1) * n : m * n + 1]
        if m == 1:
            lam_mid = mids_first
        else:
            lam_mid = np.empty(n)
            lam_mid[1:-1] = wm * (lam_prev[1 : n - 1] + lam_prev[2:n]) - we * (
                lam_prev[: n - 2] + lam_prev[3 : n + 1]
            )
            # One-sided cubic stencils at the interval ends.
            lam_mid[0] = (
                0.3125 * lam_prev[0] + 0.9375 * lam_prev[1] - 0.3125 * lam_prev[2] + 0.0625 * lam_prev[3]
            )
            lam_mid[-1] = (
                0.0625 * lam_prev[n - 3] - 0.3125 * lam_prev[n - 2] + 0.9375 * lam_prev[n - 1] + 0.3125 * lam_prev[n]
            )
        u_nodes = m + h * np.arange(n + 1)
        u_mids = m + h * (np.arange(n) + 0.5)
        g_nodes = u_nodes ** (-kappa) * lam_prev
        g_mids = u_mids ** (-kappa) * lam_mid
        inc = (kappa * h / 6.0) * (g_nodes[:-1] + 4.0 * g_mids + g_nodes[1:])
        w_vals = w_acc + np.cumsum(inc)
        values[m * n + 1 : (m + 1) * n + 1] = u_nodes[1:] ** (kappa - 1.0) * w_vals
        w_acc = w_vals[-1]

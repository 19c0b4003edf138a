"""Numba backend: the same kernels as :mod:`np_backend`, JIT-compiled.

Scalar double-double helpers are restated here so the whole call tree is
nopython-compilable; the formulas are identical to :mod:`ddcore`.
Compensated reductions use Neumaier summation (numba has no ``math.fsum``).
"""

import numpy as np
from numba import njit

from .ddcore import dd_sub
from .ddconst import (
    COS_COEF_HI,
    COS_COEF_LO,
    PIO2_HI,
    PIO2_LO,
    PIO2_MID,
    SIN_COEF_HI,
    SIN_COEF_LO,
    TWO_OVER_PI,
)

NAME = "numba"

_SPLITTER = 134217729.0


@njit(cache=True)
def _two_sum(a, b):
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


@njit(cache=True)
def _quick_two_sum(a, b):
    s = a + b
    e = b - (s - a)
    return s, e


@njit(cache=True)
def _two_prod(a, b):
    p = a * b
    ta = _SPLITTER * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLITTER * b
    bhi = tb - (tb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


@njit(cache=True)
def _dd_add(ahi, alo, bhi, blo):
    s1, s2 = _two_sum(ahi, bhi)
    t1, t2 = _two_sum(alo, blo)
    s2 = s2 + t1
    s1, s2 = _quick_two_sum(s1, s2)
    s2 = s2 + t2
    return _quick_two_sum(s1, s2)


@njit(cache=True)
def _dd_add_d(ahi, alo, b):
    s1, s2 = _two_sum(ahi, b)
    s2 = s2 + alo
    return _quick_two_sum(s1, s2)


@njit(cache=True)
def _dd_mul(ahi, alo, bhi, blo):
    p, e = _two_prod(ahi, bhi)
    e = e + (ahi * blo + alo * bhi)
    return _quick_two_sum(p, e)


@njit(cache=True)
def _dd_mul_d(ahi, alo, b):
    p, e = _two_prod(ahi, b)
    e = e + alo * b
    return _quick_two_sum(p, e)


@njit(cache=True)
def _dd_div(ahi, alo, bhi, blo):
    q1 = ahi / bhi
    p, e = _two_prod(q1, bhi)
    rhi, rlo = _dd_add(ahi, alo, -p, -e)
    rlo = rlo - q1 * blo
    q2 = (rhi + rlo) / bhi
    return _quick_two_sum(q1, q2)


@njit(cache=True)
def _dd_div_d(ahi, alo, b):
    q1 = ahi / b
    p, e = _two_prod(q1, b)
    rhi, rlo = _dd_add(ahi, alo, -p, -e)
    q2 = (rhi + rlo) / b
    return _quick_two_sum(q1, q2)


@njit(cache=True)
def _dd_sin_one(xhi, xlo, schi, sclo, cchi, cclo):
    j = np.rint((xhi + xlo) * TWO_OVER_PI)
    p, e = _two_prod(j, PIO2_HI)
    rhi, rlo = _dd_add(xhi, xlo, -p, -e)
    p, e = _two_prod(j, PIO2_MID)
    rhi, rlo = _dd_add(rhi, rlo, -p, -e)
    rhi, rlo = _dd_add_d(rhi, rlo, -(j * PIO2_LO))

    zhi, zlo = _dd_mul(rhi, rlo, rhi, rlo)
    shi = schi[-1]
    slo = sclo[-1]
    for k in range(len(schi) - 2, -1, -1):
        shi, slo = _dd_mul(shi, slo, zhi, zlo)
        shi, slo = _dd_add(shi, slo, schi[k], sclo[k])
    shi, slo = _dd_mul(shi, slo, rhi, rlo)
    chi = cchi[-1]
    clo = cclo[-1]
    for k in range(len(cchi) - 2, -1, -1):
        chi, clo = _dd_mul(chi, clo, zhi, zlo)
        chi, clo = _dd_add(chi, clo, cchi[k], cclo[k])

    k4 = int(j) % 4
    if k4 == 0:
        return shi, slo
    if k4 == 1:
        return chi, clo
    if k4 == 2:
        return -shi, -slo
    return -chi, -clo


@njit(cache=True)
def _cin_integrand_one(thi, tlo, schi, sclo, cchi, cclo):
    if thi == 0.0:
        return 0.0, 0.0
    shi, slo = _dd_sin_one(0.5 * thi, 0.5 * tlo, schi, sclo, cchi, cclo)
    nhi, nlo = _dd_mul(shi, slo, shi, slo)
    nhi, nlo = _dd_mul_d(nhi, nlo, 2.0)
    return _dd_div(nhi, nlo, thi, tlo)


@njit(cache=True)
def _dd_sin_arr(xhi, xlo, schi, sclo, cchi, cclo):
    out_hi = np.empty_like(xhi)
    out_lo = np.empty_like(xhi)
    for i in range(xhi.shape[0]):
        out_hi[i], out_lo[i] = _dd_sin_one(xhi[i], xlo[i], schi, sclo, cchi, cclo)
    return out_hi, out_lo


@njit(cache=True)
def _cin_dd_arr(xs):
    out_hi = np.empty_like(xs)
    out_lo = np.empty_like(xs)
    for i in range(xs.shape[0]):
        x = xs[i]
        zhi, zlo = _two_prod(x, x)
        uhi, ulo = _dd_mul_d(zhi, zlo, 0.5)
        shi, slo = _dd_mul_d(uhi, ulo, 0.5)
        sign = -1.0
        m = 2
        while m < 400:
            uhi, ulo = _dd_mul(uhi, ulo, zhi, zlo)
            uhi, ulo = _dd_div_d(uhi, ulo, float((2 * m - 1) * (2 * m)))
            thi, tlo = _dd_div_d(uhi, ulo, float(2 * m))
            shi, slo = _dd_add(shi, slo, sign * thi, sign * tlo)
            if abs(thi) < 1e-38 * (1.0 + abs(shi)):
                break
            sign = -sign
            m += 1
        out_hi[i] = shi
        out_lo[i] = slo
    return out_hi, out_lo


@njit(cache=True)
def _simpson_cin_dd_arr(xs, n, schi, sclo, cchi, cclo):
    out_hi = np.empty_like(xs)
    out_lo = np.empty_like(xs)
    for i in range(xs.shape[0]):
        x = xs[i]
        acc_hi = 0.0
        acc_lo = 0.0
        for j in range(n + 1):
            phi, plo = _two_prod(x, float(j))
            thi, tlo = _dd_div_d(phi, plo, float(n))
            fhi, flo = _cin_integrand_one(thi, tlo, schi, sclo, cchi, cclo)
            if j == 0 or j == n:
                w = 1.0
            elif j % 2 == 1:
                w = 4.0
            else:
                w = 2.0
            fhi, flo = _dd_mul_d(fhi, flo, w)
            acc_hi, acc_lo = _dd_add(acc_hi, acc_lo, fhi, flo)
        ghi, glo = _dd_div_d(x, 0.0, 3.0 * n)
        out_hi[i], out_lo[i] = _dd_mul(acc_hi, acc_lo, ghi, glo)
    return out_hi, out_lo


@njit(cache=True)
def _neumaier(values):
    s = 0.0
    c = 0.0
    for i in range(values.shape[0]):
        x = values[i]
        t = s + x
        if abs(s) >= abs(x):
            c += (s - t) + x
        else:
            c += (x - t) + s
        s = t
    return s + c


@njit(cache=True)
def _neumaier_dot(w, v):
    s = 0.0
    c = 0.0
    for i in range(w.shape[0]):
        p, e = _two_prod(w[i], v[i])
        t = s + p
        if abs(s) >= abs(p):
            c += (s - t) + p
        else:
            c += (p - t) + s
        s = t
        c += e
    return s + c


@njit(cache=True)
def _lambda_fill(values, mids_first, kappa, h, steps, v_max):
    n = steps
    w_acc = values[n]
    for m in range(1, v_max):
        base = (m - 1) * n
        for j in range(1, n + 1):
            u0 = m + h * (j - 1)
            u1 = m + h * j
            um = m + h * (j - 0.5)
            g0 = u0 ** (-kappa) * values[base + j - 1]
            g1 = u1 ** (-kappa) * values[base + j]
            if m == 1:
                lam_mid = mids_first[j - 1]
            elif j == 1:
                lam_mid = (
                    0.3125 * values[base]
                    + 0.9375 * values[base + 1]
                    - 0.3125 * values[base + 2]
                    + 0.0625 * values[base + 3]
                )
            elif j == n:
                lam_mid = (
                    0.0625 * values[base + n - 3]
                    - 0.3125 * values[base + n - 2]
                    + 0.9375 * values[base + n - 1]
                    + 0.3125 * values[base + n]
                )
            else:
                lam_mid = (9.0 / 16.0) * (values[base + j - 1] + values[base + j]) - (
                    1.0 / 16.0
                ) * (values[base + j - 2] + values[base + j + 1])
            gm = um ** (-kappa) * lam_mid
            w_acc = w_acc + (kappa * h / 6.0) * (g0 + 4.0 * gm + g1)
            values[m * n + j] = u1 ** (kappa - 1.0) * w_acc


def comp_sum(values):
    """Compensated (Neumaier) sum of a 1-D array."""
    return _neumaier(np.ascontiguousarray(values, dtype=np.float64).ravel())


def comp_dot(weights, values):
    """Compensated dot product with error-free products."""
    w = np.ascontiguousarray(weights, dtype=np.float64).ravel()
    v = np.ascontiguousarray(values, dtype=np.float64).ravel()
    return _neumaier_dot(w, v)


def dd_sin(xhi, xlo):
    xhi = np.ascontiguousarray(np.atleast_1d(xhi), dtype=np.float64)
    xlo = np.ascontiguousarray(np.atleast_1d(xlo), dtype=np.float64)
    return _dd_sin_arr(xhi, xlo, SIN_COEF_HI, SIN_COEF_LO, COS_COEF_HI, COS_COEF_LO)


def cin_dd(xs):
    xs = np.ascontiguousarray(np.atleast_1d(xs), dtype=np.float64)
    return _cin_dd_arr(xs)


def simpson_cin_dd(xs, n):
    xs = np.ascontiguousarray(np.atleast_1d(xs), dtype=np.float64)
    return _simpson_cin_dd_arr(xs, n, SIN_COEF_HI, SIN_COEF_LO, COS_COEF_HI, COS_COEF_LO)


def simpson_cin_error(xs, n):
    shi, slo = simpson_cin_dd(xs, n)
    chi_, clo_ = cin_dd(xs)
    # (S - C) in double-double, then collapsed to a double.
    ehi, elo = dd_sub(shi, slo, chi_, clo_)
    return ehi + elo


def lambda_fill(values, mids_first, kappa, h, steps, v_max):
    _lambda_fill(values, mids_first, float(kappa), float(h), steps, v_max)

"""Constants for the double-double trig kernels.

The pi/2 triple (HI + MID + LO represents pi/2 to ~160 bits) supports
argument reduction for |x| <= 64 with double-double-level residuals.
Taylor coefficients for sin/cos are double-double reciprocals of exact
integer factorials, built once at import time.
"""

import numpy as np

from . import ddcore

PIO2_HI = 1.5707963267948966
PIO2_MID = 6.123233995736766e-17
PIO2_LO = -1.4973849048591698e-33
TWO_OVER_PI = 0.6366197723675814

# Number of Taylor terms: r^(2*16+1)/(2*16+1)! < 1e-37 for |r| <= pi/4.
SIN_TERMS = 16
COS_TERMS = 16


def _dd_from_int(value):
    hi = float(value)
    lo = float(value - int(hi))
    return hi, lo


def _build_coeffs(odd):
    import math

    his = np.empty(SIN_TERMS)
    los = np.empty(SIN_TERMS)
    for k in range(SIN_TERMS):
        m = 2 * k + 1 if odd else 2 * k
        fhi, flo = _dd_from_int(math.factorial(m))
        chi, clo = ddcore.dd_div(1.0, 0.0, fhi, flo)
        sign = -1.0 if k % 2 else 1.0
        his[k] = sign * chi
        los[k] = sign * clo
    return his, los


SIN_COEF_HI, SIN_COEF_LO = _build_coeffs(odd=True)
COS_COEF_HI, COS_COEF_LO = _build_coeffs(odd=False)

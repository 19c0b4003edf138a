"""Double-double (two-float, error-free-transformation) arithmetic.

Every function here is branch-free and uses only +, -, *, / so the same
source works on Python floats, numpy arrays (elementwise), and under
numba's nopython compilation.  A double-double value is an unevaluated
sum ``hi + lo`` with ``|lo| <= ulp(hi)/2``, giving roughly 106 bits of
significand.  That headroom is what lets the Simpson-error engine resolve
differences of order 1e-18 between quantities of order 1.
"""

# Dekker splitter: 2**27 + 1.
_SPLITTER = 134217729.0


def two_sum(a, b):
    """Error-free sum: returns (s, e) with s + e == a + b exactly."""
    s = a + b
    bb = s - a
    e = (a - (s - bb)) + (b - bb)
    return s, e


def quick_two_sum(a, b):
    """Error-free sum assuming |a| >= |b|."""
    s = a + b
    e = b - (s - a)
    return s, e


def two_prod(a, b):
    """Error-free product: returns (p, e) with p + e == a * b exactly."""
    p = a * b
    ta = _SPLITTER * a
    ahi = ta - (ta - a)
    alo = a - ahi
    tb = _SPLITTER * b
    bhi = tb - (tb - b)
    blo = b - bhi
    e = ((ahi * bhi - p) + ahi * blo + alo * bhi) + alo * blo
    return p, e


def dd_add(ahi, alo, bhi, blo):
    s1, s2 = two_sum(ahi, bhi)
    t1, t2 = two_sum(alo, blo)
    s2 = s2 + t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 = s2 + t2
    return quick_two_sum(s1, s2)


def dd_sub(ahi, alo, bhi, blo):
    return dd_add(ahi, alo, -bhi, -blo)


def dd_add_d(ahi, alo, b):
    s1, s2 = two_sum(ahi, b)
    s2 = s2 + alo
    return quick_two_sum(s1, s2)


def dd_mul(ahi, alo, bhi, blo):
    p, e = two_prod(ahi, bhi)
    e = e + (ahi * blo + alo * bhi)
    return quick_two_sum(p, e)


def dd_mul_d(ahi, alo, b):
    p, e = two_prod(ahi, b)
    e = e + alo * b
    return quick_two_sum(p, e)


def dd_div(ahi, alo, bhi, blo):
    q1 = ahi / bhi
    # r = a - q1 * b, computed exactly.
    p, e = two_prod(q1, bhi)
    rhi, rlo = dd_add(ahi, alo, -p, -e)
    rlo = rlo - q1 * blo
    q2 = (rhi + rlo) / bhi
    return quick_two_sum(q1, q2)


def dd_div_d(ahi, alo, b):
    q1 = ahi / b
    p, e = two_prod(q1, b)
    rhi, rlo = dd_add(ahi, alo, -p, -e)
    q2 = (rhi + rlo) / b
    return quick_two_sum(q1, q2)

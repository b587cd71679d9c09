"""Double-double arithmetic for the series evaluators.

A value is a pair ``(hi, lo)`` of floats with ``|lo| <= ulp(hi)/2``; complex
values are pairs of those. Only the handful of operations the term recurrences
need are provided. Splitting uses Dekker's constant, so inputs must stay below
roughly 1e300 in magnitude.
"""

from __future__ import annotations

import math

_SPLITTER = 134217729.0  # 2**27 + 1

DD = tuple  # (hi, lo)
CDD = tuple  # (DD real, DD imag)

ZERO: DD = (0.0, 0.0)


def _two_sum(a: float, b: float) -> DD:
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def _quick_two_sum(a: float, b: float) -> DD:
    s = a + b
    return s, b - (s - a)


def _split(a: float) -> DD:
    c = _SPLITTER * a
    hi = c - (c - a)
    return hi, a - hi


def _two_prod(a: float, b: float) -> DD:
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def add(x: DD, y: DD) -> DD:
    s, e = _two_sum(x[0], y[0])
    t, f = _two_sum(x[1], y[1])
    s, e = _quick_two_sum(s, e + t)
    return _quick_two_sum(s, e + f)


def neg(x: DD) -> DD:
    return -x[0], -x[1]


def mul(x: DD, y: DD) -> DD:
    p, e = _two_prod(x[0], y[0])
    e += x[0] * y[1] + x[1] * y[0]
    return _quick_two_sum(p, e)


def div(x: DD, y: DD) -> DD:
    q1 = x[0] / y[0]
    r = add(x, neg(mul((q1, 0.0), y)))
    q2 = r[0] / y[0]
    r = add(r, neg(mul((q2, 0.0), y)))
    q3 = r[0] / y[0]
    return add(_quick_two_sum(q1, q2), (q3, 0.0))


def div_int(x: DD, k: int) -> DD:
    return div(x, (float(k), 0.0))


def recip_int(k: int) -> DD:
    return div((1.0, 0.0), (float(k), 0.0))


def to_float(x: DD) -> float:
    return x[0] + x[1]


def isfinite(x: DD) -> bool:
    return math.isfinite(x[0]) and math.isfinite(x[1])


# complex helpers

def cfrom(z: complex) -> CDD:
    return (z.real, 0.0), (z.imag, 0.0)


def cadd(u: CDD, v: CDD) -> CDD:
    return add(u[0], v[0]), add(u[1], v[1])


def cmul(u: CDD, v: CDD) -> CDD:
    re = add(mul(u[0], v[0]), neg(mul(u[1], v[1])))
    im = add(mul(u[0], v[1]), mul(u[1], v[0]))
    return re, im


def cscale(u: CDD, s: DD) -> CDD:
    return mul(u[0], s), mul(u[1], s)


def cdiv_int(u: CDD, k: int) -> CDD:
    return div_int(u[0], k), div_int(u[1], k)


def cneg(u: CDD) -> CDD:
    return neg(u[0]), neg(u[1])


def cabs(u: CDD) -> float:
    return math.hypot(to_float(u[0]), to_float(u[1]))


def cto_complex(u: CDD) -> complex:
    return complex(to_float(u[0]), to_float(u[1]))


def cisfinite(u: CDD) -> bool:
    return isfinite(u[0]) and isfinite(u[1])

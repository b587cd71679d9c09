"""Harmonic-like numbers ``H_n(a) = sum_{p=1}^{n} a**(n-p) / p``.

Equivalently ``H_n(a) = int_0^1 (a**n - t**n) / (a - t) dt``; at ``a = 1`` this
is the classical harmonic number. Four evaluation routes are provided and are
expected to agree:

* :func:`harmonic_like_direct` -- Horner evaluation of the finite sum,
* :func:`harmonic_like_sequence` -- the recurrence ``H_n = a H_{n-1} + 1/n``,
* :func:`integral_eq1` -- Gauss-Legendre quadrature of the integral above,
* :func:`integral_eq2_exact` -- exact integration of the ``a = 1/2`` form
  ``2**-n int_0^1 ((1+x)**n - (1-x)**n) / x dx``.

:func:`harmonic_like_exact` works in :class:`fractions.Fraction` and is the
reference the others are checked against. ``H_0(a)`` is 0 everywhere.
"""

from __future__ import annotations

import cmath
import enum
import math
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex, Rational

import numpy as np

from . import _ddouble as dd

__all__ = [
    "Method",
    "HarmonicParam",
    "HarmonicValue",
    "harmonic_like_direct",
    "harmonic_like_sequence",
    "harmonic_like_exact",
    "harmonic_half",
    "iter_harmonic_half",
    "integral_eq1",
    "integral_eq2_exact",
    "min_nodes",
    "evaluate",
]

# relative radius inside which the quotient integrand is replaced by its polynomial form
SINGULAR_RADIUS = 2.0**-40


class Method(str, enum.Enum):
    DIRECT = "direct"
    RECURRENCE = "recurrence"
    INTEGRAL_EQ1 = "integral_eq1"
    INTEGRAL_EQ2 = "integral_eq2"


def _check_index(n, name: str = "n", minimum: int = 0) -> int:
    if isinstance(n, bool) or not isinstance(n, (int, np.integer)):
        raise TypeError(f"{name} must be an integer, got {type(n).__name__}")
    if n < minimum:
        raise ValueError(f"{name} must be >= {minimum}, got {n}")
    return int(n)


def _check_param(a) -> complex:
    if not isinstance(a, Complex):
        raise TypeError(f"a must be a number, got {type(a).__name__}")
    a = complex(a)
    if not cmath.isfinite(a):
        raise ValueError(f"a must be finite, got {a!r}")
    return a


@dataclass(frozen=True)
class HarmonicParam:
    a: complex
    n: int

    def __post_init__(self):
        object.__setattr__(self, "a", _check_param(self.a))
        object.__setattr__(self, "n", _check_index(self.n))


@dataclass(frozen=True)
class HarmonicValue:
    param: HarmonicParam
    value: complex
    method: Method


def harmonic_like_direct(a, n: int) -> complex:
    """Evaluate ``H_n(a)`` by Horner's scheme, highest power of ``a`` first.

    >>> harmonic_like_direct(1, 4)
    (2.083333333333333+0j)
    """
    a = _check_param(a)
    n = _check_index(n)
    value = 0j
    for p in range(1, n + 1):
        value = value * a + 1.0 / p
    return value


def harmonic_like_sequence(a, n_max: int) -> list[complex]:
    """Return ``[H_1(a), ..., H_{n_max}(a)]`` via ``H_n = a H_{n-1} + 1/n``.

    The running value is kept in double-double so each element is rounded
    once; a plain double recurrence already misses 5/6 by an ulp at n = 3.
    """
    a = _check_param(a)
    n_max = _check_index(n_max, "n_max")
    out = []
    ca = dd.cfrom(a)
    h = (dd.ZERO, dd.ZERO)
    for n in range(1, n_max + 1):
        h = dd.cmul(ca, h)
        h = (dd.add(h[0], dd.recip_int(n)), h[1])
        out.append(dd.cto_complex(h))
    return out


def harmonic_like_exact(a, n: int) -> Fraction:
    """Exact ``H_n(a)`` for rational ``a``."""
    if not isinstance(a, Rational):
        raise TypeError(f"exact evaluation needs a rational a, got {type(a).__name__}")
    a = Fraction(a)
    n = _check_index(n)
    value = Fraction(0)
    for p in range(1, n + 1):
        value = value * a + Fraction(1, p)
    return value


def iter_harmonic_half() -> Iterator[float]:
    """Yield ``H_1(1/2), H_2(1/2), ...`` forever using ``H_n = H_{n-1}/2 + 1/n``."""
    h = 0.0
    n = 0
    while True:
        n += 1
        h = 0.5 * h + 1.0 / n
        yield h


def harmonic_half(n: int) -> float:
    """``H_n(1/2)`` by the halving recurrence; safe for very large ``n``.

    The recurrence contracts by 1/2 at every step, so rounding errors do not
    accumulate and no power of two is ever formed.
    """
    n = _check_index(n)
    h = 0.0
    for k in range(1, n + 1):
        h = 0.5 * h + 1.0 / k
    return h


def min_nodes(n: int) -> int:
    """Smallest Gauss-Legendre rule that integrates the degree ``n-1`` integrand exactly."""
    return -(-n // 2) + 1


def _integrand(a: float, n: int, t: np.ndarray) -> np.ndarray:
    diff = a - t
    near = np.abs(diff) < SINGULAR_RADIUS * max(1.0, abs(a))
    with np.errstate(divide="ignore", invalid="ignore"):
        quotient = (a**n - t**n) / diff
    if near.any():
        # removable singularity: sum_j a^(n-1-j) t^j, by Horner in t
        tn = t[near]
        poly = np.zeros_like(tn)
        for j in range(n):
            poly = poly * tn + a**j
        quotient[near] = poly
    return quotient


def integral_eq1(a: float, n: int, nodes: int) -> float:
    """``int_0^1 (a**n - t**n) / (a - t) dt`` by ``nodes``-point Gauss-Legendre.

    The integrand is a polynomial of degree ``n - 1`` in disguise, so with
    ``nodes >= min_nodes(n)`` the result is exact up to round-off. Smaller
    rules are rejected.
    """
    if isinstance(a, complex) or not isinstance(a, (int, float, Rational, np.floating, np.integer)):
        raise TypeError("integral_eq1 takes a real a")
    a = float(a)
    if not math.isfinite(a):
        raise ValueError(f"a must be finite, got {a!r}")
    n = _check_index(n)
    nodes = _check_index(nodes, "nodes", 1)
    if nodes < min_nodes(n):
        raise ValueError(
            f"{nodes} nodes cannot integrate degree {n - 1} exactly; need >= {min_nodes(n)}"
        )
    if n == 0:
        return 0.0
    x, w = np.polynomial.legendre.leggauss(nodes)
    t = 0.5 * (x + 1.0)
    return float(0.5 * np.dot(w, _integrand(a, n, t)))


def integral_eq2_exact(n: int) -> Fraction:
    """Exact ``2**-n int_0^1 ((1+x)**n - (1-x)**n) / x dx``.

    Only odd powers ``k`` of the binomial expansion survive the difference, each
    contributing ``2 C(n,k) x**(k-1)``, whose integral over [0, 1] is
    ``2 C(n,k) / k``.
    """
    n = _check_index(n, minimum=1)
    total = sum(Fraction(2 * math.comb(n, k), k) for k in range(1, n + 1, 2))
    return total / 2**n


def evaluate(a, n: int, method: Method | str = Method.DIRECT) -> HarmonicValue:
    """Compute ``H_n(a)`` by the named method and wrap it with its provenance."""
    method = Method(method)
    param = HarmonicParam(a, n)
    if method is Method.DIRECT:
        value = harmonic_like_direct(param.a, n)
    elif method is Method.RECURRENCE:
        value = harmonic_like_sequence(param.a, n)[-1] if n else 0j
    elif method is Method.INTEGRAL_EQ1:
        if param.a.imag != 0:
            raise ValueError("integral_eq1 is implemented for real a only")
        value = complex(integral_eq1(param.a.real, n, min_nodes(n) + 1))
    else:
        if param.a != 0.5:
            raise ValueError("integral_eq2 applies to a = 1/2 only")
        value = complex(integral_eq2_exact(n)) if n else 0j
    return HarmonicValue(param, value, method)

"""Power series for products of the sine integral built from ``H_n(1/2)``.

Four entire functions are expanded with harmonic-like coefficients::

    Si(z)**2         = sum_{n>=1} (-1)**(n+1) H_{2n}(1/2)   (2z)**(2n)   / ((2n)! 2n)
    2 cos(z) Si(z)   = sum_{n>=1} (-1)**(n+1) H_{2n-1}(1/2) (2z)**(2n-1) / (2n-1)!
    Shi(z)**2        = sum_{n>=1}             H_{2n}(1/2)   (2z)**(2n)   / ((2n)! 2n)
    2 cosh(z) Shi(z) = sum_{n>=1}             H_{2n-1}(1/2) (2z)**(2n-1) / (2n-1)!

The hyperbolic sign patterns are the ones confirmed by
:func:`cauchy_product_oracle`, which multiplies the Maclaurin series of the
factors directly and never touches ``H_n(1/2)``.

Numerical evaluation carries the running power, the harmonic factor and the
partial sum in double-double precision. For real ``|z|`` near 10 the
alternating series has terms around 1e5 cancelling to a value of order 1, and
plain doubles leave errors near 1e-11.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Complex

from . import _ddouble as dd
from .harmonic import harmonic_like_exact

__all__ = [
    "FUNCTION_IDS",
    "HARMONIC_SERIES",
    "SeriesResult",
    "SeriesCoefficients",
    "si_reference",
    "shi_reference",
    "si_squared_series",
    "cos_si_series",
    "shi_squared_series",
    "cosh_shi_series",
    "series_value",
    "reference_value",
    "exact_coefficients",
    "cauchy_product_oracle",
    "normalize_function_id",
]

DEFAULT_TOL = 1e-14
MAX_TERMS = 500

HARMONIC_SERIES = ("si2", "cos_si", "shi2", "cosh_shi")
FUNCTION_IDS = HARMONIC_SERIES + ("si_ref", "shi_ref")
_ALIASES = {"cossi": "cos_si", "coshshi": "cosh_shi"}


def normalize_function_id(function_id: str) -> str:
    fid = _ALIASES.get(function_id, function_id)
    if fid not in FUNCTION_IDS:
        raise ValueError(
            f"unknown function id {function_id!r}; expected one of {', '.join(FUNCTION_IDS)}"
        )
    return fid


@dataclass(frozen=True)
class SeriesResult:
    value: complex
    terms_used: int
    last_term_magnitude: float
    converged: bool


@dataclass(frozen=True)
class SeriesCoefficients:
    """Exact coefficient table; ``coefficients`` holds ``(power, value)`` pairs."""

    function_id: str
    coefficients: tuple[tuple[int, Fraction], ...]

    def as_dict(self) -> dict[int, Fraction]:
        return dict(self.coefficients)


def _check_point(z) -> complex:
    if not isinstance(z, Complex):
        raise TypeError(f"z must be a number, got {type(z).__name__}")
    z = complex(z)
    if not cmath.isfinite(z):
        raise ValueError(f"z must be finite, got {z!r}")
    return z


def _check_tol(tol: float) -> float:
    tol = float(tol)
    if not 0.0 < tol < 1.0:
        raise ValueError(f"tol must lie in (0, 1), got {tol}")
    return tol


# --- reference Si / Shi ----------------------------------------------------

_REF_TOL = 1e-17


def _sine_integral(z: complex, alternating: bool) -> complex:
    # sum_k s^k z^(2k+1) / ((2k+1) (2k+1)!), s = -1 or +1
    w = z * z
    if alternating:
        w = -w
    power = z  # z^(2k+1) s^k / (2k+1)!
    total = power
    small = 0
    k = 0
    while small < 2:
        k += 1
        power = power * w / ((2 * k) * (2 * k + 1))
        term = power / (2 * k + 1)
        total += term
        if not cmath.isfinite(total):
            break
        if abs(term) < _REF_TOL * max(1.0, abs(total)):
            small += 1
        else:
            small = 0
    return total


def si_reference(z) -> complex:
    """Si(z) from its Maclaurin series; independent of the harmonic machinery."""
    return _sine_integral(_check_point(z), alternating=True)


def shi_reference(z) -> complex:
    """Shi(z), the hyperbolic sine integral, from its Maclaurin series."""
    return _sine_integral(_check_point(z), alternating=False)


def reference_value(function_id: str, z) -> complex:
    """The closed-form product each harmonic-number series should reproduce."""
    fid = normalize_function_id(function_id)
    z = _check_point(z)
    if fid == "si2":
        return si_reference(z) ** 2
    if fid == "cos_si":
        return 2.0 * cmath.cos(z) * si_reference(z)
    if fid == "shi2":
        return shi_reference(z) ** 2
    if fid == "cosh_shi":
        return 2.0 * cmath.cosh(z) * shi_reference(z)
    if fid == "si_ref":
        return si_reference(z)
    return shi_reference(z)


# --- harmonic-number series ------------------------------------------------


def _harmonic_series(z, tol, max_terms, *, odd: bool, alternating: bool) -> SeriesResult:
    z = _check_point(z)
    tol = _check_tol(tol)
    if max_terms < 1:
        raise ValueError("max_terms must be >= 1")
    if z == 0:
        return SeriesResult(0j, 1, 0.0, True)

    two_z = dd.cfrom(2 * z)  # exact: scaling by 2
    w = dd.cmul(two_z, two_z)
    if alternating:
        w = dd.cneg(w)

    # power = (+-1)^(n+1) (2z)^m / m!, m = 2n-1 (odd) or 2n (even)
    # h runs over H_k(1/2) with the halving recurrence
    h = dd.ZERO
    k = 0
    half = (0.5, 0.0)
    if odd:
        power = two_z
    else:
        power = dd.cdiv_int(dd.cmul(two_z, two_z), 2)
    total = (dd.ZERO, dd.ZERO)
    small = 0
    mag = math.inf
    for n in range(1, max_terms + 1):
        m = 2 * n - 1 if odd else 2 * n
        if n > 1:
            power = dd.cdiv_int(dd.cmul(power, w), (m - 1) * m)
        while k < m:
            k += 1
            h = dd.add(dd.mul(h, half), dd.recip_int(k))
        term = dd.cscale(power, h)
        if not odd:
            term = dd.cdiv_int(term, m)
        total = dd.cadd(total, term)
        if not (dd.cisfinite(total) and dd.cisfinite(power)):
            return SeriesResult(dd.cto_complex(total), n, math.inf, False)
        mag = dd.cabs(term)
        if mag <= tol * max(1.0, dd.cabs(total)):
            small += 1
            if small == 2:
                return SeriesResult(dd.cto_complex(total), n, mag, True)
        else:
            small = 0
    return SeriesResult(dd.cto_complex(total), max_terms, mag, False)


def si_squared_series(z, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesResult:
    """``Si(z)**2`` from its even-index ``H_{2n}(1/2)`` expansion.

    Summation stops once two consecutive terms fall below
    ``tol * max(1, |partial sum|)``; hitting ``max_terms`` first returns a
    result with ``converged=False`` rather than raising.
    """
    return _harmonic_series(z, tol, max_terms, odd=False, alternating=True)


def cos_si_series(z, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesResult:
    """``2 cos(z) Si(z)`` from its odd-index ``H_{2n-1}(1/2)`` expansion."""
    return _harmonic_series(z, tol, max_terms, odd=True, alternating=True)


def shi_squared_series(z, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesResult:
    return _harmonic_series(z, tol, max_terms, odd=False, alternating=False)


def cosh_shi_series(z, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesResult:
    return _harmonic_series(z, tol, max_terms, odd=True, alternating=False)


_SERIES = {
    "si2": si_squared_series,
    "cos_si": cos_si_series,
    "shi2": shi_squared_series,
    "cosh_shi": cosh_shi_series,
}


def series_value(function_id: str, z, tol: float = DEFAULT_TOL, max_terms: int = MAX_TERMS) -> SeriesResult:
    fid = normalize_function_id(function_id)
    if fid not in _SERIES:
        raise ValueError(f"{fid!r} has no harmonic-number series; use reference_value")
    return _SERIES[fid](z, tol, max_terms)


# --- exact coefficient tables -----------------------------------------------


def _check_order(n_max: int) -> int:
    if isinstance(n_max, bool) or not isinstance(n_max, int):
        raise TypeError("n_max must be an integer")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    return n_max


def _maclaurin_sine_integral(n_max: int, alternating: bool) -> list[tuple[int, Fraction]]:
    out = []
    for k in range(n_max):
        m = 2 * k + 1
        sign = -1 if alternating and k % 2 else 1
        out.append((m, Fraction(sign, m * math.factorial(m))))
    return out


def exact_coefficients(function_id: str, n_max: int) -> SeriesCoefficients:
    """First ``n_max`` nonzero coefficients, built from exact ``H_m(1/2)``."""
    fid = normalize_function_id(function_id)
    n_max = _check_order(n_max)
    half = Fraction(1, 2)
    coeffs = []
    if fid in ("si_ref", "shi_ref"):
        coeffs = _maclaurin_sine_integral(n_max, alternating=fid == "si_ref")
    else:
        alternating = fid in ("si2", "cos_si")
        odd = fid in ("cos_si", "cosh_shi")
        for n in range(1, n_max + 1):
            sign = -1 if alternating and n % 2 == 0 else 1
            if odd:
                m = 2 * n - 1
                c = Fraction(sign * 2**m, math.factorial(m)) * harmonic_like_exact(half, m)
            else:
                m = 2 * n
                c = Fraction(sign * 2**m, math.factorial(m) * m) * harmonic_like_exact(half, m)
            coeffs.append((m, c))
    return SeriesCoefficients(fid, tuple(coeffs))


def _dense_sine_integral(order: int, alternating: bool) -> list[Fraction]:
    """Si/Shi coefficients up to ``z**order``, obtained by integrating sin(x)/x termwise."""
    c = [Fraction(0)] * (order + 1)
    fact = 1
    for m in range(1, order + 1):
        fact *= m
        if m % 2:
            # sin x / x has coefficient s/m! at x^(m-1); integrating divides by m
            sign = -1 if alternating and (m // 2) % 2 else 1
            c[m] = Fraction(sign, fact) / m
    return c


def _dense_cosine(order: int, alternating: bool) -> list[Fraction]:
    c = [Fraction(0)] * (order + 1)
    fact = 1
    for m in range(order + 1):
        if m:
            fact *= m
        if m % 2 == 0:
            sign = -1 if alternating and (m // 2) % 2 else 1
            c[m] = Fraction(sign, fact)
    return c


def _cauchy(f: list[Fraction], g: list[Fraction], order: int) -> list[Fraction]:
    return [sum((f[i] * g[m - i] for i in range(m + 1)), Fraction(0)) for m in range(order + 1)]


def cauchy_product_oracle(function_id: str, n_max: int) -> SeriesCoefficients:
    """Same table as :func:`exact_coefficients`, computed without ``H_n(1/2)``.

    The product functions are expanded by multiplying the Maclaurin series of
    their factors coefficient by coefficient.
    """
    fid = normalize_function_id(function_id)
    n_max = _check_order(n_max)
    alternating = fid in ("si2", "cos_si", "si_ref")
    if fid in ("si_ref", "shi_ref"):
        order = 2 * n_max - 1
        dense = _dense_sine_integral(order, alternating)
    elif fid in ("si2", "shi2"):
        order = 2 * n_max
        s = _dense_sine_integral(order, alternating)
        dense = _cauchy(s, s, order)
    else:
        order = 2 * n_max - 1
        s = _dense_sine_integral(order, alternating)
        c = [2 * x for x in _dense_cosine(order, alternating)]
        dense = _cauchy(c, s, order)
    # report the same powers exact_coefficients does, zero or not
    if fid in ("si2", "shi2"):
        powers = range(2, order + 1, 2)
    else:
        powers = range(1, order + 1, 2)
    return SeriesCoefficients(fid, tuple((m, dense[m]) for m in powers))

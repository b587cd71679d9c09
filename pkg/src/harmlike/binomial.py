"""Inverse binomial sums and their link to ``H_{n+1}(1/2)``.

The classical identity (Staver 1947, Rockett 1981)::

    sum_{p=0}^{n} 1/C(n,p) = (n+1)/2**(n+1) * sum_{k=1}^{n+1} 2**k/k

has a right-hand side equal to ``(n+1) H_{n+1}(1/2)``. Summing from ``p = 1``
instead drops the ``1/C(n,0) = 1`` term and the identity no longer holds;
:func:`verify_staver` records both readings so the difference is visible.
"""

from __future__ import annotations

from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction

from .harmonic import _check_index

__all__ = [
    "IdentityReport",
    "binomial_row",
    "inverse_binomial_sum",
    "staver_rhs",
    "verify_staver",
    "harmonic_half_from_binomials",
]

FROM_P0 = "from_p0"
FROM_P1 = "from_p1"


@dataclass(frozen=True)
class IdentityReport:
    n: int
    lhs: Fraction
    rhs: Fraction
    holds: bool
    variant: str


def binomial_row(n: int) -> Iterator[int]:
    """Yield ``C(n,0), ..., C(n,n)`` with the running product ``C(n,p) = C(n,p-1)(n-p+1)/p``."""
    c = 1
    yield c
    for p in range(1, n + 1):
        c = c * (n - p + 1) // p
        yield c


def inverse_binomial_sum(n: int, include_p0: bool = True) -> Fraction:
    n = _check_index(n, minimum=1)
    row = binomial_row(n)
    if not include_p0:
        next(row)
    return sum((Fraction(1, c) for c in row), Fraction(0))


def staver_rhs(n: int) -> Fraction:
    """``(n+1)/2**(n+1) * sum_{k=1}^{n+1} 2**k/k``, computed literally."""
    n = _check_index(n, minimum=1)
    s = sum((Fraction(2**k, k) for k in range(1, n + 2)), Fraction(0))
    return Fraction(n + 1, 2 ** (n + 1)) * s


def verify_staver(n_max: int) -> list[IdentityReport]:
    """Compare both summation ranges against the right-hand side for ``n = 1..n_max``.

    Reports come in pairs per ``n``: the ``from_p0`` variant first, then
    ``from_p1``. The expected outcome is that every ``from_p0`` report holds
    and every ``from_p1`` report fails.
    """
    n_max = _check_index(n_max, "n_max", 1)
    reports = []
    for n in range(1, n_max + 1):
        rhs = staver_rhs(n)
        for variant, include in ((FROM_P0, True), (FROM_P1, False)):
            lhs = inverse_binomial_sum(n, include_p0=include)
            reports.append(IdentityReport(n, lhs, rhs, lhs == rhs, variant))
    return reports


def harmonic_half_from_binomials(n: int) -> Fraction:
    """``H_{n+1}(1/2) = sum_{p=0}^{n} C(n,p)**-1 / (n+1)``."""
    n = _check_index(n, minimum=1)
    return inverse_binomial_sum(n, include_p0=True) / (n + 1)

"""Identity suites shared by the test-suite and ``harmlike verify``.

Each suite returns a list of :class:`Check` records. A check states what it
expects (``"equal"`` or ``"differ"``) and whether the observation matched;
the Staver ``from_p1`` reading is the only check expected to differ.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .binomial import FROM_P0, harmonic_half_from_binomials, verify_staver
from .harmonic import harmonic_like_exact, integral_eq2_exact
from .series import (
    HARMONIC_SERIES,
    cauchy_product_oracle,
    exact_coefficients,
    reference_value,
    series_value,
)

SUITES = ("staver", "recurrence", "eq2", "series_coeffs", "series_values")

RECURRENCE_PARAMS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(2), Fraction(-1, 3))
SERIES_POINTS = (0.5, 1.0, 2.0, 5.0, 10.0, 1 + 2j)
SERIES_TOL = 1e-14
SERIES_RTOL = 1e-12
SERIES_MAX_TERMS = 80


@dataclass(frozen=True)
class Check:
    suite: str
    key: str
    lhs: object
    rhs: object
    expected: str  # "equal" or "differ"
    outcome: str

    @property
    def ok(self) -> bool:
        return self.expected == self.outcome


def _outcome(same: bool) -> str:
    return "equal" if same else "differ"


def staver_suite(n_max: int) -> list[Check]:
    checks = []
    for r in verify_staver(n_max):
        expected = "equal" if r.variant == FROM_P0 else "differ"
        checks.append(Check("staver", f"n={r.n} {r.variant}", r.lhs, r.rhs, expected, _outcome(r.holds)))
    for n in range(1, n_max + 1):
        lhs = harmonic_half_from_binomials(n)
        rhs = harmonic_like_exact(Fraction(1, 2), n + 1)
        checks.append(Check("staver", f"n={n} closing", lhs, rhs, "equal", _outcome(lhs == rhs)))
    return checks


def recurrence_suite(n_max: int) -> list[Check]:
    checks = []
    for a in RECURRENCE_PARAMS:
        prev = harmonic_like_exact(a, 0)
        for n in range(1, n_max + 1):
            cur = harmonic_like_exact(a, n)
            rhs = a * prev + Fraction(1, n)
            checks.append(Check("recurrence", f"a={a} n={n}", cur, rhs, "equal", _outcome(cur == rhs)))
            prev = cur
    return checks


def eq2_suite(n_max: int) -> list[Check]:
    checks = []
    for n in range(1, n_max + 1):
        lhs = integral_eq2_exact(n)
        rhs = harmonic_like_exact(Fraction(1, 2), n)
        checks.append(Check("eq2", f"n={n}", lhs, rhs, "equal", _outcome(lhs == rhs)))
    return checks


def series_coeffs_suite(n_max: int) -> list[Check]:
    checks = []
    for fid in HARMONIC_SERIES:
        got = exact_coefficients(fid, n_max).coefficients
        want = cauchy_product_oracle(fid, n_max).coefficients
        for (p, c), (q, d) in zip(got, want):
            same = p == q and c == d
            checks.append(Check("series_coeffs", f"{fid} z^{p}", c, d, "equal", _outcome(same)))
    return checks


def series_values_suite(points=SERIES_POINTS) -> list[Check]:
    checks = []
    for fid in HARMONIC_SERIES:
        for z in points:
            res = series_value(fid, z, SERIES_TOL)
            ref = reference_value(fid, z)
            same = (
                res.converged
                and res.terms_used <= SERIES_MAX_TERMS
                and abs(res.value - ref) <= SERIES_RTOL * max(1.0, abs(ref))
            )
            checks.append(Check("series_values", f"{fid} z={z}", res.value, ref, "equal", _outcome(same)))
    return checks


def run_suites(suites, n_max: int) -> list[Check]:
    checks = []
    for name in suites:
        if name == "staver":
            checks += staver_suite(n_max)
        elif name == "recurrence":
            checks += recurrence_suite(n_max)
        elif name == "eq2":
            checks += eq2_suite(n_max)
        elif name == "series_coeffs":
            checks += series_coeffs_suite(n_max)
        elif name == "series_values":
            checks += series_values_suite()
        else:
            raise ValueError(f"unknown suite {name!r}")
    return checks

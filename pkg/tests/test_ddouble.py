from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from harmlike import _ddouble as dd

finite = st.floats(-1e100, 1e100, allow_nan=False).filter(lambda x: x == 0 or abs(x) > 1e-100)


def exact(x):
    return Fraction(x[0]) + Fraction(x[1])


@given(finite, finite)
def test_add_and_mul_are_nearly_exact(a, b):
    s = dd.add((a, 0.0), (b, 0.0))
    assert exact(s) == Fraction(a) + Fraction(b)
    p = dd.mul((a, 0.0), (b, 0.0))
    assert exact(p) == Fraction(a) * Fraction(b)


@given(st.integers(1, 10**6))
def test_reciprocal_to_32_digits(k):
    r = dd.recip_int(k)
    assert abs(exact(r) * k - 1) < Fraction(1, 10**31)


def test_complex_roundtrip():
    u = dd.cfrom(3 - 4j)
    assert dd.cabs(u) == 5.0
    assert dd.cto_complex(dd.cmul(u, u)) == (3 - 4j) ** 2

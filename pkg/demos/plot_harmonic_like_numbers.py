"""
Harmonic-like numbers four ways
===============================

H_n(a) = a^(n-1) + a^(n-2)/2 + ... + 1/n, computed by Horner's rule, by the
recurrence, by Gauss-Legendre quadrature of its integral form, and exactly.
"""

from fractions import Fraction

from harmlike import (
    harmonic_half,
    harmonic_like_direct,
    harmonic_like_exact,
    harmonic_like_sequence,
    integral_eq1,
    integral_eq2_exact,
    min_nodes,
)

###############################################################################
# At a = 1 we recover the classical harmonic numbers.
print([str(harmonic_like_exact(1, n)) for n in range(1, 7)])

###############################################################################
# Floating-point routes for a = 1/2, next to the exact value.
a, n = 0.5, 12
print("direct     ", harmonic_like_direct(a, n).real)
print("recurrence ", harmonic_like_sequence(a, n)[-1].real)
print("quadrature ", integral_eq1(a, n, min_nodes(n)))
print("exact      ", harmonic_like_exact(Fraction(1, 2), n), float(harmonic_like_exact(Fraction(1, 2), n)))
print("eq2 exact  ", integral_eq2_exact(n))

###############################################################################
# Complex parameters work in floating point.
print(harmonic_like_sequence(0.3 + 0.8j, 5))

###############################################################################
# H_n(1/2) behaves like 2/n for large n; the halving recurrence never forms 2**n.
for n in (10, 10**3, 10**5, 10**6):
    print(n, n * harmonic_half(n))

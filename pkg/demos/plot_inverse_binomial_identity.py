"""
Inverse binomial sums and H_{n+1}(1/2)
======================================

sum_p 1/C(n,p) = (n+1) H_{n+1}(1/2), checked in exact arithmetic. Summing from
p = 0 makes the identity hold; summing from p = 1 misses it by exactly 1.
"""

from fractions import Fraction

from harmlike import harmonic_half_from_binomials, harmonic_like_exact, verify_staver

for report in verify_staver(6):
    print(report.n, report.variant, report.lhs, report.rhs, report.holds)

###############################################################################
# Rearranged, the same identity yields H_{n+1}(1/2).
for n in range(1, 8):
    print(n + 1, harmonic_half_from_binomials(n), harmonic_like_exact(Fraction(1, 2), n + 1))

"""
Sine-integral products from H_n(1/2)
====================================

Si(z)^2 and 2 cos(z) Si(z) (plus their hyperbolic twins) expanded with
harmonic-like coefficients, compared with direct products of Maclaurin Si.
"""

import numpy as np

from harmlike import exact_coefficients, cauchy_product_oracle, reference_value, series_value
from harmlike.series import HARMONIC_SERIES

###############################################################################
# The exact coefficients agree with a brute-force Cauchy product.
for fid in HARMONIC_SERIES:
    table = exact_coefficients(fid, 4)
    same = table == cauchy_product_oracle(fid, 4)
    print(fid, same, [f"z^{p}: {c}" for p, c in table.coefficients])

###############################################################################
# Values on a grid, with the number of terms the summation needed.
print(f"{'fid':>9} {'z':>6} {'series':>22} {'abs err':>9} terms")
for fid in HARMONIC_SERIES:
    for z in np.linspace(0.0, 10.0, 5):
        res = series_value(fid, float(z))
        err = abs(res.value - reference_value(fid, float(z)))
        print(f"{fid:>9} {z:6.2f} {res.value.real:22.15g} {err:9.1e} {res.terms_used}")

###############################################################################
# The series are entire: complex points converge too.
z = 1 + 2j
res = series_value("si2", z)
print(res)
print(reference_value("si2", z))

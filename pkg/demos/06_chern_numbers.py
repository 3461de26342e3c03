"""
Intersection numbers on the threefold
=====================================

Given the intersection table of K, H and c2 on X, Riemann-Roch yields the
Euler characteristic of the normal bundle and the Hilbert polynomial.
"""

from dataclasses import replace

from palatini import chern

print(chern.derivation_text())
print()
print("chi(N) summands:", [str(s) for s in chern.chi_normal_summands()])
print("Hilbert polynomial coefficients:", [str(c) for c in chern.hilbert_coefficients()])

# c2.H is not needed as input: it is forced by the linear Hilbert coefficient
print("c2.H from the Hilbert polynomial:", chern.rr_coefficients(replace(chern.PALATINI, c2H=None)))
print("pencils, GL6, webs:", chern.DIM_SKEW_PENCILS, chern.DIM_GL6, chern.DIM_WEB_GRASSMANNIAN)

"""
The degeneracy locus and its Hilbert function
=============================================

Contracting the web with a vector x in the 6-space gives a 4x6 matrix F(x)
whose rows are (M_k x)^T. The 15 maximal minors cut out a threefold X in
P^5. Counting the dimension of the ideal in each degree recovers the Hilbert
polynomial, and the third difference gives the degree.
"""

import random

from palatini.web import (
    degeneracy_system,
    hilbert_values,
    hilbert_values_groebner,
    random_web,
    scroll_hilbert_polynomial,
    third_differences,
)

w = random_web(random.Random(0))
sys = degeneracy_system(w)
print("nonzero minors:", len(sys.nonzero_minors()))

# linear algebra route: rank of the Macaulay matrix in each degree, mod p
window = range(4, 8)
vals = hilbert_values(sys, window, 31991)
print("h(t), t = 4..7:", [vals[t] for t in window])
print("expected      :", [int(scroll_hilbert_polynomial(t)) for t in window])
print("third differences:", third_differences([vals[t] for t in window]))

# Groebner route: count standard monomials, cheap for large t
big = hilbert_values_groebner(sys, range(10, 14), 65521)
print("h(t), t = 10..13:", [big[t] for t in range(10, 14)])

"""
Schubert calculus on G(1,5)
===========================

Four general linear complexes meet in a 4-dimensional family of lines whose
class is sigma_1^4. Its coefficient on sigma_4 is the number of such lines
through a general point.
"""

from palatini.schubert import format_cycle, order, sigma1_power

for k in range(9):
    print(f"σ₁^{k} = {format_cycle(sigma1_power(k))}")

print("order of σ₁⁴:", order(sigma1_power(4)))
print("degree of G(1,5):", sigma1_power(8)[(4, 4)])

"""
Pfaffians of skew pencils
=========================

A web of skew forms on a 6-dimensional space is four constant 6x6
skew-symmetric matrices A, B, C, D. The pencil xA + yB + zC + tD has a
cubic pfaffian; its vanishing locus is a cubic surface in P^3.
"""

from palatini.algebra import QQ, determinant
from palatini.fixtures import fixture
from palatini.skew import elliptic_cone_matrix, pfaffian6, three_planes_forms
from palatini.web import pencil_of

NAMES = ("x", "y", "z", "t")

# the first hand-made web: a cubic with a single rational double point
w = fixture("t1")
print("T1 pfaffian:", pencil_of(w).pfaffian().to_text(NAMES))

# squares of pfaffians are determinants, on any evaluation of the pencil
M = pencil_of(w).evaluate([1, 2, -1, 3])
print("pf^2 == det at (1,2,-1,3):", M.pfaffian() ** 2 == determinant(M.matrix(), QQ))

# three planes: the pfaffian factors as a product of linear forms
F, G, H = three_planes_forms()
print("three planes:", (F * G * H).to_text(NAMES))
for name in ("three-planes-dependent", "three-planes-independent"):
    web = fixture(name)
    print(f"  {name}: span rank {web.span_rank}, pf = {pencil_of(web).pfaffian().to_text(NAMES)}")

# a cone over a plane cubic, with the cubic's parameter kept symbolic
pf = pfaffian6(elliptic_cone_matrix(symbolic=True))
print("elliptic cone:", pf.to_text(("x", "y", "z", "t", "c")))

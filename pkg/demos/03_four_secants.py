"""
Lines of C4 through a point
===========================

For a generic point Q of P^5 there is exactly one line through Q lying in
every linear complex of the web. Such a line meets X in a scheme of length 4.
"""

import random

from palatini.web import four_secant_check, line_of_C4_through, random_generic_point, random_web

p = 31991
w = random_web(random.Random(1))
rng = random.Random(7)

for _ in range(5):
    Q = random_generic_point(w, p, rng)
    line = line_of_C4_through(w.reduce(p), Q)
    res = four_secant_check(w, Q, p)
    print(f"Q = {[int(c) for c in Q]}")
    print(f"  second point on the line: {[int(c) for c in line.points[1]]}")
    print(f"  contained in X: {res.contained}, intersection length: {res.length}")

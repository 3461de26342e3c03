"""
Classifying webs
================

Webs split by whether the pfaffian cubic vanishes identically (the alpha
family) and then by the 4x4 sub-pfaffians, the fibers of the projection
from the degeneracy locus, and the common zeros Z of the sub-pfaffians.
"""

from palatini.classify import classify
from palatini.fixtures import catalogue
from palatini.web import DegenerateWebError

for name, w in catalogue().items():
    try:
        r = classify(w, seed=0)
    except DegenerateWebError as exc:
        print(f"{name:26s} rejected: {exc}")
        continue
    print(f"{name:26s} {r.summary()}")
    for note in r.notes:
        print(" " * 28 + note)

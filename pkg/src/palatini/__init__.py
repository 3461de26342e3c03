"""Webs of linear complexes in P^5, their degeneracy loci and the numerics of
the Palatini scroll.

Submodules: ``algebra`` (fields, polynomials, linear algebra), ``skew``
(pfaffians), ``grass`` (Pluecker lines), ``web`` (degeneracy loci, Hilbert
functions, 4-secant lines), ``classify``, ``schubert``, ``chern``,
``fixtures`` and ``cli``.
"""

from .classify import ClassificationReport, classify
from .fixtures import FIXTURE_NAMES, fixture
from .web import Web

__version__ = "0.1.0"

__all__ = ["Web", "classify", "ClassificationReport", "fixture", "FIXTURE_NAMES", "__version__"]

import random
from dataclasses import replace
from fractions import Fraction

import pytest

from palatini import chern
from palatini.chern import (
    C2,
    PALATINI,
    H,
    IntersectionTable,
    K,
    TableError,
    chi_normal,
    chi_normal_summands,
    hilbert_coefficients,
    hilbert_polynomial,
    integrate,
    normal_classes,
    rr_coefficients,
)
from palatini.web import degeneracy_system, degree_from_hilbert, hilbert_values, random_web


def test_chi_normal():
    assert chi_normal_summands() == (Fraction(29, 3), Fraction(47, 2), Fraction(53, 6), Fraction(2))
    assert chi_normal() == 44
    assert sum(chi_normal_summands()) * 12 == 528


def test_intermediates_against_hand_expansion():
    n1, n2, _, _ = normal_classes()
    # (K+6H)^3 = K^3 + 18 K^2 H + 108 K H^2 + 216 H^3
    assert integrate(n1**3, PALATINI) == -2 + 18 * 7 + 108 * (-8) + 216 * 7 == 772
    assert integrate(n1 * n2, PALATINI) == 238
    assert integrate(n2 * H, PALATINI) == 15 * 7 + 6 * (-8) + 7 - 15 == 49


def test_zero_table():
    zero = IntersectionTable(*(Fraction(0),) * 7, rank=2)
    assert chi_normal(zero) == 0


def test_integrate_rejects_unknown_monomials():
    with pytest.raises(TableError):
        integrate(K * H, PALATINI)  # weight 2
    with pytest.raises(TableError):
        integrate(C2 * C2, PALATINI)  # weight 4
    with pytest.raises(TableError):
        integrate(C2 * H, replace(PALATINI, c2H=None))


def test_hilbert_polynomial():
    assert hilbert_coefficients() == (Fraction(7, 6), Fraction(2), Fraction(11, 6), Fraction(1))
    assert hilbert_polynomial(PALATINI, 0) == 1
    assert hilbert_polynomial(PALATINI, 1) == 6
    assert hilbert_polynomial(PALATINI, 4) == 115


def test_rr_coefficients():
    assert rr_coefficients(replace(PALATINI, c2H=None)) == 15
    with pytest.raises(TableError):
        rr_coefficients(replace(PALATINI, KH2=Fraction(-9)))


def test_degree():
    assert chern.degree() == 7
    assert 6 * hilbert_coefficients()[0] == 7
    w = random_web(random.Random(1))
    vals = hilbert_values(degeneracy_system(w), range(4, 8), 31991)
    assert degree_from_hilbert([vals[t] for t in range(4, 8)]) == chern.degree()


def test_dimension_constants():
    assert chern.DIM_SKEW_PENCILS - chern.DIM_GL6 == 24
    assert chern.DIM_WEB_GRASSMANNIAN == 44


def test_derivation_text():
    text = chern.derivation_text()
    assert "chi(N) = 44" in text and "n1^3 = 772" in text and "degree = 7" in text

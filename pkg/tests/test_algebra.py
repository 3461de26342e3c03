import random
from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palatini.algebra import (
    GF,
    QQ,
    DomainError,
    MultiPoly,
    determinant,
    gcd_univariate,
    kernel_mod_p,
    matvec,
    monomials,
    rank,
    rank_kernel,
    rank_mod_p,
)

P = 31991
F = GF(P)


# -- fields ---------------------------------------------------------------


def test_rationals_lowest_terms():
    q = QQ("-6/4")
    assert q == Fraction(-3, 2) and q.denominator > 0


def test_fp_values_reduced():
    assert F(-1).v == P - 1
    assert F(P + 3).v == 3
    assert F(Fraction(1, 2)) * 2 == 1


def test_fp_mixing_moduli_raises():
    with pytest.raises(DomainError):
        F(1) + GF(65521)(1)
    with pytest.raises(DomainError):
        F(1) + Fraction(1, 2)


def test_gf_rejects_non_primes():
    for bad in (1, 2, 9, 31993 * 3, 2**64 + 13):
        with pytest.raises(ValueError):
            GF(bad)


def test_fp_inverse_and_elements():
    G = GF(7)
    assert len(list(G.elements())) == 7
    for a in G.elements():
        if a:
            assert a * a.inverse() == 1
    with pytest.raises(ZeroDivisionError):
        G(0).inverse()


# -- polynomials ------------------------------------------------------------


def test_difference_of_squares():
    x, y = MultiPoly.gens(2)
    assert (x + y) * (x - y) == x**2 - y**2


def test_zero_absorbs():
    x, y, z, t = MultiPoly.gens(4)
    f = x * y**2 + z**3
    assert (f * MultiPoly.zero(4)).is_zero()
    assert (f * 0).terms == {}


def test_additive_inverse():
    x0, x1, x2, x3 = MultiPoly.gens(4)
    f = x0 * x1**2 + x1 * x3**2 + x2**3
    assert (f + (-f)).terms == {}


def test_no_zero_terms_stored():
    m = MultiPoly(2, {(1, 0): 1, (0, 1): 0})
    assert m.terms == {(1, 0): Fraction(1)}
    with pytest.raises(ValueError):
        MultiPoly(2, {(1,): 1})


def test_domain_mismatch():
    x = MultiPoly.var(0, 2)
    xp = MultiPoly.var(0, 2, F)
    with pytest.raises(DomainError):
        x + xp
    with pytest.raises(DomainError):
        xp * MultiPoly.var(0, 2, GF(65521))
    with pytest.raises(ValueError):
        x + MultiPoly.var(0, 3)


T4 = "x^2*y - x^2*z - x*y^2 + x*z^2 + y^3 - y^2*t + y*z*t"


def test_evaluate_t4_cubic_singular_point():
    f = MultiPoly.from_text(T4, nvars=4)
    assert f.evaluate([0, 0, 0, 1]) == 0
    for i in range(4):
        assert f.partial(i).evaluate([0, 0, 0, 1]) == 0


def test_evaluate_constant_term_at_origin():
    f = MultiPoly.from_text("3*x^2 - y + 7/2", nvars=4)
    assert f.evaluate([0, 0, 0, 0]) == Fraction(7, 2)


def test_evaluate_length_mismatch():
    with pytest.raises(ValueError):
        MultiPoly.var(0, 4).evaluate([1, 2])


def test_elliptic_cone_point():
    x, y, z, t = MultiPoly.gens(4)
    f = y**2 * z - x * (x - z) * (x - 2 * z)
    for tval in (0, 5, -3):
        assert f.evaluate([0, 0, 1, tval]) == 0


def test_partials():
    x0, x1, x2, x3 = MultiPoly.gens(4)
    f = x0 * x1**2 + x1 * x3**2 + x2**3
    assert f.partial(0) == x1**2
    assert MultiPoly.constant(5, 4).partial(0).is_zero()
    with pytest.raises(IndexError):
        f.partial(4)


def test_text_round_trip():
    f = MultiPoly.from_text(T4, nvars=4)
    assert MultiPoly.from_text(f.to_text(), nvars=4) == f
    g = MultiPoly.from_text("x0*x5^3 - 2/3*x1^4", nvars=6)
    assert g.to_text() == "x0*x5^3 - 2/3*x1^4"  # graded lex
    assert MultiPoly.from_text(g.to_text(), nvars=6) == g


def test_degree_and_homogeneity():
    assert MultiPoly.zero(3).degree() == -1
    f = MultiPoly.from_text(T4, nvars=4)
    assert f.degree() == 3 and f.is_homogeneous()


def test_substitute():
    x, y = MultiPoly.gens(2)
    f = x**2 + y
    assert f.substitute([x + y, x]) == x**2 + 2 * x * y + y**2 + x


def test_monomial_counts():
    from math import comb

    for n, d in [(4, 3), (6, 4), (6, 0)]:
        assert len(monomials(n, d)) == comb(n + d - 1, d)


def test_gcd_univariate():
    (s,) = MultiPoly.gens(1)
    assert gcd_univariate(s**4, s**3) == s**3
    f = 3 * s**2 - 3
    assert gcd_univariate(f, MultiPoly.zero(1)) == s**2 - 1
    assert gcd_univariate((s - 1) * (s + 2), (s - 1) * (s - 5)) == s - 1
    with pytest.raises(ValueError):
        gcd_univariate(MultiPoly.var(0, 2), MultiPoly.var(1, 2))


small_poly = st.dictionaries(
    st.tuples(*[st.integers(0, 2)] * 3), st.fractions(min_value=-5, max_value=5, max_denominator=4), max_size=5
).map(lambda d: MultiPoly(3, d))


@given(small_poly, small_poly, small_poly)
@settings(max_examples=60)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(small_poly, st.lists(st.integers(-4, 4), min_size=3, max_size=3))
@settings(max_examples=40)
def test_reduction_is_a_homomorphism(a, pt):
    b = a * a + a
    assert b.reduce(P).evaluate([F(v) for v in pt]) == F(b.evaluate(pt))


# -- linear algebra -----------------------------------------------------------


def test_rank_identity_and_zero():
    eye = [[int(i == j) for j in range(6)] for i in range(6)]
    assert rank_kernel(eye, QQ) == (6, [])
    r, ker = rank_kernel([[0] * 6 for _ in range(4)], QQ)
    assert r == 0 and sorted(map(tuple, ker)) == sorted(tuple(int(i == j) for j in range(6)) for i in range(6))


def test_kernel_independent_of_row_order(rng):
    rows = [[rng.randint(-3, 3) for _ in range(6)] for _ in range(3)]
    r1, k1 = rank_kernel(rows, QQ)
    r2, k2 = rank_kernel(rows[::-1], QQ)
    assert r1 == r2 and k1 == k2
    for v in k1:
        assert all(x == 0 for x in matvec(rows, v))


def _rank_by_minors(m, field):
    n = len(m)
    for k in range(n, 0, -1):
        for rows in combinations(range(n), k):
            for cols in combinations(range(len(m[0])), k):
                if determinant([[m[i][j] for j in cols] for i in rows], field):
                    return k
    return 0


def test_rank_vs_largest_nonvanishing_minor():
    rng = random.Random(3)
    G = GF(7)  # small prime so that rank drops actually happen
    for _ in range(120):
        r = rng.randint(1, 4)
        a = [[G(rng.randrange(7)) for _ in range(r)] for _ in range(5)]
        b = [[G(rng.randrange(7)) for _ in range(5)] for _ in range(r)]
        m = [[sum((a[i][k] * b[k][j] for k in range(r)), G.zero) for j in range(5)] for i in range(5)]
        assert rank(m, G) == _rank_by_minors(m, G)


def test_rank_6x6_elimination_vs_numpy_mod_p():
    rng = random.Random(4)
    for _ in range(1000):
        r = rng.randint(0, 6)
        a = np.array([[rng.randrange(P) for _ in range(r)] for _ in range(6)], dtype=np.int64).reshape(6, r)
        b = np.array([[rng.randrange(P) for _ in range(6)] for _ in range(r)], dtype=np.int64).reshape(r, 6)
        m = [[sum(int(a[i, k]) * int(b[k, j]) for k in range(r)) % P for j in range(6)] for i in range(6)]
        exact = rank([[F(v) for v in row] for row in m], F)
        assert exact == rank_mod_p(np.array(m, dtype=np.int64), P)
        assert exact <= r


@given(st.lists(st.lists(st.integers(-6, 6), min_size=5, max_size=5), min_size=1, max_size=5))
@settings(max_examples=80)
def test_rank_over_q_and_fp_agree(rows):
    # entries are tiny, so the only way mod-p rank drops is p | a minor; 31991 is far above any 5x5 minor here
    assert rank(rows, QQ) == rank([[F(v) for v in r] for r in rows], F)


def test_kernel_mod_p():
    rng = random.Random(5)
    a = np.array([[rng.randrange(P) for _ in range(7)] for _ in range(4)], dtype=np.int64)
    k = kernel_mod_p(a, P)
    assert k.shape[0] == 7 - rank_mod_p(a, P)
    assert not ((a @ k.T) % P).any()


def test_large_prime_fallback():
    q = 2**61 - 1
    m = np.array([[1, 2], [2, 4]], dtype=object)
    assert rank_mod_p(m, q) == 1


def test_determinant():
    assert determinant([[2, 1], [1, 1]], QQ) == 1
    assert determinant([[1, 2], [2, 4]], QQ) == 0

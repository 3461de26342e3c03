import json
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from palatini.algebra import GF, QQ, MultiPoly, determinant, rank
from palatini.skew import (
    BLOCK_SIGN,
    PAIRS,
    SingularMatrixError,
    SkewConst,
    SkewPencil,
    block_from_3x3,
    builtin_pencils,
    congruence,
    det3,
    elliptic_cone_matrix,
    pfaffian,
    pfaffian6,
    skew_block,
    t1_matrix,
    t4_block,
    three_planes_forms,
)

P = 31991
F = GF(P)


def random_skew(rng, field=F):
    return SkewConst(tuple(field.random(rng) if field is F else QQ(rng.randint(-9, 9)) for _ in PAIRS))


def test_two_by_two_block_sign():
    # pf [[0, N], [-N^T, 0]] = BLOCK_SIGN * det N, fixed on the constant base case
    n = [[MultiPoly.constant(v, 4) for v in row] for row in ([2, 1, 0], [0, 3, 0], [4, 0, 5])]
    assert pfaffian6(skew_block(n)) == BLOCK_SIGN * det3(n)
    assert det3(n) == MultiPoly.constant(30, 4)
    assert BLOCK_SIGN == -1
    # 2x2 base case of the convention
    a = QQ(3)
    assert pfaffian([[0, a], [-a, 0]], QQ.zero, QQ.one) == a


def test_pfaffian_zero_matrix():
    assert SkewConst.zero().pfaffian() == 0
    assert SkewConst.zero(F).pfaffian() == F.zero


def test_pfaffian_t1():
    x0, x1, x2, x3 = MultiPoly.gens(4)
    pf = SkewPencil.from_matrix(t1_matrix()).pfaffian()
    assert pf == -(x0 * x1**2 + x1 * x3**2 + x2**3)


def test_pfaffian_t4_block():
    pf = block_from_3x3(t4_block()).pfaffian()
    x, y, z, t = MultiPoly.gens(4)
    cubic = x**2 * y - x**2 * z - x * y**2 + x * z**2 + y**3 - y**2 * t + y * z * t
    assert det3(t4_block()) == cubic
    assert pf == BLOCK_SIGN * cubic


def test_three_planes_diagonal_block():
    Fm, G, H = three_planes_forms()
    zero = MultiPoly.zero(4)
    n = [[Fm, zero, zero], [zero, G, zero], [zero, zero, H]]
    assert block_from_3x3(n).pfaffian() == BLOCK_SIGN * Fm * G * H


def test_elliptic_cone_default_and_symbolic():
    x, y, z, t = MultiPoly.gens(4)
    pf = SkewPencil.from_matrix(elliptic_cone_matrix(2)).pfaffian()
    assert pf in (y**2 * z - x * (x - z) * (x - 2 * z), -(y**2 * z - x * (x - z) * (x - 2 * z)))
    x, y, z, t, c = MultiPoly.gens(5)
    pf5 = pfaffian6(elliptic_cone_matrix(symbolic=True))
    target = y**2 * z - x * (x - z) * (x - c * z)
    assert pf5 in (target, -target)


def test_catalogue_pfaffians_are_cubics_or_zero():
    for name, pencil in builtin_pencils().items():
        pf = pencil.pfaffian()
        assert pf.is_zero() == (name == "alpha1-canonical"), name
        assert pf.is_zero() or (pf.degree() == 3 and pf.is_homogeneous())


def test_three_planes_dependent_span():
    cat = builtin_pencils()
    assert cat["three-planes-dependent"].coefficient_span_rank() == 3
    assert cat["three-planes-independent"].coefficient_span_rank() == 4


def test_alpha1_sub_pfaffians_vanish():
    assert all(s.is_zero() for s in builtin_pencils()["alpha1-canonical"].sub_pfaffians4())


def test_random_pencil_sub_pfaffians_nonzero(rng):
    pencil = SkewPencil(*(random_skew(rng, QQ) for _ in range(4)))
    assert any(pencil.sub_pfaffians4())


def test_sub_pfaffians_detect_rank_two(rng):
    # rank(M(q)) <= 2 iff all 15 quadrics vanish at q; rank-2 members of the alpha1 web
    # and generic points of a random pencil cover both sides
    alpha1 = builtin_pencils()["alpha1-canonical"]
    pencil = SkewPencil(*(random_skew(rng, QQ) for _ in range(4))).reduce(P)
    subs = pencil.sub_pfaffians4()
    for _ in range(100):
        q = [F.random(rng) for _ in range(4)]
        m = pencil.evaluate(q)
        assert (m.rank() <= 2) == all(not s.evaluate(q) for s in subs)
        assert alpha1.reduce(P).evaluate(q).rank() <= 2


def test_pf_squared_is_det_200():
    rng = random.Random(10)
    for k in range(200):
        field = F if k % 2 else QQ
        m = random_skew(rng, field)
        assert m.pfaffian() ** 2 == determinant(m.matrix(), field)


def test_pencil_pf_squared_is_det_polynomial(rng):
    pencil = SkewPencil(*(random_skew(rng, QQ) for _ in range(4)))
    pf = pencil.pfaffian()
    for _ in range(5):
        q = [rng.randint(-5, 5) for _ in range(4)]
        m = pencil.evaluate(q)
        assert pf.evaluate(q) ** 2 == determinant(m.matrix(), QQ)


def test_congruence_identity_100():
    rng = random.Random(11)
    done = 0
    while done < 100:
        m = random_skew(rng)
        p = [[F.random(rng) for _ in range(6)] for _ in range(6)]
        d = determinant(p, F)
        if not d:
            continue
        c = congruence(p, m)
        assert c.pfaffian() == d * m.pfaffian()
        done += 1


def test_congruence_special_cases(rng):
    m = random_skew(rng, QQ)
    eye = [[int(i == j) for j in range(6)] for i in range(6)]
    assert congruence(eye, m) == m
    lam = QQ(7)
    diag = [[lam if i == j == 0 else int(i == j) for j in range(6)] for i in range(6)]
    assert congruence(diag, m).pfaffian() == lam * m.pfaffian()
    with pytest.raises(SingularMatrixError):
        congruence([[0] * 6 for _ in range(6)], m)


@given(st.lists(st.integers(-3, 3), min_size=15, max_size=15))
@settings(max_examples=100)
def test_rank_parity(upper):
    m = SkewConst(tuple(QQ(v) for v in upper))
    assert m.rank() % 2 == 0
    assert rank(m.matrix(), QQ) == m.rank()


def test_skew_by_construction():
    m = SkewConst.from_entries({(0, 1): 2, (3, 2): 5})
    full = m.matrix()
    assert all(full[i][j] == -full[j][i] for i in range(6) for j in range(6))
    assert m.entry(2, 3) == -5
    with pytest.raises(ValueError):
        SkewConst.from_matrix([[1] * 6 for _ in range(6)])


def test_pencil_from_matrix_rejects_nonlinear():
    x, y, z, t = MultiPoly.gens(4)
    bad = [[MultiPoly.zero(4)] * 6 for _ in range(6)]
    bad = [row[:] for row in bad]
    bad[0][1], bad[1][0] = x * y, -(x * y)
    with pytest.raises(ValueError):
        SkewPencil.from_matrix(bad)


def test_json_round_trip():
    m = SkewConst.from_entries({(0, 1): QQ("1/3"), (2, 5): -4})
    blob = json.loads(json.dumps(m.to_json()))
    assert blob["upper"][0] == "1/3"
    assert SkewConst.from_json(blob) == m
    pencil = builtin_pencils()["t4"]
    assert SkewPencil.from_json(json.loads(json.dumps(pencil.to_json()))) == pencil
    with pytest.raises(ValueError):
        SkewConst.from_json({"upper": ["1"] * 14})
